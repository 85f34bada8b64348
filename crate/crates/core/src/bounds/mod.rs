//! Exact list-size bounds guaranteeing a distinguishing coloring, and the
//! integer sequences they are built from.
//!
//! For a `k`-uniform hypergraph with maximum degree at most `Δ` and
//! difference spectrum `I`, lists of size
//!
//! * `⌈2 + Σ_{i∈I} q_i (Δ(Δ−1)(k−1)/(k−i) · 2^{k−i+1} f_i)^{1/i}⌉` suffice for sets,
//! * the same with `i!` in place of `2^{k−i+1} f_i` suffice for multisets,
//! * `1 + ⌊Σ_{i∈I} q_i (Δ(Δ−1)π (1 + (k−1) min{1, |I|/(k−i)}))^{1/i}⌋` suffice
//!   for sequences up to a family of `π` permutations,
//!
//! where `q_1 = 1`, `q_i = i/(i−1) · (i−1)^{1/i}` and `f_i` is the `i`-th
//! Fubini number. Every rounding is decided with a rigorous enclosure, never
//! with plain floating point.

mod closed_form;
mod exact;

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use closed_form::{
    configuration_multisets, configuration_sets, edge_labeling_multisets, edge_labeling_sets,
    line_directions, line_sequences, threshold_checks, total_labeling_multisets,
    total_labeling_sets, ThresholdCheck,
};
use exact::{Rounding, Term};

/// Largest `n` accepted by [`fubini`] and [`stirling2`].
pub const MAX_INDEX: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("argument {n} exceeds the supported maximum {max}")]
    OutOfRange { n: usize, max: usize },
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("degree bound must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("spectrum element {i} is outside 1..{k}")]
    SpectrumOutOfRange { i: usize, k: usize },
    #[error("permutation family size must be positive")]
    EmptyFamily,
    #[error("bound does not fit in 64 bits")]
    Overflow,
    #[error("rounding could not be decided at the maximum precision")]
    Undecidable,
}

fn check_index(n: usize) -> Result<(), BoundError> {
    if n > MAX_INDEX {
        return Err(BoundError::OutOfRange { n, max: MAX_INDEX });
    }
    Ok(())
}

/// Stirling number of the second kind `S(n, i)`.
pub fn stirling2(n: usize, i: usize) -> Result<BigUint, BoundError> {
    check_index(n)?;
    if i > n {
        return Ok(BigUint::zero());
    }
    // Row recurrence S(m, j) = j S(m−1, j) + S(m−1, j−1), only columns ≤ i.
    let mut row = vec![BigUint::zero(); i + 1];
    row[0] = BigUint::one();
    for m in 1..=n {
        for j in (1..=i.min(m)).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = prev * j + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    Ok(std::mem::take(&mut row[i]))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, j| acc * j)
}

/// Memoized Fubini numbers, grown row by row through
/// `a(n, j) = j (a(n−1, j) + a(n−1, j−1))` where `a(n, j) = j! S(n, j)`.
struct FubiniMemo {
    row: Vec<BigUint>,
    values: Vec<BigUint>,
}

static FUBINI: Mutex<FubiniMemo> = Mutex::new(FubiniMemo {
    row: Vec::new(),
    values: Vec::new(),
});

impl FubiniMemo {
    fn extend_to(&mut self, n: usize) {
        if self.values.is_empty() {
            self.row = vec![BigUint::one()];
            self.values.push(BigUint::one());
        }
        while self.values.len() <= n {
            let m = self.row.len();
            let mut next = Vec::with_capacity(m + 1);
            next.push(BigUint::zero());
            for j in 1..=m {
                let above = self.row.get(j).cloned().unwrap_or_default();
                next.push((above + &self.row[j - 1]) * j);
            }
            self.values.push(next.iter().sum());
            self.row = next;
        }
    }
}

/// The Fubini (ordered Bell) number `f_n = Σ_i i! S(n, i)`.
pub fn fubini(n: usize) -> Result<BigUint, BoundError> {
    check_index(n)?;
    let mut memo = FUBINI.lock().unwrap_or_else(|e| e.into_inner());
    memo.extend_to(n);
    Ok(memo.values[n].clone())
}

/// `f_0, …, f_n`.
pub fn fubini_table(n: usize) -> Result<Vec<BigUint>, BoundError> {
    check_index(n)?;
    let mut memo = FUBINI.lock().unwrap_or_else(|e| e.into_inner());
    memo.extend_to(n);
    Ok(memo.values[..=n].to_vec())
}

/// `q_1 = 1`, `q_i = i/(i−1) · (i−1)^{1/i}`.
pub fn q(i: usize) -> f64 {
    assert!(i >= 1, "q is defined for i ≥ 1");
    if i == 1 {
        return 1.0;
    }
    let i = i as f64;
    i / (i - 1.0) * (i - 1.0).powf(1.0 / i)
}

pub(crate) fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn big(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `q_i · x^{1/i}` rewritten as `i/(i−1) · ((i−1) x)^{1/i}`.
pub(crate) fn q_term(i: usize, x: BigRational) -> Term {
    if i == 1 {
        return Term::new(int(1), x, 1);
    }
    Term::new(
        BigRational::new((i as u64).into(), (i as u64 - 1).into()),
        x * int(i as u64 - 1),
        i as u32,
    )
}

pub(crate) fn to_u64(z: BigInt) -> Result<u64, BoundError> {
    z.to_u64().ok_or(BoundError::Overflow)
}

fn normalize_spectrum(
    k: usize,
    delta: usize,
    spectrum: &[usize],
) -> Result<Vec<usize>, BoundError> {
    if k < 2 {
        return Err(BoundError::UniformityTooSmall(k));
    }
    if delta < 2 {
        return Err(BoundError::DegreeTooSmall(delta));
    }
    let mut s = spectrum.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&i) = s.iter().find(|&&i| i == 0 || i >= k) {
        return Err(BoundError::SpectrumOutOfRange { i, k });
    }
    Ok(s)
}

fn ied_terms(
    k: usize,
    delta: usize,
    spectrum: &[usize],
    weight: impl Fn(usize) -> Result<BigUint, BoundError>,
) -> Result<Vec<Term>, BoundError> {
    let spectrum = normalize_spectrum(k, delta, spectrum)?;
    let dd = (delta as u64) * (delta as u64 - 1);
    spectrum
        .iter()
        .map(|&i| {
            let x = BigRational::new(BigInt::from(dd * (k as u64 - 1)), BigInt::from(k - i))
                * big(&weight(i)?);
            Ok(q_term(i, x))
        })
        .collect()
}

fn sets_weight(k: usize) -> impl Fn(usize) -> Result<BigUint, BoundError> {
    move |i| Ok(fubini(i)? << (k - i + 1))
}

fn multisets_weight(i: usize) -> Result<BigUint, BoundError> {
    check_index(i)?;
    Ok(factorial(i))
}

/// List size guaranteeing a coloring distinguishing intersecting edges by sets.
pub fn bound_ieds(k: usize, delta: usize, spectrum: &[usize]) -> Result<u64, BoundError> {
    let terms = ied_terms(k, delta, spectrum, sets_weight(k))?;
    to_u64(exact::round_sum(&int(2), &terms, Rounding::Ceil)?)
}

/// List size guaranteeing a coloring distinguishing intersecting edges by
/// multisets.
pub fn bound_iedm(k: usize, delta: usize, spectrum: &[usize]) -> Result<u64, BoundError> {
    let terms = ied_terms(k, delta, spectrum, multisets_weight)?;
    to_u64(exact::round_sum(&int(2), &terms, Rounding::Ceil)?)
}

fn sequence_terms(
    k: usize,
    delta: usize,
    spectrum: &[usize],
    pi: usize,
) -> Result<Vec<Term>, BoundError> {
    let spectrum = normalize_spectrum(k, delta, spectrum)?;
    if pi == 0 {
        return Err(BoundError::EmptyFamily);
    }
    let base = int((delta as u64) * (delta as u64 - 1) * pi as u64);
    let len = spectrum.len();
    Ok(spectrum
        .iter()
        .map(|&i| {
            let share = if len >= k - i {
                int(1)
            } else {
                BigRational::new(BigInt::from(len), BigInt::from(k - i))
            };
            let x = &base * (int(1) + int(k as u64 - 1) * share);
            q_term(i, x)
        })
        .collect())
}

/// List size guaranteeing a coloring in which no two intersecting edges carry
/// sequences related by one of `π` permutations.
pub fn bound_sequences(
    k: usize,
    delta: usize,
    spectrum: &[usize],
    pi: usize,
) -> Result<u64, BoundError> {
    let terms = sequence_terms(k, delta, spectrum, pi)?;
    to_u64(exact::round_sum(&int(0), &terms, Rounding::Floor)? + 1)
}

/// The unrounded sums behind the three bounds, for display.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSums {
    pub sets: f64,
    pub multisets: f64,
    pub sequences: f64,
}

pub fn approximate_sums(
    k: usize,
    delta: usize,
    spectrum: &[usize],
    pi: usize,
) -> Result<BoundSums, BoundError> {
    Ok(BoundSums {
        sets: 2.0 + exact::approximate(&ied_terms(k, delta, spectrum, sets_weight(k))?),
        multisets: 2.0 + exact::approximate(&ied_terms(k, delta, spectrum, multisets_weight)?),
        sequences: exact::approximate(&sequence_terms(k, delta, spectrum, pi)?),
    })
}
