//! Closed forms of the general bounds for the standard special cases, each
//! written out with its own radicand so it can be checked against the
//! general formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::exact::{round_sum, Rounding, Term};
use super::{big, factorial, fubini, int, to_u64, BoundError};

fn needs_k(k: usize, min: usize) -> Result<(), BoundError> {
    if k < min {
        return Err(BoundError::UniformityTooSmall(k));
    }
    Ok(())
}

/// `⌈2 + a/(a−1) · x^{1/a}⌉`.
fn ceil_form(a: usize, x: BigRational) -> Result<u64, BoundError> {
    let coef = BigRational::new(BigInt::from(a), BigInt::from(a - 1));
    to_u64(round_sum(
        &int(2),
        &[Term::new(coef, x, a as u32)],
        Rounding::Ceil,
    )?)
}

/// `1 + ⌊a/(a−1) · x^{1/a}⌋`.
fn floor_form(a: usize, x: BigRational) -> Result<u64, BoundError> {
    let coef = BigRational::new(BigInt::from(a), BigInt::from(a - 1));
    to_u64(round_sum(&int(0), &[Term::new(coef, x, a as u32)], Rounding::Floor)? + 1)
}

fn uint(n: usize) -> BigRational {
    int(n as u64)
}

/// Edge labels of a `k`-regular graph distinguishing neighbors by sets:
/// `⌈2 + (k−1)/(k−2) · (8(k−1)(k−2) f_{k−1})^{1/(k−1)}⌉`.
pub fn edge_labeling_sets(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    ceil_form(k - 1, uint(8 * (k - 1) * (k - 2)) * big(&fubini(k - 1)?))
}

/// Total labels of a `k`-regular graph distinguishing neighbors by sets:
/// `⌈2 + k/(k−1) · (8k(k−1) f_k)^{1/k}⌉`.
pub fn total_labeling_sets(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 2)?;
    ceil_form(k, uint(8 * k * (k - 1)) * big(&fubini(k)?))
}

/// Edge labels distinguishing neighbors by multisets:
/// `⌈2 + (k−1)/(k−2) · (2(k−1)(k−2)(k−1)!)^{1/(k−1)}⌉`.
pub fn edge_labeling_multisets(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    ceil_form(k - 1, uint(2 * (k - 1) * (k - 2)) * big(&factorial(k - 1)))
}

/// Total labels distinguishing neighbors by multisets:
/// `⌈2 + k/(k−1) · (2k(k−1)k!)^{1/k}⌉`.
pub fn total_labeling_multisets(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 2)?;
    ceil_form(k, uint(2 * k * (k - 1)) * big(&factorial(k)))
}

/// Points of a configuration with `k` points per line and `r` lines per
/// point, distinguished by sets:
/// `⌈2 + (k−1)/(k−2) · (4r(r−1)(k−1)(k−2) f_{k−1})^{1/(k−1)}⌉`.
pub fn configuration_sets(k: usize, r: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    if r < 2 {
        return Err(BoundError::DegreeTooSmall(r));
    }
    ceil_form(
        k - 1,
        uint(4 * r * (r - 1) * (k - 1) * (k - 2)) * big(&fubini(k - 1)?),
    )
}

/// The multiset version:
/// `⌈2 + (k−1)/(k−2) · (r(r−1)(k−1)(k−2)(k−1)!)^{1/(k−1)}⌉`.
pub fn configuration_multisets(k: usize, r: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    if r < 2 {
        return Err(BoundError::DegreeTooSmall(r));
    }
    ceil_form(
        k - 1,
        uint(r * (r - 1) * (k - 1) * (k - 2)) * big(&factorial(k - 1)),
    )
}

/// Lines in general position read in one fixed direction:
/// `1 + ⌊(k−1)/(k−2) · (2k² − 4k)^{1/(k−1)}⌋`.
pub fn line_sequences(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    floor_form(k - 1, uint(2 * k * k - 4 * k))
}

/// Lines read in either direction:
/// `1 + ⌊(k−1)/(k−2) · (4k² − 8k)^{1/(k−1)}⌋`.
pub fn line_directions(k: usize) -> Result<u64, BoundError> {
    needs_k(k, 3)?;
    floor_form(k - 1, uint(4 * k * k - 8 * k))
}

/// One evaluated linear upper estimate `bound ≤ ratio · k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdCheck {
    pub label: &'static str,
    pub k: usize,
    pub bound: u64,
    /// The estimate as the fraction `ratio_percent / 100`.
    pub ratio_percent: u64,
    pub holds: bool,
}

/// Evaluates each labeling bound at the least `k` of its linear estimate,
/// comparing exactly.
pub fn threshold_checks() -> Result<Vec<ThresholdCheck>, BoundError> {
    type Form = fn(usize) -> Result<u64, BoundError>;
    let cases: [(&'static str, Form, usize, u64); 4] = [
        ("edge labeling by sets", edge_labeling_sets, 1540, 54),
        ("total labeling by sets", total_labeling_sets, 1600, 54),
        (
            "edge labeling by multisets",
            edge_labeling_multisets,
            5435,
            37,
        ),
        (
            "total labeling by multisets",
            total_labeling_multisets,
            5650,
            37,
        ),
    ];
    cases
        .iter()
        .map(|&(label, form, k, ratio_percent)| {
            let bound = form(k)?;
            let holds = u128::from(bound) * 100 <= u128::from(ratio_percent) * k as u128;
            Ok(ThresholdCheck {
                label,
                k,
                bound,
                ratio_percent,
                holds,
            })
        })
        .collect()
}
