//! Rigorous rounding of sums of rational multiples of real radicals.
//!
//! A term `c · x^{1/i}` with rational `c, x > 0` is enclosed by an integer
//! root: with `Y = ⌊x · 2^{p·i}⌋` and `r = ⌊Y^{1/i}⌋` we have
//! `r / 2^p ≤ x^{1/i} < (r + 1) / 2^p`. Summing the enclosures gives an
//! interval for the whole expression; the precision `p` doubles until the
//! interval lies strictly between two consecutive integers.
//!
//! A single radical is handled without the refinement: a floating estimate
//! picks a candidate integer, and comparing exact powers confirms it.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::BoundError;

const START_BITS: u64 = 96;
const MAX_BITS: u64 = 1 << 16;

/// `coef · radicand^{1/index}`.
#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub coef: BigRational,
    pub radicand: BigRational,
    pub index: u32,
}

impl Term {
    pub fn new(coef: BigRational, radicand: BigRational, index: u32) -> Self {
        debug_assert!(index >= 1 && coef.is_positive() && radicand.is_positive());
        Self {
            coef,
            radicand,
            index,
        }
    }

    /// The exact value when the radical is rational.
    fn exact(&self) -> Option<BigRational> {
        if self.index == 1 {
            return Some(&self.coef * &self.radicand);
        }
        let root = |z: &BigInt| -> Option<BigInt> {
            let r = z.nth_root(self.index);
            (num_traits::pow(r.clone(), self.index as usize) == *z).then_some(r)
        };
        let num = root(self.radicand.numer())?;
        let den = root(self.radicand.denom())?;
        Some(&self.coef * BigRational::new(num, den))
    }

    /// Lower and upper enclosure at `bits` bits of precision.
    fn enclose(&self, bits: u64) -> (BigRational, BigRational) {
        let num = to_unsigned(self.radicand.numer());
        let den = to_unsigned(self.radicand.denom());
        let y = (num << (bits * self.index as u64)) / den;
        let r = BigInt::from_biguint(Sign::Plus, y.nth_root(self.index));
        let scale = BigInt::one() << bits;
        let lo = &self.coef * BigRational::new(r.clone(), scale.clone());
        let hi = &self.coef * BigRational::new(r + 1, scale);
        (lo, hi)
    }
}

fn to_unsigned(z: &BigInt) -> BigUint {
    z.to_biguint().expect("radicands are positive")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rounding {
    Floor,
    Ceil,
}

/// Rounds `offset + Σ terms` to an integer. A positive combination of real
/// radicals with at least one irrational member is irrational, so once the
/// exact part is split off the interval refinement always terminates.
pub(crate) fn round_sum(
    offset: &BigRational,
    terms: &[Term],
    rounding: Rounding,
) -> Result<BigInt, BoundError> {
    let mut exact = offset.clone();
    let mut irrational = Vec::new();
    for t in terms {
        match t.exact() {
            Some(v) => exact += v,
            None => irrational.push(t),
        }
    }
    if irrational.is_empty() {
        return Ok(match rounding {
            Rounding::Floor => exact.floor().to_integer(),
            Rounding::Ceil => exact.ceil().to_integer(),
        });
    }
    if let [t] = irrational.as_slice() {
        let floor = floor_single(&exact, t);
        return Ok(match rounding {
            Rounding::Floor => floor,
            Rounding::Ceil => floor + 1,
        });
    }
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        let (mut lo, mut hi) = (exact.clone(), exact.clone());
        for t in &irrational {
            let (l, h) = t.enclose(bits);
            lo += l;
            hi += h;
        }
        let floor = lo.floor().to_integer();
        if floor == hi.floor().to_integer() && !hi.is_integer() {
            return Ok(match rounding {
                Rounding::Floor => floor,
                Rounding::Ceil => floor + 1,
            });
        }
        bits *= 2;
    }
    Err(BoundError::Undecidable)
}

/// Natural logarithm of a positive integer of any size.
fn ln_big(z: &BigInt) -> f64 {
    let bits = z.bits();
    if bits <= 1000 {
        return z.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top: BigInt = z >> shift;
    top.to_f64().expect("64 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `⌊offset + c · x^{1/i}⌋` for an irrational radical, so the value is never
/// an integer.
fn floor_single(offset: &BigRational, t: &Term) -> BigInt {
    let i = t.index as usize;
    let c_pow_x = num_traits::pow(t.coef.clone(), i) * &t.radicand;
    // n ≤ offset + c·x^{1/i} iff n − offset ≤ 0 or (n − offset)^i ≤ c^i·x.
    let below = |n: &BigInt| -> bool {
        let d = BigRational::from_integer(n.clone()) - offset;
        !d.is_positive() || num_traits::pow(d, i) <= c_pow_x
    };
    let ln_x = ln_big(t.radicand.numer()) - ln_big(t.radicand.denom());
    let estimate = ratio_to_f64(offset) + ratio_to_f64(&t.coef) * (ln_x / i as f64).exp();
    let mut n = BigInt::from(estimate.floor() as i64);
    while !below(&n) {
        n -= 1;
    }
    while below(&(&n + 1)) {
        n += 1;
    }
    n
}

/// Floating approximation of `Σ terms`, for display only.
pub(crate) fn approximate(terms: &[Term]) -> f64 {
    terms
        .iter()
        .map(|t| {
            let (lo, hi) = t.enclose(64);
            let mid = (lo + hi) / BigInt::from(2);
            ratio_to_f64(&mid)
        })
        .sum()
}

pub(crate) fn ratio_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}
