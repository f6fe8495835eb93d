//! Exact big-rational coefficient oracle.
//!
//! Expanding `b_λ^n = (z − λ)^n · (1 − λz)^{−n}` as a Cauchy product gives
//!
//! ```text
//! ĉ(k) = Σ_{j=0}^{min(k,n)} C(n,j)·(−λ)^{n−j} · C(k−j+n−1, n−1)·λ^{k−j},
//! ```
//!
//! which for rational `λ = p/q` is a finite sum of exact rationals. Over the
//! common denominator `q^{n+k}` the numerator terms
//! `T_j = C(n,j)·C(k−j+n−1, n−1)·p^{n+k−2j}·q^{2j}` satisfy the exact update
//!
//! ```text
//! T_{j+1} = T_j · (n−j)(k−j)·q² / ((j+1)(k−j+n−1)·p²),
//! ```
//!
//! so the whole sum is one pass of big-integer multiply/exact-divide. The sign
//! alternates as `(−1)^{n−j}`. This oracle has unlimited dynamic range; it is
//! the reference for coefficients far below the float noise floor.

use core::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::logspace::LogValue;
use crate::param::rational_ln_abs;

/// Default cap on `n·k` per call; raise it explicitly for deliberate
/// deep-tail evaluations.
pub const DEFAULT_WORK_LIMIT: u128 = 2_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum ExactError {
    /// `n·k` exceeds the work limit for the rational oracle.
    BudgetExceeded { work: u128, limit: u128 },
    /// Requested DFT length cannot control aliasing (`M < 4n`).
    AliasingUncontrolled { m: usize, n: u64 },
    /// `λ` must be a ratio `p/q` with `0 < p < q`.
    NotAProperFraction,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::BudgetExceeded { work, limit } => {
                write!(f, "work n*k = {work} exceeds limit {limit}")
            }
            ExactError::AliasingUncontrolled { m, n } => {
                write!(f, "dft length {m} < 4n = {} cannot control aliasing", 4 * n)
            }
            ExactError::NotAProperFraction => write!(f, "lambda must be p/q with 0 < p < q"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExactError {}

/// `ĉ(k)` of `b_{p/q}^n` as an exact rational, under the default work limit.
pub fn coeff_rational(lambda: &BigRational, n: u64, k: u64) -> Result<BigRational, ExactError> {
    coeff_rational_with_limit(lambda, n, k, DEFAULT_WORK_LIMIT)
}

/// As [`coeff_rational`], with an explicit work limit.
pub fn coeff_rational_with_limit(
    lambda: &BigRational,
    n: u64,
    k: u64,
    limit: u128,
) -> Result<BigRational, ExactError> {
    if !lambda.is_positive() || lambda >= &BigRational::from_integer(1.into()) {
        return Err(ExactError::NotAProperFraction);
    }
    let work = n as u128 * k as u128;
    if work > limit {
        return Err(ExactError::BudgetExceeded { work, limit });
    }
    debug_assert!(n >= 1);

    let p = lambda.numer().clone();
    let q = lambda.denom().clone();
    let p2 = &p * &p;
    let q2 = &q * &q;

    // T_0 = C(k+n−1, n−1) · p^{n+k}
    let mut t = binomial(k + n - 1, n - 1);
    t *= p.pow((n + k) as u32);

    let jmax = k.min(n);
    let mut sum = if n % 2 == 0 { t.clone() } else { -t.clone() };
    for j in 0..jmax {
        // multiply by (n−j)(k−j) q², divide by (j+1)(k−j+n−1) p² — exact
        let m = k - j + n - 1;
        t *= BigInt::from(n - j) * BigInt::from(k - j) * &q2;
        let den = BigInt::from(j + 1) * BigInt::from(m) * &p2;
        debug_assert!((&t % &den).is_zero());
        t /= den;
        let positive = (n - j - 1) % 2 == 0;
        if positive {
            sum += &t;
        } else {
            sum -= &t;
        }
    }

    Ok(BigRational::new(sum, q.pow((n + k) as u32)))
}

/// Log-magnitude view of the exact coefficient, usable at any scale.
pub fn coeff_rational_log(
    lambda: &BigRational,
    n: u64,
    k: u64,
    limit: u128,
) -> Result<LogValue, ExactError> {
    let r = coeff_rational_with_limit(lambda, n, k, limit)?;
    let (sign, ln_abs) = rational_ln_abs(&r);
    Ok(LogValue::new(sign, ln_abs))
}

/// `C(n, r)` by the multiplicative recurrence (each partial product is itself
/// a binomial, so every division is exact).
fn binomial(n: u64, r: u64) -> BigInt {
    let r = r.min(n - r.min(n));
    let mut acc = BigInt::from(1u8);
    for i in 1..=r {
        acc *= BigInt::from(n - r + i);
        acc /= BigInt::from(i);
    }
    acc
}

/// Convenience: the exact sign of `ĉ(k)`.
pub fn coeff_sign(lambda: &BigRational, n: u64, k: u64, limit: u128) -> Result<Sign, ExactError> {
    coeff_rational_with_limit(lambda, n, k, limit).map(|r| r.numer().sign())
}
