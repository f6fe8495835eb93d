//! Domain parameters: the Blaschke parameter `λ`, coefficient queries `(λ, n, k)`,
//! and the phase reduction that turns a complex `λ` into a real one.
//!
//! Writing `λ = |λ|e^{iθ}` gives `ĉ_λ(k) = ĉ_{|λ|}(k)·e^{i(n−k)θ}`, so every
//! computation downstream runs with `λ ∈ (0, 1)` and the caller multiplies the
//! result by the returned unit phase.

use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::math;

/// The Blaschke parameter, kept exact when the caller supplies a rational.
///
/// Rational `λ` keeps the region classifier exact and enables the big-rational
/// coefficient oracle; a float `λ` restricts the crate to the two float oracles.
#[derive(Debug, Clone, PartialEq)]
pub enum Lambda {
    Rational(BigRational),
    Real(f64),
}

impl Lambda {
    pub fn rational(num: i64, den: i64) -> Self {
        Lambda::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Lambda::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Lambda::Real(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Lambda::Rational(r) => Some(r),
            Lambda::Real(_) => None,
        }
    }
}

/// Errors from parameter validation.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamError {
    /// `λ` must lie in the open interval `(0, 1)` after phase reduction.
    LambdaOutOfRange,
    /// A complex `λ` must have modulus `< 1`.
    ModulusNotInDisk { modulus: f64 },
    /// `n` must be a positive integer.
    ZeroPower,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::LambdaOutOfRange => write!(f, "lambda must lie in (0, 1)"),
            ParamError::ModulusNotInDisk { modulus } => {
                write!(f, "|lambda| = {modulus} is not inside the unit disk")
            }
            ParamError::ZeroPower => write!(f, "power n must be >= 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParamError {}

/// A validated `λ ∈ (0, 1)` together with its transition ratio `α₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeParam {
    lambda: Lambda,
}

impl BlaschkeParam {
    pub fn new(lambda: Lambda) -> Result<Self, ParamError> {
        let ok = match &lambda {
            Lambda::Rational(r) => r.is_positive() && r < &BigRational::one(),
            Lambda::Real(x) => x.is_finite() && *x > 0.0 && *x < 1.0,
        };
        if ok {
            Ok(BlaschkeParam { lambda })
        } else {
            Err(ParamError::LambdaOutOfRange)
        }
    }

    /// Convenience constructor for float `λ`.
    pub fn real(lambda: f64) -> Result<Self, ParamError> {
        Self::new(Lambda::Real(lambda))
    }

    /// Convenience constructor for exact `λ = num/den`.
    pub fn rational(num: i64, den: i64) -> Result<Self, ParamError> {
        Self::new(Lambda::rational(num, den))
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn lambda_f64(&self) -> f64 {
        self.lambda.as_f64()
    }

    /// The transition ratio `α₀ = (1 − λ)/(1 + λ) ∈ (0, 1)`.
    ///
    /// The coefficient sequence changes regime at `k ≈ α₀·n` and `k ≈ n/α₀`.
    pub fn alpha0(&self) -> f64 {
        let l = self.lambda_f64();
        (1.0 - l) / (1.0 + l)
    }

    /// Exact `α₀` when `λ` is rational.
    pub fn alpha0_rational(&self) -> Option<BigRational> {
        self.lambda.as_rational().map(|r| {
            let one = BigRational::one();
            (&one - r) / (&one + r)
        })
    }
}

/// One coefficient query: which `ĉ(k)` of `b_λ^n` is being asked about.
///
/// The ratio `a = k/n` is carried both as an exact rational and as a float so
/// that classification against rational thresholds never suffers roundoff.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffQuery {
    pub param: BlaschkeParam,
    pub n: u64,
    pub k: u64,
}

impl CoeffQuery {
    pub fn new(param: BlaschkeParam, n: u64, k: u64) -> Result<Self, ParamError> {
        if n == 0 {
            return Err(ParamError::ZeroPower);
        }
        Ok(CoeffQuery { param, n, k })
    }

    /// Float view of `a = k/n`.
    pub fn ratio_f64(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    /// Exact view of `a = k/n`.
    pub fn ratio_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.k), BigInt::from(self.n))
    }
}

/// Reduce a complex parameter to the real case.
///
/// Returns `(|λ|, e^{i(n−k)·arg λ})`: compute with the real modulus, then
/// multiply the real coefficient by the phase to recover `ĉ_λ(k)`.
pub fn reduce_phase(
    lambda: Complex64,
    n: u64,
    k: u64,
) -> Result<(f64, Complex64), ParamError> {
    let modulus = math::hypot(lambda.re, lambda.im);
    if !(modulus < 1.0) || !modulus.is_finite() {
        return Err(ParamError::ModulusNotInDisk { modulus });
    }
    let theta = math::atan2(lambda.im, lambda.re);
    // (n - k) may be negative; phase angle only matters mod 2π.
    let m = n as i64 - k as i64;
    let ang = m as f64 * theta;
    Ok((modulus, Complex64::new(math::cos(ang), math::sin(ang))))
}

/// `α₀` for a bare float `λ`; the free-function twin of
/// [`BlaschkeParam::alpha0`] used by the float-only code paths.
pub fn alpha0(lambda: f64) -> f64 {
    (1.0 - lambda) / (1.0 + lambda)
}

/// Exact comparison `k/n <=> r` for deciding band membership.
pub(crate) fn cmp_ratio(k: u64, n: u64, r: &BigRational) -> core::cmp::Ordering {
    let lhs = BigRational::new(BigInt::from(k), BigInt::from(n));
    lhs.cmp(r)
}

/// `BigRational` → `(sign, ln|x|)` without intermediate overflow.
pub(crate) fn rational_ln_abs(r: &BigRational) -> (i8, f64) {
    if r.is_zero() {
        return (0, f64::NEG_INFINITY);
    }
    let sign = if r.is_positive() { 1 } else { -1 };
    (sign, bigint_ln_abs(r.numer()) - bigint_ln_abs(r.denom()))
}

fn bigint_ln_abs(x: &BigInt) -> f64 {
    let mag = x.magnitude();
    let bits = mag.bits();
    if bits <= 52 {
        return math::ln(mag.to_f64().unwrap_or(1.0));
    }
    // ln(top 64 bits) + ln(2) * discarded bits
    let shift = bits - 53;
    let top = (mag >> shift).to_f64().unwrap_or(1.0);
    math::ln(top) + core::f64::consts::LN_2 * shift as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha0_values() {
        assert!((BlaschkeParam::real(0.5).unwrap().alpha0() - 1.0 / 3.0).abs() < 1e-15);
        assert!((BlaschkeParam::real(1.0 / 3.0).unwrap().alpha0() - 0.5).abs() < 1e-15);
        // λ → 0⁺ pushes α₀ → 1
        assert!((BlaschkeParam::real(1e-12).unwrap().alpha0() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn alpha0_times_inverse_is_one_exactly_for_rationals() {
        for (p, q) in [(1i64, 2i64), (1, 3), (3, 4), (7, 11)] {
            let par = BlaschkeParam::rational(p, q).unwrap();
            let a0 = par.alpha0_rational().unwrap();
            let prod = &a0 * (BigRational::one() / &a0);
            assert!(prod.is_one());
        }
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(BlaschkeParam::real(0.0).is_err());
        assert!(BlaschkeParam::real(1.0).is_err());
        assert!(BlaschkeParam::real(-0.25).is_err());
        assert!(BlaschkeParam::rational(5, 4).is_err());
    }

    #[test]
    fn reduce_phase_real_lambda_is_identity() {
        let (m, ph) = reduce_phase(Complex64::new(0.5, 0.0), 7, 3).unwrap();
        assert_eq!(m, 0.5);
        assert!((ph - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn reduce_phase_imaginary_lambda() {
        // θ = π/2, (n−k)θ = π/2 ⇒ phase = i
        let (m, ph) = reduce_phase(Complex64::new(0.0, 0.5), 2, 1).unwrap();
        assert!((m - 0.5).abs() < 1e-15);
        assert!((ph - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn reduce_phase_negative_lambda() {
        // θ = π, (n−k)θ = 0 mod 2π ⇒ phase = 1
        let (m, ph) = reduce_phase(Complex64::new(-0.5, 0.0), 4, 4).unwrap();
        assert!((m - 0.5).abs() < 1e-15);
        assert!((ph - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn reduce_phase_rejects_boundary() {
        assert!(reduce_phase(Complex64::new(0.6, 0.8), 1, 0).is_err());
    }

    #[test]
    fn rational_ln_abs_handles_huge_values() {
        let big = BigInt::from(7u32).pow(4000);
        let r = BigRational::new(big.clone(), BigInt::from(3u32));
        let (s, lnv) = rational_ln_abs(&r);
        assert_eq!(s, 1);
        let expect = 4000.0 * (7.0f64).ln() - (3.0f64).ln();
        assert!((lnv - expect).abs() / expect < 1e-12);
    }
}
