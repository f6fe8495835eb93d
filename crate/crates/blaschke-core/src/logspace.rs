//! Sign + log-magnitude representation for quantities that under/overflow `f64`.
//!
//! Coefficients in the exponential bands reach `e^{-cn}` with `c·n` in the
//! thousands, far outside `f64` range. Every asymptotic formula therefore
//! evaluates into a [`LogValue`]; the plain float view is derived from it and
//! may round to zero.

use crate::math;

/// A real number stored as `sign · exp(ln_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    /// `-1`, `0`, or `+1`.
    pub sign: i8,
    /// Natural log of the absolute value; `-inf` when `sign == 0`.
    pub ln_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            LogValue { sign, ln_abs }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogValue {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_abs: math::ln(math::abs(x)),
            }
        }
    }

    /// Float view; underflows to `±0.0` and overflows to `±inf`.
    pub fn to_f64(self) -> f64 {
        self.sign as f64 * math::exp(self.ln_abs)
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        LogValue::new(self.sign.abs(), self.ln_abs)
    }

    pub fn mul(self, other: Self) -> Self {
        LogValue::new(self.sign * other.sign, self.ln_abs + other.ln_abs)
    }

    pub fn scale(self, factor: f64) -> Self {
        Self::from_f64(factor).mul(self)
    }

    /// `|ln|self| - ln|other||`, the multiplicative discrepancy used by the
    /// log-space error sweeps. Returns `inf` if exactly one side is zero.
    pub fn ln_ratio_abs(self, other: Self) -> f64 {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => 0.0,
            (true, false) | (false, true) => f64::INFINITY,
            _ => math::abs(self.ln_abs - other.ln_abs),
        }
    }
}

impl From<f64> for LogValue {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}
