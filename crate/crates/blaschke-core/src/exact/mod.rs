//! Three mutually independent oracles for the exact coefficients of `b_λ^n`,
//! used as ground truth by every asymptotic claim:
//!
//! * [`rational::coeff_rational`] — exact big-rational convolution (rational
//!   `λ`), unlimited dynamic range, cost `O(min(n,k))` big-integer steps;
//! * [`dft::coeff_dft`] — all coefficients at once by circle sampling and an
//!   FFT, absolute accuracy near roundoff, with a quantified aliasing bound;
//! * [`quad::coeff_quadrature`] — adaptive quadrature of the oscillatory phase
//!   integral, a discretization unrelated to the other two.
//!
//! The division of labor: the rational oracle is the reference below a work
//! limit `n·k ≤ 2·10⁶` (and wherever values underflow floats); the DFT is the
//! reference above it.

use alloc::string::String;
use alloc::vec::Vec;

use crate::math;

pub mod dd;
pub mod dft;
pub mod fft;
pub mod quad;
pub mod rational;

pub use dft::{coeff_dft, coeff_dft_default};
pub use quad::{adaptive_simpson, coeff_quadrature, duality_check, DualityCheck, QuadResult};
pub use rational::{
    coeff_rational, coeff_rational_log, coeff_rational_with_limit, ExactError, DEFAULT_WORK_LIMIT,
};

/// Which oracle produced a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    RationalConvolution,
    DftSampling,
    Quadrature,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::RationalConvolution => "rational-convolution",
            Provenance::DftSampling => "dft-sampling",
            Provenance::Quadrature => "quadrature",
        }
    }
}

/// A dense run of coefficients `ĉ(0..K)` with provenance and error bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSequence {
    pub lambda: f64,
    pub n: u64,
    pub values: Vec<f64>,
    pub provenance: Provenance,
    /// Absolute per-coefficient error bound: 0 for the rational oracle, the
    /// aliasing bound for the DFT, the quadrature estimate otherwise.
    pub error_bound: f64,
}

impl CoeffSequence {
    /// `Σ ĉ(k)²`; equals 1 when the sequence captures the full tail.
    pub fn parseval_sum(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    /// `Σ ĉ(k)`, the value at `z = 1` (always 1 for a Blaschke power).
    pub fn eval_at_one(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `Σ (−1)^k ĉ(k)`, the value at `z = −1` (always `(−1)^n`).
    pub fn eval_at_minus_one(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 0 { *v } else { -*v })
            .sum()
    }

    /// Index and value of the largest `|ĉ(k)|`.
    pub fn max_abs(&self) -> (usize, f64) {
        let mut best = (0usize, 0.0f64);
        for (k, v) in self.values.iter().enumerate() {
            let a = math::abs(*v);
            if a > best.1 {
                best = (k, a);
            }
        }
        best
    }

    /// CSV serialization: header plus `k,value,abs_error_bound` rows.
    pub fn to_csv(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# lambda={:.17} n={} provenance={}",
            self.lambda,
            self.n,
            self.provenance.as_str()
        );
        let _ = writeln!(out, "k,value,abs_error_bound");
        for (k, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{k},{v:.17e},{:.3e}", self.error_bound);
        }
        out
    }
}

/// Build a sequence from the rational oracle (exact, so zero error bound).
pub fn coeff_rational_sequence(
    lambda: &num_rational::BigRational,
    n: u64,
    max_k: u64,
    limit: u128,
) -> Result<CoeffSequence, ExactError> {
    use num_traits::ToPrimitive;
    let mut values = Vec::with_capacity(max_k as usize + 1);
    for k in 0..=max_k {
        values.push(
            rational::coeff_rational_with_limit(lambda, n, k, limit)?
                .to_f64()
                .unwrap_or(0.0),
        );
    }
    Ok(CoeffSequence {
        lambda: lambda.to_f64().unwrap_or(f64::NAN),
        n,
        values,
        provenance: Provenance::RationalConvolution,
        error_bound: 0.0,
    })
}
