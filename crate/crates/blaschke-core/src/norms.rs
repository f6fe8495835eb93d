//! `ℓ^p` machinery over coefficient sequences and scaling-exponent fits.
//!
//! The norms of `ĉ(·)` of `b_λ^n` obey clean power laws in `n`:
//! `‖·‖_p ≍ n^{(2−p)/(2p)}` for `p < 4`, `≍ (n/log n)^{−1/4}` at the `p = 4`
//! crossover, and `≍ n^{(1−p)/(3p)}` for `p > 4` (so `n^{−1/3}` at `p = ∞`,
//! the flatness law). [`exponent_fit`] reproduces these by log-log regression
//! over an `n`-ladder.

use alloc::vec::Vec;

use crate::exact::{coeff_dft_default, CoeffSequence, ExactError};
use crate::fit::fit_loglog;
use crate::math;

/// `(Σ |c_k|^p)^{1/p}`, or `max_k |c_k|` for `p = ∞`.
pub fn lp_norm(seq: &CoeffSequence, p: f64) -> f64 {
    lp_norm_slice(&seq.values, p)
}

/// [`lp_norm`] together with a first-order tail/error estimate derived from
/// the sequence's per-coefficient error bound.
pub fn lp_norm_with_error(seq: &CoeffSequence, p: f64) -> (f64, f64) {
    let v = lp_norm_slice(&seq.values, p);
    let err = if p.is_infinite() {
        seq.error_bound
    } else {
        // |∂‖c‖_p/∂c_k| ≤ 1 summed against the uniform bound
        seq.error_bound * math::powf(seq.values.len() as f64, 1.0 / p.max(1.0))
    };
    (v, err)
}

pub(crate) fn lp_norm_slice(values: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return values.iter().fold(0.0f64, |m, v| m.max(math::abs(*v)));
    }
    debug_assert!(p > 0.0);
    let s: f64 = values.iter().map(|v| math::powf(math::abs(*v), p)).sum();
    math::powf(s, 1.0 / p)
}

/// The paired-min quasi-norm `(Σ_k min(|c_{2k}|, |c_{2k+1}|)^p)^{1/p}`.
///
/// Divergence of this sum as sequences grow certifies that the large
/// coefficients are not confined to a lacunary set: removing any subsequence
/// with no two adjacent indices still leaves mass behind.
pub fn paired_min_norm(seq: &CoeffSequence, p: f64) -> f64 {
    paired_min_norm_slice(&seq.values, p)
}

pub(crate) fn paired_min_norm_slice(values: &[f64], p: f64) -> f64 {
    debug_assert!(p > 0.0 && p.is_finite());
    let mut s = 0.0;
    let mut i = 0;
    while i + 1 < values.len() {
        let m = math::abs(values[i]).min(math::abs(values[i + 1]));
        s += math::powf(m, p);
        i += 2;
    }
    math::powf(s, 1.0 / p)
}

/// A fitted norm-scaling law over an `n`-ladder.
#[derive(Debug, Clone)]
pub struct NormReport {
    pub n_values: Vec<u64>,
    pub p: f64,
    pub norms: Vec<f64>,
    /// Slope of `log(norm)` vs `log(n)`; for the `p = 4` case the norms are
    /// first multiplied by `(n/ln n)^{1/4}`, so the target slope is 0.
    pub fitted_exponent: f64,
    /// `(2−p)/(2p)` for `p < 4`, `(1−p)/(3p)` for `p > 4` (`−1/3` at `∞`),
    /// `0` in the compensated `p = 4` fit.
    pub predicted_exponent: f64,
    /// Set when the `p = 4` logarithmic correction was applied.
    pub log_correction: bool,
    pub r_squared: f64,
}

/// Fit the scaling exponent of `‖ĉ‖_p` against `n` using the DFT oracle.
///
/// Needs at least 4 ladder points spanning a decade for a meaningful fit.
pub fn exponent_fit(lambda: f64, p: f64, n_values: &[u64]) -> Result<NormReport, ExactError> {
    debug_assert!(n_values.len() >= 4);
    let mut norms = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let seq = coeff_dft_default(lambda, n)?;
        norms.push(lp_norm(&seq, p));
    }
    let log_correction = p == 4.0;
    let fit_values: Vec<f64> = if log_correction {
        norms
            .iter()
            .zip(n_values)
            .map(|(v, &n)| v * math::powf(n as f64 / math::ln(n as f64), 0.25))
            .collect()
    } else {
        norms.clone()
    };
    let ns: Vec<f64> = n_values.iter().map(|&n| n as f64).collect();
    let fit = fit_loglog(&ns, &fit_values);
    let predicted_exponent = if log_correction {
        0.0
    } else if p.is_infinite() {
        -1.0 / 3.0
    } else if p < 4.0 {
        (2.0 - p) / (2.0 * p)
    } else {
        (1.0 - p) / (3.0 * p)
    };
    Ok(NormReport {
        n_values: n_values.to_vec(),
        p,
        norms,
        fitted_exponent: fit.slope,
        predicted_exponent,
        log_correction,
        r_squared: fit.r_squared,
    })
}
