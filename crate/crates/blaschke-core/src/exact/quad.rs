//! Adaptive quadrature: the oscillatory-phase coefficient oracle and the
//! duality identity check.
//!
//! On the unit circle `|z^{−a}b_λ(z)| = 1`, so the coefficient reduces to the
//! real integral `ĉ(k) = (1/π)·Re ∫₀^π e^{i n h_a(φ)} dφ` with the continuous
//! phase `h_a` from [`crate::saddle::h_func`]. The integrand oscillates at
//! frequency `~n`, so the interval is pre-split into one panel per oscillation
//! before adaptive Simpson refinement; plain adaptive refinement from a single
//! panel can false-converge on symmetric oscillations.

use crate::math;
use crate::saddle::h_func;

/// Adaptive Simpson with Richardson extrapolation.
///
/// Returns `(value, error_estimate)`. `tol` is absolute over `[a, b]`; the
/// estimate is the accumulated extrapolation residual, which may exceed `tol`
/// if the depth budget runs out.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    let right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    let delta = left + right - whole;
    if depth == 0 || math::abs(delta) <= 15.0 * tol {
        (left + right + delta / 15.0, math::abs(delta) / 15.0)
    } else {
        let (lv, le) = simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
        let (rv, re) = simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        (lv + rv, le + re)
    }
}

/// A quadrature result with its achieved error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Achieved absolute error estimate; compare against the requested
    /// tolerance to detect non-convergence.
    pub est_error: f64,
}

/// `ĉ(k)` of `b_λ^n` by adaptive quadrature of the phase integral.
///
/// Independent of the FFT path (different discretization entirely).
pub fn coeff_quadrature(lambda: f64, n: u64, k: u64, tol: f64) -> QuadResult {
    debug_assert!(tol > 0.0);
    let a = k as f64 / n as f64;
    let nf = n as f64;
    let integrand = |phi: f64| math::cos(nf * h_func(lambda, a, phi));
    // one panel per unit of total phase swing, at least 16
    let swing = nf * (math::abs(1.0 - a) + 1.0);
    let panels = (swing.min(4e6) as usize).max(16);
    let (v, e) = panelled(&integrand, core::f64::consts::PI, panels, tol);
    QuadResult {
        value: v / core::f64::consts::PI,
        est_error: e / core::f64::consts::PI + 1e-17 * panels as f64,
    }
}

fn panelled<F: Fn(f64) -> f64>(f: &F, upper: f64, panels: usize, tol: f64) -> (f64, f64) {
    let mut total = 0.0;
    let mut err = 0.0;
    let per_panel = tol / panels as f64;
    for i in 0..panels {
        let a = upper * i as f64 / panels as f64;
        let b = upper * (i + 1) as f64 / panels as f64;
        let (v, e) = adaptive_simpson(f, a, b, per_panel, 18);
        total += v;
        err += e;
    }
    (total, err)
}

/// Outcome of the coefficient duality identity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityCheck {
    /// `|RHS − ĉ(k)|`.
    pub residual: f64,
    /// The contour-integral side `(−1)^{n−k}(1/π)∫₀^π ρ(t)cos(k·h_{n/k}(t)) dt`.
    pub rhs: f64,
    /// The coefficient itself, by the phase-integral oracle.
    pub coeff: f64,
    pub est_error: f64,
}

/// Verify the exchange identity between `(n, k)` and `(k, n)`:
///
/// ```text
/// ĉ_n(k) = (−1)^{n−k}/(2iπ) ∮ (1/z)·(1−λ²)/|1−λz|² · exp(k·Φ_{n/k}(z)) dz,
/// ```
///
/// evaluated over the unit circle, where the weight is the Poisson-kernel
/// factor `ρ(t) = (1−λ²)/(1+λ²−2λcos t)`. Both sides are computed by
/// independent quadratures.
pub fn duality_check(lambda: f64, n: u64, k: u64, tol: f64) -> DualityCheck {
    debug_assert!(k >= 1);
    let ratio = n as f64 / k as f64;
    let kf = k as f64;
    let l2 = lambda * lambda;
    let integrand = |t: f64| {
        let rho = (1.0 - l2) / (1.0 + l2 - 2.0 * lambda * math::cos(t));
        rho * math::cos(kf * h_func(lambda, ratio, t))
    };
    let swing = kf * (math::abs(1.0 - ratio) + 1.0);
    let panels = (swing.min(4e6) as usize).max(16);
    let (v, e_rhs) = panelled(&integrand, core::f64::consts::PI, panels, tol);
    let sign = if (n as i64 - k as i64).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    let rhs = sign * v / core::f64::consts::PI;
    let lhs = coeff_quadrature(lambda, n, k, tol);
    DualityCheck {
        residual: math::abs(rhs - lhs.value),
        rhs,
        coeff: lhs.value,
        est_error: e_rhs / core::f64::consts::PI + lhs.est_error,
    }
}
