//! Stationary-point geometry of `Φ_a(z) = log(z^{−a} b_λ(z))`.
//!
//! The coefficient `ĉ(k)` of `b_λ^n` is a contour integral of `e^{nΦ_a}` with
//! `a = k/n`. Its large-`n` behavior is controlled by the stationary points
//!
//! ```text
//! z± = c ± sqrt(c² − 1),    c = (a(1+λ²) − (1−λ²)) / (2λa),
//! ```
//!
//! which sit on the unit circle for `a ∈ (α₀, α₀⁻¹)` (complex conjugates),
//! coalesce at `∓1` when `a` hits an edge, and move onto the real axis outside
//! (with `z₋ = 1/z₊`). On the circle the phase reduces to the real function
//!
//! ```text
//! h(φ) = (1−a)φ + 2·arctan(λ sin φ / (1 − λ cos φ)),
//! ```
//!
//! the unique continuous branch with `h(0) = 0`, `h(π) = (1−a)π`.
//!
//! The coalescence is described by cubic-normal-form (Chester–Friedman–Ursell)
//! parameters: `γ³ = (3/4)(Φ(z₊) − Φ(z₋))`, `η = (Φ(z₊) + Φ(z₋))/2`, and the
//! Airy argument is `n^{2/3}γ²`. The cube root is fixed so that `γ² > 0` on the
//! exponential side of each edge and `γ² < 0` on the oscillatory side, which
//! keeps `Ai(n^{2/3}γ²)` continuous across the transition.

use core::fmt;

use num_complex::Complex64;

use crate::math;
use crate::param::alpha0;

/// Branch of the complex logarithm used by [`phi`].
///
/// `CutPositiveAxis` cuts along `[0, ∞)` and fixes `log(−1) = iπ` (arguments in
/// `[0, 2π)`); it is the branch for the left edge, where the saddles are
/// negative reals. `Principal` is the usual `(−π, π]` branch, used on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    CutPositiveAxis,
    Principal,
}

/// Which coalescence edge the `γ` quantities refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    LeftEdge,
    RightEdge,
    /// Pick the multiplicatively nearer edge; the tie at `a = 1` resolves to
    /// `RightEdge`.
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SaddleError {
    /// `a = k/n` must be positive.
    NonPositiveRatio,
    /// Operation only defined for `a` in `[α₀, α₀⁻¹]`.
    OutsideInterval { a: f64, lo: f64, hi: f64 },
    /// Evaluation point too close to a pole/zero of the integrand.
    NearSingularity { distance: f64 },
}

impl fmt::Display for SaddleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaddleError::NonPositiveRatio => write!(f, "ratio a = k/n must be positive"),
            SaddleError::OutsideInterval { a, lo, hi } => {
                write!(f, "a = {a} outside [{lo}, {hi}]")
            }
            SaddleError::NearSingularity { distance } => {
                write!(f, "evaluation point within {distance} of a singularity")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SaddleError {}

/// Stationary points `(z₊, z₋)` of `Φ_a`.
///
/// Square-root convention: the real nonnegative branch when `c² − 1 ≥ 0`, and
/// `+i·sqrt(1 − c²)` for `z₊` otherwise, so `Im z₊ ≥ 0` always.
pub fn z_pm(lambda: f64, a: f64) -> Result<(Complex64, Complex64), SaddleError> {
    if !(a > 0.0) {
        return Err(SaddleError::NonPositiveRatio);
    }
    let c = saddle_center(lambda, a);
    let rad = c * c - 1.0;
    if rad >= 0.0 {
        let s = math::sqrt(rad);
        Ok((Complex64::new(c + s, 0.0), Complex64::new(c - s, 0.0)))
    } else {
        let s = math::sqrt(-rad);
        Ok((Complex64::new(c, s), Complex64::new(c, -s)))
    }
}

#[inline]
fn saddle_center(lambda: f64, a: f64) -> f64 {
    (a * (1.0 + lambda * lambda) - (1.0 - lambda * lambda)) / (2.0 * lambda * a)
}

fn log_branch(z: Complex64, branch: Branch) -> Complex64 {
    let ln_abs = math::ln(math::hypot(z.re, z.im));
    let mut arg = math::atan2(z.im, z.re);
    if branch == Branch::CutPositiveAxis && arg < 0.0 {
        arg += 2.0 * core::f64::consts::PI;
    }
    Complex64::new(ln_abs, arg)
}

/// `b_λ(z) = (z − λ)/(1 − λz)` for real `λ`.
pub fn blaschke(lambda: f64, z: Complex64) -> Complex64 {
    (z - lambda) / (Complex64::new(1.0, 0.0) - lambda * z)
}

/// `Φ_a(z) = −a·log z + log b_λ(z)` on the requested branch.
///
/// For real negative `z` the cut-positive-axis branch gives
/// `Φ = ln(|b|/|z|^a) + iπ(1−a)`, so `exp(nΦ(z₊)) = (−1)^{n−k}(|b|/|z₊|^a)^n`.
pub fn phi(lambda: f64, a: f64, z: Complex64, branch: Branch) -> Result<Complex64, SaddleError> {
    let dist_zero = math::hypot(z.re, z.im);
    let dist_pole = math::hypot(z.re - 1.0 / lambda, z.im);
    let dist = dist_zero.min(dist_pole);
    if dist < 1e-12 {
        return Err(SaddleError::NearSingularity { distance: dist });
    }
    Ok(log_branch(blaschke(lambda, z), branch) - a * log_branch(z, branch))
}

/// First three derivatives of `Φ_a` at `z`:
///
/// ```text
/// Φ'   =  1/(z−λ) − a/z + λ/(1−λz)
/// Φ''  = −1/(z−λ)² + a/z² + λ²/(1−λz)²
/// Φ''' =  2/(z−λ)³ − 2a/z³ + 2λ³/(1−λz)³
/// ```
pub fn phi_derivs(
    lambda: f64,
    a: f64,
    z: Complex64,
) -> Result<(Complex64, Complex64, Complex64), SaddleError> {
    let one = Complex64::new(1.0, 0.0);
    let dz = z - lambda;
    let dw = one - lambda * z;
    let dist = math::hypot(z.re, z.im)
        .min(math::hypot(dz.re, dz.im))
        .min(math::hypot(dw.re, dw.im));
    if dist < 1e-12 {
        return Err(SaddleError::NearSingularity { distance: dist });
    }
    let p1 = one / dz - a / z + lambda / dw;
    let p2 = -one / (dz * dz) + a / (z * z) + (lambda * lambda) / (dw * dw);
    let p3 = 2.0 * one / (dz * dz * dz) - 2.0 * a / (z * z * z)
        + (2.0 * lambda * lambda * lambda) / (dw * dw * dw);
    Ok((p1, p2, p3))
}

/// `Φ''(z₊)` in closed form: `λ(1−λ²)(z₊−z₋) / ((z₊−λ)²(1−λz₊)²)`.
pub fn phi2_at_plus(lambda: f64, a: f64) -> Result<Complex64, SaddleError> {
    let (zp, zm) = z_pm(lambda, a)?;
    let one = Complex64::new(1.0, 0.0);
    let d = zp - lambda;
    let w = one - lambda * zp;
    Ok(lambda * (1.0 - lambda * lambda) * (zp - zm) / (d * d * w * w))
}

/// The continuous phase `h(φ) = (1−a)φ + 2·arctan(λ sin φ/(1−λ cos φ))` on `[0, π]`.
pub fn h_func(lambda: f64, a: f64, varphi: f64) -> f64 {
    (1.0 - a) * varphi
        + 2.0 * math::atan(lambda * math::sin(varphi) / (1.0 - lambda * math::cos(varphi)))
}

/// `h'(φ) = 1 − a + 2λ(cos φ − λ)/(1 + λ² − 2λ cos φ)`.
pub fn h_deriv1(lambda: f64, a: f64, varphi: f64) -> f64 {
    let c = math::cos(varphi);
    1.0 - a + 2.0 * lambda * (c - lambda) / (1.0 + lambda * lambda - 2.0 * lambda * c)
}

/// `h''(φ) = 2λ(λ² − 1)sin φ/(1 + λ² − 2λ cos φ)²`; at the stationary point,
/// `|h''(φ₊)| = a·sqrt((a − α₀)(α₀⁻¹ − a))`.
pub fn h_deriv2(lambda: f64, a: f64, varphi: f64) -> f64 {
    let _ = a;
    let c = math::cos(varphi);
    let den = 1.0 + lambda * lambda - 2.0 * lambda * c;
    2.0 * lambda * (lambda * lambda - 1.0) * math::sin(varphi) / (den * den)
}

/// The stationary angle `φ₊ = arccos((a(1+λ²) − (1−λ²))/(2λa)) ∈ [0, π]`,
/// defined for `a ∈ [α₀, α₀⁻¹]` (the endpoints give `π` and `0`).
pub fn varphi_plus(lambda: f64, a: f64) -> Result<f64, SaddleError> {
    let lo = alpha0(lambda);
    let hi = 1.0 / lo;
    if !(a >= lo && a <= hi) {
        return Err(SaddleError::OutsideInterval { a, lo, hi });
    }
    let c = saddle_center(lambda, a).clamp(-1.0, 1.0);
    Ok(math::acos(c))
}

/// Cubic-normal-form data at a given ratio `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaData {
    /// Signed `γ²`: positive on the exponential side, negative on the
    /// oscillatory side. The Airy argument is `n^{2/3}·gamma_sq`.
    pub gamma_sq: f64,
    /// `|γ| = |γ³|^{1/3}`.
    pub gamma_abs: f64,
    /// Exact `γ³ = (3/4)(Φ(z₊) − Φ(z₋))` on the side's branch: negative real
    /// outside the interval, positive imaginary inside.
    pub gamma_cubed: Complex64,
    /// `η = (Φ(z₊) + Φ(z₋))/2`: `iπ(1−a)` on the left side, `0` on the right.
    pub eta: Complex64,
    /// The side actually used after `Auto` resolution.
    pub side_used: EdgeSide,
}

/// Below this distance to an edge, `Φ(z₊) − Φ(z₋)` cancels catastrophically
/// and the leading-order `γ²` is used instead (error `O(|a−edge|²)`).
pub const COALESCENCE_GUARD: f64 = 1e-8;

/// Leading-order slope of `γ²` at an edge:
/// `(1+λ)/(λ(1−λ))^{1/3}` on the left, `(1−λ)/(λ(1+λ))^{1/3}` on the right.
pub fn gamma_sq_leading_coef(lambda: f64, side: EdgeSide) -> f64 {
    match side {
        EdgeSide::RightEdge => (1.0 - lambda) / math::cbrt(lambda * (1.0 + lambda)),
        _ => (1.0 + lambda) / math::cbrt(lambda * (1.0 - lambda)),
    }
}

fn resolve_side(a: f64, side: EdgeSide) -> EdgeSide {
    match side {
        EdgeSide::Auto => {
            // multiplicative distance: a and α₀⁻¹/… tie exactly at a = 1
            if a < 1.0 {
                EdgeSide::LeftEdge
            } else {
                EdgeSide::RightEdge
            }
        }
        s => s,
    }
}

/// `γ²`, `γ³`, `|γ|`, and `η` for ratio `a`, relative to the chosen edge.
///
/// Inside `(α₀, α₀⁻¹)` the exact values reduce to `γ³ = (3/2)i·(h(φ₊) − π(1−a))`
/// (left) and `(3/2)i·h(φ₊)` (right); outside, to `(3/2)·Re Φ(z₊) < 0`.
pub fn gamma_quantities(lambda: f64, a: f64, side: EdgeSide) -> Result<GammaData, SaddleError> {
    if !(a > 0.0) {
        return Err(SaddleError::NonPositiveRatio);
    }
    let a0 = alpha0(lambda);
    let side = resolve_side(a, side);
    let (edge, inside_possible) = match side {
        EdgeSide::LeftEdge => (a0, true),
        EdgeSide::RightEdge => (1.0 / a0, true),
        EdgeSide::Auto => unreachable!(),
    };
    debug_assert!(inside_possible);
    let eta = match side {
        EdgeSide::LeftEdge => Complex64::new(0.0, core::f64::consts::PI * (1.0 - a)),
        _ => Complex64::new(0.0, 0.0),
    };

    // a strictly on the far side of the other edge has no γ for this side
    if side == EdgeSide::LeftEdge && a > 1.0 / a0 {
        return Err(SaddleError::OutsideInterval {
            a,
            lo: 0.0,
            hi: 1.0 / a0,
        });
    }
    if side == EdgeSide::RightEdge && a < a0 {
        return Err(SaddleError::OutsideInterval {
            a,
            lo: a0,
            hi: f64::INFINITY,
        });
    }

    if math::abs(a - edge) < COALESCENCE_GUARD {
        let coef = gamma_sq_leading_coef(lambda, side);
        let displaced = match side {
            EdgeSide::LeftEdge => edge - a,
            _ => a - edge,
        };
        let gamma_sq = coef * displaced;
        let gamma_abs = math::sqrt(math::abs(gamma_sq));
        let mag = math::powf(math::abs(gamma_sq), 1.5);
        let gamma_cubed = if gamma_sq >= 0.0 {
            Complex64::new(-mag, 0.0)
        } else {
            Complex64::new(0.0, mag)
        };
        return Ok(GammaData {
            gamma_sq,
            gamma_abs,
            gamma_cubed,
            eta,
            side_used: side,
        });
    }

    let inside = a > a0 && a < 1.0 / a0;
    if inside {
        let ph = varphi_plus(lambda, a)?;
        let h = h_func(lambda, a, ph);
        let t = match side {
            EdgeSide::LeftEdge => h - core::f64::consts::PI * (1.0 - a),
            _ => h,
        };
        // t ≥ 0 in exact arithmetic; clamp roundoff just past coalescence
        let t = t.max(0.0);
        let g3 = 1.5 * t;
        Ok(GammaData {
            gamma_sq: -math::powf(g3, 2.0 / 3.0),
            gamma_abs: math::cbrt(g3),
            gamma_cubed: Complex64::new(0.0, g3),
            eta,
            side_used: side,
        })
    } else {
        let (zp, _) = z_pm(lambda, a)?;
        let b = blaschke(lambda, zp);
        let re_phi = math::ln(math::hypot(b.re, b.im)) - a * math::ln(math::abs(zp.re));
        let g3 = 1.5 * re_phi; // negative
        let mag = -g3;
        Ok(GammaData {
            gamma_sq: math::powf(mag, 2.0 / 3.0),
            gamma_abs: math::cbrt(mag),
            gamma_cubed: Complex64::new(g3, 0.0),
            eta,
            side_used: side,
        })
    }
}

/// Everything the asymptotic formulas need at one ratio `a`, bundled.
#[derive(Debug, Clone, PartialEq)]
pub struct SaddleData {
    pub a: f64,
    pub z_plus: Complex64,
    pub z_minus: Complex64,
    /// `Φ(z₊)` on the branch matching the side (continuous `i·h(φ₊)` on the circle).
    pub phi_plus: Complex64,
    pub phi_minus: Complex64,
    pub phi2_plus: Complex64,
    /// Stationary angle, present only for `a ∈ [α₀, α₀⁻¹]`.
    pub varphi_plus: Option<f64>,
    /// `h(φ₊)`, present with `varphi_plus`.
    pub h_at_plus: Option<f64>,
    pub gamma_sq: f64,
    pub gamma_abs: f64,
    pub gamma_cubed: Complex64,
    /// `Δ = (a − α₀)(α₀⁻¹ − a)`, positive inside the interval.
    pub delta: f64,
    pub eta: Complex64,
    pub side_used: EdgeSide,
}

impl SaddleData {
    pub fn compute(lambda: f64, a: f64, side: EdgeSide) -> Result<SaddleData, SaddleError> {
        let a0 = alpha0(lambda);
        let (z_plus, z_minus) = z_pm(lambda, a)?;
        let gam = gamma_quantities(lambda, a, side)?;
        let inside = a >= a0 && a <= 1.0 / a0;
        let (varphi, h_at, phi_plus, phi_minus) = if inside {
            let ph = varphi_plus(lambda, a)?;
            let h = h_func(lambda, a, ph);
            (
                Some(ph),
                Some(h),
                Complex64::new(0.0, h),
                Complex64::new(0.0, -h),
            )
        } else {
            let b = blaschke(lambda, z_plus);
            let re = math::ln(math::hypot(b.re, b.im)) - a * math::ln(math::abs(z_plus.re));
            if z_plus.re < 0.0 {
                let im = core::f64::consts::PI * (1.0 - a);
                (None, None, Complex64::new(re, im), Complex64::new(-re, im))
            } else {
                (None, None, Complex64::new(re, 0.0), Complex64::new(-re, 0.0))
            }
        };
        Ok(SaddleData {
            a,
            z_plus,
            z_minus,
            phi_plus,
            phi_minus,
            phi2_plus: phi2_at_plus(lambda, a)?,
            varphi_plus: varphi,
            h_at_plus: h_at,
            gamma_sq: gam.gamma_sq,
            gamma_abs: gam.gamma_abs,
            gamma_cubed: gam.gamma_cubed,
            delta: (a - a0) * (1.0 / a0 - a),
            eta: gam.eta,
            side_used: gam.side_used,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    const LAM: f64 = 0.5;

    #[test]
    fn coalescence_points() {
        // the saddle location has square-root sensitivity at the degenerate
        // ratios, so a float a = 1/3 resolves them only to ~sqrt(eps)
        let (zp, zm) = z_pm(LAM, 1.0 / 3.0).unwrap();
        assert!((zp - Complex64::new(-1.0, 0.0)).norm() < 1e-7);
        assert!((zm - Complex64::new(-1.0, 0.0)).norm() < 1e-7);
        let (zp, zm) = z_pm(LAM, 3.0).unwrap();
        assert!((zp - Complex64::new(1.0, 0.0)).norm() < 1e-7);
        assert!((zm - Complex64::new(1.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn circle_saddle_at_a_two() {
        let (zp, zm) = z_pm(LAM, 2.0).unwrap();
        assert!((zp.re - 0.875).abs() < 1e-15);
        assert!((zp.im - 0.484122918275927).abs() < 1e-12);
        assert!((zm - zp.conj()).norm() < 1e-15);
        assert!((zp.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_saddles_are_reciprocal() {
        for a in [0.05, 0.1, 0.2, 0.3, 3.5, 5.0, 20.0] {
            let (zp, zm) = z_pm(LAM, a).unwrap();
            assert!(zp.im == 0.0 && zm.im == 0.0);
            assert!((zp.re * zm.re - 1.0).abs() < 1e-12, "a={a}");
        }
    }

    #[test]
    fn phi_examples() {
        // Φ_{3}(1) = 0 on the principal branch
        let v = phi(LAM, 3.0, Complex64::new(1.0, 0.0), Branch::Principal).unwrap();
        assert!(v.norm() < 1e-14);
        // Φ_1(e^{iπ/3}) = iπ/3
        let z = Complex64::new((PI / 3.0).cos(), (PI / 3.0).sin());
        let v = phi(LAM, 1.0, z, Branch::Principal).unwrap();
        assert!((v - Complex64::new(0.0, PI / 3.0)).norm() < 1e-14);
        // Φ_{1/3}(−1) = iπ(1 − 1/3) on the cut-positive-axis branch
        let v = phi(
            LAM,
            1.0 / 3.0,
            Complex64::new(-1.0, 0.0),
            Branch::CutPositiveAxis,
        )
        .unwrap();
        assert!((v - Complex64::new(0.0, 2.0 * PI / 3.0)).norm() < 1e-14);
    }

    #[test]
    fn phi_rejects_singularities() {
        assert!(phi(LAM, 1.0, Complex64::new(0.0, 0.0), Branch::Principal).is_err());
        assert!(phi(LAM, 1.0, Complex64::new(2.0, 0.0), Branch::Principal).is_err());
    }

    #[test]
    fn third_derivative_at_degenerate_points() {
        let (_, _, p3) = phi_derivs(LAM, 1.0 / 3.0, Complex64::new(-1.0, 0.0)).unwrap();
        // 2λ(1−λ)/(1+λ)³ = 4/27
        assert!((p3.re - 4.0 / 27.0).abs() < 1e-14 && p3.im.abs() < 1e-15);
        let (_, p2, p3) = phi_derivs(LAM, 3.0, Complex64::new(1.0, 0.0)).unwrap();
        // 2λ(1+λ)/(1−λ)³ = 12, and Φ'' vanishes at the degenerate point
        assert!((p3.re - 12.0).abs() < 1e-12);
        assert!(p2.norm() < 1e-14);
    }

    #[test]
    fn gradient_vanishes_at_saddles() {
        for a in [0.1, 0.3, 0.7, 1.0, 2.0, 4.0, 10.0] {
            let (zp, _) = z_pm(LAM, a).unwrap();
            let (p1, p2, _) = phi_derivs(LAM, a, zp).unwrap();
            assert!(
                p1.norm() <= 1e-10 * p2.norm().max(1.0),
                "a={a}: |Φ'| = {}",
                p1.norm()
            );
        }
    }

    #[test]
    fn phi2_closed_form_matches_derivs() {
        for a in [0.1, 0.5, 1.0, 2.0, 5.0] {
            let (zp, _) = z_pm(LAM, a).unwrap();
            let (_, p2, _) = phi_derivs(LAM, a, zp).unwrap();
            let cf = phi2_at_plus(LAM, a).unwrap();
            assert!((p2 - cf).norm() < 1e-12 * cf.norm().max(1.0));
        }
    }

    #[test]
    fn h_endpoints_and_stationary_value() {
        // h(0) = 0, h(π) = (1−a)π
        for a in [0.4, 1.0, 2.5] {
            assert!(h_func(LAM, a, 0.0).abs() < 1e-15);
            assert!((h_func(LAM, a, PI) - (1.0 - a) * PI).abs() < 1e-14);
        }
        // a = 1: φ₊ = π/3, h(φ₊) = π/3, |h''(φ₊)| = sqrt(4/3)
        let ph = varphi_plus(LAM, 1.0).unwrap();
        assert!((ph - PI / 3.0).abs() < 1e-14);
        assert!((h_func(LAM, 1.0, ph) - PI / 3.0).abs() < 1e-14);
        assert!((h_deriv2(LAM, 1.0, ph).abs() - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(h_deriv1(LAM, 1.0, ph).abs() < 1e-14);
    }

    #[test]
    fn h_second_derivative_closed_form_at_stationary_point() {
        let a0 = alpha0(LAM);
        for a in [0.4, 0.8, 1.3, 2.2, 2.9] {
            let ph = varphi_plus(LAM, a).unwrap();
            let expect = a * ((a - a0) * (1.0 / a0 - a)).sqrt();
            assert!((h_deriv2(LAM, a, ph).abs() - expect).abs() < 1e-12, "a={a}");
        }
    }

    #[test]
    fn varphi_plus_edges() {
        assert!((varphi_plus(LAM, 1.0 / 3.0).unwrap() - PI).abs() < 1e-7);
        assert!(varphi_plus(LAM, 3.0).unwrap().abs() < 1e-7);
        assert!(varphi_plus(LAM, 0.1).is_err());
        assert!(varphi_plus(LAM, 3.5).is_err());
    }

    #[test]
    fn gamma_at_coalescence_is_zero() {
        let g = gamma_quantities(LAM, 1.0 / 3.0, EdgeSide::LeftEdge).unwrap();
        assert_eq!(g.gamma_sq, 0.0);
        assert_eq!(g.gamma_cubed, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn gamma_leading_order_near_edges() {
        // left: γ² ≈ 2.3811·(α₀ − a); right: γ² ≈ 0.55032·(a − α₀⁻¹)
        let g = gamma_quantities(LAM, 1.0 / 3.0 - 0.001, EdgeSide::LeftEdge).unwrap();
        let coef = gamma_sq_leading_coef(LAM, EdgeSide::LeftEdge);
        assert!((coef - 2.381101577952299).abs() < 1e-12);
        assert!((g.gamma_sq / (coef * 0.001) - 1.0).abs() < 5e-3);
        let g = gamma_quantities(LAM, 3.01, EdgeSide::RightEdge).unwrap();
        let coef = gamma_sq_leading_coef(LAM, EdgeSide::RightEdge);
        assert!((coef - 0.5503212081491046).abs() < 1e-12);
        assert!((g.gamma_sq / (coef * 0.01) - 1.0).abs() < 2e-2);
    }

    #[test]
    fn gamma_sign_convention() {
        // γ² > 0 outside the interval, γ² < 0 inside
        assert!(gamma_quantities(LAM, 0.2, EdgeSide::Auto).unwrap().gamma_sq > 0.0);
        assert!(gamma_quantities(LAM, 0.5, EdgeSide::Auto).unwrap().gamma_sq < 0.0);
        assert!(gamma_quantities(LAM, 2.5, EdgeSide::Auto).unwrap().gamma_sq < 0.0);
        assert!(gamma_quantities(LAM, 4.0, EdgeSide::Auto).unwrap().gamma_sq > 0.0);
    }

    #[test]
    fn gamma_matches_general_difference_formula() {
        // γ³ = (3/4)(Φ(z₊) − Φ(z₋)) on the side's branch, away from the edges
        for (a, side, branch) in [
            (0.15, EdgeSide::LeftEdge, Branch::CutPositiveAxis),
            (0.8, EdgeSide::LeftEdge, Branch::CutPositiveAxis),
            (1.7, EdgeSide::RightEdge, Branch::Principal),
            (4.5, EdgeSide::RightEdge, Branch::Principal),
        ] {
            let (zp, zm) = z_pm(LAM, a).unwrap();
            let d = 0.75 * (phi(LAM, a, zp, branch).unwrap() - phi(LAM, a, zm, branch).unwrap());
            let g = gamma_quantities(LAM, a, side).unwrap();
            assert!(
                (d - g.gamma_cubed).norm() < 1e-10 * g.gamma_cubed.norm().max(1e-3),
                "a={a}: {d} vs {}",
                g.gamma_cubed
            );
        }
    }

    #[test]
    fn eta_values() {
        let g = gamma_quantities(LAM, 0.3, EdgeSide::LeftEdge).unwrap();
        assert!((g.eta - Complex64::new(0.0, PI * 0.7)).norm() < 1e-14);
        let g = gamma_quantities(LAM, 3.2, EdgeSide::RightEdge).unwrap();
        assert_eq!(g.eta, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn auto_side_resolution() {
        assert_eq!(
            gamma_quantities(LAM, 0.9, EdgeSide::Auto).unwrap().side_used,
            EdgeSide::LeftEdge
        );
        assert_eq!(
            gamma_quantities(LAM, 1.0, EdgeSide::Auto).unwrap().side_used,
            EdgeSide::RightEdge
        );
    }

    #[test]
    fn saddle_separation_identities() {
        // |e^{iφ₊} ∓ 1|² = (1∓λ)²(α₀^{∓1} − ±a)… the two closed forms below
        let a0 = alpha0(LAM);
        let mut a = a0 + 0.01;
        while a < 1.0 / a0 {
            let ph = varphi_plus(LAM, a).unwrap();
            let z = Complex64::new(ph.cos(), ph.sin());
            let m1 = (z - Complex64::new(1.0, 0.0)).norm_sqr();
            let p1 = (z + Complex64::new(1.0, 0.0)).norm_sqr();
            let m1_expect = (1.0 - LAM) * (1.0 - LAM) * (1.0 / a0 - a) / (a * LAM);
            let p1_expect = (1.0 + LAM) * (1.0 + LAM) * (a - a0) / (a * LAM);
            assert!((m1 - m1_expect).abs() < 1e-10, "a={a}");
            assert!((p1 - p1_expect).abs() < 1e-10, "a={a}");
            a += 0.1;
        }
    }

    #[test]
    fn difference_and_product_identities() {
        // z₊−z₋ = (1−λ²)/(aλ)·sqrt((a−α₀⁻¹)(a−α₀)); (z₊−λ)(z₋−λ) = (1−λ²)/a
        let a0 = alpha0(LAM);
        for a in [0.1, 0.25, 0.7, 1.4, 3.3, 8.0] {
            let (zp, zm) = z_pm(LAM, a).unwrap();
            let prod = (zp - LAM) * (zm - LAM);
            assert!(
                (prod - Complex64::new((1.0 - LAM * LAM) / a, 0.0)).norm() < 1e-10,
                "a={a}"
            );
            let diff = zp - zm;
            let rad = Complex64::new((a - 1.0 / a0) * (a - a0), 0.0).sqrt();
            let expect = (1.0 - LAM * LAM) / (a * LAM) * rad;
            assert!((diff - expect).norm() < 1e-10, "a={a}");
        }
    }

    #[test]
    fn derivs_match_finite_differences() {
        for (a, z) in [
            (0.6, Complex64::new(0.3, 0.4)),
            (2.0, Complex64::new(-0.7, 0.2)),
            (1.0, Complex64::new(0.1, -1.1)),
        ] {
            let f = |z: Complex64| phi(LAM, a, z, Branch::Principal).unwrap();
            let (p1, p2, p3) = phi_derivs(LAM, a, z).unwrap();
            let h1 = 1e-5;
            let dz = Complex64::new(h1, 0.0);
            let fd1 = (f(z + dz) - f(z - dz)) / (2.0 * h1);
            let fd2 = (f(z + dz) - 2.0 * f(z) + f(z - dz)) / (h1 * h1);
            assert!((fd1 - p1).norm() / p1.norm() < 1e-6);
            assert!((fd2 - p2).norm() / p2.norm() < 1e-4);
            // the third difference needs a larger step: differences are O(h³)
            let h3 = 1e-3;
            let dz = Complex64::new(h3, 0.0);
            let fd3 = (f(z + 2.0 * dz) - 2.0 * f(z + dz) + 2.0 * f(z - dz) - f(z - 2.0 * dz))
                / (2.0 * h3 * h3 * h3);
            assert!((fd3 - p3).norm() / p3.norm() < 1e-3);
        }
    }

    #[test]
    fn exact_gamma_approaches_leading_order_monotonically() {
        // (γ² exact)/(leading order) → 1 as a → α₀ from below
        let a0 = alpha0(LAM);
        let coef = gamma_sq_leading_coef(LAM, EdgeSide::LeftEdge);
        let mut prev_gap = f64::INFINITY;
        for j in 1..=6 {
            let d = math::powf(10.0, -(j as f64));
            if d < COALESCENCE_GUARD * 10.0 {
                break;
            }
            let g = gamma_quantities(LAM, a0 - d, EdgeSide::LeftEdge).unwrap();
            let ratio = g.gamma_sq / (coef * d);
            let gap = (ratio - 1.0).abs();
            assert!(gap < prev_gap, "gap should shrink towards the edge (j={j})");
            prev_gap = gap;
        }
    }
}
