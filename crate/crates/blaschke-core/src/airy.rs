//! The Airy function `Ai(x)` for real argument, plus the two limiting
//! approximations the asymptotic formulas switch to away from the transition.
//!
//! `Ai` solves `y'' = x·y` and can be defined by the improper integral
//! `Ai(x) = (1/π)∫₀^∞ cos(t³/3 + xt) dt`. Evaluation strategy:
//!
//! * `|x| ≤ 6` — Maclaurin series `Ai = c₁·f(x) − c₂·g(x)` (both entire);
//! * `x > 6` — the exponential expansion `e^{−ζ}/(2√π x^{1/4})·Σ (−1)^k u_k ζ^{−k}`
//!   with `ζ = (2/3)x^{3/2}`, truncated at its smallest term;
//! * `x < −6` — the oscillatory expansion in `cos(ζ−π/4)`/`sin(ζ−π/4)` with the
//!   even/odd `u_k` sums, truncated the same way.
//!
//! A slow but independent oracle, [`ai_integral_quadrature`], integrates the
//! defining integral along the rotated ray `t = e^{iπ/6}s` (on which the
//! integrand decays like `e^{−s³/3}`) and is used for cross-checks only.

use crate::exact::dd::{dd_add, dd_div, dd_mul, dd_sub, Dd};
use crate::exact::quad::adaptive_simpson;
use crate::math;

/// `Ai(0) = 3^{−2/3}/Γ(2/3)`.
pub const AI_ZERO: f64 = 0.355_028_053_887_817_24;
/// `Ai(0)` split to double-double precision.
const AI_ZERO_DD: Dd = Dd {
    hi: 0.3550280538878172,
    lo: 2.05233632436212e-17,
};
/// `−Ai'(0) = 3^{−1/3}/Γ(1/3)`, split to double-double precision.
const AIP_ZERO_DD: Dd = Dd {
    hi: 0.2588194037928068,
    lo: -2.522243111610832e-17,
};

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryMethod {
    Maclaurin,
    AsymptoticNeg,
    AsymptoticPos,
    Quadrature,
}

/// An evaluated `Ai(x)` with method and error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue {
    pub x: f64,
    pub ai: f64,
    pub method: AiryMethod,
    /// Estimated absolute error (for the asymptotic branches, the first
    /// omitted term; for the series, a roundoff bound).
    pub est_error: f64,
}

/// `Ai(x)` with automatic method selection.
///
/// Relative accuracy is ~1e−13 for `|x| ≲ 10` and degrades gracefully with the
/// optimally truncated asymptotic series beyond. Deep in the positive tail the
/// value underflows; the result is then `0.0` with `est_error` holding the
/// underflow scale.
pub fn ai(x: f64) -> AiryValue {
    debug_assert!(x.is_finite() && math::abs(x) <= 1e6);
    if math::abs(x) <= 6.0 {
        let (v, err) = maclaurin(x);
        AiryValue {
            x,
            ai: v,
            method: AiryMethod::Maclaurin,
            est_error: err,
        }
    } else if x > 0.0 {
        let (v, err) = asym_pos_series(x);
        AiryValue {
            x,
            ai: v,
            method: AiryMethod::AsymptoticPos,
            est_error: err,
        }
    } else {
        let (v, err) = asym_neg_series(-x);
        AiryValue {
            x,
            ai: v,
            method: AiryMethod::AsymptoticNeg,
            est_error: err,
        }
    }
}

/// Leading oscillatory approximation
/// `Ai(−x) ≈ cos((2/3)x^{3/2} − π/4) / (√π · x^{1/4})` for `x > 0`.
pub fn ai_asym_neg(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * math::powf(x, 1.5);
    math::cos(zeta - core::f64::consts::FRAC_PI_4)
        / (math::sqrt(core::f64::consts::PI) * math::powf(x, 0.25))
}

/// Leading exponential approximation
/// `Ai(x) ≈ exp(−(2/3)x^{3/2}) / (2√π · x^{1/4})` for `x > 0`.
///
/// Diverges like `x^{−1/4}` as `x → 0⁺`; only meaningful for `x` bounded away
/// from zero.
pub fn ai_asym_pos(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * math::powf(x, 1.5);
    math::exp(-zeta) / (2.0 * math::sqrt(core::f64::consts::PI) * math::powf(x, 0.25))
}

/// Maclaurin evaluation: `Ai = c₁ f − c₂ g` with term recurrences
/// `f`: `t ← t·x³/(3k(3k−1))`, `g`: `t ← t·x³/((3k+1)3k)`.
///
/// The two sums are accumulated in double-double: for positive `x` the value
/// `~e^{−ζ}` emerges from `O(e^{ζ})` terms, and plain `f64` accumulation would
/// cap the relative accuracy near `e^{2ζ}·eps` (3e−8 at `x = 6`).
fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = {
        let xd = Dd::from_f64(x);
        dd_mul(dd_mul(xd, xd), xd)
    };
    let mut f_term = Dd::ONE;
    let mut f_sum = Dd::ONE;
    let mut g_term = Dd::from_f64(x);
    let mut g_sum = g_term;
    let mut max_mag: f64 = 1.0;
    for k in 1..90u32 {
        let tk = 3.0 * k as f64;
        f_term = dd_div(dd_mul(f_term, x3), Dd::from_f64(tk * (tk - 1.0)));
        f_sum = dd_add(f_sum, f_term);
        g_term = dd_div(dd_mul(g_term, x3), Dd::from_f64((tk + 1.0) * tk));
        g_sum = dd_add(g_sum, g_term);
        max_mag = max_mag.max(math::abs(f_term.hi)).max(math::abs(g_term.hi));
        if math::abs(f_term.hi) < 1e-24 && math::abs(g_term.hi) < 1e-24 {
            break;
        }
    }
    let v = dd_sub(dd_mul(AI_ZERO_DD, f_sum), dd_mul(AIP_ZERO_DD, g_sum));
    // residual cancellation at dd precision plus the final rounding
    let err = max_mag * 1e-31 + math::abs(v.hi) * 1e-16;
    (v.to_f64(), err)
}

/// `u_k` recurrence: `u_0 = 1`, `u_k = u_{k−1}·(6k−5)(6k−3)(6k−1)/(216k(2k−1))`.
#[inline]
fn next_u(u: f64, k: u32) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0))
}

const MAX_ASYM_TERMS: u32 = 40;

fn asym_pos_series(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * math::powf(x, 1.5);
    let pre = math::exp(-zeta) / (2.0 * math::sqrt(core::f64::consts::PI) * math::powf(x, 0.25));
    if pre == 0.0 {
        // underflow region: report the scale we lost as the error estimate
        return (0.0, f64::MIN_POSITIVE);
    }
    let mut u = 1.0;
    let mut sum = 1.0;
    let mut smallest = 1.0f64;
    let mut sign = 1.0;
    for k in 1..MAX_ASYM_TERMS {
        u = next_u(u, k);
        sign = -sign;
        let t = u / math::powf(zeta, k as f64);
        if t >= smallest {
            break; // divergent tail reached; stop at the smallest term
        }
        smallest = t;
        sum += sign * t;
        if t < 1e-18 {
            break;
        }
    }
    (pre * sum, pre * smallest)
}

fn asym_neg_series(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * math::powf(x, 1.5);
    let pre = 1.0 / (math::sqrt(core::f64::consts::PI) * math::powf(x, 0.25));
    // even-index u's multiply cos(ζ−π/4), odd-index multiply sin(ζ−π/4)
    let mut cos_sum = 1.0;
    let mut sin_sum = 0.0;
    let mut u = 1.0;
    let mut smallest = f64::INFINITY;
    let mut used = 0u32;
    for k in 1..MAX_ASYM_TERMS {
        u = next_u(u, k);
        let t = u / math::powf(zeta, k as f64);
        if t >= smallest && k > 2 {
            break;
        }
        smallest = smallest.min(t);
        // the pattern of signs is + + − − + + − − … in pairs over k = 0,1,2,3,…
        let quarter = k % 4;
        let signed = match quarter {
            0 => t,
            1 => t,
            2 => -t,
            _ => -t,
        };
        if k % 2 == 0 {
            cos_sum += signed;
        } else {
            sin_sum += signed;
        }
        used = k;
        if t < 1e-18 {
            break;
        }
    }
    let _ = used;
    let arg = zeta - core::f64::consts::FRAC_PI_4;
    let v = pre * (math::cos(arg) * cos_sum + math::sin(arg) * sin_sum);
    (v, pre * smallest)
}

/// Adaptive quadrature of the defining integral, rotated onto `t = e^{iπ/6}s`:
///
/// ```text
/// Ai(x) = (1/π)·Re ∫₀^∞ exp(−s³/3 − xs/2)·cos(√3·xs/2 + π/6) ds
/// ```
///
/// Independent of the series/asymptotic paths; used as the cross-check oracle.
/// For `x < 0` the rotated integrand peaks at `exp((2/3)|x/2|^{3/2})`, which
/// sets an intrinsic roundoff floor (reported in `est_error`); the oracle is
/// intended for moderate `|x|`.
pub fn ai_integral_quadrature(x: f64, tol: f64) -> AiryValue {
    let upper = if x >= 0.0 {
        6.0
    } else {
        2.5 * math::sqrt(-x) + 6.0
    };
    let f = |s: f64| {
        let damp = math::exp(-s * s * s / 3.0 - x * s / 2.0);
        let phase = math::sqrt(3.0) * x * s / 2.0 + core::f64::consts::FRAC_PI_6;
        damp * math::cos(phase)
    };
    // one panel per ~3 radians of oscillation keeps each subproblem smooth
    let freq = math::sqrt(3.0) * math::abs(x) / 2.0;
    let panels = ((upper * freq / 3.0) as usize).clamp(8, 4096);
    let mut v = 0.0;
    let mut err = 0.0;
    let mut peak = 0.0f64;
    for i in 0..panels {
        let a = upper * i as f64 / panels as f64;
        let b = upper * (i + 1) as f64 / panels as f64;
        let (pv, pe) = adaptive_simpson(&f, a, b, tol / panels as f64, 18);
        v += pv;
        err += pe;
        peak = peak.max(math::abs(f(0.5 * (a + b))));
    }
    AiryValue {
        x,
        ai: v / core::f64::consts::PI,
        method: AiryMethod::Quadrature,
        est_error: (err + peak * upper * 1e-16) / core::f64::consts::PI,
    }
}
