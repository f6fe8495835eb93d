//! The per-region asymptotic formulas for `ĉ(k)`, a dispatcher, and the
//! error-measurement harness against the exact oracles.
//!
//! All formulas evaluate in sign + log-magnitude form (the exponential bands
//! reach `e^{−cn}` far below `f64` range) and also expose the plain float
//! view. In brief, with `a = k/n`, `α₀ = (1−λ)/(1+λ)`:
//!
//! * **I** (`k` fixed): `(−λ)^{n−k}(n(1−λ²))^k / k!`
//! * **II/VIII** (`k→∞`, `a` outside `[α₀, α₀⁻¹]`): steepest descent through
//!   the real saddle `z₊`, amplitude `1/√(2kπ)·[(α₀−a)(α₀⁻¹−a)]^{−1/4}`
//! * **III/VII** (approaching an edge from outside): same amplitude against
//!   `1/√(2nπ·a)`, with the decay written through the exact `γ³` as
//!   `exp(−(2/3)n|γ|³)`
//! * **IV/VI** (Airy bands around `α₀n`, `α₀⁻¹n`): explicit-prefactor Airy
//!   formulas with the leading-order `γ²`
//! * **V** (oscillatory middle): `√(2/(nπ))·cos(n·h(φ₊) − π/4)` over
//!   `√a·[(α₀⁻¹−a)(a−α₀)]^{1/4}`
//! * **uniform Airy**: `±√(2|γ|/a)·|Δ|^{−1/4}·Ai(n^{2/3}γ²)/n^{1/3}` with the
//!   exact `γ³`-derived `γ²`, valid across both edges
//!
//! Adjacent formulas agree on shared points: II/III and VII/VIII are the same
//! expression in different coordinates (checked to 1e−6), and the Airy forms
//! reduce to their neighbors through the two Airy limit approximations.

use alloc::vec::Vec;

use crate::airy;
use crate::exact::{self, CoeffSequence};
use crate::fit::{fit_loglog, LineFit};
use crate::logspace::LogValue;
use crate::math;
use crate::param::{alpha0, BlaschkeParam, CoeffQuery};
use crate::region::{classify_region, ConfigError, Region, RegionLabel, Thresholds};
use crate::saddle::{
    blaschke, gamma_quantities, gamma_sq_leading_coef, h_func, varphi_plus, z_pm, EdgeSide,
    SaddleData, SaddleError,
};

use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum AsymError {
    /// Query does not satisfy the formula's regime precondition.
    WrongRegime {
        a: f64,
        expected: &'static str,
    },
    Saddle(SaddleError),
    Config(ConfigError),
}

impl fmt::Display for AsymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsymError::WrongRegime { a, expected } => {
                write!(f, "a = {a} is outside the formula's regime ({expected})")
            }
            AsymError::Saddle(e) => write!(f, "{e}"),
            AsymError::Config(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AsymError {}

impl From<SaddleError> for AsymError {
    fn from(e: SaddleError) -> Self {
        AsymError::Saddle(e)
    }
}

impl From<ConfigError> for AsymError {
    fn from(e: ConfigError) -> Self {
        AsymError::Config(e)
    }
}

fn sign_pow(n: u64, k: u64) -> i8 {
    if (n as i64 - k as i64).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Region I: `ĉ(k) ~ (−λ)^{n−k}(n(1−λ²))^k / k!` for fixed small `k`.
pub fn region_i(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let cap = math::powf(n as f64, 0.25).max(20.0);
    if k as f64 > cap {
        return Err(AsymError::WrongRegime {
            a: k as f64 / n as f64,
            expected: "k <= max(20, n^(1/4))",
        });
    }
    let ln = (n - k) as f64 * math::ln(lambda)
        + k as f64 * math::ln(n as f64 * (1.0 - lambda * lambda))
        - math::ln_factorial(k);
    Ok(LogValue::new(sign_pow(n, k), ln))
}

/// Regions II and VIII: first-order steepest descent through the real saddle.
///
/// The signed power `(b_λ(z₊)/z₊^a)^n` is `(−1)^{n−k}(|b|/|z₊|^a)^n` on the
/// left (where `z₊ < 0`) and plain positive on the right (`z₊ > 1`).
pub fn region_ii_viii(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if k == 0 || (a >= a0 && a <= 1.0 / a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "k >= 1 with a outside [alpha0, 1/alpha0]",
        });
    }
    let (zp, _) = z_pm(lambda, a)?;
    let b = blaschke(lambda, zp);
    let rate = math::ln(math::hypot(b.re, b.im)) - a * math::ln(math::abs(zp.re));
    let ln_amp = -0.5 * math::ln(2.0 * core::f64::consts::PI * k as f64)
        - 0.25 * math::ln(math::abs((a0 - a) * (1.0 / a0 - a)));
    let sign = if zp.re < 0.0 { sign_pow(n, k) } else { 1 };
    Ok(LogValue::new(sign, ln_amp + n as f64 * rate))
}

/// Region III: exponential decay towards the left edge, through the exact `γ³`.
pub fn region_iii(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if !(a > 0.0 && a < a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "0 < a < alpha0",
        });
    }
    edge_exponential(lambda, n, k, EdgeSide::LeftEdge)
}

/// Region VII: exponential decay past the right edge, through the exact `γ³`.
pub fn region_vii(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if !(a > 1.0 / a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "a > 1/alpha0",
        });
    }
    edge_exponential(lambda, n, k, EdgeSide::RightEdge)
}

fn edge_exponential(lambda: f64, n: u64, k: u64, side: EdgeSide) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    let gam = gamma_quantities(lambda, a, side)?;
    // γ³ is negative real out here
    let gamma3_abs = math::abs(gam.gamma_cubed.re);
    let ln_amp = -0.5 * math::ln(2.0 * core::f64::consts::PI * n as f64)
        - 0.5 * math::ln(a)
        - 0.25 * math::ln(math::abs((1.0 / a0 - a) * (a0 - a)));
    let sign = match side {
        EdgeSide::LeftEdge => sign_pow(n, k),
        _ => 1,
    };
    Ok(LogValue::new(
        sign,
        ln_amp - (2.0 / 3.0) * n as f64 * gamma3_abs,
    ))
}

/// Region V: stationary phase, `√(2/(nπ))·cos(n·h(φ₊) − π/4)` over the envelope.
pub fn region_v(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let env = region_v_envelope(lambda, n, k)?;
    let ph = varphi_plus(lambda, a)?;
    let h = h_func(lambda, a, ph);
    let c = math::cos(n as f64 * h - core::f64::consts::FRAC_PI_4);
    Ok(LogValue::from_f64(env * c))
}

/// The Region V amplitude without the cosine:
/// `√(2/(nπ)) / (√a·[(α₀⁻¹−a)(a−α₀)]^{1/4})`.
///
/// Relative error against the main term is meaningless at a cosine zero, so
/// error sweeps normalize by this envelope instead.
pub fn region_v_envelope(lambda: f64, n: u64, k: u64) -> Result<f64, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if !(a > a0 && a < 1.0 / a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "alpha0 < a < 1/alpha0",
        });
    }
    Ok(
        math::sqrt(2.0 / (n as f64 * core::f64::consts::PI))
            / (math::sqrt(a) * math::powf((1.0 / a0 - a) * (a - a0), 0.25)),
    )
}

/// Uniform Airy formula, valid across an edge:
/// `(±)√(2|γ|/a)·|Δ|^{−1/4}·Ai(n^{2/3}γ²)/n^{1/3}`, with the exact `γ²` and the
/// sign factor `(−1)^{n−k}` on the left side only.
pub fn airy_uniform(lambda: f64, n: u64, k: u64, side: EdgeSide) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let gam = gamma_quantities(lambda, a, side)?;
    let a0 = alpha0(lambda);
    let (edge, other) = match gam.side_used {
        EdgeSide::LeftEdge => (a0, 1.0 / a0 - a),
        _ => (1.0 / a0, a - a0),
    };
    let delta = (a - a0) * (1.0 / a0 - a);
    // |γ|²/|Δ| degenerates to 0/0 at the edge; both are linear in (a − edge).
    let ratio = if math::abs(a - edge) < 1e-13 {
        gamma_sq_leading_coef(lambda, gam.side_used) / other
    } else {
        math::abs(gam.gamma_sq / delta)
    };
    let amp = math::sqrt(2.0 / a) * math::powf(ratio, 0.25);
    let nf = n as f64;
    let ai = airy::ai(math::powf(nf, 2.0 / 3.0) * gam.gamma_sq);
    let sign = match gam.side_used {
        EdgeSide::LeftEdge => sign_pow(n, k),
        _ => 1,
    };
    let v = LogValue::from_f64(ai.ai)
        .mul(LogValue::from_f64(amp / math::cbrt(nf)))
        .mul(LogValue::new(sign, 0.0));
    Ok(v)
}

/// Region IV: explicit-prefactor Airy formula at the left edge,
/// `(−1)^{n−k}·√2·(1+λ)^{1/4}/(λ(1−λ))^{1/12} · Ai(n^{2/3}γ²)/(n^{1/3}√a(α₀⁻¹−a)^{1/4})`
/// with the leading-order `γ² = (α₀−a)(1+λ)/(λ(1−λ))^{1/3}`.
pub fn region_iv(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if !(a > 0.0 && a < 1.0 / a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "0 < a < 1/alpha0",
        });
    }
    let g2 = gamma_sq_leading_coef(lambda, EdgeSide::LeftEdge) * (a0 - a);
    let nf = n as f64;
    let ai = airy::ai(math::powf(nf, 2.0 / 3.0) * g2);
    let pre = core::f64::consts::SQRT_2 * math::powf(1.0 + lambda, 0.25)
        / math::powf(lambda * (1.0 - lambda), 1.0 / 12.0)
        / (math::cbrt(nf) * math::sqrt(a) * math::powf(1.0 / a0 - a, 0.25));
    Ok(LogValue::from_f64(ai.ai)
        .mul(LogValue::from_f64(pre))
        .mul(LogValue::new(sign_pow(n, k), 0.0)))
}

/// Region VI: the mirror-image formula at the right edge (no sign factor),
/// with `γ² = (a−α₀⁻¹)(1−λ)/(λ(1+λ))^{1/3}`.
pub fn region_vi(lambda: f64, n: u64, k: u64) -> Result<LogValue, AsymError> {
    let a = k as f64 / n as f64;
    let a0 = alpha0(lambda);
    if !(a > a0) {
        return Err(AsymError::WrongRegime {
            a,
            expected: "a > alpha0",
        });
    }
    let g2 = gamma_sq_leading_coef(lambda, EdgeSide::RightEdge) * (a - 1.0 / a0);
    let nf = n as f64;
    let ai = airy::ai(math::powf(nf, 2.0 / 3.0) * g2);
    let pre = core::f64::consts::SQRT_2 * math::powf(1.0 - lambda, 0.25)
        / math::powf(lambda * (1.0 + lambda), 1.0 / 12.0)
        / (math::cbrt(nf) * math::sqrt(a) * math::powf(a - a0, 0.25));
    Ok(LogValue::from_f64(ai.ai).mul(LogValue::from_f64(pre)))
}

/// The value of one dispatched asymptotic evaluation.
#[derive(Debug, Clone)]
pub struct AsymResult {
    /// Float view; may underflow to zero in the exponential bands.
    pub value: f64,
    /// Sign + log-magnitude view (always meaningful).
    pub log: LogValue,
    pub region: RegionLabel,
    /// Saddle geometry at `a = k/n`; absent at `k = 0`, where the saddle
    /// degenerates to the origin.
    pub ingredients: Option<SaddleData>,
    /// `n^{2/3}γ²` when an Airy formula fired.
    pub airy_arg: Option<f64>,
}

/// Classify and dispatch to the matching regional formula.
pub fn auto(query: &CoeffQuery, thresholds: &Thresholds) -> Result<AsymResult, AsymError> {
    let lambda = query.param.lambda_f64();
    let (n, k) = (query.n, query.k);
    let label = classify_region(query, thresholds)?;
    let log = match label.region {
        Region::I => region_i(lambda, n, k)?,
        Region::II | Region::VIII => region_ii_viii(lambda, n, k)?,
        Region::III => region_iii(lambda, n, k)?,
        Region::IV => region_iv(lambda, n, k)?,
        Region::V => region_v(lambda, n, k)?,
        Region::VI => region_vi(lambda, n, k)?,
        Region::VII => region_vii(lambda, n, k)?,
    };
    let a = query.ratio_f64();
    let side = if a < 1.0 {
        EdgeSide::LeftEdge
    } else {
        EdgeSide::RightEdge
    };
    let ingredients = if k > 0 {
        Some(SaddleData::compute(lambda, a, side)?)
    } else {
        None
    };
    let airy_arg = match label.region {
        Region::IV => Some(
            math::powf(n as f64, 2.0 / 3.0)
                * gamma_sq_leading_coef(lambda, EdgeSide::LeftEdge)
                * (alpha0(lambda) - a),
        ),
        Region::VI => Some(
            math::powf(n as f64, 2.0 / 3.0)
                * gamma_sq_leading_coef(lambda, EdgeSide::RightEdge)
                * (a - 1.0 / alpha0(lambda)),
        ),
        _ => None,
    };
    Ok(AsymResult {
        value: log.to_f64(),
        log,
        region: label,
        ingredients,
        airy_arg,
    })
}

/// One row of an exact-vs-asymptotic comparison.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub k: u64,
    pub region: Region,
    pub exact: f64,
    pub asym: f64,
    pub abs_err: f64,
    /// `NaN` when the exact value sits at the oracle's noise floor.
    pub rel_err: f64,
    /// Envelope-normalized error in Region V; equals `rel_err` elsewhere.
    pub env_err: f64,
}

/// Per-region error summary over one sweep.
#[derive(Debug, Clone, Copy)]
pub struct RegionSummary {
    pub region: Region,
    pub count: usize,
    pub max_rel: f64,
    pub median_rel: f64,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub n: u64,
    pub rows: Vec<SweepRow>,
    pub summaries: Vec<RegionSummary>,
}

/// Compare the dispatched asymptotics against the DFT oracle at each `k`.
///
/// Rows whose exact value lies below the oracle's noise floor get `NaN`
/// relative errors; the exponential tails should be compared in log space
/// against the rational oracle instead.
pub fn error_sweep(
    param: &BlaschkeParam,
    n: u64,
    ks: &[u64],
    thresholds: &Thresholds,
) -> Result<SweepReport, AsymError> {
    let lambda = param.lambda_f64();
    let seq = exact::coeff_dft_default(lambda, n).map_err(|_| AsymError::WrongRegime {
        a: 0.0,
        expected: "dft oracle available",
    })?;
    let noise = (seq.error_bound + 1e-15).max(1e-15) * 10.0;
    let mut rows = Vec::with_capacity(ks.len());
    for &k in ks {
        let query = CoeffQuery::new(param.clone(), n, k).expect("n >= 1");
        let res = auto(&query, thresholds)?;
        let exact = seq.values.get(k as usize).copied().unwrap_or(0.0);
        let abs_err = math::abs(res.value - exact);
        let rel_err = if math::abs(exact) > noise {
            abs_err / math::abs(exact)
        } else {
            f64::NAN
        };
        let env_err = match res.region.region {
            Region::V => region_v_envelope(lambda, n, k).map(|e| abs_err / e).unwrap_or(rel_err),
            _ => rel_err,
        };
        rows.push(SweepRow {
            k,
            region: res.region.region,
            exact,
            asym: res.value,
            abs_err,
            rel_err,
            env_err,
        });
    }
    let summaries = summarize(&rows);
    Ok(SweepReport { n, rows, summaries })
}

fn summarize(rows: &[SweepRow]) -> Vec<RegionSummary> {
    let mut out = Vec::new();
    for region in Region::ALL {
        let mut rels: Vec<f64> = rows
            .iter()
            .filter(|r| r.region == region && r.rel_err.is_finite())
            .map(|r| r.rel_err)
            .collect();
        if rels.is_empty() {
            continue;
        }
        rels.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.push(RegionSummary {
            region,
            count: rels.len(),
            max_rel: *rels.last().unwrap(),
            median_rel: rels[rels.len() / 2],
        });
    }
    out
}

/// Fit the decay exponent of the worst-case Region V error over an `n` ladder.
///
/// For each `n`, takes the max over `k/n ∈ band` of either the
/// envelope-normalized error (`envelope_normalized`) or the absolute error,
/// then fits `log(err)` against `log(n)`.
pub fn region_v_error_exponent(
    param: &BlaschkeParam,
    ns: &[u64],
    band: (f64, f64),
    envelope_normalized: bool,
) -> Result<(LineFit, Vec<f64>), AsymError> {
    let mut errs = Vec::with_capacity(ns.len());
    for &n in ns {
        let lo = (band.0 * n as f64).ceil() as u64;
        let hi = (band.1 * n as f64).floor() as u64;
        let ks: Vec<u64> = (lo..=hi).collect();
        let th = Thresholds::defaults(&CoeffQuery::new(param.clone(), n, 0).unwrap());
        let report = error_sweep(param, n, &ks, &th)?;
        let worst = report
            .rows
            .iter()
            .filter(|r| r.region == Region::V)
            .map(|r| if envelope_normalized { r.env_err } else { r.abs_err })
            .fold(0.0f64, f64::max);
        errs.push(worst);
    }
    let nsf: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    Ok((fit_loglog(&nsf, &errs), errs))
}

/// The DFT sequence used as the sweep's exact side, exposed so callers can
/// reuse it (building one per `n` is the dominant cost).
pub fn sweep_oracle(lambda: f64, n: u64) -> Result<CoeffSequence, exact::ExactError> {
    exact::coeff_dft_default(lambda, n)
}
