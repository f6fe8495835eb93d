//! Strongly annular coefficient sequences built from Blaschke-power blocks.
//!
//! A function analytic on the disk is strongly annular when its minimum
//! modulus on circles of radii → 1 is unbounded. The constructions here stack
//! shifted, weighted blocks `g_N = b_{1/2}^N`:
//!
//! ```text
//! f(z) = Σ_k  w_k · g_{N_k}(z) · z^{N_k},
//! ```
//!
//! with `N_k = A^k, w_k = A^{k·v_r}` (the `ℓ^q \ ℓ̃^p` gap construction) or
//! `N_k` chosen against a growth gauge `φ` with `w_k = A^k` (the
//! `ℓ²_φ \ ℓ̃²` construction). Block `k` dominates on the circle of radius
//! `1 − 1/N_k` when `A` is large enough; the verifier measures the minimum
//! modulus on those circles, the block dominance decomposition, and the
//! partial-sum trends of the `ℓ^q` and paired-min `ℓ^p` norms.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::exact::{coeff_dft, CoeffSequence, ExactError, Provenance};
use crate::exact::fft::{fft_inplace, next_pow2};
use crate::exact::rational::coeff_rational_log;
use crate::fit::fit_line;
use crate::math;
use crate::norms::{lp_norm_slice, paired_min_norm_slice};

use core::fmt;

/// Weight exponent `v_r`: `1/2 − 1/r` for `2 ≤ r < 4`, `1/3 − 1/(3r)` for `r > 4`.
pub fn v_r(r: f64) -> f64 {
    debug_assert!(r >= 2.0 && r != 4.0);
    if r < 4.0 {
        0.5 - 1.0 / r
    } else {
        1.0 / 3.0 - 1.0 / (3.0 * r)
    }
}

/// Norm gauge `u_p(N)` for `‖ĝ_N‖_p`: `N^{1/p−1/2}` for `2 ≤ p < 4`,
/// `(ln N)^{1/4}·N^{−1/4}` at `p = 4`, `N^{1/(3p)−1/3}` beyond.
pub fn u_p(n_block: u64, p: f64) -> f64 {
    debug_assert!(p >= 2.0 && n_block >= 2);
    let nf = n_block as f64;
    if p < 4.0 {
        math::powf(nf, 1.0 / p - 0.5)
    } else if p == 4.0 {
        math::powf(math::ln(nf), 0.25) * math::powf(nf, -0.25)
    } else {
        math::powf(nf, 1.0 / (3.0 * p) - 1.0 / 3.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnnularError {
    /// Mode parameters violate their constraints.
    BadSpec { reason: &'static str },
    /// `φ` constraint pushes a block size beyond the build budget.
    PhiConstraintInfeasible { level: u32, max_block: u64 },
    /// Truncated coefficients contribute too much at the requested radius.
    TruncationTooLarge { tail_bound: f64, min_found: f64 },
    /// Degree cap below the last block's support.
    DegreeCapTooSmall { required: u64 },
    Exact(ExactError),
}

impl fmt::Display for AnnularError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnularError::BadSpec { reason } => write!(f, "bad annular spec: {reason}"),
            AnnularError::PhiConstraintInfeasible { level, max_block } => write!(
                f,
                "phi constraint at level {level} needs a block beyond {max_block}"
            ),
            AnnularError::TruncationTooLarge {
                tail_bound,
                min_found,
            } => write!(
                f,
                "truncation tail {tail_bound:e} too large for minimum {min_found:e}"
            ),
            AnnularError::DegreeCapTooSmall { required } => {
                write!(f, "degree cap must be at least {required}")
            }
            AnnularError::Exact(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AnnularError {}

impl From<ExactError> for AnnularError {
    fn from(e: ExactError) -> Self {
        AnnularError::Exact(e)
    }
}

/// Which construction to build.
#[derive(Debug, Clone, PartialEq)]
pub enum AnnularMode {
    /// `f = Σ A^{k·v_r} g_{A^k}(z) z^{A^k}` with `r ∈ (p, q) \ {4}`:
    /// coefficients in `ℓ^q` but not in the paired-min class `ℓ̃^p`.
    LpGap { p: f64, q: f64, r: f64, base: u64 },
    /// `f = Σ A^k g_{N_k}(z) z^{N_k}` with `N_{k+1} ≥ A·N_k` and
    /// `φ(N_k^{1/4}) ≥ A^{3k}`: coefficients in `ℓ²_φ` but not in `ℓ̃²`.
    PhiGap { base: u64, blocks: Vec<u64> },
}

/// A validated construction schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnularSpec {
    pub mode: AnnularMode,
    pub levels: u32,
}

/// One scheduled block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockLevel {
    pub level: u32,
    pub n_block: u64,
    pub weight: f64,
    pub shift: u64,
    /// Radius of the circle this block is meant to dominate.
    pub radius: f64,
}

impl AnnularSpec {
    pub fn lp_gap(p: f64, q: f64, r: f64, base: u64, levels: u32) -> Result<Self, AnnularError> {
        if !(2.0 <= p && p < q) {
            return Err(AnnularError::BadSpec {
                reason: "need 2 <= p < q",
            });
        }
        if !(p < r && r < q && r != 4.0) {
            return Err(AnnularError::BadSpec {
                reason: "need r in (p, q) with r != 4",
            });
        }
        if base < 2 {
            return Err(AnnularError::BadSpec { reason: "base A must be >= 2" });
        }
        Ok(AnnularSpec {
            mode: AnnularMode::LpGap { p, q, r, base },
            levels,
        })
    }

    /// Select `N_k` for the `φ`-gauge construction: the smallest power of two
    /// meeting both `N_k ≥ A·N_{k−1}` and `min_{[N_k^{1/4}, ∞)} φ ≥ A^{3k}`
    /// (for increasing `φ` the min sits at the left endpoint).
    ///
    /// Slowly growing gauges (e.g. `φ = log`) demand astronomically large first
    /// blocks; those schedules are reported as infeasible rather than built.
    pub fn phi_gap<F: Fn(f64) -> f64>(
        phi: F,
        base: u64,
        levels: u32,
        max_block: u64,
    ) -> Result<Self, AnnularError> {
        if base < 2 {
            return Err(AnnularError::BadSpec { reason: "base A must be >= 2" });
        }
        let mut blocks = Vec::with_capacity(levels as usize);
        let mut prev = 0u64;
        for level in 1..=levels {
            let target = math::powf(base as f64, 3.0 * level as f64);
            let mut n = next_pow2((base.saturating_mul(prev)).max(16) as usize) as u64;
            loop {
                if n > max_block {
                    return Err(AnnularError::PhiConstraintInfeasible { level, max_block });
                }
                if phi(math::powf(n as f64, 0.25)) >= target {
                    break;
                }
                n *= 2;
            }
            blocks.push(n);
            prev = n;
        }
        Ok(AnnularSpec {
            mode: AnnularMode::PhiGap { base, blocks },
            levels,
        })
    }

    /// The per-level blocks, weights, shifts and target radii.
    pub fn schedule(&self) -> Vec<BlockLevel> {
        match &self.mode {
            AnnularMode::LpGap { r, base, .. } => {
                let vr = v_r(*r);
                (1..=self.levels)
                    .map(|level| {
                        let n_block = base.pow(level);
                        BlockLevel {
                            level,
                            n_block,
                            weight: math::powf(*base as f64, level as f64 * vr),
                            shift: n_block,
                            radius: 1.0 - 1.0 / n_block as f64,
                        }
                    })
                    .collect()
            }
            AnnularMode::PhiGap { base, blocks } => blocks
                .iter()
                .enumerate()
                .map(|(i, &n_block)| BlockLevel {
                    level: i as u32 + 1,
                    n_block,
                    weight: math::powf(*base as f64, i as f64 + 1.0),
                    shift: n_block,
                    radius: 1.0 - 1.0 / n_block as f64,
                })
                .collect(),
        }
    }

    /// Smallest degree cap that keeps every block's truncation negligible.
    pub fn required_degree_cap(&self) -> u64 {
        self.schedule()
            .last()
            .map(|b| b.shift + 4 * b.n_block)
            .unwrap_or(0)
    }
}

/// Assemble the truncated coefficient sequence of the construction.
///
/// Block coefficients come from the DFT oracle; the returned `error_bound`
/// accumulates each block's aliasing bound plus the weighted tail beyond the
/// cap, and `n` records the largest block size.
pub fn build_annular(spec: &AnnularSpec, degree_cap: u64) -> Result<CoeffSequence, AnnularError> {
    let schedule = spec.schedule();
    if let Some(_last) = schedule.last() {
        let required = spec.required_degree_cap();
        if degree_cap < required {
            return Err(AnnularError::DegreeCapTooSmall { required });
        }
    }
    let mut values = alloc::vec![0.0f64; degree_cap as usize + 1];
    let mut err = 0.0f64;
    let mut max_block = 1u64;
    for b in &schedule {
        let m = next_pow2((8 * b.n_block).max(16) as usize);
        let block = coeff_dft(0.5, b.n_block, m)?;
        max_block = max_block.max(b.n_block);
        err += b.weight * block.error_bound;
        let keep = (degree_cap + 1).saturating_sub(b.shift) as usize;
        for (i, v) in block.values.iter().take(keep).enumerate() {
            values[b.shift as usize + i] += b.weight * v;
        }
        if block.values.len() > keep {
            // weighted tail dropped beyond the cap
            let tail: f64 = block.values[keep..].iter().map(|v| math::abs(*v)).sum();
            err += b.weight * tail;
        }
    }
    Ok(CoeffSequence {
        lambda: 0.5,
        n: max_block,
        values,
        provenance: Provenance::DftSampling,
        error_bound: err,
    })
}

/// Result of a minimum-modulus search on one circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinModulus {
    pub value: f64,
    /// Angle (radians) where the refined minimum was found.
    pub angle: f64,
    pub samples: usize,
}

/// Minimum of `|Σ c_k z^k|` over `samples` equispaced points on the circle of
/// the given radius, followed by two local refinement rounds (×10 subdivision
/// around the running minimizer).
///
/// The equispaced pass folds `c_k·radius^k` modulo `samples` and evaluates all
/// points with one FFT (identical values to pointwise Horner, since
/// `ω^k = ω^{k mod M}`); the refinement pass evaluates the full series by
/// Horner at off-grid angles. Refuses when the sequence's truncation bound is
/// not negligible against the found minimum.
pub fn min_modulus_on_circle(
    seq: &CoeffSequence,
    radius: f64,
    samples: usize,
) -> Result<MinModulus, AnnularError> {
    debug_assert!(radius > 0.0 && radius < 1.0);
    let m = next_pow2(samples.max(16));
    let ln_r = math::ln_1p(radius - 1.0);
    let mut folded = alloc::vec![Complex64::new(0.0, 0.0); m];
    for (k, &c) in seq.values.iter().enumerate() {
        let scaled = c * math::exp(k as f64 * ln_r);
        folded[k % m].re += scaled;
    }
    fft_inplace(&mut folded);
    let mut best = (f64::INFINITY, 0usize);
    for (j, v) in folded.iter().enumerate() {
        let a = math::hypot(v.re, v.im);
        if a < best.0 {
            best = (a, j);
        }
    }
    // FFT evaluates at e^{−2πij/m}
    let mut angle = -2.0 * core::f64::consts::PI * best.1 as f64 / m as f64;
    let mut value = best.0;
    let mut step = 2.0 * core::f64::consts::PI / m as f64;
    for _round in 0..2 {
        for i in 0..21 {
            let t = angle + step * (i as f64 - 10.0) / 10.0;
            let v = horner_modulus(&seq.values, radius, t);
            if v < value {
                value = v;
                angle = t;
            }
        }
        step /= 10.0;
    }
    if seq.error_bound > 0.05 * value {
        return Err(AnnularError::TruncationTooLarge {
            tail_bound: seq.error_bound,
            min_found: value,
        });
    }
    Ok(MinModulus {
        value,
        angle,
        samples: m,
    })
}

fn horner_modulus(values: &[f64], radius: f64, angle: f64) -> f64 {
    let z = Complex64::new(radius * math::cos(angle), radius * math::sin(angle));
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in values.iter().rev() {
        acc = acc * z + c;
    }
    math::hypot(acc.re, acc.im)
}

/// Lemma-style health report for a single block `g_N = b_{1/2}^N`.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub n_block: u64,
    /// Max of `|g_N|` sampled on the unit circle (identically 1 in theory).
    pub sup_on_circle: f64,
    /// Min modulus on the circle of radius `1 − 1/N` (≥ `e^{−4}` for `N ≥ 10`).
    pub min_inner_circle: f64,
    /// The same minimum from the closed form `((r−λ)/(1−λr))^N`, as a witness.
    pub min_closed_form: f64,
    /// Fitted per-`k` decay rate of `ln|ĉ(k)|` over `k ∈ [4N, 8N]` (exact
    /// oracle on a strided grid) and the fit's `R²`.
    pub tail_rate: f64,
    pub tail_r_squared: f64,
    /// `‖ĉ‖_∞ · √N`.
    pub sup_coeff_scaled: f64,
    /// `(p, ‖ĉ‖_p/u_p(N), paired_min_p/u_p(N))` for `p ∈ {2, 3, 4, 6}`.
    pub norm_ratios: Vec<(f64, f64, f64)>,
}

/// Verify the block properties of `g_N` used by the annular constructions.
pub fn lemma1_verify(n_block: u64) -> Result<BlockReport, AnnularError> {
    debug_assert!(n_block >= 10);
    let m = next_pow2((8 * n_block) as usize);
    let seq = coeff_dft(0.5, n_block, m)?;

    // (i) |g_N| = 1 on the unit circle — sample the closed form |b|^N
    let mut sup = 0.0f64;
    for j in 0..1024 {
        let t = 2.0 * core::f64::consts::PI * j as f64 / 1024.0;
        let b = crate::saddle::blaschke(0.5, Complex64::new(math::cos(t), math::sin(t)));
        sup = sup.max(math::powf(math::hypot(b.re, b.im), n_block as f64));
    }

    // (ii) minimum on the inner circle
    let radius = 1.0 - 1.0 / n_block as f64;
    let min = min_modulus_on_circle(&seq, radius, 1 << 14)?;
    let closed = math::powf((radius - 0.5) / (1.0 - 0.5 * radius), n_block as f64);

    // (iii) exponential tail over [4N, 8N], exact oracle on a strided grid
    let half = num_rational::BigRational::new(1.into(), 2.into());
    let mut ks = Vec::new();
    let mut lns = Vec::new();
    let steps = 32u64;
    for i in 0..=steps {
        let k = 4 * n_block + (4 * n_block * i) / steps;
        let lv = coeff_rational_log(&half, n_block, k, u128::MAX)?;
        if lv.sign != 0 {
            ks.push(k as f64);
            lns.push(lv.ln_abs);
        }
    }
    let tail_fit = fit_line(&ks, &lns);

    // (iv) and (v)
    let sup_coeff = seq
        .values
        .iter()
        .fold(0.0f64, |mx, v| mx.max(math::abs(*v)));
    let mut norm_ratios = Vec::new();
    for p in [2.0, 3.0, 4.0, 6.0] {
        let lp = lp_norm_slice(&seq.values, p);
        let pm = paired_min_norm_slice(&seq.values, p);
        let gauge = u_p(n_block, p);
        norm_ratios.push((p, lp / gauge, pm / gauge));
    }

    Ok(BlockReport {
        n_block,
        sup_on_circle: sup,
        min_inner_circle: min.value,
        min_closed_form: closed,
        tail_rate: -tail_fit.slope,
        tail_r_squared: tail_fit.r_squared,
        sup_coeff_scaled: sup_coeff * math::sqrt(n_block as f64),
        norm_ratios,
    })
}

/// Per-circle annular verification data.
#[derive(Debug, Clone, Copy)]
pub struct CircleMin {
    pub level: u32,
    pub radius: f64,
    pub min_modulus: f64,
    /// The triangle-inequality dominance bound
    /// `e^{−6}·w_k − Σ_{s<k} w_s − Σ_{s>k} w_s·e^{−N_s/N_k}` (may be negative
    /// at desk scale; reported, not asserted).
    pub predicted_lower_bound: f64,
    /// The growth gauge `w_k` this minimum is measured against.
    pub scale: f64,
}

/// Partial-sum trends of the assembled sequence, one entry per level.
#[derive(Debug, Clone, Default)]
pub struct TailNorms {
    /// `‖·‖_q^q` partial sums (LpGap) — increments should decay geometrically.
    pub lq_partial: Vec<f64>,
    /// Paired-min `‖·‖_p^p` partial sums — increments should grow without bound.
    pub paired_min_lp_partial: Vec<f64>,
    /// `Σ |c|²/φ(1/|c|)` partial sums (PhiGap) — should stay summable.
    pub l2phi_partial: Vec<f64>,
}

/// Boolean verdicts over the measured trends.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnnularVerdicts {
    pub minima_strictly_increasing: bool,
    /// `max/min` of `min_modulus/scale` across the checked levels.
    pub ratio_spread: f64,
    pub lq_increments_decreasing: bool,
    pub paired_min_increments_increasing: bool,
}

#[derive(Debug, Clone)]
pub struct AnnularReport {
    pub spec: AnnularSpec,
    pub circle_minima: Vec<CircleMin>,
    pub tail_norms: TailNorms,
    pub verdicts: AnnularVerdicts,
}

/// Build the construction and measure it level by level.
///
/// Circle sampling density follows the block bandwidth (16 samples per unit of
/// `5·N_k`, at least `2^14`), with local Horner refinement on top.
pub fn annular_verify(
    spec: &AnnularSpec,
    levels_checked: u32,
) -> Result<AnnularReport, AnnularError> {
    let schedule = spec.schedule();
    let levels_checked = levels_checked.min(spec.levels);
    let cap = spec.required_degree_cap() + schedule.last().map(|b| 2 * b.n_block).unwrap_or(0);
    let full = build_annular(spec, cap)?;

    let mut circle_minima = Vec::new();
    for b in schedule.iter().take(levels_checked as usize) {
        let samples = ((16 * 5 * b.n_block) as usize).max(1 << 14);
        let min = min_modulus_on_circle(&full, b.radius, samples)?;
        let mut bound = math::exp(-6.0) * b.weight;
        for other in &schedule {
            if other.level < b.level {
                bound -= other.weight;
            } else if other.level > b.level {
                bound -= other.weight
                    * math::exp(-(other.n_block as f64) / b.n_block as f64);
            }
        }
        circle_minima.push(CircleMin {
            level: b.level,
            radius: b.radius,
            min_modulus: min.value,
            predicted_lower_bound: bound,
            scale: b.weight,
        });
    }

    // partial norms over cumulative assemblies
    let mut tail = TailNorms::default();
    for upto in 1..=spec.levels {
        let partial_spec = AnnularSpec {
            mode: spec.mode.clone(),
            levels: upto,
        };
        let pseq = build_annular(&partial_spec, cap)?;
        match &spec.mode {
            AnnularMode::LpGap { p, q, .. } => {
                tail.lq_partial
                    .push(math::powf(lp_norm_slice(&pseq.values, *q), *q));
                tail.paired_min_lp_partial
                    .push(math::powf(paired_min_norm_slice(&pseq.values, *p), *p));
            }
            AnnularMode::PhiGap { .. } => {
                tail.paired_min_lp_partial
                    .push(math::powf(paired_min_norm_slice(&pseq.values, 2.0), 2.0));
                tail.lq_partial.push(pseq.parseval_sum());
            }
        }
    }

    let verdicts = AnnularVerdicts {
        minima_strictly_increasing: circle_minima
            .windows(2)
            .all(|w| w[0].min_modulus < w[1].min_modulus),
        ratio_spread: {
            let ratios: Vec<f64> = circle_minima
                .iter()
                .map(|c| c.min_modulus / c.scale)
                .collect();
            let mx = ratios.iter().fold(0.0f64, |a, &b| a.max(b));
            let mn = ratios.iter().fold(f64::INFINITY, |a, &b| a.min(b));
            mx / mn
        },
        lq_increments_decreasing: increments(&tail.lq_partial)
            .windows(2)
            .all(|w| w[1] < w[0]),
        paired_min_increments_increasing: increments(&tail.paired_min_lp_partial)
            .windows(2)
            .all(|w| w[1] > w[0]),
    };

    Ok(AnnularReport {
        spec: spec.clone(),
        circle_minima,
        tail_norms: tail,
        verdicts,
    })
}

fn increments(partials: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(partials.len());
    let mut prev = 0.0;
    for &v in partials {
        out.push(v - prev);
        prev = v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn weight_exponents() {
        assert_eq!(v_r(2.0), 0.0);
        assert!((v_r(6.0) - 5.0 / 18.0).abs() < 1e-15);
        assert!((v_r(2.5) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn norm_gauges() {
        assert_eq!(u_p(512, 2.0), 1.0);
        assert!((u_p(100, 3.0) - (100.0f64).powf(1.0 / 3.0 - 0.5)).abs() < 1e-15);
        let u4 = u_p(100, 4.0);
        assert!((u4 - (100.0f64).ln().powf(0.25) * (100.0f64).powf(-0.25)).abs() < 1e-15);
    }

    #[test]
    fn lp_gap_schedule_single_level() {
        // base 4 with one level: weight 4^{v_{2.5}} = 4^{0.1}, shift 4
        let spec = AnnularSpec::lp_gap(2.0, 3.0, 2.5, 4, 1).unwrap();
        let sched = spec.schedule();
        assert_eq!(sched.len(), 1);
        assert_eq!(sched[0].n_block, 4);
        assert_eq!(sched[0].shift, 4);
        assert!((sched[0].weight - math::powf(4.0, 0.1)).abs() < 1e-15);
    }

    #[test]
    fn zero_levels_build_empty() {
        let spec = AnnularSpec::lp_gap(2.0, 3.0, 2.5, 4, 0).unwrap();
        let seq = build_annular(&spec, 0).unwrap();
        assert!(seq.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(AnnularSpec::lp_gap(3.0, 2.0, 2.5, 4, 1).is_err());
        assert!(AnnularSpec::lp_gap(2.0, 6.0, 4.0, 4, 1).is_err()); // r = 4
        assert!(AnnularSpec::lp_gap(2.0, 3.0, 5.0, 4, 1).is_err()); // r outside
    }

    #[test]
    fn phi_gap_selection_feasible_gauge() {
        // fast gauge: φ(x) = e^x ⇒ N_k = ((3k)·ln A)⁴-ish, small
        let spec = AnnularSpec::phi_gap(|x| math::exp(x), 4, 3, 1 << 30).unwrap();
        if let AnnularMode::PhiGap { blocks, .. } = &spec.mode {
            assert_eq!(blocks.len(), 3);
            for w in blocks.windows(2) {
                assert!(w[1] >= 4 * w[0], "N_{{k+1}} >= A N_k violated: {w:?}");
            }
        } else {
            panic!("wrong mode");
        }
    }

    #[test]
    fn phi_gap_slow_gauge_is_infeasible_at_desk_scale() {
        // φ(x) = ln(1+x) needs N₁ ≈ (e^{A³})⁴ ≈ 10^111 for A = 4
        let err = AnnularSpec::phi_gap(|x| math::ln_1p(x), 4, 2, 1 << 40).unwrap_err();
        matches!(err, AnnularError::PhiConstraintInfeasible { level: 1, .. });
    }

    #[test]
    fn min_modulus_constant_one() {
        let seq = CoeffSequence {
            lambda: 0.5,
            n: 1,
            values: vec![1.0],
            provenance: Provenance::DftSampling,
            error_bound: 0.0,
        };
        let m = min_modulus_on_circle(&seq, 0.9, 64).unwrap();
        assert!((m.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn min_modulus_invariant_to_appended_zeros() {
        let mut seq = coeff_dft(0.5, 64, 512).unwrap();
        seq.error_bound = 0.0;
        let base = min_modulus_on_circle(&seq, 1.0 - 1.0 / 64.0, 1 << 12).unwrap();
        seq.values.extend([0.0; 333]);
        let padded = min_modulus_on_circle(&seq, 1.0 - 1.0 / 64.0, 1 << 12).unwrap();
        assert!((base.value - padded.value).abs() < 1e-12);
    }

    #[test]
    fn min_modulus_matches_closed_form_for_single_block() {
        // |g_N| on the circle of radius r has closed-form minimum ((r−λ)/(1−λr))^N
        let n = 128u64;
        let seq = coeff_dft(0.5, n, 2048).unwrap();
        let r = 1.0 - 1.0 / n as f64;
        let m = min_modulus_on_circle(&seq, r, 1 << 13).unwrap();
        let closed = math::powf((r - 0.5) / (1.0 - 0.5 * r), n as f64);
        assert!((m.value - closed).abs() / closed < 1e-6);
    }

    #[test]
    fn lemma1_block_report_n512() {
        let rep = lemma1_verify(512).unwrap();
        assert!((rep.sup_on_circle - 1.0).abs() < 1e-12);
        assert!(rep.min_inner_circle >= math::exp(-4.0));
        assert!((rep.min_inner_circle - rep.min_closed_form).abs() / rep.min_closed_form < 1e-4);
        assert!(rep.tail_rate > 0.0);
        assert!(rep.tail_r_squared > 0.99);
        assert!(rep.sup_coeff_scaled > 0.1 && rep.sup_coeff_scaled < 10.0);
    }
}
