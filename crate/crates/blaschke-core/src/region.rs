//! Classifies a query `(λ, n, k)` into one of the eight asymptotic regions.
//!
//! With `α₀ = (1−λ)/(1+λ)` and a band half-width `ω` (growing faster than
//! `n^{1/3}` but `o(n)`), the `k`-axis splits into
//!
//! | band                                  | region | behavior                |
//! |---------------------------------------|--------|-------------------------|
//! | `[0, αn]`, `k` small                  | I      | factorial/exponential   |
//! | `[0, αn]`, `k → ∞`                    | II     | exponential (saddle)    |
//! | `(αn, α₀n − ω]`                       | III    | exponential (uniform)   |
//! | `[α₀n − ω, α₀n + ω]`                  | IV     | Airy, `O(n^{−1/3})`     |
//! | `[α₀n + ω, α₀⁻¹n − ω]`                | V      | oscillatory `O(n^{−1/2})`|
//! | `[α₀⁻¹n − ω, α₀⁻¹n + ω]`              | VI     | Airy, `O(n^{−1/3})`     |
//! | `[α₀⁻¹n + ω, α⁻¹n]`                   | VII    | exponential (uniform)   |
//! | `(α⁻¹n, ∞)`                           | VIII   | exponential (saddle)    |
//!
//! A `k` exactly on a shared edge goes to the lower-indexed region; adjacent
//! formulas agree there, so the tie-break only pins down determinism.

use core::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::math;
use crate::param::{cmp_ratio, CoeffQuery, Lambda};

/// The eight asymptotic bands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl Region {
    /// 1-based band index, increasing with `k`.
    pub fn index(self) -> u8 {
        match self {
            Region::I => 1,
            Region::II => 2,
            Region::III => 3,
            Region::IV => 4,
            Region::V => 5,
            Region::VI => 6,
            Region::VII => 7,
            Region::VIII => 8,
        }
    }

    pub const ALL: [Region; 8] = [
        Region::I,
        Region::II,
        Region::III,
        Region::IV,
        Region::V,
        Region::VI,
        Region::VII,
        Region::VIII,
    ];
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::I => "I",
            Region::II => "II",
            Region::III => "III",
            Region::IV => "IV",
            Region::V => "V",
            Region::VI => "VI",
            Region::VII => "VII",
            Region::VIII => "VIII",
        };
        f.write_str(s)
    }
}

/// Classifier thresholds `α ∈ (0, α₀)`, `β ∈ (α₀, 1)` and the Airy band
/// half-width `ω`.
///
/// `β` does not enter the band edges; it bounds where the uniform Airy formula
/// is trusted (`a ∈ [α, β] ∪ [β⁻¹, α⁻¹]`).
#[derive(Debug, Clone, PartialEq)]
pub struct Thresholds {
    pub alpha: Lambda,
    pub beta: Lambda,
    /// Band half-width `ω(n^{1/3})` in units of `k`.
    pub omega: f64,
}

/// Inconsistent thresholds (nesting of the band edges fails).
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub reason: &'static str,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inconsistent thresholds: {}", self.reason)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConfigError {}

impl Thresholds {
    /// Defaults: `α = α₀/2`, `β = (α₀+1)/2`, `ω = n^{1/3}·ln(max(n,3))` clamped
    /// so the band nesting stays valid at every `n` (the log-factor choice is
    /// the mildest growth beyond `n^{1/3}`; the clamp only binds at small `n`).
    pub fn defaults(query: &CoeffQuery) -> Self {
        let n = query.n;
        let nf = n as f64;
        let a0 = query.param.alpha0();
        let (alpha, beta) = match query.param.alpha0_rational() {
            Some(r) => {
                let two = BigRational::from_integer(2.into());
                (
                    Lambda::Rational(&r / &two),
                    Lambda::Rational((&r + BigRational::one()) / &two),
                )
            }
            None => (Lambda::Real(a0 / 2.0), Lambda::Real((a0 + 1.0) / 2.0)),
        };
        // largest ω the nesting tolerates, with a factor-2 safety margin
        let gap = (a0 / 2.0).min((1.0 / a0 - a0) / 2.0);
        let omega_raw = math::powf(nf, 1.0 / 3.0) * math::ln(nf.max(3.0));
        let omega = omega_raw.min(0.5 * gap * nf).max(f64::MIN_POSITIVE);
        Thresholds { alpha, beta, omega }
    }

    /// Check `0 < α < α₀ < β < 1` and the edge nesting
    /// `αn ≤ α₀n−ω ≤ α₀n+ω ≤ α₀⁻¹n−ω ≤ α₀⁻¹n+ω ≤ α⁻¹n`.
    pub fn validate(&self, query: &CoeffQuery) -> Result<(), ConfigError> {
        let a0 = query.param.alpha0();
        let alpha = self.alpha.as_f64();
        let beta = self.beta.as_f64();
        let nf = query.n as f64;
        if !(alpha > 0.0 && alpha < a0) {
            return Err(ConfigError {
                reason: "alpha must lie in (0, alpha0)",
            });
        }
        if !(beta > a0 && beta < 1.0) {
            return Err(ConfigError {
                reason: "beta must lie in (alpha0, 1)",
            });
        }
        if !(self.omega > 0.0) {
            return Err(ConfigError {
                reason: "omega must be positive",
            });
        }
        let w = self.omega;
        let ok = alpha * nf <= a0 * nf - w
            && a0 * nf + w <= nf / a0 - w
            && nf / a0 + w <= nf / alpha;
        if ok {
            Ok(())
        } else {
            Err(ConfigError {
                reason: "band edges are not nested for this n",
            })
        }
    }
}

/// A region decision together with the thresholds that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionLabel {
    pub region: Region,
    pub thresholds: Thresholds,
}

/// Route `(n, k)` to its asymptotic region.
///
/// Total on `k ∈ [0, ∞)`; rational `λ` makes the `αn` and `α⁻¹n` edges exact.
pub fn classify_region(query: &CoeffQuery, thresholds: &Thresholds) -> Result<RegionLabel, ConfigError> {
    thresholds.validate(query)?;
    let n = query.n;
    let k = query.k;
    let nf = n as f64;
    let kf = k as f64;
    let a0 = query.param.alpha0();
    let omega = thresholds.omega;

    // exact comparisons against α and α⁻¹ where λ is rational
    let le_alpha = ratio_le(k, n, &thresholds.alpha, false);
    let le_inv_alpha = ratio_le(k, n, &thresholds.alpha, true);

    let small_k_cap = math::powf(nf, 0.25).max(20.0);

    let region = if le_alpha && kf <= small_k_cap {
        Region::I
    } else if le_alpha {
        Region::II
    } else if kf <= a0 * nf - omega {
        Region::III
    } else if kf <= a0 * nf + omega {
        Region::IV
    } else if kf <= nf / a0 - omega {
        Region::V
    } else if kf <= nf / a0 + omega {
        Region::VI
    } else if le_inv_alpha {
        Region::VII
    } else {
        Region::VIII
    };

    Ok(RegionLabel {
        region,
        thresholds: thresholds.clone(),
    })
}

/// `k/n ≤ alpha` (or `≤ 1/alpha` when `inverse`), exact in the rational case.
fn ratio_le(k: u64, n: u64, alpha: &Lambda, inverse: bool) -> bool {
    match alpha {
        Lambda::Rational(r) => {
            let bound = if inverse {
                BigRational::one() / r
            } else {
                r.clone()
            };
            cmp_ratio(k, n, &bound) != core::cmp::Ordering::Greater
        }
        Lambda::Real(x) => {
            let bound = if inverse { 1.0 / x } else { *x };
            k as f64 / n as f64 <= bound
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::BlaschkeParam;

    fn q(n: u64, k: u64) -> CoeffQuery {
        CoeffQuery::new(BlaschkeParam::rational(1, 2).unwrap(), n, k).unwrap()
    }

    fn custom(alpha: f64, omega: f64) -> Thresholds {
        Thresholds {
            alpha: Lambda::Real(alpha),
            beta: Lambda::Real(2.0 / 3.0),
            omega,
        }
    }

    #[test]
    fn spec_examples() {
        // k=50 with α=0.1, ω=100 lands in the I-II band; k exceeds the
        // fixed-k cap so it resolves to II.
        let l = classify_region(&q(1000, 50), &custom(0.1, 100.0)).unwrap();
        assert_eq!(l.region, Region::II);

        let th = Thresholds::defaults(&q(1000, 0));
        let l = classify_region(&q(1000, 1000), &th).unwrap();
        assert_eq!(l.region, Region::V);

        let l = classify_region(&q(1000, 333), &custom(0.1, 100.0)).unwrap();
        assert_eq!(l.region, Region::IV);
    }

    #[test]
    fn small_k_is_region_one() {
        let th = Thresholds::defaults(&q(1000, 0));
        assert_eq!(classify_region(&q(1000, 0), &th).unwrap().region, Region::I);
        assert_eq!(classify_region(&q(1000, 20), &th).unwrap().region, Region::I);
        assert_eq!(classify_region(&q(1000, 21), &th).unwrap().region, Region::II);
    }

    #[test]
    fn boundary_goes_to_lower_region() {
        // α = 1/6 exactly (default for λ = 1/2); k = αn is still the I-II band.
        let query = q(1200, 200);
        let th = Thresholds::defaults(&query);
        assert_eq!(classify_region(&query, &th).unwrap().region, Region::II);
        assert_eq!(
            classify_region(&q(1200, 201), &th).unwrap().region,
            Region::III
        );
    }

    #[test]
    fn exact_transition_point_is_airy_band() {
        // k = α₀·n exactly
        let query = q(3000, 1000);
        let th = Thresholds::defaults(&query);
        assert_eq!(classify_region(&query, &th).unwrap().region, Region::IV);
        // k = n/α₀ exactly
        let query = q(3000, 9000);
        let th = Thresholds::defaults(&query);
        assert_eq!(classify_region(&query, &th).unwrap().region, Region::VI);
    }

    #[test]
    fn partition_is_total_and_monotone() {
        for n in [12u64, 100, 317, 2048] {
            let th = Thresholds::defaults(&q(n, 0));
            let mut last = 0u8;
            let hi = (7 * n).max(40);
            for k in 0..=hi {
                let label = classify_region(&q(n, k), &th).unwrap();
                let idx = label.region.index();
                assert!(
                    idx >= last || (idx == 2 && last == 1),
                    "region index regressed at n={n} k={k}"
                );
                if idx > last {
                    last = idx;
                }
            }
            // far tail is always VIII
            let label = classify_region(&q(n, 100 * n), &th).unwrap();
            assert_eq!(label.region, Region::VIII);
        }
    }

    #[test]
    fn defaults_remain_consistent_at_small_n() {
        // raw ω = n^{1/3}·ln n would break the nesting here; the clamp keeps it valid
        for n in [3u64, 10, 50, 100, 300] {
            let query = q(n, 0);
            let th = Thresholds::defaults(&query);
            th.validate(&query).unwrap();
        }
    }

    #[test]
    fn rejects_inconsistent_thresholds() {
        let query = q(100, 5);
        let bad = custom(0.3, 50.0); // ω too wide for the gap at n=100
        assert!(classify_region(&query, &bad).is_err());
        let bad = custom(0.5, 1.0); // α ≥ α₀
        assert!(classify_region(&query, &bad).is_err());
    }
}
