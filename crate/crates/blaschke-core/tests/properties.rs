//! Property tests for the structural invariants.

use blaschke_core::annular::min_modulus_on_circle;
use blaschke_core::exact::{coeff_dft_default, duality_check, CoeffSequence, Provenance};
use blaschke_core::norms::{lp_norm, paired_min_norm};
use blaschke_core::param::{reduce_phase, BlaschkeParam, CoeffQuery};
use blaschke_core::region::{classify_region, Thresholds};
use blaschke_core::saddle::z_pm;
use num_complex::Complex64;
use proptest::prelude::*;

fn seq_from(values: Vec<f64>) -> CoeffSequence {
    CoeffSequence {
        lambda: 0.5,
        n: 1,
        values,
        provenance: Provenance::DftSampling,
        error_bound: 0.0,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classifier_is_total_and_bands_are_ordered(
        num in 1i64..6,
        den in 7i64..12,
        n in 1u64..3000,
        k in 0u64..30000,
    ) {
        let param = BlaschkeParam::rational(num, den).unwrap();
        let th = Thresholds::defaults(&CoeffQuery::new(param.clone(), n, 0).unwrap());
        let q = CoeffQuery::new(param.clone(), n, k).unwrap();
        let label = classify_region(&q, &th).unwrap();
        // neighbors never regress by more than the I→II split
        if k > 0 {
            let prev = classify_region(
                &CoeffQuery::new(param, n, k - 1).unwrap(), &th).unwrap();
            prop_assert!(label.region.index() >= prev.region.index());
        }
    }

    #[test]
    fn saddles_are_conjugate_or_reciprocal(
        lambda in 0.05f64..0.95,
        a in 0.01f64..50.0,
    ) {
        let (zp, zm) = z_pm(lambda, a).unwrap();
        let a0 = (1.0 - lambda) / (1.0 + lambda);
        if a > a0 && a < 1.0 / a0 {
            prop_assert!((zp - zm.conj()).norm() < 1e-12);
            prop_assert!((zp.norm() - 1.0).abs() < 1e-10);
        } else {
            prop_assert!((zp * zm - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn paired_min_is_dominated(values in prop::collection::vec(-2.0f64..2.0, 2..60), p in 0.5f64..6.0) {
        let seq = seq_from(values);
        let pm = paired_min_norm(&seq, p);
        let lp = lp_norm(&seq, p);
        prop_assert!(pm <= 2.0f64.powf(1.0 / p) * lp + 1e-12);
    }

    #[test]
    fn min_modulus_ignores_trailing_zeros(
        values in prop::collection::vec(-1.0f64..1.0, 1..40),
        pad in 1usize..200,
        radius in 0.2f64..0.95,
    ) {
        let base = seq_from(values.clone());
        let mut padded_values = values;
        padded_values.extend(std::iter::repeat(0.0).take(pad));
        let padded = seq_from(padded_values);
        let a = min_modulus_on_circle(&base, radius, 256).unwrap();
        let b = min_modulus_on_circle(&padded, radius, 256).unwrap();
        prop_assert!((a.value - b.value).abs() <= 1e-12 * (1.0 + a.value));
    }

    #[test]
    fn duality_identity_random_pairs(n in 1u64..30, k in 1u64..30) {
        let d = duality_check(0.5, n, k, 1e-10);
        prop_assert!(d.residual <= 1e-8, "(n,k)=({n},{k}): {}", d.residual);
    }
}

#[test]
fn reduce_phase_consistent_with_series_expansion() {
    // ĉ_λ(k) = ĉ_{|λ|}(k)·e^{i(n−k)arg λ}, cross-checked against a direct
    // power-series expansion of b_λ^n for complex λ, n ≤ 8
    let lambdas = [
        Complex64::new(0.0, 0.5),
        Complex64::new(-0.5, 0.0),
        Complex64::new(0.3, 0.4),
        Complex64::new(-0.2, -0.6),
    ];
    for &lam in &lambdas {
        for n in 1u64..=8 {
            let direct = series_coeffs(lam, n, 40);
            let (modulus, _) = reduce_phase(lam, n, 0).unwrap();
            let real_seq = coeff_dft_default(modulus, n).unwrap();
            for k in 0..=32u64 {
                let (_, phase) = reduce_phase(lam, n, k).unwrap();
                let predicted = phase * real_seq.values[k as usize];
                let got = direct[k as usize];
                assert!(
                    (predicted - got).norm() < 1e-12,
                    "λ={lam} n={n} k={k}: {predicted} vs {got}"
                );
            }
        }
    }
}

/// Direct expansion of `b_λ(z)^n = ((z−λ)(1−λ̄z)^{-1})^n` truncated at degree `len`.
fn series_coeffs(lambda: Complex64, n: u64, len: usize) -> Vec<Complex64> {
    // geometric series for (1−λ̄z)^{-1}
    let mut geo = vec![Complex64::new(0.0, 0.0); len + 1];
    let mut pow = Complex64::new(1.0, 0.0);
    for g in geo.iter_mut() {
        *g = pow;
        pow *= lambda.conj();
    }
    // one factor: (z−λ)·geo
    let mut factor = vec![Complex64::new(0.0, 0.0); len + 1];
    for k in 0..=len {
        let mut v = -lambda * geo[k];
        if k > 0 {
            v += geo[k - 1];
        }
        factor[k] = v;
    }
    // n-fold truncated convolution
    let mut acc = vec![Complex64::new(0.0, 0.0); len + 1];
    acc[0] = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        let mut next = vec![Complex64::new(0.0, 0.0); len + 1];
        for i in 0..=len {
            if acc[i].norm() == 0.0 {
                continue;
            }
            for j in 0..=(len - i) {
                next[i + j] += acc[i] * factor[j];
            }
        }
        acc = next;
    }
    acc
}
