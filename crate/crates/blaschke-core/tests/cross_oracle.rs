//! Cross-oracle agreement: the three coefficient oracles must agree wherever
//! their domains overlap, including the double-double path used for large
//! powers. Scaled-down here; the full grids run in the acceptance suite.

use blaschke_core::exact::{
    coeff_dft, coeff_dft_default, coeff_quadrature, coeff_rational, coeff_rational_with_limit,
};
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

#[test]
fn rational_vs_dft_grid() {
    for n in [1u64, 2, 5, 12, 24] {
        let seq = coeff_dft_default(0.5, n).unwrap();
        for k in 0..=(8 * n) {
            let exact = coeff_rational(&half(), n, k).unwrap().to_f64().unwrap();
            let got = seq.values[k as usize];
            assert!(
                (got - exact).abs() <= 1e-12,
                "n={n} k={k}: dft {got} vs rational {exact}"
            );
        }
    }
}

#[test]
fn rational_vs_quadrature_grid() {
    for n in [1u64, 3, 7, 16] {
        for k in (0..=(8 * n)).step_by(3) {
            let exact = coeff_rational(&half(), n, k).unwrap().to_f64().unwrap();
            let got = coeff_quadrature(0.5, n, k, 1e-10);
            assert!(
                (got.value - exact).abs() <= 1e-8,
                "n={n} k={k}: quad {} vs rational {exact}",
                got.value
            );
        }
    }
}

#[test]
fn quadrature_vs_dft_at_irrational_lambda() {
    // no rational oracle here; the two float paths must still agree
    let lambda = core::f64::consts::FRAC_1_SQRT_2 - 0.2; // ~0.507, not a ratio
    let n = 40u64;
    let seq = coeff_dft_default(lambda, n).unwrap();
    for k in (0..200).step_by(17) {
        let q = coeff_quadrature(lambda, n, k, 1e-10);
        assert!(
            (q.value - seq.values[k as usize]).abs() < 1e-9,
            "k={k}: {} vs {}",
            q.value,
            seq.values[k as usize]
        );
    }
}

#[test]
fn dd_dft_large_power_matches_rational() {
    // n > 10⁴ switches to the double-double transform; anchor it against the
    // exact oracle at a bulk index and at the right transition ratio
    let n = 20_000u64;
    let seq = coeff_dft(0.5, n, 262_144).unwrap();
    for k in [6_667u64, 60_000] {
        let exact = coeff_rational_with_limit(&half(), n, k, u128::MAX)
            .unwrap()
            .to_f64()
            .unwrap();
        let got = seq.values[k as usize];
        assert!(
            (got - exact).abs() <= 1e-15,
            "k={k}: dd-dft {got} vs rational {exact}"
        );
    }
}

#[test]
fn lambda_sweep_parseval_and_endpoints() {
    for lambda in [0.25f64, 0.5, 0.75] {
        for n in [10u64, 100] {
            let seq = coeff_dft_default(lambda, n).unwrap();
            assert!((seq.parseval_sum() - 1.0).abs() < 1e-12);
            assert!((seq.eval_at_one() - 1.0).abs() < 1e-12);
            let want = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((seq.eval_at_minus_one() - want).abs() < 1e-12);
        }
    }
}
