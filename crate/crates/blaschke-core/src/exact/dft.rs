//! Coefficient oracle by circle sampling.
//!
//! Sampling `b_λ(e^{2πij/M})^n` at `M` equispaced points and taking the
//! forward DFT yields the aliased coefficients `Σ_{m ≡ k (mod M)} ĉ(m)`. With
//! `M ≥ 8n` the alias tail starts at ratio `a = M/n ≥ 8`, deep in the
//! steepest-descent band where `|ĉ(m)| ≤ e^{n·ReΦ_{m/n}(z₊)}` decays
//! geometrically, so the aliasing error is quantifiable and tiny.
//!
//! `b_λ` is unimodular on the circle, so samples are generated in polar form
//! `e^{i n θ_b}` with `θ_b(t) = t + 2·arctan(λ sin t/(1 − λ cos t))`; this
//! keeps the sample magnitudes exactly 1 and makes the Parseval, `z = 1`, and
//! `z = −1` identities hold to roundoff by construction.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::dd::{dd_mul, dd_sub, ddc_div, ddc_pow, fft_inplace_dd, unit_root_powers, Dd, DdComplex};
use super::fft::{fft_inplace, is_pow2, next_pow2};
use super::rational::ExactError;
use super::{CoeffSequence, Provenance};
use crate::math;
use crate::saddle::{blaschke, z_pm};

/// Powers above this use the double-double FFT (tail coefficients of larger
/// powers drop below the `f64` accumulation floor).
pub const DD_THRESHOLD: u64 = 10_000;

/// All coefficients `ĉ(0..M−1)` of `b_λ^n` via an `M`-point DFT.
///
/// `M` must be a power of two and at least `4n`; the default choice is
/// [`coeff_dft_default`] with `M = next_pow2(8n)`.
pub fn coeff_dft(lambda: f64, n: u64, num_samples: usize) -> Result<CoeffSequence, ExactError> {
    let m = num_samples;
    if (m as u64) < 4 * n || !is_pow2(m) {
        return Err(ExactError::AliasingUncontrolled { m, n });
    }

    let values = if n > DD_THRESHOLD {
        sample_and_transform_dd(lambda, n, m)
    } else {
        sample_and_transform(lambda, n, m)
    };

    let error_bound = alias_bound(lambda, n, m) + 4e-16 * (m as f64).log2();
    Ok(CoeffSequence {
        lambda,
        n,
        values,
        provenance: Provenance::DftSampling,
        error_bound,
    })
}

/// `coeff_dft` with an automatic length: starts at `next_pow2(8n)` and doubles
/// until the aliasing bound drops below 1e−13 (small powers and `λ` near 1
/// need `M/n` well beyond 8 before the tail decays hard enough).
pub fn coeff_dft_default(lambda: f64, n: u64) -> Result<CoeffSequence, ExactError> {
    let mut m = next_pow2((8 * n).max(16) as usize);
    while alias_bound(lambda, n, m) > 1e-13 && m < (1 << 24) {
        m *= 2;
    }
    coeff_dft(lambda, n, m)
}

fn boundary_phase(lambda: f64, t: f64) -> f64 {
    t + 2.0 * math::atan(lambda * math::sin(t) / (1.0 - lambda * math::cos(t)))
}

fn sample_and_transform(lambda: f64, n: u64, m: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut data: Vec<Complex64> = (0..m)
        .map(|j| {
            let t = 2.0 * core::f64::consts::PI * j as f64 / m as f64;
            let ang = nf * boundary_phase(lambda, t);
            Complex64::new(math::cos(ang), math::sin(ang))
        })
        .collect();
    fft_inplace(&mut data);
    let scale = 1.0 / m as f64;
    data.iter().map(|c| c.re * scale).collect()
}

fn sample_and_transform_dd(lambda: f64, n: u64, m: usize) -> Vec<f64> {
    // dd-exact unit roots (binary powers of the Taylor seed), then
    // b(z)^n by complex dd division and square-and-multiply — every sample is
    // accurate to ~n·(dd ulp), far below the f64 floor
    let roots = unit_root_powers(m, m, true);
    let lam = Dd::from_f64(lambda);
    let mut data: Vec<DdComplex> = roots
        .into_iter()
        .map(|z| {
            let num = DdComplex {
                re: dd_sub(z.re, lam),
                im: z.im,
            };
            let den = DdComplex {
                re: dd_sub(Dd::ONE, dd_mul(lam, z.re)),
                im: {
                    let p = dd_mul(lam, z.im);
                    Dd {
                        hi: -p.hi,
                        lo: -p.lo,
                    }
                },
            };
            ddc_pow(ddc_div(num, den), n)
        })
        .collect();
    fft_inplace_dd(&mut data);
    let scale = 1.0 / m as f64;
    data.iter().map(|c| c.to_complex64().re * scale).collect()
}

/// Aliasing bound: twice the steepest-descent envelope at the first alias
/// ratio `a = M/n` (the factor 2 absorbs the geometric tail of later aliases).
fn alias_bound(lambda: f64, n: u64, m: usize) -> f64 {
    let a = m as f64 / n as f64;
    match z_pm(lambda, a) {
        Ok((zp, _)) if zp.im == 0.0 && zp.re > 1.0 => {
            let b = blaschke(lambda, zp);
            let rate = math::ln(b.re) - a * math::ln(zp.re);
            2.0 * math::exp(n as f64 * rate)
        }
        _ => 1.0, // not in the decay regime; caller already rejected M < 4n
    }
}
