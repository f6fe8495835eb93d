//! Double-double arithmetic and a matching FFT, for circle sampling at powers
//! `n > 10⁴` where tail coefficients sit near the `f64` roundoff floor.
//!
//! A `Dd` is an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`, giving ~31
//! significant digits. Twiddle factors are generated from a Taylor-series
//! seed `e^{−2πi/M}` (the angle is tiny for the sizes in play, so a short
//! Taylor sum is exact to dd precision) and assembled per index by binary
//! powering, which keeps every twiddle accurate to a few dd ulps.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math;

/// Unevaluated double-double sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, math::fma(a, b, -p))
}

pub(crate) fn dd_add(a: Dd, b: Dd) -> Dd {
    let (s, e) = two_sum(a.hi, b.hi);
    let e = e + a.lo + b.lo;
    let (hi, lo) = quick_two_sum(s, e);
    Dd { hi, lo }
}

pub(crate) fn dd_sub(a: Dd, b: Dd) -> Dd {
    dd_add(
        a,
        Dd {
            hi: -b.hi,
            lo: -b.lo,
        },
    )
}

pub(crate) fn dd_mul(a: Dd, b: Dd) -> Dd {
    let (p, e) = two_prod(a.hi, b.hi);
    let e = e + a.hi * b.lo + a.lo * b.hi;
    let (hi, lo) = quick_two_sum(p, e);
    Dd { hi, lo }
}

pub(crate) fn dd_mul_f64(a: Dd, b: f64) -> Dd {
    let (p, e) = two_prod(a.hi, b);
    let e = e + a.lo * b;
    let (hi, lo) = quick_two_sum(p, e);
    Dd { hi, lo }
}

/// `a / b` by three steps of long division.
pub(crate) fn dd_div(a: Dd, b: Dd) -> Dd {
    let q1 = a.hi / b.hi;
    let r = dd_sub(a, dd_mul_f64(b, q1));
    let q2 = r.hi / b.hi;
    let r = dd_sub(r, dd_mul_f64(b, q2));
    let q3 = r.hi / b.hi;
    let (hi, lo) = quick_two_sum(q1, q2);
    dd_add(Dd { hi, lo }, Dd::from_f64(q3))
}

/// `2π` split into two doubles.
const TWO_PI: Dd = Dd {
    hi: 6.283185307179586,
    lo: 2.4492935982947064e-16,
};

/// `sin`/`cos` of a tiny angle (|θ| < 1e−2) by Taylor series in dd.
fn dd_sincos_small(theta: Dd) -> (Dd, Dd) {
    let t2 = dd_mul(theta, theta);
    // sin: θ(1 − θ²/6(1 − θ²/20(1 − θ²/42(1 − θ²/72)))…)
    let mut sin_poly = Dd::ONE;
    let mut cos_poly = Dd::ONE;
    // enough terms for |θ| ≤ 1e−2 at 1e−35 accuracy
    for &d in &[110.0f64, 72.0, 42.0, 20.0, 6.0] {
        sin_poly = dd_sub(Dd::ONE, dd_div(dd_mul(t2, sin_poly), Dd::from_f64(d)));
    }
    for &d in &[90.0f64, 56.0, 30.0, 12.0, 2.0] {
        cos_poly = dd_sub(Dd::ONE, dd_div(dd_mul(t2, cos_poly), Dd::from_f64(d)));
    }
    (dd_mul(theta, sin_poly), cos_poly)
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ONE: DdComplex = DdComplex {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn from_f64(re: f64, im: f64) -> Self {
        DdComplex {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    pub fn to_complex64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

pub(crate) fn ddc_add(a: DdComplex, b: DdComplex) -> DdComplex {
    DdComplex {
        re: dd_add(a.re, b.re),
        im: dd_add(a.im, b.im),
    }
}

pub(crate) fn ddc_sub(a: DdComplex, b: DdComplex) -> DdComplex {
    DdComplex {
        re: dd_sub(a.re, b.re),
        im: dd_sub(a.im, b.im),
    }
}

pub(crate) fn ddc_mul(a: DdComplex, b: DdComplex) -> DdComplex {
    DdComplex {
        re: dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
        im: dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re)),
    }
}

/// Powers `e^{±2πi j/m}`, `j < count`, accurate to a few dd ulps: built by
/// binary powering from the Taylor seed `e^{±2πi/m}` (the per-power error
/// grows only linearly in `j`).
pub(crate) fn unit_root_powers(m: usize, count: usize, positive: bool) -> Vec<DdComplex> {
    let sign = if positive { 1.0 } else { -1.0 };
    let theta = dd_div(TWO_PI, Dd::from_f64(sign * m as f64));
    let (s, c) = dd_sincos_small(theta);
    let seed = DdComplex { re: c, im: s };
    // squared powers of the seed, enough to cover every bit of j < count
    let bits = (usize::BITS - count.leading_zeros()) as usize + 1;
    let mut pows = Vec::with_capacity(bits);
    let mut cur = seed;
    for _ in 0..bits {
        pows.push(cur);
        cur = ddc_mul(cur, cur);
    }
    (0..count)
        .map(|j| {
            let mut acc = DdComplex::ONE;
            let mut jj = j;
            let mut b = 0;
            while jj != 0 {
                if jj & 1 == 1 {
                    acc = ddc_mul(acc, pows[b]);
                }
                jj >>= 1;
                b += 1;
            }
            acc
        })
        .collect()
}

/// `a^n` by square-and-multiply.
pub(crate) fn ddc_pow(a: DdComplex, n: u64) -> DdComplex {
    let mut acc = DdComplex::ONE;
    let mut base = a;
    let mut e = n;
    while e != 0 {
        if e & 1 == 1 {
            acc = ddc_mul(acc, base);
        }
        base = ddc_mul(base, base);
        e >>= 1;
    }
    acc
}

/// `a / b` for complex dd via `a·conj(b)/|b|²`.
pub(crate) fn ddc_div(a: DdComplex, b: DdComplex) -> DdComplex {
    let conj = DdComplex {
        re: b.re,
        im: Dd {
            hi: -b.im.hi,
            lo: -b.im.lo,
        },
    };
    let num = ddc_mul(a, conj);
    let den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    DdComplex {
        re: dd_div(num.re, den),
        im: dd_div(num.im, den),
    }
}

/// Forward DFT in place over double-double complex data.
pub(crate) fn fft_inplace_dd(data: &mut [DdComplex]) {
    let m = data.len();
    debug_assert!(super::fft::is_pow2(m));
    if m < 2 {
        return;
    }
    super::fft::bit_reverse_permute(data);
    let full = unit_root_powers(m, m / 2, false);
    let mut len = 2usize;
    while len <= m {
        let half = len / 2;
        let stride = m / len;
        let mut start = 0;
        while start < m {
            for j in 0..half {
                let w = full[j * stride];
                let u = data[start + j];
                let v = ddc_mul(data[start + j + half], w);
                data[start + j] = ddc_add(u, v);
                data[start + j + half] = ddc_sub(u, v);
            }
            start += len;
        }
        len <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_mul_keeps_extra_digits() {
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the 2^-60 survives in dd
        let x = dd_add(Dd::ONE, Dd::from_f64((2.0f64).powi(-30)));
        let sq = dd_mul(x, x);
        let err = dd_sub(
            sq,
            dd_add(
                dd_add(Dd::ONE, Dd::from_f64((2.0f64).powi(-29))),
                Dd::from_f64((2.0f64).powi(-60)),
            ),
        );
        assert_eq!(err.to_f64(), 0.0);
    }

    #[test]
    fn dd_div_roundtrip() {
        let a = Dd::from_f64(core::f64::consts::PI);
        let b = Dd::from_f64(core::f64::consts::E);
        let q = dd_div(a, b);
        let back = dd_mul(q, b);
        assert!(dd_sub(back, a).to_f64().abs() < 1e-30);
    }

    #[test]
    fn sincos_seed_matches_f64_trig() {
        let theta = dd_div(TWO_PI, Dd::from_f64(-65536.0));
        let (s, c) = dd_sincos_small(theta);
        assert!((s.to_f64() - theta.to_f64().sin()).abs() < 1e-19);
        assert!((c.to_f64() - theta.to_f64().cos()).abs() < 1e-19);
        // Pythagorean identity to dd precision
        let one = dd_add(dd_mul(s, s), dd_mul(c, c));
        assert!((one.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn dd_fft_agrees_with_f64_fft() {
        use num_complex::Complex64;
        let m = 256;
        let mut a: Vec<DdComplex> = (0..m)
            .map(|j| {
                let t = j as f64 * 0.1;
                DdComplex::from_f64(t.sin(), (1.7 * t).cos())
            })
            .collect();
        let mut b: Vec<Complex64> = a.iter().map(|v| v.to_complex64()).collect();
        fft_inplace_dd(&mut a);
        super::super::fft::fft_inplace(&mut b);
        for (x, y) in a.iter().zip(&b) {
            assert!((x.to_complex64() - y).norm() < 1e-10 * (y.norm() + 1.0));
        }
    }
}
