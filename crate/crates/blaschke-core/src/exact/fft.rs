//! In-place radix-2 FFT over `Complex64`.
//!
//! Not a general-purpose FFT surface: power-of-two sizes only, forward
//! transform only (`X_k = Σ_j x_j e^{−2πijk/M}`), just enough for circle
//! sampling. Twiddles are computed by direct trig per index to keep the
//! accumulated roundoff at the `eps·log M` level.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math;

pub(crate) fn is_pow2(m: usize) -> bool {
    m != 0 && m & (m - 1) == 0
}

pub(crate) fn next_pow2(m: usize) -> usize {
    m.next_power_of_two()
}

/// Forward DFT in place; `data.len()` must be a power of two.
pub(crate) fn fft_inplace(data: &mut [Complex64]) {
    let m = data.len();
    debug_assert!(is_pow2(m));
    if m < 2 {
        return;
    }
    bit_reverse_permute(data);

    let mut len = 2usize;
    while len <= m {
        let half = len / 2;
        let step = -2.0 * core::f64::consts::PI / len as f64;
        // per-stage twiddle table, direct trig
        let tw: Vec<Complex64> = (0..half)
            .map(|j| {
                let ang = step * j as f64;
                Complex64::new(math::cos(ang), math::sin(ang))
            })
            .collect();
        let mut start = 0;
        while start < m {
            for j in 0..half {
                let u = data[start + j];
                let v = data[start + j + half] * tw[j];
                data[start + j] = u + v;
                data[start + j + half] = u - v;
            }
            start += len;
        }
        len <<= 1;
    }
}

pub(crate) fn bit_reverse_permute<T>(data: &mut [T]) {
    let m = data.len();
    let bits = m.trailing_zeros();
    for i in 0..m {
        let j = (i.reverse_bits() >> (usize::BITS - bits)) as usize;
        if j > i {
            data.swap(i, j);
        }
    }
}
