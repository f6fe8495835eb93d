//! Float shims: `std` intrinsics when available, `libm` otherwise.

#![allow(dead_code)]

macro_rules! shim1 {
    ($($name:ident => $libm:ident),* $(,)?) => {
        $(
            #[cfg(feature = "std")]
            #[inline(always)]
            pub(crate) fn $name(x: f64) -> f64 { x.$name() }
            #[cfg(not(feature = "std"))]
            #[inline(always)]
            pub(crate) fn $name(x: f64) -> f64 { libm::$libm(x) }
        )*
    };
}

shim1! {
    sin => sin,
    cos => cos,
    tan => tan,
    atan => atan,
    acos => acos,
    exp => exp,
    ln => log,
    ln_1p => log1p,
    sqrt => sqrt,
    cbrt => cbrt,
    abs => fabs,
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    x.powf(y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    y.atan2(x)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn fma(a: f64, b: f64, c: f64) -> f64 {
    a.mul_add(b, c)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn fma(a: f64, b: f64, c: f64) -> f64 {
    libm::fma(a, b, c)
}

#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    sqrt(x * x + y * y)
}

/// `ln(k!)`, exact summation below 1024 and a Stirling tail above.
pub(crate) fn ln_factorial(k: u64) -> f64 {
    if k < 2 {
        return 0.0;
    }
    if k < 1024 {
        let mut s = 0.0;
        for i in 2..=k {
            s += ln(i as f64);
        }
        return s;
    }
    // Stirling with the first two corrections; relative error < 1e-18 here.
    let x = k as f64;
    let ln2pi = 1.837_877_066_409_345_5;
    (x + 0.5) * ln(x) - x + 0.5 * ln2pi + 1.0 / (12.0 * x) - 1.0 / (360.0 * x * x * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_factorial_matches_direct_product() {
        let mut acc = 1.0f64;
        for k in 1..=20u64 {
            acc *= k as f64;
            assert!((ln_factorial(k) - acc.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn ln_factorial_stirling_seam() {
        // direct sum on both sides of the 1024 switch
        let direct: f64 = (2..=1500u64).map(|i| (i as f64).ln()).sum();
        assert!((ln_factorial(1500) - direct).abs() / direct < 1e-14);
    }
}
