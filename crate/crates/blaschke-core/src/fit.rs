//! Ordinary least squares on log-log (or semilog) axes.
//!
//! All the scaling-law checks reduce to fitting `y = slope·x + intercept` and
//! reading off the slope and `R²`.

use alloc::vec::Vec;

use crate::math;

/// Result of a straight-line fit.
#[derive(Debug, Clone, Copy)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination; 1 for a perfect fit.
    pub r_squared: f64,
}

/// Unweighted OLS of `ys` against `xs`. Panics if fewer than two points.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> LineFit {
    assert!(xs.len() == ys.len() && xs.len() >= 2, "need >= 2 points");
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    let slope = if math::abs(denom) < 1e-300 {
        0.0
    } else {
        (n * sxy - sx * sy) / denom
    };
    let intercept = (sy - slope * sx) / n;
    let mean = sy / n;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        let resid = y - (slope * x + intercept);
        ss_res += resid * resid;
        let dev = y - mean;
        ss_tot += dev * dev;
    }
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    LineFit {
        slope,
        intercept,
        r_squared,
    }
}

/// Fit `ln y = slope · ln x + c`; `ys` must be strictly positive.
pub fn fit_loglog(xs: &[f64], ys: &[f64]) -> LineFit {
    let lx: Vec<f64> = xs.iter().map(|&x| math::ln(x)).collect();
    let ly: Vec<f64> = ys.iter().map(|&y| math::ln(y)).collect();
    fit_line(&lx, &ly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn recovers_exact_power_law() {
        let xs: Vec<f64> = vec![1.0, 2.0, 4.0, 8.0, 16.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x.powf(-1.5)).collect();
        let f = fit_loglog(&xs, &ys);
        assert!((f.slope + 1.5).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn r_squared_degrades_off_line() {
        let xs = vec![1.0, 2.0, 3.0, 4.0];
        let ys = vec![1.0, 2.5, 2.4, 4.4];
        let f = fit_line(&xs, &ys);
        assert!(f.r_squared < 1.0 && f.r_squared > 0.5);
    }
}
