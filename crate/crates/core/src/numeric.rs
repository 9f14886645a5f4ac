//! Composite Simpson averaging and bracketing bisection.

use alloc::vec::Vec;

use crate::consts::MIN_PANELS;
use crate::error::{Error, Result};

/// Number of Simpson subintervals per integration axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadratureConfig {
    panels: usize,
}

impl QuadratureConfig {
    /// `panels` must be even and at least [`MIN_PANELS`].
    pub fn new(panels: usize) -> Result<Self> {
        if panels < MIN_PANELS || !panels.is_multiple_of(2) {
            return Err(Error::InvalidPanels {
                got: panels,
                min: MIN_PANELS,
            });
        }
        Ok(Self { panels })
    }

    pub fn panels(&self) -> usize {
        self.panels
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            panels: crate::consts::DEFAULT_PANELS,
        }
    }
}

/// Nodes of `[-half_width, half_width]` and their normalized Simpson weights.
///
/// The weights sum to 1, so `Σ wᵢ f(xᵢ)` approximates the mean of `f` over
/// the interval.
pub fn symmetric_nodes(half_width: f64, cfg: QuadratureConfig) -> Vec<(f64, f64)> {
    let n = cfg.panels;
    let h = 2.0 * half_width / n as f64;
    let norm = 3.0 * n as f64;
    (0..=n)
        .map(|i| {
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            (-half_width + i as f64 * h, w / norm)
        })
        .collect()
}

/// Mean of `f` over `[-half_width, half_width]`.
pub fn simpson_mean<F: FnMut(f64) -> f64>(mut f: F, half_width: f64, cfg: QuadratureConfig) -> f64 {
    symmetric_nodes(half_width, cfg)
        .into_iter()
        .map(|(x, w)| w * f(x))
        .sum()
}

/// Mean of `f` over the box `[-a, a] × [-b, b]` with a tensor-product rule.
pub fn simpson_mean_2d<F: FnMut(f64, f64) -> f64>(
    mut f: F,
    half_width_x: f64,
    half_width_y: f64,
    cfg: QuadratureConfig,
) -> f64 {
    let xs = symmetric_nodes(half_width_x, cfg);
    let ys = symmetric_nodes(half_width_y, cfg);
    let mut total = 0.0;
    for &(y, wy) in &ys {
        let mut row = 0.0;
        for &(x, wx) in &xs {
            row += wx * f(x, y);
        }
        total += wy * row;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// Stops when the bracket can no longer shrink in double precision, when
/// `f` vanishes exactly, or after `max_iter` halvings; the returned point
/// must then satisfy `|f| <= tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64, max_iter: usize) -> Result<Root> {
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (f(a), f(b));
    if fa.abs() <= tol && fa.abs() <= fb.abs() {
        return Ok(Root {
            x: a,
            residual: fa.abs(),
            iterations: 0,
        });
    }
    if fb.abs() <= tol {
        return Ok(Root {
            x: b,
            residual: fb.abs(),
            iterations: 0,
        });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoCrossing { lo, hi });
    }
    let a_positive = fa > 0.0;
    let mut iterations = 0;
    let mut best = if fa.abs() < fb.abs() { (a, fa) } else { (b, fb) };
    while iterations < max_iter {
        let mid = a + (b - a) / 2.0;
        if mid <= a || mid >= b {
            break;
        }
        iterations += 1;
        let fm = f(mid);
        if fm.abs() < best.1.abs() {
            best = (mid, fm);
        }
        if fm == 0.0 {
            break;
        }
        if (fm > 0.0) == a_positive {
            a = mid;
        } else {
            b = mid;
        }
    }
    let residual = best.1.abs();
    if residual > tol {
        return Err(Error::NotConverged(residual));
    }
    Ok(Root {
        x: best.0,
        residual,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;

    #[test]
    fn panels_validation() {
        assert!(QuadratureConfig::new(8).is_ok());
        assert!(QuadratureConfig::new(6).is_err());
        assert!(QuadratureConfig::new(9).is_err());
        assert_eq!(QuadratureConfig::default().panels(), 256);
    }

    #[test]
    fn weights_sum_to_one() {
        let cfg = QuadratureConfig::new(16).unwrap();
        let s: f64 = symmetric_nodes(1.3, cfg).iter().map(|p| p.1).sum();
        assert!((s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn simpson_exact_on_cubics() {
        let cfg = QuadratureConfig::new(8).unwrap();
        // mean of x³ + x² + 1 over [-2, 2] is 4/3 + 1
        let m = simpson_mean(|x| x * x * x + x * x + 1.0, 2.0, cfg);
        assert!((m - 7.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn simpson_mean_of_cosine() {
        let d = 1.0;
        let m = simpson_mean(math::cos, d, QuadratureConfig::default());
        assert!((m - math::sin(d) / d).abs() < 1e-10);
        let m2 = simpson_mean_2d(
            |x, y| math::cos(x) * math::cos(y),
            1.0,
            2.0,
            QuadratureConfig::default(),
        );
        assert!((m2 - math::sin(1.0) * math::sin(2.0) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12, 200).unwrap();
        assert!((r.x - core::f64::consts::SQRT_2).abs() < 1e-12);
        let r = bisect(|x| 2.0 - x * x, 0.0, 2.0, 1e-12, 200).unwrap();
        assert!((r.x - core::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn bisect_reports_missing_crossing() {
        assert_eq!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 200),
            Err(Error::NoCrossing { lo: -1.0, hi: 1.0 })
        );
    }

    #[test]
    fn bisect_accepts_root_at_endpoint() {
        let r = bisect(|x| x - 1.0, 0.0, 1.0, 1e-12, 200).unwrap();
        assert_eq!(r.x, 1.0);
        assert_eq!(r.iterations, 0);
    }
}
