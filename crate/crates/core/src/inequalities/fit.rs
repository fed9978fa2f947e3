use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Least-squares fit of `log y = log c + p·log x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerFit {
    pub exponent: f64,
    pub constant: f64,
    /// Largest absolute deviation of a log–log point from the fitted line.
    pub residual: f64,
}

pub fn fit_power_law(x: &[f64], y: &[f64]) -> Result<PowerFit> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(GeometryError::EmptyInput);
    }
    if let Some(&v) = x.iter().chain(y).find(|v| !(**v > 0.0)) {
        return Err(GeometryError::OutOfRange {
            value: v,
            range: "(0, ∞) for a log–log fit",
        });
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    if sxx == 0.0 {
        return Err(GeometryError::OutOfRange {
            value: x[0],
            range: "at least two distinct abscissae",
        });
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual = lx
        .iter()
        .zip(&ly)
        .map(|(a, b)| (b - intercept - exponent * a).abs())
        .fold(0.0, f64::max);
    Ok(PowerFit {
        exponent,
        constant: intercept.exp(),
        residual,
    })
}

/// `n` points spaced geometrically from `lo` to `hi` inclusive.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_power_law() {
        let x = geometric_grid(1e-4, 1e-2, 12);
        let y: Vec<f64> = x.iter().map(|v| 0.7 * v.powf(1.5)).collect();
        let f = fit_power_law(&x, &y).unwrap();
        assert!((f.exponent - 1.5).abs() < 1e-12);
        assert!((f.constant - 0.7).abs() < 1e-10);
        assert!(f.residual < 1e-12);
    }

    #[test]
    fn grid_endpoints() {
        let g = geometric_grid(1e-4, 1e-2, 12);
        assert_eq!(g.len(), 12);
        assert!((g[0] - 1e-4).abs() < 1e-18 && (g[11] - 1e-2).abs() < 1e-15);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(fit_power_law(&[1.0, 2.0], &[0.0, 1.0]).is_err());
    }

    proptest! {
        #[test]
        fn recovers_exponent(p in -3.0f64..3.0, c in 0.01f64..100.0) {
            let x = geometric_grid(1e-3, 1.0, 8);
            let y: Vec<f64> = x.iter().map(|v| c * v.powf(p)).collect();
            let f = fit_power_law(&x, &y).unwrap();
            prop_assert!((f.exponent - p).abs() < 1e-9);
            prop_assert!((f.constant / c - 1.0).abs() < 1e-9);
        }
    }
}
