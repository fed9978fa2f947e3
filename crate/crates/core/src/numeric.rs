//! Small one- and low-dimensional optimizers and root finders.

use nalgebra::{DMatrix, DVector, Vector3};

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a maximum of `f` on `[a, b]`; returns `(x, f(x))`.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iter = 0;
    while (b - a).abs() > tol && iter < 200 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        iter += 1;
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

pub fn golden_min<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_max(|t| -f(t), a, b, tol);
    (x, -v)
}

/// Bisection for a sign change of `f` on `[a, b]`.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Nelder–Mead minimization in `n` dimensions from `x0` with initial simplex
/// step `step`; stops when the simplex value spread falls below `ftol` and its
/// size below `xtol`.
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    step: f64,
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<Vec<f64>> = vec![x0.to_vec()];
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        simplex.push(x);
    }
    let mut values: Vec<f64> = simplex.iter().map(|x| f(x)).collect();
    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();
        let size = simplex[1..]
            .iter()
            .map(|x| {
                x.iter()
                    .zip(&simplex[0])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if (values[n] - values[0]).abs() <= ftol && size <= xtol {
            break;
        }
        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|x| x[j]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            (0..n)
                .map(|j| centroid[j] + t * (simplex[n][j] - centroid[j]))
                .collect()
        };
        let xr = along(-1.0);
        let fr = f(&xr);
        if fr < values[0] {
            let xe = along(-2.0);
            let fe = f(&xe);
            if fe < fr {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
        } else if fr < values[n - 1] {
            simplex[n] = xr;
            values[n] = fr;
        } else {
            let (xc, fc) = if fr < values[n] {
                let x = along(-0.5);
                let v = f(&x);
                (x, v)
            } else {
                let x = along(0.5);
                let v = f(&x);
                (x, v)
            };
            if fc < values[n].min(fr) {
                simplex[n] = xc;
                values[n] = fc;
            } else {
                for i in 1..=n {
                    let x: Vec<f64> = (0..n)
                        .map(|j| simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]))
                        .collect();
                    values[i] = f(&x);
                    simplex[i] = x;
                }
            }
        }
    }
    let best = (0..=n)
        .min_by(|&i, &j| values[i].total_cmp(&values[j]))
        .unwrap();
    (simplex[best].clone(), values[best])
}

/// The point of least norm in the convex hull of `points` (Wolfe's
/// algorithm). Its norm is the largest `t` with `⟨x, u⟩ ≥ t` for all points
/// and some unit `u`.
pub fn min_norm_point(points: &[Vector3<f64>]) -> Vector3<f64> {
    let combo = |s: &[usize], lam: &[f64]| -> Vector3<f64> {
        s.iter().zip(lam).map(|(&i, &l)| points[i] * l).sum()
    };
    let Some(first) =
        (0..points.len()).min_by(|&i, &j| points[i].norm().total_cmp(&points[j].norm()))
    else {
        return Vector3::zeros();
    };
    let (mut s, mut lam) = (vec![first], vec![1.0]);
    for _ in 0..1000 {
        let q = combo(&s, &lam);
        let qq = q.norm_squared();
        if qq < 1e-28 {
            return Vector3::zeros();
        }
        let (j, v) = points
            .iter()
            .map(|p| p.dot(&q))
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        if qq - v <= 1e-12 * qq || s.contains(&j) {
            return q;
        }
        s.push(j);
        lam.push(0.0);
        loop {
            let Some(mu) = affine_minimizer(points, &s) else {
                return q;
            };
            if mu.iter().all(|&m| m > 1e-15) {
                lam = mu;
                break;
            }
            let theta = lam
                .iter()
                .zip(&mu)
                .filter(|(_, &m)| m <= 1e-15)
                .map(|(&l, &m)| l / (l - m))
                .fold(1.0, f64::min);
            for (l, m) in lam.iter_mut().zip(&mu) {
                *l = (1.0 - theta) * *l + theta * m;
            }
            let keep: Vec<usize> = (0..s.len()).filter(|&i| lam[i] > 1e-15).collect();
            s = keep.iter().map(|&i| s[i]).collect();
            lam = keep.iter().map(|&i| lam[i]).collect();
            let total: f64 = lam.iter().sum();
            lam.iter_mut().for_each(|l| *l /= total);
        }
    }
    combo(&s, &lam)
}

/// Weights `μ` (summing to one) of the least-norm point in the affine hull of
/// the selected points, or `None` if they are affinely dependent.
fn affine_minimizer(points: &[Vector3<f64>], s: &[usize]) -> Option<Vec<f64>> {
    let k = s.len();
    let m = DMatrix::from_fn(k + 1, k + 1, |i, j| match (i < k, j < k) {
        (true, true) => points[s[i]].dot(&points[s[j]]),
        (false, false) => 0.0,
        _ => 1.0,
    });
    let mut rhs = DVector::zeros(k + 1);
    rhs[k] = 1.0;
    let x = m.lu().solve(&rhs)?;
    let mu: Vec<f64> = x.iter().take(k).copied().collect();
    mu.iter().all(|v| v.is_finite()).then_some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_cosine_peak() {
        let (x, v) = golden_max(|t| (t - 0.3).cos(), -1.0, 2.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let (x, v) = nelder_mead(
            |p| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2),
            &[-1.0, 1.5],
            0.5,
            1e-10,
            1e-16,
            5000,
        );
        assert!(v < 1e-12, "{v}");
        assert!((x[0] - 1.0).abs() < 1e-5);
    }

    #[test]
    fn min_norm_of_a_circle() {
        let rho: f64 = 1.2;
        let pts: Vec<Vector3<f64>> = (0..90)
            .map(|k| {
                let t = k as f64 * std::f64::consts::TAU / 90.0;
                Vector3::new(rho.sin() * t.cos(), rho.sin() * t.sin(), rho.cos())
            })
            .collect();
        let q = min_norm_point(&pts);
        assert!((q - Vector3::z() * rho.cos()).norm() < 1e-12, "{q}");
        let mut all = pts.clone();
        all.push(-Vector3::z());
        assert!(min_norm_point(&all).norm() < 1e-12);
    }

    proptest::proptest! {
        #[test]
        fn min_norm_is_the_best_margin(
            raw in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0, 0.05f64..1.0), 3..40),
            dirs in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0), 20),
        ) {
            // oracle: weak duality, no direction beats |q|, and q itself attains it
            let pts: Vec<Vector3<f64>> = raw.iter().map(|&(x, y, z)| Vector3::new(x, y, z).normalize()).collect();
            let q = min_norm_point(&pts);
            let margin = |u: &Vector3<f64>| pts.iter().map(|p| p.dot(u)).fold(f64::INFINITY, f64::min);
            proptest::prop_assert!(q.norm() > 0.0);
            proptest::prop_assert!((margin(&q.normalize()) - q.norm()).abs() < 1e-9);
            for &(x, y, z) in &dirs {
                let u = Vector3::new(x, y, z);
                if u.norm() > 1e-3 {
                    proptest::prop_assert!(margin(&u.normalize()) <= q.norm() + 1e-9);
                }
            }
        }
    }
}
