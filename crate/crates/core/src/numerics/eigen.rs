use crate::error::{Error, Result};
use crate::exactmath::RatFun;

use super::grid::{evaluate_potential, Grid};

const MAX_ITERATIONS: usize = 60;

/// All eigenvalues of the symmetric tridiagonal matrix with diagonal `d`
/// and off-diagonal `e` (`e.len() == d.len() - 1`), by implicit QL with
/// Wilkinson shifts. Returned in ascending order.
pub fn tridiagonal_eigenvalues(d: &[f64], e: &[f64]) -> Result<Vec<f64>> {
    let n = d.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if e.len() + 1 != n {
        return Err(Error::Input("off-diagonal must have length n - 1".into()));
    }
    let mut d = d.to_vec();
    let mut e: Vec<f64> = e.iter().copied().chain(std::iter::once(0.0)).collect();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_ITERATIONS {
                return Err(Error::Solver {
                    index: l,
                    iterations: iter - 1,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Lowest `count` eigenvalues of `-d^2/dx^2 + V` discretized by central
/// second differences with Dirichlet ends.
pub fn fd_eigenvalues(v: &RatFun, grid: &Grid, count: usize) -> Result<Vec<f64>> {
    if count > grid.n_points() / 4 {
        return Err(Error::Input(format!(
            "at most n_points / 4 = {} eigenvalues can be requested",
            grid.n_points() / 4
        )));
    }
    let h2 = grid.spacing() * grid.spacing();
    let diag = grid
        .points()
        .map(|x| Ok(2.0 / h2 + evaluate_potential(v, x)?))
        .collect::<Result<Vec<f64>>>()?;
    let off = vec![-1.0 / h2; diag.len() - 1];
    let mut all = tridiagonal_eigenvalues(&diag, &off)?;
    all.truncate(count);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{base_potential, Family};

    #[test]
    fn small_matrix() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let ev = tridiagonal_eigenvalues(&[2.0, 2.0], &[1.0]).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn discrete_laplacian() {
        let n = 50;
        let ev = tridiagonal_eigenvalues(&vec![2.0; n], &vec![-1.0; n - 1]).unwrap();
        for (j, got) in ev.iter().enumerate() {
            let theta = (j + 1) as f64 * std::f64::consts::PI / (n + 1) as f64;
            assert!((got - (2.0 - 2.0 * theta.cos())).abs() < 1e-12);
        }
    }

    #[test]
    fn harmonic_oscillator_levels() {
        let grid = Grid::new(-10.0, 10.0, 2000).unwrap();
        let ev = fd_eigenvalues(&base_potential(&Family::Ho), &grid, 3).unwrap();
        for (got, want) in ev.iter().zip([1.0, 3.0, 5.0]) {
            assert!((got - want).abs() < 1e-4, "{got} vs {want}");
        }
    }

    #[test]
    fn count_is_bounded() {
        let grid = Grid::new(-1.0, 1.0, 64).unwrap();
        assert!(fd_eigenvalues(&base_potential(&Family::Ho), &grid, 17).is_err());
    }
}
