use num_traits::Signed;

use crate::error::{Error, Result};
use crate::quasirational::QuasiRat;

use super::grid::{evaluate_qr, Grid};

const REL_TOL: f64 = 1e-13;
const MAX_DOUBLINGS: usize = 12;

fn simpson(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, intervals: usize) -> Result<f64> {
    let h = (b - a) / intervals as f64;
    let mut acc = f(a)? + f(b)?;
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h)?;
    }
    Ok(acc * h / 3.0)
}

/// `∫_a^b f^2 dx` by composite Simpson, doubling until two successive
/// values agree to `1e-13` relative. The integrand at both ends must be
/// negligible against the total.
pub fn quadrature_norm2(f: &QuasiRat, grid: &Grid) -> Result<f64> {
    if !f.gamma().is_negative() {
        return Err(Error::NonDecaying(f.gamma().to_string()));
    }
    let sq = |x: f64| evaluate_qr(f, x).map(|y| y * y);
    let (a, b) = (grid.a(), grid.b());
    let mut n = grid.n_points() + grid.n_points() % 2;
    let mut prev = simpson(&sq, a, b, n)?;
    for _ in 0..MAX_DOUBLINGS {
        n *= 2;
        let cur = simpson(&sq, a, b, n)?;
        if (cur - prev).abs() <= REL_TOL * cur.abs() {
            let tail = sq(a)?.max(sq(b)?);
            if tail > REL_TOL * cur {
                return Err(Error::Input(format!(
                    "integrand is still {tail:e} at the domain edge; enlarge the domain"
                )));
            }
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Solver {
        index: 0,
        iterations: MAX_DOUBLINGS,
    })
}
