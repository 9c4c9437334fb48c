use crate::error::{Error, Result};
use crate::exactmath::RatFun;
use crate::families::Family;
use crate::quasirational::QuasiRat;

/// Uniform interior grid on `[a, b]`: `x_i = a + i h`, `i = 1..=n_points`,
/// `h = (b - a) / (n_points + 1)`. The endpoints carry the Dirichlet
/// conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n_points: usize,
}

impl Grid {
    pub const MIN_POINTS: usize = 64;

    pub fn new(a: f64, b: f64, n_points: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::Input(format!("grid needs a < b, got [{a}, {b}]")));
        }
        if n_points < Self::MIN_POINTS {
            return Err(Error::Input(format!(
                "grid needs at least {} points, got {n_points}",
                Self::MIN_POINTS
            )));
        }
        Ok(Grid { a, b, n_points })
    }

    /// `[-12, 12]` with 2400 points on the line, `[1e-3, 16]` with 3000 on
    /// the half-line.
    pub fn default_for(family: &Family) -> Self {
        match family {
            Family::Ho => Grid {
                a: -12.0,
                b: 12.0,
                n_points: 2400,
            },
            Family::Rho { .. } => Grid {
                a: 1e-3,
                b: 16.0,
                n_points: 3000,
            },
        }
    }

    pub fn with_points(&self, n_points: usize) -> Result<Self> {
        Grid::new(self.a, self.b, n_points)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.b - self.a) / (self.n_points + 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (1..=self.n_points).map(move |i| self.a + i as f64 * h)
    }
}

pub fn evaluate_qr(f: &QuasiRat, x: f64) -> Result<f64> {
    match f.eval_f64(x) {
        Some(y) if y.is_finite() => Ok(y),
        _ => Err(Error::Pole(x)),
    }
}

pub fn evaluate_potential(v: &RatFun, x: f64) -> Result<f64> {
    let den = v.den().eval_f64(x);
    if den == 0.0 {
        return Err(Error::Pole(x));
    }
    let y = v.num().eval_f64(x) / den;
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::Pole(x))
    }
}
