use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{clear_column_denominators, determinant, Poly, Rat, RatFun, Var};
use crate::families::Eigenfunction;
use crate::quasirational::{common_frame, derivative_matrix, qr_wronskian, QuasiRat};

use super::diffop::DiffOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `A f = W(seeds, f) / W(seeds)`.
    Forward,
    /// Formal adjoint of a forward map.
    Adjoint,
}

/// Wronskian-quotient intertwiner built from seed eigenfunctions.
#[derive(Clone, Debug)]
pub struct DarbouxMap {
    seeds: Vec<QuasiRat>,
    factorization_energies: Vec<Rat>,
    op: DiffOp,
    direction: Direction,
}

impl DarbouxMap {
    /// Expands `W(phi_1..phi_n, f) / W(phi_1..phi_n)` along the last column
    /// into a monic operator `sum_i c_i D^i`.
    pub fn from_seeds(seeds: &[Eigenfunction]) -> Result<Self> {
        let fs: Vec<QuasiRat> = seeds.iter().map(|s| s.f.clone()).collect();
        let energies = seeds.iter().map(|s| s.energy.clone()).collect();
        let n = fs.len();
        if n == 0 {
            return Ok(DarbouxMap {
                seeds: fs,
                factorization_energies: energies,
                op: DiffOp::identity(),
                direction: Direction::Forward,
            });
        }
        let (rho0, gamma, parts) = common_frame(&fs)?;
        // (n+1) x n matrix of derivatives on the shared frame; the column
        // scaling from clearing denominators cancels in every quotient
        let m = derivative_matrix(&parts, &rho0, &gamma, n + 1);
        let (poly, _) = clear_column_denominators(&m);
        let minor = |skip: usize| -> Poly {
            let rows: Vec<Vec<Poly>> = poly
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, r)| r.clone())
                .collect();
            determinant(rows)
        };
        let base = minor(n);
        if base.is_zero() {
            return Err(Error::Input("seed functions are linearly dependent".into()));
        }
        let coeffs = (0..=n)
            .map(|i| {
                let c = RatFun::new(minor(i), base.clone());
                if (n + i) % 2 == 1 {
                    c.scale(&-Rat::one())
                } else {
                    c
                }
            })
            .collect();
        Ok(DarbouxMap {
            seeds: fs,
            factorization_energies: energies,
            op: DiffOp::new(coeffs),
            direction: Direction::Forward,
        })
    }

    pub fn adjoint(&self) -> DarbouxMap {
        DarbouxMap {
            seeds: self.seeds.clone(),
            factorization_energies: self.factorization_energies.clone(),
            op: self.op.adjoint(),
            direction: match self.direction {
                Direction::Forward => Direction::Adjoint,
                Direction::Adjoint => Direction::Forward,
            },
        }
    }

    pub fn apply(&self, f: &QuasiRat) -> Result<QuasiRat> {
        self.op.apply(f)
    }

    pub fn op(&self) -> &DiffOp {
        &self.op
    }

    pub fn order(&self) -> usize {
        self.op.order()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn seeds(&self) -> &[QuasiRat] {
        &self.seeds
    }

    pub fn factorization_energies(&self) -> &[Rat] {
        &self.factorization_energies
    }

    /// `prod_i (E - eps_i)`, the eigenvalue of `A^† A` on an eigenfunction
    /// with energy `E`.
    pub fn factorization_polynomial(&self) -> Poly {
        self.factorization_energies
            .iter()
            .fold(Poly::one(Var::E), |acc, e| {
                &acc * &Poly::linear_root(e.clone(), Var::E)
            })
    }

    pub fn seed_wronskian(&self) -> Result<QuasiRat> {
        if self.seeds.is_empty() {
            return Ok(QuasiRat::from_ratfun(RatFun::one(Var::X)));
        }
        qr_wronskian(&self.seeds)
    }
}

/// `A f` for the chain with the given seeds.
pub fn darboux_apply(map: &DarbouxMap, f: &QuasiRat) -> Result<QuasiRat> {
    map.apply(f)
}
