//! Classical polynomial families and the seed / eigenfunction constructors
//! for the harmonic oscillator (HO) and the radial oscillator (RHO).
//!
//! All wavefunctions are unnormalized. Polynomial parts keep the standard
//! Hermite / Laguerre leading coefficients, which fixes every constant that
//! would otherwise only be defined up to proportionality.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, Poly, Rat, RatFun, Var};
use crate::extension::Violation;
use crate::quasirational::QuasiRat;

/// Starting potential: `x^2` on the line, or `x^2/4 + l(l+1)/x^2` on the
/// half-line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ho,
    Rho { ell: Rat },
}

impl Family {
    pub fn rho(ell: Rat) -> Self {
        Family::Rho { ell }
    }

    pub fn ell(&self) -> Option<&Rat> {
        match self {
            Family::Ho => None,
            Family::Rho { ell } => Some(ell),
        }
    }

    /// `alpha = l + 1/2`.
    pub fn alpha(&self) -> Option<Rat> {
        self.ell().map(|l| l + rat(1, 2))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Ho => "ho",
            Family::Rho { .. } => "rho",
        }
    }

    pub fn on_half_line(&self) -> bool {
        matches!(self, Family::Rho { .. })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ho => write!(f, "HO"),
            Family::Rho { ell } => write!(f, "RHO(l={ell})"),
        }
    }
}

/// Index list `m_1 < ... < m_k`. Admissibility (ordering, parity, radial
/// bounds, nonsingularity) is checked by [`crate::extension::check_admissible`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexList(Vec<u32>);

impl IndexList {
    pub fn new(m: Vec<u32>) -> Self {
        IndexList(m)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn m_k(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Structural rules: nonempty, strictly increasing, and `m_i` even for
    /// odd `i`, odd for even `i` (1-based).
    pub fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.0.is_empty() {
            out.push(Violation::Empty);
            return out;
        }
        if self.0.windows(2).any(|w| w[0] >= w[1]) {
            out.push(Violation::NotIncreasing(self.0.clone()));
        }
        for (i, &m) in self.0.iter().enumerate() {
            let position = i + 1;
            let want_even = position % 2 == 1;
            if (m % 2 == 0) != want_even {
                out.push(Violation::Parity { position, value: m });
            }
        }
        out
    }

    /// `{m_k - m_i : i < k}`: levels that survive inside the deleted block.
    pub fn kept_levels(&self) -> BTreeSet<u32> {
        let mk = self.m_k();
        self.0[..self.k().saturating_sub(1)]
            .iter()
            .map(|&m| mk - m)
            .collect()
    }

    /// Levels removed by the state-deleting chain: `{1..m_k}` minus the kept
    /// levels. Its size is `m_k - k + 1`.
    pub fn deleted_levels(&self) -> Vec<u32> {
        let kept = self.kept_levels();
        debug_assert!(kept.iter().all(|&j| (1..=self.m_k()).contains(&j)));
        (1..=self.m_k()).filter(|j| !kept.contains(j)).collect()
    }

    /// Labels of the added levels, `-m_i - 1`, ascending.
    pub fn added_labels(&self) -> Vec<i64> {
        self.0.iter().rev().map(|&m| -(m as i64) - 1).collect()
    }
}

impl fmt::Display for IndexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A formal eigenfunction together with its eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenfunction {
    pub f: QuasiRat,
    pub energy: Rat,
}

impl Eigenfunction {
    pub fn new(f: QuasiRat, energy: Rat) -> Self {
        Eigenfunction { f, energy }
    }
}

/// Physicists' Hermite polynomial, `H_{m+1} = 2x H_m - 2m H_{m-1}`.
pub fn hermite(m: u32) -> Poly {
    let x2 = Poly::from_ints(&[0, 2], Var::X);
    let mut prev = Poly::one(Var::X);
    if m == 0 {
        return prev;
    }
    let mut cur = x2.clone();
    for n in 1..m {
        let next = &(&x2 * &cur) - &prev.scale(&int(2 * n as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// `(-i)^m H_m(i x)`: flip the sign of the `x^{m-2j}` coefficient for odd `j`.
pub fn pseudo_hermite(m: u32) -> Poly {
    let h = hermite(m);
    let coeffs = h
        .coeffs()
        .iter()
        .enumerate()
        .map(|(d, c)| {
            let j = (m as usize - d) / 2;
            if j % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
        .collect();
    Poly::new(coeffs, Var::X)
}

/// Generalized Laguerre `L_m^(beta)(z)` from
/// `(n+1) L_{n+1} = (2n + 1 + beta - z) L_n - (n + beta) L_{n-1}`.
pub fn laguerre(m: u32, beta: &Rat) -> Poly {
    let mut prev = Poly::one(Var::Z);
    if m == 0 {
        return prev;
    }
    let mut cur = Poly::new(vec![beta + Rat::one(), -Rat::one()], Var::Z);
    for n in 1..m {
        let n_rat = int(n as i64);
        let lin = Poly::new(
            vec![&n_rat * int(2) + Rat::one() + beta, -Rat::one()],
            Var::Z,
        );
        let next = (&(&lin * &cur) - &prev.scale(&(&n_rat + beta)))
            .scale(&Rat::new(BigInt::one(), BigInt::from(n + 1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// HO seed `phi_m = pseudo_hermite(m) e^{x^2/2}`, eigenvalue `-2m - 1`.
pub fn seed_phi_ho(m: u32) -> Eigenfunction {
    Eigenfunction::new(
        QuasiRat::from_poly(Rat::zero(), rat(1, 2), pseudo_hermite(m)),
        int(-2 * m as i64 - 1),
    )
}

/// HO bound state `psi_nu = H_nu e^{-x^2/2}`, eigenvalue `2 nu + 1`.
pub fn seed_psi_ho(nu: u32) -> Eigenfunction {
    Eigenfunction::new(
        QuasiRat::from_poly(Rat::zero(), rat(-1, 2), hermite(nu)),
        int(2 * nu as i64 + 1),
    )
}

fn laguerre_in_x(m: u32, beta: &Rat, z_scale: Rat) -> Poly {
    laguerre(m, beta).substitute_scaled_square(&z_scale, Var::X)
}

/// Type III radial seed `x^{-l} e^{x^2/4} L_m^{(-l-1/2)}(-x^2/2)` for the
/// potential with parameter `l`; eigenvalue `l - 2m - 1/2`.
pub fn seed_phi_rho(ell: &Rat, m: u32) -> Result<Eigenfunction> {
    let alpha = ell + rat(1, 2);
    if alpha <= int(m as i64) {
        return Err(Error::Admissibility(vec![Violation::RadialAddingBound {
            alpha_plus_k: alpha,
            m_k: m,
        }]));
    }
    let f = QuasiRat::from_poly(
        -ell.clone(),
        rat(1, 4),
        laguerre_in_x(m, &-alpha, rat(-1, 2)),
    );
    Ok(Eigenfunction::new(f, ell - int(2 * m as i64) - rat(1, 2)))
}

/// Radial bound state `x^{l+1} e^{-x^2/4} L_nu^{(l+1/2)}(x^2/2)`,
/// eigenvalue `2 nu + l + 3/2`.
pub fn seed_psi_rho(ell: &Rat, nu: u32) -> Result<Eigenfunction> {
    if *ell <= rat(-1, 2) {
        return Err(Error::Input(format!(
            "radial bound states need l > -1/2, got {ell}"
        )));
    }
    let alpha = ell + rat(1, 2);
    let f = QuasiRat::from_poly(
        ell + Rat::one(),
        rat(-1, 4),
        laguerre_in_x(nu, &alpha, rat(1, 2)),
    );
    Ok(Eigenfunction::new(f, int(2 * nu as i64) + ell + rat(3, 2)))
}

/// Class II radial seed `x^{-l} e^{-x^2/4} L_i^{(-l-1/2)}(x^2/2)`,
/// eigenvalue `2i - l + 1/2`.
pub fn seed_phi_tilde_rho(ell: &Rat, i: u32) -> Result<Eigenfunction> {
    let alpha = ell + rat(1, 2);
    if alpha <= int(i as i64) {
        return Err(Error::Admissibility(vec![Violation::TildeBound {
            ell_plus_k: ell.clone(),
            m_k: i,
        }]));
    }
    let f = QuasiRat::from_poly(
        -ell.clone(),
        rat(-1, 4),
        laguerre_in_x(i, &-alpha, rat(1, 2)),
    );
    Ok(Eigenfunction::new(f, int(2 * i as i64) - ell + rat(1, 2)))
}

/// `x^2` or `x^2/4 + l(l+1)/x^2`.
pub fn base_potential(family: &Family) -> RatFun {
    match family {
        Family::Ho => RatFun::from_poly(Poly::from_ints(&[0, 0, 1], Var::X)),
        Family::Rho { ell } => radial_potential(ell),
    }
}

pub fn radial_potential(ell: &Rat) -> RatFun {
    let c = ell * (ell + Rat::one());
    // (x^4/4 + c) / x^2
    let num = Poly::new(
        vec![c, Rat::zero(), Rat::zero(), Rat::zero(), rat(1, 4)],
        Var::X,
    );
    RatFun::new(num, Poly::monomial(Rat::one(), 2, Var::X))
}

/// Bound state `nu` of the base potential.
pub fn bound_state(family: &Family, nu: u32) -> Result<Eigenfunction> {
    match family {
        Family::Ho => Ok(seed_psi_ho(nu)),
        Family::Rho { ell } => seed_psi_rho(ell, nu),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::apply_hamiltonian;

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0), Poly::from_ints(&[1], Var::X));
        assert_eq!(hermite(1), Poly::from_ints(&[0, 2], Var::X));
        assert_eq!(hermite(2), Poly::from_ints(&[-2, 0, 4], Var::X));
    }

    #[test]
    fn pseudo_hermite_examples() {
        assert_eq!(pseudo_hermite(0), Poly::from_ints(&[1], Var::X));
        assert_eq!(pseudo_hermite(2), Poly::from_ints(&[2, 0, 4], Var::X));
        assert_eq!(pseudo_hermite(3), Poly::from_ints(&[0, 12, 0, 8], Var::X));
    }

    #[test]
    fn laguerre_low_orders() {
        let beta = rat(3, 7);
        assert_eq!(laguerre(0, &beta), Poly::one(Var::Z));
        assert_eq!(
            laguerre(1, &beta),
            Poly::new(vec![&beta + Rat::one(), -Rat::one()], Var::Z)
        );
        // L_2^(b) = z^2/2 - (b+2) z + (b+1)(b+2)/2 at b = -5/2
        let b = rat(-5, 2);
        let expected = Poly::new(
            vec![
                (&b + int(1)) * (&b + int(2)) / int(2),
                -(&b + int(2)),
                rat(1, 2),
            ],
            Var::Z,
        );
        assert_eq!(laguerre(2, &b), expected);
    }

    #[test]
    fn index_list_levels() {
        let m = IndexList::new(vec![0, 1, 4]);
        assert_eq!(m.kept_levels().into_iter().collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(m.deleted_levels(), vec![1, 2]);
        assert_eq!(m.added_labels(), vec![-5, -2, -1]);
        assert!(m.structural_violations().is_empty());
        assert_eq!(
            IndexList::new(vec![1]).structural_violations(),
            vec![Violation::Parity {
                position: 1,
                value: 1
            }]
        );
    }

    #[test]
    fn ho_seed_energies() {
        let v = base_potential(&Family::Ho);
        for m in 0..5 {
            let s = seed_phi_ho(m);
            assert_eq!(apply_hamiltonian(&v, &s.f).unwrap(), s.f.scale(&s.energy));
            let p = seed_psi_ho(m);
            assert_eq!(apply_hamiltonian(&v, &p.f).unwrap(), p.f.scale(&p.energy));
        }
        assert_eq!(seed_phi_ho(2).energy, int(-5));
    }

    #[test]
    fn radial_seed_energies() {
        for ell in [int(2), int(3), rat(5, 2)] {
            let v = radial_potential(&ell);
            for m in 0..3 {
                for s in [
                    seed_phi_rho(&ell, m).unwrap(),
                    seed_psi_rho(&ell, m).unwrap(),
                    seed_phi_tilde_rho(&ell, m).unwrap(),
                ] {
                    assert_eq!(apply_hamiltonian(&v, &s.f).unwrap(), s.f.scale(&s.energy));
                }
            }
        }
        let ground = seed_psi_rho(&int(2), 0).unwrap();
        assert_eq!(ground.energy, rat(7, 2));
        assert_eq!(ground.f.rho(), &int(3));
        let tilde = seed_phi_tilde_rho(&int(3), 0).unwrap();
        assert_eq!(tilde.energy, rat(-5, 2));
    }

    #[test]
    fn radial_seed_bounds() {
        assert!(seed_phi_rho(&int(1), 2).is_err());
        assert!(seed_phi_tilde_rho(&int(1), 2).is_err());
        assert!(seed_phi_rho(&int(2), 2).is_ok());
    }
}
