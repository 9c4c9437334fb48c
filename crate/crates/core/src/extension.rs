//! Rationally extended oscillator potentials built by state-adding
//! (Darboux-Crum) and state-deleting (Krein-Adler) chains, plus the
//! isospectral class II chain that shifts the radial parameter.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{
    count_real_roots, int, log_second_derivative, poly_wronskian, rat, Interval, Poly, Rat, RatFun,
    Var,
};
use crate::families::{
    base_potential, hermite, laguerre, pseudo_hermite, radial_potential, seed_phi_ho, seed_phi_rho,
    seed_phi_tilde_rho, seed_psi_ho, seed_psi_rho, Eigenfunction, Family, IndexList,
};
use crate::numerics::SpectrumTable;
use crate::quasirational::{qr_wronskian, QuasiRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Adding,
    Deleting,
    Tilde,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Adding => "adding",
            Mode::Deleting => "deleting",
            Mode::Tilde => "tilde",
        }
    }
}

/// A failed admissibility rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    NotIncreasing(Vec<u32>),
    /// 1-based position whose value has the wrong parity.
    Parity {
        position: usize,
        value: u32,
    },
    NegativeEll(Rat),
    /// `alpha + k > m_k` on the adding branch.
    RadialAddingBound {
        alpha_plus_k: Rat,
        m_k: u32,
    },
    /// `alpha + k > m_k + 1` on the deleting branch.
    RadialDeletingBound {
        alpha_plus_k: Rat,
        m_k: u32,
    },
    /// `l + k + 1/2 > m_k` for the class II chain.
    TildeBound {
        ell_plus_k: Rat,
        m_k: u32,
    },
    /// The Wronskian has real zeros on the domain.
    SingularWronskian {
        roots: usize,
    },
}

impl Violation {
    /// Short machine-readable rule name.
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::NotIncreasing(_) => "increasing",
            Violation::Parity { .. } => "parity",
            Violation::NegativeEll(_) => "ell-nonnegative",
            Violation::RadialAddingBound { .. } => "alpha-k-adding",
            Violation::RadialDeletingBound { .. } => "alpha-k-deleting",
            Violation::TildeBound { .. } => "tilde-bound",
            Violation::SingularWronskian { .. } => "nonsingular",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty index list"),
            Violation::NotIncreasing(m) => write!(f, "indices {m:?} are not strictly increasing"),
            Violation::Parity { position, value } => {
                let want = if position % 2 == 1 { "even" } else { "odd" };
                write!(f, "parity violation: m_{position} = {value} must be {want}")
            }
            Violation::NegativeEll(l) => write!(f, "l = {l} must be nonnegative"),
            Violation::RadialAddingBound { alpha_plus_k, m_k } => {
                write!(f, "alpha + k = {alpha_plus_k} must exceed m_k = {m_k}")
            }
            Violation::RadialDeletingBound { alpha_plus_k, m_k } => {
                write!(
                    f,
                    "alpha + k = {alpha_plus_k} must exceed m_k + 1 = {}",
                    m_k + 1
                )
            }
            Violation::TildeBound { ell_plus_k, m_k } => {
                write!(
                    f,
                    "l + k + 1/2 = {} must exceed m_k = {m_k}",
                    ell_plus_k + rat(1, 2)
                )
            }
            Violation::SingularWronskian { roots } => {
                write!(f, "Wronskian has {roots} real zero(s) on the domain")
            }
        }
    }
}

fn domain_interval(family: &Family) -> Interval {
    match family {
        Family::Ho => Interval::real_line(),
        Family::Rho { .. } => Interval::positive_half_line(),
    }
}

/// Polynomial Wronskian of the closed form for each construction: in `x`
/// for HO, in `z = x^2/2` for RHO.
fn closed_form_wronskian(family: &Family, indices: &IndexList, mode: Mode) -> Result<Poly> {
    let k = indices.k() as i64;
    let m_k = indices.m_k();
    let polys: Vec<Poly> = match (family, mode) {
        (Family::Ho, Mode::Adding) => indices
            .as_slice()
            .iter()
            .map(|&m| pseudo_hermite(m))
            .collect(),
        (Family::Ho, Mode::Deleting) => indices.deleted_levels().into_iter().map(hermite).collect(),
        (Family::Ho, Mode::Tilde) => {
            return Err(Error::Input("the class II chain is radial only".into()))
        }
        (Family::Rho { ell }, Mode::Adding) => {
            let beta = -(ell + rat(1, 2) + int(k));
            indices
                .as_slice()
                .iter()
                .map(|&m| laguerre(m, &beta).reflect())
                .collect()
        }
        (Family::Rho { ell }, Mode::Deleting) => {
            let beta = ell + rat(1, 2) + int(k) - int(m_k as i64 + 1);
            indices
                .deleted_levels()
                .into_iter()
                .map(|j| laguerre(j, &beta))
                .collect()
        }
        (Family::Rho { ell }, Mode::Tilde) => {
            let beta = -(ell + rat(1, 2) + int(k));
            (0..=m_k).map(|i| laguerre(i, &beta)).collect()
        }
    };
    let var = if family.on_half_line() {
        Var::Z
    } else {
        Var::X
    };
    if polys.is_empty() {
        return Ok(Poly::one(var));
    }
    poly_wronskian(&polys)
}

/// Validates ordering, parity and the radial parameter bounds for `mode`,
/// then confirms the Wronskian has no real zeros on the domain.
pub fn check_admissible(indices: &IndexList, family: &Family, mode: Mode) -> Result<()> {
    let mut violations = indices.structural_violations();
    let ordered = !violations
        .iter()
        .any(|v| matches!(v, Violation::Empty | Violation::NotIncreasing(_)));
    let mut bounds_ok = true;
    if let Family::Rho { ell } = family {
        if *ell < Rat::zero() {
            violations.push(Violation::NegativeEll(ell.clone()));
            bounds_ok = false;
        }
        let k = int(indices.k() as i64);
        let m_k = indices.m_k();
        let alpha_plus_k = ell + rat(1, 2) + &k;
        match mode {
            Mode::Adding if alpha_plus_k <= int(m_k as i64) => {
                violations.push(Violation::RadialAddingBound { alpha_plus_k, m_k });
                bounds_ok = false;
            }
            Mode::Deleting if alpha_plus_k <= int(m_k as i64 + 1) => {
                violations.push(Violation::RadialDeletingBound { alpha_plus_k, m_k });
                bounds_ok = false;
            }
            Mode::Tilde if alpha_plus_k <= int(m_k as i64) => {
                violations.push(Violation::TildeBound {
                    ell_plus_k: ell + &k,
                    m_k,
                });
                bounds_ok = false;
            }
            _ => {}
        }
    }
    if ordered && bounds_ok {
        let w = closed_form_wronskian(family, indices, mode)?;
        let roots = count_real_roots(&w, &domain_interval(family))?;
        if roots > 0 {
            violations.push(Violation::SingularWronskian { roots });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Admissibility(violations))
    }
}

/// Exact spectrum `E_nu = 2 nu + ground` over the added labels followed by
/// `nu = 0, 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub added: Vec<i64>,
    pub ground: Rat,
}

impl Spectrum {
    pub fn energy(&self, nu: i64) -> Rat {
        int(2 * nu) + &self.ground
    }

    pub fn labels(&self, count: usize) -> Vec<i64> {
        self.added.iter().copied().chain(0..).take(count).collect()
    }

    pub fn levels(&self, count: usize) -> Vec<(i64, Rat)> {
        self.labels(count)
            .into_iter()
            .map(|nu| (nu, self.energy(nu)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ExtendedPotential {
    /// Family of the target potential; for RHO it carries the final `l`.
    pub family: Family,
    pub mode: Mode,
    /// For [`Mode::Tilde`] only `m_k` is meaningful.
    pub indices: IndexList,
    pub k: usize,
    /// Potential the seeds are eigenfunctions of.
    pub start: RatFun,
    pub seeds: Vec<Eigenfunction>,
    /// Closed-form polynomial Wronskian (variable `x` for HO, `z` for RHO).
    pub wronskian: Poly,
    pub confining_offset: Rat,
    /// `-2 (log W)''` taken in `x`.
    pub correction: RatFun,
    /// Full potential from the seed chain, `start - 2 (log W[seeds])''`.
    pub potential: RatFun,
    pub spectrum: Spectrum,
}

impl ExtendedPotential {
    /// `base + offset + correction`, where `base` is `x^2` or the radial
    /// potential with the target `l`.
    pub fn closed_form(&self) -> RatFun {
        let base = base_potential(&self.family);
        &(&base + &RatFun::constant(self.confining_offset.clone(), Var::X)) + &self.correction
    }
}

/// Second logarithmic derivative of a quasi-rational function,
/// `-rho / x^2 + 2 gamma + (log R)''`.
fn log_second_derivative_qr(f: &QuasiRat) -> RatFun {
    let r = f.rational_part();
    let mut out = &RatFun::power_of_var(-2, Var::X).scale(&-f.rho().clone())
        + &RatFun::constant(f.gamma() * int(2), Var::X);
    if !r.num().is_constant() {
        out = &out + &log_second_derivative(r.num());
    }
    if !r.den().is_constant() {
        out = &out - &log_second_derivative(r.den());
    }
    out
}

/// `V - 2 (log W[seeds])''`.
pub fn crum_partner(start: &RatFun, seeds: &[Eigenfunction]) -> Result<RatFun> {
    if seeds.is_empty() {
        return Ok(start.clone());
    }
    let fs: Vec<QuasiRat> = seeds.iter().map(|s| s.f.clone()).collect();
    let w = qr_wronskian(&fs)?;
    if w.is_zero() {
        return Err(Error::Input("seed functions are linearly dependent".into()));
    }
    Ok(start - &log_second_derivative_qr(&w).scale(&int(2)))
}

fn closed_form_correction(family: &Family, w: &Poly) -> RatFun {
    let in_x = match family {
        Family::Ho => w.clone(),
        Family::Rho { .. } => w.substitute_scaled_square(&rat(1, 2), Var::X),
    };
    if in_x.is_constant() {
        return RatFun::zero(Var::X);
    }
    log_second_derivative(&in_x).scale(&int(-2))
}

fn finish(mut p: ExtendedPotential) -> Result<ExtendedPotential> {
    p.correction = closed_form_correction(&p.family, &p.wronskian);
    p.potential = crum_partner(&p.start, &p.seeds)?;
    let closed = p.closed_form();
    if closed != p.potential {
        return Err(Error::Identity(format!(
            "{} {} potential: seed chain and closed form disagree",
            p.family,
            p.mode.name()
        )));
    }
    Ok(p)
}

fn added_spectrum(indices: &IndexList, ground: Rat) -> Spectrum {
    Spectrum {
        added: indices.added_labels(),
        ground,
    }
}

pub fn build_state_adding(family: &Family, indices: &IndexList) -> Result<ExtendedPotential> {
    check_admissible(indices, family, Mode::Adding)?;
    let k = indices.k();
    let (start, seeds, offset, ground) = match family {
        Family::Ho => (
            base_potential(family),
            indices.as_slice().iter().map(|&m| seed_phi_ho(m)).collect(),
            int(-2 * k as i64),
            Rat::one(),
        ),
        Family::Rho { ell } => {
            let ell_eff = ell + int(k as i64);
            let seeds = indices
                .as_slice()
                .iter()
                .map(|&m| seed_phi_rho(&ell_eff, m))
                .collect::<Result<Vec<_>>>()?;
            (
                radial_potential(&ell_eff),
                seeds,
                -int(k as i64),
                &ell_eff + rat(3, 2),
            )
        }
    };
    finish(ExtendedPotential {
        family: family.clone(),
        mode: Mode::Adding,
        indices: indices.clone(),
        k,
        start,
        seeds,
        wronskian: closed_form_wronskian(family, indices, Mode::Adding)?,
        confining_offset: offset,
        correction: RatFun::zero(Var::X),
        potential: RatFun::zero(Var::X),
        spectrum: added_spectrum(indices, ground),
    })
}

pub fn build_state_deleting(family: &Family, indices: &IndexList) -> Result<ExtendedPotential> {
    check_admissible(indices, family, Mode::Deleting)?;
    let k = indices.k();
    let m_k = indices.m_k() as i64;
    let deleted = indices.deleted_levels();
    let (start, seeds, offset, ground) = match family {
        Family::Ho => (
            base_potential(family),
            deleted.iter().map(|&j| seed_psi_ho(j)).collect(),
            int(2 * (m_k + 1 - k as i64)),
            int(2 * m_k + 3),
        ),
        Family::Rho { ell } => {
            let ell_start = ell + int(k as i64) - int(m_k + 1);
            let seeds = deleted
                .iter()
                .map(|&j| seed_psi_rho(&ell_start, j))
                .collect::<Result<Vec<_>>>()?;
            (
                radial_potential(&ell_start),
                seeds,
                int(m_k + 1 - k as i64),
                ell + int(k as i64) + int(m_k) + rat(5, 2),
            )
        }
    };
    finish(ExtendedPotential {
        family: family.clone(),
        mode: Mode::Deleting,
        indices: indices.clone(),
        k,
        start,
        seeds,
        wronskian: closed_form_wronskian(family, indices, Mode::Deleting)?,
        confining_offset: offset,
        correction: RatFun::zero(Var::X),
        potential: RatFun::zero(Var::X),
        spectrum: added_spectrum(indices, ground),
    })
}

/// Class II chain on `V_{l+k}` with seeds `0..=m_k`. The result must equal
/// `V_{l+k-m_k-1} + m_k + 1`; a mismatch is an [`Error::Identity`].
pub fn build_tilde_rho(ell: &Rat, k: usize, m_k: u32) -> Result<ExtendedPotential> {
    let indices = IndexList::new(vec![m_k]);
    if *ell < Rat::zero() {
        return Err(Error::Admissibility(vec![Violation::NegativeEll(
            ell.clone(),
        )]));
    }
    let ell_eff = ell + int(k as i64);
    if &ell_eff + rat(1, 2) <= int(m_k as i64) {
        return Err(Error::Admissibility(vec![Violation::TildeBound {
            ell_plus_k: ell_eff,
            m_k,
        }]));
    }
    let seeds = (0..=m_k)
        .map(|i| seed_phi_tilde_rho(&ell_eff, i))
        .collect::<Result<Vec<_>>>()?;
    let beta = -(&ell_eff + rat(1, 2));
    let polys: Vec<Poly> = (0..=m_k).map(|i| laguerre(i, &beta)).collect();
    let wronskian = poly_wronskian(&polys)?;
    let ell_target = &ell_eff - int(m_k as i64 + 1);
    finish(ExtendedPotential {
        family: Family::rho(ell_target),
        mode: Mode::Tilde,
        indices,
        k,
        start: radial_potential(&ell_eff),
        seeds,
        wronskian,
        confining_offset: int(m_k as i64 + 1),
        correction: RatFun::zero(Var::X),
        potential: RatFun::zero(Var::X),
        spectrum: Spectrum {
            added: Vec::new(),
            ground: ell_eff + rat(3, 2),
        },
    })
}

/// First `count` exact levels, ascending.
pub fn spectrum_table(p: &ExtendedPotential, count: usize) -> SpectrumTable {
    let (nu, exact) = p.spectrum.levels(count).into_iter().unzip();
    SpectrumTable::exact_only(nu, exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratfun_sub_constant_check;

    fn ho(m: &[u32]) -> IndexList {
        IndexList::new(m.to_vec())
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_admissible(&ho(&[2]), &Family::Ho, Mode::Adding).is_ok());
        assert!(check_admissible(&ho(&[0, 1, 2]), &Family::Ho, Mode::Adding).is_ok());
        let Err(Error::Admissibility(v)) = check_admissible(&ho(&[1]), &Family::Ho, Mode::Adding)
        else {
            panic!("m=(1) must be rejected")
        };
        assert_eq!(
            v[0],
            Violation::Parity {
                position: 1,
                value: 1
            }
        );
        assert!(v.contains(&Violation::SingularWronskian { roots: 1 }));
    }

    #[test]
    fn ho_adding_m2() {
        let p = build_state_adding(&Family::Ho, &ho(&[2])).unwrap();
        assert_eq!(p.potential.eval(&Rat::zero()), Some(int(-10)));
        assert_eq!(p.wronskian, pseudo_hermite(2));
        let levels: Vec<Rat> = p.spectrum.levels(4).into_iter().map(|l| l.1).collect();
        assert_eq!(levels, vec![int(-5), int(1), int(3), int(5)]);
    }

    #[test]
    fn ho_m0_is_shifted_oscillator() {
        let add = build_state_adding(&Family::Ho, &ho(&[0])).unwrap();
        assert_eq!(
            add.potential,
            RatFun::from_poly(Poly::from_ints(&[-2, 0, 1], Var::X))
        );
        let del = build_state_deleting(&Family::Ho, &ho(&[0])).unwrap();
        assert!(del.seeds.is_empty());
        // offset 2(m_k + 1 - k) = 0: the deleting branch is the oscillator itself
        assert_eq!(del.confining_offset, int(0));
        assert_eq!(
            del.potential,
            RatFun::from_poly(Poly::from_ints(&[0, 0, 1], Var::X))
        );
        assert_eq!(
            ratfun_sub_constant_check(&del.potential, &add.potential),
            Some(int(2))
        );
    }

    #[test]
    fn ho_shift_m2() {
        let add = build_state_adding(&Family::Ho, &ho(&[2])).unwrap();
        let del = build_state_deleting(&Family::Ho, &ho(&[2])).unwrap();
        assert_eq!(del.seeds.len(), 2);
        assert_eq!(
            ratfun_sub_constant_check(&del.potential, &add.potential),
            Some(int(6))
        );
        let levels: Vec<Rat> = del.spectrum.levels(4).into_iter().map(|l| l.1).collect();
        assert_eq!(levels, vec![int(1), int(7), int(9), int(11)]);
    }

    #[test]
    fn rho_shift_l2_m2() {
        let fam = Family::rho(int(2));
        let add = build_state_adding(&fam, &ho(&[2])).unwrap();
        let del = build_state_deleting(&fam, &ho(&[2])).unwrap();
        assert_eq!(
            ratfun_sub_constant_check(&del.potential, &add.potential),
            Some(int(3))
        );
        let levels: Vec<Rat> = add.spectrum.levels(3).into_iter().map(|l| l.1).collect();
        assert_eq!(levels, vec![rat(-3, 2), rat(9, 2), rat(13, 2)]);
    }

    #[test]
    fn tilde_examples() {
        let t = build_tilde_rho(&int(3), 1, 2).unwrap();
        assert_eq!(
            t.potential,
            &radial_potential(&int(1)) + &RatFun::constant(int(3), Var::X)
        );
        let t0 = build_tilde_rho(&int(2), 1, 0).unwrap();
        assert_eq!(
            t0.potential,
            &radial_potential(&int(2)) + &RatFun::constant(int(1), Var::X)
        );
        assert_eq!(t.spectrum.energy(0), int(3 + 1) + rat(3, 2));
        assert!(matches!(
            build_tilde_rho(&int(0), 1, 2),
            Err(Error::Admissibility(v)) if v[0].rule() == "tilde-bound"
        ));
    }
}
