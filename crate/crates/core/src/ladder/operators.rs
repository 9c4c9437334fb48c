use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, Poly, Rat, RatFun, Var};
use crate::extension::{
    build_state_adding, build_state_deleting, build_tilde_rho, check_admissible, ExtendedPotential,
    Mode,
};
use crate::families::{bound_state, Eigenfunction, Family, IndexList};
use crate::quasirational::{qr_wronskian, QuasiRat};

use super::darboux::DarbouxMap;
use super::diffop::DiffOp;

/// `-f'' + V f`.
pub fn apply_hamiltonian(v: &RatFun, f: &QuasiRat) -> Result<QuasiRat> {
    f.mul_ratfun(v).try_sub(&f.nth_derivative(2))
}

/// Explicit ladder operators of the starting Hamiltonian.
#[derive(Clone, Debug)]
pub struct BaseLadder {
    pub family: Family,
    pub lower: DiffOp,
    pub raise: DiffOp,
    pub lambda: Rat,
    /// `a^† a = P1(H)` on eigenfunctions.
    pub p1: Poly,
}

impl BaseLadder {
    /// `a = D + x` for HO; for RHO the second-order su(1,1) lowering
    /// operator of `x^2/4 + l(l+1)/x^2`.
    pub fn new(family: &Family) -> Self {
        let x = RatFun::from_poly(Poly::var_poly(Var::X));
        let (lower, p1) = match family {
            Family::Ho => (
                DiffOp::new(vec![x, RatFun::one(Var::X)]),
                Poly::linear_root(Rat::one(), Var::E),
            ),
            Family::Rho { ell } => {
                let c = ell * (ell + Rat::one()) * int(-2);
                // (x^4/2 + x^2 + c) / x^2
                let c0 = RatFun::new(
                    Poly::new(
                        vec![c, Rat::zero(), Rat::one(), Rat::zero(), rat(1, 2)],
                        Var::X,
                    ),
                    Poly::monomial(Rat::one(), 2, Var::X),
                );
                let op = DiffOp::new(vec![c0, x.scale(&int(2)), RatFun::constant(int(2), Var::X)])
                    .scale(&rat(1, 4));
                let p1 = (&Poly::linear_root(rat(3, 2) + ell, Var::E)
                    * &Poly::linear_root(rat(1, 2) - ell, Var::E))
                    .scale(&rat(1, 4));
                (op, p1)
            }
        };
        BaseLadder {
            family: family.clone(),
            raise: lower.adjoint(),
            lower,
            lambda: int(2),
            p1,
        }
    }
}

/// One step of a ladder chain.
#[derive(Clone, Debug)]
pub struct Link {
    pub name: String,
    pub op: DiffOp,
}

/// Chain of differential operators applied right to left, stored in
/// application order.
#[derive(Clone, Debug)]
pub struct LadderOperator {
    pub name: String,
    pub chain: Vec<Link>,
    /// Formal adjoints of `chain`, in application order.
    pub adjoint_chain: Vec<Link>,
    pub lambda: Rat,
    /// `L^† L = q(H)` on eigenfunctions.
    pub q_poly: Poly,
    pub order: usize,
}

impl LadderOperator {
    fn new(name: &str, chain: Vec<Link>, lambda: Rat, q_poly: Poly) -> Self {
        let order = chain.iter().map(|l| l.op.order()).sum();
        let adjoint_chain = adjoint_links(&chain);
        LadderOperator {
            name: name.to_string(),
            chain,
            adjoint_chain,
            lambda,
            q_poly,
            order,
        }
    }

    pub fn apply(&self, f: &QuasiRat) -> Result<QuasiRat> {
        apply_links(&self.chain, f)
    }

    pub fn apply_adjoint(&self, f: &QuasiRat) -> Result<QuasiRat> {
        apply_links(&self.adjoint_chain, f)
    }

    /// Formal adjoint as its own chain.
    pub fn adjoint(&self) -> LadderOperator {
        LadderOperator {
            name: format!("{}^†", self.name),
            chain: self.adjoint_chain.clone(),
            adjoint_chain: self.chain.clone(),
            lambda: -self.lambda.clone(),
            q_poly: self.q_poly.clone(),
            order: self.order,
        }
    }
}

fn adjoint_links(chain: &[Link]) -> Vec<Link> {
    chain
        .iter()
        .rev()
        .map(|l| Link {
            name: format!("{}^†", l.name),
            op: l.op.adjoint(),
        })
        .collect()
}

fn apply_links(chain: &[Link], f: &QuasiRat) -> Result<QuasiRat> {
    let mut g = f.clone();
    for link in chain {
        if g.is_zero() {
            break;
        }
        g = link.op.apply(&g)?;
    }
    Ok(g)
}

/// A rational extension together with all three Darboux maps needed for
/// its ladder operators.
#[derive(Clone, Debug)]
pub struct RationalExtension {
    pub family: Family,
    pub indices: IndexList,
    pub adding: ExtendedPotential,
    pub deleting: ExtendedPotential,
    pub tilde: Option<ExtendedPotential>,
    pub a_map: DarbouxMap,
    pub abar_map: DarbouxMap,
    pub tilde_map: Option<DarbouxMap>,
}

impl RationalExtension {
    /// Fails with the violations of every chain involved.
    pub fn new(family: &Family, indices: &IndexList) -> Result<Self> {
        let modes: &[Mode] = match family {
            Family::Ho => &[Mode::Adding, Mode::Deleting],
            Family::Rho { .. } => &[Mode::Adding, Mode::Deleting, Mode::Tilde],
        };
        let mut violations = Vec::new();
        for &mode in modes {
            match check_admissible(indices, family, mode) {
                Ok(()) => {}
                Err(Error::Admissibility(v)) => {
                    for x in v {
                        if !violations.contains(&x) {
                            violations.push(x);
                        }
                    }
                }
                Err(e) => return Err(e),
            }
        }
        if !violations.is_empty() {
            return Err(Error::Admissibility(violations));
        }
        let adding = build_state_adding(family, indices)?;
        let deleting = build_state_deleting(family, indices)?;
        let tilde = match family {
            Family::Ho => None,
            Family::Rho { ell } => Some(build_tilde_rho(ell, indices.k(), indices.m_k())?),
        };
        let a_map = DarbouxMap::from_seeds(&adding.seeds)?;
        let abar_map = DarbouxMap::from_seeds(&deleting.seeds)?;
        let tilde_map = tilde
            .as_ref()
            .map(|t| DarbouxMap::from_seeds(&t.seeds))
            .transpose()?;
        Ok(RationalExtension {
            family: family.clone(),
            indices: indices.clone(),
            adding,
            deleting,
            tilde,
            a_map,
            abar_map,
            tilde_map,
        })
    }

    /// The Hamiltonian the ladder operators act on.
    pub fn potential(&self) -> &RatFun {
        &self.adding.potential
    }

    /// Family of the starting Hamiltonian of the adding chain.
    pub fn start_family(&self) -> Family {
        match &self.family {
            Family::Ho => Family::Ho,
            Family::Rho { ell } => Family::rho(ell + int(self.indices.k() as i64)),
        }
    }

    pub fn energy(&self, nu: i64) -> Rat {
        self.adding.spectrum.energy(nu)
    }

    /// Unnormalized eigenfunction of the extended Hamiltonian. For
    /// `nu >= 0` this is `A psi_nu`; the added level `-m_i - 1` is
    /// `W(seeds without phi_i) / W(seeds)`.
    pub fn eigenstate(&self, nu: i64) -> Result<Eigenfunction> {
        let energy = self.energy(nu);
        if nu >= 0 {
            let psi = bound_state(&self.start_family(), nu as u32)?;
            return Ok(Eigenfunction::new(self.a_map.apply(&psi.f)?, energy));
        }
        let m = self.indices.as_slice();
        let pos = m
            .iter()
            .position(|&mi| -(mi as i64) - 1 == nu)
            .ok_or_else(|| Error::Input(format!("{nu} is not a level of the extended spectrum")))?;
        let seeds: Vec<QuasiRat> = self.adding.seeds.iter().map(|s| s.f.clone()).collect();
        let others: Vec<QuasiRat> = seeds
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, f)| f.clone())
            .collect();
        let num = if others.is_empty() {
            QuasiRat::from_ratfun(RatFun::one(Var::X))
        } else {
            qr_wronskian(&others)?
        };
        let f = num.try_div(&qr_wronskian(&seeds)?)?;
        Ok(Eigenfunction::new(f, energy))
    }

    /// First `count` eigenstates in increasing energy order.
    pub fn states(&self, count: usize) -> Result<Vec<(i64, Eigenfunction)>> {
        self.adding
            .spectrum
            .labels(count)
            .into_iter()
            .map(|nu| Ok((nu, self.eigenstate(nu)?)))
            .collect()
    }

    pub fn ladder_c(&self) -> LadderOperator {
        let mut chain = vec![Link {
            name: "A^†".into(),
            op: self.a_map.adjoint().op().clone(),
        }];
        if let Some(t) = &self.tilde_map {
            chain.push(Link {
                name: "Ã".into(),
                op: t.op().clone(),
            });
        }
        chain.push(Link {
            name: "Ā".into(),
            op: self.abar_map.op().clone(),
        });
        let lambda = int(2 * self.indices.m_k() as i64 + 2);
        LadderOperator::new(
            "c",
            chain,
            lambda,
            q_polynomial(&self.family, &self.indices),
        )
    }

    pub fn ladder_b(&self) -> LadderOperator {
        let base = BaseLadder::new(&self.start_family());
        let chain = vec![
            Link {
                name: "A^†".into(),
                op: self.a_map.adjoint().op().clone(),
            },
            Link {
                name: "a".into(),
                op: base.lower.clone(),
            },
            Link {
                name: "A".into(),
                op: self.a_map.op().clone(),
            },
        ];
        LadderOperator::new(
            "b",
            chain,
            base.lambda.clone(),
            p2_polynomial(&self.family, &self.indices),
        )
    }
}

pub fn build_ladder_b(family: &Family, indices: &IndexList) -> Result<LadderOperator> {
    Ok(RationalExtension::new(family, indices)?.ladder_b())
}

pub fn build_ladder_c(family: &Family, indices: &IndexList) -> Result<LadderOperator> {
    Ok(RationalExtension::new(family, indices)?.ladder_c())
}

fn product_of_roots(roots: impl IntoIterator<Item = Rat>) -> Poly {
    roots.into_iter().fold(Poly::one(Var::E), |acc, r| {
        &acc * &Poly::linear_root(r, Var::E)
    })
}

/// `c^† c = Q(H)`:
/// HO: `prod_i (E + 2 m_i + 1) prod_{j deleted} (E - 2j - 1)`;
/// RHO: `prod_i (E - alpha + 2 m_i - k + 1) prod_{j=0}^{m_k} (E + alpha - 2j + k - 1)
/// prod_{n deleted} (E - alpha - 2n - k - 1)`.
pub fn q_polynomial(family: &Family, indices: &IndexList) -> Poly {
    let m = indices.as_slice();
    let deleted = indices.deleted_levels();
    match family {
        Family::Ho => product_of_roots(
            m.iter()
                .map(|&mi| int(-2 * mi as i64 - 1))
                .chain(deleted.iter().map(|&j| int(2 * j as i64 + 1))),
        ),
        Family::Rho { ell } => {
            let alpha = ell + rat(1, 2);
            let k = int(indices.k() as i64);
            let first = m
                .iter()
                .map(|&mi| &alpha - int(2 * mi as i64) + &k - Rat::one());
            let middle = (0..=indices.m_k()).map(|j| -&alpha + int(2 * j as i64) - &k + Rat::one());
            let last = deleted
                .iter()
                .map(|&n| &alpha + int(2 * n as i64) + &k + Rat::one());
            product_of_roots(first.chain(middle).chain(last).collect::<Vec<_>>())
        }
    }
}

/// `P2(E) = P1(E) f(E - lambda) f(E)` with `f(E) = prod_i (E - eps_i)`
/// over the adding seeds.
pub fn p2_polynomial(family: &Family, indices: &IndexList) -> Poly {
    let k = indices.k() as i64;
    let eps: Vec<Rat> = indices
        .as_slice()
        .iter()
        .map(|&m| match family {
            Family::Ho => int(-2 * m as i64 - 1),
            Family::Rho { ell } => ell + int(k) - int(2 * m as i64) - rat(1, 2),
        })
        .collect();
    let start = match family {
        Family::Ho => Family::Ho,
        Family::Rho { ell } => Family::rho(ell + int(k)),
    };
    let p1 = BaseLadder::new(&start).p1;
    let f = product_of_roots(eps.clone());
    let f_shifted = product_of_roots(eps.into_iter().map(|e| e + int(2)));
    &(&p1 * &f_shifted) * &f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{base_potential, seed_psi_ho};

    #[test]
    fn rho_base_ladder_matches_explicit_raising_form() {
        let ell = int(2);
        let base = BaseLadder::new(&Family::rho(ell.clone()));
        let x = RatFun::from_poly(Poly::var_poly(Var::X));
        let c = ell.clone() * (ell + Rat::one()) * int(-2);
        let c0 = RatFun::new(
            Poly::new(
                vec![c, Rat::zero(), -Rat::one(), Rat::zero(), rat(1, 2)],
                Var::X,
            ),
            Poly::monomial(Rat::one(), 2, Var::X),
        );
        let expected = DiffOp::new(vec![
            c0,
            x.scale(&int(-2)),
            RatFun::constant(int(2), Var::X),
        ])
        .scale(&rat(1, 4));
        assert_eq!(base.raise, expected);
    }

    #[test]
    fn base_ladders_factorize() {
        for family in [Family::Ho, Family::rho(int(3))] {
            let base = BaseLadder::new(&family);
            let v = base_potential(&family);
            for nu in 0..4 {
                let psi = bound_state(&family, nu).unwrap();
                let down = base.lower.apply(&psi.f).unwrap();
                let back = base.raise.apply(&down).unwrap();
                assert_eq!(back, psi.f.scale(&base.p1.eval(&psi.energy)));
                if !down.is_zero() {
                    let e = apply_hamiltonian(&v, &down).unwrap();
                    assert_eq!(e, down.scale(&(&psi.energy - &base.lambda)));
                }
            }
        }
    }

    #[test]
    fn q_polynomial_ho_m2() {
        let q = q_polynomial(&Family::Ho, &IndexList::new(vec![2]));
        assert_eq!(q.eval(&int(1)), int(48));
        assert_eq!(q.degree(), Some(3));
        let expected = product_of_roots([int(-5), int(3), int(5)]);
        assert_eq!(q, expected);
    }

    #[test]
    fn q_polynomial_rho_degree() {
        let q = q_polynomial(&Family::rho(int(3)), &IndexList::new(vec![2]));
        assert_eq!(q.degree(), Some(6));
    }

    #[test]
    fn adding_map_on_ground_state() {
        let ext = RationalExtension::new(&Family::Ho, &IndexList::new(vec![2])).unwrap();
        let psi = ext.a_map.apply(&seed_psi_ho(0).f).unwrap();
        assert_eq!(apply_hamiltonian(ext.potential(), &psi).unwrap(), psi);
        let seed = ext.adding.seeds[0].f.clone();
        assert!(ext.a_map.apply(&seed).unwrap().is_zero());
    }

    #[test]
    fn ladder_orders() {
        let ext = RationalExtension::new(&Family::Ho, &IndexList::new(vec![2])).unwrap();
        let c = ext.ladder_c();
        assert_eq!((c.order, c.lambda.clone()), (3, int(6)));
        assert_eq!(ext.ladder_b().order, 3);
        let ext0 = RationalExtension::new(&Family::Ho, &IndexList::new(vec![0])).unwrap();
        let c0 = ext0.ladder_c();
        assert_eq!((c0.order, c0.lambda), (1, int(2)));
        let r = RationalExtension::new(&Family::rho(int(3)), &IndexList::new(vec![2])).unwrap();
        assert_eq!(r.ladder_c().order, 6);
    }
}
