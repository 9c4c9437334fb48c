use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exactmath::{int, rat_to_f64, ratfun_sub_constant_check, Poly, Rat, RatFun, Var};
use crate::families::{radial_potential, Family, IndexList};
use crate::numerics::{quadrature_norm2, Grid};
use crate::quasirational::{qr_ratio_constant, qr_wronskian, QuasiRat};

use super::operators::{apply_hamiltonian, LadderOperator, RationalExtension};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// `(H L - L H + lambda L) f` computed literally.
pub fn commutator_residual(v: &RatFun, op: &LadderOperator, f: &QuasiRat) -> Result<QuasiRat> {
    let lf = op.apply(f)?;
    let hlf = apply_hamiltonian(v, &lf)?;
    let lhf = op.apply(&apply_hamiltonian(v, f)?)?;
    hlf.try_sub(&lhf)?.try_add(&lf.scale(&op.lambda))
}

/// Commutator and `L^† L = q(H)` on the first `count` states.
pub fn verify_pha(ext: &RationalExtension, op: &LadderOperator, count: usize) -> Result<Report> {
    let mut report = Report::new(&format!("pha-{}", op.name));
    let v = ext.potential();
    for (nu, state) in ext.states(count)? {
        let res = commutator_residual(v, op, &state.f)?;
        report.push(Check::new(
            format!("[H,{}] + {} {} on psi_{nu}", op.name, op.lambda, op.name),
            res.is_zero(),
            if res.is_zero() {
                "0".to_string()
            } else {
                res.to_string()
            },
        ));
        let down = op.apply(&state.f)?;
        let back = op.apply_adjoint(&down)?;
        let q = op.q_poly.eval(&state.energy);
        let ok = back == state.f.scale(&q);
        report.push(Check::new(
            format!("{0}^†{0} psi_{nu} = q(E) psi_{nu}", op.name),
            ok,
            format!("q({}) = {q}", state.energy),
        ));
    }
    Ok(report)
}

/// Zero-mode labels listed for `c`: the added levels and every
/// `1..=m_k` except the kept gaps `m_k - m_i`.
pub fn expected_zero_modes(indices: &IndexList) -> BTreeSet<i64> {
    let m = indices.as_slice();
    let m_k = indices.m_k() as i64;
    let mut out: BTreeSet<i64> = m.iter().map(|&mi| -(mi as i64) - 1).collect();
    let mut gaps: Vec<i64> = m[..m.len() - 1].iter().map(|&mi| m_k - mi as i64).collect();
    gaps.sort_unstable();
    let mut lo = 1;
    for g in gaps.into_iter().chain(std::iter::once(m_k + 1)) {
        out.extend(lo..g);
        lo = g + 1;
    }
    out
}

/// Kernel of `c` among the added levels and `0..=nu_max`, checked in both
/// directions.
pub fn verify_zero_modes(ext: &RationalExtension, nu_max: i64) -> Result<Report> {
    let mut report = Report::new("zero-modes");
    let c = ext.ladder_c();
    let expected = expected_zero_modes(&ext.indices);
    let mut found = BTreeSet::new();
    let labels: Vec<i64> = ext
        .indices
        .added_labels()
        .into_iter()
        .chain(0..=nu_max)
        .collect();
    for nu in labels {
        let state = ext.eigenstate(nu)?;
        let image = c.apply(&state.f)?;
        let want = expected.contains(&nu);
        if image.is_zero() {
            found.insert(nu);
        }
        report.push(Check::new(
            format!("c psi_{nu}"),
            image.is_zero() == want,
            if image.is_zero() { "zero" } else { "nonzero" },
        ));
    }
    let listed: BTreeSet<i64> = expected.iter().copied().filter(|&n| n <= nu_max).collect();
    report.push(Check::new(
        "kernel equals listed zero modes",
        found == listed,
        format!("found {found:?}, listed {listed:?}"),
    ));
    report.push(Check::new(
        "number of lowest-weight states is m_k + 1",
        expected.len() == ext.indices.m_k() as usize + 1,
        format!("{} lowest-weight states", expected.len()),
    ));
    Ok(report)
}

fn factorial(n: i64) -> Rat {
    Rat::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

fn pow2(n: i64) -> Rat {
    Rat::from_integer(BigInt::one() << n as usize)
}

/// Squared matrix element of `c` between `psi_nu` and `psi_{nu - m_k - 1}`
/// for the oscillator extension, from its closed product form. Zero modes
/// give zero.
pub fn action_coefficient_squared(indices: &IndexList, nu: i64) -> Rat {
    if expected_zero_modes(indices).contains(&nu) {
        return Rat::zero();
    }
    let m: Vec<i64> = indices.as_slice().iter().map(|&v| v as i64).collect();
    let k = m.len();
    let m_k = m[k - 1];
    let head = pow2(m_k + 1);
    if nu == 0 {
        let prod = m[..k - 1]
            .iter()
            .fold(Rat::one(), |acc, &mi| acc * int(mi + 1) / int(m_k - mi));
        return head * factorial(m_k + 1) * prod;
    }
    if let Some(i) = m[..k - 1].iter().position(|&mi| m_k - mi == nu) {
        let mi = m[i];
        let left = m[..i].iter().fold(Rat::one(), |acc, &mj| {
            acc * int(m_k + mj - mi + 1) / int(mi - mj)
        });
        let right = m[i + 1..k - 1].iter().fold(Rat::one(), |acc, &ml| {
            acc * int(m_k + ml - mi + 1) / int(ml - mi)
        });
        return head
            * int(m_k + 1)
            * int(2 * m_k - mi + 1)
            * factorial(m_k - mi - 1)
            * factorial(mi)
            * left
            * right;
    }
    if nu >= m_k + 1 {
        let prod = m[..k - 1].iter().fold(Rat::one(), |acc, &mi| {
            acc * int(nu + mi + 1) / int(nu + mi - m_k)
        });
        return head * int(nu + m_k + 1) * factorial(nu - 1) / factorial(nu - m_k - 1) * prod;
    }
    Rat::zero()
}

/// Exact coefficient of `c psi_nu` along `psi_{nu - m_k - 1}`.
pub fn chain_coefficient(
    ext: &RationalExtension,
    c: &LadderOperator,
    nu: i64,
) -> Result<Option<Rat>> {
    let image = c.apply(&ext.eigenstate(nu)?.f)?;
    let target = ext.eigenstate(nu - ext.indices.m_k() as i64 - 1)?;
    Ok(qr_ratio_constant(&image, &target.f))
}

/// HO: closed-form squared coefficients equal `Q(E_nu)` for every label up
/// to `nu_max`. RHO: `Q(E_nu)` vanishes exactly on the zero modes and is
/// positive elsewhere. Both: `c psi_nu` is a nonzero multiple of
/// `psi_{nu - m_k - 1}` on the first `chain_max + 1` non-zero modes.
pub fn verify_action_coefficients(
    ext: &RationalExtension,
    nu_max: i64,
    chain_max: i64,
) -> Result<Report> {
    let mut report = Report::new("coefficients");
    let q = ext.ladder_c().q_poly;
    let zero = expected_zero_modes(&ext.indices);
    let labels: Vec<i64> = ext
        .indices
        .added_labels()
        .into_iter()
        .chain(0..=nu_max)
        .collect();
    for &nu in &labels {
        let qe = q.eval(&ext.energy(nu));
        match ext.family {
            Family::Ho => {
                let sq = action_coefficient_squared(&ext.indices, nu);
                report.push(Check::new(
                    format!("coefficient^2 at nu = {nu}"),
                    sq == qe,
                    format!("closed form {sq}, Q(E) {qe}"),
                ));
            }
            Family::Rho { .. } => {
                let ok = if zero.contains(&nu) {
                    qe.is_zero()
                } else {
                    qe.is_positive()
                };
                report.push(Check::new(
                    format!("Q(E) sign at nu = {nu}"),
                    ok,
                    format!("Q(E) = {qe}"),
                ));
            }
        }
    }
    let c = ext.ladder_c();
    for nu in (0..=chain_max.min(nu_max)).filter(|n| !zero.contains(n)) {
        let kappa = chain_coefficient(ext, &c, nu)?;
        let ok = kappa.as_ref().is_some_and(|k| !k.is_zero());
        report.push(Check::new(
            format!(
                "c psi_{nu} = kappa psi_{}",
                nu - ext.indices.m_k() as i64 - 1
            ),
            ok,
            kappa.map_or("not proportional".to_string(), |k| format!("kappa = {k}")),
        ));
    }
    Ok(report)
}

/// `kappa^2 |psi_{nu - m_k - 1}|^2 / |psi_nu|^2` by quadrature, next to the
/// exact `Q(E_nu)`.
pub fn norm_ratio(ext: &RationalExtension, nu: i64, grid: &Grid) -> Result<(f64, f64)> {
    let c = ext.ladder_c();
    let kappa = chain_coefficient(ext, &c, nu)?.ok_or_else(|| {
        crate::error::Error::Identity(format!("c psi_{nu} is not proportional to a state"))
    })?;
    let src = quadrature_norm2(&ext.eigenstate(nu)?.f, grid)?;
    let dst = quadrature_norm2(&ext.eigenstate(nu - ext.indices.m_k() as i64 - 1)?.f, grid)?;
    let k = rat_to_f64(&kappa);
    Ok((
        k * k * dst / src,
        rat_to_f64(&c.q_poly.eval(&ext.energy(nu))),
    ))
}

pub fn verify_norm_ratios(
    ext: &RationalExtension,
    nus: &[i64],
    grid: &Grid,
    tol: f64,
) -> Result<Report> {
    let mut report = Report::new("norm-ratio");
    for &nu in nus {
        let (got, want) = norm_ratio(ext, nu, grid)?;
        let rel = ((got - want) / want).abs();
        report.push(Check::new(
            format!("kappa^2 norm ratio at nu = {nu}"),
            rel < tol,
            format!("{got:.12} vs Q(E) = {want} (relative {rel:.2e})"),
        ));
    }
    Ok(report)
}

/// Deleting minus adding is the constant `2 m_k + 2` (HO) or `m_k + 1` (RHO).
pub fn verify_shift(ext: &RationalExtension) -> Report {
    let mut report = Report::new("shift");
    let m_k = ext.indices.m_k() as i64;
    let want = match ext.family {
        Family::Ho => int(2 * m_k + 2),
        Family::Rho { .. } => int(m_k + 1),
    };
    let got = ratfun_sub_constant_check(&ext.deleting.potential, &ext.adding.potential);
    report.push(Check::new(
        "deleting - adding potential",
        got.as_ref() == Some(&want),
        match got {
            Some(c) => format!("constant {c}, expected {want}"),
            None => "difference is not constant".to_string(),
        },
    ));
    report
}

/// Class II chain: `W(phi~_0..phi~_{m_k}) = (-1)^{m_k(m_k+1)/2}
/// (x^{-l-k} e^{-x^2/4})^{m_k+1} x^{m_k(m_k+1)/2}` and the partner equals
/// `V_{l+k-m_k-1} + m_k + 1`.
pub fn verify_tilde(ext: &RationalExtension) -> Result<Report> {
    let mut report = Report::new("tilde");
    let Some(t) = &ext.tilde else {
        report.push(Check::new("class II chain", true, "not applicable to HO"));
        return Ok(report);
    };
    let Family::Rho { ell } = &ext.family else {
        unreachable!("tilde chain exists only for RHO")
    };
    let k = int(ext.indices.k() as i64);
    let m_k = ext.indices.m_k() as i64;
    let n = int(m_k + 1);
    let tri = m_k * (m_k + 1) / 2;
    let fs: Vec<QuasiRat> = t.seeds.iter().map(|s| s.f.clone()).collect();
    let w = qr_wronskian(&fs)?;
    let sign = if tri % 2 == 0 { int(1) } else { int(-1) };
    let expected = QuasiRat::from_poly(
        -(ell + &k) * &n + int(tri),
        crate::exactmath::rat(-1, 4) * &n,
        Poly::constant(sign, Var::X),
    );
    report.push(Check::new(
        "Wronskian proportionality",
        w == expected,
        format!("W = {w}"),
    ));
    let target_ell = ell + &k - int(m_k + 1);
    let want = &radial_potential(&target_ell) + &RatFun::constant(int(m_k + 1), Var::X);
    report.push(Check::new(
        format!("partner = V_{target_ell} + {}", m_k + 1),
        t.potential == want,
        "exact rational-function comparison",
    ));
    Ok(report)
}

/// `b`, `b^†` annihilate every added state; `c` links `psi_0` and each
/// kept level to an added state, and `c^†` does not annihilate
/// `psi_{-m_k-1}`.
pub fn verify_b_singlets(ext: &RationalExtension) -> Result<Report> {
    let mut report = Report::new("b-singlets");
    let b = ext.ladder_b();
    let b_dag = b.adjoint();
    let c = ext.ladder_c();
    let m_k = ext.indices.m_k() as i64;
    for nu in ext.indices.added_labels() {
        let f = ext.eigenstate(nu)?.f;
        let bf = b.apply(&f)?;
        report.push(Check::new(format!("b psi_{nu} = 0"), bf.is_zero(), ""));
        let bdf = b_dag.apply(&f)?;
        report.push(Check::new(format!("b^† psi_{nu} = 0"), bdf.is_zero(), ""));
    }
    let sources: Vec<i64> = std::iter::once(0)
        .chain(
            ext.indices.as_slice()[..ext.indices.k() - 1]
                .iter()
                .map(|&mi| m_k - mi as i64),
        )
        .collect();
    for nu in sources {
        let kappa = chain_coefficient(ext, &c, nu)?;
        let ok = kappa.as_ref().is_some_and(|k| !k.is_zero());
        report.push(Check::new(
            format!("c psi_{nu} ∝ psi_{}", nu - m_k - 1),
            ok,
            kappa.map_or("not proportional".into(), |k| format!("kappa = {k}")),
        ));
    }
    let top = ext.eigenstate(-m_k - 1)?.f;
    let up = c.apply_adjoint(&top)?;
    let ground = ext.eigenstate(0)?.f;
    let ratio = qr_ratio_constant(&up, &ground);
    report.push(Check::new(
        format!("c^† psi_{} ∝ psi_0", -m_k - 1),
        ratio.as_ref().is_some_and(|r| !r.is_zero()),
        ratio.map_or("not proportional".into(), |r| format!("ratio = {r}")),
    ));
    Ok(report)
}
