use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactmath::{int, Poly, Rat, RatFun, Var};
use crate::quasirational::QuasiRat;

/// Linear differential operator `sum_i c_i(x) D^i` with rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<RatFun>,
    /// `coeffs[i] = numers[i] / denom`.
    numers: Vec<Poly>,
    denom: Poly,
}

fn binomial(n: usize, k: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<RatFun>) -> Self {
        while coeffs.last().is_some_and(RatFun::is_zero) {
            coeffs.pop();
        }
        let denom = coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(Poly::one(Var::X), |acc, c| Poly::lcm(&acc, c.den()));
        let numers = coeffs
            .iter()
            .map(|c| c.num() * &denom.exact_div(c.den()).expect("lcm is a multiple"))
            .collect();
        DiffOp {
            coeffs,
            numers,
            denom,
        }
    }

    pub fn identity() -> Self {
        DiffOp::multiplication(RatFun::one(Var::X))
    }

    pub fn multiplication(f: RatFun) -> Self {
        DiffOp::new(vec![f])
    }

    pub fn derivative() -> Self {
        DiffOp::new(vec![RatFun::zero(Var::X), RatFun::one(Var::X)])
    }

    /// `-D^2 + V`.
    pub fn hamiltonian(v: &RatFun) -> Self {
        DiffOp::new(vec![
            v.clone(),
            RatFun::zero(Var::X),
            RatFun::constant(-Rat::one(), Var::X),
        ])
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFun {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(Var::X))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_i c_i f^(i)`. With `f = x^rho e^{gamma x^2} p / q` every
    /// derivative is kept as `x^{rho-i} e^{gamma x^2} P_i / q^{i+1}`, so the
    /// sum needs a single reduction at the end.
    pub fn apply(&self, f: &QuasiRat) -> Result<QuasiRat> {
        if f.is_zero() || self.is_zero() {
            return Ok(QuasiRat::zero());
        }
        let n = self.order();
        let (rho, gamma) = (f.rho(), f.gamma());
        let q = f.rational_part().den();
        let dq = q.derivative();
        let x = Poly::var_poly(Var::X);
        let mut p_i = f.rational_part().num().clone();
        // q^{n-i} for i = n..0
        let mut q_pows = vec![Poly::one(Var::X)];
        for _ in 0..n {
            let next = q_pows.last().expect("nonempty") * q;
            q_pows.push(next);
        }
        let mut sum = Poly::zero(Var::X);
        for i in 0..=n {
            let a = &self.numers[i];
            if !a.is_zero() {
                let term = &(a * &p_i) * &q_pows[n - i];
                sum = &sum + &term.shift(n - i);
            }
            if i < n {
                let outer = Poly::new(
                    vec![rho - int(i as i64), Rat::zero(), gamma * int(2)],
                    Var::X,
                );
                let grow = &(&(&outer * &p_i) + &(&x * &p_i.derivative())) * q;
                let shrink = (&(&x * &dq) * &p_i).scale(&int(i as i64 + 1));
                p_i = &grow - &shrink;
            }
        }
        if sum.is_zero() {
            return Ok(QuasiRat::zero());
        }
        let mut q_power = n + 1;
        if !q.is_constant() {
            while q_power > 0 {
                match sum.exact_div(q) {
                    Some(s) => {
                        sum = s;
                        q_power -= 1;
                    }
                    None => break,
                }
            }
        }
        let den = &self.denom
            * &q_pows
                .get(q_power)
                .cloned()
                .unwrap_or_else(|| q.pow(q_power as u32));
        Ok(QuasiRat::new(
            rho - int(n as i64),
            gamma.clone(),
            RatFun::new(sum, den),
        ))
    }

    /// Formal adjoint `sum_i (-D)^i c_i`, expanded as
    /// `d_j = sum_{i >= j} (-1)^i C(i, j) c_i^{(i - j)}`.
    pub fn adjoint(&self) -> DiffOp {
        let n = self.coeffs.len();
        // derivs[i][r] = r-th derivative of c_i
        let derivs: Vec<Vec<RatFun>> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = vec![c.clone()];
                for r in 1..=i {
                    let next = v[r - 1].derivative();
                    v.push(next);
                }
                v
            })
            .collect();
        let out = (0..n)
            .map(|j| {
                (j..n).fold(RatFun::zero(Var::X), |acc, i| {
                    let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                    let term = derivs[i][i - j].scale(&(sign * binomial(i, j)));
                    &acc + &term
                })
            })
            .collect();
        DiffOp::new(out)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &DiffOp) -> DiffOp {
        let n = self.order() + rhs.order() + 1;
        let mut out = vec![RatFun::zero(Var::X); n];
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::new(Vec::new());
        }
        for (j, b) in rhs.coeffs.iter().enumerate() {
            // D^i (b D^j) = sum_l C(i, l) b^{(i-l)} D^{j+l}
            let mut b_derivs = vec![b.clone()];
            for r in 1..self.coeffs.len() {
                let next = b_derivs[r - 1].derivative();
                b_derivs.push(next);
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for l in 0..=i {
                    let d = &b_derivs[i - l];
                    if d.is_zero() {
                        continue;
                    }
                    let term = (a * d).scale(&binomial(i, l));
                    out[j + l] = &out[j + l] + &term;
                }
            }
        }
        DiffOp::new(out)
    }

    pub fn add(&self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rat) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|f| f.scale(c)).collect())
    }
}
