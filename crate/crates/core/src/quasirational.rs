//! Functions of the form `x^rho * exp(gamma x^2) * R(x)` with exact
//! rational `rho`, `gamma` and a rational function `R`.
//!
//! The class is closed under differentiation, products, multiplication by
//! rational potentials and (for a common `gamma` and integer-spaced `rho`)
//! sums, which is all a Darboux chain needs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    clear_column_denominators, determinant, int, rat_to_f64, Poly, Rat, RatFun, Var,
};

/// `x^rho e^{gamma x^2} r(x)` in canonical form: neither the numerator nor
/// the denominator of `r` vanishes at the origin; any power of `x` lives in
/// `rho`. The zero function is `rho = gamma = 0`, `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiRat {
    rho: Rat,
    gamma: Rat,
    r: RatFun,
}

impl QuasiRat {
    pub fn new(rho: Rat, gamma: Rat, r: RatFun) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let vn = r.num().trailing_zeros();
        let vd = r.den().trailing_zeros();
        let r = if vn == 0 && vd == 0 {
            r
        } else {
            RatFun::new(r.num().unshift(vn), r.den().unshift(vd))
        };
        let rho = rho + int(vn as i64) - int(vd as i64);
        QuasiRat { rho, gamma, r }
    }

    pub fn zero() -> Self {
        QuasiRat {
            rho: Rat::zero(),
            gamma: Rat::zero(),
            r: RatFun::zero(Var::X),
        }
    }

    pub fn from_poly(rho: Rat, gamma: Rat, p: Poly) -> Self {
        Self::new(rho, gamma, RatFun::from_poly(p))
    }

    pub fn from_ratfun(r: RatFun) -> Self {
        Self::new(Rat::zero(), Rat::zero(), r)
    }

    pub fn rho(&self) -> &Rat {
        &self.rho
    }

    pub fn gamma(&self) -> &Rat {
        &self.gamma
    }

    pub fn rational_part(&self) -> &RatFun {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> QuasiRat {
        if c.is_zero() {
            return Self::zero();
        }
        QuasiRat {
            rho: self.rho.clone(),
            gamma: self.gamma.clone(),
            r: self.r.scale(c),
        }
    }

    pub fn mul_ratfun(&self, f: &RatFun) -> QuasiRat {
        if self.is_zero() || f.is_zero() {
            return Self::zero();
        }
        Self::new(self.rho.clone(), self.gamma.clone(), &self.r * f)
    }

    pub fn mul(&self, other: &QuasiRat) -> QuasiRat {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(
            &self.rho + &other.rho,
            &self.gamma + &other.gamma,
            &self.r * &other.r,
        )
    }

    pub fn try_div(&self, other: &QuasiRat) -> Result<QuasiRat> {
        let inv = other
            .r
            .recip()
            .ok_or_else(|| Error::Input("division by the zero function".into()))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::new(
            &self.rho - &other.rho,
            &self.gamma - &other.gamma,
            &self.r * &inv,
        ))
    }

    /// `d/dx [x^rho e^{gamma x^2} R] = x^{rho-1} e^{gamma x^2} (rho R + 2 gamma x^2 R + x R')`.
    pub fn differentiate(&self) -> QuasiRat {
        if self.is_zero() {
            return Self::zero();
        }
        let var = Var::X;
        let outer = Poly::new(
            vec![self.rho.clone(), Rat::zero(), &self.gamma * int(2)],
            var,
        );
        let term = &self.r * &RatFun::from_poly(outer);
        let xr = self.r.derivative().mul_var_pow(1);
        Self::new(&self.rho - Rat::one(), self.gamma.clone(), &term + &xr)
    }

    pub fn nth_derivative(&self, n: usize) -> QuasiRat {
        (0..n).fold(self.clone(), |f, _| f.differentiate())
    }

    /// Rational function `s` with `self = x^rho0 e^{gamma x^2} s`, provided
    /// `rho - rho0` is an integer.
    pub fn rational_part_relative_to(&self, rho0: &Rat) -> Option<RatFun> {
        if self.is_zero() {
            return Some(RatFun::zero(Var::X));
        }
        let shift = &self.rho - rho0;
        shift.is_integer().then(|| {
            self.r
                .mul_var_pow(shift.to_integer().to_i64().expect("small shift"))
        })
    }

    fn compatible(&self, other: &QuasiRat) -> Result<()> {
        if self.gamma != other.gamma {
            return Err(Error::IncompatibleClass(format!(
                "gamma {} vs {}",
                self.gamma, other.gamma
            )));
        }
        if !(&self.rho - &other.rho).is_integer() {
            return Err(Error::IncompatibleClass(format!(
                "rho {} and {} differ by a non-integer",
                self.rho, other.rho
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QuasiRat) -> Result<QuasiRat> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        self.compatible(other)?;
        let rho0 = if self.rho < other.rho {
            self.rho.clone()
        } else {
            other.rho.clone()
        };
        let a = self.rational_part_relative_to(&rho0).expect("checked");
        let b = other.rational_part_relative_to(&rho0).expect("checked");
        Ok(Self::new(rho0, self.gamma.clone(), &a + &b))
    }

    pub fn try_sub(&self, other: &QuasiRat) -> Result<QuasiRat> {
        self.try_add(&other.scale(&-Rat::one()))
    }

    /// Evaluates at `x`; `None` at a pole or where `x^rho` is not real.
    pub fn eval_f64(&self, x: f64) -> Option<f64> {
        if self.is_zero() {
            return Some(0.0);
        }
        let den = self.r.den().eval_f64(x);
        if den == 0.0 {
            return None;
        }
        let power = if self.rho.is_integer() {
            x.powi(self.rho.to_integer().to_i32()?)
        } else if x > 0.0 {
            x.powf(rat_to_f64(&self.rho))
        } else {
            return None;
        };
        let gauss = (rat_to_f64(&self.gamma) * x * x).exp();
        Some(power * gauss * self.r.num().eval_f64(x) / den)
    }

    /// Sign of the leading coefficient of the rational part's numerator.
    pub fn leading_sign(&self) -> i32 {
        match self.r.num().leading() {
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

impl fmt::Display for QuasiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.rho.is_zero() {
            write!(f, "x^({}) ", self.rho)?;
        }
        if !self.gamma.is_zero() {
            write!(f, "exp({} x^2) ", self.gamma)?;
        }
        write!(f, "[{}]", self.r)
    }
}

/// `Some(c)` when `f = c g` exactly. `g` must be nonzero.
pub fn qr_ratio_constant(f: &QuasiRat, g: &QuasiRat) -> Option<Rat> {
    if g.is_zero() {
        return None;
    }
    if f.is_zero() {
        return Some(Rat::zero());
    }
    if f.rho != g.rho || f.gamma != g.gamma {
        return None;
    }
    (&f.r / &g.r).as_constant()
}

pub fn qr_is_zero(f: &QuasiRat) -> bool {
    f.is_zero()
}

pub fn qr_differentiate(f: &QuasiRat) -> QuasiRat {
    f.differentiate()
}

/// Common prefactor data for a list of functions sharing `gamma` with
/// integer-spaced `rho`: `(rho0, gamma, rational parts relative to rho0)`.
pub(crate) fn common_frame(fs: &[QuasiRat]) -> Result<(Rat, Rat, Vec<RatFun>)> {
    let nonzero: Vec<&QuasiRat> = fs.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Ok((
            Rat::zero(),
            Rat::zero(),
            vec![RatFun::zero(Var::X); fs.len()],
        ));
    };
    for f in &nonzero[1..] {
        first.compatible(f)?;
    }
    let rho0 = nonzero
        .iter()
        .map(|f| f.rho.clone())
        .min()
        .expect("nonempty");
    let parts = fs
        .iter()
        .map(|f| f.rational_part_relative_to(&rho0).expect("checked"))
        .collect();
    Ok((rho0, first.gamma.clone(), parts))
}

/// `D_P s = s' + (rho0 / x + 2 gamma x) s`: differentiation of
/// `x^rho0 e^{gamma x^2} s` expressed on the rational factor.
pub(crate) fn frame_derivative(s: &RatFun, rho0: &Rat, gamma: &Rat) -> RatFun {
    if s.is_zero() {
        return s.clone();
    }
    let log_der = RatFun::new(
        Poly::new(vec![rho0.clone(), Rat::zero(), gamma * int(2)], Var::X),
        Poly::var_poly(Var::X),
    );
    &s.derivative() + &(s * &log_der)
}

/// Matrix `[D_P^i s_j]` for `i < rows`.
pub(crate) fn derivative_matrix(
    parts: &[RatFun],
    rho0: &Rat,
    gamma: &Rat,
    rows: usize,
) -> Vec<Vec<RatFun>> {
    let mut m: Vec<Vec<RatFun>> = Vec::with_capacity(rows);
    if rows == 0 {
        return m;
    }
    m.push(parts.to_vec());
    for i in 1..rows {
        let next = m[i - 1]
            .iter()
            .map(|s| frame_derivative(s, rho0, gamma))
            .collect();
        m.push(next);
    }
    m
}

/// Exact Wronskian of quasi-rational functions sharing one `gamma`.
///
/// The shared prefactor `x^rho0 e^{gamma x^2}` comes out to the n-th power
/// and the remaining determinant is taken over rational functions.
pub fn qr_wronskian(fs: &[QuasiRat]) -> Result<QuasiRat> {
    if fs.is_empty() {
        return Err(Error::Input("Wronskian of an empty list".into()));
    }
    if fs.iter().any(QuasiRat::is_zero) {
        return Ok(QuasiRat::zero());
    }
    let (rho0, gamma, parts) = common_frame(fs)?;
    let n = fs.len();
    let m = derivative_matrix(&parts, &rho0, &gamma, n);
    let (poly, scale) = clear_column_denominators(&m);
    let det = RatFun::new(determinant(poly), scale);
    let n_rat = Rat::from_integer(BigInt::from(n));
    Ok(QuasiRat::new(&rho0 * &n_rat, &gamma * &n_rat, det))
}
