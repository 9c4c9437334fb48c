use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        // huge numerators or denominators: scale down first
        _ => {
            let bits = r.numer().bits().max(r.denom().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Integer coefficients with unit content, lowest degree first.
fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive_part(
        p.coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
    )
}

fn primitive_part(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let Some(lead) = c.last() else {
        return c;
    };
    let mut g = c.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for v in &mut c {
            *v = &*v / &g;
        }
    }
    c
}

/// Remainder of `lc(b)^e a` by `b`, with content removed along the way.
fn pseudo_remainder(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let da = a.len() - 1;
        let la = a[da].clone();
        let g = la.gcd(lb);
        let (sa, sb) = (lb / &g, &la / &g);
        for v in a.iter_mut() {
            *v *= &sa;
        }
        for (j, bj) in b.iter().enumerate() {
            a[da - db + j] -= &sb * bj;
        }
        a.pop();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        a = primitive_part(a);
    }
    a
}

/// Variable a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Z,
    /// Energy variable for Q- and P-type polynomials in the Hamiltonian.
    E,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Z => 'z',
            Var::E => 'E',
        }
    }
}

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>, var: Var) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        Poly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(Rat::one(), var)
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        Poly::new(vec![c], var)
    }

    pub fn monomial(c: Rat, degree: usize, var: Var) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs, var)
    }

    /// The identity polynomial in `var`.
    pub fn var_poly(var: Var) -> Self {
        Poly::monomial(Rat::one(), 1, var)
    }

    /// `t - root` in `var`.
    pub fn linear_root(root: Rat, var: Var) -> Self {
        Poly::new(vec![-root, Rat::one()], var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at the origin.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + rat_to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Poly::new(coeffs, self.var)
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs, self.var)
    }

    /// Divide by `var^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Poly {
        debug_assert!(self.trailing_zeros() >= k || self.is_zero());
        Poly::new(self.coeffs.iter().skip(k).cloned().collect(), self.var)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(self.var);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        self.check_var(d);
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(self.var), Poly::zero(self.var));
        };
        if nd < dd {
            return (Poly::zero(self.var), self.clone());
        }
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] * &lc_inv;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot, self.var), Poly::new(rem, self.var))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive pseudo-remainder sequence on integer coefficients,
    /// which avoids the coefficient growth of Euclid over the rationals.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        a.check_var(b);
        let var = if a.is_zero() { b.var } else { a.var };
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one(var);
        }
        let (mut x, mut y) = (primitive_integer(a), primitive_integer(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            if y.len() == 1 {
                return Poly::one(var);
            }
            let r = primitive_part(pseudo_remainder(x, &y));
            x = y;
            y = r;
        }
        Poly::new(x.into_iter().map(Rat::from_integer).collect(), var).monic()
    }

    /// Monic least common multiple of nonzero polynomials.
    pub fn lcm(a: &Poly, b: &Poly) -> Poly {
        let g = Poly::gcd(a, b);
        (a * &b.exact_div(&g).expect("gcd divides")).monic()
    }

    /// `p(s * t^2)` written in `target`: used for the substitutions z = ±x²/2.
    pub fn substitute_scaled_square(&self, s: &Rat, target: Var) -> Poly {
        let mut coeffs = vec![Rat::zero(); 2 * self.coeffs.len()];
        let mut power = Rat::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * j] = c * &power;
            power *= s;
        }
        Poly::new(coeffs, target)
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly::new(coeffs, self.var)
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides")
    }

    pub fn sign_at(&self, t: &Rat) -> i32 {
        sign(&self.eval(t))
    }

    pub(crate) fn check_var(&self, other: &Poly) {
        assert!(
            self.var == other.var || self.is_constant() || other.is_constant(),
            "mixed polynomial variables {} and {}",
            self.var.symbol(),
            other.var.symbol()
        );
    }

    fn joint_var(&self, other: &Poly) -> Var {
        self.check_var(other);
        if self.is_constant() && !other.is_constant() {
            other.var
        } else {
            self.var
        }
    }
}

pub(crate) fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let var = self.joint_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(coeffs, var)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let var = self.joint_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs, var)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let var = self.joint_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs, var)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect(), self.var)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c, Var::X)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[-1, 0, 0, 1]);
        let d = p(&[-1, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(Poly::gcd(&a.scale(&int(7)), &b), p(&[-1, 1]));
        assert!(Poly::gcd(&p(&[]), &p(&[])).is_zero());
    }

    #[test]
    fn substitution_of_half_square() {
        // 1 + z at z = x^2/2 -> 1 + x^2/2
        let q = p(&[1, 1]).with_var(Var::Z);
        let r = q.substitute_scaled_square(&rat(1, 2), Var::X);
        assert_eq!(r, Poly::new(vec![int(1), int(0), rat(1, 2)], Var::X));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 0, 4]).to_string(), "4x^2 + 2");
        assert_eq!(p(&[-2, 1]).to_string(), "x - 2");
    }

    #[test]
    #[should_panic(expected = "mixed polynomial variables")]
    fn mixed_variables_panic() {
        let _ = &p(&[0, 1]) + &p(&[0, 1]).with_var(Var::Z);
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = Rat::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((rat_to_f64(&big) - 3.0).abs() < 1e-12);
    }
}
