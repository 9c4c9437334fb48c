use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Poly, Rat, Var};

/// Reduced rational function `num / den` with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and reduces `num / den`. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        num.check_var(&den);
        Self::reduced(num, den)
    }

    pub fn checked_new(num: Poly, den: Poly) -> Option<Self> {
        (!den.is_zero()).then(|| Self::new(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        let var = if den.is_constant() {
            num.var()
        } else {
            den.var()
        };
        if num.is_zero() {
            return RatFun {
                num: Poly::zero(var),
                den: Poly::one(var),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc_inv = den.leading().expect("nonzero").recip();
        RatFun {
            num: num.scale(&lc_inv).with_var(var),
            den: den.scale(&lc_inv).with_var(var),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFun {
            num: p,
            den: Poly::one(var),
        }
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        RatFun::from_poly(Poly::constant(c, var))
    }

    pub fn zero(var: Var) -> Self {
        RatFun::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RatFun::from_poly(Poly::one(var))
    }

    /// `var^k` for any integer `k`.
    pub fn power_of_var(k: i64, var: Var) -> Self {
        let m = Poly::monomial(Rat::one(), k.unsigned_abs() as usize, var);
        if k >= 0 {
            RatFun::from_poly(m)
        } else {
            RatFun {
                num: Poly::one(var),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<Poly> {
        self.den.is_constant().then(|| self.num.clone())
    }

    /// Canonical form again; a no-op on values built through this API.
    pub fn reduce(&self) -> RatFun {
        Self::reduced(self.num.clone(), self.den.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero(self.var());
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `var^k`, `k` of either sign.
    pub fn mul_var_pow(&self, k: i64) -> RatFun {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        if k > 0 {
            let k = k as usize;
            let cancel = self.den.trailing_zeros().min(k);
            RatFun {
                num: self.num.shift(k - cancel),
                den: self.den.unshift(cancel),
            }
        } else {
            let k = (-k) as usize;
            let cancel = self.num.trailing_zeros().min(k);
            RatFun {
                num: self.num.unshift(cancel),
                den: self.den.shift(k - cancel),
            }
        }
    }

    /// Exact value, or `None` at a pole.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        (!d.is_zero()).then(|| self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    pub fn derivative(&self) -> RatFun {
        if self.den.is_constant() {
            return RatFun::new(self.num.derivative(), self.den.clone());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFun::new(num, &self.den * &self.den)
    }

    pub fn recip(&self) -> Option<RatFun> {
        RatFun::checked_new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> RatFun {
        RatFun {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }
}

/// Second logarithmic derivative `(p'' p - p'^2) / p^2` of a nonzero polynomial.
pub fn log_second_derivative(p: &Poly) -> RatFun {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    RatFun::new(&(&d2 * p) - &(&d1 * &d1), p * p)
}

/// `Some(c)` when `a - b` reduces to the constant `c`.
pub fn ratfun_sub_constant_check(a: &RatFun, b: &RatFun) -> Option<Rat> {
    (a - b).as_constant()
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let a = self.den.exact_div(&g).expect("gcd divides");
        let b = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RatFun::new(num, &a * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero(self.var());
        }
        // cross-cancel before multiplying to keep degrees down
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc_inv = den.leading().expect("nonzero").recip();
        RatFun {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    /// Panics when dividing by zero.
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip().expect("division by the zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c, Var::X)
    }

    #[test]
    fn reduces_common_factor_and_normalizes_den() {
        // (x^2 - 1) / (2x - 2) = (x + 1)/2
        let f = RatFun::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(f.den(), &p(&[1]));
        assert_eq!(
            f.num(),
            &Poly::new(vec![crate::exactmath::rat(1, 2); 2], Var::X)
        );
    }

    #[test]
    fn sub_constant_check_examples() {
        let a = RatFun::from_poly(p(&[1, 0, 1]));
        let b = RatFun::from_poly(p(&[-1, 0, 1]));
        assert_eq!(ratfun_sub_constant_check(&a, &b), Some(int(2)));
        let a = RatFun::from_poly(p(&[0, 1]));
        let b = RatFun::from_poly(p(&[0, 0, 1]));
        assert_eq!(ratfun_sub_constant_check(&a, &b), None);
    }

    #[test]
    fn log_second_derivative_of_pseudo_hermite_two() {
        // (log(4x^2 + 2))'' at 0 is 4
        let l = log_second_derivative(&p(&[2, 0, 4]));
        assert_eq!(l.eval(&int(0)), Some(int(4)));
    }

    #[test]
    fn var_power_cancels() {
        let f = RatFun::new(p(&[1]), p(&[0, 0, 1]));
        assert_eq!(f.mul_var_pow(3), RatFun::from_poly(p(&[0, 1])));
        assert_eq!(RatFun::from_poly(p(&[0, 1])).mul_var_pow(-3), f);
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/x = -1/x^2
        let f = RatFun::power_of_var(-1, Var::X);
        assert_eq!(
            f.derivative(),
            RatFun::power_of_var(-2, Var::X).scale(&int(-1))
        );
    }
}
