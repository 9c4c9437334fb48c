//! Real-root counting with Sturm sequences.

use num_traits::Zero;

use super::poly::{sign, Poly, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rat),
    PosInfinity,
}

/// Open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn real_line() -> Self {
        Interval {
            lo: Endpoint::NegInfinity,
            hi: Endpoint::PosInfinity,
        }
    }

    pub fn positive_half_line() -> Self {
        Interval {
            lo: Endpoint::Finite(Rat::zero()),
            hi: Endpoint::PosInfinity,
        }
    }

    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Interval { lo, hi }
    }
}

pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let p0 = p.squarefree();
    let p1 = p0.derivative();
    let mut seq = vec![p0];
    if p1.is_zero() {
        return seq;
    }
    seq.push(p1);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

/// Sign of `p` just to the right of `a` (first nonvanishing Taylor term).
fn sign_right_of(p: &Poly, a: &Rat) -> i32 {
    let mut q = p.clone();
    while !q.is_zero() {
        let s = q.sign_at(a);
        if s != 0 {
            return s;
        }
        q = q.derivative();
    }
    0
}

/// Sign of `p` just to the left of `b`.
fn sign_left_of(p: &Poly, b: &Rat) -> i32 {
    let mut q = p.clone();
    let mut flip = 1;
    while !q.is_zero() {
        let s = q.sign_at(b);
        if s != 0 {
            return flip * s;
        }
        q = q.derivative();
        flip = -flip;
    }
    0
}

fn sign_at_infinity(p: &Poly, positive: bool) -> i32 {
    let Some(lc) = p.leading() else { return 0 };
    let s = sign(lc);
    if positive || p.degree().unwrap_or(0) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval.
pub fn count_real_roots(p: &Poly, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let at_lo = |q: &Poly| match &interval.lo {
        Endpoint::NegInfinity => sign_at_infinity(q, false),
        Endpoint::PosInfinity => sign_at_infinity(q, true),
        Endpoint::Finite(a) => sign_right_of(q, a),
    };
    let at_hi = |q: &Poly| match &interval.hi {
        Endpoint::NegInfinity => sign_at_infinity(q, false),
        Endpoint::PosInfinity => sign_at_infinity(q, true),
        Endpoint::Finite(b) => sign_left_of(q, b),
    };
    let lo = variations(seq.iter().map(at_lo));
    let hi = variations(seq.iter().map(at_hi));
    Ok(lo.saturating_sub(hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::{int, Var};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c, Var::X)
    }

    #[test]
    fn quadratic_examples() {
        let line = Interval::real_line();
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &line).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]), &line).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[2, 0, 4]), &line).unwrap(), 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            count_real_roots(&p(&[]), &Interval::real_line()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn open_endpoints_exclude_roots() {
        // x (x - 1)(x - 2)
        let q = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
        let iv = Interval::new(Endpoint::Finite(int(0)), Endpoint::Finite(int(2)));
        assert_eq!(count_real_roots(&q, &iv).unwrap(), 1);
        assert_eq!(
            count_real_roots(&q, &Interval::positive_half_line()).unwrap(),
            2
        );
    }

    #[test]
    fn repeated_roots_counted_once() {
        let q = (&p(&[-1, 1]) * &p(&[-1, 1])).pow(2);
        assert_eq!(count_real_roots(&q, &Interval::real_line()).unwrap(), 1);
    }

    #[test]
    fn constants_have_no_roots() {
        assert_eq!(
            count_real_roots(&p(&[3]), &Interval::real_line()).unwrap(),
            0
        );
    }
}
