use super::poly::{Poly, Var};
use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let var = m
        .iter()
        .flatten()
        .find(|p| !p.is_constant())
        .map_or(Var::X, |p| p.var());
    if n == 0 {
        return Poly::one(var);
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = Poly::one(var);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero(var);
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix of rational functions.
///
/// Each column is brought over its common denominator so the elimination
/// runs on polynomials.
pub fn ratfun_determinant(m: &[Vec<RatFun>]) -> RatFun {
    let (poly, scale) = clear_column_denominators(m);
    RatFun::new(determinant(poly), scale)
}

/// Multiplies column j by the lcm `L_j` of its denominators. Returns the
/// polynomial matrix and `prod L_j`.
pub(crate) fn clear_column_denominators(m: &[Vec<RatFun>]) -> (Vec<Vec<Poly>>, Poly) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let var = m
        .iter()
        .flatten()
        .find(|f| !f.den().is_constant() || !f.num().is_constant())
        .map_or(Var::X, |f| f.var());
    let mut out = vec![vec![Poly::zero(var); cols]; rows];
    let mut scale = Poly::one(var);
    for j in 0..cols {
        let l = (0..rows).fold(Poly::one(var), |acc, i| Poly::lcm(&acc, m[i][j].den()));
        for i in 0..rows {
            let factor = l.exact_div(m[i][j].den()).expect("lcm divides");
            out[i][j] = (m[i][j].num() * &factor).with_var(var);
        }
        scale = &scale * &l;
    }
    (out, scale)
}

/// Wronskian `det[f_j^(i)]` of polynomials, expanded exactly.
pub fn poly_wronskian(fs: &[Poly]) -> Result<Poly> {
    let first = fs
        .first()
        .ok_or_else(|| Error::Input("Wronskian of an empty list".into()))?;
    let var = first.var();
    if let Some(other) = fs.iter().find(|f| f.var() != var) {
        return Err(Error::MixedVariables(var.symbol(), other.var().symbol()));
    }
    let n = fs.len();
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n);
    rows.push(fs.to_vec());
    for i in 1..n {
        let next = rows[i - 1].iter().map(Poly::derivative).collect();
        rows.push(next);
    }
    Ok(determinant(rows).with_var(var))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c, Var::X)
    }

    #[test]
    fn small_examples() {
        assert_eq!(poly_wronskian(&[p(&[1])]).unwrap(), p(&[1]));
        assert_eq!(poly_wronskian(&[p(&[1]), p(&[0, 1])]).unwrap(), p(&[1]));
        assert_eq!(
            poly_wronskian(&[p(&[0, 1]), p(&[0, 0, 1])]).unwrap(),
            p(&[0, 0, 1])
        );
    }

    #[test]
    fn mixed_variables_rejected() {
        let err = poly_wronskian(&[p(&[0, 1]), p(&[0, 1]).with_var(Var::Z)]).unwrap_err();
        assert!(matches!(err, Error::MixedVariables('x', 'z')));
    }

    #[test]
    fn empty_list_rejected() {
        assert!(matches!(poly_wronskian(&[]), Err(Error::Input(_))));
    }

    #[test]
    fn pivoting_on_zero_leading_entry() {
        // [[0, 1], [1, 0]] -> -1
        let m = vec![vec![p(&[]), p(&[1])], vec![p(&[1]), p(&[])]];
        assert_eq!(determinant(m), p(&[-1]));
    }

    #[test]
    fn ratfun_determinant_matches_hand_value() {
        // [[1/x, 1], [1, x]] -> 1 - 1 = 0 ; [[1/x, 1], [0, x]] -> 1
        let inv = RatFun::power_of_var(-1, Var::X);
        let one = RatFun::one(Var::X);
        let x = RatFun::power_of_var(1, Var::X);
        let zero = RatFun::zero(Var::X);
        assert!(ratfun_determinant(&[
            vec![inv.clone(), one.clone()],
            vec![one.clone(), x.clone()]
        ])
        .is_zero());
        assert_eq!(
            ratfun_determinant(&[vec![inv, one.clone()], vec![zero, x]]),
            one
        );
    }
}
