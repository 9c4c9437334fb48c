use darboux_ladders::exactmath::{
    count_real_roots, int, poly_wronskian, rat, Interval, Poly, Rat, RatFun, Var,
};
use darboux_ladders::families::{hermite, laguerre, pseudo_hermite};
use proptest::prelude::*;

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1).prop_map(|c| Poly::from_ints(&c, Var::X))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    poly_strategy(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn from_roots(roots: &[i64]) -> Poly {
    roots.iter().fold(Poly::one(Var::X), |acc, &r| {
        &acc * &Poly::linear_root(int(r), Var::X)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wronskian_is_antisymmetric(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        let w = poly_wronskian(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let swapped = poly_wronskian(&[b, a, c]).unwrap();
        prop_assert_eq!(swapped, -w);
    }

    #[test]
    fn wronskian_scales_linearly(a in poly_strategy(4), b in poly_strategy(4), s in -5i64..=5) {
        let w = poly_wronskian(&[a.clone(), b.clone()]).unwrap();
        let ws = poly_wronskian(&[a.scale(&int(s)), b]).unwrap();
        prop_assert_eq!(ws, w.scale(&int(s)));
    }

    #[test]
    fn sturm_counts_distinct_roots(
        roots in prop::collection::btree_set(-12i64..=12, 0..6),
        repeat in 0usize..3,
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        // a repeated root and an irreducible quadratic must not change the count
        let mut p = &from_roots(&roots) * &Poly::from_ints(&[1, 0, 1], Var::X);
        if let Some(&r) = roots.first() {
            for _ in 0..repeat {
                p = &p * &Poly::linear_root(int(r), Var::X);
            }
        }
        let n = count_real_roots(&p, &Interval::real_line()).unwrap();
        prop_assert_eq!(n, roots.len());
        let positive = roots.iter().filter(|&&r| r > 0).count();
        let m = count_real_roots(&p, &Interval::positive_half_line()).unwrap();
        prop_assert_eq!(m, positive);
    }

    #[test]
    fn sturm_agrees_with_sign_changes(p in nonzero_poly(5)) {
        // sampled sign changes are a lower bound on the root count
        let n = count_real_roots(&p, &Interval::real_line()).unwrap();
        let mut changes = 0;
        let mut last = p.sign_at(&int(-100));
        for i in -4000..=4000 {
            let s = p.sign_at(&rat(i, 40));
            if s != 0 && last != 0 && s != last {
                changes += 1;
            }
            if s != 0 {
                last = s;
            }
        }
        prop_assert!(changes <= n);
        prop_assert!(n <= p.degree().unwrap_or(0));
    }

    #[test]
    fn reduction_cancels_common_factors(p in nonzero_poly(3), q in nonzero_poly(3), g in nonzero_poly(2)) {
        let plain = RatFun::new(p.clone(), q.clone());
        let padded = RatFun::new(&p * &g, &q * &g);
        prop_assert_eq!(&padded, &plain);
        prop_assert_eq!(padded.reduce(), plain);
    }

    #[test]
    fn gcd_divides_both(p in nonzero_poly(3), q in nonzero_poly(3), g in nonzero_poly(2)) {
        let a = &p * &g;
        let b = &q * &g;
        let d = Poly::gcd(&a, &b);
        prop_assert!(a.exact_div(&d).is_some());
        prop_assert!(b.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&g.monic()).is_some());
    }

    #[test]
    fn derivative_is_linear_and_leibniz(f in poly_strategy(5), g in poly_strategy(5), s in -4i64..=4) {
        let lin = (&f.scale(&int(s)) + &g).derivative();
        prop_assert_eq!(lin, &f.derivative().scale(&int(s)) + &g.derivative());
        let prod = (&f * &g).derivative();
        prop_assert_eq!(prod, &(&f.derivative() * &g) + &(&f * &g.derivative()));
    }

    #[test]
    fn ratfun_quotient_rule(p in nonzero_poly(3), q in nonzero_poly(3)) {
        let f = RatFun::new(p.clone(), q.clone());
        let qr = RatFun::from_poly(q.clone());
        // (f q)' = f' q + f q'
        let lhs = RatFun::from_poly(p.derivative());
        let rhs = &(&f.derivative() * &qr) + &(&f * &RatFun::from_poly(q.derivative()));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn hermite_solves_its_ode() {
    // y'' - 2x y' + 2m y = 0
    for m in 0..12u32 {
        let h = hermite(m);
        let x = Poly::var_poly(Var::X);
        let lhs = &(&h.nth_derivative(2) - &(&x * &h.derivative()).scale(&int(2)))
            + &h.scale(&int(2 * m as i64));
        assert!(lhs.is_zero(), "m = {m}");
        assert_eq!(h.leading(), Some(&Rat::from_integer(num_bigint_pow2(m))));
    }
}

fn num_bigint_pow2(m: u32) -> num_bigint::BigInt {
    num_bigint::BigInt::from(1u64 << m)
}

#[test]
fn pseudo_hermite_solves_its_ode_and_is_nodeless_for_even_m() {
    // y'' + 2x y' - 2m y = 0
    for m in 0..12u32 {
        let h = pseudo_hermite(m);
        let x = Poly::var_poly(Var::X);
        let lhs = &(&h.nth_derivative(2) + &(&x * &h.derivative()).scale(&int(2)))
            - &h.scale(&int(2 * m as i64));
        assert!(lhs.is_zero(), "m = {m}");
        let roots = count_real_roots(&h, &Interval::real_line()).unwrap();
        assert_eq!(roots, if m % 2 == 0 { 0 } else { 1 }, "m = {m}");
    }
}

#[test]
fn laguerre_solves_its_ode() {
    // z y'' + (beta + 1 - z) y' + m y = 0
    for beta in [rat(-7, 2), rat(1, 2), int(3), rat(5, 2)] {
        for m in 0..9u32 {
            let l = laguerre(m, &beta);
            let z = Poly::var_poly(Var::Z);
            let coef = Poly::new(vec![&beta + int(1), int(-1)], Var::Z);
            let lhs = &(&(&z * &l.nth_derivative(2)) + &(&coef * &l.derivative()))
                + &l.scale(&int(m as i64));
            assert!(lhs.is_zero(), "m = {m}, beta = {beta}");
        }
    }
}

#[test]
fn laguerre_matches_closed_form_coefficients() {
    // L_m^(b)(z) = sum_j (-1)^j C(m + b, m - j) z^j / j!
    let beta = rat(3, 2);
    let m = 5u32;
    let l = laguerre(m, &beta);
    for j in 0..=m {
        let mut binom = int(1);
        for i in 0..(m - j) {
            binom = binom * (&beta + int((j + 1 + i) as i64)) / int((i + 1) as i64);
        }
        let fact: i64 = (1..=j as i64).product();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            l.coeff(j as usize),
            binom * int(sign) / int(fact),
            "j = {j}"
        );
    }
}
