//! Exact polynomial and rational-function arithmetic.

use darboux_ladders::exactmath::{poly_wronskian, rat, Poly, RatFun, Var};

fn main() {
    let p = Poly::from_ints(&[-1, 0, 1], Var::X); // x^2 - 1
    let q = Poly::from_ints(&[1, 1], Var::X); // x + 1
    println!("p = {p}");
    println!("q = {q}");
    println!("p q = {}", &p * &q);
    println!("gcd(p, q) = {}", Poly::gcd(&p, &q));

    let (quot, rem) = p.div_rem(&Poly::from_ints(&[0, 2], Var::X));
    println!("p / 2x = {quot} rem {rem}");

    // common factors cancel on construction
    let f = RatFun::new(p.clone(), &q * &q);
    println!("(x^2 - 1)/(x + 1)^2 = {f}");
    println!("d/dx = {}", f.derivative());
    println!("f(1/2) = {}", f.eval(&rat(1, 2)).unwrap());

    let w = poly_wronskian(&[
        Poly::from_ints(&[1], Var::X),
        Poly::from_ints(&[0, 1], Var::X),
        Poly::from_ints(&[0, 0, 1], Var::X),
    ])
    .unwrap();
    println!("W(1, x, x^2) = {w}");
}
