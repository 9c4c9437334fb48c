//! Exact rational scalars, polynomials and rational functions in one
//! variable, with Wronskians and Sturm root counting.

mod poly;
mod ratfun;
mod sturm;
mod wronskian;

pub use poly::{int, rat, rat_to_f64, Poly, Rat, Var};
pub use ratfun::{log_second_derivative, ratfun_sub_constant_check, RatFun};
pub use sturm::{count_real_roots, sturm_sequence, Endpoint, Interval};
pub use wronskian::{determinant, poly_wronskian, ratfun_determinant};

pub(crate) use wronskian::clear_column_denominators;
