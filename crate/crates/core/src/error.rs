use thiserror::Error;

use crate::extension::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("polynomials with mixed variables ({0} and {1})")]
    MixedVariables(char, char),

    #[error("zero polynomial has no well-defined root count")]
    ZeroPolynomial,

    #[error("functions are not in a common quasi-rational class: {0}")]
    IncompatibleClass(String),

    #[error("inadmissible configuration: {}", format_violations(.0))]
    Admissibility(Vec<Violation>),

    #[error("pole at x = {0}")]
    Pole(f64),

    #[error("eigensolver did not converge for eigenvalue {index} after {iterations} iterations")]
    Solver { index: usize, iterations: usize },

    #[error("integrand does not decay (gamma = {0})")]
    NonDecaying(String),

    #[error("identity failed: {0}")]
    Identity(String),

    #[error("io error: {0}")]
    Io(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
