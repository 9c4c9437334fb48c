//! Floating-point cross-checks: finite-difference spectra, quadrature norms
//! and pointwise evaluation of exact objects.

mod eigen;
mod grid;
mod quadrature;
mod table;

pub use eigen::{fd_eigenvalues, tridiagonal_eigenvalues};
pub use grid::{evaluate_potential, evaluate_qr, Grid};
pub use quadrature::quadrature_norm2;
pub use table::SpectrumTable;
