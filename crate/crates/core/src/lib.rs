//! Exact construction of rationally extended harmonic and radial
//! oscillators by state-adding and state-deleting Darboux chains, the
//! ladder operators built from those chains, and numerical cross-checks.
//!
//! ```
//! use darboux_ladders::{build_state_adding, Family, IndexList};
//!
//! let p = build_state_adding(&Family::Ho, &IndexList::new(vec![2])).unwrap();
//! assert_eq!(p.spectrum.energy(-3), darboux_ladders::exactmath::int(-5));
//! ```

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod extension;
pub mod families;
pub mod ladder;
pub mod numerics;
pub mod quasirational;

pub use error::{Error, Result};
pub use exactmath::{Poly, Rat, RatFun, Var};
pub use extension::{
    build_state_adding, build_state_deleting, build_tilde_rho, check_admissible, spectrum_table,
    ExtendedPotential, Mode, Violation,
};
pub use families::{Eigenfunction, Family, IndexList};
pub use ladder::{DarbouxMap, LadderOperator, RationalExtension};
pub use numerics::{fd_eigenvalues, quadrature_norm2, Grid, SpectrumTable};
pub use quasirational::QuasiRat;
