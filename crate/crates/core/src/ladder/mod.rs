//! Darboux maps as differential operators, the ladder chains built from
//! them and the exact checks of their algebra.

mod darboux;
mod diffop;
mod operators;
mod verify;

pub use darboux::{darboux_apply, DarbouxMap, Direction};
pub use diffop::DiffOp;
pub use operators::{
    apply_hamiltonian, build_ladder_b, build_ladder_c, p2_polynomial, q_polynomial, BaseLadder,
    LadderOperator, Link, RationalExtension,
};
pub use verify::{
    action_coefficient_squared, chain_coefficient, commutator_residual, expected_zero_modes,
    norm_ratio, verify_action_coefficients, verify_b_singlets, verify_norm_ratios, verify_pha,
    verify_shift, verify_tilde, verify_zero_modes, Check, Report,
};
