//! Exact polynomial algebra in `Z[c][z]` for the quadratic family
//! `f_c(z) = z^2 + c`.
//!
//! The crate materializes iterates `f_c^n`, dynatomic polynomials `Phi_N`
//! (whose roots have formal period `N`), and generalized dynatomic
//! polynomials `Phi_{M,N}` (formal preperiod `M`, period `N`). Everything is
//! computed over arbitrary-precision integers; divisions that the theory
//! promises to be exact are checked, and a nonzero remainder aborts the
//! computation instead of rounding.

mod bivar;
mod dynatomic;

pub use bivar::BivarPoly;
pub use dynatomic::{
    cycle_bound_r, degree_d, dynatomic, fc_iterate, gen_dynatomic, DYNATOMIC_CAP, FC_CAP,
    GEN_M_CAP,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynError {
    #[error("{what} must be at least 1")]
    ZeroInput { what: &'static str },
    #[error("{what} = {got} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, got: u32, cap: u32 },
    #[error("division left a nonzero remainder: {0}")]
    Inexact(String),
    #[error("divisor is not monic in z: {0}")]
    NotMonic(String),
}
