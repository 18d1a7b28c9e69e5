//! Exact arithmetic kernel: canonical rationals, real and imaginary quadratic
//! field elements, p-adic valuations, integer square root certificates, and
//! multiplicative heights.
//!
//! Every comparison exposed here is exact. Irrational quantities (square
//! roots, quadratic Mahler measures, quadratic heights) are carried either as
//! certified rational bracketing intervals or as symbolic values with an exact
//! comparator against rational bounds; no decision anywhere rests on floating
//! point.

mod enumerate;
mod height;
mod padic;
mod poly;
mod quad;
mod rat;
mod roots;

pub use enumerate::{count_rationals_up_to, rationals_up_to};
pub use height::{height_quadratic, height_rational, MahlerInf, QuadHeight};
pub use padic::{mobius, padic_val, PadicVal};
pub use poly::{IntPoly, PolyQ};
pub use quad::{QuadElem, QuadField};
pub use rat::Rat;
pub use roots::{
    cmp_sqrt, factorize, is_perfect_square, is_prime_u64, rat_sqrt, sqrt_interval, squarefree_part,
};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("square root of negative integer {0}")]
    NegativeSquareInput(BigInt),
    #[error("invalid quadratic field discriminant {0}: must be squarefree and not 0 or 1")]
    BadDiscriminant(BigInt),
    #[error("operands belong to different quadratic fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("sign of an imaginary-field element is undefined")]
    ImaginarySign,
    #[error("polynomial is not quadratic: degree {0}")]
    NotQuadratic(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl ArithError {
    pub fn parse(msg: impl Into<String>) -> Self {
        ArithError::Parse(msg.into())
    }
}
