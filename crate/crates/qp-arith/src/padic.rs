//! Mobius function and p-adic valuations of rationals.

use crate::roots::is_prime_u64;
use crate::{ArithError, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut n = n;
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// p-adic valuation; the valuation of 0 is the +infinity sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PadicVal {
    Finite(i64),
    PlusInfinity,
}

impl fmt::Display for PadicVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicVal::Finite(v) => write!(f, "{v}"),
            PadicVal::PlusInfinity => write!(f, "+inf"),
        }
    }
}

impl PadicVal {
    pub fn finite(&self) -> Option<i64> {
        match self {
            PadicVal::Finite(v) => Some(*v),
            PadicVal::PlusInfinity => None,
        }
    }
}

/// v_p(x) for rational x; rejects non-prime p.
pub fn padic_val(x: &Rat, p: u64) -> Result<PadicVal, ArithError> {
    if !is_prime_u64(p) {
        return Err(ArithError::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(PadicVal::PlusInfinity);
    }
    let pb = BigInt::from(p);
    Ok(PadicVal::Finite(
        int_val(x.num(), &pb) - int_val(x.den(), &pb),
    ))
}

/// v_p of a nonzero integer.
pub(crate) fn int_val(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}
