//! Iterates `f_c^n`, dynatomic polynomials `Phi_N`, generalized dynatomic
//! polynomials `Phi_{M,N}`, and the degree bookkeeping `D(N)`, `R(N)`.
//!
//! All three constructors memoize: the polynomials are pure functions of
//! their index, the working set is bounded by the caps, and downstream
//! callers (specialization at many parameter values) hit the same indices
//! repeatedly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use qp_arith::mobius;

use crate::{BivarPoly, DynError};

/// Largest iterate order; `f^12` has z-degree 4096 and gigabyte-scale
/// coefficient data, so the cap guards memory.
pub const FC_CAP: u32 = 12;
/// Largest dynatomic index; `D(8) = 240` coefficients stay manageable.
pub const DYNATOMIC_CAP: u32 = 8;
/// Largest preperiod for the generalized polynomials.
pub const GEN_M_CAP: u32 = 4;

static FC_CACHE: Lazy<Mutex<HashMap<u32, Arc<BivarPoly>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static PHI_CACHE: Lazy<Mutex<HashMap<u32, Arc<BivarPoly>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static GEN_CACHE: Lazy<Mutex<HashMap<(u32, u32), Arc<BivarPoly>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `f_c^n(z)`, the n-fold iterate of `z^2 + c`; `deg_z = 2^n`.
pub fn fc_iterate(n: u32) -> Result<Arc<BivarPoly>, DynError> {
    if n == 0 {
        return Err(DynError::ZeroInput { what: "iterate order n" });
    }
    if n > FC_CAP {
        return Err(DynError::CapExceeded { what: "iterate order n", got: n, cap: FC_CAP });
    }
    loop {
        // Take the highest cached level, then extend by one squaring with
        // the lock released; concurrent duplicates lose at insertion.
        let base = {
            let cache = FC_CACHE.lock().unwrap();
            if let Some(p) = cache.get(&n) {
                return Ok(p.clone());
            }
            (1..n).rev().find_map(|k| cache.get(&k).map(|p| (k, p.clone())))
        };
        let (level, poly) = match base {
            None => (1, BivarPoly::from_terms(&[(1, 0, 2), (1, 1, 0)])),
            Some((k, f)) => (k + 1, f.square().add(&BivarPoly::from_terms(&[(1, 1, 0)]))),
        };
        FC_CACHE
            .lock()
            .unwrap()
            .entry(level)
            .or_insert_with(|| Arc::new(poly));
    }
}

/// The dynatomic polynomial `Phi_N`, the product of `(f^n - z)^{mu(N/n)}`
/// over divisors `n` of `N`; `deg_z = D(N)`.
pub fn dynatomic(n: u32) -> Result<Arc<BivarPoly>, DynError> {
    if n == 0 {
        return Err(DynError::ZeroInput { what: "period N" });
    }
    if n > DYNATOMIC_CAP {
        return Err(DynError::CapExceeded { what: "period N", got: n, cap: DYNATOMIC_CAP });
    }
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let mut numerator: Vec<u32> = Vec::new();
    let mut denominator: Vec<u32> = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            match mobius((n / d) as u64) {
                1 => numerator.push(d),
                -1 => denominator.push(d),
                _ => {}
            }
        }
    }
    let mut acc = BivarPoly::from_terms(&[(1, 0, 0)]);
    for d in numerator {
        acc = acc.mul(&fc_iterate(d)?.sub_z());
    }
    for d in denominator {
        acc = acc.div_exact_z(&fc_iterate(d)?.sub_z())?;
    }
    let arc = Arc::new(acc);
    PHI_CACHE
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone());
    Ok(arc)
}

/// The generalized dynatomic polynomial `Phi_{M,N}`, the exact quotient
/// `Phi_N(c, f^M(z)) / Phi_N(c, f^{M-1}(z))`; `deg_z = 2^{M-1} D(N)`.
pub fn gen_dynatomic(m: u32, n: u32) -> Result<Arc<BivarPoly>, DynError> {
    if m == 0 {
        return Err(DynError::ZeroInput { what: "preperiod M" });
    }
    if n == 0 {
        return Err(DynError::ZeroInput { what: "period N" });
    }
    if m > GEN_M_CAP {
        return Err(DynError::CapExceeded { what: "preperiod M", got: m, cap: GEN_M_CAP });
    }
    if n > DYNATOMIC_CAP {
        return Err(DynError::CapExceeded { what: "period N", got: n, cap: DYNATOMIC_CAP });
    }
    if let Some(p) = GEN_CACHE.lock().unwrap().get(&(m, n)) {
        return Ok(p.clone());
    }
    let phi = dynatomic(n)?;
    let num = phi.compose_z(&*fc_iterate(m)?);
    let den = if m == 1 {
        (*phi).clone()
    } else {
        phi.compose_z(&*fc_iterate(m - 1)?)
    };
    let arc = Arc::new(num.div_exact_z(&den)?);
    GEN_CACHE
        .lock()
        .unwrap()
        .entry((m, n))
        .or_insert_with(|| arc.clone());
    Ok(arc)
}

/// `D(N) = sum over n | N of mu(N/n) 2^n`, the z-degree of `Phi_N`.
pub fn degree_d(n: u32) -> BigInt {
    assert!(n >= 1, "D(N) needs N >= 1");
    let mut total = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 {
            let term = BigInt::one() << d;
            match mobius((n / d) as u64) {
                1 => total += term,
                -1 => total -= term,
                _ => {}
            }
        }
    }
    total
}

/// `R(N)`, the bound on the number of N-cycles a portrait may carry:
/// `D(N)/N` for `N >= 2`, and 2 for `N = 1`.
pub fn cycle_bound_r(n: u32) -> BigInt {
    let d = degree_d(n);
    let (q, r) = d.div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero(), "D({n}) not divisible by {n}");
    q
}
