//! Multiplicative heights and archimedean Mahler measures of degree <= 2
//! minimal polynomials, with exact comparators.
//!
//! For a quadratic integer polynomial the Mahler measure is either rational
//! (both roots inside or both outside the closed unit disk, or complex
//! conjugate roots) or of the form (|b| + sqrt(disc))/2 when exactly one real
//! root escapes the disk. Both shapes compare exactly against rational bounds
//! by squaring.

use crate::poly::IntPoly;
use crate::roots::{is_perfect_square, sqrt_interval};
use crate::{ArithError, Rat};
use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;

/// H(a/b) = max(|a|, |b|) in lowest terms.
pub fn height_rational(x: &Rat) -> BigInt {
    x.num().abs().max(x.den().abs())
}

/// Sign of A + B*sqrt(rad) with rad >= 0 rational, exact.
fn sign_linear_sqrt(a: &Rat, b: &Rat, rad: &Rat) -> i32 {
    assert!(!rad.is_negative());
    let sb = if rad.is_zero() { 0 } else { b.signum() };
    let sa = a.signum();
    if sb == 0 {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    let a2 = a.square();
    let b2r = &b.square() * rad;
    match a2.cmp(&b2r) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Archimedean Mahler measure of a degree <= 2 integer polynomial,
/// represented exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MahlerInf {
    Exact(Rat),
    /// base + coef * sqrt(rad), with rad positive and not a perfect square.
    PlusSqrt { base: Rat, coef: Rat, rad: Rat },
}

impl MahlerInf {
    /// M_inf of a nonzero polynomial of degree <= 2 (content included).
    pub fn of_quadratic(p: &IntPoly) -> Result<Self, ArithError> {
        let deg = p
            .degree()
            .ok_or_else(|| ArithError::NotQuadratic(usize::MAX))?;
        match deg {
            0 => Ok(MahlerInf::Exact(Rat::from_bigint(p.coeff(0).abs()))),
            // M(a1 z + a0) = max(|a1|, |a0|).
            1 => Ok(MahlerInf::Exact(Rat::from_bigint(
                p.coeff(0).abs().max(p.coeff(1).abs()),
            ))),
            2 => {
                let c = Rat::from_bigint(p.coeff(0));
                let b = Rat::from_bigint(p.coeff(1));
                let a = Rat::from_bigint(p.coeff(2));
                let disc = &b.square() - &(&(&a * &c) * &Rat::from_int(4));
                if disc.is_negative() {
                    // Conjugate complex roots: M = max(|a|, |c|).
                    return Ok(MahlerInf::Exact(a.abs().max(c.abs())));
                }
                // Real roots (-b +- sqrt(disc)) / (2a). Count strict escapes
                // from the closed unit disk.
                let two_a = &a + &a;
                let mut outside = 0u32;
                for s_coef in [Rat::one(), -Rat::one()] {
                    // root > 1  <=>  sign(-b - 2a + s) * sign(2a) > 0
                    let gt1 = sign_linear_sqrt(&(&(-&b) - &two_a), &s_coef, &disc)
                        * two_a.signum();
                    // root < -1  <=>  sign(-b + 2a + s) * sign(2a) < 0
                    let ltm1 = sign_linear_sqrt(&(&(-&b) + &two_a), &s_coef, &disc)
                        * two_a.signum();
                    if gt1 > 0 || ltm1 < 0 {
                        outside += 1;
                    }
                }
                match outside {
                    0 => Ok(MahlerInf::Exact(a.abs())),
                    2 => Ok(MahlerInf::Exact(c.abs())),
                    _ => {
                        // Larger |root| escapes: M = (|b| + sqrt(disc)) / 2.
                        let num = disc.num() * disc.den();
                        if let Some(r) = is_perfect_square(&num)? {
                            let s = Rat::new(r, disc.den().clone()).unwrap();
                            Ok(MahlerInf::Exact(
                                &(&b.abs() + &s) * &Rat::new(1.into(), 2.into()).unwrap(),
                            ))
                        } else {
                            Ok(MahlerInf::PlusSqrt {
                                base: &b.abs() / &Rat::from_int(2),
                                coef: Rat::new(1.into(), 2.into()).unwrap(),
                                rad: disc,
                            })
                        }
                    }
                }
            }
            d => Err(ArithError::NotQuadratic(d)),
        }
    }

    /// Exact comparison against a rational bound.
    pub fn cmp_bound(&self, bound: &Rat) -> Ordering {
        match self {
            MahlerInf::Exact(m) => m.cmp(bound),
            MahlerInf::PlusSqrt { base, coef, rad } => {
                match sign_linear_sqrt(&(base - bound), coef, rad) {
                    s if s < 0 => Ordering::Less,
                    0 => Ordering::Equal,
                    _ => Ordering::Greater,
                }
            }
        }
    }

    /// Certified rational bracket with relative width <= rel_tol.
    pub fn interval(&self, rel_tol: &Rat) -> (Rat, Rat) {
        match self {
            MahlerInf::Exact(m) => (m.clone(), m.clone()),
            MahlerInf::PlusSqrt { base, coef, rad } => {
                let (lo, hi) = sqrt_interval(rad, rel_tol);
                (base + &(coef * &lo), base + &(coef * &hi))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let tol = Rat::new(1.into(), BigInt::from(10u64).pow(14)).unwrap();
        let (lo, hi) = self.interval(&tol);
        (lo.to_f64() + hi.to_f64()) / 2.0
    }
}

/// Height of an algebraic number of degree <= 2, from its minimal polynomial:
/// H^deg = M_inf of the primitive minimal polynomial.
#[derive(Clone, Debug)]
pub struct QuadHeight {
    mahler: MahlerInf,
    deg: u32,
}

impl QuadHeight {
    pub fn mahler(&self) -> &MahlerInf {
        &self.mahler
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    /// Exact comparison of the height against a rational bound >= 0.
    pub fn cmp_bound(&self, bound: &Rat) -> Ordering {
        if bound.is_negative() {
            return Ordering::Greater;
        }
        match self.deg {
            1 => self.mahler.cmp_bound(bound),
            _ => self.mahler.cmp_bound(&bound.square()),
        }
    }

    /// Certified bracket of the height itself, relative width <= 1e-12.
    pub fn interval(&self) -> (Rat, Rat) {
        let tol = Rat::new(1.into(), BigInt::from(10u64).pow(13)).unwrap();
        let (mlo, mhi) = self.mahler.interval(&tol);
        match self.deg {
            1 => (mlo, mhi),
            _ => {
                if mlo.is_zero() {
                    return (Rat::zero(), mhi);
                }
                let (slo, _) = sqrt_interval(&mlo, &tol);
                let (_, shi) = sqrt_interval(&mhi, &tol);
                (slo, shi)
            }
        }
    }

    pub fn interval_f64(&self) -> (f64, f64) {
        let (lo, hi) = self.interval();
        (lo.to_f64(), hi.to_f64())
    }
}

/// Height from a minimal polynomial of degree <= 2. The polynomial is taken
/// to its primitive part first.
pub fn height_quadratic(minpoly: &IntPoly) -> Result<QuadHeight, ArithError> {
    let p = minpoly.primitive_part();
    let deg = p
        .degree()
        .ok_or_else(|| ArithError::NotQuadratic(usize::MAX))?;
    if deg == 0 || deg > 2 {
        return Err(ArithError::NotQuadratic(deg));
    }
    Ok(QuadHeight {
        mahler: MahlerInf::of_quadratic(&p)?,
        deg: deg as u32,
    })
}
