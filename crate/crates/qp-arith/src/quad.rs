//! Real and imaginary quadratic field elements with exact arithmetic and
//! exact sign and magnitude comparisons under both embeddings.

use crate::roots::{rat_sqrt, squarefree_part};
use crate::{ArithError, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Q(sqrt(d)) for squarefree d, d not 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadField {
    d: BigInt,
}

impl QuadField {
    pub fn new(d: BigInt) -> Result<Self, ArithError> {
        if d.is_zero() || d.is_one() {
            return Err(ArithError::BadDiscriminant(d));
        }
        let (core, _) = squarefree_part(&d);
        if core != d {
            return Err(ArithError::BadDiscriminant(d));
        }
        Ok(QuadField { d })
    }

    /// Field containing sqrt(n) for arbitrary nonzero non-square n:
    /// reduces to the squarefree core. Also returns the square cofactor s
    /// with n = core * s^2.
    pub fn containing_sqrt(n: &BigInt) -> Result<(Self, BigInt), ArithError> {
        if n.is_zero() {
            return Err(ArithError::BadDiscriminant(n.clone()));
        }
        let (core, s) = squarefree_part(n);
        Ok((QuadField::new(core)?, s))
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_real(&self) -> bool {
        self.d.is_positive()
    }

    pub fn d_rat(&self) -> Rat {
        Rat::from_bigint(self.d.clone())
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// u + v*sqrt(d).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem {
    field: QuadField,
    u: Rat,
    v: Rat,
}

impl QuadElem {
    pub fn new(field: QuadField, u: Rat, v: Rat) -> Self {
        QuadElem { field, u, v }
    }

    pub fn from_rat(field: QuadField, u: Rat) -> Self {
        QuadElem {
            field,
            u,
            v: Rat::zero(),
        }
    }

    pub fn sqrt_gen(field: QuadField) -> Self {
        QuadElem {
            field,
            u: Rat::zero(),
            v: Rat::one(),
        }
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.u)
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        QuadElem {
            field: self.field.clone(),
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    /// Field norm u^2 - v^2 d, a rational.
    pub fn norm(&self) -> Rat {
        &self.u.square() - &(&self.v.square() * &self.field.d_rat())
    }

    pub fn trace(&self) -> Rat {
        &self.u + &self.u
    }

    pub fn square(&self) -> Self {
        let d = self.field.d_rat();
        let u2 = &self.u.square() + &(&self.v.square() * &d);
        let uv = &self.u * &self.v;
        QuadElem {
            field: self.field.clone(),
            u: u2,
            v: &uv + &uv,
        }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(QuadElem {
            field: self.field.clone(),
            u: &self.u / &n,
            v: &(-&self.v) / &n,
        })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        QuadElem {
            field: self.field.clone(),
            u: &self.u * r,
            v: &self.v * r,
        }
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        QuadElem {
            field: self.field.clone(),
            u: &self.u + r,
            v: self.v.clone(),
        }
    }

    /// Exact sign under the principal embedding (sqrt(d) > 0); errors for
    /// imaginary fields where elements with v != 0 carry no real sign.
    pub fn sign_principal(&self) -> Result<i32, ArithError> {
        if self.v.is_zero() {
            return Ok(self.u.signum());
        }
        if !self.field.is_real() {
            return Err(ArithError::ImaginarySign);
        }
        let su = self.u.signum();
        let sv = self.v.signum();
        if su == sv {
            return Ok(su);
        }
        if su == 0 {
            return Ok(sv);
        }
        if sv == 0 {
            return Ok(su);
        }
        // Opposite signs: compare u^2 against v^2 d.
        let u2 = self.u.square();
        let v2d = &self.v.square() * &self.field.d_rat();
        Ok(match u2.cmp(&v2d) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        })
    }

    /// Exact comparison of the principal embedding with a rational.
    pub fn cmp_rat_principal(&self, r: &Rat) -> Result<Ordering, ArithError> {
        let diff = QuadElem {
            field: self.field.clone(),
            u: &self.u - r,
            v: self.v.clone(),
        };
        Ok(match diff.sign_principal()? {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    /// |x| <= r under every archimedean embedding, exactly.
    /// Real field: -r <= sigma(x) <= r for both embeddings.
    /// Imaginary field: |x|^2 = u^2 + v^2 |d| <= r^2.
    pub fn abs_le_all_embeddings(&self, r: &Rat) -> bool {
        if r.is_negative() {
            return false;
        }
        if self.field.is_real() {
            for e in [self.clone(), self.conj()] {
                if e.cmp_rat_principal(r).unwrap() == Ordering::Greater {
                    return false;
                }
                if e.cmp_rat_principal(&-r).unwrap() == Ordering::Less {
                    return false;
                }
            }
            true
        } else {
            let abs2 = &self.u.square() + &(&self.v.square() * &self.field.d_rat().abs());
            abs2 <= r.square()
        }
    }

    /// Escape certificate: |sigma(x)|^2 > |sigma(x)| + |sigma(c)| under some
    /// embedding sigma. A point satisfying this leaves every closed disk the
    /// orbit could return from, so it is not preperiodic.
    pub fn escapes(&self, c: &QuadElem) -> bool {
        debug_assert_eq!(self.field, c.field);
        if self.field.is_real() {
            for (x, cc) in [(self.clone(), c.clone()), (self.conj(), c.conj())] {
                // |x|^2 - |x| - |c| > 0, with |y| = sign(y) * y exactly.
                let sx = x.sign_principal().unwrap();
                let sc = cc.sign_principal().unwrap();
                let absx = x.scale(&Rat::from_int(sx as i64));
                let absc = cc.scale(&Rat::from_int(sc as i64));
                let expr = absx.square().sub_same(&absx).sub_same(&absc);
                if expr.sign_principal().unwrap() > 0 {
                    return true;
                }
            }
            false
        } else {
            // |x|^2 and |c| are real; compare |x|^4 vs (|x|^2 + |c|)^2 needs
            // care since |c| is a real sqrt. Use: |x|^2 > |x| + |c| follows
            // from |x|^2 - |x| > |c|, i.e. (|x|^2 - |x|)^2 > |c|^2 when
            // |x|^2 - |x| >= 0. Work with t = |x|^2 rational, n = |c|^2.
            let t = self.abs2_imag();
            let n = c.abs2_imag();
            // need sqrt(t) with t = |x|^2: |x| irrational in general; use
            // t > sqrt(t) + sqrt(n)  <=>  (t - sqrt(n))^2 > t and t^2 > n...
            // Exact route: t - sqrt(n) > sqrt(t) requires t - sqrt(n) >= 0.
            // sqrt comparisons stay rational: sqrt(n) <= t  <=>  n <= t^2.
            if n > t.square() {
                return false;
            }
            // s := t - sqrt(n) >= 0; want s > sqrt(t)  <=>  s^2 > t
            // s^2 = t^2 + n - 2 t sqrt(n); s^2 > t  <=>
            // t^2 + n - t > 2 t sqrt(n); both sides sign-checked then squared.
            let lhs = &(&t.square() + &n) - &t;
            if lhs.is_negative() || lhs.is_zero() {
                return false;
            }
            let two_t = &t + &t;
            lhs.square() > &two_t.square() * &n
        }
    }

    /// |x|^2 as a rational, imaginary fields only.
    pub fn abs2_imag(&self) -> Rat {
        debug_assert!(!self.field.is_real());
        &self.u.square() + &(&self.v.square() * &self.field.d_rat().abs())
    }

    /// Square roots of a rational q inside this field: rational roots or pure
    /// sqrt(d)-multiples. Returns the root with nonnegative leading part, or
    /// None when q is not a square in the field.
    pub fn sqrt_of_rat_in_field(field: &QuadField, q: &Rat) -> Option<QuadElem> {
        if q.is_zero() {
            return Some(QuadElem::from_rat(field.clone(), Rat::zero()));
        }
        if !q.is_negative() {
            if let Ok(Some(r)) = rat_sqrt(q) {
                return Some(QuadElem::from_rat(field.clone(), r));
            }
        }
        let q_over_d = q / &field.d_rat();
        if !q_over_d.is_negative() {
            if let Ok(Some(b)) = rat_sqrt(&q_over_d) {
                return Some(QuadElem::new(field.clone(), Rat::zero(), b));
            }
        }
        None
    }

    /// f64 image under the principal embedding; diagnostics only.
    pub fn to_f64_principal(&self) -> f64 {
        let d = self.field.d.to_string().parse::<f64>().unwrap_or(f64::NAN);
        if d >= 0.0 {
            self.u.to_f64() + self.v.to_f64() * d.sqrt()
        } else {
            f64::NAN
        }
    }

    pub(crate) fn add_same(&self, rhs: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, rhs.field);
        QuadElem {
            field: self.field.clone(),
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }

    pub(crate) fn sub_same(&self, rhs: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, rhs.field);
        QuadElem {
            field: self.field.clone(),
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }

    /// One quadratic-map step x^2 + c within a fixed field.
    pub fn step(&self, c: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, c.field);
        self.square().add_same(c)
    }
}

impl Add<&QuadElem> for &QuadElem {
    type Output = Result<QuadElem, ArithError>;
    fn add(self, rhs: &QuadElem) -> Self::Output {
        if self.field != rhs.field {
            return Err(ArithError::MixedFields);
        }
        Ok(self.add_same(rhs))
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = Result<QuadElem, ArithError>;
    fn sub(self, rhs: &QuadElem) -> Self::Output {
        if self.field != rhs.field {
            return Err(ArithError::MixedFields);
        }
        Ok(self.sub_same(rhs))
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = Result<QuadElem, ArithError>;
    fn mul(self, rhs: &QuadElem) -> Self::Output {
        if self.field != rhs.field {
            return Err(ArithError::MixedFields);
        }
        let d = self.field.d_rat();
        Ok(QuadElem {
            field: self.field.clone(),
            u: &(&self.u * &rhs.u) + &(&(&self.v * &rhs.v) * &d),
            v: &(&self.u * &rhs.v) + &(&self.v * &rhs.u),
        })
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            field: self.field.clone(),
            u: -&self.u,
            v: -&self.v,
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.u, self.v.abs(), self.field.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.u, self.v, self.field.d)
        }
    }
}

impl FromStr for QuadElem {
    type Err = ArithError;

    /// Grammar: `u+v*sqrt(D)` or `u-v*sqrt(D)` with u, v rationals (v written
    /// unsigned after the separator) and D a squarefree integer.
    fn from_str(s: &str) -> Result<Self, ArithError> {
        let bad = || ArithError::parse(format!("invalid quadratic element {s:?}"));
        let body = s.strip_suffix(')').ok_or_else(bad)?;
        let (left, d_str) = body.rsplit_once("*sqrt(").ok_or_else(bad)?;
        let d: BigInt = {
            let t = d_str.strip_prefix('-').unwrap_or(d_str);
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d_str.parse().map_err(|_| bad())?
        };
        let field = QuadField::new(d)?;
        // Split left into u and signed v at the last top-level '+' or '-'
        // (not the leading sign of u).
        let bytes = left.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            if bytes[i] == b'+' || bytes[i] == b'-' {
                // skip a '-' that is part of u's own leading sign at i = 0
                split = Some(i);
                break;
            }
        }
        let i = split.ok_or_else(bad)?;
        let u: Rat = left[..i].parse()?;
        let v_mag: Rat = left[i + 1..].parse()?;
        if v_mag.is_negative() {
            return Err(bad());
        }
        let v = if bytes[i] == b'-' { -v_mag } else { v_mag };
        Ok(QuadElem { field, u, v })
    }
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
