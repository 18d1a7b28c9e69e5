//! Univariate polynomials over Z and Q: exact evaluation, division with
//! remainder, content and primitive parts, resultants, and rational roots.
//!
//! Coefficients are ascending; trailing zeros are stripped so the zero
//! polynomial is the empty vector.

use crate::roots::factorize;
use crate::{ArithError, QuadElem, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn monomial(coeff: BigInt, deg: usize) -> Self {
        if coeff.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = coeff;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rat::from_bigint(c.clone());
        }
        acc
    }

    /// Homogeneous evaluation x^deg * p(y/x) for the degree-d form carried by
    /// an ascending coefficient list: sum c_i y^i x^(d-i) with d = deg(p)
    /// unless a larger formal degree is supplied.
    pub fn eval_form(&self, y: &BigInt, x: &BigInt, formal_deg: usize) -> BigInt {
        let mut acc = BigInt::zero();
        let mut xp = BigInt::one();
        // Horner in y with explicit powers of x.
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c * &xp;
            xp *= x;
        }
        // account for formal degree above actual degree
        let actual = self.coeffs.len().saturating_sub(1);
        assert!(formal_deg >= actual, "formal degree below actual degree");
        for _ in 0..formal_deg - actual {
            acc *= x;
        }
        acc
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Coefficient reversal to the given formal degree: x^d * p(1/x).
    pub fn reverse(&self, formal_deg: usize) -> IntPoly {
        let actual = self.coeffs.len().saturating_sub(1);
        assert!(formal_deg >= actual, "formal degree below actual degree");
        let mut out = vec![BigInt::zero(); formal_deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[formal_deg - i] = c.clone();
        }
        IntPoly::new(out)
    }

    pub fn to_polyq(&self) -> PolyQ {
        PolyQ::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_bigint(c.clone()))
                .collect(),
        )
    }

    /// Resultant Res(self, rhs), exact.
    pub fn resultant(&self, rhs: &IntPoly) -> BigInt {
        let r = self.to_polyq().resultant(&rhs.to_polyq());
        assert!(r.is_integer(), "resultant of integer polynomials is integral");
        r.num().clone()
    }

    /// All rational roots, each verified by exact evaluation.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let p = self.primitive_part();
        if p.is_zero() {
            return vec![];
        }
        // strip factors of x
        let mut k = 0;
        while p.coeff(k).is_zero() {
            k += 1;
        }
        let core = IntPoly::new(p.coeffs[k..].to_vec());
        let mut roots: Vec<Rat> = Vec::new();
        if k > 0 {
            roots.push(Rat::zero());
        }
        if core.degree() == Some(0) {
            return roots;
        }
        let a0 = core.coeff(0).abs();
        let an = core.leading().unwrap().abs();
        let num_divs = all_divisors(&a0);
        let den_divs = all_divisors(&an);
        for n in &num_divs {
            for d in &den_divs {
                if !n.gcd(d).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rat::new(n * BigInt::from(sign), d.clone()).unwrap();
                    if core.eval_rat(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn all_divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero());
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut pe = BigInt::one();
        for _ in 0..e {
            pe *= &p;
            for b in &base {
                divs.push(b * &pe);
            }
        }
    }
    divs
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{a}*z")?,
                _ if a.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{a}*z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Univariate polynomial over Q, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyQ {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_quad(&self, x: &QuadElem) -> QuadElem {
        let f = x.field().clone();
        let mut acc = QuadElem::from_rat(f.clone(), Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = (&acc * x).expect("same field").add_rat(c);
        }
        acc
    }

    pub fn add(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        PolyQ::new(out)
    }

    pub fn scale(&self, k: &Rat) -> PolyQ {
        if k.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Euclidean division: self = q * rhs + r with deg r < deg rhs.
    pub fn div_rem(&self, rhs: &PolyQ) -> Result<(PolyQ, PolyQ), ArithError> {
        let d_deg = rhs.degree().ok_or(ArithError::DivisionByZero)?;
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d_deg + 1 {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut q = vec![Rat::zero(); q_len];
        for i in (0..q_len).rev() {
            let top = rem[i + d_deg].clone();
            if top.is_zero() {
                continue;
            }
            let qc = &top / &lead;
            for (j, rc) in rhs.coeffs.iter().enumerate() {
                let t = &qc * rc;
                rem[i + j] = &rem[i + j] - &t;
            }
            q[i] = qc;
        }
        Ok((PolyQ::new(q), PolyQ::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &PolyQ) -> Result<PolyQ, ArithError> {
        let (q, r) = self.div_rem(rhs)?;
        if !r.is_zero() {
            return Err(ArithError::parse(format!(
                "inexact polynomial division: remainder degree {:?}",
                r.degree()
            )));
        }
        Ok(q)
    }

    /// Clears denominators and the content: returns (primitive integer
    /// polynomial p, scale s) with self = s * p.
    pub fn to_primitive_int(&self) -> (IntPoly, Rat) {
        if self.is_zero() {
            return (IntPoly::zero(), Rat::one());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.den());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.num() * (&lcm / c.den()))
            .collect();
        let p = IntPoly::new(ints);
        let content = p.content();
        let prim = p.primitive_part();
        let scale = Rat::new(content, lcm).unwrap();
        // Normalize the primitive part to a positive leading coefficient.
        if prim.leading().map_or(false, |c| c.is_negative()) {
            (prim.neg(), -scale)
        } else {
            (prim, scale)
        }
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Numerator of the constant coefficient when integral; used by
    /// resultants of integer polynomials.
    pub fn num(&self) -> &BigInt {
        self.coeffs[0].num()
    }

    /// Resultant via the Euclidean remainder sequence.
    pub fn resultant(&self, rhs: &PolyQ) -> Rat {
        let mut a = self.clone();
        let mut b = rhs.clone();
        let (da, db) = match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => (da, db),
            // Res with a zero polynomial is zero unless the other is a
            // nonzero constant.
            _ => return Rat::zero(),
        };
        if da == 0 {
            return a.coeff(0).pow(db as i32).unwrap();
        }
        if db == 0 {
            return b.coeff(0).pow(da as i32).unwrap();
        }
        let mut acc = Rat::one();
        let mut sign_flip = false;
        loop {
            let da = a.degree().unwrap();
            let db = match b.degree() {
                Some(d) => d,
                None => return Rat::zero(),
            };
            if db == 0 {
                acc = &acc * &b.coeff(0).pow(da as i32).unwrap();
                break;
            }
            let (_, r) = a.div_rem(&b).unwrap();
            let dr = r.degree();
            // Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
            if (da * db) % 2 == 1 {
                sign_flip = !sign_flip;
            }
            let drop = da - dr.map_or(0, |d| d);
            let lc_pow = b.leading().unwrap().pow(drop as i32).unwrap();
            acc = &acc * &lc_pow;
            if r.is_zero() {
                return Rat::zero();
            }
            a = b;
            b = r;
        }
        if sign_flip {
            -acc
        } else {
            acc
        }
    }
}
