//! Bivariate polynomials over `Z`, stored as a vector of coefficients in `c`
//! indexed by the degree in `z`.
//!
//! Products use Kronecker substitution: both factors are packed into single
//! big integers with fixed-width slots, multiplied once, and unpacked. The
//! slot width is chosen so that no coefficient of the product can overflow
//! its slot, which makes the round trip exact. Iterates of `z^2 + c` have
//! nonnegative coefficients and square with a single big multiplication;
//! general products split each factor into positive and negative parts.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use qp_arith::{IntPoly, PolyQ, QuadElem, Rat};

use crate::DynError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    /// Entry `j` is the coefficient of `z^j`; the last entry is nonzero.
    zc: Vec<IntPoly>,
}

impl BivarPoly {
    fn normalize(mut zc: Vec<IntPoly>) -> Self {
        while zc.last().is_some_and(IntPoly::is_zero) {
            zc.pop();
        }
        BivarPoly { zc }
    }

    pub fn zero() -> Self {
        BivarPoly { zc: Vec::new() }
    }

    /// Builds a polynomial from `(coefficient, c_exponent, z_exponent)`
    /// triples; repeated monomials accumulate.
    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let max_z = terms.iter().map(|t| t.2).max().unwrap_or(0) as usize;
        let mut grid: Vec<Vec<BigInt>> = vec![Vec::new(); max_z + 1];
        for &(coef, i, j) in terms {
            let row = &mut grid[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, BigInt::zero());
            }
            row[i as usize] += coef;
        }
        Self::normalize(grid.into_iter().map(IntPoly::new).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.zc.is_empty()
    }

    pub fn deg_z(&self) -> Option<usize> {
        self.zc.len().checked_sub(1)
    }

    pub fn deg_c(&self) -> Option<usize> {
        self.zc.iter().filter_map(IntPoly::degree).max()
    }

    /// Coefficients in ascending `z`-degree.
    pub fn z_coeffs(&self) -> &[IntPoly] {
        &self.zc
    }

    pub fn num_terms(&self) -> usize {
        self.zc
            .iter()
            .map(|p| p.coeffs().iter().filter(|a| !a.is_zero()).count())
            .sum()
    }

    fn max_coeff_bits(&self) -> u64 {
        self.zc
            .iter()
            .flat_map(|p| p.coeffs())
            .map(|a| a.magnitude().bits())
            .max()
            .unwrap_or(0)
    }

    fn all_nonnegative(&self) -> bool {
        self.zc
            .iter()
            .all(|p| p.coeffs().iter().all(|a| a.sign() != Sign::Minus))
    }

    pub fn neg(&self) -> Self {
        BivarPoly {
            zc: self.zc.iter().map(IntPoly::neg).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.zc.len().max(rhs.zc.len());
        let zero = IntPoly::zero();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let a = self.zc.get(j).unwrap_or(&zero);
            let b = rhs.zc.get(j).unwrap_or(&zero);
            out.push(a.add(b));
        }
        Self::normalize(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// `self - z`, the recurring "subtract the identity map" step.
    pub fn sub_z(&self) -> Self {
        self.sub(&BivarPoly::from_terms(&[(1, 0, 1)]))
    }

    /// Slot geometry for a Kronecker product of `self` and `rhs`: slot width
    /// in 32-bit limbs and the number of `c`-slots per `z`-degree.
    fn kronecker_shape(&self, rhs: &Self) -> (usize, usize) {
        let stride = self.deg_c().unwrap_or(0) + rhs.deg_c().unwrap_or(0) + 1;
        let min_terms = self.num_terms().min(rhs.num_terms()) as u64;
        // Each product slot is a sum of at most `min_terms` coefficient
        // products, and two packed products are added before unpacking.
        let bits = self.max_coeff_bits() + rhs.max_coeff_bits() + 64 - min_terms.leading_zeros() as u64 + 2;
        let width = (bits as usize).div_ceil(32).max(1);
        (width, stride)
    }

    /// Packs the positive and negative parts into little-endian limb strings
    /// with `width` limbs per slot and `stride` slots per `z`-degree.
    fn pack(&self, width: usize, stride: usize) -> (BigUint, BigUint) {
        let slots = stride * self.zc.len();
        let mut pos = vec![0u32; slots * width];
        let mut neg = vec![0u32; slots * width];
        for (j, p) in self.zc.iter().enumerate() {
            for (i, coef) in p.coeffs().iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let off = (j * stride + i) * width;
                let digits = coef.magnitude().to_u32_digits();
                let dst = if coef.sign() == Sign::Minus { &mut neg } else { &mut pos };
                dst[off..off + digits.len()].copy_from_slice(&digits);
            }
        }
        (BigUint::new(pos), BigUint::new(neg))
    }

    fn unpack(packed: &BigUint, width: usize, stride: usize, z_slots: usize) -> Vec<Vec<BigInt>> {
        let digits = packed.to_u32_digits();
        let mut grid = vec![vec![BigInt::zero(); stride]; z_slots];
        for (j, row) in grid.iter_mut().enumerate() {
            for (i, cell) in row.iter_mut().enumerate() {
                let off = (j * stride + i) * width;
                if off >= digits.len() {
                    break;
                }
                let end = (off + width).min(digits.len());
                let chunk = BigUint::from_slice(&digits[off..end]);
                if !chunk.is_zero() {
                    *cell = BigInt::from(chunk);
                }
            }
        }
        grid
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (width, stride) = self.kronecker_shape(rhs);
        let z_slots = self.deg_z().unwrap() + rhs.deg_z().unwrap() + 1;
        let (ap, an) = self.pack(width, stride);
        let (bp, bn) = rhs.pack(width, stride);
        let plus = &ap * &bp + &an * &bn;
        let minus = &ap * &bn + &an * &bp;
        let plus_grid = Self::unpack(&plus, width, stride, z_slots);
        let minus_grid = Self::unpack(&minus, width, stride, z_slots);
        let zc = plus_grid
            .into_iter()
            .zip(minus_grid)
            .map(|(p, m)| {
                IntPoly::new(p.into_iter().zip(m).map(|(a, b)| a - b).collect())
            })
            .collect();
        Self::normalize(zc)
    }

    pub fn square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if !self.all_nonnegative() {
            return self.mul(self);
        }
        let (width, stride) = self.kronecker_shape(self);
        let z_slots = 2 * self.deg_z().unwrap() + 1;
        let (p, _) = self.pack(width, stride);
        let sq = &p * &p;
        let grid = Self::unpack(&sq, width, stride, z_slots);
        Self::normalize(
            grid.into_iter()
                .map(|row| IntPoly::new(row))
                .collect(),
        )
    }

    /// Substitutes `inner` for `z` by Horner's rule.
    pub fn compose_z(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for p in self.zc.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&BivarPoly::normalize(vec![p.clone()]));
        }
        acc
    }

    /// Exact division by a divisor that is monic in `z`. A nonzero remainder
    /// is an arithmetic bug upstream and is reported, never rounded away.
    pub fn div_exact_z(&self, divisor: &Self) -> Result<Self, DynError> {
        let dd = divisor
            .deg_z()
            .ok_or_else(|| DynError::Inexact("division by zero polynomial".into()))?;
        let lead = &divisor.zc[dd];
        if lead.degree() != Some(0) || lead.coeffs()[0] != BigInt::from(1) {
            return Err(DynError::NotMonic(format!(
                "leading z-coefficient has c-degree {:?}",
                lead.degree()
            )));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let ds = self.deg_z().unwrap();
        if ds < dd {
            return Err(DynError::Inexact(format!(
                "dividend degree {ds} below divisor degree {dd}"
            )));
        }
        let mut rem = self.zc.clone();
        let mut quot = vec![IntPoly::zero(); ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let qi = std::mem::replace(&mut rem[i + dd], IntPoly::zero());
            if qi.is_zero() {
                continue;
            }
            for k in 0..dd {
                rem[i + k] = rem[i + k].sub(&qi.mul(&divisor.zc[k]));
            }
            quot[i] = qi;
        }
        if rem.iter().any(|p| !p.is_zero()) {
            return Err(DynError::Inexact(format!(
                "remainder of z-degree <= {} survives",
                dd.saturating_sub(1)
            )));
        }
        Ok(Self::normalize(quot))
    }

    /// Evaluates at rational `(c, z)`.
    pub fn eval_rat(&self, c: &Rat, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for p in self.zc.iter().rev() {
            acc = acc * z.clone() + p.eval_rat(c);
        }
        acc
    }

    /// Substitutes a rational value for `c`, leaving a polynomial in `z`.
    pub fn specialize(&self, c: &Rat) -> PolyQ {
        PolyQ::new(self.zc.iter().map(|p| p.eval_rat(c)).collect())
    }

    /// Substitutes a quadratic-field value for `c`; returns the coefficients
    /// of the resulting polynomial in `z`, ascending degree.
    pub fn specialize_quad(&self, c: &QuadElem) -> Vec<QuadElem> {
        let field = c.field().clone();
        self.zc
            .iter()
            .map(|p| {
                let mut acc = QuadElem::from_rat(field.clone(), Rat::zero());
                for a in p.coeffs().iter().rev() {
                    acc = (&acc * c).expect("same field").add_rat(&Rat::from_bigint(a.clone()));
                }
                acc
            })
            .collect()
    }

    /// Sparse text dump `coef*c^i*z^j`, `z`-degree major, ascending.
    pub fn dump(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (j, p) in self.zc.iter().enumerate() {
            for (i, coef) in p.coeffs().iter().enumerate() {
                if !coef.is_zero() {
                    terms.push(format!("{coef}*c^{i}*z^{j}"));
                }
            }
        }
        terms.join(" + ")
    }
}
