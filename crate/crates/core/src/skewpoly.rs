//! The skew-polynomial ring GF(2^n)[x; σ], σ the Frobenius a ↦ a².
//!
//! Addition is coefficient-wise. Multiplication follows the monomial rule
//! `(a x^i) × (b x^j) = a b^{2^i} x^{i+j}`, so `x × b = b² x` and the ring is
//! not commutative. Right division `f = Q × g + R` always exists, which gives
//! a right Euclidean algorithm and greatest common right divisors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2n::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Coefficients indexed by degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    spec: FieldSpec,
    coeffs: Vec<u32>,
}

impl SkewPoly {
    pub fn zero(spec: &FieldSpec) -> Self {
        SkewPoly {
            spec: *spec,
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Self {
        Self::constant(&spec.one())
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::from_raw(*c.spec(), vec![c.bits()])
    }

    /// `c x^k`.
    pub fn monomial(c: &FieldElement, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c.bits();
        Self::from_raw(*c.spec(), coeffs)
    }

    /// `x^k + 1`; with `k = n` this is the associate of `x^{2^n} + x`.
    pub fn x_pow_plus_one(spec: &FieldSpec, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] ^= 1;
        coeffs[0] ^= 1;
        Self::from_raw(*spec, coeffs)
    }

    pub fn new(spec: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| c.spec() != spec) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(*spec, coeffs.iter().map(|c| c.bits()).collect()))
    }

    /// Builds from raw coefficient bit patterns, validating their width.
    pub fn from_bits(spec: &FieldSpec, coeffs: &[u64]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|&b| spec.elem(b).map(|e| e.bits()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(*spec, coeffs))
    }

    pub(crate) fn from_raw(spec: FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SkewPoly { spec, coeffs }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let bits = self.coeffs.get(i).copied().unwrap_or(0);
        self.spec.elem(bits as u64).expect("stored coefficient fits the field")
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.degree().map(|d| self.coeff(d))
    }

    /// Whether every coefficient lies in GF(2).
    pub fn is_binary(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 1)
    }

    fn check(&self, other: &SkewPoly) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) ^ other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        Ok(SkewPoly::from_raw(self.spec, coeffs))
    }

    /// Skew product `self × other`.
    pub fn smul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(&self.spec));
        }
        let spec = &self.spec;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        // twisted[j] = σ^i(b_j), advanced one Frobenius step per row
        let mut twisted = other.coeffs.clone();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                for (j, &b) in twisted.iter().enumerate() {
                    out[i + j] ^= spec.mul_bits(a, b);
                }
            }
            for b in twisted.iter_mut() {
                *b = spec.sqr_bits(*b);
            }
        }
        Ok(SkewPoly::from_raw(self.spec, out))
    }

    /// `c × self` for a constant `c` (no twist on the left).
    pub fn left_scale(&self, c: &FieldElement) -> Result<SkewPoly> {
        if c.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.spec.mul_bits(c.bits(), a)).collect();
        Ok(SkewPoly::from_raw(self.spec, coeffs))
    }

    /// Right division: `(Q, R)` with `self = Q × g + R` and `R = 0` or
    /// `deg R < deg g`.
    ///
    /// Walks the degrees `i = r, …, s` of the running dividend downwards and
    /// cancels its degree-`i` coefficient `f̄_i` with
    /// `h = (f̄_i / g_s^{2^{i−s}}) x^{i−s}`, since the leading coefficient of
    /// `h × g` is `(f̄_i / g_s^{2^{i−s}}) · g_s^{2^{i−s}}`.
    pub fn right_divide(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check(g)?;
        let s = g.degree().ok_or(Error::DivisionByZero)?;
        let spec = &self.spec;
        let Some(r) = self.degree().filter(|&r| r >= s) else {
            return Ok((SkewPoly::zero(spec), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; r - s + 1];
        let g_lead = g.coeffs[s];
        for i in (s..=r).rev() {
            let fi = rem[i];
            if fi == 0 {
                continue;
            }
            let shift = (i - s) as u32;
            let denom = spec.frob_bits(g_lead, shift);
            let h = spec.mul_bits(fi, spec.inv_bits(denom));
            quot[i - s] = h;
            // subtract h x^{i-s} × g = Σ_j h σ^{i-s}(g_j) x^{i-s+j}
            for (j, &gj) in g.coeffs.iter().enumerate() {
                if gj != 0 {
                    rem[i - s + j] ^= spec.mul_bits(h, spec.frob_bits(gj, shift));
                }
            }
            debug_assert_eq!(rem[i], 0);
        }
        Ok((SkewPoly::from_raw(*spec, quot), SkewPoly::from_raw(*spec, rem)))
    }

    /// The remainder of [`right_divide`](Self::right_divide).
    pub fn rrem(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.right_divide(g).map(|(_, r)| r)
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> SkewPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.left_scale(&inv).expect("same field")
            }
        }
    }

    /// Monic greatest common right divisor by the right Euclidean algorithm.
    pub fn gcrd(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.check(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut prev, mut cur) = if self.degree() >= g.degree() {
            (self.clone(), g.clone())
        } else {
            (g.clone(), self.clone())
        };
        while !cur.is_zero() {
            let next = prev.rrem(&cur)?;
            prev = cur;
            cur = next;
        }
        Ok(prev.monic())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{:?}]({self})", self.spec)
    }
}

/// `c_k x^k + … + c_0` with hex coefficients, zero terms omitted.
impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c:x}")?,
                1 => write!(f, "{c:x} x")?,
                _ => write!(f, "{c:x} x^{i}")?,
            }
        }
        Ok(())
    }
}
