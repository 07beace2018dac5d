//! Linearized polynomials `L(x) = Σ_{i<n} a_i x^{2^i}` over GF(2^n).
//!
//! Composition of linearized polynomials corresponds to multiplication in
//! GF(2^n)[x; σ] under the index map `x^{2^i} ↦ x^i`, so `L` permutes the
//! field exactly when its associate skew polynomial is right-coprime to
//! `x^n + 1`. [`LinearizedPoly::is_permutation`] offers that test next to the
//! Dickson determinant and a direct rank computation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitmat;
use crate::gf2n::{FieldElement, FieldSpec};
use crate::skewpoly::SkewPoly;
use crate::{Error, Result};

/// Largest degree for which the brute-force permutation test is offered.
pub const BRUTEFORCE_MAX_N: u32 = 24;
/// Largest degree for the exhaustive evaluation cross-check.
pub const EXHAUSTIVE_MAX_N: u32 = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearizedPoly {
    spec: FieldSpec,
    // exactly n entries; a[i] is the coefficient of x^{2^i}
    a: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermMethod {
    /// `gcrd(l(x), x^n + 1)` has degree 0.
    Gcrd,
    /// `det(D_L) ≠ 0`.
    Dickson,
    /// The images of a basis have full GF(2)-rank.
    BruteForce,
}

impl PermMethod {
    pub const ALL: [PermMethod; 3] = [PermMethod::Gcrd, PermMethod::Dickson, PermMethod::BruteForce];

    pub fn name(self) -> &'static str {
        match self {
            PermMethod::Gcrd => "gcrd",
            PermMethod::Dickson => "dickson",
            PermMethod::BruteForce => "bruteforce",
        }
    }
}

impl core::str::FromStr for PermMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gcrd" => Ok(PermMethod::Gcrd),
            "dickson" => Ok(PermMethod::Dickson),
            "bruteforce" => Ok(PermMethod::BruteForce),
            _ => Err(Error::InvalidParams("unknown permutation test method")),
        }
    }
}

impl LinearizedPoly {
    /// Coefficients `a_0, …, a_{k−1}` with `k ≤ n`; missing ones are zero.
    pub fn new(spec: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        let n = spec.n() as usize;
        if coeffs.len() > n {
            return Err(Error::DegreeTooLarge {
                degree: coeffs.len() - 1,
                bound: n,
            });
        }
        if coeffs.iter().any(|c| c.spec() != spec) {
            return Err(Error::FieldMismatch);
        }
        let mut a = vec![0u32; n];
        for (slot, c) in a.iter_mut().zip(coeffs) {
            *slot = c.bits();
        }
        Ok(LinearizedPoly { spec: *spec, a })
    }

    pub fn from_bits(spec: &FieldSpec, coeffs: &[u64]) -> Result<Self> {
        let elems = coeffs.iter().map(|&b| spec.elem(b)).collect::<Result<Vec<_>>>()?;
        Self::new(spec, &elems)
    }

    /// `L(x) = x`.
    pub fn identity(spec: &FieldSpec) -> Self {
        let mut a = vec![0u32; spec.n() as usize];
        a[0] = 1;
        LinearizedPoly { spec: *spec, a }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.spec.elem(self.a[i % self.a.len()] as u64).expect("stored coefficient fits")
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.a.len()).map(|i| self.coeff(i)).collect()
    }

    pub(crate) fn eval_bits(&self, x: u32) -> u32 {
        let spec = &self.spec;
        let mut acc = 0u32;
        let mut y = x;
        for &ai in &self.a {
            if ai != 0 {
                acc ^= spec.mul_bits(ai, y);
            }
            y = spec.sqr_bits(y);
        }
        acc
    }

    /// `L(x) = Σ a_i x^{2^i}`.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        self.spec.elem(self.eval_bits(x.bits()) as u64)
    }

    /// The associate skew polynomial `l(x) = Σ a_i x^i`.
    pub fn associate_skew(&self) -> SkewPoly {
        SkewPoly::from_raw(self.spec, self.a.clone())
    }

    /// Inverse of [`associate_skew`](Self::associate_skew); needs `deg l < n`.
    pub fn from_skew(l: &SkewPoly) -> Result<Self> {
        let n = l.spec().n() as usize;
        if let Some(d) = l.degree() {
            if d >= n {
                return Err(Error::DegreeTooLarge { degree: d, bound: n });
            }
        }
        let mut a = vec![0u32; n];
        a[..l.raw().len()].copy_from_slice(l.raw());
        Ok(LinearizedPoly { spec: *l.spec(), a })
    }

    /// `D_L[i][j] = a_{(j−i) mod n}^{2^i}`.
    pub fn dickson_matrix(&self) -> DicksonMatrix {
        let n = self.a.len();
        let mut rows = Vec::with_capacity(n);
        let mut row = self.a.clone();
        for _ in 0..n {
            rows.push(row.clone());
            // next row: shift right cyclically, square every entry
            row.rotate_right(1);
            for e in row.iter_mut() {
                *e = self.spec.sqr_bits(*e);
            }
        }
        DicksonMatrix { spec: self.spec, rows }
    }

    pub fn is_permutation(&self, method: PermMethod) -> Result<bool> {
        match method {
            PermMethod::Gcrd => {
                let modulus = SkewPoly::x_pow_plus_one(&self.spec, self.spec.n() as usize);
                let g = self.associate_skew().gcrd(&modulus)?;
                Ok(g.degree() == Some(0))
            }
            PermMethod::Dickson => Ok(!self.dickson_matrix().det().is_zero()),
            PermMethod::BruteForce => {
                let n = self.spec.n();
                if n > BRUTEFORCE_MAX_N {
                    return Err(Error::TooLarge {
                        what: "brute-force permutation test",
                        n,
                        max: BRUTEFORCE_MAX_N,
                    });
                }
                let images: Vec<u64> = (0..n).map(|j| self.eval_bits(1 << j) as u64).collect();
                Ok(bitmat::rank(&images) == n as usize)
            }
        }
    }

    /// Evaluates on every field element and checks that only 0 maps to 0.
    pub fn is_permutation_exhaustive(&self) -> Result<bool> {
        let n = self.spec.n();
        if n > EXHAUSTIVE_MAX_N {
            return Err(Error::TooLarge {
                what: "exhaustive permutation test",
                n,
                max: EXHAUSTIVE_MAX_N,
            });
        }
        Ok((1..1u32 << n).all(|x| self.eval_bits(x) != 0))
    }
}

impl fmt::Debug for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearizedPoly[{:?}](", self.spec)?;
        let mut first = true;
        for (i, &c) in self.a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c:x} x^{}", 1u64 << i)?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

/// An n×n matrix over GF(2^n), as produced by
/// [`LinearizedPoly::dickson_matrix`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DicksonMatrix {
    spec: FieldSpec,
    rows: Vec<Vec<u32>>,
}

impl DicksonMatrix {
    pub fn from_rows(spec: &FieldSpec, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let n = rows.len();
        let mut out = Vec::with_capacity(n);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidParams("matrix is not square"));
            }
            if r.iter().any(|e| e.spec() != spec) {
                return Err(Error::FieldMismatch);
            }
            out.push(r.iter().map(|e| e.bits()).collect());
        }
        Ok(DicksonMatrix { spec: *spec, rows: out })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.spec.elem(self.rows[i][j] as u64).expect("entry fits")
    }

    /// Determinant by Gaussian elimination; no signs in characteristic 2.
    pub fn det(&self) -> FieldElement {
        let spec = &self.spec;
        let mut m = self.rows.clone();
        let n = m.len();
        let mut det = 1u32;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| m[r][col] != 0) else {
                return spec.zero();
            };
            m.swap(col, p);
            let pivot = m[col][col];
            det = spec.mul_bits(det, pivot);
            let inv = spec.inv_bits(pivot);
            for r in col + 1..n {
                let factor = m[r][col];
                if factor == 0 {
                    continue;
                }
                let factor = spec.mul_bits(factor, inv);
                let (top, bottom) = m.split_at_mut(r);
                for (x, &p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x ^= spec.mul_bits(factor, p);
                }
            }
        }
        spec.elem(det as u64).expect("det fits")
    }
}

/// `(2^n − 2^{2i+1} − 2) / 3`, with the divisibility checked.
fn p_exponent(n: u32, i: u32) -> Result<i128> {
    exact_third((1i128 << n) - (1i128 << (2 * i + 1)) - 2)
}

pub(crate) fn exact_third(num: i128) -> Result<i128> {
    if num % 3 != 0 {
        return Err(Error::NonDivisibleExponent);
    }
    Ok(num / 3)
}

fn require_noncube(spec: &FieldSpec, a: &FieldElement) -> Result<()> {
    if spec.n() % 2 == 1 {
        return Err(Error::OddDegree(spec.n()));
    }
    if a.spec() != spec {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() || a.is_cube()? {
        return Err(Error::CubeParameter);
    }
    Ok(())
}

/// `P(x) = Σ_{i<n/2} a^{(2^n − 2^{2i+1} − 2)/3} x^{2^{2i+1}}` for a non-cube `a`.
pub fn build_p(spec: &FieldSpec, a: &FieldElement) -> Result<LinearizedPoly> {
    require_noncube(spec, a)?;
    build_p_unchecked(spec, a)
}

/// [`build_p`] without the non-cube hypothesis; `a` must still be nonzero.
pub fn build_p_unchecked(spec: &FieldSpec, a: &FieldElement) -> Result<LinearizedPoly> {
    let n = spec.n();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut coeffs = vec![spec.zero(); n as usize];
    for i in 0..n / 2 {
        coeffs[(2 * i + 1) as usize] = a.pow(p_exponent(n, i)?)?;
    }
    LinearizedPoly::new(spec, &coeffs)
}

/// `p₁(x) = Σ_{i<n/2} a^{−(2^{2i+1} + 1)/3} x^{2i+1}`.
pub fn build_p1(spec: &FieldSpec, a: &FieldElement) -> Result<SkewPoly> {
    require_noncube(spec, a)?;
    let n = spec.n();
    let mut coeffs = vec![spec.zero(); n as usize];
    for i in 0..n / 2 {
        let e = exact_third((1i128 << (2 * i + 1)) + 1)?;
        coeffs[(2 * i + 1) as usize] = a.pow(-e)?;
    }
    SkewPoly::new(spec, &coeffs)
}
