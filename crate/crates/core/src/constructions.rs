//! Quadratic bent families in trace form and their bentness criteria.
//!
//! - [`MaParams`]: `Σ c_i Tr_1^n(x^{1+2^i}) + Tr_1^{n/2}(x^{1+2^{n/2}})`,
//!   bent iff `gcd(c(x), x^n + 1) = 1`.
//! - [`HuParams`]: the same shape along the subfield GF(2^e) with a
//!   coefficient `β ∈ GF(2^e)^*`.
//! - [`LiParams`]: the all-ones Ma function plus `t` Gold terms of step `k`,
//!   bent iff `gcd(n, (2t+1)k) = gcd(n, k)`.
//! - [`NewParams`]: terms `Tr_1^n(a^{(2^n−2^i−2)/3} x^{1+2^i})` over an index
//!   set `S` built from a subset of `T`, for a non-cube `a`. Its bilinear form
//!   is `Tr_1^n(P(x) y)` with the permutation polynomial `P` of
//!   [`crate::linpoly::build_p`], so every instance is bent.

use alloc::vec;
use alloc::vec::Vec;

use crate::boolfun::{BooleanFunction, Gf2Matrix, TraceRepr, TraceTerm};
use crate::gf2n::{noncubes, FieldElement, FieldSpec};
use crate::gf2poly::Gf2Poly;
use crate::linpoly::{build_p, exact_third, LinearizedPoly};
use crate::{Error, Result};

/// Ordinary gcd over GF(2)[x]; monic by construction.
pub fn gcd_f2(u: Gf2Poly, v: Gf2Poly) -> Result<Gf2Poly> {
    u.gcd(v)
}

fn require_field(spec: &FieldSpec, n: u32) -> Result<()> {
    if spec.n() != n {
        return Err(Error::InvalidParams("parameters and field disagree on n"));
    }
    Ok(())
}

fn require_even(n: u32, min: u32) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if n < min {
        return Err(Error::InvalidParams("n is too small for this family"));
    }
    Ok(())
}

/// Gold-type exponent `1 + 2^j`.
fn gold_exponent(j: u32) -> u64 {
    1 + (1u64 << j)
}

/// Coefficient vector `(c_1, …, c_{n/2−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaParams {
    pub n: u32,
    pub c: Vec<bool>,
}

impl MaParams {
    pub fn new(n: u32, c: Vec<bool>) -> Result<Self> {
        require_even(n, 4)?;
        if c.len() != (n / 2 - 1) as usize {
            return Err(Error::InvalidParams("c must have n/2 - 1 entries"));
        }
        Ok(MaParams { n, c })
    }

    /// Every coefficient vector, in increasing bitmask order (c_1 is bit 0).
    pub fn all(n: u32) -> Result<Vec<Self>> {
        require_even(n, 4)?;
        let len = n / 2 - 1;
        (0..1u64 << len)
            .map(|mask| Self::new(n, (0..len).map(|i| (mask >> i) & 1 == 1).collect()))
            .collect()
    }

    /// `c(x) = Σ c_i (x^i + x^{n−i}) + x^{n/2}`.
    pub fn c_poly(&self) -> Gf2Poly {
        mirrored_poly(&self.c, self.n, true)
    }
}

// Σ_{i ≥ 1} c_i (x^i + x^{m−i}) + [middle] x^{m/2}, with c indexed from 1.
fn mirrored_poly(c: &[bool], m: u32, middle: bool) -> Gf2Poly {
    let mut bits = 0u128;
    for (idx, &ci) in c.iter().enumerate() {
        let i = idx as u32 + 1;
        if ci {
            bits ^= (1u128 << i) ^ (1u128 << (m - i));
        }
    }
    if middle {
        bits ^= 1u128 << (m / 2);
    }
    Gf2Poly(bits)
}

pub fn construct_ma(spec: &FieldSpec, p: &MaParams) -> Result<TraceRepr> {
    require_field(spec, p.n)?;
    let one = spec.one();
    let mut terms = Vec::new();
    for (idx, &ci) in p.c.iter().enumerate() {
        if ci {
            terms.push(TraceTerm::full(one, gold_exponent(idx as u32 + 1))?);
        }
    }
    terms.push(TraceTerm::new(p.n / 2, one, gold_exponent(p.n / 2))?);
    TraceRepr::new(spec, terms)
}

/// `gcd(c(x), x^n + 1) = 1`.
pub fn ma_criterion(p: &MaParams) -> Result<bool> {
    let g = gcd_f2(p.c_poly(), Gf2Poly::x_pow_plus_one(p.n)?)?;
    Ok(g == Gf2Poly::ONE)
}

/// Which modulus the Hu–Feng gcd test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum HuModulus {
    /// `x^m + 1`, matching the degree of `c(x)`.
    #[default]
    XmPlusOne,
    /// `x^n + 1`, read literally.
    XnPlusOne,
}

/// Subfield degree `e` with `m = n/e` even, `β ∈ GF(2^e)^*` and
/// `(c_1, …, c_{m/2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuParams {
    pub n: u32,
    pub e: u32,
    pub beta: FieldElement,
    pub c: Vec<bool>,
}

impl HuParams {
    pub fn new(n: u32, e: u32, beta: FieldElement, c: Vec<bool>) -> Result<Self> {
        require_even(n, 2)?;
        if beta.spec().n() != n {
            return Err(Error::InvalidParams("beta lives in a different field"));
        }
        if e == 0 || !n.is_multiple_of(e) {
            return Err(Error::NotADivisor { d: e, n });
        }
        let m = n / e;
        if m % 2 == 1 {
            return Err(Error::InvalidParams("m = n/e must be even"));
        }
        if beta.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !beta.in_subfield(e) {
            return Err(Error::NotInSubfield(e));
        }
        if c.len() != (m / 2) as usize {
            return Err(Error::InvalidParams("c must have m/2 entries"));
        }
        Ok(HuParams { n, e, beta, c })
    }

    pub fn m(&self) -> u32 {
        self.n / self.e
    }

    /// `c(x) = Σ_{i<m/2} c_i (x^i + x^{m−i}) + x^{m/2}`.
    pub fn c_poly(&self) -> Gf2Poly {
        let half = self.c.len() - 1;
        mirrored_poly(&self.c[..half], self.m(), true)
    }
}

pub fn construct_hu(spec: &FieldSpec, p: &HuParams) -> Result<TraceRepr> {
    require_field(spec, p.n)?;
    let half = p.c.len() - 1;
    let mut terms = Vec::new();
    for (idx, &ci) in p.c[..half].iter().enumerate() {
        if ci {
            terms.push(TraceTerm::full(p.beta, gold_exponent(p.e * (idx as u32 + 1)))?);
        }
    }
    if p.c[half] {
        // β ∈ GF(2^e) ⊆ GF(2^{n/2}) because m is even
        terms.push(TraceTerm::new(p.n / 2, p.beta, gold_exponent(p.n / 2))?);
    }
    TraceRepr::new(spec, terms)
}

/// `c_{m/2} = 1` and `gcd(c(x), modulus) = 1`.
pub fn hu_criterion(p: &HuParams, modulus: HuModulus) -> Result<bool> {
    if !p.c[p.c.len() - 1] {
        return Ok(false);
    }
    let k = match modulus {
        HuModulus::XmPlusOne => p.m(),
        HuModulus::XnPlusOne => p.n,
    };
    Ok(gcd_f2(p.c_poly(), Gf2Poly::x_pow_plus_one(k)?)? == Gf2Poly::ONE)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiParams {
    pub n: u32,
    pub k: u32,
    pub t: u32,
}

impl LiParams {
    pub fn new(n: u32, k: u32, t: u32) -> Result<Self> {
        require_even(n, 4)?;
        if k == 0 {
            return Err(Error::InvalidParams("k must be positive"));
        }
        Ok(LiParams { n, k, t })
    }
}

/// The all-ones Ma function plus `Σ_{i=1}^t Tr_1^n(x^{1+2^{ki}})`, with
/// `ki` reduced mod n and the sum normalized so coinciding terms cancel.
pub fn construct_li(spec: &FieldSpec, p: &LiParams) -> Result<TraceRepr> {
    require_field(spec, p.n)?;
    let base = MaParams::new(p.n, vec![true; (p.n / 2 - 1) as usize])?;
    let mut repr = construct_ma(spec, &base)?;
    for i in 1..=p.t as u64 {
        let j = ((p.k as u64 * i) % p.n as u64) as u32;
        repr.push(TraceTerm::full(spec.one(), gold_exponent(j))?)?;
    }
    Ok(repr.normalized())
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `gcd(n, (2t+1)k) = gcd(n, k)`.
pub fn li_criterion(p: &LiParams) -> bool {
    let n = p.n as u64;
    gcd_u64(n, (2 * p.t as u64 + 1) * p.k as u64) == gcd_u64(n, p.k as u64)
}

/// `T = {1, 3, …, n/2 − 1}` for n ≡ 0 mod 4, `{1, 3, …, (n−4)/2}` for n ≡ 2 mod 4.
pub fn t_set(n: u32) -> Result<Vec<u32>> {
    require_even(n, 4)?;
    let count = if n.is_multiple_of(4) { n / 4 } else { (n - 2) / 4 };
    Ok((0..count).map(|i| 2 * i + 1).collect())
}

/// A non-cube `a` and a subset `I ⊆ T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewParams {
    a: FieldElement,
    subset: Vec<u32>,
    t: Vec<u32>,
}

impl NewParams {
    pub fn new(a: FieldElement, subset: &[u32]) -> Result<Self> {
        let n = a.spec().n();
        let t = t_set(n)?;
        if a.is_zero() || a.is_cube()? {
            return Err(Error::CubeParameter);
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|i| !t.contains(i)) {
            return Err(Error::NotInT(bad));
        }
        Ok(NewParams { a, subset, t })
    }

    /// The subset of `T` selected by the bits of `mask` (bit k ↔ `T[k]`).
    pub fn from_mask(a: FieldElement, mask: u64) -> Result<Self> {
        let t = t_set(a.spec().n())?;
        let subset: Vec<u32> = t
            .iter()
            .enumerate()
            .filter(|(k, _)| (mask >> k) & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        Self::new(a, &subset)
    }

    pub fn n(&self) -> u32 {
        self.a.spec().n()
    }

    pub fn a(&self) -> FieldElement {
        self.a
    }

    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    /// `J = {n − i : i ∈ T \ I}`.
    pub fn j(&self) -> Vec<u32> {
        let n = self.n();
        self.t
            .iter()
            .filter(|i| !self.subset.contains(i))
            .map(|i| n - i)
            .collect()
    }

    /// `S = I ∪ J`, ascending.
    pub fn s(&self) -> Vec<u32> {
        let mut s = self.subset.clone();
        s.extend(self.j());
        s.sort_unstable();
        s
    }
}

/// `a^{(2^n − 2^i − 2)/3}`.
fn new_coefficient(a: &FieldElement, i: u32) -> Result<FieldElement> {
    let n = a.spec().n();
    a.pow(exact_third((1i128 << n) - (1i128 << i) - 2)?)
}

pub fn construct_new(p: &NewParams) -> Result<TraceRepr> {
    let spec = *p.a.spec();
    let n = spec.n();
    let mut terms = Vec::new();
    for i in p.s() {
        terms.push(TraceTerm::full(new_coefficient(&p.a, i)?, gold_exponent(i))?);
    }
    if n % 4 == 2 {
        // the coefficient lies in GF(2^{n/2}); TraceTerm::new rejects it otherwise
        let coeff = new_coefficient(&p.a, n / 2)?;
        terms.push(TraceTerm::new(n / 2, coeff, gold_exponent(n / 2))?);
    }
    TraceRepr::new(&spec, terms)
}

/// Every subset of `T` in bitmask order, with its function.
pub fn enumerate_new(spec: &FieldSpec, a: FieldElement) -> Result<Vec<(Vec<u32>, TraceRepr)>> {
    if a.spec() != spec {
        return Err(Error::FieldMismatch);
    }
    let t = t_set(spec.n())?;
    (0..1u64 << t.len())
        .map(|mask| {
            let p = NewParams::from_mask(a, mask)?;
            Ok((p.subset().to_vec(), construct_new(&p)?))
        })
        .collect()
}

/// Expected number of instances, `2^{|T|}`.
pub fn new_instance_count(n: u32) -> Result<u64> {
    Ok(1u64 << t_set(n)?.len())
}

/// Gram matrix of `(x, y) ↦ Tr_1^n(L(x) y)` in the polynomial basis.
pub fn linear_gram_matrix(l: &LinearizedPoly) -> Gf2Matrix {
    let spec = l.spec();
    let n = spec.n() as usize;
    let rows = (0..n)
        .map(|i| {
            let lx = l.eval_bits(1 << i);
            (0..n).fold(0u64, |row, j| {
                row | ((spec.abs_trace_bits(spec.mul_bits(lx, 1 << j)) as u64) << j)
            })
        })
        .collect();
    Gf2Matrix::from_rows(n, rows)
}

/// Compares the Gram matrix of the constructed function with that of
/// `Tr_1^n(P(x) y)` entry by entry.
pub fn associated_p_check(p: &NewParams) -> Result<bool> {
    let f = construct_new(p)?.truth_table()?;
    associated_p_check_table(p, &f)
}

/// [`associated_p_check`] against an already materialized truth table.
pub fn associated_p_check_table(p: &NewParams, f: &BooleanFunction) -> Result<bool> {
    let spec = *p.a.spec();
    let big_p = build_p(&spec, &p.a)?;
    Ok(f.gram_matrix(&spec)? == linear_gram_matrix(&big_p))
}

/// The smallest-encoded non-cube of GF(2^n), n even.
pub fn first_noncube(spec: &FieldSpec) -> Result<FieldElement> {
    if spec.n() % 2 == 1 {
        return Err(Error::OddDegree(spec.n()));
    }
    let e = spec.order() / 3;
    spec.elements()
        .skip(1)
        .find(|x| x.pow(e as i128).map(|y| !y.is_one()).unwrap_or(false))
        .ok_or(Error::CubeParameter)
}

/// All non-cubes, for sweeps.
pub fn all_noncubes(spec: &FieldSpec) -> Result<Vec<FieldElement>> {
    noncubes(spec)
}
