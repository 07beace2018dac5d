//! Arithmetic in GF(2^n) for 1 ≤ n ≤ 32, in the polynomial basis
//! `1, α, …, α^{n-1}` where α is the class of `x` modulo the field's
//! irreducible modulus.
//!
//! Elements are stored as little-endian coefficient bits: bit `i` is the
//! coordinate of `α^i`. Every element carries a copy of its [`FieldSpec`],
//! and mixing elements of different fields is rejected (the `checked_*`
//! methods return [`Error::FieldMismatch`], the operator impls panic).

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign};

use crate::bitmat::{self, Eliminator};
use crate::gf2poly::{self, DEFAULT_MODULI};
use crate::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 32;

/// A concrete GF(2^n): degree plus irreducible modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    n: u32,
    modulus: u64,
    // modulus without its leading term: x^n = tail in the field
    tail: u64,
    // bit j set iff Tr_1^n(α^j) = 1
    trace_mask: u32,
}

impl FieldSpec {
    /// GF(2^n) with the lexicographically smallest irreducible modulus.
    pub fn new(n: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::DegreeOutOfRange(n));
        }
        Ok(Self::build(n, DEFAULT_MODULI[n as usize - 1]))
    }

    /// GF(2^n) with an explicit modulus. The modulus must have degree `n`,
    /// constant term 1 and be irreducible.
    pub fn with_modulus(n: u32, modulus: u64) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::DegreeOutOfRange(n));
        }
        if modulus >> n != 1 || modulus & 1 == 0 {
            return Err(Error::MalformedModulus { n, modulus });
        }
        if !gf2poly::is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        Ok(Self::build(n, modulus))
    }

    fn build(n: u32, modulus: u64) -> Self {
        let mut spec = FieldSpec {
            n,
            modulus,
            tail: modulus ^ (1u64 << n),
            trace_mask: 0,
        };
        let mut mask = 0u32;
        for j in 0..n {
            let basis = 1u32 << j;
            if spec.subfield_trace_bits(basis, 1, n) & 1 == 1 {
                mask |= 1 << j;
            }
        }
        spec.trace_mask = mask;
        spec
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Order of the multiplicative group, 2^n − 1.
    pub fn order(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// Number of elements, 2^n.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    pub fn elem(&self, bits: u64) -> Result<FieldElement> {
        if bits >> self.n != 0 {
            return Err(Error::ElementOutOfRange { n: self.n, bits });
        }
        Ok(FieldElement {
            bits: bits as u32,
            spec: *self,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { bits: 0, spec: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { bits: 1, spec: *self }
    }

    /// The class of `x`, i.e. α. For n = 1 this is 1.
    pub fn alpha(&self) -> FieldElement {
        FieldElement {
            bits: self.reduce(2) as u32,
            spec: *self,
        }
    }

    /// All elements in increasing bit-pattern order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |b| FieldElement {
            bits: b as u32,
            spec: *self,
        })
    }

    /// The polynomial basis `1, α, …, α^{n−1}`.
    pub fn standard_basis(&self) -> Vec<FieldElement> {
        (0..self.n)
            .map(|j| FieldElement {
                bits: 1 << j,
                spec: *self,
            })
            .collect()
    }

    // --- raw bit-level kernels, shared with the other modules ---

    #[inline]
    fn reduce(&self, mut r: u64) -> u64 {
        let n = self.n;
        let low_mask = (1u64 << n) - 1;
        while r >> n != 0 {
            let hi = r >> n;
            let mut acc = r & low_mask;
            let mut t = self.tail;
            while t != 0 {
                let j = t.trailing_zeros();
                acc ^= hi << j;
                t &= t - 1;
            }
            r = acc;
        }
        r
    }

    #[inline]
    pub(crate) fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let a = a as u64;
        let mut b = b;
        let mut r = 0u64;
        while b != 0 {
            let j = b.trailing_zeros();
            r ^= a << j;
            b &= b - 1;
        }
        self.reduce(r) as u32
    }

    #[inline]
    pub(crate) fn sqr_bits(&self, a: u32) -> u32 {
        self.reduce(spread(a)) as u32
    }

    pub(crate) fn frob_bits(&self, a: u32, k: u32) -> u32 {
        let mut y = a;
        for _ in 0..k % self.n {
            y = self.sqr_bits(y);
        }
        y
    }

    pub(crate) fn pow_bits(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.sqr_bits(base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv_bits(&self, a: u32) -> u32 {
        self.pow_bits(a, self.order() - 1)
    }

    /// Σ_{j<count} a^{2^{step·j}}.
    fn subfield_trace_bits(&self, a: u32, step: u32, count: u32) -> u32 {
        let mut acc = 0;
        let mut y = a;
        for _ in 0..count {
            acc ^= y;
            y = self.frob_bits(y, step);
        }
        acc
    }

    /// Absolute trace Tr_1^n as a parity of masked bits.
    #[inline]
    pub(crate) fn abs_trace_bits(&self, a: u32) -> u32 {
        (a & self.trace_mask).count_ones() & 1
    }

    /// Mask `m` with `parity(z & m) = Tr_1^d(z)` for every `z` in GF(2^d).
    pub(crate) fn subfield_trace_mask(&self, d: u32) -> u32 {
        let mut mask = 0u32;
        for j in 0..self.n {
            if self.subfield_trace_bits(1 << j, 1, d) & 1 == 1 {
                mask |= 1 << j;
            }
        }
        mask
    }

    /// Exponent `k` reduced modulo 2^n − 1, exact for any `i128`.
    pub fn reduce_exponent(&self, k: i128) -> u64 {
        k.rem_euclid(self.order() as i128) as u64
    }

    /// Whether `d` is a positive divisor of `n`.
    pub fn divides(&self, d: u32) -> bool {
        d != 0 && self.n.is_multiple_of(d)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.n, self.modulus)
    }
}

// Interleave the bits of `a` with zeros: the square of a GF(2)[x] polynomial.
#[inline]
fn spread(a: u32) -> u64 {
    let mut x = a as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// An element of a GF(2^n) described by a [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u32,
    spec: FieldSpec,
}

impl FieldElement {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with_bits(&self, bits: u32) -> FieldElement {
        FieldElement { bits, spec: self.spec }
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        Ok(self.with_bits(self.bits ^ rhs.bits))
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        Ok(self.with_bits(self.spec.mul_bits(self.bits, rhs.bits)))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn square(&self) -> FieldElement {
        self.with_bits(self.spec.sqr_bits(self.bits))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.with_bits(self.spec.inv_bits(self.bits)))
    }

    /// `self^k` for any signed exponent. Nonzero bases reduce `k` modulo
    /// 2^n − 1; zero to a non-positive power is an error.
    pub fn pow(&self, k: i128) -> Result<FieldElement> {
        if self.is_zero() {
            return if k > 0 { Ok(*self) } else { Err(Error::ZeroPower) };
        }
        let e = self.spec.reduce_exponent(k);
        Ok(self.with_bits(self.spec.pow_bits(self.bits, e)))
    }

    /// `self^{2^k}`, with `k` taken modulo n.
    pub fn frobenius(&self, k: i64) -> FieldElement {
        let k = k.rem_euclid(self.spec.n as i64) as u32;
        self.with_bits(self.spec.frob_bits(self.bits, k))
    }

    /// Relative trace Tr_d^n(self) = Σ_{j<n/d} self^{2^{dj}}, an element of GF(2^d).
    pub fn trace(&self, d: u32) -> Result<FieldElement> {
        if !self.spec.divides(d) {
            return Err(Error::NotADivisor { d, n: self.spec.n });
        }
        Ok(self.with_bits(self.spec.subfield_trace_bits(self.bits, d, self.spec.n / d)))
    }

    /// Absolute trace Tr_1^n(self) as a bit.
    pub fn abs_trace(&self) -> u8 {
        self.spec.abs_trace_bits(self.bits) as u8
    }

    /// Whether the element lies in the subfield GF(2^d), d | n.
    pub fn in_subfield(&self, d: u32) -> bool {
        self.spec.divides(d) && self.frobenius(d as i64) == *self
    }

    /// Cube test for even n: `self^{(2^n−1)/3} = 1`.
    pub fn is_cube(&self) -> Result<bool> {
        if self.spec.n % 2 == 1 {
            return Err(Error::OddDegree(self.spec.n));
        }
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let e = self.spec.order() / 3;
        Ok(self.spec.pow_bits(self.bits, e) == 1)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

/// Lowercase hex of the coefficient bits.
impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.bits, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(&rhs).expect("adding elements of different fields")
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(&rhs).expect("multiplying elements of different fields")
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

/// All non-cubes of GF(2^n)^*, n even, in increasing bit-pattern order.
pub fn noncubes(spec: &FieldSpec) -> Result<Vec<FieldElement>> {
    if spec.n % 2 == 1 {
        return Err(Error::OddDegree(spec.n));
    }
    let e = spec.order() / 3;
    Ok(spec
        .elements()
        .skip(1)
        .filter(|x| spec.pow_bits(x.bits, e) != 1)
        .collect())
}

/// The smallest-encoded `c` with `c + c^{2^{n/2}} = t`, for `t` in GF(2^{n/2}).
pub fn solve_relative_trace(spec: &FieldSpec, t: &FieldElement) -> Result<FieldElement> {
    if spec.n % 2 == 1 {
        return Err(Error::OddDegree(spec.n));
    }
    if t.spec != *spec {
        return Err(Error::FieldMismatch);
    }
    let half = spec.n / 2;
    if !t.in_subfield(half) {
        return Err(Error::NotInSubfield(half));
    }
    // c ↦ c + c^{2^{n/2}} is GF(2)-linear; its kernel is GF(2^{n/2})
    let mut elim = Eliminator::new();
    for j in 0..spec.n {
        let b = 1u32 << j;
        elim.insert((b ^ spec.frob_bits(b, half)) as u64);
    }
    let particular = elim.solve(t.bits as u64).ok_or(Error::NotInSubfield(half))?;
    let kernel: Vec<u64> = elim.kernel().to_vec();
    let c = bitmat::min_in_coset(particular, &kernel);
    spec.elem(c)
}

/// The trace-dual of `basis`: `d_j` with `Tr_1^n(b_i d_j) = δ_ij`.
pub fn dual_basis(spec: &FieldSpec, basis: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let n = spec.n as usize;
    if basis.len() != n {
        return Err(Error::DependentBasis);
    }
    for b in basis {
        if b.spec != *spec {
            return Err(Error::FieldMismatch);
        }
    }
    // column k: bit i = Tr(b_i α^k); d_j = Σ y_k α^k with Σ_k Tr(b_i α^k) y_k = δ_ij
    let mut elim = Eliminator::new();
    for k in 0..spec.n {
        let mut col = 0u64;
        for (i, b) in basis.iter().enumerate() {
            if spec.abs_trace_bits(spec.mul_bits(b.bits, 1 << k)) == 1 {
                col |= 1 << i;
            }
        }
        elim.insert(col);
    }
    if elim.rank() != n {
        return Err(Error::DependentBasis);
    }
    (0..n)
        .map(|j| {
            let y = elim.solve(1u64 << j).ok_or(Error::DependentBasis)?;
            spec.elem(y)
        })
        .collect()
}
