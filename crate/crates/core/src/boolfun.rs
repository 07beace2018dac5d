//! Boolean functions on GF(2^n) given in trace form
//! `f(x) = Σ Tr_1^{n_i}(β_i x^{r_i})`, their truth tables and the
//! invariants used to decide bentness.
//!
//! Truth tables and spectra are indexed by the bit pattern of the field
//! element, so `values[a]` of a [`WalshSpectrum`] is `f̂(a)` for the element
//! `a` itself, not for a coordinate vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitmat;
use crate::gf2n::{dual_basis, FieldElement, FieldSpec};
use crate::{Error, Result};

/// Largest n for which truth tables are materialized.
pub const TRUTH_TABLE_MAX_N: u32 = 24;

/// One term `Tr_1^{d}(β x^r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceTerm {
    subfield_degree: u32,
    beta: FieldElement,
    exponent: u64,
}

impl TraceTerm {
    /// Checks `d | n`, `β ∈ GF(2^d)`, `r ≤ 2^n − 1` and that `x^r` always
    /// lands in GF(2^d).
    pub fn new(subfield_degree: u32, beta: FieldElement, exponent: u64) -> Result<Self> {
        let spec = *beta.spec();
        let n = spec.n();
        if !spec.divides(subfield_degree) {
            return Err(Error::NotADivisor { d: subfield_degree, n });
        }
        if exponent > spec.order() {
            return Err(Error::InvalidParams("exponent exceeds 2^n - 1"));
        }
        if !beta.in_subfield(subfield_degree) {
            return Err(Error::NotInSubfield(subfield_degree));
        }
        if !subfield_degree.is_multiple_of(coset_size(exponent, n)) {
            return Err(Error::NotInSubfield(subfield_degree));
        }
        Ok(TraceTerm {
            subfield_degree,
            beta,
            exponent,
        })
    }

    /// `Tr_1^n(β x^r)`.
    pub fn full(beta: FieldElement, exponent: u64) -> Result<Self> {
        let n = beta.spec().n();
        Self::new(n, beta, exponent)
    }

    pub fn subfield_degree(&self) -> u32 {
        self.subfield_degree
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Whether `r` is its coset leader and `d` the coset size.
    pub fn is_canonical(&self) -> bool {
        let n = self.beta.spec().n();
        coset_leader(self.exponent, n) == self.exponent && coset_size(self.exponent, n) == self.subfield_degree
    }

    fn eval_bits(&self, x: u32) -> u32 {
        let spec = self.beta.spec();
        // pow_bits(x, 0) = 1, including x = 0
        let z = spec.mul_bits(self.beta.bits(), spec.pow_bits(x, self.exponent));
        let mut acc = 0;
        let mut y = z;
        for _ in 0..self.subfield_degree {
            acc ^= y;
            y = spec.sqr_bits(y);
        }
        debug_assert!(acc <= 1, "inner value escaped the subfield");
        acc & 1
    }
}

/// Coset of `r` under doubling modulo 2^n − 1. `0` and `2^n − 1` are kept
/// apart since `x^0` and `x^{2^n−1}` differ at `x = 0`.
fn coset_members(r: u64, n: u32) -> Vec<u64> {
    let m = (1u64 << n) - 1;
    if r == 0 || r == m {
        return vec![r];
    }
    let mut out = vec![r];
    let mut y = (2 * r) % m;
    while y != r {
        out.push(y);
        y = (2 * y) % m;
    }
    out
}

pub fn coset_size(r: u64, n: u32) -> u32 {
    coset_members(r, n).len() as u32
}

pub fn coset_leader(r: u64, n: u32) -> u64 {
    coset_members(r, n).into_iter().min().unwrap_or(r)
}

/// All cyclotomic cosets of 2 modulo 2^n − 1 as `(leader, size)`, in
/// increasing leader order.
pub fn coset_leaders(n: u32) -> Result<Vec<(u64, u32)>> {
    if n == 0 || n > TRUTH_TABLE_MAX_N {
        return Err(Error::TooLarge {
            what: "coset enumeration",
            n,
            max: TRUTH_TABLE_MAX_N,
        });
    }
    let m = (1u64 << n) - 1;
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for r in 0..m {
        if seen[r as usize] {
            continue;
        }
        let mut size = 0;
        let mut y = r;
        loop {
            seen[y as usize] = true;
            size += 1;
            y = (2 * y) % m;
            if y == r {
                break;
            }
        }
        out.push((r, size));
    }
    Ok(out)
}

/// A sum of trace terms over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRepr {
    spec: FieldSpec,
    terms: Vec<TraceTerm>,
}

impl TraceRepr {
    pub fn new(spec: &FieldSpec, terms: Vec<TraceTerm>) -> Result<Self> {
        if terms.iter().any(|t| t.beta.spec() != spec) {
            return Err(Error::FieldMismatch);
        }
        Ok(TraceRepr { spec: *spec, terms })
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        TraceRepr {
            spec: *spec,
            terms: Vec::new(),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn terms(&self) -> &[TraceTerm] {
        &self.terms
    }

    pub fn push(&mut self, term: TraceTerm) -> Result<()> {
        if term.beta.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(TraceTerm::is_canonical)
    }

    pub fn eval(&self, x: &FieldElement) -> Result<u8> {
        if x.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        Ok(self.terms.iter().fold(0, |acc, t| acc ^ t.eval_bits(x.bits())) as u8)
    }

    /// The same function with every exponent moved to its coset leader,
    /// every subfield degree shrunk to the coset size, and equal terms
    /// merged (vanishing ones dropped).
    ///
    /// Uses `Tr_1^d(β x^r) = Tr_1^d(β^{2^s} x^{r·2^s})` and, for `x^L` in
    /// GF(2^c) with `c | d`, `Tr_1^d(β x^L) = Tr_1^c(Tr_c^d(β) x^L)`.
    pub fn normalized(&self) -> TraceRepr {
        let n = self.spec.n();
        let mut merged: Vec<(u64, u32, FieldElement)> = Vec::new();
        for t in &self.terms {
            let members = coset_members(t.exponent, n);
            let (s, &leader) = members
                .iter()
                .enumerate()
                .min_by_key(|(_, &r)| r)
                .expect("coset is nonempty");
            // members[s] = r · 2^s
            let c = members.len() as u32;
            let beta = relative_trace(&t.beta.frobenius(s as i64), c, t.subfield_degree)
                .expect("coset size divides the subfield degree");
            match merged.iter_mut().find(|(l, d, _)| *l == leader && *d == c) {
                Some(slot) => slot.2 += beta,
                None => merged.push((leader, c, beta)),
            }
        }
        merged.sort_by_key(|&(l, _, _)| l);
        let terms = merged
            .into_iter()
            .filter(|(_, _, b)| !b.is_zero())
            .map(|(l, c, b)| TraceTerm {
                subfield_degree: c,
                beta: b,
                exponent: l,
            })
            .collect();
        TraceRepr { spec: self.spec, terms }
    }

    /// Materializes `f` on all 2^n points (n ≤ 24).
    pub fn truth_table(&self) -> Result<BooleanFunction> {
        let spec = &self.spec;
        let n = spec.n();
        if n > TRUTH_TABLE_MAX_N {
            return Err(Error::TooLarge {
                what: "truth table",
                n,
                max: TRUTH_TABLE_MAX_N,
            });
        }
        struct Prepared {
            beta: u32,
            mask: u32,
            powers: Vec<usize>,
            exponent: u64,
        }
        let prepared: Vec<Prepared> = self
            .terms
            .iter()
            .map(|t| Prepared {
                beta: t.beta.bits(),
                mask: spec.subfield_trace_mask(t.subfield_degree),
                powers: (0..n as usize).filter(|&j| (t.exponent >> j) & 1 == 1).collect(),
                exponent: t.exponent,
            })
            .collect();
        let need_orbit = prepared.iter().any(|p| p.exponent > 1);
        let mut f = BooleanFunction::zero(n);
        let mut orbit = vec![0u32; n as usize];
        for x in 0..(1u32 << n) {
            if need_orbit {
                orbit[0] = x;
                for j in 1..n as usize {
                    orbit[j] = spec.sqr_bits(orbit[j - 1]);
                }
            }
            let mut bit = 0u32;
            for p in &prepared {
                // x^r as a product over the binary digits of r; x^0 = 1
                let xr = match p.exponent {
                    0 => 1,
                    1 => x,
                    _ => {
                        let mut acc = orbit[p.powers[0]];
                        for &j in &p.powers[1..] {
                            acc = spec.mul_bits(acc, orbit[j]);
                        }
                        acc
                    }
                };
                let z = spec.mul_bits(p.beta, xr);
                bit ^= (z & p.mask).count_ones() & 1;
            }
            if bit == 1 {
                f.set(x as usize, true);
            }
        }
        Ok(f)
    }
}

/// Tr_c^d(β) = Σ_{j<d/c} β^{2^{cj}} for c | d.
fn relative_trace(beta: &FieldElement, c: u32, d: u32) -> Option<FieldElement> {
    if c == 0 || !d.is_multiple_of(c) {
        return None;
    }
    let mut acc = beta.spec().zero();
    let mut y = *beta;
    for _ in 0..d / c {
        acc += y;
        y = y.frobenius(c as i64);
    }
    Some(acc)
}

/// A truth table of length 2^n, bit-packed, indexed by element bit pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zero(n: u32) -> Self {
        let len = (1usize << n).div_ceil(64);
        BooleanFunction {
            n,
            words: vec![0; len],
        }
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Self {
        let mut out = Self::zero(n);
        for x in 0..(1u32 << n) {
            if f(x) {
                out.set(x as usize, true);
            }
        }
        out
    }

    /// From packed little-endian words (bit `x % 64` of word `x / 64`).
    pub fn from_words(n: u32, mut words: Vec<u64>) -> Result<Self> {
        let len = (1usize << n).div_ceil(64);
        if words.len() != len {
            return Err(Error::InvalidParams("truth table length is not 2^n"));
        }
        if n < 6 {
            words[0] &= (1u64 << (1u32 << n)) - 1;
        }
        Ok(BooleanFunction { n, words })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Truth-table bytes, little-endian bit order within each byte.
    pub fn to_bytes(&self) -> Vec<u8> {
        let nbytes = self.len().div_ceil(8);
        self.words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(nbytes)
            .collect()
    }

    pub fn get(&self, x: usize) -> bool {
        (self.words[x / 64] >> (x % 64)) & 1 == 1
    }

    pub fn set(&mut self, x: usize, v: bool) {
        let bit = 1u64 << (x % 64);
        if v {
            self.words[x / 64] |= bit;
        } else {
            self.words[x / 64] &= !bit;
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        if self.n != other.n {
            return Err(Error::InvalidParams("truth tables of different sizes"));
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(BooleanFunction { n: self.n, words })
    }

    fn check_spec(&self, spec: &FieldSpec) -> Result<()> {
        if spec.n() != self.n {
            return Err(Error::InvalidParams("truth table size does not match the field"));
        }
        if self.n > TRUTH_TABLE_MAX_N {
            return Err(Error::TooLarge {
                what: "Walsh spectrum",
                n: self.n,
                max: TRUTH_TABLE_MAX_N,
            });
        }
        Ok(())
    }

    /// `f̂(a) = Σ_x (−1)^{f(x) + Tr_1^n(ax)}` for every `a`.
    ///
    /// A butterfly transform yields `W[u] = Σ_x (−1)^{f(x) + u·x}` over
    /// coordinate vectors. Since `Tr(a α^j)` is the j-th coordinate of `a` in
    /// the trace-dual basis `(d_j)`, `f̂(Σ u_j d_j) = W[u]`.
    pub fn walsh_spectrum(&self, spec: &FieldSpec) -> Result<WalshSpectrum> {
        self.check_spec(spec)?;
        let size = self.len();
        let mut w: Vec<i32> = (0..size).map(|x| if self.get(x) { -1 } else { 1 }).collect();
        fwht(&mut w);
        let dual: Vec<u32> = dual_basis(spec, &spec.standard_basis())?
            .iter()
            .map(|d| d.bits())
            .collect();
        let n = self.n as usize;
        let lo_bits = n.min(12);
        let table = |bits: core::ops::Range<usize>| -> Vec<u32> {
            let k = bits.len();
            let mut t = vec![0u32; 1 << k];
            for u in 1..(1usize << k) {
                let low = u.trailing_zeros() as usize;
                t[u] = t[u & (u - 1)] ^ dual[bits.start + low];
            }
            t
        };
        let lo = table(0..lo_bits);
        let hi = table(lo_bits..n);
        let mut values = vec![0i32; size];
        for (u, &v) in w.iter().enumerate() {
            let a = lo[u & ((1 << lo_bits) - 1)] ^ hi[u >> lo_bits];
            values[a as usize] = v;
        }
        Ok(WalshSpectrum { values })
    }

    /// The defining double sum, O(4^n); a reference for small n.
    pub fn walsh_naive(&self, spec: &FieldSpec) -> Result<WalshSpectrum> {
        self.check_spec(spec)?;
        let size = self.len() as u32;
        let values = (0..size)
            .map(|a| {
                (0..size)
                    .map(|x| {
                        let e = self.get(x as usize) as u32 ^ spec.abs_trace_bits(spec.mul_bits(a, x));
                        if e == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .sum()
            })
            .collect();
        Ok(WalshSpectrum { values })
    }

    /// Bent iff every `|f̂(a)| = 2^{n/2}`; defined for even n only.
    pub fn is_bent(&self, spec: &FieldSpec) -> Result<bool> {
        if self.n % 2 == 1 {
            return Err(Error::OddDegree(self.n));
        }
        let target = 1i32 << (self.n / 2);
        Ok(self.walsh_spectrum(spec)?.values.iter().all(|v| v.abs() == target))
    }

    /// `G[i][j] = B_f(α^i, α^j)` with `B_f(x, y) = f(x+y) + f(x) + f(y) + f(0)`.
    ///
    /// For `f(0) = 0` this is `f(x+y) + f(x) + f(y)`; the extra `f(0)` keeps
    /// the matrix unchanged when a constant is added to `f`.
    pub fn gram_matrix(&self, spec: &FieldSpec) -> Result<Gf2Matrix> {
        self.check_spec(spec)?;
        let n = self.n as usize;
        let f0 = self.get(0);
        let mut rows = vec![0u64; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                let (x, y) = (1usize << i, 1usize << j);
                if self.get(x ^ y) ^ self.get(x) ^ self.get(y) ^ f0 {
                    *row |= 1 << j;
                }
            }
        }
        Ok(Gf2Matrix { n, rows })
    }

    /// `n − dim rad(B_f)`, the GF(2)-rank of [`gram_matrix`](Self::gram_matrix).
    pub fn rank(&self, spec: &FieldSpec) -> Result<u32> {
        Ok(self.gram_matrix(spec)?.rank() as u32)
    }

    /// Algebraic normal form by the binary Möbius transform.
    pub fn anf(&self) -> BooleanFunction {
        let mut words = self.words.clone();
        let size = self.len();
        const MASKS: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0f0f_0f0f_0f0f_0f0f,
            0x00ff_00ff_00ff_00ff,
            0x0000_ffff_0000_ffff,
            0x0000_0000_ffff_ffff,
        ];
        for (k, &mask) in MASKS.iter().enumerate() {
            let s = 1usize << k;
            if s >= size {
                break;
            }
            for w in words.iter_mut() {
                *w ^= (*w & mask) << s;
            }
        }
        let mut stride = 1;
        while stride < words.len() {
            for j in 0..words.len() {
                if j & stride == 0 {
                    words[j + stride] ^= words[j];
                }
            }
            stride <<= 1;
        }
        BooleanFunction { n: self.n, words }
    }

    /// Largest monomial weight in the ANF; `None` for the zero function.
    pub fn algebraic_degree(&self) -> Option<u32> {
        let anf = self.anf();
        (0..self.len()).filter(|&u| anf.get(u)).map(|u| u.count_ones()).max()
    }
}

/// In-place Walsh–Hadamard butterfly.
fn fwht(v: &mut [i32]) {
    let mut h = 1;
    while h < v.len() {
        for chunk in v.chunks_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// `f̂(a)` for every field element `a`, indexed by bit pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn value(&self, a: &FieldElement) -> i32 {
        self.values[a.bits() as usize]
    }

    /// Σ f̂(a)², which equals 2^{2n}.
    pub fn parseval_sum(&self) -> u64 {
        self.values.iter().map(|&v| (v as i64 * v as i64) as u64).sum()
    }
}

/// A square matrix over GF(2), one packed row per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        Gf2Matrix { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn rank(&self) -> usize {
        bitmat::rank(&self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        (0..self.n).all(|i| !self.get(i, i) && (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: u32) -> FieldSpec {
        FieldSpec::new(n).unwrap()
    }

    fn gold(spec: &FieldSpec) -> TraceRepr {
        TraceRepr::new(spec, vec![TraceTerm::full(spec.one(), 3).unwrap()]).unwrap()
    }

    #[test]
    fn empty_repr_is_zero() {
        let f = gf(4);
        let r = TraceRepr::zero(&f);
        for x in f.elements() {
            assert_eq!(r.eval(&x).unwrap(), 0);
        }
        let tt = r.truth_table().unwrap();
        assert_eq!(tt.weight(), 0);
        assert_eq!(tt.len(), 16);
    }

    #[test]
    fn gold_n4_points() {
        let f = gf(4);
        let r = gold(&f);
        assert_eq!(r.eval(&f.zero()).unwrap(), 0);
        assert_eq!(r.eval(&f.one()).unwrap(), 0);
        let tt = r.truth_table().unwrap();
        for x in f.elements() {
            assert_eq!(tt.get(x.bits() as usize), r.eval(&x).unwrap() == 1);
        }
    }

    #[test]
    fn gold_n2_is_zero() {
        let f = gf(2);
        assert_eq!(gold(&f).truth_table().unwrap().weight(), 0);
    }

    #[test]
    fn term_validation() {
        let f = gf(4);
        // α is not in GF(4) ⊂ GF(16)
        assert_eq!(TraceTerm::new(2, f.alpha(), 5), Err(Error::NotInSubfield(2)));
        assert_eq!(TraceTerm::new(3, f.one(), 5), Err(Error::NotADivisor { d: 3, n: 4 }));
        // x^3 does not stay inside GF(4)
        assert_eq!(TraceTerm::new(2, f.one(), 3), Err(Error::NotInSubfield(2)));
        assert!(TraceTerm::new(2, f.one(), 5).unwrap().is_canonical());
        assert!(!TraceTerm::new(4, f.one(), 6).unwrap().is_canonical());
        assert!(TraceTerm::new(1, f.one(), 0).is_ok());
        assert!(TraceTerm::new(1, f.one(), 15).is_ok());
        assert!(TraceTerm::new(1, f.one(), 16).is_err());
    }

    #[test]
    fn constant_and_last_exponent() {
        let f = gf(4);
        // Tr_1^1(1 · x^0) = 1 everywhere, including x = 0
        let one = TraceRepr::new(&f, vec![TraceTerm::new(1, f.one(), 0).unwrap()]).unwrap();
        assert_eq!(one.truth_table().unwrap().weight(), 16);
        // x^{15} is 0 at 0 and 1 elsewhere
        let ind = TraceRepr::new(&f, vec![TraceTerm::new(1, f.one(), 15).unwrap()]).unwrap();
        let tt = ind.truth_table().unwrap();
        assert!(!tt.get(0));
        assert_eq!(tt.weight(), 15);
        assert_eq!(one.truth_table().unwrap().algebraic_degree(), Some(0));
    }

    #[test]
    fn cosets_n2() {
        assert_eq!(coset_leaders(2).unwrap(), [(0, 1), (1, 2)]);
        for n in 1..=10 {
            let cs = coset_leaders(n).unwrap();
            assert_eq!(cs.iter().map(|c| c.1 as u64).sum::<u64>(), (1 << n) - 1);
            assert!(cs.iter().all(|c| n % c.1 == 0));
        }
    }

    #[test]
    fn zero_function_spectrum() {
        let f = gf(4);
        let z = BooleanFunction::zero(4);
        let w = z.walsh_spectrum(&f).unwrap();
        assert_eq!(w.values[0], 16);
        assert!(w.values[1..].iter().all(|&v| v == 0));
        assert!(!z.is_bent(&f).unwrap());
        assert_eq!(z.rank(&f).unwrap(), 0);
        assert_eq!(z.algebraic_degree(), None);
        assert!(z.gram_matrix(&f).unwrap().is_zero());
    }

    #[test]
    fn gold_n4_with_cube_coefficient_is_not_bent() {
        // β = 1 is a cube in GF(16): spectrum {0, ±8}, radical GF(4)
        let f = gf(4);
        let tt = gold(&f).truth_table().unwrap();
        let w = tt.walsh_spectrum(&f).unwrap();
        assert_eq!(w, tt.walsh_naive(&f).unwrap());
        assert!(w.values.iter().all(|v| [0, 8].contains(&v.abs())));
        assert!(!tt.is_bent(&f).unwrap());
        assert_eq!(tt.algebraic_degree(), Some(2));
        assert_eq!(tt.rank(&f).unwrap(), 2);
    }

    #[test]
    fn gold_n4_with_noncube_coefficient_is_bent() {
        let f = gf(4);
        let r = TraceRepr::new(&f, vec![TraceTerm::full(f.alpha(), 3).unwrap()]).unwrap();
        let tt = r.truth_table().unwrap();
        let w = tt.walsh_spectrum(&f).unwrap();
        assert!(w.values.iter().all(|v| v.abs() == 4));
        assert_eq!(w, tt.walsh_naive(&f).unwrap());
        assert!(tt.is_bent(&f).unwrap());
        assert_eq!(tt.rank(&f).unwrap(), 4);
    }

    #[test]
    fn linear_function_has_zero_gram() {
        let f = gf(6);
        let beta = f.elem(0b101101).unwrap();
        let r = TraceRepr::new(&f, vec![TraceTerm::full(beta, 1).unwrap()]).unwrap();
        let tt = r.truth_table().unwrap();
        assert!(tt.gram_matrix(&f).unwrap().is_zero());
        assert_eq!(tt.algebraic_degree(), Some(1));
        // a linear function has a single spectral peak of 2^n at a = β
        let w = tt.walsh_spectrum(&f).unwrap();
        assert_eq!(w.value(&beta), 64);
    }

    #[test]
    fn half_trace_ma_base_term() {
        let f = gf(4);
        let r = TraceRepr::new(&f, vec![TraceTerm::new(2, f.one(), 5).unwrap()]).unwrap();
        let tt = r.truth_table().unwrap();
        assert_eq!(tt.rank(&f).unwrap(), 4);
        assert!(tt.is_bent(&f).unwrap());
    }

    #[test]
    fn odd_n_not_bent() {
        let f = gf(5);
        assert_eq!(BooleanFunction::zero(5).is_bent(&f), Err(Error::OddDegree(5)));
    }

    #[test]
    fn size_mismatch() {
        let f = gf(4);
        assert!(BooleanFunction::zero(5).walsh_spectrum(&f).is_err());
        assert!(TraceRepr::zero(&gf(25)).truth_table().is_err());
        assert!(BooleanFunction::from_words(4, vec![0, 0]).is_err());
    }

    #[test]
    fn bytes_little_endian() {
        let tt = BooleanFunction::from_fn(4, |x| x == 0 || x == 9);
        assert_eq!(tt.to_bytes(), [0x01, 0x02]);
        let small = BooleanFunction::from_fn(2, |x| x == 3);
        assert_eq!(small.to_bytes(), [0x08]);
    }

    #[test]
    fn normalization_folds_and_cancels() {
        let f = gf(4);
        // Tr_1^4(x^{1+4}) vanishes: x^5 lies in GF(4) and Tr_2^4 doubles it
        let r = TraceRepr::new(&f, vec![TraceTerm::full(f.one(), 5).unwrap()]).unwrap();
        assert!(r.normalized().terms().is_empty());
        assert_eq!(r.truth_table().unwrap().weight(), 0);
        // x^{1+2^3} = (x^{1+2})^{8}: same function as x^3
        let a = TraceRepr::new(&f, vec![TraceTerm::full(f.one(), 9).unwrap()]).unwrap();
        let b = gold(&f);
        assert_eq!(a.normalized(), b);
        let both = TraceRepr::new(&f, vec![a.terms()[0], b.terms()[0]]).unwrap();
        assert!(both.normalized().terms().is_empty());
    }
}
