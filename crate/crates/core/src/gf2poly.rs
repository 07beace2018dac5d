//! Commutative polynomials over GF(2), packed into a `u128`.
//!
//! Bit `i` is the coefficient of `x^i`, so degrees up to 127 are
//! representable. This backs the modulus table of [`crate::gf2n`] and the
//! gcd-based bentness criteria in [`crate::constructions`].

use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2Poly(pub u128);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    pub const X: Gf2Poly = Gf2Poly(2);

    /// `x^k`, or an error if `k > 127`.
    pub fn monomial(k: u32) -> Result<Self> {
        if k > 127 {
            return Err(Error::PolyOverflow);
        }
        Ok(Gf2Poly(1u128 << k))
    }

    /// `x^k + 1`.
    pub fn x_pow_plus_one(k: u32) -> Result<Self> {
        Ok(Gf2Poly(Gf2Poly::monomial(k)?.0 ^ 1))
    }

    pub fn from_coeffs(bits: &[bool]) -> Result<Self> {
        if bits.len() > 128 {
            return Err(Error::PolyOverflow);
        }
        Ok(Gf2Poly(
            bits.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(0u128, |acc, (i, _)| acc | (1u128 << i)),
        ))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    pub fn coeff(self, i: u32) -> bool {
        i < 128 && (self.0 >> i) & 1 == 1
    }

    /// Evaluation at `x = 1`, i.e. the parity of the number of terms.
    pub fn eval_at_one(self) -> bool {
        self.0.count_ones() % 2 == 1
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        match (self.degree(), rhs.degree()) {
            (Some(a), Some(b)) if a + b > 127 => Err(Error::PolyOverflow),
            (Some(_), Some(_)) => Ok(Gf2Poly(clmul_u128(self.0, rhs.0))),
            _ => Ok(Gf2Poly::ZERO),
        }
    }

    pub fn div_rem(self, rhs: Self) -> Result<(Self, Self)> {
        let ds = rhs.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.0;
        let mut q = 0u128;
        while let Some(dr) = Gf2Poly(r).degree() {
            if dr < ds {
                break;
            }
            q |= 1u128 << (dr - ds);
            r ^= rhs.0 << (dr - ds);
        }
        Ok((Gf2Poly(q), Gf2Poly(r)))
    }

    pub fn modulo(self, rhs: Self) -> Result<Self> {
        self.div_rem(rhs).map(|(_, r)| r)
    }

    /// Monic gcd. Over GF(2) every nonzero polynomial is already monic.
    pub fn gcd(self, rhs: Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self, rhs);
        while !b.is_zero() {
            let r = a.modulo(b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    fn mulmod(self, rhs: Self, m: Self) -> Self {
        // both operands are reduced, so the product stays below degree 127 for deg m <= 64
        Gf2Poly(clmul_u128(self.0, rhs.0)).modulo(m).unwrap_or(Gf2Poly::ZERO)
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn clmul_u128(a: u128, mut b: u128) -> u128 {
    let mut r = 0u128;
    let mut shift = 0;
    while b != 0 {
        let tz = b.trailing_zeros();
        shift += tz;
        r ^= a << shift;
        b >>= tz;
        b >>= 1;
        shift += 1;
    }
    r
}

fn prime_divisors(mut n: u32) -> impl Iterator<Item = u32> {
    let mut out = [0u32; 8];
    let mut len = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out[len] = p;
            len += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out[len] = n;
        len += 1;
    }
    out.into_iter().take(len)
}

/// Rabin's irreducibility test for a polynomial of degree 1..=64.
pub fn is_irreducible(f: u64) -> bool {
    let f = Gf2Poly(f as u128);
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let x = Gf2Poly::X.modulo(f).unwrap_or(Gf2Poly::ZERO);
    let frob = |k: u32| {
        let mut y = x;
        for _ in 0..k {
            y = y.mulmod(y, f);
        }
        y
    };
    if frob(n) != x {
        return false;
    }
    prime_divisors(n).all(|q| {
        let h = Gf2Poly(frob(n / q).0 ^ x.0);
        matches!(h.gcd(f), Ok(g) if g == Gf2Poly::ONE)
    })
}

/// Lexicographically smallest irreducible polynomial of degree `n` with
/// constant term 1, for `n = 1..=32`. Index `n - 1`.
pub const DEFAULT_MODULI: [u64; 32] = [
    0x3,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x203,
    0x409,
    0x805,
    0x1009,
    0x201b,
    0x4021,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
];
