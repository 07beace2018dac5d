use bentpoly_core::gf2n::{dual_basis, noncubes, solve_relative_trace, FieldElement, FieldSpec};
use bentpoly_core::gf2poly::DEFAULT_MODULI;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x6f2a_11c3)
}

fn random(spec: &FieldSpec, rng: &mut impl Rng) -> FieldElement {
    spec.elem(rng.gen_range(0..spec.size())).unwrap()
}

// --- oracles -------------------------------------------------------------

/// Remainder of GF(2)[x] polynomials packed in u64.
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        a ^= b << (63 - a.leading_zeros() - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn irreducible_by_trial_division(f: u64) -> bool {
    let deg = 63 - f.leading_zeros();
    (2u64..1 << (deg / 2 + 1)).all(|d| poly_rem(f, d) != 0)
}

/// Extended Euclid in GF(2)[x]: inverse of `a` modulo `m`.
fn inverse_by_euclid(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1) = (0u64, 1u64);
    while r1 != 0 {
        let (d0, d1) = (63 - r0.leading_zeros(), 63 - r1.leading_zeros());
        if d0 < d1 {
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut s0, &mut s1);
            continue;
        }
        let shift = d0 - d1;
        r0 ^= r1 << shift;
        s0 ^= s1 << shift;
        if r0 == 0 {
            break;
        }
    }
    // the nonzero remainder is 1; its cofactor is the inverse
    let s = if r1 == 1 { s1 } else { s0 };
    poly_rem(s, m)
}

/// Schoolbook multiply-then-reduce, bit by bit.
fn mul_oracle(a: u64, b: u64, m: u64) -> u64 {
    let mut r = 0u64;
    for i in 0..32 {
        if (b >> i) & 1 == 1 {
            r ^= a << i;
        }
    }
    poly_rem(r, m)
}

// --- moduli --------------------------------------------------------------

#[test]
fn default_moduli_are_smallest_irreducible() {
    for n in 1..=32u32 {
        let expect = ((1u64 << n) | 1..)
            .step_by(2)
            .find(|&f| irreducible_by_trial_division(f))
            .unwrap();
        assert_eq!(DEFAULT_MODULI[n as usize - 1], expect, "n = {n}");
        assert_eq!(FieldSpec::new(n).unwrap().modulus(), expect);
    }
}

#[test]
fn with_modulus_agrees_with_trial_division() {
    for n in 2..=10u32 {
        for m in ((1u64 << n) | 1..1u64 << (n + 1)).step_by(2) {
            assert_eq!(
                FieldSpec::with_modulus(n, m).is_ok(),
                irreducible_by_trial_division(m),
                "modulus {m:#x}"
            );
        }
    }
}

// --- arithmetic ----------------------------------------------------------

#[test]
fn multiplication_matches_schoolbook() {
    let mut rng = rng();
    for n in [1u32, 2, 7, 13, 24, 31, 32] {
        let f = FieldSpec::new(n).unwrap();
        for _ in 0..2000 {
            let (a, b) = (random(&f, &mut rng), random(&f, &mut rng));
            assert_eq!((a * b).bits() as u64, mul_oracle(a.bits() as u64, b.bits() as u64, f.modulus()));
            assert_eq!(a.square(), a * a);
        }
    }
}

#[test]
fn inverse_matches_extended_euclid() {
    let f = FieldSpec::new(4).unwrap();
    let g = f.alpha();
    assert_eq!(g.inv().unwrap().bits() as u64, inverse_by_euclid(2, 0x13));
    assert_eq!(g.inv().unwrap() * g, f.one());
    let mut rng = rng();
    for n in [3u32, 8, 16, 32] {
        let f = FieldSpec::new(n).unwrap();
        for _ in 0..500 {
            let a = random(&f, &mut rng);
            if a.is_zero() {
                continue;
            }
            assert_eq!(a.inv().unwrap().bits() as u64, inverse_by_euclid(a.bits() as u64, f.modulus()));
        }
    }
}

#[test]
fn field_axioms_randomized() {
    let mut rng = rng();
    for n in [4u32, 6, 8] {
        let f = FieldSpec::new(n).unwrap();
        for _ in 0..10_000 {
            let (x, y, z) = (random(&f, &mut rng), random(&f, &mut rng), random(&f, &mut rng));
            assert_eq!(x * y, y * x);
            assert_eq!((x * y) * z, x * (y * z));
            assert_eq!(x * (y + z), x * y + x * z);
            assert_eq!(x + x, f.zero());
        }
    }
}

#[test]
fn frobenius_is_an_automorphism() {
    let mut rng = rng();
    for n in [4u32, 6, 9, 32] {
        let f = FieldSpec::new(n).unwrap();
        for _ in 0..1000 {
            let (x, y) = (random(&f, &mut rng), random(&f, &mut rng));
            assert_eq!((x + y).frobenius(1), x.frobenius(1) + y.frobenius(1));
            assert_eq!((x * y).frobenius(1), x.frobenius(1) * y.frobenius(1));
            assert_eq!(x.frobenius(1), x.square());
            assert_eq!(x.frobenius(n as i64), x);
        }
    }
}

#[test]
fn trace_lands_in_subfield_and_is_transitive() {
    let mut rng = rng();
    let f16 = FieldSpec::new(4).unwrap();
    for _ in 0..50 {
        let x = random(&f16, &mut rng);
        let t = x.trace(2).unwrap();
        assert_eq!(t.frobenius(2), t);
    }
    for n in [4u32, 6, 8, 12] {
        let f = FieldSpec::new(n).unwrap();
        for d in (1..=n).filter(|d| n % d == 0) {
            for _ in 0..200 {
                let x = random(&f, &mut rng);
                let inner = x.trace(d).unwrap();
                assert!(inner.in_subfield(d));
                // Tr_1^d computed inside GF(2^d) as Σ_{j<d} y^{2^j}
                let mut outer = f.zero();
                let mut y = inner;
                for _ in 0..d {
                    outer += y;
                    y = y.square();
                }
                assert_eq!(outer, x.trace(1).unwrap(), "n={n} d={d}");
                assert_eq!(x.trace(1).unwrap().bits(), x.abs_trace() as u32);
            }
        }
    }
}

#[test]
fn cube_map_is_three_to_one() {
    for n in [2u32, 4, 6, 8, 10] {
        let f = FieldSpec::new(n).unwrap();
        let mut hits = vec![0u32; f.size() as usize];
        for x in f.elements().skip(1) {
            hits[x.pow(3).unwrap().bits() as usize] += 1;
        }
        assert!(hits.iter().all(|&h| h == 0 || h == 3));
        let cubes = hits.iter().filter(|&&h| h == 3).count() as u64;
        assert_eq!(cubes, f.order() / 3);
        for x in f.elements().skip(1) {
            assert_eq!(x.is_cube().unwrap(), hits[x.bits() as usize] == 3);
        }
        let nc = noncubes(&f).unwrap();
        assert_eq!(nc.len() as u64, 2 * f.order() / 3);
        assert!(nc.iter().all(|a| !a.pow(f.order() as i128 / 3).unwrap().is_one()));
    }
    assert_eq!(
        FieldSpec::new(4).unwrap().elements().skip(1).filter(|x| x.is_cube().unwrap()).count(),
        5
    );
}

#[test]
fn relative_trace_solutions() {
    // GF(4), t = 1: both α and α² solve c + c² = 1; the smaller encoding wins
    let f4 = FieldSpec::new(2).unwrap();
    let sols: Vec<u32> = f4
        .elements()
        .filter(|c| *c + c.frobenius(1) == f4.one())
        .map(|c| c.bits())
        .collect();
    assert_eq!(sols, [2, 3]);
    assert_eq!(solve_relative_trace(&f4, &f4.one()).unwrap().bits(), 2);

    // exhaustive minimality over GF(2^8)
    let f = FieldSpec::new(8).unwrap();
    for t in f.elements().filter(|t| t.in_subfield(4)) {
        let best = f.elements().find(|c| *c + c.frobenius(4) == t).unwrap();
        assert_eq!(solve_relative_trace(&f, &t).unwrap(), best);
    }

    let f = FieldSpec::new(12).unwrap();
    let mut rng = rng();
    for _ in 0..100 {
        let t = random(&f, &mut rng).trace(6).unwrap();
        let c = solve_relative_trace(&f, &t).unwrap();
        assert_eq!(c + c.frobenius(6), t);
    }
}

#[test]
fn dual_basis_pairings() {
    let mut rng = rng();
    for n in [1u32, 2, 5, 8, 16] {
        let f = FieldSpec::new(n).unwrap();
        let std_basis = f.standard_basis();
        let dual = dual_basis(&f, &std_basis).unwrap();
        for (i, b) in std_basis.iter().enumerate() {
            for (j, d) in dual.iter().enumerate() {
                assert_eq!((*b * *d).abs_trace(), (i == j) as u8);
            }
        }
        assert_eq!(dual_basis(&f, &dual).unwrap(), std_basis);
        // a random invertible basis: images of the standard basis under x ↦ g·x
        let g = loop {
            let g = random(&f, &mut rng);
            if !g.is_zero() {
                break g;
            }
        };
        let scaled: Vec<_> = std_basis.iter().map(|b| *b * g).collect();
        let d = dual_basis(&f, &scaled).unwrap();
        assert_eq!(dual_basis(&f, &d).unwrap(), scaled);
    }
}

proptest! {
    #[test]
    fn pow_adds_exponents(bits in 1u64..(1 << 16), k1 in -(1i128 << 63)..(1i128 << 63), k2 in -(1i128 << 63)..(1i128 << 63)) {
        let f = FieldSpec::new(16).unwrap();
        let x = f.elem(bits).unwrap();
        prop_assert_eq!(x.pow(k1 + k2).unwrap(), x.pow(k1).unwrap() * x.pow(k2).unwrap());
    }

    #[test]
    fn pow_matches_repeated_multiplication(bits in 0u64..(1 << 6), k in 1i128..200) {
        let f = FieldSpec::new(6).unwrap();
        let x = f.elem(bits).unwrap();
        let mut acc = f.one();
        for _ in 0..k {
            acc *= x;
        }
        prop_assert_eq!(x.pow(k).unwrap(), acc);
    }
}
