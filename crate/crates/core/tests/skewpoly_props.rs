use bentpoly_core::gf2n::{FieldElement, FieldSpec};
use bentpoly_core::linpoly::build_p1;
use bentpoly_core::skewpoly::SkewPoly;
use bentpoly_core::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(spec: &FieldSpec, max_deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..spec.size())).collect();
    SkewPoly::from_bits(spec, &coeffs).unwrap()
}

/// The map `y ↦ Σ c_i y^{2^i}` attached to a skew polynomial.
fn as_map(f: &SkewPoly, y: FieldElement) -> FieldElement {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(y.spec().zero(), |acc, (i, c)| acc + *c * y.frobenius(i as i64))
}

/// Commutative Euclid over GF(2)[x] on bit-packed polynomials.
fn gf2_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let db = 127 - b.leading_zeros();
        while a != 0 && 127 - a.leading_zeros() >= db {
            a ^= b << (127 - a.leading_zeros() - db);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn binary_poly(spec: &FieldSpec, bits: u128) -> SkewPoly {
    let coeffs: Vec<u64> = (0..128).map(|i| ((bits >> i) & 1) as u64).collect();
    SkewPoly::from_bits(spec, &coeffs).unwrap()
}

#[test]
fn product_composes_linear_maps() {
    // (a x^i)(b x^j) acts as y ↦ a (b y^{2^j})^{2^i}
    let mut rng = rng(1);
    for n in [2u32, 4, 5, 8] {
        let spec = FieldSpec::new(n).unwrap();
        for _ in 0..300 {
            let f = random_poly(&spec, 6, &mut rng);
            let g = random_poly(&spec, 6, &mut rng);
            let fg = f.smul(&g).unwrap();
            for _ in 0..4 {
                let y = spec.elem(rng.gen_range(0..spec.size())).unwrap();
                assert_eq!(as_map(&fg, y), as_map(&f, as_map(&g, y)));
            }
        }
    }
}

#[test]
fn ring_laws() {
    let mut rng = rng(2);
    for n in [2u32, 4, 6] {
        let spec = FieldSpec::new(n).unwrap();
        let one = SkewPoly::one(&spec);
        for _ in 0..500 {
            let f = random_poly(&spec, 5, &mut rng);
            let g = random_poly(&spec, 5, &mut rng);
            let h = random_poly(&spec, 5, &mut rng);
            assert_eq!(f.smul(&g).unwrap().smul(&h).unwrap(), f.smul(&g.smul(&h).unwrap()).unwrap());
            assert_eq!(
                f.smul(&g.add(&h).unwrap()).unwrap(),
                f.smul(&g).unwrap().add(&f.smul(&h).unwrap()).unwrap()
            );
            assert_eq!(
                g.add(&h).unwrap().smul(&f).unwrap(),
                g.smul(&f).unwrap().add(&h.smul(&f).unwrap()).unwrap()
            );
            assert_eq!(f.smul(&one).unwrap(), f);
            assert_eq!(one.smul(&f).unwrap(), f);
        }
    }
}

#[test]
fn division_contract() {
    let mut rng = rng(3);
    for n in [2u32, 4, 6, 8] {
        let spec = FieldSpec::new(n).unwrap();
        for _ in 0..10_000 {
            let f = random_poly(&spec, 12, &mut rng);
            let mut g = random_poly(&spec, 8, &mut rng);
            if g.is_zero() {
                g = SkewPoly::one(&spec);
            }
            let (q, r) = f.right_divide(&g).unwrap();
            assert_eq!(q.smul(&g).unwrap().add(&r).unwrap(), f);
            if let Some(dr) = r.degree() {
                assert!(dr < g.degree().unwrap());
            }
        }
    }
}

#[test]
fn division_edge_cases() {
    let spec = FieldSpec::new(4).unwrap();
    let mut rng = rng(4);
    let f = random_poly(&spec, 6, &mut rng);
    assert!(matches!(f.right_divide(&SkewPoly::zero(&spec)), Err(Error::DivisionByZero)));
    let (q, r) = SkewPoly::zero(&spec).right_divide(&f.monic()).unwrap();
    assert!(q.is_zero() && r.is_zero());
    assert!(f.rrem(&f).unwrap().is_zero());
}

#[test]
fn gcrd_right_divides_both_inputs() {
    let mut rng = rng(5);
    for n in [2u32, 4, 6, 8] {
        let spec = FieldSpec::new(n).unwrap();
        for _ in 0..2500 {
            let f = random_poly(&spec, 8, &mut rng);
            let g = random_poly(&spec, 8, &mut rng);
            if f.is_zero() && g.is_zero() {
                continue;
            }
            let d = f.gcrd(&g).unwrap();
            assert!(d.leading_coeff().unwrap().is_one());
            assert!(f.rrem(&d).unwrap().is_zero());
            assert!(g.rrem(&d).unwrap().is_zero());
            assert_eq!(g.gcrd(&f).unwrap(), d);
        }
    }
}

#[test]
fn gcrd_finds_planted_common_factor() {
    let mut rng = rng(6);
    let spec = FieldSpec::new(6).unwrap();
    for _ in 0..300 {
        let w = random_poly(&spec, 3, &mut rng).monic();
        if w.is_zero() {
            continue;
        }
        let u = random_poly(&spec, 4, &mut rng);
        let v = random_poly(&spec, 4, &mut rng);
        let f = u.smul(&w).unwrap();
        let g = v.smul(&w).unwrap();
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let d = f.gcrd(&g).unwrap();
        // w is a common right divisor, so it divides the greatest one
        assert!(d.rrem(&w).unwrap().is_zero());
    }
}

#[test]
fn gcrd_on_binary_inputs_is_commutative_gcd() {
    let mut rng = rng(7);
    for n in [2u32, 4, 8] {
        let spec = FieldSpec::new(n).unwrap();
        for _ in 0..1000 {
            let a: u128 = rng.gen_range(1..1 << 20);
            let b: u128 = rng.gen_range(1..1 << 20);
            let got = binary_poly(&spec, a).gcrd(&binary_poly(&spec, b)).unwrap();
            assert!(got.is_binary());
            assert_eq!(got, binary_poly(&spec, gf2_gcd(a, b)));
        }
        // x^n + 1 against binary l
        let xn1 = SkewPoly::x_pow_plus_one(&spec, n as usize);
        for _ in 0..100 {
            let a: u128 = rng.gen_range(1..1 << n);
            let expect = gf2_gcd(a, (1u128 << n) | 1);
            assert_eq!(binary_poly(&spec, a).gcrd(&xn1).unwrap(), binary_poly(&spec, expect));
        }
    }
}

#[test]
fn gcrd_of_p1_and_x4_plus_one() {
    let spec = FieldSpec::new(4).unwrap();
    let xn1 = SkewPoly::x_pow_plus_one(&spec, 4);
    for a in spec.elements().filter(|a| !a.is_zero() && !a.is_cube().unwrap()) {
        let p1 = build_p1(&spec, &a).unwrap();
        assert_eq!(p1.gcrd(&xn1).unwrap(), SkewPoly::one(&spec));

        let (q, r) = xn1.right_divide(&p1).unwrap();
        assert_eq!(q, SkewPoly::monomial(&a.pow(6).unwrap(), 1));
        let expect_r = SkewPoly::new(&spec, &[spec.one(), spec.zero(), a.pow(4).unwrap()]).unwrap();
        assert_eq!(r, expect_r);

        // P(x) = a^4 x^2 + a^2 x^8 has trivial kernel, checked point by point
        let p = |x: FieldElement| a.pow(4).unwrap() * x.pow(2).unwrap() + a.pow(2).unwrap() * x.pow(8).unwrap();
        assert_eq!(spec.elements().filter(|x| p(*x).is_zero()).count(), 1);
    }
}

proptest! {
    #[test]
    fn division_identity_prop(
        fc in proptest::collection::vec(0u64..256, 0..16),
        gc in proptest::collection::vec(0u64..256, 1..10),
    ) {
        let spec = FieldSpec::new(8).unwrap();
        let f = SkewPoly::from_bits(&spec, &fc).unwrap();
        let g = SkewPoly::from_bits(&spec, &gc).unwrap();
        prop_assume!(!g.is_zero());
        let (q, r) = f.right_divide(&g).unwrap();
        prop_assert_eq!(q.smul(&g).unwrap().add(&r).unwrap(), f);
        prop_assert!(r.degree() < g.degree());
    }
}
