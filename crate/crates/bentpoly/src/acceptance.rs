//! The verification suite behind `bentpoly selftest` and the `acceptance`
//! test target. Each check reports pass, fail or (for probes whose outcome
//! is only recorded) info.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use bentpoly_core::boolfun::{BooleanFunction, TraceRepr, TraceTerm};
use bentpoly_core::constructions::{
    enumerate_new, first_noncube, gcd_f2, new_instance_count, HuModulus,
};
use bentpoly_core::gf2n::{FieldElement, FieldSpec};
use bentpoly_core::gf2poly::Gf2Poly;
use bentpoly_core::linpoly::{build_p, build_p1, build_p_unchecked, LinearizedPoly, PermMethod};
use bentpoly_core::skewpoly::SkewPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::families::{hu_grid, li_grid, ma_grid, new_grid, select_noncubes, AMode, Instance};
use crate::formats::Moduli;
use crate::report::Row;

pub const DEFAULT_SEED: u64 = 0x0b1e_55ed;

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub moduli: Moduli,
    /// Non-cubes drawn per n for n ≥ 12.
    pub sampled_noncubes: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            moduli: Moduli::default(),
            sampled_noncubes: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        write!(f, "[{tag}] {:>2} {}: {}", self.id, self.title, self.detail)
    }
}

/// Identifiers in report order; `P` is the cube-case probe.
pub const CHECKS: [&str; 13] = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "P"];

const NEW_NS: [u32; 7] = [4, 6, 8, 10, 12, 14, 16];
const SMALL_NS: [u32; 4] = [4, 6, 8, 10];
const HU_NS: [u32; 3] = [4, 8, 12];
const SKEW_NS: [u32; 4] = [2, 4, 6, 8];
const LI_T_MAX: u32 = 5;

type Verified = Vec<(Row, BooleanFunction)>;

/// Runs checks on demand, sharing the expensive sweeps between them.
pub struct Suite {
    config: Config,
    pairs: OnceLock<Vec<(FieldSpec, Vec<FieldElement>)>>,
    new: OnceLock<Verified>,
    ma: OnceLock<Verified>,
    li: OnceLock<Verified>,
    hu: OnceLock<(Verified, Vec<bool>)>,
}

fn verify_all(instances: &[Instance]) -> Verified {
    instances
        .par_iter()
        .map(|i| i.verify().expect("grid instances are well formed"))
        .collect()
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn random_elem(spec: &FieldSpec, rng: &mut impl Rng) -> FieldElement {
    spec.elem(rng.gen_range(0..spec.size())).expect("in range")
}

fn random_skew(spec: &FieldSpec, max_deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..spec.size())).collect();
    SkewPoly::from_bits(spec, &coeffs).expect("in range")
}

fn random_linearized(spec: &FieldSpec, density: f64, rng: &mut impl Rng) -> LinearizedPoly {
    let coeffs: Vec<u64> = (0..spec.n())
        .map(|_| if rng.gen_bool(density) { rng.gen_range(0..spec.size()) } else { 0 })
        .collect();
    LinearizedPoly::from_bits(spec, &coeffs).expect("in range")
}

/// `Σ_{i<n/2} Tr(β_i x^{1+2^i}) + Tr_1^{n/2}(γ x^{1+2^{n/2}}) + Tr(bx)`;
/// each quadratic coefficient is zero with probability 1/2.
fn random_quadratic(spec: &FieldSpec, rng: &mut impl Rng) -> TraceRepr {
    let n = spec.n();
    let mut r = TraceRepr::zero(spec);
    for i in 1..n / 2 {
        if rng.gen() {
            r.push(TraceTerm::full(random_elem(spec, rng), 1 + (1 << i)).unwrap()).unwrap();
        }
    }
    if rng.gen() {
        let gamma = random_elem(spec, rng).trace(n / 2).unwrap();
        r.push(TraceTerm::new(n / 2, gamma, 1 + (1 << (n / 2))).unwrap()).unwrap();
    }
    r.push(TraceTerm::full(random_elem(spec, rng), 1).unwrap()).unwrap();
    r
}

fn lift_binary(spec: &FieldSpec, p: Gf2Poly) -> SkewPoly {
    let bits: Vec<u64> = (0..128).map(|i| ((p.0 >> i) & 1) as u64).collect();
    SkewPoly::from_bits(spec, &bits).expect("binary coefficients")
}

impl Suite {
    pub fn new(config: Config) -> Self {
        Suite {
            config,
            pairs: OnceLock::new(),
            new: OnceLock::new(),
            ma: OnceLock::new(),
            li: OnceLock::new(),
            hu: OnceLock::new(),
        }
    }

    fn spec(&self, n: u32) -> FieldSpec {
        self.config.moduli.spec(n).expect("degree in range")
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(stream);
        rng
    }

    /// `(n, a)` pairs: every non-cube for n ≤ 10, a seeded sample above.
    fn pairs(&self) -> &[(FieldSpec, Vec<FieldElement>)] {
        self.pairs.get_or_init(|| {
            NEW_NS
                .iter()
                .map(|&n| {
                    let spec = self.spec(n);
                    let mode = if n <= 10 {
                        AMode::All
                    } else {
                        AMode::Sample(self.config.sampled_noncubes)
                    };
                    let a = select_noncubes(&spec, mode, &mut self.rng(n as u64)).expect("even n");
                    (spec, a)
                })
                .collect()
        })
    }

    fn new_rows(&self) -> &Verified {
        self.new.get_or_init(|| {
            let instances: Vec<Instance> = self
                .pairs()
                .iter()
                .flat_map(|(_, a)| new_grid(a).expect("valid non-cubes"))
                .collect();
            verify_all(&instances)
        })
    }

    fn ma_rows(&self) -> &Verified {
        self.ma.get_or_init(|| {
            let instances: Vec<Instance> = SMALL_NS.iter().flat_map(|&n| ma_grid(&self.spec(n)).unwrap()).collect();
            verify_all(&instances)
        })
    }

    fn li_rows(&self) -> &Verified {
        self.li.get_or_init(|| {
            let instances: Vec<Instance> = SMALL_NS
                .iter()
                .flat_map(|&n| li_grid(&self.spec(n), LI_T_MAX).unwrap())
                .collect();
            verify_all(&instances)
        })
    }

    /// Default-modulus rows plus the strict-modulus verdicts, same order.
    fn hu_rows(&self) -> &(Verified, Vec<bool>) {
        self.hu.get_or_init(|| {
            let mut rows = Vec::new();
            let mut strict = Vec::new();
            for &n in &HU_NS {
                let spec = self.spec(n);
                rows.extend(verify_all(&hu_grid(&spec, HuModulus::XmPlusOne).unwrap()));
                strict.extend(hu_grid(&spec, HuModulus::XnPlusOne).unwrap().into_iter().map(|i| i.predicted));
            }
            (rows, strict)
        })
    }

    pub fn run(&self, id: &str) -> Option<Outcome> {
        Some(match id {
            "1" => self.construction_bentness(),
            "2" => self.p_permutation(),
            "3" => self.bent_iff_full_rank(),
            "4" => self.ma_criterion(),
            "5" => self.li_criterion(),
            "6" => self.hu_criterion(),
            "7" => self.division_contract(),
            "8" => self.gcrd_checks(),
            "9" => self.instance_counts(),
            "10" => self.spectral_sanity(),
            "11" => self.quadratic_degree(),
            "12" => self.novelty_probe(),
            "P" => self.cube_probe(),
            _ => return None,
        })
    }

    pub fn run_all(&self) -> Vec<Outcome> {
        CHECKS.iter().map(|id| self.run(id).expect("known id")).collect()
    }

    fn construction_bentness(&self) -> Outcome {
        let rows = self.new_rows();
        let failures: Vec<String> = rows
            .iter()
            .filter(|(r, _)| !r.verified)
            .map(|(r, _)| format!("n={} {}", r.n, r.params))
            .collect();
        let pairs: usize = self.pairs().iter().map(|(_, a)| a.len()).sum();
        Outcome {
            id: "1",
            title: "new construction is bent",
            status: status(failures.is_empty()),
            detail: if failures.is_empty() {
                format!("{} instances over {pairs} (n, a) pairs, n = 4..16, all bent", rows.len())
            } else {
                format!("{} of {} not bent, first: {}", failures.len(), rows.len(), failures[0])
            },
        }
    }

    fn p_permutation(&self) -> Outcome {
        let mut bad = Vec::new();
        let mut checked = 0;
        for (spec, noncubes) in self.pairs() {
            for a in noncubes {
                let p = build_p(spec, a).expect("non-cube");
                let verdicts: Vec<bool> = PermMethod::ALL.iter().map(|&m| p.is_permutation(m).unwrap()).collect();
                checked += 1;
                if verdicts.iter().any(|v| !v) {
                    bad.push(format!("n={} a={a:x} {verdicts:?}", spec.n()));
                }
            }
        }
        let mut disagreements = 0;
        let mut permutations = 0;
        for n in [4u32, 6, 8] {
            let spec = self.spec(n);
            let mut rng = self.rng(100 + n as u64);
            for k in 0..1000 {
                let l = random_linearized(&spec, if k % 2 == 0 { 0.3 } else { 0.9 }, &mut rng);
                let v: Vec<bool> = PermMethod::ALL.iter().map(|&m| l.is_permutation(m).unwrap()).collect();
                if v.iter().any(|&x| x != v[0]) {
                    disagreements += 1;
                }
                permutations += v[0] as u32;
            }
        }
        let ok = bad.is_empty() && disagreements == 0;
        Outcome {
            id: "2",
            title: "P is a permutation (gcrd, Dickson, brute force)",
            status: status(ok),
            detail: if ok {
                format!(
                    "P permutes for all {checked} (n, a) pairs under all three tests; \
                     3000 random L agree ({permutations} permutations)"
                )
            } else {
                format!(
                    "{} (n, a) pairs fail{}; {disagreements} random L disagree",
                    bad.len(),
                    bad.first().map(|b| format!(", first: {b}")).unwrap_or_default()
                )
            },
        }
    }

    fn bent_iff_full_rank(&self) -> Outcome {
        let mismatched = self.ma_rows().iter().filter(|(r, _)| r.verified != (r.rank == r.n)).count();
        let spec = self.spec(8);
        let mut rng = self.rng(300);
        let mut random_mismatch = 0;
        let mut random_bent = 0;
        for _ in 0..1000 {
            let f = random_quadratic(&spec, &mut rng).truth_table().unwrap();
            let bent = f.is_bent(&spec).unwrap();
            random_bent += bent as u32;
            if bent != (f.rank(&spec).unwrap() == 8) {
                random_mismatch += 1;
            }
        }
        let ok = mismatched == 0 && random_mismatch == 0;
        Outcome {
            id: "3",
            title: "quadratic f is bent iff rank = n",
            status: status(ok),
            detail: format!(
                "{} Ma instances ({mismatched} mismatches); 1000 random quadratics at n = 8, \
                 {random_bent} bent ({random_mismatch} mismatches)",
                self.ma_rows().len()
            ),
        }
    }

    fn criterion_outcome(id: &'static str, title: &'static str, rows: &Verified) -> Outcome {
        let bad: Vec<&Row> = rows.iter().map(|(r, _)| r).filter(|r| !r.consistent()).collect();
        let bent = rows.iter().filter(|(r, _)| r.verified).count();
        Outcome {
            id,
            title,
            status: status(bad.is_empty()),
            detail: match bad.first() {
                None => format!("{} instances, {bent} bent, criterion agrees on all", rows.len()),
                Some(r) => format!(
                    "{} of {} disagree, first: n={} {} predicted={} verified={}",
                    bad.len(),
                    rows.len(),
                    r.n,
                    r.params,
                    r.predicted,
                    r.verified
                ),
            },
        }
    }

    fn ma_criterion(&self) -> Outcome {
        Self::criterion_outcome("4", "Ma criterion matches Walsh", self.ma_rows())
    }

    fn li_criterion(&self) -> Outcome {
        Self::criterion_outcome("5", "Li criterion matches Walsh", self.li_rows())
    }

    fn hu_criterion(&self) -> Outcome {
        let (rows, strict) = self.hu_rows();
        let default_bad = rows.iter().filter(|(r, _)| !r.consistent()).count();
        let strict_bad = rows.iter().zip(strict).filter(|((r, _), &s)| r.verified != s).count();
        let ok = default_bad == 0 || strict_bad == 0;
        Outcome {
            id: "6",
            title: "Hu criterion matches Walsh",
            status: status(ok),
            detail: format!(
                "{} instances; modulus x^m+1: {default_bad} mismatches; modulus x^n+1: {strict_bad} mismatches",
                rows.len()
            ),
        }
    }

    fn division_contract(&self) -> Outcome {
        let mut failures = 0;
        for n in SKEW_NS {
            let spec = self.spec(n);
            let mut rng = self.rng(700 + n as u64);
            for _ in 0..10_000 {
                let f = random_skew(&spec, 12, &mut rng);
                let mut g = random_skew(&spec, 8, &mut rng);
                if g.is_zero() {
                    g = SkewPoly::one(&spec);
                }
                let (q, r) = f.right_divide(&g).unwrap();
                let rebuilt = q.smul(&g).unwrap().add(&r).unwrap();
                if rebuilt != f || (!r.is_zero() && r.degree() >= g.degree()) {
                    failures += 1;
                }
            }
        }
        Outcome {
            id: "7",
            title: "right division f = Q×g + R, deg R < deg g",
            status: status(failures == 0),
            detail: format!("10^4 random pairs per n in {SKEW_NS:?}, {failures} failures"),
        }
    }

    fn gcrd_checks(&self) -> Outcome {
        let mut not_dividing = 0;
        for n in SKEW_NS {
            let spec = self.spec(n);
            let mut rng = self.rng(800 + n as u64);
            for _ in 0..10_000 {
                let f = random_skew(&spec, 8, &mut rng);
                let g = random_skew(&spec, 8, &mut rng);
                if f.is_zero() && g.is_zero() {
                    continue;
                }
                let d = f.gcrd(&g).unwrap();
                if !f.rrem(&d).unwrap().is_zero() || !g.rrem(&d).unwrap().is_zero() {
                    not_dividing += 1;
                }
            }
        }
        let mut binary_bad = 0;
        for n in [2u32, 4, 8] {
            let spec = self.spec(n);
            let mut rng = self.rng(850 + n as u64);
            for k in 0..1000 {
                let u = Gf2Poly(rng.gen_range(1..1u128 << 20));
                // every fourth pair uses x^n + 1 as the second operand
                let v = if k % 4 == 0 {
                    Gf2Poly::x_pow_plus_one(n).unwrap()
                } else {
                    Gf2Poly(rng.gen_range(1..1u128 << 20))
                };
                let skew = lift_binary(&spec, u).gcrd(&lift_binary(&spec, v)).unwrap();
                if skew != lift_binary(&spec, gcd_f2(u, v).unwrap()) {
                    binary_bad += 1;
                }
            }
        }
        let mut p1_bad = 0;
        let mut p1_checked = 0;
        for (spec, noncubes) in self.pairs() {
            let xn1 = SkewPoly::x_pow_plus_one(spec, spec.n() as usize);
            for a in noncubes {
                p1_checked += 1;
                if build_p1(spec, a).unwrap().gcrd(&xn1).unwrap() != SkewPoly::one(spec) {
                    p1_bad += 1;
                }
            }
        }
        let ok = not_dividing == 0 && binary_bad == 0 && p1_bad == 0;
        Outcome {
            id: "8",
            title: "gcrd divides both inputs, matches gcd on GF(2) inputs, gcrd(p1, x^n+1) = 1",
            status: status(ok),
            detail: format!(
                "{not_dividing} non-dividing of 4·10^4; {binary_bad} of 3000 binary pairs differ; \
                 {p1_bad} of {p1_checked} (n, a) pairs with gcrd(p1, x^n+1) != 1"
            ),
        }
    }

    fn instance_counts(&self) -> Outcome {
        let mut bad = Vec::new();
        let mut distinct = Vec::new();
        for n in (4..=16).step_by(2) {
            let spec = self.spec(n);
            let expected = if n % 4 == 0 { 1u64 << (n / 4) } else { 1u64 << ((n - 2) / 4) };
            let all = enumerate_new(&spec, first_noncube(&spec).unwrap()).unwrap();
            let got = all.len() as u64;
            if got != expected || new_instance_count(n).unwrap() != expected {
                bad.push(format!("n={n}: {got} != {expected}"));
            }
            let tables: HashSet<Vec<u64>> = all
                .iter()
                .map(|(_, r)| r.truth_table().unwrap().words().to_vec())
                .collect();
            distinct.push(tables.len());
        }
        Outcome {
            id: "9",
            title: "instance count 2^{n/4} or 2^{(n-2)/4}",
            status: status(bad.is_empty()),
            detail: if bad.is_empty() {
                format!(
                    "matches for every even n in 4..=16; distinct truth tables per a (first non-cube): {distinct:?}"
                )
            } else {
                bad.join("; ")
            },
        }
    }

    fn spectral_sanity(&self) -> Outcome {
        let mut parseval_bad = 0;
        for n in [4u32, 6, 8] {
            let spec = self.spec(n);
            let mut rng = self.rng(1000 + n as u64);
            for _ in 0..100 {
                let f = BooleanFunction::from_fn(n, |_| rng.gen());
                if f.walsh_spectrum(&spec).unwrap().parseval_sum() != 1u64 << (2 * n) {
                    parseval_bad += 1;
                }
            }
        }
        let mut fast_bad = 0;
        for n in 1..=6u32 {
            let spec = self.spec(n);
            let mut rng = self.rng(1100 + n as u64);
            for _ in 0..100 {
                let f = BooleanFunction::from_fn(n, |_| rng.gen());
                if f.walsh_spectrum(&spec).unwrap() != f.walsh_naive(&spec).unwrap() {
                    fast_bad += 1;
                }
            }
        }
        let ok = parseval_bad == 0 && fast_bad == 0;
        Outcome {
            id: "10",
            title: "Parseval and fast = naive Walsh",
            status: status(ok),
            detail: format!(
                "Parseval: {parseval_bad} of 300 fail; fast vs naive (n = 1..6): {fast_bad} of 600 differ"
            ),
        }
    }

    fn quadratic_degree(&self) -> Outcome {
        let families: [(&str, &Verified); 4] = [
            ("new", self.new_rows()),
            ("ma", self.ma_rows()),
            ("li", self.li_rows()),
            ("hu", &self.hu_rows().0),
        ];
        let mut total = 0;
        let mut zero = 0;
        let mut bad = Vec::new();
        for (name, rows) in families {
            total += rows.len();
            for (r, _) in rows {
                match r.degree {
                    Some(2) => {}
                    // all-zero coefficient vectors give the zero function
                    None => zero += 1,
                    Some(d) => bad.push(format!("{name} n={} {} degree={d}", r.n, r.params)),
                }
            }
        }
        Outcome {
            id: "11",
            title: "every nonzero constructed instance has degree 2",
            status: status(bad.is_empty()),
            detail: match bad.first() {
                None => format!("{} nonzero instances across new/ma/li/hu ({zero} zero functions skipped)", total - zero),
                Some(b) => format!("{} of {} differ, first: {b}", bad.len(), total - zero),
            },
        }
    }

    fn novelty_probe(&self) -> Outcome {
        let mut parts = Vec::new();
        for n in [6u32, 8] {
            let known: HashSet<&[u64]> = self
                .ma_rows()
                .iter()
                .chain(self.li_rows())
                .filter(|(r, _)| r.n == n)
                .map(|(_, f)| f.words())
                .collect();
            let ours: HashSet<&[u64]> = self
                .new_rows()
                .iter()
                .filter(|(r, _)| r.n == n)
                .map(|(_, f)| f.words())
                .collect();
            let common = ours.intersection(&known).count();
            parts.push(format!(
                "n={n}: {} distinct new tables, {} Ma/Li tables, {common} shared",
                ours.len(),
                known.len()
            ));
        }
        Outcome {
            id: "12",
            title: "novelty probe (truth-table overlap with Ma/Li)",
            status: Status::Info,
            detail: parts.join("; "),
        }
    }

    fn cube_probe(&self) -> Outcome {
        let mut parts = Vec::new();
        for n in [4u32, 6, 8, 10] {
            let spec = self.spec(n);
            let cubes: Vec<FieldElement> = spec.elements().filter(|a| !a.is_zero() && a.is_cube().unwrap()).collect();
            let perms = cubes
                .iter()
                .filter(|a| {
                    build_p_unchecked(&spec, a)
                        .unwrap()
                        .is_permutation(PermMethod::Dickson)
                        .unwrap()
                })
                .count();
            parts.push(format!("n={n}: {perms}/{}", cubes.len()));
        }
        Outcome {
            id: "P",
            title: "P for cube a (permutations / cubes)",
            status: Status::Info,
            detail: parts.join("; "),
        }
    }
}

impl Default for Suite {
    fn default() -> Self {
        Suite::new(Config::default())
    }
}
