//! Parameter grids for the four families and per-instance verification.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context};
use bentpoly_core::boolfun::{BooleanFunction, TraceRepr};
use bentpoly_core::constructions::{
    all_noncubes, construct_hu, construct_li, construct_ma, construct_new, first_noncube, hu_criterion,
    li_criterion, ma_criterion, t_set, HuModulus, HuParams, LiParams, MaParams, NewParams,
};
use bentpoly_core::gf2n::{FieldElement, FieldSpec};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::formats::format_element;
use crate::report::{digest, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Family {
    Ma,
    Hu,
    Li,
    New,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ma => "ma",
            Family::Hu => "hu",
            Family::Li => "li",
            Family::New => "new",
        }
    }
}

/// Which non-cubes `a` a sweep visits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AMode {
    /// The non-cube with the smallest encoding.
    #[default]
    First,
    All,
    /// `k` distinct non-cubes drawn with the run's seed.
    Sample(usize),
}

impl FromStr for AMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "first" => Ok(AMode::First),
            "all" => Ok(AMode::All),
            _ => {
                let k = s
                    .strip_prefix("sample:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| format!("expected first, all or sample:<k>, got {s:?}"))?;
                if k == 0 {
                    return Err("sample count must be at least 1".into());
                }
                Ok(AMode::Sample(k))
            }
        }
    }
}

impl fmt::Display for AMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AMode::First => f.write_str("first"),
            AMode::All => f.write_str("all"),
            AMode::Sample(k) => write!(f, "sample:{k}"),
        }
    }
}

pub fn select_noncubes(spec: &FieldSpec, mode: AMode, rng: &mut impl Rng) -> anyhow::Result<Vec<FieldElement>> {
    Ok(match mode {
        AMode::First => vec![first_noncube(spec)?],
        AMode::All => all_noncubes(spec)?,
        AMode::Sample(k) => {
            let all = all_noncubes(spec)?;
            let mut picked: Vec<FieldElement> = all.choose_multiple(rng, k.min(all.len())).copied().collect();
            picked.sort_by_key(|a| a.bits());
            picked
        }
    })
}

/// A constructed function together with its criterion verdict.
#[derive(Clone, Debug)]
pub struct Instance {
    pub family: Family,
    pub n: u32,
    pub params: String,
    pub predicted: bool,
    pub repr: TraceRepr,
}

impl Instance {
    /// Walsh, rank and degree of the instance.
    pub fn verify(&self) -> anyhow::Result<(Row, BooleanFunction)> {
        let spec = self.repr.spec();
        let f = self.repr.truth_table()?;
        let row = Row {
            family: self.family.name().to_string(),
            n: self.n,
            params: self.params.clone(),
            predicted: self.predicted,
            verified: f.is_bent(spec)?,
            rank: f.rank(spec)?,
            degree: f.algebraic_degree(),
            digest: format!("{:016x}", digest(&f)),
        };
        Ok((row, f))
    }
}

pub fn bits_string(c: &[bool]) -> String {
    c.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn parse_bits(s: &str) -> anyhow::Result<Vec<bool>> {
    s.chars()
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => bail!("coefficient vector must be a string of 0 and 1, got {s:?}"),
        })
        .collect()
}

fn modulus_name(m: HuModulus) -> &'static str {
    match m {
        HuModulus::XmPlusOne => "x^m+1",
        HuModulus::XnPlusOne => "x^n+1",
    }
}

pub fn ma_instance(spec: &FieldSpec, p: &MaParams) -> anyhow::Result<Instance> {
    Ok(Instance {
        family: Family::Ma,
        n: p.n,
        params: format!("c={}", bits_string(&p.c)),
        predicted: ma_criterion(p)?,
        repr: construct_ma(spec, p)?,
    })
}

pub fn hu_instance(spec: &FieldSpec, p: &HuParams, modulus: HuModulus) -> anyhow::Result<Instance> {
    Ok(Instance {
        family: Family::Hu,
        n: p.n,
        params: format!(
            "e={};beta={};c={};modulus={}",
            p.e,
            format_element(&p.beta),
            bits_string(&p.c),
            modulus_name(modulus)
        ),
        predicted: hu_criterion(p, modulus)?,
        repr: construct_hu(spec, p)?,
    })
}

pub fn li_instance(spec: &FieldSpec, p: &LiParams) -> anyhow::Result<Instance> {
    Ok(Instance {
        family: Family::Li,
        n: p.n,
        params: format!("k={};t={}", p.k, p.t),
        predicted: li_criterion(p),
        repr: construct_li(spec, p)?,
    })
}

/// Predicted bent for every admissible parameter choice.
pub fn new_instance(p: &NewParams) -> anyhow::Result<Instance> {
    let subset: Vec<String> = p.subset().iter().map(u32::to_string).collect();
    Ok(Instance {
        family: Family::New,
        n: p.n(),
        params: format!("a={};I={{{}}}", format_element(&p.a()), subset.join(",")),
        predicted: true,
        repr: construct_new(p)?,
    })
}

pub fn ma_grid(spec: &FieldSpec) -> anyhow::Result<Vec<Instance>> {
    MaParams::all(spec.n())?.iter().map(|p| ma_instance(spec, p)).collect()
}

/// Every `e` with `n/e` even, every `β ∈ GF(2^e)^*`, every c-vector.
pub fn hu_grid(spec: &FieldSpec, modulus: HuModulus) -> anyhow::Result<Vec<Instance>> {
    let n = spec.n();
    let mut out = Vec::new();
    for e in (1..=n).filter(|e| n.is_multiple_of(*e) && (n / e).is_multiple_of(2)) {
        let half = n / e / 2;
        for beta in spec.elements().filter(|b| !b.is_zero() && b.in_subfield(e)) {
            for mask in 0u64..1 << half {
                let c = (0..half).map(|i| (mask >> i) & 1 == 1).collect();
                out.push(hu_instance(spec, &HuParams::new(n, e, beta, c)?, modulus)?);
            }
        }
    }
    Ok(out)
}

/// `k ∈ [1, n−1]`, `t ∈ [1, t_max]`.
pub fn li_grid(spec: &FieldSpec, t_max: u32) -> anyhow::Result<Vec<Instance>> {
    let n = spec.n();
    let mut out = Vec::new();
    for k in 1..n {
        for t in 1..=t_max {
            out.push(li_instance(spec, &LiParams::new(n, k, t)?)?);
        }
    }
    Ok(out)
}

/// All subsets of `T` for each `a`, `a`-major, subsets in bitmask order.
pub fn new_grid(noncubes: &[FieldElement]) -> anyhow::Result<Vec<Instance>> {
    let mut out = Vec::new();
    for &a in noncubes {
        let t = t_set(a.spec().n())?;
        for mask in 0u64..1 << t.len() {
            out.push(new_instance(&NewParams::from_mask(a, mask)?)?);
        }
    }
    Ok(out)
}

/// Family parameters as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub c: Option<String>,
    pub e: Option<u32>,
    pub beta: Option<String>,
    pub k: Option<u32>,
    pub t: Option<u32>,
    pub a: Option<String>,
    pub subset: Option<String>,
    pub strict: bool,
}

pub fn single_instance(family: Family, spec: &FieldSpec, p: &FamilyParams) -> anyhow::Result<Instance> {
    let n = spec.n();
    let need = |name: &str| anyhow::anyhow!("--{name} is required for --family {}", family.name());
    match family {
        Family::Ma => {
            let c = parse_bits(p.c.as_deref().ok_or_else(|| need("c"))?)?;
            ma_instance(spec, &MaParams::new(n, c)?)
        }
        Family::Hu => {
            let e = p.e.ok_or_else(|| need("e"))?;
            let beta = crate::formats::parse_element(spec, p.beta.as_deref().ok_or_else(|| need("beta"))?)?;
            let c = parse_bits(p.c.as_deref().ok_or_else(|| need("c"))?)?;
            let modulus = if p.strict {
                HuModulus::XnPlusOne
            } else {
                HuModulus::XmPlusOne
            };
            hu_instance(spec, &HuParams::new(n, e, beta, c)?, modulus)
        }
        Family::Li => {
            let k = p.k.ok_or_else(|| need("k"))?;
            let t = p.t.ok_or_else(|| need("t"))?;
            li_instance(spec, &LiParams::new(n, k, t)?)
        }
        Family::New => {
            let a = match p.a.as_deref() {
                None | Some("first") => first_noncube(spec)?,
                Some(hex) => crate::formats::parse_element(spec, hex)?,
            };
            let subset: Vec<u32> = match p.subset.as_deref() {
                None | Some("") => Vec::new(),
                Some(s) => s
                    .split(',')
                    .map(|i| i.trim().parse::<u32>().with_context(|| format!("bad subset entry {i:?}")))
                    .collect::<anyhow::Result<_>>()?,
            };
            new_instance(&NewParams::new(a, &subset)?)
        }
    }
}
