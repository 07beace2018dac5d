//! Text and file formats.
//!
//! - Elements: lowercase hex of the polynomial-basis bit pattern; `0x` is
//!   accepted on input.
//! - Modulus overrides: one `n,hex-modulus` per line, `#` starts a comment.
//! - Skew polynomials: `c_k x^k + … + c_1 x + c_0`, or JSON
//!   `{"n": 4, "coeffs": ["1", "0", "a"]}` with index i meaning `x^i`.
//! - Linearized polynomials: the same JSON with index i meaning `x^{2^i}`.
//! - Truth tables: a header line `n=<int>`, then the table as a hex dump of
//!   bytes, bit `x` stored in bit `x mod 8` of byte `x / 8`.
//! - Walsh spectra: CSV with header `a_hex,value`.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

use bentpoly_core::boolfun::{BooleanFunction, WalshSpectrum};
use bentpoly_core::gf2n::{FieldElement, FieldSpec};
use bentpoly_core::linpoly::LinearizedPoly;
use bentpoly_core::skewpoly::SkewPoly;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed hex value {0:?}")]
    Hex(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("malformed polynomial term {0:?}")]
    Term(String),
    #[error("truth table: {0}")]
    TruthTable(String),
    #[error(transparent)]
    Core(#[from] bentpoly_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

pub fn parse_hex(s: &str) -> Result<u64> {
    let t = s.trim();
    let digits = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    if digits.is_empty() {
        return Err(FormatError::Hex(s.to_string()));
    }
    u64::from_str_radix(digits, 16).map_err(|_| FormatError::Hex(s.to_string()))
}

pub fn parse_element(spec: &FieldSpec, s: &str) -> Result<FieldElement> {
    Ok(spec.elem(parse_hex(s)?)?)
}

pub fn format_element(e: &FieldElement) -> String {
    format!("{e:x}")
}

/// Per-degree modulus overrides; degrees without an entry use the default
/// table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Moduli {
    table: BTreeMap<u32, u64>,
}

impl Moduli {
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |msg: &str| FormatError::Syntax {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let (n, m) = line.split_once(',').ok_or_else(|| syntax("expected `n,hex-modulus`"))?;
            let n: u32 = n.trim().parse().map_err(|_| syntax("degree is not an integer"))?;
            let m = parse_hex(m)?;
            FieldSpec::with_modulus(n, m)?;
            if table.insert(n, m).is_some() {
                return Err(syntax("degree listed twice"));
            }
        }
        Ok(Moduli { table })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, n: u32) -> Option<u64> {
        self.table.get(&n).copied()
    }

    pub fn spec(&self, n: u32) -> Result<FieldSpec> {
        Ok(match self.get(n) {
            Some(m) => FieldSpec::with_modulus(n, m)?,
            None => FieldSpec::new(n)?,
        })
    }
}

/// Parses `c_k x^k + … + c_0`; a bare `x` or `x^k` has coefficient 1.
pub fn parse_skew(spec: &FieldSpec, s: &str) -> Result<SkewPoly> {
    let mut coeffs: Vec<u64> = Vec::new();
    let text = s.trim();
    if text == "0" {
        return Ok(SkewPoly::zero(spec));
    }
    for raw in text.split('+') {
        let term = raw.trim();
        let bad = || FormatError::Term(term.to_string());
        let (coeff, power) = match term.find('x') {
            None => (term, 0usize),
            Some(pos) => {
                let coeff = term[..pos].trim();
                let rest = term[pos + 1..].trim();
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?
                };
                (if coeff.is_empty() { "1" } else { coeff }, power)
            }
        };
        if coeff.is_empty() {
            return Err(bad());
        }
        let c = parse_element(spec, coeff)?.bits() as u64;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] ^= c;
    }
    Ok(SkewPoly::from_bits(spec, &coeffs)?)
}

/// Comma-separated hex coefficients, constant term first.
pub fn parse_coeff_list(spec: &FieldSpec, s: &str) -> Result<Vec<FieldElement>> {
    s.split(',').map(|c| parse_element(spec, c)).collect()
}

/// Accepts either [`parse_skew`] text or a [`parse_coeff_list`] list.
pub fn parse_skew_any(spec: &FieldSpec, s: &str) -> Result<SkewPoly> {
    if s.contains('x') {
        parse_skew(spec, s)
    } else {
        Ok(SkewPoly::new(spec, &parse_coeff_list(spec, s)?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: u32,
    pub coeffs: Vec<String>,
}

impl PolyJson {
    fn from_elements(n: u32, coeffs: &[FieldElement]) -> Self {
        PolyJson {
            n,
            coeffs: coeffs.iter().map(format_element).collect(),
        }
    }

    fn elements(&self, moduli: &Moduli) -> Result<(FieldSpec, Vec<FieldElement>)> {
        let spec = moduli.spec(self.n)?;
        let coeffs = self.coeffs.iter().map(|c| parse_element(&spec, c)).collect::<Result<_>>()?;
        Ok((spec, coeffs))
    }
}

pub fn skew_to_json(p: &SkewPoly) -> PolyJson {
    PolyJson::from_elements(p.spec().n(), &p.coeffs())
}

pub fn skew_from_json(j: &PolyJson, moduli: &Moduli) -> Result<SkewPoly> {
    let (spec, coeffs) = j.elements(moduli)?;
    Ok(SkewPoly::new(&spec, &coeffs)?)
}

pub fn linpoly_to_json(l: &LinearizedPoly) -> PolyJson {
    PolyJson::from_elements(l.spec().n(), &l.coeffs())
}

pub fn linpoly_from_json(j: &PolyJson, moduli: &Moduli) -> Result<LinearizedPoly> {
    let (spec, coeffs) = j.elements(moduli)?;
    Ok(LinearizedPoly::new(&spec, &coeffs)?)
}

const HEX_LINE_BYTES: usize = 32;

pub fn write_truth_table(mut w: impl Write, f: &BooleanFunction) -> Result<()> {
    writeln!(w, "n={}", f.n())?;
    for chunk in f.to_bytes().chunks(HEX_LINE_BYTES) {
        writeln!(w, "{}", hex::encode(chunk))?;
    }
    Ok(())
}

pub fn read_truth_table(r: impl BufRead) -> Result<BooleanFunction> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| FormatError::TruthTable("empty file".into()))?;
    let n: u32 = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| FormatError::TruthTable(format!("bad header {header:?}")))?;
    if n > bentpoly_core::boolfun::TRUTH_TABLE_MAX_N {
        return Err(FormatError::TruthTable(format!("n={n} is too large")));
    }
    let mut digits = String::new();
    for line in lines {
        digits.extend(line?.chars().filter(|c| !c.is_whitespace()));
    }
    let bytes = hex::decode(&digits).map_err(|e| FormatError::TruthTable(e.to_string()))?;
    let expected = (1usize << n).div_ceil(8);
    if bytes.len() != expected {
        return Err(FormatError::TruthTable(format!(
            "expected {expected} bytes for n={n}, found {}",
            bytes.len()
        )));
    }
    let words = bytes
        .chunks(8)
        .map(|c| {
            let mut buf = [0u8; 8];
            buf[..c.len()].copy_from_slice(c);
            u64::from_le_bytes(buf)
        })
        .collect();
    Ok(BooleanFunction::from_words(n, words)?)
}

pub fn write_spectrum_csv(w: impl Write, s: &WalshSpectrum) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["a_hex", "value"])?;
    for (a, v) in s.values.iter().enumerate() {
        out.write_record([format!("{a:x}"), v.to_string()])?;
    }
    out.flush()?;
    Ok(())
}
