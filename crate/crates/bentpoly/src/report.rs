//! Report rows and their CSV, JSON-lines and text renderings.

use std::io::Write;

use bentpoly_core::boolfun::BooleanFunction;
use fnv::FnvHasher;
use serde::Serialize;
use std::hash::Hasher;

/// 64-bit FNV-1a over the packed truth-table bytes of
/// [`BooleanFunction::to_bytes`] (offset basis `0xcbf29ce484222325`, prime
/// `0x100000001b3`).
pub fn digest(f: &BooleanFunction) -> u64 {
    let mut h = FnvHasher::default();
    h.write(&f.to_bytes());
    h.finish()
}

/// One verified instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub family: String,
    pub n: u32,
    pub params: String,
    pub predicted: bool,
    pub verified: bool,
    pub rank: u32,
    pub degree: Option<u32>,
    pub digest: String,
}

impl Row {
    pub fn consistent(&self) -> bool {
        self.predicted == self.verified
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Streams serializable records, one per line (CSV gets a header).
pub struct RecordWriter<W: Write> {
    format: Format,
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(format: Format, w: W) -> Self {
        match format {
            Format::Csv => RecordWriter {
                format,
                csv: Some(csv::Writer::from_writer(w)),
                out: None,
            },
            _ => RecordWriter {
                format,
                csv: None,
                out: Some(w),
            },
        }
    }

    pub fn write<T: Serialize>(&mut self, record: &T) -> anyhow::Result<()> {
        match self.format {
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.serialize(record)?;
                w.flush()?;
            }
            Format::Json => {
                let w = self.out.as_mut().expect("plain writer");
                serde_json::to_writer(&mut *w, record)?;
                writeln!(w)?;
            }
            Format::Text => {
                let w = self.out.as_mut().expect("plain writer");
                writeln!(w, "{}", text_line(&serde_json::to_value(record)?))?;
            }
        }
        Ok(())
    }
}

/// `key=value` pairs separated by spaces; strings unquoted.
fn text_line(v: &serde_json::Value) -> String {
    let render = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => "-".to_string(),
        other => other.to_string(),
    };
    match v {
        serde_json::Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", render(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => render(other),
    }
}
