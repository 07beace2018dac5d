//! Command-line front-end.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a
//! criterion verdict disagrees with the Walsh verdict (or a check fails).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::sync::mpsc;

use anyhow::{bail, Context};
use bentpoly_core::boolfun::TraceRepr;
use bentpoly_core::constructions::{new_instance_count, t_set};
use bentpoly_core::gf2n::FieldSpec;
use bentpoly_core::linpoly::{build_p, LinearizedPoly, PermMethod};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::acceptance::{self, Status, Suite};
use crate::families::{
    hu_grid, li_grid, ma_grid, new_grid, select_noncubes, single_instance, AMode, Family, FamilyParams, Instance,
};
use crate::formats::{
    format_element, linpoly_from_json, parse_coeff_list, parse_element, parse_skew_any, read_truth_table,
    skew_to_json, write_spectrum_csv, write_truth_table, Moduli, PolyJson,
};
use crate::report::{Format, RecordWriter, Row};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Env var naming a modulus override file.
pub const MODULI_ENV: &str = "BENTPOLY_MODULI";

#[derive(Debug, Parser)]
#[command(name = "bentpoly", version, about = "Quadratic bent functions over GF(2^n): construct, verify, enumerate")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Modulus override file with `n,hex-modulus` lines.
    #[arg(long, global = true, env = MODULI_ENV)]
    moduli: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Buffer sweep output and emit it in grid order.
    #[arg(long, global = true)]
    sorted: bool,
    /// Seed for sampling and randomized checks.
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the trace representation of one instance and its criterion verdict.
    Construct {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Also write the truth table to this file.
        #[arg(long)]
        tt_out: Option<PathBuf>,
    },
    /// Criterion verdict, Walsh verdict, rank and degree of one instance.
    Verify {
        #[command(flatten)]
        inst: InstanceArgs,
    },
    /// Verify every instance of a family at one n.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Non-cubes for the new family: first, all or sample:<k>.
        #[arg(long, default_value = "first")]
        a: AMode,
        /// Largest t for the Li family.
        #[arg(long, default_value_t = 5)]
        t_max: u32,
        /// Use x^n+1 instead of x^m+1 in the Hu criterion.
        #[arg(long)]
        strict: bool,
    },
    /// Greatest common right divisor of two skew polynomials.
    Gcrd {
        #[arg(long)]
        n: u32,
        /// Text form `c_k x^k + … + c_0` or comma-separated hex, constant first.
        f: String,
        g: String,
    },
    /// Permutation test of a linearized polynomial by all three methods.
    PermCheck {
        #[arg(long)]
        n: Option<u32>,
        /// Comma-separated hex coefficients a_0,…,a_{n-1} of Σ a_i x^{2^i}.
        #[arg(long, conflicts_with_all = ["p_poly", "json"])]
        coeffs: Option<String>,
        /// Test the polynomial P built from --a.
        #[arg(long = "P", requires = "a")]
        p_poly: bool,
        /// Non-cube parameter for --P, hex.
        #[arg(long)]
        a: Option<String>,
        /// JSON file `{"n": .., "coeffs": [..]}`.
        #[arg(long, conflicts_with = "p_poly")]
        json: Option<PathBuf>,
    },
    /// Walsh spectrum of a truth-table file as CSV.
    Spectrum {
        #[arg(long)]
        tt: PathBuf,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full verification suite.
    Selftest {
        /// Run only these checks (1-12, P).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: u32,
    /// Coefficient bits c_1 c_2 … as a 0/1 string (ma, hu).
    #[arg(long)]
    c: Option<String>,
    /// Subfield degree (hu).
    #[arg(long)]
    e: Option<u32>,
    /// Coefficient in GF(2^e), hex (hu).
    #[arg(long)]
    beta: Option<String>,
    /// Step (li).
    #[arg(long)]
    k: Option<u32>,
    /// Number of extra Gold terms (li).
    #[arg(long)]
    t: Option<u32>,
    /// Non-cube, hex or `first` (new).
    #[arg(long)]
    a: Option<String>,
    /// Comma-separated subset of T (new).
    #[arg(long)]
    subset: Option<String>,
    /// Use x^n+1 instead of x^m+1 in the Hu criterion.
    #[arg(long)]
    strict: bool,
}

impl InstanceArgs {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            c: self.c.clone(),
            e: self.e,
            beta: self.beta.clone(),
            k: self.k,
            t: self.t,
            a: self.a.clone(),
            subset: self.subset.clone(),
            strict: self.strict,
        }
    }
}

struct Ctx {
    format: Format,
    moduli: Moduli,
    jobs: usize,
    sorted: bool,
    seed: u64,
}

impl Ctx {
    fn spec(&self, n: u32) -> anyhow::Result<FieldSpec> {
        Ok(self.moduli.spec(n)?)
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let moduli = match &cli.moduli {
        Some(path) => Moduli::load(path).with_context(|| format!("reading moduli file {}", path.display()))?,
        None => Moduli::default(),
    };
    if cli.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let ctx = Ctx {
        format: cli.format,
        moduli,
        jobs: cli.jobs,
        sorted: cli.sorted,
        seed: cli.seed,
    };
    match cli.command {
        Command::Construct { inst, tt_out } => construct(&ctx, &inst, tt_out, out),
        Command::Verify { inst } => verify(&ctx, &inst, out),
        Command::Enumerate {
            family,
            n,
            a,
            t_max,
            strict,
        } => enumerate(&ctx, family, n, a, t_max, strict, out, err),
        Command::Gcrd { n, f, g } => gcrd(&ctx, n, &f, &g, out),
        Command::PermCheck {
            n,
            coeffs,
            p_poly,
            a,
            json,
        } => perm_check(&ctx, n, coeffs, p_poly, a, json, out),
        Command::Spectrum { tt, out: path } => spectrum(&ctx, &tt, path, out),
        Command::Selftest { only } => selftest(&ctx, &only, out),
    }
}

/// `Tr_d(β x^r) + …` with hex coefficients.
pub fn format_repr(r: &TraceRepr) -> String {
    if r.terms().is_empty() {
        return "0".into();
    }
    r.terms()
        .iter()
        .map(|t| format!("Tr_{}({} x^{})", t.subfield_degree(), format_element(&t.beta()), t.exponent()))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Serialize)]
struct ConstructRecord {
    family: String,
    n: u32,
    params: String,
    repr: String,
    predicted: bool,
}

fn construct(ctx: &Ctx, args: &InstanceArgs, tt_out: Option<PathBuf>, out: &mut dyn Write) -> anyhow::Result<i32> {
    let spec = ctx.spec(args.n)?;
    let inst = single_instance(args.family, &spec, &args.params())?;
    if let Some(path) = tt_out {
        let f = inst.repr.truth_table()?;
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        write_truth_table(io::BufWriter::new(file), &f)?;
    }
    let rec = ConstructRecord {
        family: inst.family.name().into(),
        n: inst.n,
        params: inst.params.clone(),
        repr: format_repr(&inst.repr),
        predicted: inst.predicted,
    };
    RecordWriter::new(ctx.format, out).write(&rec)?;
    Ok(EXIT_OK)
}

fn verify(ctx: &Ctx, args: &InstanceArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let spec = ctx.spec(args.n)?;
    let inst = single_instance(args.family, &spec, &args.params())?;
    let (row, _) = inst.verify()?;
    RecordWriter::new(ctx.format, out).write(&row)?;
    Ok(if row.consistent() { EXIT_OK } else { EXIT_MISMATCH })
}

fn pool(jobs: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

/// Verifies `instances`, writing rows in grid order when sequential or
/// sorted and in completion order otherwise.
fn stream_rows(ctx: &Ctx, instances: &[Instance], out: &mut dyn Write) -> anyhow::Result<Vec<Row>> {
    if ctx.jobs == 1 {
        let mut w = RecordWriter::new(ctx.format, out);
        let mut rows = Vec::with_capacity(instances.len());
        for inst in instances {
            let (row, _) = inst.verify()?;
            w.write(&row)?;
            rows.push(row);
        }
        return Ok(rows);
    }
    let pool = pool(ctx.jobs)?;
    if ctx.sorted {
        let rows: Vec<Row> = pool.install(|| {
            instances
                .par_iter()
                .map(|i| i.verify().map(|(r, _)| r))
                .collect::<anyhow::Result<_>>()
        })?;
        let mut w = RecordWriter::new(ctx.format, out);
        for row in &rows {
            w.write(row)?;
        }
        return Ok(rows);
    }
    // workers send rows as they finish; this thread writes them
    let (tx, rx) = mpsc::channel::<Row>();
    std::thread::scope(|scope| {
        let work = scope.spawn(move || {
            pool.install(|| {
                instances.par_iter().try_for_each_with(tx, |tx, i| {
                    let (row, _) = i.verify()?;
                    tx.send(row).expect("receiver outlives workers");
                    anyhow::Ok(())
                })
            })
        });
        let mut w = RecordWriter::new(ctx.format, out);
        let mut rows = Vec::with_capacity(instances.len());
        for row in rx {
            w.write(&row)?;
            rows.push(row);
        }
        work.join().expect("worker thread")?;
        Ok(rows)
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    ctx: &Ctx,
    family: Family,
    n: u32,
    a_mode: AMode,
    t_max: u32,
    strict: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    let spec = ctx.spec(n)?;
    let modulus = if strict {
        bentpoly_core::constructions::HuModulus::XnPlusOne
    } else {
        bentpoly_core::constructions::HuModulus::XmPlusOne
    };
    let mut count_ok = true;
    let instances = match family {
        Family::Ma => ma_grid(&spec)?,
        Family::Hu => hu_grid(&spec, modulus)?,
        Family::Li => li_grid(&spec, t_max)?,
        Family::New => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let noncubes = select_noncubes(&spec, a_mode, &mut rng)?;
            let grid = new_grid(&noncubes)?;
            let expected = new_instance_count(n)?;
            let per_a = 1u64 << t_set(n)?.len();
            count_ok = per_a == expected && grid.len() as u64 == expected * noncubes.len() as u64;
            writeln!(
                err,
                "n={n}: {} non-cube(s), {per_a} subsets of T each (expected {expected})",
                noncubes.len()
            )?;
            grid
        }
    };
    let rows = stream_rows(ctx, &instances, out)?;
    let bent = rows.iter().filter(|r| r.verified).count();
    let mismatches = rows.iter().filter(|r| !r.consistent()).count();
    writeln!(
        err,
        "{} {}: {} instances, {bent} bent, {mismatches} criterion mismatches",
        family.name(),
        n,
        rows.len()
    )?;
    Ok(if count_ok && mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn gcrd(ctx: &Ctx, n: u32, f: &str, g: &str, out: &mut dyn Write) -> anyhow::Result<i32> {
    let spec = ctx.spec(n)?;
    let f = parse_skew_any(&spec, f)?;
    let g = parse_skew_any(&spec, g)?;
    let d = f.gcrd(&g)?;
    match ctx.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&skew_to_json(&d))?)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct GcrdRecord {
                n: u32,
                gcrd: String,
            }
            RecordWriter::new(Format::Csv, out).write(&GcrdRecord { n, gcrd: d.to_string() })?;
        }
        Format::Text => writeln!(out, "{d}")?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PermRecord {
    n: u32,
    gcrd: bool,
    dickson: bool,
    bruteforce: bool,
    agree: bool,
}

fn perm_check(
    ctx: &Ctx,
    n: Option<u32>,
    coeffs: Option<String>,
    p_poly: bool,
    a: Option<String>,
    json: Option<PathBuf>,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let l: LinearizedPoly = if let Some(path) = json {
        let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
        let j: PolyJson = serde_json::from_reader(BufReader::new(file))?;
        if n.is_some_and(|n| n != j.n) {
            bail!("--n disagrees with the JSON file");
        }
        linpoly_from_json(&j, &ctx.moduli)?
    } else {
        let n = n.context("--n is required unless --json is given")?;
        let spec = ctx.spec(n)?;
        if p_poly {
            let a = parse_element(&spec, a.as_deref().expect("clap enforces --a"))?;
            build_p(&spec, &a)?
        } else {
            let c = coeffs.context("one of --coeffs, --P or --json is required")?;
            LinearizedPoly::new(&spec, &parse_coeff_list(&spec, &c)?)?
        }
    };
    let v: Vec<bool> = PermMethod::ALL
        .iter()
        .map(|&m| l.is_permutation(m))
        .collect::<Result<_, _>>()?;
    let agree = v.iter().all(|&x| x == v[0]);
    let rec = PermRecord {
        n: l.spec().n(),
        gcrd: v[0],
        dickson: v[1],
        bruteforce: v[2],
        agree,
    };
    RecordWriter::new(ctx.format, out).write(&rec)?;
    Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn spectrum(ctx: &Ctx, tt: &PathBuf, path: Option<PathBuf>, out: &mut dyn Write) -> anyhow::Result<i32> {
    let file = File::open(tt).with_context(|| format!("opening {}", tt.display()))?;
    let f = read_truth_table(BufReader::new(file))?;
    let spec = ctx.spec(f.n())?;
    let s = f.walsh_spectrum(&spec)?;
    match path {
        Some(p) => write_spectrum_csv(File::create(&p).with_context(|| format!("creating {}", p.display()))?, &s)?,
        None => write_spectrum_csv(out, &s)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    id: &'a str,
    status: &'a str,
    title: &'a str,
    detail: &'a str,
}

fn selftest(ctx: &Ctx, only: &[String], out: &mut dyn Write) -> anyhow::Result<i32> {
    let ids: Vec<&str> = if only.is_empty() {
        acceptance::CHECKS.to_vec()
    } else {
        only.iter().map(String::as_str).collect()
    };
    if let Some(bad) = ids.iter().find(|id| !acceptance::CHECKS.contains(id)) {
        bail!("unknown check {bad:?}; expected one of {:?}", acceptance::CHECKS);
    }
    let suite = Suite::new(acceptance::Config {
        seed: ctx.seed,
        moduli: ctx.moduli.clone(),
        ..Default::default()
    });
    let pool = pool(ctx.jobs)?;
    let mut failed = false;
    let mut w = RecordWriter::new(ctx.format, out);
    for id in ids {
        let outcome = pool.install(|| suite.run(id)).expect("validated id");
        failed |= outcome.status == Status::Fail;
        let status = match outcome.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        };
        w.write(&CheckRecord {
            id: outcome.id,
            status,
            title: outcome.title,
            detail: &outcome.detail,
        })?;
    }
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}
