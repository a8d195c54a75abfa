//! `lhk`: count, enumerate, verify, sort and draw bounded lecture hall tableaux.

/// `println!` that tolerates a closed stdout, e.g. when piped into `head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

mod verify;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lecture_hall::enumeration::{
    count_report, enumerate_ct, enumerate_extended_lht, enumerate_lht, enumerate_marked_ssct, enumerate_ssct,
    enumerate_st, enumerate_syt, EnumerationLimits,
};
use lecture_hall::jdt::{msort_with, vsort_with, SortOptions};
use lecture_hall::paths::{
    export_content_paths, export_omega_paths, export_paths, lht_to_paths, pair_to_omega_paths, ssct_to_content_paths,
    ExportFormat,
};
use lecture_hall::polynomials::{l_poly, s_poly, schur_expand_shifted};
use lecture_hall::tableaux::{validate, validate_marked};
use lecture_hall::{MarkedTableau, Partition, SkewShape, Tableau, TableauClass};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "lhk", version, about = "Exact computations with bounded lecture hall tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count LHT_{n,m}(λ/μ) by every applicable method.
    Count(CountArgs),
    /// List the tableaux of a class on a shape.
    Enumerate(EnumerateArgs),
    /// Check an identity over a bounded sweep of shapes.
    Verify(VerifyArgs),
    /// Run value sorting or mark sorting on a marked tableau read from JSON.
    Sort(SortArgs),
    /// Export the lattice-path encoding of a tableau read from JSON.
    Paths(PathsArgs),
    /// Expand a generating polynomial or a shifted Schur polynomial.
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    /// Graphviz output, `paths` only.
    Dot,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    /// Outer partition λ, comma separated; "0" for the empty partition.
    #[arg(long, default_value = "0")]
    outer: String,
    /// Inner partition μ, comma separated; "0" or omitted for the empty partition.
    #[arg(long, default_value = "0")]
    inner: String,
    #[arg(long)]
    n: usize,
}

impl ShapeArgs {
    fn shape(&self) -> Result<SkewShape> {
        let shape = SkewShape::new(parse_partition(&self.outer)?, parse_partition(&self.inner)?)?;
        shape.check_rows(self.n)?;
        Ok(shape)
    }
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, default_value_t = 1)]
    m: u64,
    /// Largest number of tableaux brute force may visit.
    #[arg(long, default_value_t = EnumerationLimits::default().max_count)]
    limit: u64,
    /// Largest shape size for which brute force runs.
    #[arg(long, default_value_t = 20)]
    max_cells: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumClass {
    Lht,
    Ssct,
    Ct,
    Syt,
    St,
    ExtendedLht,
    MarkedSsct,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(value_enum)]
    class: EnumClass,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Multiplier m for `lht`.
    #[arg(long, default_value_t = 1)]
    m: u64,
    /// Finite marks 0..p−1 (plus ∞) for the marked classes.
    #[arg(long, default_value_t = 2)]
    marks: u64,
    /// Maximum number of tableaux printed; the total is always reported.
    #[arg(long, default_value_t = 20)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Main,
    JacobiTrudi,
    Probability,
    SchurShift,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    /// Largest |λ| in the sweep.
    #[arg(long, default_value_t = 3)]
    pub max_size: usize,
    /// Largest n in the sweep; defaults to max(max-size, 1).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest m swept by `schur-shift`.
    #[arg(long, default_value_t = 2)]
    pub m: u64,
    /// Number of x variables kept.
    #[arg(long, default_value_t = 1)]
    pub trunc_x: usize,
    /// Number of y variables kept; all by default.
    #[arg(long)]
    pub trunc_y: Option<usize>,
    /// Random integer evaluations per case for `main`.
    #[arg(long, default_value_t = 0)]
    pub spot_checks: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Vsort,
    Msort,
}

#[derive(Args, Debug)]
struct SortArgs {
    #[arg(value_enum)]
    direction: Direction,
    /// Marked tableau JSON; "-" reads standard input.
    file: PathBuf,
    #[arg(long)]
    n: usize,
    /// Print every slide to standard error.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PathKind {
    /// A lecture hall tableau.
    Lht,
    /// A semistandard content tableau.
    Ssct,
    /// A pair {"l": LHT, "s": SSCT} meeting at an intermediate shape.
    Pair,
}

#[derive(Args, Debug)]
struct PathsArgs {
    #[arg(value_enum)]
    kind: PathKind,
    /// Tableau JSON; "-" reads standard input.
    file: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expansion {
    /// Lecture hall generating polynomial in x_0..x_{p−1}.
    L,
    /// Content tableau generating polynomial in y.
    S,
    /// s_λ(m + y) in the Schur basis.
    SchurShift,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(value_enum)]
    what: Expansion,
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, default_value_t = 1)]
    m: u64,
    #[arg(long, default_value_t = 1)]
    trunc_x: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    Mismatch,
}

fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad part {p:?} in {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        bail!("--format dot only applies to `paths`");
    }
    Ok(())
}

/// Right-pads the first column of `rows` so values line up.
fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
    out
}

fn out_raw(s: &str) {
    use std::io::Write as _;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn cmd_count(args: &CountArgs) -> Result<Status> {
    no_dot(args.format)?;
    let shape = args.shape.shape()?;
    let limits = EnumerationLimits {
        max_cells: args.max_cells,
        max_count: args.limit,
        ..EnumerationLimits::default()
    };
    let report = count_report(&shape, args.shape.n, args.m, limits)?;
    match args.format {
        Format::Json => print_json(&report.to_json()),
        _ => {
            let mut rows = vec![
                ("shape".to_string(), shape.to_string()),
                ("n".to_string(), args.shape.n.to_string()),
                ("m".to_string(), args.m.to_string()),
            ];
            rows.extend(report.counts.iter().map(|(k, v)| (k.to_string(), v.to_string())));
            if !report.skipped.is_empty() {
                rows.push(("skipped".into(), report.skipped.join(", ")));
            }
            rows.push(("agreement".into(), if report.agreement { "yes" } else { "no" }.into()));
            out_raw(&aligned(&rows));
        }
    }
    Ok(if report.agreement { Status::Ok } else { Status::Mismatch })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Status> {
    no_dot(args.format)?;
    let shape = args.shape.shape()?;
    let n = args.shape.n;
    let listed: Vec<(Value, String)> = match args.class {
        EnumClass::Lht => plain(enumerate_lht(&shape, n, args.m)?),
        EnumClass::Ssct => plain(enumerate_ssct(&shape, n)?),
        EnumClass::Ct => plain(enumerate_ct(&shape, n)?),
        EnumClass::Syt => plain(enumerate_syt(&shape)),
        EnumClass::St => plain(enumerate_st(&shape)),
        EnumClass::ExtendedLht => marked(enumerate_extended_lht(&shape, n, args.marks)?),
        EnumClass::MarkedSsct => marked(enumerate_marked_ssct(&shape, n, args.marks)?),
    };
    let total = listed.len();
    let shown: Vec<_> = listed.into_iter().take(args.limit).collect();
    let class = EnumClass::to_possible_value(&args.class).expect("no skipped variants").get_name().to_string();
    match args.format {
        Format::Json => print_json(&json!({
            "class": class,
            "shape": shape,
            "n": n,
            "total": total,
            "shown": shown.len(),
            "tableaux": shown.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>(),
        })),
        _ => {
            out!("{class} {shape} n={n}: {total} tableaux, showing {}", shown.len());
            for (_, t) in &shown {
                out!("{t}");
            }
        }
    }
    Ok(Status::Ok)
}

fn plain(ts: Vec<Tableau>) -> Vec<(Value, String)> {
    ts.iter().map(|t| (serde_json::to_value(t).expect("tableau serializes"), t.to_string())).collect()
}

fn marked(ts: Vec<MarkedTableau>) -> Vec<(Value, String)> {
    ts.iter().map(|t| (serde_json::to_value(t).expect("tableau serializes"), t.to_string())).collect()
}

fn cmd_sort(args: &SortArgs) -> Result<Status> {
    no_dot(args.format)?;
    let t: MarkedTableau = serde_json::from_value(read_json(&args.file)?).context("expected a marked tableau")?;
    let class = match args.direction {
        Direction::Vsort => TableauClass::ExtendedLht,
        Direction::Msort => TableauClass::MarkedSsct,
    };
    if let Some(v) = validate_marked(&t, class, args.n)?.violation() {
        bail!("input is not a valid {class}: {v}");
    }
    let opts = SortOptions {
        trace: args.trace,
        ..SortOptions::default()
    };
    let run = match args.direction {
        Direction::Vsort => vsort_with(&t, args.n, opts)?,
        Direction::Msort => msort_with(&t, args.n, opts)?,
    };
    for m in &run.moves {
        eprintln!("{m}");
    }
    match args.format {
        Format::Json => out!("{}", serde_json::to_string(&run.tableau)?),
        _ => out!("{}", run.tableau),
    }
    Ok(Status::Ok)
}

fn require(t: &Tableau, class: TableauClass, n: usize) -> Result<()> {
    if let Some(v) = validate(t, class, n)?.violation() {
        bail!("input is not a valid {class}: {v}");
    }
    Ok(())
}

fn cmd_paths(args: &PathsArgs) -> Result<Status> {
    let format = match args.format {
        Format::Json => ExportFormat::Json,
        Format::Text | Format::Dot => ExportFormat::Dot,
    };
    let input = read_json(&args.file)?;
    let n = args.n;
    let out = match args.kind {
        PathKind::Lht => {
            let t: Tableau = serde_json::from_value(input).context("expected a tableau")?;
            require(&t, TableauClass::Lht, n)?;
            export_paths(&lht_to_paths(&t, n)?, format)?
        }
        PathKind::Ssct => {
            let t: Tableau = serde_json::from_value(input).context("expected a tableau")?;
            require(&t, TableauClass::Ssct, n)?;
            export_content_paths(&ssct_to_content_paths(&t, n)?, format)?
        }
        PathKind::Pair => {
            let l: Tableau = serde_json::from_value(input["l"].clone()).context("expected field \"l\"")?;
            let s: Tableau = serde_json::from_value(input["s"].clone()).context("expected field \"s\"")?;
            require(&l, TableauClass::Lht, n)?;
            require(&s, TableauClass::Ssct, n)?;
            export_omega_paths(&pair_to_omega_paths(&l, &s, n)?, format)?
        }
    };
    out!("{}", out.trim_end());
    Ok(Status::Ok)
}

fn cmd_expand(args: &ExpandArgs) -> Result<Status> {
    no_dot(args.format)?;
    let shape = args.shape.shape()?;
    let n = args.shape.n;
    let poly = match args.what {
        Expansion::L => l_poly(&shape, n, args.trunc_x)?,
        Expansion::S => s_poly(&shape, n)?,
        Expansion::SchurShift => {
            if !shape.inner().is_empty() {
                bail!("schur-shift takes a straight shape; drop --inner");
            }
            let exp = schur_expand_shifted(shape.outer(), n, args.m)?;
            match args.format {
                Format::Json => print_json(&json!({
                    "lambda": shape.outer(),
                    "n": n,
                    "m": args.m,
                    "coefficients": exp.coefficients.iter()
                        .map(|(mu, c)| json!({"mu": mu, "coeff": c.to_string()}))
                        .collect::<Vec<_>>(),
                })),
                _ => {
                    let rows: Vec<_> = exp.coefficients.iter().map(|(mu, c)| (mu.to_string(), c.to_string())).collect();
                    out_raw(&aligned(&rows));
                }
            }
            return Ok(Status::Ok);
        }
    };
    match args.format {
        Format::Json => print_json(&json!({
            "shape": shape,
            "n": n,
            "p": matches!(args.what, Expansion::L).then_some(args.trunc_x),
            "terms": poly.to_json(),
        })),
        _ => out!("{poly}"),
    }
    Ok(Status::Ok)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("LHK_THREADS") {
        let k: usize = v.trim().parse().map_err(|_| anyhow!("LHK_THREADS must be a positive integer, got {v:?}"))?;
        if k == 0 {
            bail!("LHK_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Status> {
    configure_threads()?;
    match &cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Verify(a) => verify::cmd_verify(a),
        Command::Sort(a) => cmd_sort(a),
        Command::Paths(a) => cmd_paths(a),
        Command::Expand(a) => cmd_expand(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
