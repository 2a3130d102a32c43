//! `fibsym`: exact command-line checks for generalized-Fibonacci and
//! Horadam summation identities.
//!
//! Five subcommands: `seq` prints sequence windows, `check` evaluates one
//! catalog entry at one parameter point, `sweep` grids an entry (or the
//! whole catalog) and writes a JSON report, `series` evaluates the
//! alternating reciprocal series with a certified error radius, and
//! `list` enumerates the catalog.
//!
//! Exit codes: 0 pass/ok, 1 usage error, 2 in-hypothesis failure,
//! 3 domain violation (hypothesis or vanishing denominator), 4 I/O error.
//! All reports are deterministic: rerunning a command reproduces its
//! output byte for byte.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fibsym::exactnum::{parse_rational, render_rational, BigRational};
use fibsym::identities::{eval_sides, sweep, IdentityId, IdentityParams, SweepGrid, SweepReport};
use fibsym::sequences::{fibonacci, gen_fib, horadam_w, lucas, HoradamParams, SeedPair};
use fibsym::series::{closed_form, evaluate, partial_sum, tail_bound, SeriesError, SeriesEstimate, SeriesSpec};
use fibsym::Sign;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "fibsym",
    version,
    about = "Exact checks for generalized-Fibonacci and Horadam summation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a window of an integer or Horadam sequence.
    Seq(SeqArgs),
    /// Evaluate one identity at one parameter point.
    Check(CheckArgs),
    /// Evaluate one identity (or `all`) over a parameter grid and write a
    /// JSON report.
    Sweep(SweepArgs),
    /// Evaluate the alternating reciprocal series exactly, with a
    /// certified tail radius.
    Series(SeriesArgs),
    /// List the identity catalog: slug, statement, hypothesis.
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    Fibonacci,
    Lucas,
    General,
    Horadam,
}

#[derive(Args)]
struct SeqArgs {
    /// Which sequence to print.
    #[arg(long, value_enum)]
    kind: SeqKind,
    /// Seeds `g0,g1` (required for `--kind general`).
    #[arg(long, value_parser = parse_seeds, allow_hyphen_values = true)]
    seeds: Option<SeedPair>,
    /// Horadam parameters `a,b,P,Q` (required for `--kind horadam`).
    #[arg(long, value_parser = parse_horadam, allow_hyphen_values = true)]
    params: Option<HoradamParams>,
    /// First index, inclusive. Negative indices are allowed.
    #[arg(long, allow_hyphen_values = true)]
    from: i64,
    /// Last index, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    to: i64,
}

#[derive(Args)]
struct CheckArgs {
    /// Catalog slug; see `fibsym list`.
    identity: String,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    /// Generalized-Fibonacci seeds `g0,g1` (default `0,1`).
    #[arg(long, value_parser = parse_seeds, allow_hyphen_values = true)]
    seeds: Option<SeedPair>,
    /// Horadam parameters `a,b,P,Q` (default `0,1,1,-1`).
    #[arg(long, value_parser = parse_horadam, allow_hyphen_values = true)]
    horadam: Option<HoradamParams>,
    /// Sign choice `plus` or `minus` for entries with a free sign.
    #[arg(long, value_parser = parse_sign)]
    sign: Option<Sign>,
}

#[derive(Args)]
struct SweepArgs {
    /// Catalog slug, or `all` for the whole catalog.
    identity: String,
    /// Axis values as `lo..hi` (inclusive), a comma list, or one integer.
    /// Repeatable; occurrences are concatenated.
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    p: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    q: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    n: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    t: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    k: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    a: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    b: Vec<Vec<i64>>,
    #[arg(long, value_parser = parse_axis, action = ArgAction::Append, allow_hyphen_values = true)]
    c: Vec<Vec<i64>>,
    /// Seed pair `g0,g1`; repeatable.
    #[arg(long, value_parser = parse_seeds, action = ArgAction::Append, allow_hyphen_values = true)]
    seeds: Vec<SeedPair>,
    /// Horadam parameters `a,b,P,Q`; repeatable.
    #[arg(long, value_parser = parse_horadam, action = ArgAction::Append, allow_hyphen_values = true)]
    horadam: Vec<HoradamParams>,
    /// Sign choice `plus` or `minus`; repeatable (default: both).
    #[arg(long, value_parser = parse_sign, action = ArgAction::Append)]
    sign: Vec<Sign>,
    /// Path the JSON report is written to.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SeriesArgs {
    /// Index stride; must be at least 1.
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    /// Offset multiplier; must be at least 1.
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    /// Target radius: sum terms until the certified tail is at most this
    /// (exact rational, e.g. `1/100000` or `1e-12`).
    #[arg(long, value_parser = parse_radius, allow_hyphen_values = true, conflicts_with = "n_terms")]
    radius: Option<BigRational>,
    /// Fixed number of terms to sum (default 40 when no --radius).
    #[arg(long)]
    n_terms: Option<u64>,
    /// Decimal digits to render the closed form to; 0 keeps exact forms
    /// only.
    #[arg(long, default_value_t = 0)]
    decimals: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Check(args) => cmd_check(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Series(args) => cmd_series(args),
        Command::List => cmd_list(),
    };
    ExitCode::from(code)
}

fn usage(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Writes one line to stdout; when the consumer has closed the pipe
/// (`fibsym list | head`), stops quietly instead of panicking.
fn emit(line: std::fmt::Arguments) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_fmt(line).is_err() || out.write_all(b"\n").is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

// ---------------------------------------------------------------------
// Flag grammars.
// ---------------------------------------------------------------------

fn parse_seeds(input: &str) -> Result<SeedPair, String> {
    let (g0, g1) = input
        .split_once(',')
        .ok_or_else(|| format!("expected `g0,g1`, got {input:?}"))?;
    let g0: i64 = g0
        .trim()
        .parse()
        .map_err(|_| format!("seed g0 {:?} is not an integer", g0.trim()))?;
    let g1: i64 = g1
        .trim()
        .parse()
        .map_err(|_| format!("seed g1 {:?} is not an integer", g1.trim()))?;
    Ok(SeedPair::new(g0, g1))
}

fn parse_horadam(input: &str) -> Result<HoradamParams, String> {
    let parts: Vec<&str> = input.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected `a,b,P,Q`, got {input:?}"));
    }
    let mut values = [0i64; 4];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("{:?} is not an integer", part.trim()))?;
    }
    HoradamParams::new(values[0], values[1], values[2], values[3]).map_err(|e| e.to_string())
}

fn parse_sign(input: &str) -> Result<Sign, String> {
    match input {
        "plus" | "+" => Ok(Sign::Plus),
        "minus" | "-" => Ok(Sign::Minus),
        other => Err(format!("expected `plus` or `minus`, got {other:?}")),
    }
}

/// `lo..hi` (inclusive on both ends, empty when lo > hi), a comma list,
/// or a single integer.
fn parse_axis(input: &str) -> Result<Vec<i64>, String> {
    if let Some((lo, hi)) = input.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("range start {:?} is not an integer", lo.trim()))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("range end {:?} is not an integer", hi.trim()))?;
        if (hi as i128) - (lo as i128) > 1_000_000 {
            return Err(format!("range {input:?} spans more than a million values"));
        }
        return Ok((lo..=hi).collect());
    }
    input
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse()
                .map_err(|_| format!("{:?} is not an integer", token.trim()))
        })
        .collect()
}

fn parse_radius(input: &str) -> Result<BigRational, String> {
    parse_rational(input).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------

fn cmd_seq(args: SeqArgs) -> u8 {
    if args.from > args.to {
        return usage(format!("--from {} exceeds --to {}", args.from, args.to));
    }
    if (args.to as i128) - (args.from as i128) > 1_000_000 {
        return usage("window spans more than a million indices");
    }
    let window = args.from..=args.to;
    let rendered: Vec<String> = match args.kind {
        SeqKind::Fibonacci => window.map(|i| fibonacci(i).to_string()).collect(),
        SeqKind::Lucas => window.map(|i| lucas(i).to_string()).collect(),
        SeqKind::General => {
            let Some(seeds) = args.seeds else {
                return usage("--kind general needs --seeds g0,g1");
            };
            window.map(|i| gen_fib(seeds, i).to_string()).collect()
        }
        SeqKind::Horadam => {
            let Some(params) = args.params else {
                return usage("--kind horadam needs --params a,b,P,Q");
            };
            window
                .map(|i| render_rational(&horadam_w(&params, i)))
                .collect()
        }
    };
    outln!("{}", rendered.join(","));
    0
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

fn cmd_check(args: CheckArgs) -> u8 {
    let Some(id) = IdentityId::from_slug(&args.identity) else {
        return usage(format!(
            "unknown identity {:?}; run `fibsym list` for the catalog",
            args.identity
        ));
    };
    let mut pr = IdentityParams::default();
    macro_rules! override_scalar {
        ($($field:ident),*) => {
            $(if let Some(value) = args.$field {
                pr.$field = value;
            })*
        };
    }
    override_scalar!(p, q, n, t, k, a, b, c, seeds, horadam, sign);
    let result = eval_sides(id, &pr);
    if let (Some(lhs), Some(rhs)) = (&result.lhs, &result.rhs) {
        outln!("lhs = {}", lhs.render());
        outln!("rhs = {}", rhs.render());
    }
    if result.passed() {
        outln!("PASS");
        0
    } else if result.domain_ok {
        outln!("FAIL");
        EXIT_MISMATCH
    } else {
        let reasons: Vec<String> = result
            .diagnostics
            .iter()
            .map(|d| d.reason.clone())
            .collect();
        outln!("DOMAIN-SKIP ({})", reasons.join("; "));
        EXIT_DOMAIN
    }
}

// ---------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------

/// Echo of the effective grid, every value rendered as a string.
#[derive(Serialize)]
struct GridEcho {
    seeds: Vec<String>,
    horadam: Vec<String>,
    signs: Vec<String>,
    p: Vec<String>,
    q: Vec<String>,
    n: Vec<String>,
    t: Vec<String>,
    k: Vec<String>,
    a: Vec<String>,
    b: Vec<String>,
    c: Vec<String>,
}

impl GridEcho {
    fn from_grid(grid: &SweepGrid) -> GridEcho {
        let ints = |axis: &[i64]| axis.iter().map(|v| v.to_string()).collect();
        GridEcho {
            seeds: grid.seeds.iter().map(|s| s.to_string()).collect(),
            horadam: grid.horadam.iter().map(|h| h.to_string()).collect(),
            signs: grid.signs.iter().map(|s| s.label().to_string()).collect(),
            p: ints(&grid.p),
            q: ints(&grid.q),
            n: ints(&grid.n),
            t: ints(&grid.t),
            k: ints(&grid.k),
            a: ints(&grid.a),
            b: ints(&grid.b),
            c: ints(&grid.c),
        }
    }
}

/// The on-disk report: schema tag, command echo, grid echo, one entry
/// report per swept identity. Every mathematical number is a string.
#[derive(Serialize)]
struct SweepDocument<'a> {
    schema: u32,
    command: &'static str,
    identity: &'a str,
    grid: GridEcho,
    reports: &'a [SweepReport],
}

fn build_grid(args: &SweepArgs) -> SweepGrid {
    let mut grid = SweepGrid::default();
    fn override_axis(destination: &mut Vec<i64>, occurrences: &[Vec<i64>]) {
        if !occurrences.is_empty() {
            *destination = occurrences.concat();
        }
    }
    override_axis(&mut grid.p, &args.p);
    override_axis(&mut grid.q, &args.q);
    override_axis(&mut grid.n, &args.n);
    override_axis(&mut grid.t, &args.t);
    override_axis(&mut grid.k, &args.k);
    override_axis(&mut grid.a, &args.a);
    override_axis(&mut grid.b, &args.b);
    override_axis(&mut grid.c, &args.c);
    if !args.seeds.is_empty() {
        grid.seeds = args.seeds.clone();
    }
    if !args.horadam.is_empty() {
        grid.horadam = args.horadam.clone();
    }
    if !args.sign.is_empty() {
        grid.signs = args.sign.clone();
    }
    grid
}

fn cmd_sweep(args: SweepArgs) -> u8 {
    let ids: Vec<IdentityId> = if args.identity == "all" {
        IdentityId::ALL.to_vec()
    } else {
        match IdentityId::from_slug(&args.identity) {
            Some(id) => vec![id],
            None => {
                return usage(format!(
                    "unknown identity {:?}; run `fibsym list`, or use `all`",
                    args.identity
                ))
            }
        }
    };
    let grid = build_grid(&args);
    let reports: Vec<SweepReport> = ids.iter().map(|id| sweep(*id, &grid)).collect();
    let document = SweepDocument {
        schema: 1,
        command: "sweep",
        identity: &args.identity,
        grid: GridEcho::from_grid(&grid),
        reports: &reports,
    };
    let mut json = serde_json::to_string_pretty(&document).expect("reports serialize");
    json.push('\n');
    if let Err(e) = fs::write(&args.out, json) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return EXIT_IO;
    }
    let mut code = 0u8;
    for report in &reports {
        outln!(
            "{}: checked {}, passed {}, failed {}, skipped {} (hypothesis) + {} (denominator)",
            report.identity,
            report.checked,
            report.passed,
            report.failed,
            report.skipped_hypothesis,
            report.skipped_denominator,
        );
        if report.failed > 0 {
            code = EXIT_MISMATCH;
        }
    }
    outln!("report written to {}", args.out.display());
    code
}

// ---------------------------------------------------------------------
// series
// ---------------------------------------------------------------------

fn cmd_series(args: SeriesArgs) -> u8 {
    let spec = match SeriesSpec::new(args.p, args.q) {
        Ok(spec) => spec,
        Err(e) => return usage(e),
    };
    let estimate = if let Some(radius) = args.radius {
        match evaluate(spec, &radius) {
            Ok(estimate) => estimate,
            Err(e @ (SeriesError::InvalidSpec { .. } | SeriesError::NonPositiveRadius)) => {
                return usage(e)
            }
            Err(e @ SeriesError::Containment { .. }) => {
                eprintln!("error: {e}");
                return EXIT_MISMATCH;
            }
        }
    } else {
        let n_terms = args.n_terms.unwrap_or(40);
        if n_terms == 0 {
            return usage("--n-terms must be at least 1");
        }
        SeriesEstimate {
            partial: partial_sum(spec, n_terms),
            n_terms,
            tail_radius: tail_bound(spec, n_terms),
            closed: closed_form(spec),
        }
    };
    outln!("closed = {}", estimate.closed);
    outln!(
        "partial = {} (terms = {})",
        render_rational(&estimate.partial),
        estimate.n_terms
    );
    outln!("radius = {}", render_rational(&estimate.tail_radius));
    if args.decimals > 0 {
        outln!("decimal = {}", estimate.closed.decimal_string(args.decimals));
    }
    0
}

// ---------------------------------------------------------------------
// list
// ---------------------------------------------------------------------

fn cmd_list() -> u8 {
    for id in IdentityId::ALL {
        outln!("{}\t{}\t{}", id.slug(), id.statement(), id.hypothesis());
    }
    0
}
