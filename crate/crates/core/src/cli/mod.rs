//! The `rsreenc` command-line tool.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 invalid input, 3 too few
//! distinct reliable positions to re-encode.

pub mod bench;
pub mod golden;
pub mod json;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error as ThisError;

use crate::decoder::{decode, decode_direct, DecodeOptions, DecodePath};
use crate::error::Error;
use crate::factorization::Validation;
use crate::galois::Field;
use crate::koetter::{n_constraints, solve_with, ConstraintSchedule, SolveOptions};
use crate::poly::reconstruct;
use crate::poly::text::parse_uni;
use crate::reencoding::{decode_interpolation_reduced, select_reencoding_set, ReducedOptions};
use crate::rs_codec::encode;

use bench::{example1_instance, random_instance, run_bench, EXAMPLE1_PROFILE, EXAMPLE1_RELIABLE_ERRORS};
use json::{CodeFile, ProblemFile, Render};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::TooManyErasures { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rsreenc", version, about = "Reed-Solomon list decoding with re-encoding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PathArg {
    Direct,
    Reduced,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScheduleArg {
    AOuter,
    BOuter,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProfileArg {
    Example1,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a message polynomial on the code support.
    Encode {
        /// Code description (JSON).
        #[arg(long)]
        code: PathBuf,
        /// Message polynomial, e.g. "a^6 + a^2*X".
        message: String,
        /// Print elements as integers.
        #[arg(long)]
        int: bool,
    },
    /// Decode an interpolation problem and print the report as JSON.
    Decode {
        /// Problem description (JSON).
        problem: PathBuf,
        #[arg(long, value_enum, default_value = "reduced")]
        path: PathArg,
        /// Error bound for the reduced factorization (overrides the file).
        #[arg(long)]
        tau: Option<usize>,
        /// Print the basis after every constraint to standard error.
        #[arg(long)]
        trace: bool,
        /// Also check that each reduced candidate reconstructs a factor.
        #[arg(long)]
        validate: bool,
        #[arg(long, value_enum, default_value = "a-outer")]
        schedule: ScheduleArg,
        /// Print elements as integers.
        #[arg(long)]
        int: bool,
    },
    /// Run both decoding paths and report operation counts.
    Bench {
        #[arg(long, value_enum, conflicts_with = "random")]
        profile: Option<ProfileArg>,
        /// Random instance: length, dimension and seed.
        #[arg(long, num_args = 3, value_names = ["N", "K", "SEED"])]
        random: Option<Vec<u64>>,
        /// Wrong symbols (random instances) or wrong re-encoding symbols (example1).
        #[arg(long)]
        errors: Option<usize>,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Emit JSON rows instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Check the worked GF(8) example end to end.
    Selftest,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Encode { code, message, int } => cmd_encode(&code, &message, int, out),
        Command::Decode { problem, path, tau, trace, validate, schedule, int } => {
            let path = match path {
                PathArg::Direct => DecodePath::Direct,
                PathArg::Reduced => DecodePath::Reduced,
            };
            let schedule = match schedule {
                ScheduleArg::AOuter => ConstraintSchedule::AOuter,
                ScheduleArg::BOuter => ConstraintSchedule::BOuter,
            };
            let validation = if validate { Validation::Reconstruct } else { Validation::RulesOnly };
            let opts = DecodeOptions { tau, validation, schedule, trace, check_invariants: None };
            cmd_decode(&problem, path, opts, int, out, err)
        }
        Command::Bench { profile, random, errors, repeat, seed, json } => {
            cmd_bench(profile.is_some() || random.is_none(), random, errors, repeat, seed, json, out)
        }
        Command::Selftest => return cmd_selftest(out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<stdout>"), source: e }
}

fn cmd_encode(code: &Path, message: &str, int: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let file: CodeFile = serde_json::from_str(&read(code)?).map_err(|e| Error::Parse(e.to_string()))?;
    let code = file.build()?;
    let gf = Field::new(code.field().clone());
    let f = parse_uni(code.field(), message)?;
    let c = encode(&gf, &code, &f)?;
    let words: Vec<String> =
        c.symbols.iter().map(|&s| if int { s.value().to_string() } else { code.field().display(s) }).collect();
    writeln!(out, "{}", words.join(" ")).map_err(io)
}

fn cmd_decode(
    problem: &Path,
    path: DecodePath,
    mut opts: DecodeOptions,
    int: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let file = ProblemFile::parse(&read(problem)?)?;
    let (code, problem) = file.build()?;
    opts.tau = opts.tau.or(file.tau);
    let gf = Field::new(code.field().clone());
    let report = decode(&gf, &problem, path, &opts)?;
    let spec = code.field();
    for row in &report.trace {
        writeln!(err, "{}", row.display(spec)).map_err(io)?;
    }
    let value = Render { spec, ints: int }.report(&report);
    let text = serde_json::to_string_pretty(&value).map_err(|e| Error::Invalid(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn cmd_bench(
    example1: bool,
    random: Option<Vec<u64>>,
    errors: Option<usize>,
    repeat: usize,
    seed: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let inst = match random {
        Some(v) if !example1 => random_instance(v[0] as usize, v[1] as usize, errors.unwrap_or(0), v[2])?,
        _ => example1_instance(seed, errors.unwrap_or(EXAMPLE1_RELIABLE_ERRORS))?,
    };
    let opts = DecodeOptions { check_invariants: Some(false), ..Default::default() };
    let rows = run_bench(&inst, repeat, &opts)?;
    if json {
        for row in &rows {
            let text = serde_json::to_string(&serde_json::to_value(row).map_err(|e| Error::Invalid(e.to_string()))?)
                .map_err(|e| Error::Invalid(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)?;
        }
        return Ok(());
    }
    writeln!(out, "{:<8} {:>11} {:>15} {:>15} {:>10} {:>7}", "path", "constraints", "mults", "interp_mults", "wall_ms", "decoded")
        .map_err(io)?;
    for r in &rows {
        let path = match r.path {
            DecodePath::Direct => "direct",
            DecodePath::Reduced => "reduced",
        };
        writeln!(
            out,
            "{:<8} {:>11} {:>15} {:>15} {:>10.1} {:>7}",
            path, r.constraints, r.multiplications, r.interpolation_multiplications, r.wall_time_ms, r.decoded
        )
        .map_err(io)?;
    }
    Ok(())
}

type Check = fn() -> Result<(), String>;

fn text_err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expect_eq(what: &str, got: String, want: String) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn check_rows(mismatches: Vec<String>) -> Result<(), String> {
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(mismatches.join("\n"))
    }
}

fn check_encode() -> Result<(), String> {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let c = encode(&gf, &golden::code(&spec), &golden::message(&spec, golden::MESSAGE)).map_err(text_err)?;
    let words: Vec<String> = c.symbols.iter().map(|&s| spec.display(s)).collect();
    expect_eq("codeword", words.join(" "), golden::CODEWORD.into())
}

fn check_original() -> Result<(), String> {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let opts = SolveOptions { schedule: ConstraintSchedule::BOuter, trace: true };
    let sol = solve_with(&gf, &golden::problem(&spec), &opts).map_err(text_err)?;
    check_rows(golden::compare_trace(&spec, &sol.trace, &golden::TABLE_ORIGINAL).map_err(text_err)?)?;
    let want = golden::canonical_poly(&spec, golden::INTERPOLANT).map_err(text_err)?;
    expect_eq("Q", crate::poly::text::format_bi(&spec, &sol.poly), want)
}

fn check_shifted() -> Result<(), String> {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let problem = golden::problem(&spec);
    let shifted = golden::shifted_problem(&gf, &problem).map_err(text_err)?;
    let sol = solve_with(&gf, &shifted, &SolveOptions { trace: true, ..Default::default() }).map_err(text_err)?;
    check_rows(golden::compare_trace(&spec, &sol.trace, &golden::TABLE_SHIFTED).map_err(text_err)?)?;
    let want = golden::canonical_poly(&spec, golden::SHIFTED_INTERPOLANT).map_err(text_err)?;
    expect_eq("shifted Q", crate::poly::text::format_bi(&spec, &sol.poly), want)
}

fn check_reduced() -> Result<(), String> {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let opts = ReducedOptions { solve: SolveOptions { trace: true, ..Default::default() }, check_invariants: true };
    let (sol, ctx) = decode_interpolation_reduced(&gf, &golden::problem(&spec), &opts).map_err(text_err)?;
    check_rows(golden::compare_trace(&spec, &sol.trace, &golden::TABLE_REDUCED).map_err(text_err)?)?;
    let want = golden::canonical_poly(&spec, golden::REDUCED_INTERPOLANT).map_err(text_err)?;
    expect_eq("H", crate::poly::text::format_bi(&spec, &sol.poly), want)?;
    let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).map_err(text_err)?;
    let want = golden::canonical_poly(&spec, golden::INTERPOLANT).map_err(text_err)?;
    expect_eq("reconstructed Q", crate::poly::text::format_bi(&spec, &q), want)
}

fn check_factorization() -> Result<(), String> {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let problem = golden::problem(&spec);
    let opts = DecodeOptions { tau: Some(4), ..Default::default() };
    let reduced = decode(&gf, &problem, DecodePath::Reduced, &opts).map_err(text_err)?;
    let direct = decode_direct(&gf, &problem, &opts).map_err(text_err)?;
    let fmt = |v: Vec<&crate::poly::UniPoly>| {
        let mut s: Vec<String> = v.into_iter().map(|f| crate::poly::text::format_uni(&spec, f)).collect();
        s.sort();
        s.join(" | ")
    };
    let mut want: Vec<String> = [golden::MESSAGE, golden::OTHER_MESSAGE]
        .iter()
        .map(|m| crate::poly::text::format_uni(&spec, &golden::message(&spec, m)))
        .collect();
    want.sort();
    expect_eq("reduced candidates", fmt(reduced.accepted()), want.join(" | "))?;
    expect_eq("direct candidates", fmt(direct.accepted()), want.join(" | "))?;
    let target = golden::message(&spec, golden::MESSAGE);
    let c = reduced.candidates.iter().find(|c| c.f.as_ref() == Some(&target)).ok_or("candidate missing")?;
    let syndrome: Vec<String> = c.syndrome.iter().map(|&g| spec.display(g)).collect();
    expect_eq("syndrome", syndrome.join(" "), golden::SYNDROME.join(" "))
}

fn check_counts() -> Result<(), String> {
    let full = n_constraints(EXAMPLE1_PROFILE.iter().flat_map(|&(m, c)| std::iter::repeat_n(m, c)));
    expect_eq("constraints", full.to_string(), "6912".into())?;
    let inst = example1_instance(1, EXAMPLE1_RELIABLE_ERRORS).map_err(text_err)?;
    let gf = Field::new(inst.code.field().clone());
    let r = select_reencoding_set(&gf, &inst.problem).map_err(text_err)?;
    let rest = crate::reencoding::remaining_points(&inst.problem, &r);
    expect_eq("reduced constraints", n_constraints(rest.iter().map(|p| p.mult)).to_string(), "290".into())
}

const CHECKS: [(&str, Check); 6] = [
    ("encode", check_encode),
    ("original-interpolation", check_original),
    ("shifted-interpolation", check_shifted),
    ("reduced-interpolation", check_reduced),
    ("factorization", check_factorization),
    ("constraint-counts", check_counts),
];

fn cmd_selftest(out: &mut dyn Write) -> i32 {
    let mut failed = 0;
    for (name, check) in CHECKS {
        let line = match check() {
            Ok(()) => format!("PASS {name}"),
            Err(e) => {
                failed += 1;
                format!("FAIL {name}: {e}")
            }
        };
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "{} of {} checks passed", CHECKS.len() - failed, CHECKS.len());
    if failed == 0 {
        0
    } else {
        1
    }
}
