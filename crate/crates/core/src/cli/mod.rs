//! Command-line surface: `verify`, `expand` and `coeff`.
//!
//! Exit codes: 0 when every check passes, 1 when any verification fails,
//! 2 on usage or configuration errors.

pub mod expr;
pub mod output;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::TruncatedSeries;
use crate::qcomb::bracket_inf;
use crate::verify::{run_checks, Check, Mutation, VerificationReport};

pub use expr::{parse_product_expr, render_spec, ExprError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Finite,
    Bilateral,
    Substitution,
    Quintuple,
    Relation,
    Qdixon,
    DixonLimit,
    DixonTermMatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutationArg {
    DropFactor,
    AlterExponent,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Self {
        match m {
            MutationArg::DropFactor => Mutation::DropFactor,
            MutationArg::AlterExponent => Mutation::AlterExponent,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Verify(VerifyTarget),
    Expand { expr: String },
    Coeff { expr: String, q_exp: i64, x_exp: i64 },
}

/// Fully parsed invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandConfig {
    pub command: Command,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<i64>,
    pub m_max: u32,
    pub n_max: u32,
    pub order: u32,
    pub trials: u32,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub timing: bool,
    pub mutation: Option<Mutation>,
}

#[derive(Parser, Debug)]
#[command(name = "quintuple", version, about = "Exact checks of quintuple product and q-Dixon identities")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run one family of identity checks.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        opts: Opts,
    },
    /// Expand a bracket product such as "[q,x,q/x;q]" to --order.
    Expand {
        expr: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print one coefficient of a bracket product.
    Coeff {
        expr: String,
        #[arg(long = "q", allow_hyphen_values = true)]
        q_exp: i64,
        #[arg(long = "x", allow_hyphen_values = true)]
        x_exp: i64,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Debug)]
struct Opts {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, default_value_t = 10)]
    m_max: u32,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    /// Truncation order T: products are exact modulo q^(T+1).
    #[arg(long, default_value_t = 30)]
    order: u32,
    #[arg(long, default_value_t = 50)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report elapsed times as 0 so output is reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Corrupt the identity on purpose (negative control).
    #[arg(long, value_enum)]
    mutate: Option<MutationArg>,
}

/// Parses `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<CommandConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (command, opts) = match cli.command {
        Cmd::Verify { target, opts } => (Command::Verify(target), opts),
        Cmd::Expand { expr, opts } => (Command::Expand { expr }, opts),
        Cmd::Coeff { expr, q_exp, x_exp, opts } => (Command::Coeff { expr, q_exp, x_exp }, opts),
    };
    Ok(CommandConfig {
        command,
        m: opts.m,
        n: opts.n,
        k: opts.k,
        m_max: opts.m_max,
        n_max: opts.n_max,
        order: opts.order,
        trials: opts.trials,
        seed: opts.seed,
        format: opts.format,
        out: opts.out,
        timing: !opts.no_timing,
        mutation: opts.mutate.map(Mutation::from),
    })
}

fn range_or(single: Option<u32>, max: u32) -> Vec<u32> {
    match single {
        Some(v) => vec![v],
        None => (0..=max).collect(),
    }
}

/// Expands the config into the list of checks, sorted by parameters.
pub fn plan_checks(config: &CommandConfig, target: VerifyTarget) -> Vec<Check> {
    let ms = range_or(config.m, config.m_max);
    let ns = range_or(config.n, config.n_max);
    let mut checks = Vec::new();
    match target {
        VerifyTarget::Finite => checks.extend(ms.iter().map(|&m| Check::FiniteQuintuple { m })),
        VerifyTarget::Bilateral => {
            for &m in &ms {
                checks.extend(ns.iter().map(|&n| Check::Bilateral { m, n }));
            }
        }
        VerifyTarget::Substitution => {
            for &m in &ms {
                for &n in &ns {
                    let (lo, hi) = (-i64::from(m), i64::from(n));
                    match config.k {
                        Some(k) if (lo..=hi).contains(&k) => checks.push(Check::Substitution { m, n, k }),
                        Some(_) => {}
                        None => checks.extend((lo..=hi).map(|k| Check::Substitution { m, n, k })),
                    }
                }
            }
        }
        VerifyTarget::Quintuple => checks.push(Check::Quintuple { order: config.order }),
        VerifyTarget::Relation => checks.push(Check::ProductRelation { order: config.order }),
        VerifyTarget::Qdixon => checks.extend(
            ms.iter().map(|&m| Check::QdixonSampled { m, trials: config.trials, seed: config.seed }),
        ),
        VerifyTarget::DixonLimit => checks.extend(ms.iter().map(|&m| Check::DixonLimit { m })),
        VerifyTarget::DixonTermMatch => {
            for &m in &ms {
                match config.k {
                    Some(k) if (0..=i64::from(m)).contains(&k) => checks.push(Check::DixonTermMatch { m, k: k as u32 }),
                    Some(_) => {}
                    None => checks.extend((0..=m).map(|k| Check::DixonTermMatch { m, k })),
                }
            }
        }
    }
    checks
}

fn usage(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn expand(expr: &str, order: u32) -> Result<TruncatedSeries, String> {
    let specs = parse_product_expr(expr).map_err(|e| e.to_string())?;
    let mut acc = TruncatedSeries::one(order);
    for spec in &specs {
        let s = bracket_inf(spec, order).map_err(|e| e.to_string())?;
        acc = acc.mul(&s).map_err(|e| e.to_string())?;
    }
    Ok(acc)
}

fn render_reports(reports: &[VerificationReport], config: &CommandConfig) -> Vec<String> {
    let mut lines: Vec<String> = match config.format {
        Format::Json => reports.iter().map(|r| output::report_json(r, config.timing)).collect(),
        _ => reports.iter().map(|r| output::report_text(r, config.timing)).collect(),
    };
    if config.format != Format::Json {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        lines.push(format!("{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed));
    }
    lines
}

/// Executes a parsed command, writing results to `out` (or `--out`) and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(config: &CommandConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (lines, code) = match &config.command {
        Command::Verify(target) => {
            let checks = plan_checks(config, *target);
            if checks.is_empty() {
                return usage(err, "the given parameters select no checks (is --k in range?)");
            }
            match run_checks(&checks, config.mutation) {
                Ok(reports) => {
                    let code = if reports.iter().all(|r| r.passed()) { EXIT_PASS } else { EXIT_FAIL };
                    (render_reports(&reports, config), code)
                }
                Err(e) => return usage(err, e),
            }
        }
        Command::Expand { expr } => {
            if config.mutation.is_some() {
                return usage(err, "--mutate applies to verify only");
            }
            match expand(expr, config.order) {
                Ok(series) => {
                    let lines = match config.format {
                        Format::Text => vec![series.to_string()],
                        Format::Json => output::coefficient_lines(series.poly(), true),
                        Format::Csv => output::coefficient_lines(series.poly(), false),
                    };
                    (lines, EXIT_PASS)
                }
                Err(e) => return usage(err, e),
            }
        }
        Command::Coeff { expr, q_exp, x_exp } => {
            if config.mutation.is_some() {
                return usage(err, "--mutate applies to verify only");
            }
            let order = u32::try_from((*q_exp).max(0)).unwrap_or(u32::MAX);
            match expand(expr, order) {
                Ok(series) => {
                    let c = series.coeff(*q_exp, *x_exp);
                    let line = match config.format {
                        Format::Text => output::rational_string(&c),
                        Format::Json => output::coeff_record_json(*q_exp, *x_exp, &c),
                        Format::Csv => {
                            format!("{}\n{}", output::CSV_HEADER, output::coeff_record_csv(*q_exp, *x_exp, &c))
                        }
                    };
                    (vec![line], EXIT_PASS)
                }
                Err(e) => return usage(err, e),
            }
        }
    };
    let mut text = lines.join("\n");
    text.push('\n');
    let written = match &config.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(text.as_bytes())),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        return usage(err, format!("cannot write output: {e}"));
    }
    code
}

/// Parses and runs; clap's help and version requests exit 0.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_cli(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_examples() {
        let c = parse_args(["quintuple", "verify", "finite", "--m-max", "25"]).unwrap();
        assert_eq!(c.command, Command::Verify(VerifyTarget::Finite));
        assert_eq!(c.m_max, 25);
        assert_eq!((c.n_max, c.order, c.trials, c.seed, c.format), (10, 30, 50, 0, Format::Text));

        let c = parse_args(["quintuple", "verify", "quintuple", "--order", "60", "--format", "json"]).unwrap();
        assert_eq!(c.command, Command::Verify(VerifyTarget::Quintuple));
        assert_eq!((c.order, c.format), (60, Format::Json));

        let c = parse_args(["quintuple", "coeff", "[q;q]", "--q", "5", "--x", "-1"]).unwrap();
        assert_eq!(c.command, Command::Coeff { expr: "[q;q]".into(), q_exp: 5, x_exp: -1 });
    }

    #[test]
    fn rejects_bad_argv() {
        let e = parse_args(["quintuple", "verify", "bogus"]).unwrap_err();
        assert!(e.use_stderr());
        assert!(parse_args(["quintuple", "verify", "finite", "--frobnicate"]).is_err());
        assert!(parse_args(["quintuple", "verify", "finite", "--order", "-3"]).is_err());
    }

    #[test]
    fn plans_grids() {
        let c = parse_args(["q", "verify", "substitution", "--m-max", "1", "--n-max", "1"]).unwrap();
        // (m, n) in {0,1}^2 with k in -m..=n: 1 + 2 + 2 + 3.
        assert_eq!(plan_checks(&c, VerifyTarget::Substitution).len(), 8);
        let c = parse_args(["q", "verify", "dixon-term-match", "--m-max", "3", "--k", "2"]).unwrap();
        assert_eq!(plan_checks(&c, VerifyTarget::DixonTermMatch).len(), 2);
    }

    #[test]
    fn expand_euler_product() {
        let c = parse_args(["q", "expand", "[q;q]", "--order", "7", "--format", "csv"]).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(&c, &mut out, &mut err), EXIT_PASS);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "q_exp,x_exp,coeff\n0,0,1/1\n1,0,-1/1\n2,0,-1/1\n5,0,1/1\n7,0,1/1\n"
        );
    }

    #[test]
    fn exit_codes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run_cli(["q", "verify", "finite", "--m-max", "3"], &mut out, &mut err), EXIT_PASS);
        assert_eq!(
            run_cli(["q", "verify", "finite", "--m", "2", "--mutate", "drop-factor"], &mut out, &mut err),
            EXIT_FAIL
        );
        assert_eq!(run_cli(["q", "verify", "bogus"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(
            run_cli(["q", "verify", "qdixon", "--m", "1", "--mutate", "drop-factor"], &mut out, &mut err),
            EXIT_USAGE
        );
        assert_eq!(run_cli(["q", "expand", "[x;q"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run_cli(["q", "expand", "[q^-1;q]"], &mut out, &mut err), EXIT_USAGE);
        assert_eq!(run_cli(["q", "verify", "dixon-term-match", "--m", "1", "--k", "5"], &mut out, &mut err), EXIT_USAGE);
    }
}
