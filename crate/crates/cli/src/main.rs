//! `apdenom` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal theorem violation.

use std::io::{self, Write};
use std::process::ExitCode;

use apdenom::bench::{run_bench, BenchRecord};
use apdenom::powersum::power_sum_naive;
use apdenom::seq::{format_terms, terms};
use apdenom::verify::{self, SweepConfig, TheoremId};
use apdenom::{
    is_integral, power_sum_denominator, power_sum_poly, BernoulliCache, Error, ProgressionSpec,
    Rational, SeqFormat, SequenceId,
};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "apdenom", version, about = "Denominators of power sums and Bernoulli polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit D, DD, DB, DDQ or DBQ over an index range.
    Seq {
        /// Sequence id: D, DD, DB, DDQ, DBQ
        id: String,
        /// First index (or use --from)
        from_pos: Option<u64>,
        /// Last index (or use --to)
        to_pos: Option<u64>,
        /// csv or bfile (or use --format)
        format_pos: Option<String>,
        #[arg(long = "from")]
        from: Option<u64>,
        #[arg(long = "to")]
        to: Option<u64>,
        #[arg(long = "format")]
        format: Option<String>,
    },
    /// Print SP_{m,r}^n(x), its denominator and integrality verdict.
    Powersum {
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        r: BigInt,
        #[arg(long)]
        n: u64,
        /// Also evaluate at x and cross-check against direct summation.
        #[arg(long)]
        x: Option<u64>,
    },
    /// Run a theorem sweep and report failures.
    Verify {
        /// T1-parity, T2-denominator, T3-integrality, C2-relations, T4-quotients,
        /// T5-quotients, L1-congruence, AM-integrality, oracle, evaluation
        theorem: String,
        #[arg(long)]
        max: Option<u64>,
        #[arg(long = "m-max")]
        m_max: Option<u64>,
        #[arg(long = "r-max")]
        r_max: Option<u64>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Time closed-form formulas against direct computation (D, DD, DB).
    Bench {
        id: String,
        /// Range as FROM..TO (or use --from/--to)
        range: Option<String>,
        #[arg(long = "from")]
        from: Option<u64>,
        #[arg(long = "to")]
        to: Option<u64>,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}

enum Failure {
    Usage(String),
    Verify,
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Seq {
            id,
            from_pos,
            to_pos,
            format_pos,
            from,
            to,
            format,
        } => cmd_seq(&mut out, &id, from.or(from_pos), to.or(to_pos), format.or(format_pos)),
        Command::Powersum { m, r, n, x } => cmd_powersum(&mut out, m, r, n, x),
        Command::Verify {
            theorem,
            max,
            m_max,
            r_max,
            jobs,
        } => cmd_verify(&mut out, &theorem, max, m_max, r_max, jobs),
        Command::Bench {
            id,
            range,
            from,
            to,
            reps,
        } => cmd_bench(&mut out, &id, range, from, to, reps),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn cmd_seq(
    out: &mut impl Write,
    id: &str,
    from: Option<u64>,
    to: Option<u64>,
    format: Option<String>,
) -> Result<(), Failure> {
    let id: SequenceId = id.parse()?;
    let from = from.ok_or_else(|| Failure::Usage("missing --from".into()))?;
    let to = to.ok_or_else(|| Failure::Usage("missing --to".into()))?;
    let format: SeqFormat = format.as_deref().unwrap_or("bfile").parse()?;
    let t = terms(id, from, to)?;
    if !t.skipped.is_empty() {
        eprintln!(
            "note: {id} is undefined at {} index(es) in {from}..={to}; skipped",
            t.skipped.len()
        );
    }
    out.write_all(format_terms(&t.terms, format).as_bytes())?;
    Ok(())
}

fn cmd_powersum(
    out: &mut impl Write,
    m: BigInt,
    r: BigInt,
    n: u64,
    x: Option<u64>,
) -> Result<(), Failure> {
    if n == 0 {
        // SP^0(x) = x for every progression
        if m < BigInt::from(1) || r < BigInt::from(0) {
            return Err(Failure::Usage("need m >= 1 and r >= 0".into()));
        }
        writeln!(out, "SP(m={m}, r={r}, n=0)")?;
        writeln!(out, "polynomial: x")?;
        writeln!(out, "coefficients: 1/1, 0/1")?;
        writeln!(out, "denominator: 1")?;
        writeln!(out, "integral: yes")?;
        if let Some(x) = x {
            writeln!(out, "value at x={x}: {x} (naive {x}, match: yes)")?;
        }
        return Ok(());
    }
    let spec = ProgressionSpec::new(m, r, n)?;
    let mut cache = BernoulliCache::new();
    let poly = power_sum_poly(&mut cache, &spec);
    let denom = power_sum_denominator(&spec)?;
    if denom != poly.denominator() {
        return Err(Failure::Violation(format!(
            "closed-form denominator {denom} differs from polynomial denominator {}",
            poly.denominator()
        )));
    }
    let integral = is_integral(&spec)?;
    let mut coeffs = poly.coefficient_strings();
    coeffs.reverse();
    writeln!(out, "{spec}")?;
    writeln!(out, "polynomial: {poly}")?;
    if denom != BigInt::from(1) {
        let scaled = poly.scale(&Rational::from_integer(denom.clone()));
        writeln!(out, "          = ({scaled})/{denom}")?;
    }
    writeln!(out, "coefficients (x^{}..x^0): {}", n + 1, coeffs.join(", "))?;
    writeln!(out, "denominator: {denom}")?;
    writeln!(out, "integral: {}", if integral { "yes" } else { "no" })?;
    if let Some(x) = x {
        let value = poly.eval_integer(&BigInt::from(x));
        let naive = power_sum_naive(&spec, x);
        let matches = value == Rational::from_integer(naive.clone());
        writeln!(
            out,
            "value at x={x}: {value} (naive {naive}, match: {})",
            if matches { "yes" } else { "NO" }
        )?;
        if !matches {
            return Err(Failure::Violation(format!(
                "polynomial value {value} differs from direct sum {naive} at x={x}"
            )));
        }
    }
    Ok(())
}

fn cmd_verify(
    out: &mut impl Write,
    theorem: &str,
    max: Option<u64>,
    m_max: Option<u64>,
    r_max: Option<u64>,
    jobs: Option<usize>,
) -> Result<(), Failure> {
    let theorem: TheoremId = theorem.parse()?;
    let defaults = theorem.default_config();
    let config = SweepConfig {
        max_n: max.unwrap_or(defaults.max_n),
        m_max: m_max.unwrap_or(defaults.m_max),
        r_max: r_max.unwrap_or(defaults.r_max),
        jobs,
    };
    let report = verify::run(theorem, &config)?;
    write!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("range must look like FROM..TO, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn cmd_bench(
    out: &mut impl Write,
    id: &str,
    range: Option<String>,
    from: Option<u64>,
    to: Option<u64>,
    reps: u32,
) -> Result<(), Failure> {
    let id: SequenceId = id.parse()?;
    let (mut lo, mut hi) = match range {
        Some(r) => parse_range(&r)?,
        None => (1, 200),
    };
    lo = from.unwrap_or(lo);
    hi = to.unwrap_or(hi);
    let record = run_bench(id, lo, hi, reps)?;
    writeln!(out, "{}", BenchRecord::CSV_HEADER)?;
    writeln!(out, "{}", record.csv_row())?;
    Ok(())
}
