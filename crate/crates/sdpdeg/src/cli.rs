//! Command-line front end. Thin orchestration only: parameter parsing, a
//! call into the engine, rendering, and the exit-code contract
//! (0 = success, 2 = bad parameters, 3 = the engine contradicted itself).

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::error::{Error, InternalError, ParamError};
use crate::localization::{delta_certified, rank_rows, ProblemTriple, SpecializationStrategy};
use crate::report::{self, DegreeReport, OutputFormat, TableReport, TableRow};
use crate::verify::{cross_check, verify_window, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "sdpdeg",
    version,
    about = "Exact algebraic degree of semidefinite programming",
    long_about = "Computes the algebraic degree delta(m, n, r) of semidefinite programming: \
the degree of the polynomials defining the coordinates of the optimal solution, for an \
n x n matrix variable, m generic linear constraints, and optimal rank r. All arithmetic \
is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute delta(m, n, r) for one parameter triple
    Degree(DegreeArgs),
    /// Tabulate delta over every valid (m, r) for one n
    Table(TableArgs),
    /// Sweep self-consistency checks over all triples up to a bound
    Verify(VerifyArgs),
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("'{s}' is not an integer"))
}

#[derive(Args)]
struct EvalArgs {
    /// Explicit comma-separated lambda values (n pairwise-distinct integers)
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = parse_bigint,
        allow_hyphen_values = true,
        conflicts_with_all = ["lambda_strategy", "seed"]
    )]
    lambda: Option<Vec<BigInt>>,
    /// How specializations of lambda are generated
    #[arg(long, value_enum, default_value_t = LambdaStrategy::Sequential)]
    lambda_strategy: LambdaStrategy,
    /// Seed for the random strategy
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of specializations that must agree on the value
    #[arg(long, default_value_t = 1)]
    checks: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum LambdaStrategy {
    /// lambda = (t, t+1, ..., t+n-1) for check t
    Sequential,
    /// distinct draws from [-10000, 10000], seeded
    Random,
}

impl EvalArgs {
    fn strategy(&self) -> SpecializationStrategy {
        if let Some(lambda) = &self.lambda {
            SpecializationStrategy::Explicit(lambda.clone())
        } else {
            match self.lambda_strategy {
                LambdaStrategy::Sequential => SpecializationStrategy::Sequential,
                LambdaStrategy::Random => SpecializationStrategy::Random { seed: self.seed },
            }
        }
    }
}

#[derive(Args)]
struct JobsArg {
    /// Worker threads for the fixed-point sum (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
}

impl JobsArg {
    fn configure(&self) {
        if let Some(jobs) = self.jobs {
            // The global pool can be set only once per process; a failed
            // second attempt keeps the existing pool, which is fine.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs as usize)
                .build_global();
        }
    }
}

#[derive(Args)]
struct DegreeArgs {
    /// Number of linear constraints
    #[arg(long)]
    m: u64,
    /// Size of the matrix variable
    #[arg(long)]
    n: u32,
    /// Rank of the optimal matrix
    #[arg(long)]
    r: u32,
    #[command(flatten)]
    eval: EvalArgs,
    /// Also recompute by Schubert calculus and demand agreement
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Args)]
struct TableArgs {
    /// Size of the matrix variable
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    eval: EvalArgs,
    /// Check every row against the Schubert oracle (slow beyond n ~ 7)
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check every valid triple with n up to this bound
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_n: u32,
    /// Bound for the Schubert-oracle comparison
    #[arg(long, default_value_t = 6)]
    oracle_max_n: u32,
    /// Seed for the random specializations
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[command(flatten)]
    jobs: JobsArg,
}

/// Parse arguments, run, print, and return the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Degree(args) => cmd_degree(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok((stdout, code)) => {
            print!("{stdout}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code() as i32
        }
    }
}

fn cmd_degree(args: DegreeArgs) -> Result<(String, i32), Error> {
    args.jobs.configure();
    let triple = ProblemTriple::new(args.m, args.n, args.r)?;
    let mut result = delta_certified(&triple, &args.eval.strategy(), args.eval.checks)?;
    if args.oracle {
        cross_check(&triple, &result.value)?;
        result.oracle_checked = true;
    }
    let report = DegreeReport::from_result(&result);
    Ok((report::render_degree(&report, args.format), 0))
}

fn cmd_table(args: TableArgs) -> Result<(String, i32), Error> {
    args.jobs.configure();
    if args.n == 0 {
        return Err(ParamError::MatrixSizeZero.into());
    }
    let specs = args
        .eval
        .strategy()
        .specializations(args.n, args.eval.checks)?;
    let mut rows = Vec::new();
    for r in 1..=args.n {
        let base = rank_rows(args.n, r, &specs[0])?;
        for spec in &specs[1..] {
            for ((t, a), (_, b)) in base.iter().zip(rank_rows(args.n, r, spec)?.iter()) {
                if a != b {
                    return Err(InternalError::SpecializationDisagreement {
                        m: t.m(),
                        n: t.n(),
                        r: t.r(),
                        lambda_a: specs[0].lambda().into(),
                        value_a: a.clone(),
                        lambda_b: spec.lambda().into(),
                        value_b: b.clone(),
                    }
                    .into());
                }
            }
        }
        for (t, v) in &base {
            if args.oracle {
                cross_check(t, v)?;
            }
            rows.push(TableRow::new(t, v));
        }
    }
    let table = TableReport { n: args.n, rows };
    Ok((report::render_table(&table, args.format), 0))
}

fn cmd_verify(args: VerifyArgs) -> Result<(String, i32), Error> {
    args.jobs.configure();
    let report = verify_window(&VerifyOptions {
        max_n: args.max_n,
        oracle_max_n: args.oracle_max_n,
        seed: args.seed,
        ..VerifyOptions::default()
    })?;
    let code = if report.passed() { 0 } else { 3 };
    Ok((report.to_string(), code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_declaration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bigint_values_parse() {
        assert_eq!(parse_bigint("-12").unwrap(), BigInt::from(-12));
        assert_eq!(
            parse_bigint("123456789012345678901234567890").unwrap(),
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
        assert!(parse_bigint("x").is_err());
    }
}
