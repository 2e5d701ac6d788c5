//! `persemi` — numerical semigroups and the n-permutation property on
//! the command line.
//!
//! Machine-readable output (`--format json|csv`) is byte-stable for a
//! given input and version; timing and progress diagnostics go to
//! stderr. Exit codes: 0 success (or checked-true), 1 checked-false,
//! 2 usage or input error, 3 internal invariant violation.

mod output;
mod workers;

use std::panic::AssertUnwindSafe;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use persemi_core::families::{match_family, FamilyId, StructureCheck, ALL_H};
use persemi_core::permblock::is_n_permutation;
use persemi_core::search::{classify_enumeration, EnumerationQuery};
use persemi_core::{GeneratorSet, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "persemi",
    version,
    about = "Numerical semigroups and the n-permutation property"
)]
struct Cli {
    /// Output format for stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether ⟨generators⟩ is an n-permutation semigroup.
    Check {
        /// Comma-separated generators, e.g. 9,14,15,16
        generators: String,
        /// Block size n.
        #[arg(long)]
        n: i64,
    },
    /// Multiplicity, Frobenius number, Apéry set, and first 30 elements.
    Info {
        /// Comma-separated generators.
        generators: String,
    },
    /// Enumerate all n-permutation semigroups with multiplicity in
    /// [min, max/n]; max bounds the largest of the first n elements.
    Enumerate {
        #[arg(long)]
        n: i64,
        /// Smallest multiplicity to include.
        #[arg(long)]
        min: i64,
        /// Bound on the largest first-block element.
        #[arg(long)]
        max: i64,
        /// Worker threads (default: PERSEMI_WORKERS or 1). Affects only
        /// the wall time, never the output.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// The built-in families of 3-permutation semigroups (H1..H16) and
    /// the generic n-family (N3, N4, …).
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Enumerate 3-permutation semigroups by multiplicity and classify
    /// each against the family catalogue.
    Conjecture {
        /// Smallest multiplicity.
        #[arg(long)]
        from: i64,
        /// Largest multiplicity.
        #[arg(long)]
        to: i64,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Print a family's generating set at parameter k.
    Gen {
        /// Family identifier: H1..H16 or N<block size>.
        id: String,
        #[arg(long)]
        k: i64,
    },
    /// Check family structural descriptions against element enumeration.
    Verify {
        /// Family identifier; omit with --all to sweep H1..H16.
        id: Option<String>,
        /// Single parameter to check.
        #[arg(long)]
        k: Option<i64>,
        /// Sweep k from the family's smallest admissible value up to this.
        #[arg(long)]
        kmax: Option<i64>,
        /// Sweep every H family.
        #[arg(long)]
        all: bool,
    },
    /// Find every catalogued family whose recipe produces the given set.
    Match {
        /// Comma-separated generators.
        generators: String,
    },
    /// List a family member's elements from its parametric membership
    /// form (supported: H5, H8, H9, H10, H11, H12, H14, H15, H16).
    Members {
        id: String,
        #[arg(long)]
        k: i64,
        /// Largest element to list (default: Frobenius + 2·multiplicity).
        #[arg(long)]
        bound: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(AssertUnwindSafe(|| execute(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(3)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn execute(cli: Cli) -> CliResult<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Check { generators, n } => check(&generators, n, format),
        Command::Info { generators } => info(&generators, format),
        Command::Enumerate {
            n,
            min,
            max,
            workers,
        } => enumerate(n, min, max, workers, format),
        Command::Family(cmd) => family(cmd, format),
        Command::Conjecture { from, to, workers } => conjecture(from, to, workers, format),
    }
}

fn parse_generators(text: &str) -> CliResult<GeneratorSet> {
    let mut values: Vec<i64> = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err("empty generator entry".into());
        }
        let value: i64 = part
            .parse()
            .map_err(|_| format!("invalid integer {part:?}"))?;
        if values.contains(&value) {
            return Err(format!("duplicate generator {value}"));
        }
        values.push(value);
    }
    values.sort_unstable();
    GeneratorSet::new(values).map_err(|e| e.to_string())
}

fn parse_family(text: &str) -> CliResult<FamilyId> {
    text.parse::<FamilyId>().map_err(|e| e.to_string())
}

fn semigroup_from(text: &str) -> CliResult<Semigroup> {
    Semigroup::from_generators(parse_generators(text)?).map_err(|e| e.to_string())
}

fn check(generators: &str, n: i64, format: Format) -> CliResult<ExitCode> {
    let semigroup = semigroup_from(generators)?;
    let report = is_n_permutation(&semigroup, n).map_err(|e| e.to_string())?;
    output::render_check(&semigroup, &report, format);
    Ok(if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn info(generators: &str, format: Format) -> CliResult<ExitCode> {
    let semigroup = semigroup_from(generators)?;
    output::render_info(&semigroup, format);
    Ok(ExitCode::SUCCESS)
}

fn enumerate(
    n: i64,
    min: i64,
    max: i64,
    workers: Option<usize>,
    format: Format,
) -> CliResult<ExitCode> {
    let query = EnumerationQuery::new(n, min, max).map_err(|e| e.to_string())?;
    let workers = workers::resolve(workers);
    let start = Instant::now();
    let result = workers::enumerate_parallel(&query, workers).map_err(|e| e.to_string())?;
    eprintln!(
        "enumerated {} semigroups from {} candidates in {:.3}s",
        result.found.len(),
        result.candidates_examined,
        start.elapsed().as_secs_f64()
    );
    output::render_enumeration(&result, format);
    Ok(ExitCode::SUCCESS)
}

fn family(cmd: FamilyCommand, format: Format) -> CliResult<ExitCode> {
    match cmd {
        FamilyCommand::Gen { id, k } => {
            let id = parse_family(&id)?;
            let generators = id.generators(k).map_err(|e| e.to_string())?;
            output::render_family_gen(id, k, &generators, format);
            Ok(ExitCode::SUCCESS)
        }
        FamilyCommand::Verify { id, k, kmax, all } => {
            let checks = run_verify(id, k, kmax, all)?;
            let ok = checks.iter().all(StructureCheck::passed);
            output::render_verify(&checks, format);
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        FamilyCommand::Match { generators } => {
            let generators = parse_generators(&generators)?;
            let matches = match_family(&generators);
            if matches.is_empty() {
                eprintln!("no family matches");
            }
            output::render_match(&generators, &matches, format);
            Ok(ExitCode::SUCCESS)
        }
        FamilyCommand::Members { id, k, bound } => {
            let id = parse_family(&id)?;
            let bound = match bound {
                Some(b) => b,
                None => {
                    let sg =
                        Semigroup::from_generators(id.generators(k).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                    sg.frobenius() + 2 * sg.multiplicity()
                }
            };
            let members = id.parametric_members(k, bound).map_err(|e| e.to_string())?;
            output::render_members(id, k, bound, &members, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(
    id: Option<String>,
    k: Option<i64>,
    kmax: Option<i64>,
    all: bool,
) -> CliResult<Vec<StructureCheck>> {
    let mut checks = Vec::new();
    if all {
        if id.is_some() || k.is_some() {
            return Err("--all sweeps H1..H16; give either --all or a family".into());
        }
        let kmax = kmax.unwrap_or(12);
        for family in ALL_H {
            for k in family.k_min()..=kmax {
                checks.push(family.verify(k).map_err(|e| e.to_string())?);
            }
        }
        return Ok(checks);
    }
    let Some(id) = id else {
        return Err("give a family (e.g. H5) or --all".into());
    };
    let family = parse_family(&id)?;
    match (k, kmax) {
        (Some(k), None) => checks.push(family.verify(k).map_err(|e| e.to_string())?),
        (None, Some(kmax)) => {
            for k in family.k_min()..=kmax {
                checks.push(family.verify(k).map_err(|e| e.to_string())?);
            }
        }
        (None, None) => return Err("give --k <k> or --kmax <k>".into()),
        (Some(_), Some(_)) => return Err("give either --k or --kmax, not both".into()),
    }
    Ok(checks)
}

fn conjecture(from: i64, to: i64, workers: Option<usize>, format: Format) -> CliResult<ExitCode> {
    if from < 1 {
        return Err(format!("multiplicity must be positive, got {from}"));
    }
    if from > to {
        return Err(format!("inverted range: {from} > {to}"));
    }
    if from < 12 {
        eprintln!(
            "warning: the classification targets multiplicity ≥ 12; \
             results below that are exploratory"
        );
    }
    let query = EnumerationQuery::new(3, from, 3 * to).map_err(|e| e.to_string())?;
    let workers = workers::resolve(workers);
    let start = Instant::now();
    let result = workers::enumerate_parallel(&query, workers).map_err(|e| e.to_string())?;
    let report = classify_enumeration(from, to, &result);
    eprintln!(
        "classified {} semigroups ({} unmatched) in {:.3}s",
        report.rows.len(),
        report.unmatched.len(),
        start.elapsed().as_secs_f64()
    );
    output::render_conjecture(&report, format);
    Ok(if report.unmatched.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
