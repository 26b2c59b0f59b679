//! Command-line interface: generate the sequence cluster, verify its
//! identities, run the path oracles, revert series, and compare against
//! OEIS b-files.
//!
//! Exit status: 0 when every requested check passed, 1 on a verification or
//! comparison failure, 2 on usage or parse errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use motzkin_shadows::chain;
use motzkin_shadows::paths::{self, Parity};
use motzkin_shadows::sequence::SequenceId;
use motzkin_shadows::series::{ExactRational, PowerSeries};
use num::Zero;
use oeis_cli::bfile::{compare, BFile};
use oeis_cli::render::{render, Format};
use oeis_cli::verify::{run_identity, Identity};

#[derive(Parser)]
#[command(
    name = "oeis-cli",
    version,
    about = "Exact generators and checks for the Motzkin-to-Fibonacci sequence cluster",
    after_help = identity_help()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate terms of one of the nine cluster sequences
    Gen {
        /// Sequence id, e.g. A343773
        id: String,
        /// Number of terms, counted from the canonical offset
        #[arg(long, short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check a named identity in exact arithmetic
    Verify {
        /// Identity name; the full list is in --help
        identity: String,
        /// Order (index depth) to check up to
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Compare generated terms against an OEIS b-file
    Compare {
        /// Sequence id, e.g. A001006
        id: String,
        /// Path to the b-file
        bfile: PathBuf,
        /// Terms to compare; defaults to the full b-file
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: Option<u64>,
    },
    /// Count Motzkin paths of a given length by parity
    Paths {
        /// Path length
        n: u64,
        /// List every path, one word per line
        #[arg(long)]
        list: bool,
        /// Restrict the listing to one parity
        #[arg(long, value_enum, requires = "list")]
        parity: Option<ParityArg>,
    },
    /// Revert a power series given its coefficients from degree 1 upward
    ///
    /// Coefficients are integers or fractions like 3/4. Pass them as
    /// arguments (after `--` if any are negative) or via --file.
    Reverse {
        /// Coefficients of x^1, x^2, ... of the series to revert
        #[arg(conflicts_with = "file")]
        coefficients: Vec<String>,
        /// Read whitespace-separated coefficients from a file instead
        #[arg(long)]
        file: Option<PathBuf>,
        /// Number of reverse-series coefficients to print
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

fn identity_help() -> String {
    let mut help = String::from("Identities for `verify`:\n");
    for identity in Identity::ALL {
        help.push_str(&format!("  {:<20} {}\n", identity.name(), identity.describe()));
    }
    help
}

/// A usage or input error; maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_id(raw: &str) -> Result<SequenceId, UsageError> {
    Ok(raw.parse::<SequenceId>()?)
}

fn run(command: Command) -> Result<bool, UsageError> {
    match command {
        Command::Gen { id, terms, format } => {
            let id = parse_id(&id)?;
            let sequence = chain::generate(id, terms as usize);
            print!("{}", render(id, &sequence, format));
            Ok(true)
        }
        Command::Verify { identity, order } => {
            let identity: Identity = identity.parse()?;
            match run_identity(identity, order as usize) {
                Ok(()) => {
                    println!("PASS {identity} (order {order}): {}", identity.describe());
                    Ok(true)
                }
                Err(failure) => {
                    println!("FAIL {identity} (order {order}): {}", failure.detail);
                    Ok(false)
                }
            }
        }
        Command::Compare { id, bfile, terms } => {
            let id = parse_id(&id)?;
            let text = fs::read_to_string(&bfile)
                .map_err(|e| UsageError(format!("{}: {e}", bfile.display())))?;
            let reference = BFile::parse(&text)
                .map_err(|e| UsageError(format!("{}: {e}", bfile.display())))?;
            let requested = terms.map(|t| t as usize).unwrap_or(reference.len());
            let report = compare(id, &reference, requested)
                .map_err(|e| UsageError(format!("{}: {e}", bfile.display())))?;
            println!("{report}");
            Ok(report.first_mismatch.is_none())
        }
        Command::Paths { n, list, parity } => {
            let n = n as usize;
            if list && n > paths::ENUMERATION_CAP {
                return Err(UsageError(format!(
                    "--list supports lengths up to {}; length {n} has too many paths",
                    paths::ENUMERATION_CAP
                )));
            }
            let (even, odd) = paths::count_by_parity_dp(n);
            println!("even={even} odd={odd} total={}", &even + &odd);
            if list {
                let wanted = parity.map(|p| match p {
                    ParityArg::Even => Parity::Even,
                    ParityArg::Odd => Parity::Odd,
                });
                for path in paths::enumerate_paths(n)? {
                    if wanted.is_none_or(|w| path.parity() == w) {
                        println!("{path}");
                    }
                }
            }
            Ok(true)
        }
        Command::Reverse {
            coefficients,
            file,
            order,
        } => {
            let tokens: Vec<String> = match file {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    text.split_whitespace().map(str::to_owned).collect()
                }
                // Tolerate several coefficients inside one quoted argument.
                None => coefficients
                    .iter()
                    .flat_map(|arg| arg.split_whitespace())
                    .map(str::to_owned)
                    .collect(),
            };
            if tokens.is_empty() {
                return Err(UsageError(
                    "no coefficients given; pass them as arguments or via --file".into(),
                ));
            }
            let mut parsed: Vec<ExactRational> = vec![ExactRational::zero()];
            for token in &tokens {
                let value: ExactRational = token
                    .parse()
                    .map_err(|e| UsageError(format!("bad coefficient {token:?}: {e}")))?;
                parsed.push(value);
            }
            if parsed[1].is_zero() {
                return Err(UsageError(
                    "the coefficient of x^1 must be non-zero for reversion".into(),
                ));
            }
            let order = order as usize;
            parsed.resize(order.max(parsed.len() - 1) + 1, ExactRational::zero());
            let series = PowerSeries::from_rationals(parsed);
            let reversed = series.reversion().map_err(|e| UsageError(e.to_string()))?;
            let printed: Vec<String> = (1..=order)
                .map(|k| reversed.coeff(k).to_string())
                .collect();
            println!("{}", printed.join(" "));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
