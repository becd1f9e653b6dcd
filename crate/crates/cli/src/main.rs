//! `biop` — command-line front end for the sum-equals-product toolkit.
//!
//! Exit codes: 0 success, 1 domain errors (error name on stderr), 2 malformed
//! input. `BIOP_NODE_BUDGET` overrides the search node budget.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use biop_core::bioperate::{self, field_complete, field_completion_element};
use biop_core::budget::DEFAULT_NODE_BUDGET;
use biop_core::enumerate::{
    self, enumerate_nat_by_length_with, enumerate_nat_by_sum_product_with, records_nat_with,
    uniform_field_solutions, SearchConfig,
};
use biop_core::literal::parse_multiset;
use biop_core::ring::RingId;
use biop_core::Error;

#[derive(Parser)]
#[command(
    name = "biop",
    version,
    about = "Multisets whose sum equals their product"
)]
struct Cli {
    /// Output format: line-oriented text or one JSON object.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingName {
    Nat,
    Int,
    Rational,
    Fp,
    Lunar,
    Gaussian,
    Eisenstein,
    Sqrt2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceId {
    #[value(name = "A033178")]
    A033178,
    #[value(name = "A309230")]
    A309230,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    #[value(name = "lemma3.3")]
    Lemma33,
    #[value(name = "thm5.2")]
    Thm52,
    #[value(name = "thm6.2")]
    Thm62,
    #[value(name = "lemma7.2")]
    Lemma72,
    #[value(name = "lemma9.2")]
    Lemma92,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a multiset: sum, product, and the bioperational predicates.
    Check {
        #[arg(long, value_enum)]
        ring: Option<RingName>,
        /// Prime modulus; selects the prime field.
        #[arg(long)]
        modulus: Option<i64>,
        /// Multiset literal, e.g. `3,-5,-1*14,1`.
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Extend a factorization into a minimal bioperational multiset.
    Construct {
        #[arg(long, value_enum)]
        ring: Option<RingName>,
        #[arg(long)]
        modulus: Option<i64>,
        /// Factor multiset literal, e.g. `1+2i,2+3i`.
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
    },
    /// Append the unique completing element over a field.
    Complete {
        #[arg(long, value_enum)]
        ring: Option<RingName>,
        #[arg(long)]
        modulus: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Enumerate bioperational multisets over the naturals.
    Enumerate {
        /// Enumerate by exact length.
        #[arg(long, conflicts_with = "sum_product")]
        length: Option<u64>,
        /// Enumerate by sum-product value.
        #[arg(long)]
        sum_product: Option<u64>,
        /// Also list zero-containing (vanishing) solutions.
        #[arg(long)]
        include_vanishing: bool,
        /// Parallel search threads (defaults to sequential).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Lengths where the by-length solution count sets a record.
    Records {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Solutions of a^(n-1) = n over a prime field.
    Uniform {
        #[arg(long)]
        modulus: i64,
        #[arg(long)]
        max_n: u64,
    },
    /// Run one of the built-in verification oracles.
    Verify {
        #[arg(long, value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        modulus: Option<i64>,
        #[arg(long)]
        max_len: Option<u64>,
        #[arg(long)]
        max_digits: Option<u32>,
        /// Randomized case count for the sampled lemmas.
        #[arg(long, default_value_t = 500)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce a catalogued sequence prefix.
    Oeis {
        #[arg(long, value_enum)]
        id: SequenceId,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}: {}", e.name(), e);
            if e.is_parse_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn node_budget() -> Result<u64, Error> {
    match std::env::var("BIOP_NODE_BUDGET") {
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
        Ok(text) => text.parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("BIOP_NODE_BUDGET must be an integer, got {text:?}"),
        }),
    }
}

fn resolve_ring(ring: Option<RingName>, modulus: Option<i64>) -> Result<RingId, Error> {
    match (ring, modulus) {
        (Some(RingName::Fp) | None, Some(p)) => RingId::prime_field(p),
        (Some(RingName::Fp), None) => Err(Error::Parse {
            position: 0,
            message: "--ring fp requires --modulus".into(),
        }),
        (_, Some(_)) => Err(Error::Parse {
            position: 0,
            message: "--modulus only applies to the prime field".into(),
        }),
        (Some(RingName::Nat) | None, None) => Ok(RingId::Nat),
        (Some(RingName::Int), None) => Ok(RingId::Int),
        (Some(RingName::Rational), None) => Ok(RingId::Rational),
        (Some(RingName::Lunar), None) => Ok(RingId::Lunar),
        (Some(RingName::Gaussian), None) => Ok(RingId::Gaussian),
        (Some(RingName::Eisenstein), None) => Ok(RingId::Eisenstein),
        (Some(RingName::Sqrt2), None) => Ok(RingId::Sqrt2),
    }
}

/// Build a search configuration and run `body` under the requested thread
/// pool. Searches default to sequential; `--threads k` with k > 1 opts into
/// the parallel scan when compiled in.
fn with_threads<T: Send>(
    threads: Option<usize>,
    body: impl FnOnce(&SearchConfig) -> Result<T, Error> + Send,
) -> Result<T, Error> {
    let mut config = SearchConfig::sequential();
    config.node_budget = node_budget()?;
    match threads {
        None | Some(0) | Some(1) => body(&config),
        #[cfg(feature = "parallel")]
        Some(k) => {
            config.parallel = true;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InternalInvariantViolation(e.to_string()))?;
            pool.install(|| body(&config))
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => body(&config),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Check {
            ring,
            modulus,
            elements,
        } => {
            let ring = resolve_ring(*ring, *modulus)?;
            let s = parse_multiset(ring, elements)?;
            output::check(&s, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            ring,
            modulus,
            factors,
        } => {
            let ring = resolve_ring(*ring, *modulus)?;
            let factors = parse_multiset(ring, factors)?;
            let trace = bioperate::bioperate(&factors)?;
            output::construct(&trace, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete {
            ring,
            modulus,
            elements,
        } => {
            let ring = resolve_ring(*ring, *modulus)?;
            if !ring.is_field() {
                return Err(Error::UnsupportedRing {
                    ring,
                    operation: "completion (pick rational or fp)",
                });
            }
            let s = parse_multiset(ring, elements)?;
            let appended = field_completion_element(&s)?;
            let result = field_complete(&s)?;
            output::complete(&s, &appended, &result, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            length,
            sum_product,
            include_vanishing,
            threads,
        } => {
            let report = with_threads(*threads, |cfg| {
                let cfg = SearchConfig {
                    include_vanishing: *include_vanishing,
                    ..cfg.clone()
                };
                match (length, sum_product) {
                    (Some(n), None) => enumerate_nat_by_length_with(*n, &cfg),
                    (None, Some(m)) => enumerate_nat_by_sum_product_with(*m, &cfg),
                    _ => Err(Error::Parse {
                        position: 0,
                        message: "pass exactly one of --length or --sum-product".into(),
                    }),
                }
            })?;
            output::enumeration(&report, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Records { max_n, threads } => {
            let report = with_threads(*threads, |cfg| records_nat_with(*max_n, cfg))?;
            output::records(*max_n, &report, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Uniform { modulus, max_n } => {
            let solutions = uniform_field_solutions(*modulus, *max_n)?;
            output::uniform(*modulus, *max_n, &solutions, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            modulus,
            max_len,
            max_digits,
            cases,
            seed,
        } => {
            let mut config = SearchConfig::sequential();
            config.node_budget = node_budget()?;
            let outcome = match target {
                VerifyTarget::Lemma33 => verify::lemma_product_dominates_sum(*cases, *seed),
                VerifyTarget::Thm52 => enumerate::verify_field_exhaustiveness(
                    modulus.unwrap_or(11),
                    max_len.unwrap_or(4),
                    &config,
                )?,
                VerifyTarget::Thm62 => enumerate::verify_lunar_triviality(
                    max_digits.unwrap_or(2),
                    max_len.unwrap_or(4),
                    &config,
                )?,
                VerifyTarget::Lemma72 => verify::lemma_parity_congruence(false, *cases, *seed),
                VerifyTarget::Lemma92 => verify::lemma_parity_congruence(true, *cases, *seed),
            };
            output::verdict(target_name(*target), outcome, json);
            if outcome {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "verification target {} reported a counterexample",
                    target_name(*target)
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Oeis { id, count, threads } => {
            let terms = with_threads(*threads, |cfg| match id {
                SequenceId::A033178 => (2..2 + *count as u64)
                    .map(|n| Ok(enumerate_nat_by_length_with(n, cfg)?.count as u64))
                    .collect::<Result<Vec<u64>, Error>>(),
                SequenceId::A309230 => records_prefix(*count, cfg),
            })?;
            output::oeis(sequence_name(*id), *count, &terms, json);
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// First `count` record positions, scanning upward in blocks until enough
/// records appear (hard-capped to keep the scan finite).
fn records_prefix(count: usize, cfg: &SearchConfig) -> Result<Vec<u64>, Error> {
    let mut max_n = 128;
    loop {
        let positions = records_nat_with(max_n, cfg)?.positions;
        if positions.len() >= count {
            return Ok(positions.into_iter().take(count).collect());
        }
        if max_n >= 1024 {
            return Err(Error::PreconditionViolation(format!(
                "only {} record positions exist below length {max_n}",
                positions.len()
            )));
        }
        max_n *= 2;
    }
}

fn sequence_name(id: SequenceId) -> &'static str {
    match id {
        SequenceId::A033178 => "A033178",
        SequenceId::A309230 => "A309230",
    }
}

fn target_name(target: VerifyTarget) -> &'static str {
    match target {
        VerifyTarget::Lemma33 => "lemma3.3",
        VerifyTarget::Thm52 => "thm5.2",
        VerifyTarget::Thm62 => "thm6.2",
        VerifyTarget::Lemma72 => "lemma7.2",
        VerifyTarget::Lemma92 => "lemma9.2",
    }
}
