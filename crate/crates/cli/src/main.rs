//! Command line front end.
//!
//! Subcommands: `query` classifies a single character, `enumerate` lists a
//! whole series, `verify` runs the self-check suites, `tables` dumps the
//! built-in record tables. Exit codes: 0 success, 1 verification failure,
//! 2 invalid input, 3 the answer needs data the tables do not carry.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use uch_cli::records::{parse_records, render_classified, render_record, render_text};
use uch_cli::suites;
use uch_core::classify::{extension_field, Classifier};
use uch_core::groups::{builtin_records, parse_label, Series, ALL_SERIES};
use uch_core::Error;

#[derive(Parser)]
#[command(
    name = "uch",
    version,
    about = "Rationality data for unipotent characters and their extensions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned key/value blocks.
    Text,
    /// One record per line, loadable with --tables.
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a single character.
    Query {
        /// Series tag (A, 2A, D, 2D, 3D4, D4S3, E6, 2E6, B2x, G2x, F4x).
        #[arg(long)]
        series: String,
        /// Rank; optional for series of fixed rank.
        #[arg(long)]
        n: Option<u32>,
        /// Character label, e.g. [2,1] or F4[-1].
        #[arg(long)]
        label: String,
        /// Prime power; fields stay symbolic in q when omitted.
        #[arg(long)]
        q: Option<u64>,
        /// Record file with additional table rows.
        #[arg(long)]
        tables: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Records)]
        format: Format,
    },
    /// List classifications for a whole series.
    Enumerate {
        #[arg(long)]
        series: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        tables: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Records)]
        format: Format,
    },
    /// Run self-check suites.
    Verify {
        /// Suite name; all suites when omitted.
        suite: Option<String>,
        /// Cap on rank-like scan sizes.
        #[arg(long)]
        max_n: Option<u32>,
        /// Cap on staircase parameters.
        #[arg(long)]
        max_t: Option<u32>,
    },
    /// Print built-in tables as record lines.
    Tables {
        /// Series tag; all fixed-rank tables when omitted.
        #[arg(long)]
        series: Option<String>,
        #[arg(long)]
        n: Option<u32>,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            message: e.to_string(),
            code: if e.is_insufficient_data() { 3 } else { 2 },
        }
    }
}

fn invalid(message: String) -> Failure {
    Failure { message, code: 2 }
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Query {
            series,
            n,
            label,
            q,
            tables,
            format,
        } => {
            let (series, n) = resolve_group(&series, n)?;
            if let Some(q) = q {
                series.validate_q(q)?;
            }
            let classifier = load_classifier(tables.as_ref())?;
            let label = parse_label(series, &label)?;
            let (record, result) = classifier.classify(series, n, &label, q)?;
            match format {
                Format::Records => println!("{}", render_classified(&record, &result)),
                Format::Text => println!("{}", render_text(&record, Some(&result))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate {
            series,
            n,
            q,
            tables,
            format,
        } => {
            let (series, n) = resolve_group(&series, n)?;
            if let Some(q) = q {
                series.validate_q(q)?;
            }
            let classifier = load_classifier(tables.as_ref())?;
            let records = classifier.enumerate(series, n)?;
            let mut first = true;
            for record in &records {
                if record.sigma_invariant == Some(false) {
                    continue;
                }
                let classified = match extension_field(record, q) {
                    Ok(result) => Some(result),
                    Err(Error::NotSigmaInvariant(_)) => continue,
                    // Listed, but without an answer: the data in the record
                    // does not determine the extension field.
                    Err(_) => None,
                };
                match format {
                    Format::Records => match &classified {
                        Some(result) => println!("{}", render_classified(record, result)),
                        None => println!("{} ext_field=unknown", render_record(record)),
                    },
                    Format::Text => {
                        if !first {
                            println!();
                        }
                        println!("{}", render_text(record, classified.as_ref()));
                        if classified.is_none() {
                            println!("ext_field:   unknown");
                        }
                    }
                }
                first = false;
            }
            if !series.table_complete() {
                println!("# table incomplete: entries beyond the built-in rows exist");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            max_n,
            max_t,
        } => {
            let outcomes = match suite {
                None => suites::run_all(max_n, max_t),
                Some(name) => {
                    let outcome = suites::run_suite(&name, max_n, max_t)
                        .ok_or_else(|| invalid(format!("unknown suite '{name}'")))?;
                    vec![outcome]
                }
            };
            let mut all_passed = true;
            for outcome in &outcomes {
                println!("{}", outcome.summary());
                for note in &outcome.notes {
                    println!("  {note}");
                }
                for failure in &outcome.failures {
                    println!("  FAIL {failure}");
                }
                all_passed &= outcome.passed();
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Tables { series, n } => {
            match series {
                Some(tag) => {
                    let (series, n) = resolve_group(&tag, n)?;
                    for record in builtin_records(series, n)? {
                        println!("{}", render_record(&record));
                    }
                }
                None => {
                    for series in ALL_SERIES {
                        let Some(n) = series.fixed_rank() else {
                            continue;
                        };
                        println!("# {} n={}", series.tag(), n);
                        for record in builtin_records(series, n)? {
                            println!("{}", render_record(&record));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_group(tag: &str, n: Option<u32>) -> Result<(Series, u32), Failure> {
    let series = Series::from_tag(tag)?;
    let n = match n.or_else(|| series.fixed_rank()) {
        Some(n) => n,
        None => return Err(invalid(format!("series {} requires --n", series.tag()))),
    };
    series.validate_rank(n)?;
    Ok((series, n))
}

fn load_classifier(path: Option<&PathBuf>) -> Result<Classifier, Failure> {
    match path {
        None => Ok(Classifier::new()),
        Some(p) => {
            let text =
                std::fs::read_to_string(p).map_err(|e| invalid(format!("{}: {e}", p.display())))?;
            let records =
                parse_records(&text).map_err(|e| invalid(format!("{}: {e}", p.display())))?;
            Ok(Classifier::with_records(records))
        }
    }
}
