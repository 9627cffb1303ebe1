//! Command-line surface.
//!
//! Exit codes: 0 on success, 1 on an internal or verification failure, 2 on
//! a usage error (with a one-line diagnostic on stderr). All results go to
//! standard output or to `--out`; identical requests produce byte-identical
//! output.

mod record;
mod table;
mod verify;

pub use record::{ResultRecord, ENGINE_VERSION};
pub use table::{append_cache, resolve_cache_path, TableInvariant, TableRequest};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num::BigInt;
use serde_json::Value;

use crate::error::Error;
use crate::euler::{
    chern_number, chern_polynomial, corollary_product, euler_polynomial, hodge_numbers_threefold,
    partitions_of, section_euler_polynomial, section_euler_values, Partition,
};
use crate::hirzebruch::chi_y;

use record::{bracket_ints, json_int, json_int_array, json_object, json_poly};

/// Environment variable holding the default table-cache path.
pub const CACHE_ENV_VAR: &str = "CHERN_CALC_CACHE";

#[derive(Debug)]
pub enum CliError {
    /// Bad request: exit code 2.
    Usage(String),
    /// Internal or verification failure: exit code 1.
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "chern-calc",
    version,
    about = "Exact characteristic-class invariants of smooth projective hypersurfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
enum DisplayStyle {
    /// Ascending degree, matching the machine serialization.
    Ascending,
    /// Descending degree.
    Paper,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Term order for polynomials in text output.
    #[arg(long, value_enum, default_value_t = DisplayStyle::Ascending)]
    display: DisplayStyle,
}

impl OutputArgs {
    fn ascending(&self) -> bool {
        self.display == DisplayStyle::Ascending
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s).map_err(|e| format!("not an integer: {e}"))
}

/// Inclusive range written as `A..B`, or a single value `A`.
#[derive(Clone, Copy, Debug)]
struct InclusiveRange {
    start: u64,
    end: u64,
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (a, b),
            None => (s, s),
        };
        let start: u64 = start.trim().parse().map_err(|_| format!("bad range bound in '{s}'"))?;
        let end: u64 = end.trim().parse().map_err(|_| format!("bad range bound in '{s}'"))?;
        if start > end {
            return Err(format!("empty range '{s}'"));
        }
        Ok(InclusiveRange { start, end })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Euler polynomial E_n, optionally evaluated at degree d.
    Euler {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        d: Option<BigInt>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print theta^k applied to E_n.
    Theta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the bivariate class polynomial whose s^j coefficient at t = d
    /// is the pushforward of the (j-1)-st Chern class.
    ChernPoly {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Chern numbers of the degree-d hypersurface in P^n, for one partition
    /// or for every partition of n-1.
    ChernNumbers {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        d: BigInt,
        /// Comma-separated partition of n-1, e.g. 1,2.
        #[arg(long)]
        partition: Option<String>,
        /// Print the literal iterate products instead of intersection
        /// numbers (they differ by a factor d^(#parts - 1)).
        #[arg(long)]
        literal: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The hyperplane-section polynomial e_n(s,d), or the Euler
    /// characteristics of the iterated sections when d is given.
    Sections {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        d: Option<BigInt>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hodge numbers (h03, h12) of the smooth degree-d threefold in P^4.
    Hodge3 {
        #[arg(long, value_parser = parse_bigint)]
        d: BigInt,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The chi_y genus of the degree-d hypersurface in P^n.
    ChiY {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_bigint)]
        d: BigInt,
        /// Evaluate at y = -1, 0 or 1 instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
        /// Print only the polynomial.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run verification sweeps; any mismatch exits with code 1.
    Verify {
        /// Fulton recovery identity and projective specialization.
        #[arg(long)]
        fulton: bool,
        /// Pushforwards and Chern numbers against the adjunction oracle.
        #[arg(long)]
        oracle: bool,
        /// Every sweep at its default bounds.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        d_max: Option<u64>,
    },
    /// Emit a table of an invariant over inclusive n and d ranges.
    Table {
        /// One of: chi, chern-numbers, sections, hodge3, chi-y.
        #[arg(long, value_enum)]
        invariant: TableInvariant,
        /// Inclusive range A..B (or a single value).
        #[arg(long)]
        n: InclusiveRange,
        /// Inclusive range C..E (or a single value).
        #[arg(long)]
        d: InclusiveRange,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append rows to this JSON-lines cache (default: $CHERN_CALC_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

/// Runs the CLI against real stdout.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    run_with_writer(argv, &mut stdout)
}

/// Runs the CLI with captured output; this is the testable entry point.
pub fn run_with_writer<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let summary = e.to_string();
            let first_line = summary
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("bad arguments")
                .trim_start_matches("error: ");
            eprintln!("usage error: {first_line}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require_n(n: u32, min: u32) -> Result<(), CliError> {
    if n < min {
        Err(usage(format!("n must be at least {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn require_d(d: &BigInt) -> Result<(), CliError> {
    if d < &BigInt::from(1) {
        Err(usage(format!("d must be at least 1, got {d}")))
    } else {
        Ok(())
    }
}

/// Sends rendered output to stdout or to --out. File-write failures are
/// runtime failures (exit 1), not usage errors.
fn emit(out: &mut dyn Write, path: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        None => out
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Failure(format!("write failed: {e}"))),
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", p.display()))),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Euler { n, d, output } => {
            require_n(n, 1)?;
            if let Some(d) = &d {
                require_d(d)?;
            }
            let e = euler_polynomial(n)?;
            let mut values = vec![("polynomial", json_poly(e.polynomial()))];
            let value = d.as_ref().map(|d| e.evaluate(d));
            if let Some(v) = &value {
                values.push(("value", json_int(v)));
            }
            let record = ResultRecord::new("euler", n, d.as_ref(), json_object(values));
            let text = match (&d, &value) {
                (Some(d), Some(v)) => format!(
                    "E_{n}(t) = {}\nE_{n}({d}) = {v}\n",
                    e.polynomial().display("t", output.ascending())
                ),
                _ => format!("E_{n}(t) = {}\n", e.polynomial().display("t", output.ascending())),
            };
            let csv_rows = vec![vec![
                ("n", n.to_string()),
                ("d", d.as_ref().map(BigInt::to_string).unwrap_or_default()),
                ("polynomial", bracket_ints(e.polynomial().coeffs())),
                ("value", value.as_ref().map(BigInt::to_string).unwrap_or_default()),
            ]];
            emit_single(out, &output, record, text, csv_rows)
        }
        Command::Theta { n, k, output } => {
            require_n(n, 1)?;
            let e = euler_polynomial(n)?;
            let p = e.theta_power(k);
            let mut record = ResultRecord::new(
                "theta",
                n,
                None,
                json_object(vec![("polynomial", json_poly(&p))]),
            );
            record.k = Some(k);
            let text = format!("theta^{k} E_{n}(t) = {}\n", p.display("t", output.ascending()));
            let csv_rows = vec![vec![
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("polynomial", bracket_ints(p.coeffs())),
            ]];
            emit_single(out, &output, record, text, csv_rows)
        }
        Command::ChernPoly { n, output } => {
            require_n(n, 1)?;
            let poly = chern_polynomial(n)?;
            let s_powers: Vec<Value> = (1..=n).map(|j| json_poly(&poly.coeff_of_s(j))).collect();
            let record = ResultRecord::new(
                "chern_poly",
                n,
                None,
                json_object(vec![("s_powers", Value::Array(s_powers))]),
            );
            let text = format!("C_{n}(s,t) = {}\n", poly.display("s", "t", output.ascending()));
            let csv_rows = (1..=n)
                .map(|j| {
                    vec![
                        ("n", n.to_string()),
                        ("s_power", j.to_string()),
                        ("polynomial", bracket_ints(poly.coeff_of_s(j).coeffs())),
                    ]
                })
                .collect();
            emit_single(out, &output, record, text, csv_rows)
        }
        Command::ChernNumbers {
            n,
            d,
            partition,
            literal,
            output,
        } => {
            require_n(n, 1)?;
            require_d(&d)?;
            let parts = match &partition {
                Some(text) => vec![parse_partition(text, n)?],
                None => partitions_of(n - 1),
            };
            let compute = |p: &Partition| -> Result<BigInt, CliError> {
                Ok(if literal {
                    corollary_product(n, &d, p)?
                } else {
                    chern_number(n, &d, p)?
                })
            };
            let mut entries = Vec::new();
            for p in &parts {
                entries.push((p.label(), compute(p)?));
            }
            let invariant = if literal { "chern_numbers_literal" } else { "chern_numbers" };
            let mut record = ResultRecord::new(
                invariant,
                n,
                Some(&d),
                json_object(entries.iter().map(|(k, v)| (k.as_str(), json_int(v))).collect()),
            );
            record.partition = partition.clone();
            let mut text = String::new();
            for (label, v) in &entries {
                let _ = writeln!(text, "{label} = {v}");
            }
            let csv_rows = entries
                .iter()
                .map(|(label, v)| {
                    vec![
                        ("n", n.to_string()),
                        ("d", d.to_string()),
                        ("partition", label.clone()),
                        ("value", v.to_string()),
                    ]
                })
                .collect();
            emit_single(out, &output, record, text, csv_rows)
        }
        Command::Sections { n, d, output } => {
            require_n(n, 1)?;
            if let Some(d) = &d {
                require_d(d)?;
            }
            match d {
                None => {
                    let poly = section_euler_polynomial(n)?;
                    let s_powers: Vec<Value> =
                        (0..n).map(|r| json_poly(&poly.coeff_of_s(r))).collect();
                    let record = ResultRecord::new(
                        "sections",
                        n,
                        None,
                        json_object(vec![("s_powers", Value::Array(s_powers))]),
                    );
                    let text =
                        format!("e_{n}(s,d) = {}\n", poly.display("s", "d", output.ascending()));
                    let csv_rows = (0..n)
                        .map(|r| {
                            vec![
                                ("n", n.to_string()),
                                ("s_power", r.to_string()),
                                ("polynomial", bracket_ints(poly.coeff_of_s(r).coeffs())),
                            ]
                        })
                        .collect();
                    emit_single(out, &output, record, text, csv_rows)
                }
                Some(d) => {
                    let chis = section_euler_values(n, &d)?;
                    let record = ResultRecord::new(
                        "sections",
                        n,
                        Some(&d),
                        json_object(vec![("chi", json_int_array(&chis))]),
                    );
                    let text = format!("chi = {}\n", bracket_ints(&chis));
                    let csv_rows = vec![vec![
                        ("n", n.to_string()),
                        ("d", d.to_string()),
                        ("chi_values", bracket_ints(&chis)),
                    ]];
                    emit_single(out, &output, record, text, csv_rows)
                }
            }
        }
        Command::Hodge3 { d, output } => {
            require_d(&d)?;
            let (h03, h12) = hodge_numbers_threefold(&d)?;
            let record = ResultRecord::new(
                "hodge3",
                4,
                Some(&d),
                json_object(vec![("h03", json_int(&h03)), ("h12", json_int(&h12))]),
            );
            let text = format!("(h03, h12) = ({h03}, {h12})\n");
            let csv_rows = vec![vec![
                ("n", "4".to_string()),
                ("d", d.to_string()),
                ("h03", h03.to_string()),
                ("h12", h12.to_string()),
            ]];
            emit_single(out, &output, record, text, csv_rows)
        }
        Command::ChiY {
            n,
            d,
            at,
            symbolic,
            output,
        } => {
            require_n(n, 2)?;
            require_d(&d)?;
            if let Some(at) = at {
                if !(-1..=1).contains(&at) {
                    return Err(usage(format!("--at must be -1, 0 or 1, got {at}")));
                }
            }
            let genus = chi_y(n, &d)?;
            match at {
                Some(point) => {
                    let value = genus.evaluate(point);
                    let mut record = ResultRecord::new(
                        "chi_y",
                        n,
                        Some(&d),
                        json_object(vec![("value", json_int(&value))]),
                    );
                    record.at = Some(point);
                    let text = format!("chi_y({point}) = {value}\n");
                    let csv_rows = vec![vec![
                        ("n", n.to_string()),
                        ("d", d.to_string()),
                        ("at", point.to_string()),
                        ("value", value.to_string()),
                    ]];
                    emit_single(out, &output, record, text, csv_rows)
                }
                None => {
                    let coeffs = json_poly(genus.polynomial());
                    let mut values = vec![("coefficients", coeffs)];
                    if !symbolic {
                        values.push(("chi", json_int(&genus.euler_characteristic())));
                        values.push(("chi_0", json_int(&genus.holomorphic_euler_characteristic())));
                        values.push(("signature", json_int(&genus.signature())));
                    }
                    let record = ResultRecord::new("chi_y", n, Some(&d), json_object(values));
                    let mut text = format!(
                        "chi_y = {}\n",
                        genus.polynomial().display("y", output.ascending())
                    );
                    if !symbolic {
                        let _ = writeln!(
                            text,
                            "euler characteristic (y=-1) = {}",
                            genus.euler_characteristic()
                        );
                        let _ = writeln!(
                            text,
                            "holomorphic euler characteristic (y=0) = {}",
                            genus.holomorphic_euler_characteristic()
                        );
                        let _ = writeln!(text, "signature (y=1) = {}", genus.signature());
                    }
                    let csv_rows = vec![vec![
                        ("n", n.to_string()),
                        ("d", d.to_string()),
                        ("chi_y_coefficients", bracket_ints(genus.polynomial().coeffs())),
                    ]];
                    emit_single(out, &output, record, text, csv_rows)
                }
            }
        }
        Command::Verify {
            fulton,
            oracle,
            all,
            n_max,
            d_max,
        } => {
            let modes = [fulton, oracle, all].iter().filter(|&&b| b).count();
            if modes != 1 {
                return Err(usage("choose exactly one of --fulton, --oracle, --all"));
            }
            if all {
                verify::all_sweeps(out)
            } else if fulton {
                let n_max = n_max.ok_or_else(|| usage("--fulton needs --n-max"))?;
                verify::fulton_sweep(n_max, d_max.unwrap_or(10), "", out)
            } else {
                let n_max = n_max.ok_or_else(|| usage("--oracle needs --n-max"))?;
                let d_max = d_max.ok_or_else(|| usage("--oracle needs --d-max"))?;
                verify::oracle_sweep(n_max, d_max, "", out)
            }
        }
        Command::Table {
            invariant,
            n,
            d,
            format,
            out: out_path,
            cache,
        } => {
            let request = TableRequest {
                invariant,
                n: (
                    u32::try_from(n.start).map_err(|_| usage("n out of range"))?,
                    u32::try_from(n.end).map_err(|_| usage("n out of range"))?,
                ),
                d: (d.start, d.end),
            };
            let records = table::table_records(&request)?;
            let rendered = table::render(&records, invariant, format);
            emit(out, &out_path, &rendered)?;
            let cache_path = resolve_cache_path(cache, std::env::var_os(CACHE_ENV_VAR));
            if let Some(path) = cache_path {
                append_cache(&path, &records)?;
            }
            Ok(())
        }
    }
}

fn parse_partition(text: &str, n: u32) -> Result<Partition, CliError> {
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| usage(format!("malformed partition '{text}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    let partition = Partition::new(parts).map_err(|e| usage(e.to_string()))?;
    if partition.sum() != n - 1 {
        return Err(usage(format!(
            "partition {} must sum to {}",
            partition.label(),
            n - 1
        )));
    }
    Ok(partition)
}

/// Renders a single-command result in the requested format and emits it.
fn emit_single(
    out: &mut dyn Write,
    output: &OutputArgs,
    record: ResultRecord,
    text: String,
    csv_rows: Vec<Vec<(&str, String)>>,
) -> Result<(), CliError> {
    let content = match output.format {
        OutputFormat::Text => text,
        OutputFormat::Json => format!("{}\n", record.to_json_line()),
        OutputFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            if let Some(first) = csv_rows.first() {
                wtr.write_record(first.iter().map(|(h, _)| *h)).unwrap();
            }
            for row in &csv_rows {
                wtr.write_record(row.iter().map(|(_, v)| v.as_str())).unwrap();
            }
            String::from_utf8(wtr.into_inner().unwrap()).unwrap()
        }
    };
    emit(out, &output.out, &content)
}
