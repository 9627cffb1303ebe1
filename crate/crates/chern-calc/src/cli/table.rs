//! Batch tables over (n, d) grids and the JSON-lines table cache.
//!
//! Row order is deterministic: n outer ascending, d inner ascending. Cache
//! appends are idempotent per (engine version, invariant, n, d).

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use num::BigInt;
use serde_json::Value;

use crate::euler::{
    chern_number, euler_polynomial, hodge_numbers_threefold, partitions_of, section_euler_values,
};
use crate::hirzebruch::chi_y;

use super::record::{bracket_ints, json_int, json_int_array, json_object, ResultRecord};
use super::{CliError, OutputFormat};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum TableInvariant {
    Chi,
    ChernNumbers,
    Sections,
    Hodge3,
    ChiY,
}

impl TableInvariant {
    pub fn name(&self) -> &'static str {
        match self {
            TableInvariant::Chi => "chi",
            TableInvariant::ChernNumbers => "chern_numbers",
            TableInvariant::Sections => "sections",
            TableInvariant::Hodge3 => "hodge3",
            TableInvariant::ChiY => "chi_y",
        }
    }

    fn min_n(&self) -> u32 {
        match self {
            TableInvariant::ChiY => 2,
            _ => 1,
        }
    }
}

pub struct TableRequest {
    pub invariant: TableInvariant,
    pub n: (u32, u32),
    pub d: (u64, u64),
}

impl TableRequest {
    pub fn validate(&self) -> Result<(), CliError> {
        let (n_lo, n_hi) = self.n;
        let (d_lo, d_hi) = self.d;
        if n_lo > n_hi || d_lo > d_hi {
            return Err(CliError::Usage("empty range".to_string()));
        }
        if d_lo < 1 {
            return Err(CliError::Usage("d must be at least 1".to_string()));
        }
        if self.invariant == TableInvariant::Hodge3 && (n_lo != 4 || n_hi != 4) {
            return Err(CliError::Usage(
                "hodge3 is only defined for n = 4; use --n 4..4".to_string(),
            ));
        }
        if n_lo < self.invariant.min_n() {
            return Err(CliError::Usage(format!(
                "{} needs n >= {}",
                self.invariant.name(),
                self.invariant.min_n()
            )));
        }
        Ok(())
    }
}

fn cell(invariant: TableInvariant, n: u32, d: &BigInt) -> Result<ResultRecord, CliError> {
    let values: Value = match invariant {
        TableInvariant::Chi => {
            let chi = euler_polynomial(n)?.evaluate(d);
            json_object(vec![("chi", json_int(&chi))])
        }
        TableInvariant::ChernNumbers => {
            let mut entries = Vec::new();
            for p in partitions_of(n - 1) {
                let value = chern_number(n, d, &p)?;
                entries.push((p.label(), json_int(&value)));
            }
            json_object(entries.iter().map(|(k, v)| (k.as_str(), v.clone())).collect())
        }
        TableInvariant::Sections => {
            let chis = section_euler_values(n, d)?;
            json_object(vec![("chi", json_int_array(&chis))])
        }
        TableInvariant::Hodge3 => {
            let (h03, h12) = hodge_numbers_threefold(d)?;
            json_object(vec![("h03", json_int(&h03)), ("h12", json_int(&h12))])
        }
        TableInvariant::ChiY => {
            let genus = chi_y(n, d)?;
            json_object(vec![("coefficients", json_poly_coeffs(genus.polynomial()))])
        }
    };
    Ok(ResultRecord::new(invariant.name(), n, Some(d), values))
}

fn json_poly_coeffs(p: &crate::poly::DensePolynomial<BigInt>) -> Value {
    json_int_array(p.coeffs())
}

/// One record per (n, d) cell, n outer ascending, d inner ascending.
pub fn table_records(req: &TableRequest) -> Result<Vec<ResultRecord>, CliError> {
    req.validate()?;
    let mut out = Vec::new();
    for n in req.n.0..=req.n.1 {
        for d in req.d.0..=req.d.1 {
            out.push(cell(req.invariant, n, &BigInt::from(d))?);
        }
    }
    Ok(out)
}

pub fn render(records: &[ResultRecord], invariant: TableInvariant, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::new();
            for r in records {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => render_text(records, invariant),
        OutputFormat::Csv => render_csv(records, invariant),
    }
}

fn values_ints(r: &ResultRecord, key: &str) -> Vec<BigInt> {
    match &r.values[key] {
        Value::Array(items) => items
            .iter()
            .map(|v| v.to_string().parse().expect("integer cell"))
            .collect(),
        other => vec![other.to_string().parse().expect("integer cell")],
    }
}

fn render_text(records: &[ResultRecord], invariant: TableInvariant) -> String {
    let mut out = String::new();
    for r in records {
        let d = r.d.as_ref().expect("table rows carry d");
        let line = match invariant {
            TableInvariant::Chi => format!("n={} d={} chi={}", r.n, d, r.values["chi"]),
            TableInvariant::Sections => format!(
                "n={} d={} chi={}",
                r.n,
                d,
                bracket_ints(&values_ints(r, "chi"))
            ),
            TableInvariant::Hodge3 => format!(
                "n={} d={} h03={} h12={}",
                r.n, d, r.values["h03"], r.values["h12"]
            ),
            TableInvariant::ChiY => format!(
                "n={} d={} chi_y={}",
                r.n,
                d,
                bracket_ints(&values_ints(r, "coefficients"))
            ),
            TableInvariant::ChernNumbers => {
                let mut parts = Vec::new();
                for p in partitions_of(r.n - 1) {
                    parts.push(format!("{}={}", p.label(), r.values[&p.label()]));
                }
                format!("n={} d={} {}", r.n, d, parts.join(" "))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn render_csv(records: &[ResultRecord], invariant: TableInvariant) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    match invariant {
        TableInvariant::Chi => {
            wtr.write_record(["n", "d", "chi"]).unwrap();
            for r in records {
                wtr.write_record([
                    r.n.to_string(),
                    r.d.as_ref().unwrap().to_string(),
                    r.values["chi"].to_string(),
                ])
                .unwrap();
            }
        }
        TableInvariant::Sections => {
            wtr.write_record(["n", "d", "chi_values"]).unwrap();
            for r in records {
                wtr.write_record([
                    r.n.to_string(),
                    r.d.as_ref().unwrap().to_string(),
                    bracket_ints(&values_ints(r, "chi")),
                ])
                .unwrap();
            }
        }
        TableInvariant::Hodge3 => {
            wtr.write_record(["n", "d", "h03", "h12"]).unwrap();
            for r in records {
                wtr.write_record([
                    r.n.to_string(),
                    r.d.as_ref().unwrap().to_string(),
                    r.values["h03"].to_string(),
                    r.values["h12"].to_string(),
                ])
                .unwrap();
            }
        }
        TableInvariant::ChiY => {
            wtr.write_record(["n", "d", "chi_y_coefficients"]).unwrap();
            for r in records {
                wtr.write_record([
                    r.n.to_string(),
                    r.d.as_ref().unwrap().to_string(),
                    bracket_ints(&values_ints(r, "coefficients")),
                ])
                .unwrap();
            }
        }
        TableInvariant::ChernNumbers => {
            wtr.write_record(["n", "d", "partition", "value"]).unwrap();
            for r in records {
                for p in partitions_of(r.n - 1) {
                    wtr.write_record([
                        r.n.to_string(),
                        r.d.as_ref().unwrap().to_string(),
                        p.label(),
                        r.values[&p.label()].to_string(),
                    ])
                    .unwrap();
                }
            }
        }
    }
    String::from_utf8(wtr.into_inner().unwrap()).unwrap()
}

/// Cache path: the --cache flag wins, otherwise CHERN_CALC_CACHE.
pub fn resolve_cache_path(flag: Option<PathBuf>, env_value: Option<OsString>) -> Option<PathBuf> {
    flag.or_else(|| env_value.map(PathBuf::from))
}

/// Appends records whose (engine, invariant, n, d) key is not already in the
/// cache file. Returns how many rows were added.
pub fn append_cache(path: &Path, records: &[ResultRecord]) -> Result<usize, CliError> {
    let mut seen: HashSet<(String, String, u32, String)> = HashSet::new();
    if path.exists() {
        let content = std::fs::read_to_string(path)
            .map_err(|e| CliError::Failure(format!("cannot read cache {}: {e}", path.display())))?;
        for (idx, line) in content.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let rec: ResultRecord = serde_json::from_str(line).map_err(|e| {
                CliError::Failure(format!(
                    "corrupt cache {} at line {}: {e}",
                    path.display(),
                    idx + 1
                ))
            })?;
            seen.insert(rec.cache_key());
        }
    }
    let fresh: Vec<&ResultRecord> = records
        .iter()
        .filter(|r| !seen.contains(&r.cache_key()))
        .collect();
    if fresh.is_empty() {
        return Ok(0);
    }
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::Failure(format!("cannot open cache {}: {e}", path.display())))?;
    for r in &fresh {
        writeln!(file, "{}", r.to_json_line())
            .map_err(|e| CliError::Failure(format!("cannot write cache {}: {e}", path.display())))?;
    }
    Ok(fresh.len())
}
