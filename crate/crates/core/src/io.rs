//! Text formats: JSON sets and potentials, CSV reports and band tables.

use std::io::{Read, Write};

use crate::bloch_floquet::{BandSpectrum, PeriodicPotential};
use crate::compact_sets::CompactSet;
use crate::convergence::ConvergenceReport;
use crate::dimension::{CoverRow, CoverStats};
use crate::error::{Error, Result};

/// Significant digits used for CSV cells.
pub const CSV_DIGITS: usize = 15;

/// Formats like C's `%.{sig}g`: fixed notation for moderate exponents,
/// scientific otherwise, trailing zeros dropped.
pub fn format_sig(x: f64, sig: usize) -> String {
    let sig = sig.max(1);
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_compact_set(text: &str) -> Result<CompactSet> {
    serde_json::from_str(text).map_err(parse_err)
}

pub fn parse_potential(text: &str) -> Result<PeriodicPotential> {
    serde_json::from_str(text).map_err(parse_err)
}

pub const REPORT_COLUMNS: [&str; 7] = [
    "n",
    "delta",
    "q",
    "r",
    "mu_raw",
    "mu_fattened",
    "q_times_delta",
];
pub const BAND_COLUMNS: [&str; 4] = ["i", "lo", "hi", "width"];

pub fn write_report_csv<W: Write>(report: &ConvergenceReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_COLUMNS).map_err(parse_err)?;
    for row in &report.rows {
        w.write_record([
            row.n.to_string(),
            format_sig(row.delta, CSV_DIGITS),
            row.q.to_string(),
            format_sig(row.r, CSV_DIGITS),
            format_sig(row.mu_raw, CSV_DIGITS),
            format_sig(row.mu_fattened, CSV_DIGITS),
            format_sig(row.q_times_delta, CSV_DIGITS),
        ])
        .map_err(parse_err)?;
    }
    w.flush().map_err(parse_err)
}

pub fn report_csv_string(report: &ConvergenceReport) -> Result<String> {
    let mut buf = Vec::new();
    write_report_csv(report, &mut buf)?;
    String::from_utf8(buf).map_err(parse_err)
}

/// Bands are numbered from 1.
pub fn write_bands_csv<W: Write>(spectrum: &BandSpectrum, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BAND_COLUMNS).map_err(parse_err)?;
    for (i, &(lo, hi)) in spectrum.bands.iter().enumerate() {
        w.write_record([
            (i + 1).to_string(),
            format_sig(lo, CSV_DIGITS),
            format_sig(hi, CSV_DIGITS),
            format_sig(hi - lo, CSV_DIGITS),
        ])
        .map_err(parse_err)?;
    }
    w.flush().map_err(parse_err)
}

/// Reads the `n, delta, q, r, mu_fattened` columns of a report CSV; other
/// columns are ignored and column order does not matter.
pub fn read_cover_stats<R: Read>(input: R) -> Result<CoverStats> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr.headers().map_err(parse_err)?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("missing column {name:?}")))
    };
    let (n, delta, q, r, m) = (
        col("n")?,
        col("delta")?,
        col("q")?,
        col("r")?,
        col("mu_fattened")?,
    );
    let mut rows = Vec::new();
    for (line, record) in rdr.records().enumerate() {
        let record = record.map_err(parse_err)?;
        let field = |i: usize| {
            record
                .get(i)
                .ok_or_else(|| Error::Parse(format!("row {}: missing field", line + 1)))
        };
        let int = |i: usize| {
            field(i)?
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("row {}: {e}", line + 1)))
        };
        let real = |i: usize| {
            field(i)?
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("row {}: {e}", line + 1)))
        };
        rows.push(CoverRow {
            n: int(n)?,
            q: int(q)?,
            delta: real(delta)?,
            r: real(r)?,
            fattened_measure: real(m)?,
        });
    }
    CoverStats::new(rows)
}

pub fn parse_cover_stats(bytes: &[u8]) -> Result<CoverStats> {
    read_cover_stats(bytes)
}
