//! Hausdorff content of explicit covers and dimension upper bounds from the
//! growth of cover statistics.
//!
//! The estimators fit straight lines to log-log data over a tail window. They
//! are estimates of limsup behaviour from finitely many rows, not proofs.

use serde::{Deserialize, Serialize};

use crate::compact_sets::{Interval, IntervalSet};
use crate::convergence::ConvergenceReport;
use crate::error::{Error, Result};

/// One step of a cover sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverRow {
    pub n: usize,
    pub q: usize,
    pub delta: f64,
    pub r: f64,
    pub fattened_measure: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<CoverRow>", into = "Vec<CoverRow>")]
pub struct CoverStats {
    rows: Vec<CoverRow>,
}

impl CoverStats {
    /// Rows must have nonnegative finite entries and strictly increasing `n`.
    pub fn new(rows: Vec<CoverRow>) -> Result<Self> {
        for row in &rows {
            for (name, x) in [
                ("delta", row.delta),
                ("r", row.r),
                ("fattened_measure", row.fattened_measure),
            ] {
                if !(x.is_finite() && x >= 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "{name} must be finite and nonnegative at n = {}, got {x}",
                        row.n
                    )));
                }
            }
        }
        if rows.windows(2).any(|w| w[0].n >= w[1].n) {
            return Err(Error::InvalidParameter(
                "rows must have increasing n".into(),
            ));
        }
        Ok(CoverStats { rows })
    }

    pub fn from_report(report: &ConvergenceReport) -> Result<Self> {
        CoverStats::new(
            report
                .rows
                .iter()
                .map(|r| CoverRow {
                    n: r.n,
                    q: r.q,
                    delta: r.delta,
                    r: r.r,
                    fattened_measure: r.mu_fattened,
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> &[CoverRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl TryFrom<Vec<CoverRow>> for CoverStats {
    type Error = Error;

    fn try_from(rows: Vec<CoverRow>) -> Result<Self> {
        CoverStats::new(rows)
    }
}

impl From<CoverStats> for Vec<CoverRow> {
    fn from(s: CoverStats) -> Self {
        s.rows
    }
}

/// Fewest points any fit accepts.
pub const MIN_FIT_POINTS: usize = 3;

/// Number of trailing rows to fit: `requested`, or the last half of `len`,
/// never fewer than [`MIN_FIT_POINTS`].
fn tail_len(len: usize, requested: Option<usize>) -> Result<usize> {
    let k = requested
        .unwrap_or(len.div_ceil(2))
        .max(MIN_FIT_POINTS)
        .min(len);
    if k < MIN_FIT_POINTS {
        return Err(Error::InsufficientData {
            needed: MIN_FIT_POINTS,
            found: k,
        });
    }
    Ok(k)
}

/// Least-squares line through `(x, y)`; returns `(slope, intercept, rms residual)`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> Result<(f64, f64, f64)> {
    let n = x.len();
    if n < 2 || y.len() != n {
        return Err(Error::InsufficientData {
            needed: 2,
            found: n.min(y.len()),
        });
    }
    let mx = x.iter().sum::<f64>() / n as f64;
    let my = y.iter().sum::<f64>() / n as f64;
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    if sxx.is_nan() || sxx <= 0.0 {
        return Err(Error::NotApplicable(
            "regressor is constant over the tail".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - (intercept + slope * a)).powi(2))
        .sum();
    Ok((slope, intercept, (ss / n as f64).sqrt()))
}

fn checked_ln(x: f64, what: &str) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x.ln())
    } else {
        Err(Error::NotApplicable(format!(
            "{what} must be positive for a log fit, got {x}"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LastBound {
    /// Decay exponent of the fattened measure in `q_n`, clamped at 0.
    pub beta: f64,
    /// `1 / (1 + beta)`.
    pub bound: f64,
    pub residual: f64,
}

/// Dimension bound from the decay `μ(A_n^(δ_n)) ~ q_n^-β`: the slope of
/// `log μ` against `log q` over the tail gives `-β`.
pub fn dim_bound_last(stats: &CoverStats, tail: Option<usize>) -> Result<LastBound> {
    let k = tail_len(stats.len(), tail)?;
    let rows = &stats.rows[stats.len() - k..];
    if rows.windows(2).any(|w| w[0].q >= w[1].q) {
        return Err(Error::NotApplicable(
            "q must increase strictly over the tail".into(),
        ));
    }
    let x = rows
        .iter()
        .map(|r| checked_ln(r.q as f64, "q"))
        .collect::<Result<Vec<_>>>()?;
    let y = rows
        .iter()
        .map(|r| checked_ln(r.fattened_measure, "fattened measure"))
        .collect::<Result<Vec<_>>>()?;
    let (slope, _, residual) = linear_fit(&x, &y)?;
    let beta = (-slope).max(0.0);
    Ok(LastBound {
        beta,
        bound: 1.0 / (1.0 + beta),
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectBound {
    pub alpha: f64,
    pub residual: f64,
}

/// Smallest `α` keeping `(2δ_n + r_n)^α q_n` bounded, estimated as the slope
/// of `log q_n` against `-log(2δ_n + r_n)` over the tail.
pub fn dim_bound_direct(stats: &CoverStats, tail: Option<usize>) -> Result<DirectBound> {
    let k = tail_len(stats.len(), tail)?;
    let rows = &stats.rows[stats.len() - k..];
    let shrinking = rows.windows(2).all(|w| w[1].r < w[0].r);
    let negligible = rows.last().is_some_and(|r| r.r <= 1e-12);
    if !(shrinking || negligible) {
        return Err(Error::NotApplicable(
            "r does not decrease over the tail".into(),
        ));
    }
    let x = rows
        .iter()
        .map(|r| checked_ln(2.0 * r.delta + r.r, "2δ + r").map(|v| -v))
        .collect::<Result<Vec<_>>>()?;
    let y = rows
        .iter()
        .map(|r| checked_ln(r.q as f64, "q"))
        .collect::<Result<Vec<_>>>()?;
    let (slope, _, residual) = linear_fit(&x, &y)?;
    Ok(DirectBound {
        alpha: slope.max(0.0),
        residual,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidExponent(alpha))
    }
}

/// `Σ diam(C)^α` over the components of a cover.
pub fn hausdorff_content_upper(cover: &IntervalSet, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(cover
        .intervals()
        .iter()
        .map(|c| c.length().powf(alpha))
        .sum())
}

/// As [`hausdorff_content_upper`] for an arbitrary interval family, which is
/// canonicalized first. Merging overlapping members never increases the sum.
pub fn hausdorff_content_of_family(cover: &[Interval], alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    hausdorff_content_upper(&IntervalSet::normalize(cover.iter().copied())?, alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContentRow {
    pub n: usize,
    /// Largest cover diameter.
    pub eta: f64,
    pub content: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContentOptions {
    /// Tail values above this count as unbounded.
    pub cap: f64,
    /// Largest per-step growth factor of the tail still read as bounded.
    pub max_growth: f64,
    pub tail: Option<usize>,
}

impl Default for ContentOptions {
    fn default() -> Self {
        ContentOptions {
            cap: 1e6,
            max_growth: 1.0 + 1e-6,
            tail: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContentReport {
    pub rows: Vec<ContentRow>,
    /// Tail bounded by the cap, not growing, and diameters shrinking.
    pub finite_limsup: bool,
    /// `Some(alpha)` when `finite_limsup` holds.
    pub dimension_bound: Option<f64>,
}

/// Content sums of a sequence of covers `(cover, η_n)` at a fixed exponent.
pub fn content_sequence(
    covers: &[(usize, IntervalSet)],
    alpha: f64,
    opts: &ContentOptions,
) -> Result<ContentReport> {
    check_alpha(alpha)?;
    let rows = covers
        .iter()
        .map(|(n, c)| {
            Ok(ContentRow {
                n: *n,
                eta: c.components().max_diameter,
                content: hausdorff_content_upper(c, alpha)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let finite_limsup = match tail_len(rows.len(), opts.tail) {
        Err(_) => false,
        Ok(k) => {
            let tail = &rows[rows.len() - k..];
            let bounded = tail.iter().all(|r| r.content <= opts.cap);
            let eta_vanishing = tail.windows(2).all(|w| w[1].eta < w[0].eta)
                || tail.last().is_some_and(|r| r.eta <= 1e-12);
            let x: Vec<f64> = (0..k).map(|i| i as f64).collect();
            let y: Vec<f64> = tail
                .iter()
                .map(|r| r.content.max(f64::MIN_POSITIVE).ln())
                .collect();
            let growth = linear_fit(&x, &y)
                .map(|(s, _, _)| s.exp())
                .unwrap_or(f64::INFINITY);
            bounded && eta_vanishing && growth <= opts.max_growth
        }
    };
    Ok(ContentReport {
        rows,
        finite_limsup,
        dimension_bound: finite_limsup.then_some(alpha),
    })
}
