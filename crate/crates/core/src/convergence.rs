//! Locally finite measures on the line and the fattened-measure pipelines.
//!
//! Given approximations `A_n` of a compact set `A` with `δ_n >= d_H(A_n, A)`,
//! the measures `μ(A_n^(δ_n))` converge to `μ(A)` while the raw measures
//! `μ(A_n)` need not. The reports here tabulate both so that the caller can
//! see the difference, together with the `q_n·δ_n` criterion under which the
//! raw Lebesgue measures converge as well.
//!
//! Every verdict is a finite-horizon heuristic: `d_H(A_n, A) -> 0` cannot be
//! certified from finitely many terms.

use serde::{Deserialize, Serialize};

use crate::compact_sets::{CompactSet, IntervalSet, Tolerance};
use crate::error::{Error, Result};

/// Piecewise-constant density on `[breakpoints[0], breakpoints[m]]`, with a
/// constant density outside that range.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseDensity {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    outside: f64,
}

/// Finitely many positive point masses.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<f64>,
    weights: Vec<f64>,
    prefix: Vec<f64>,
}

/// A locally finite Borel measure on the real line that can be evaluated
/// exactly on interval unions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureSpec", into = "MeasureSpec")]
pub enum Measure1D {
    Lebesgue,
    Density(PiecewiseDensity),
    Atomic(AtomicMeasure),
}

/// Serialized form of [`Measure1D`]:
/// `{"kind": "lebesgue"}`,
/// `{"kind": "density", "breakpoints": [...], "values": [...], "outside": 0}`,
/// `{"kind": "atomic", "atoms": [...], "weights": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MeasureSpec {
    Lebesgue {},
    Density {
        breakpoints: Vec<f64>,
        values: Vec<f64>,
        #[serde(default)]
        outside: f64,
    },
    Atomic {
        atoms: Vec<f64>,
        weights: Vec<f64>,
    },
}

impl TryFrom<MeasureSpec> for Measure1D {
    type Error = Error;

    fn try_from(spec: MeasureSpec) -> Result<Self> {
        match spec {
            MeasureSpec::Lebesgue {} => Ok(Measure1D::Lebesgue),
            MeasureSpec::Density {
                breakpoints,
                values,
                outside,
            } => Measure1D::density(breakpoints, values, outside),
            MeasureSpec::Atomic { atoms, weights } => Measure1D::atomic(atoms, weights),
        }
    }
}

impl From<Measure1D> for MeasureSpec {
    fn from(mu: Measure1D) -> Self {
        match mu {
            Measure1D::Lebesgue => MeasureSpec::Lebesgue {},
            Measure1D::Density(d) => MeasureSpec::Density {
                breakpoints: d.breakpoints,
                values: d.values,
                outside: d.outside,
            },
            Measure1D::Atomic(a) => MeasureSpec::Atomic {
                atoms: a.atoms,
                weights: a.weights,
            },
        }
    }
}

fn strictly_increasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

impl Measure1D {
    pub fn density(breakpoints: Vec<f64>, values: Vec<f64>, outside: f64) -> Result<Self> {
        if breakpoints.len() < 2 || values.len() != breakpoints.len() - 1 {
            return Err(Error::InvalidMeasure(
                "density needs at least two breakpoints and one value per piece".into(),
            ));
        }
        if breakpoints.iter().chain(&values).any(|x| !x.is_finite()) || !outside.is_finite() {
            return Err(Error::NonFinite("density parameter"));
        }
        if !strictly_increasing(&breakpoints) {
            return Err(Error::InvalidMeasure(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|&v| v < 0.0) || outside < 0.0 {
            return Err(Error::InvalidMeasure(
                "densities must be nonnegative".into(),
            ));
        }
        Ok(Measure1D::Density(PiecewiseDensity {
            breakpoints,
            values,
            outside,
        }))
    }

    pub fn atomic(atoms: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if atoms.is_empty() || atoms.len() != weights.len() {
            return Err(Error::InvalidMeasure(
                "atomic measure needs one weight per atom".into(),
            ));
        }
        if atoms.iter().chain(&weights).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("atomic measure parameter"));
        }
        if !strictly_increasing(&atoms) {
            return Err(Error::InvalidMeasure(
                "atoms must be strictly increasing".into(),
            ));
        }
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::InvalidMeasure("weights must be positive".into()));
        }
        let mut prefix = Vec::with_capacity(weights.len() + 1);
        prefix.push(0.0);
        for w in &weights {
            prefix.push(prefix.last().unwrap() + w);
        }
        Ok(Measure1D::Atomic(AtomicMeasure {
            atoms,
            weights,
            prefix,
        }))
    }

    /// Exact measure of a canonical interval union. Closed intervals include
    /// their endpoints, so atoms on an endpoint count.
    pub fn measure(&self, a: &IntervalSet) -> f64 {
        match self {
            Measure1D::Lebesgue => a.lebesgue(),
            Measure1D::Density(d) => {
                let bp = &d.breakpoints;
                let inside: f64 = d
                    .values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0.0)
                    .map(|(k, v)| v * a.overlap_length(bp[k], bp[k + 1]))
                    .sum();
                let covered = a.overlap_length(bp[0], bp[bp.len() - 1]);
                inside + d.outside * (a.lebesgue() - covered).max(0.0)
            }
            Measure1D::Atomic(m) => a
                .intervals()
                .iter()
                .map(|iv| {
                    let start = m.atoms.partition_point(|&x| x < iv.lo());
                    let end = m.atoms.partition_point(|&x| x <= iv.hi());
                    m.prefix[end] - m.prefix[start]
                })
                .sum(),
        }
    }
}

/// Free-function form of [`Measure1D::measure`].
pub fn measure(mu: &Measure1D, a: &IntervalSet) -> f64 {
    mu.measure(a)
}

/// One step of an approximating sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationRecord {
    /// Sequence label (level, convergent index, ...).
    pub n: usize,
    pub set: CompactSet,
    /// Fattening radius, an upper bound on `d_H(A_n, A)`.
    pub delta: f64,
    /// Number of connected components of `set`.
    pub q: usize,
    /// Largest component diameter of `set`.
    pub r: f64,
}

impl ApproximationRecord {
    /// Computes `q` and `r` from the set.
    pub fn new(n: usize, set: CompactSet, delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::InvalidRadius(delta));
        }
        let q = set.component_count();
        let r = match &set {
            CompactSet::Intervals(s) => s.components().max_diameter,
            CompactSet::Points(_) => 0.0,
        };
        Ok(ApproximationRecord {
            n,
            set,
            delta,
            q,
            r,
        })
    }
}

/// Where the δ_n column came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaProvenance {
    /// Exact or rigorous upper bound on `d_H(A_n, A)`.
    Exact,
    /// Literature-derived analytic bound with a user-supplied constant.
    Analytic,
    /// `d_H(A_n, A_N)` against the finest computed approximant; not certified.
    Proxy,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceOptions {
    /// Number of trailing rows inspected by the stability heuristics.
    pub tail: usize,
    /// Spread allowed among the trailing fattened measures.
    pub tolerance: f64,
    /// Threshold for the extrapolated tail of `q_n·δ_n`.
    pub corollary_tolerance: f64,
    pub set_tolerance: Tolerance,
}

impl Default for ConvergenceOptions {
    fn default() -> Self {
        ConvergenceOptions {
            tail: 3,
            tolerance: 1e-2,
            corollary_tolerance: 1e-2,
            set_tolerance: Tolerance::DEFAULT,
        }
    }
}

/// One row of a [`ConvergenceReport`]. The first seven fields form the CSV
/// column contract.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub delta: f64,
    pub q: usize,
    pub r: f64,
    pub mu_raw: f64,
    pub mu_fattened: f64,
    pub q_times_delta: f64,
    /// Band-fattening estimate, reported by the periodic pipelines when the
    /// fattened column holds a fiber cover.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub band_fattened: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryVerdict {
    pub rows: Vec<(usize, f64)>,
    /// Extrapolated limit of `q_n·δ_n`.
    pub tail_estimate: f64,
    pub holds: bool,
    /// `lim Leb(A_n)` estimate, reported only when the criterion holds.
    pub measure_estimate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSummary {
    pub tail: usize,
    pub tolerance: f64,
    pub fattened_converged: bool,
    pub final_fattened: f64,
    pub final_raw: f64,
    pub max_delta: f64,
    pub corollary_holds: bool,
    pub corollary_tail_estimate: f64,
    pub corollary_measure_estimate: Option<f64>,
    pub delta_provenance: DeltaProvenance,
    pub caveat: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    pub summary: ConvergenceSummary,
}

const CAVEAT: &str = "finite-horizon estimate: convergence of the approximants in the \
Hausdorff distance is assumed, not certified by these rows";

impl ConvergenceReport {
    /// Assembles the summary block from precomputed rows.
    pub fn from_rows(
        rows: Vec<ConvergenceRow>,
        provenance: DeltaProvenance,
        opts: &ConvergenceOptions,
    ) -> Self {
        let fattened: Vec<f64> = rows.iter().map(|r| r.mu_fattened).collect();
        let qd: Vec<f64> = rows.iter().map(|r| r.q_times_delta).collect();
        let tail_estimate = tail_limit_estimate(&qd);
        let corollary_holds = !rows.is_empty() && tail_estimate.abs() < opts.corollary_tolerance;
        let last = rows.last();
        let summary = ConvergenceSummary {
            tail: opts.tail,
            tolerance: opts.tolerance,
            fattened_converged: tail_is_stable(&fattened, opts.tail, opts.tolerance),
            final_fattened: last.map_or(f64::NAN, |r| r.mu_fattened),
            final_raw: last.map_or(f64::NAN, |r| r.mu_raw),
            max_delta: rows.iter().map(|r| r.delta).fold(0.0, f64::max),
            corollary_holds,
            corollary_tail_estimate: tail_estimate,
            corollary_measure_estimate: if corollary_holds {
                last.map(|r| r.mu_raw)
            } else {
                None
            },
            delta_provenance: provenance,
            caveat: CAVEAT.to_string(),
        };
        ConvergenceReport { rows, summary }
    }
}

/// True when the last `k` values exist and differ by less than `tol`.
pub fn tail_is_stable(values: &[f64], k: usize, tol: f64) -> bool {
    if k == 0 || values.len() < k {
        return false;
    }
    let tail = &values[values.len() - k..];
    let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
    hi - lo < tol
}

/// Limit estimate for a sequence from its last three terms.
///
/// Applies Aitken's Δ² extrapolation when the trailing increments shrink with
/// a common sign (geometric-like convergence); otherwise returns the last
/// term.
pub fn tail_limit_estimate(values: &[f64]) -> f64 {
    let n = values.len();
    if n == 0 {
        return f64::NAN;
    }
    let last = values[n - 1];
    if n < 3 {
        return last;
    }
    let (x0, x1, x2) = (values[n - 3], values[n - 2], last);
    let d1 = x1 - x0;
    let d2 = x2 - x1;
    let contracting = d1 != 0.0 && d1.signum() == d2.signum() && d2.abs() < d1.abs();
    if !contracting {
        return last;
    }
    let estimate = x2 - d2 * d2 / (d2 - d1);
    if estimate.is_finite() {
        estimate
    } else {
        last
    }
}

/// Tabulates `μ(A_n)` and `μ(A_n^(δ_n))` for every record.
pub fn fattened_measure_sequence(
    seq: &[ApproximationRecord],
    mu: &Measure1D,
    opts: &ConvergenceOptions,
) -> Result<ConvergenceReport> {
    let rows = seq
        .iter()
        .map(|rec| {
            let raw = rec.set.to_interval_set();
            let fattened = raw.fatten_with(rec.delta, opts.set_tolerance)?;
            Ok(ConvergenceRow {
                n: rec.n,
                delta: rec.delta,
                q: rec.q,
                r: rec.r,
                mu_raw: mu.measure(&raw),
                mu_fattened: mu.measure(&fattened),
                q_times_delta: rec.q as f64 * rec.delta,
                band_fattened: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport::from_rows(
        rows,
        DeltaProvenance::Exact,
        opts,
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemicontinuityReport {
    pub limit_measure: f64,
    pub measures: Vec<f64>,
    /// `sup_{k >= n} μ(A_k)` over the observed terms.
    pub suffix_sup: Vec<f64>,
    /// Supremum over the last `tail` terms.
    pub limsup_estimate: f64,
    pub holds: bool,
}

/// Empirical check of `μ(A) >= limsup μ(A_n)`.
pub fn semicontinuity_check(
    seq: &[CompactSet],
    limit: &CompactSet,
    mu: &Measure1D,
    tail: usize,
    tolerance: f64,
) -> Result<SemicontinuityReport> {
    if seq.is_empty() {
        return Err(Error::InsufficientData {
            needed: 1,
            found: 0,
        });
    }
    let measures: Vec<f64> = seq
        .iter()
        .map(|a| mu.measure(&a.to_interval_set()))
        .collect();
    let mut suffix_sup = measures.clone();
    for k in (0..suffix_sup.len().saturating_sub(1)).rev() {
        suffix_sup[k] = suffix_sup[k].max(suffix_sup[k + 1]);
    }
    let start = measures.len().saturating_sub(tail.max(1));
    let limsup_estimate = suffix_sup[start];
    let limit_measure = mu.measure(&limit.to_interval_set());
    Ok(SemicontinuityReport {
        limit_measure,
        holds: limit_measure >= limsup_estimate - tolerance,
        measures,
        suffix_sup,
        limsup_estimate,
    })
}

/// The `q_n·δ_n -> 0` criterion under which `Leb(A) = lim Leb(A_n)`.
pub fn corollary_criterion(seq: &[ApproximationRecord], tolerance: f64) -> CorollaryVerdict {
    let rows: Vec<(usize, f64)> = seq.iter().map(|r| (r.n, r.q as f64 * r.delta)).collect();
    let values: Vec<f64> = rows.iter().map(|&(_, v)| v).collect();
    let tail_estimate = tail_limit_estimate(&values);
    let holds = !rows.is_empty() && tail_estimate.abs() < tolerance;
    let measure_estimate = if holds {
        seq.last().map(|r| r.set.to_interval_set().lebesgue())
    } else {
        None
    };
    CorollaryVerdict {
        rows,
        tail_estimate,
        holds,
        measure_estimate,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub x: f64,
    /// Indicator of the last fattened approximant at `x`.
    pub tail_indicator: bool,
    /// Whether the last `tail` fattened indicators agree with each other.
    pub tail_stable: bool,
    pub limit_indicator: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    pub all_agree: bool,
}

/// Compares `1_{A_n^(δ_n)}(x)` along the tail with `1_A(x)` at each probe.
pub fn indicator_convergence_probe(
    seq: &[ApproximationRecord],
    limit: &CompactSet,
    probes: &[f64],
    tail: usize,
    tol: Tolerance,
) -> Result<ProbeReport> {
    if seq.is_empty() {
        return Err(Error::InsufficientData {
            needed: 1,
            found: 0,
        });
    }
    if probes.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("probe"));
    }
    let start = seq.len().saturating_sub(tail.max(1));
    let fattened = seq[start..]
        .iter()
        .map(|rec| rec.set.to_interval_set().fatten_with(rec.delta, tol))
        .collect::<Result<Vec<_>>>()?;
    let limit = limit.to_interval_set();
    let rows: Vec<ProbeRow> = probes
        .iter()
        .map(|&x| {
            let inds: Vec<bool> = fattened.iter().map(|s| s.contains_point(x, tol)).collect();
            let tail_indicator = *inds.last().unwrap();
            let limit_indicator = limit.contains_point(x, tol);
            ProbeRow {
                x,
                tail_indicator,
                tail_stable: inds.iter().all(|&b| b == tail_indicator),
                limit_indicator,
                agrees: tail_indicator == limit_indicator,
            }
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agrees);
    Ok(ProbeReport { rows, all_agree })
}
