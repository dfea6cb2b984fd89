//! Measure estimates for the spectrum of a limit operator from a sequence of
//! periodic approximants.

use rayon::prelude::*;

use super::bands::{band_spectrum_with, fiber_eigenvalues, kruger_radius, BandStrategy};
use super::cover::{spectral_cover_with, CoverSource};
use super::eigen::Solver;
use super::potential::PeriodicPotential;
use crate::compact_sets::{interval_hausdorff, Interval, IntervalSet};
use crate::convergence::{
    ConvergenceOptions, ConvergenceReport, ConvergenceRow, DeltaProvenance, Measure1D,
};
use crate::error::{Error, Result};

/// One periodic approximant with its fattening radius.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicApproximant {
    pub n: usize,
    pub potential: PeriodicPotential,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiberPipelineOptions {
    /// Total Floquet phase of the fiber used for the cover.
    pub phase: Vec<f64>,
    pub solver: Solver,
    /// When set, band spectra are computed too: `mu_raw` then holds the band
    /// spectrum measure and `band_fattened` the band-cover measure.
    pub bands: Option<BandStrategy>,
    pub convergence: ConvergenceOptions,
}

impl Default for FiberPipelineOptions {
    fn default() -> Self {
        FiberPipelineOptions {
            phase: vec![0.0],
            solver: Solver::Jacobi,
            bands: Some(BandStrategy::Exact1d),
            convergence: ConvergenceOptions::default(),
        }
    }
}

fn band_solver(strategy: BandStrategy, solver: Solver) -> Solver {
    match strategy {
        BandStrategy::Exact1d => solver,
        BandStrategy::Grid(_) => Solver::Tridiagonal,
    }
}

fn row_for(
    step: &PeriodicApproximant,
    mu: &Measure1D,
    opts: &FiberPipelineOptions,
) -> Result<ConvergenceRow> {
    let v = &step.potential;
    let tol = opts.convergence.set_tolerance;
    let r = kruger_radius(v.periods());
    let eig = fiber_eigenvalues(v, &opts.phase, opts.solver)?.values;
    let cover = spectral_cover_with(
        CoverSource::Fiber {
            eigenvalues: &eig,
            delta: step.delta,
            r,
        },
        tol,
    )?;
    let (mu_raw, band_fattened) = match opts.bands {
        Some(strategy) => {
            let spectrum = band_spectrum_with(v, strategy, band_solver(strategy, opts.solver))?;
            let raw = spectrum.union_with(tol)?;
            let fattened = spectral_cover_with(
                CoverSource::Bands {
                    spectrum: &spectrum,
                    delta: step.delta,
                },
                tol,
            )?;
            (mu.measure(&raw), Some(mu.measure(&fattened)))
        }
        None => {
            let points = eig
                .iter()
                .map(|&x| Interval::point(x))
                .collect::<Result<Vec<_>>>()?;
            (mu.measure(&IntervalSet::normalize_with(points, tol)?), None)
        }
    };
    let q = v.cell_size();
    Ok(ConvergenceRow {
        n: step.n,
        delta: step.delta,
        q,
        r,
        mu_raw,
        mu_fattened: mu.measure(&cover),
        q_times_delta: q as f64 * step.delta,
        band_fattened,
    })
}

/// Per step: the fiber cover `⋃ [λ_i(φ) - (δ_n + r_n), λ_i(φ) + (δ_n + r_n)]`
/// with `r_n` the Krüger radius, and its measure. Steps run in parallel; rows
/// come back in input order.
pub fn estimate_measure_via_fibers(
    seq: &[PeriodicApproximant],
    provenance: DeltaProvenance,
    mu: &Measure1D,
    opts: &FiberPipelineOptions,
) -> Result<ConvergenceReport> {
    if seq.iter().any(|s| !(s.delta.is_finite() && s.delta >= 0.0)) {
        let bad = seq
            .iter()
            .map(|s| s.delta)
            .find(|d| !(d.is_finite() && *d >= 0.0));
        return Err(Error::InvalidRadius(bad.unwrap_or(f64::NAN)));
    }
    let rows = seq
        .par_iter()
        .map(|step| row_for(step, mu, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport::from_rows(
        rows,
        provenance,
        &opts.convergence,
    ))
}

/// `d_H(Σ_n, Σ_N)` for every `n`, with `Σ_N` the last (finest) entry.
pub fn proxy_deltas(spectra: &[IntervalSet]) -> Result<Vec<f64>> {
    let finest = spectra.last().ok_or(Error::EmptySet)?;
    Ok(spectra
        .iter()
        .map(|s| interval_hausdorff(s, finest))
        .collect())
}

/// Band spectra of every potential, in parallel.
pub fn band_unions(
    potentials: &[PeriodicPotential],
    strategy: BandStrategy,
    solver: Solver,
) -> Result<Vec<IntervalSet>> {
    potentials
        .par_iter()
        .map(|v| band_spectrum_with(v, strategy, band_solver(strategy, solver))?.union())
        .collect()
}

/// Runs [`estimate_measure_via_fibers`] with proxy radii computed from the
/// band spectra of the sequence itself. The last step gets `δ = 0` by
/// construction; the report is flagged as proxy-based.
pub fn estimate_measure_with_proxy(
    seq: &[(usize, PeriodicPotential)],
    mu: &Measure1D,
    opts: &FiberPipelineOptions,
) -> Result<ConvergenceReport> {
    let strategy = opts.bands.unwrap_or(BandStrategy::Exact1d);
    let potentials: Vec<PeriodicPotential> = seq.iter().map(|(_, v)| v.clone()).collect();
    let deltas = proxy_deltas(&band_unions(&potentials, strategy, opts.solver)?)?;
    let steps: Vec<PeriodicApproximant> = seq
        .iter()
        .zip(deltas)
        .map(|((n, v), delta)| PeriodicApproximant {
            n: *n,
            potential: v.clone(),
            delta,
        })
        .collect();
    estimate_measure_via_fibers(&steps, DeltaProvenance::Proxy, mu, opts)
}
