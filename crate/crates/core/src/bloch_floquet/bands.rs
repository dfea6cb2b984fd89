use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eigen::{solve, Solver, Spectrum};
use super::fiber::build_fiber;
use super::potential::PeriodicPotential;
use crate::compact_sets::{Interval, IntervalSet, Tolerance};
use crate::error::{Error, Result};

/// How band edges are located.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BandStrategy {
    /// Periodic and antiperiodic fibers only; valid for `d = 1`.
    #[serde(rename = "exact_1d")]
    Exact1d,
    /// `M` equally spaced total phases per lattice direction.
    #[serde(rename = "grid")]
    Grid(usize),
}

/// Per-index eigenvalue ranges `[min λ_i, max λ_i]` over the phase torus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandSpectrum {
    pub bands: Vec<(f64, f64)>,
    /// Bound on the absolute error of every reported band edge.
    pub error_bound: f64,
}

impl BandSpectrum {
    pub fn widths(&self) -> Vec<f64> {
        self.bands.iter().map(|(lo, hi)| hi - lo).collect()
    }

    /// The spectrum as a canonical interval union.
    pub fn union(&self) -> Result<IntervalSet> {
        self.union_with(Tolerance::DEFAULT)
    }

    pub fn union_with(&self, tol: Tolerance) -> Result<IntervalSet> {
        let raw = self
            .bands
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        IntervalSet::normalize_with(raw, tol)
    }

    /// Indices whose width exceeds `kruger_radius(periods) + 2·error_bound`.
    pub fn kruger_violations(&self, periods: &[usize]) -> Vec<usize> {
        let limit = kruger_radius(periods) + 2.0 * self.error_bound;
        self.widths()
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > limit)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Bandwidth bound `Σ_j 4π / p_j`.
pub fn kruger_radius(periods: &[usize]) -> f64 {
    periods.iter().map(|&p| 4.0 * PI / p as f64).sum()
}

/// Sorted eigenvalues of the fiber at total phase `phase`.
pub fn fiber_eigenvalues(v: &PeriodicPotential, phase: &[f64], solver: Solver) -> Result<Spectrum> {
    solve(&build_fiber(v, phase)?, solver)
}

/// Band spectrum with the default solver choice: Jacobi for the two
/// `exact_1d` fibers, tridiagonal QL for grid sweeps.
pub fn band_spectrum(v: &PeriodicPotential, strategy: BandStrategy) -> Result<BandSpectrum> {
    let solver = match strategy {
        BandStrategy::Exact1d => Solver::Jacobi,
        BandStrategy::Grid(_) => Solver::Tridiagonal,
    };
    band_spectrum_with(v, strategy, solver)
}

pub fn band_spectrum_with(
    v: &PeriodicPotential,
    strategy: BandStrategy,
    solver: Solver,
) -> Result<BandSpectrum> {
    match strategy {
        BandStrategy::Exact1d => {
            if v.dim() != 1 {
                return Err(Error::StrategyMismatch(format!(
                    "exact_1d needs a one-dimensional potential, got dimension {}",
                    v.dim()
                )));
            }
            let periodic = fiber_eigenvalues(v, &[0.0], solver)?;
            let anti = fiber_eigenvalues(v, &[0.5], solver)?;
            let bands = periodic
                .values
                .iter()
                .zip(&anti.values)
                .map(|(&a, &b)| (a.min(b), a.max(b)))
                .collect();
            Ok(BandSpectrum {
                bands,
                error_bound: periodic.error_bound.max(anti.error_bound),
            })
        }
        BandStrategy::Grid(m) => {
            if m < 2 {
                return Err(Error::StrategyMismatch(format!(
                    "grid needs at least 2 samples per direction, got {m}"
                )));
            }
            grid_spectrum(v, m, solver)
        }
    }
}

/// Grid indices with one representative per pair `{k, -k mod M}`; the
/// fibers at `φ` and `-φ` are complex conjugates and share their spectrum.
fn grid_representatives(dim: usize, m: usize) -> Vec<[usize; 2]> {
    let neg = |k: usize| (m - k) % m;
    let mut out = Vec::new();
    match dim {
        1 => {
            for k in 0..m {
                if k <= neg(k) {
                    out.push([k, 0]);
                }
            }
        }
        _ => {
            for k0 in 0..m {
                for k1 in 0..m {
                    if (k0, k1) <= (neg(k0), neg(k1)) {
                        out.push([k0, k1]);
                    }
                }
            }
        }
    }
    out
}

fn grid_spectrum(v: &PeriodicPotential, m: usize, solver: Solver) -> Result<BandSpectrum> {
    let dim = v.dim();
    let q = v.cell_size();
    let samples = grid_representatives(dim, m);
    let identity = || (vec![f64::INFINITY; q], vec![f64::NEG_INFINITY; q], 0.0f64);
    let (lo, hi, solver_bound) = samples
        .par_iter()
        .map(|k| {
            let phase: Vec<f64> = k[..dim].iter().map(|&kj| kj as f64 / m as f64).collect();
            let s = fiber_eigenvalues(v, &phase, solver)?;
            Ok((s.values.clone(), s.values, s.error_bound))
        })
        .try_reduce(identity, |(mut lo, mut hi, e), (lo2, hi2, e2)| {
            for i in 0..q {
                lo[i] = lo[i].min(lo2[i]);
                hi[i] = hi[i].max(hi2[i]);
            }
            Ok((lo, hi, e.max(e2)))
        })?;
    let lipschitz = 4.0 * PI * dim as f64;
    Ok(BandSpectrum {
        bands: lo.into_iter().zip(hi).collect(),
        error_bound: lipschitz * 0.5 / m as f64 + solver_bound,
    })
}
