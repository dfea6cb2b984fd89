//! Periodic discrete Schrödinger operators `Δ + V` on `Z^d`, `d ≤ 2`.
//!
//! Fibers are indexed by the total Floquet phase `φ_j ∈ [0, 1)` across one
//! period in direction `j`, so `ψ(n + p_j e_j) = e^{2πiφ_j} ψ(n)`.

mod bands;
mod cover;
mod eigen;
mod fiber;
mod pipeline;
mod potential;

pub use bands::{
    band_spectrum, band_spectrum_with, fiber_eigenvalues, kruger_radius, BandSpectrum, BandStrategy,
};
pub use cover::{spectral_cover, spectral_cover_with, CoverSource};
pub use eigen::{
    eigenvalues, eigh, solve, EigenDecomposition, Solver, Spectrum, HERMITIAN_TOLERANCE,
};
pub use fiber::{build_fiber, unit_phase, FiberMatrix};
pub use pipeline::{
    band_unions, estimate_measure_via_fibers, estimate_measure_with_proxy, proxy_deltas,
    FiberPipelineOptions, PeriodicApproximant,
};
pub use potential::{
    stabilizer_contains, PeriodicPotential, PotentialRef, PotentialSpec, SampledPotential,
    StabilizerVerdict, MAX_CELL,
};
