//! Measure and dimension estimates for compact subsets of the real line that
//! arise as Hausdorff limits, with tooling for spectra of periodic
//! approximations to aperiodic discrete Schrödinger operators.
//!
//! - [`compact_sets`]: interval unions, fattenings, Hausdorff distance.
//! - [`convergence`]: measures on the line and fattened-measure pipelines.
//! - [`bloch_floquet`]: fiber matrices, band spectra, spectral covers.
//! - [`dimension`]: Hausdorff content of covers and dimension bounds.
//! - [`models`]: reference potentials and approximation sequences.
//! - [`io`]: CSV and JSON formats.

pub mod bloch_floquet;
pub mod compact_sets;
pub mod convergence;
pub mod dimension;
pub mod error;
pub mod io;
pub mod models;

pub use error::{Error, Result};
