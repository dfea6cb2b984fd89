//! JSON experiment configurations. Unknown keys are rejected everywhere.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use hausmeas::bloch_floquet::{BandStrategy, PeriodicPotential};
use hausmeas::convergence::Measure1D;

use crate::error::CliError;

/// Golden-mean continued fraction `[0; 1, 1, 1, ...]`, long enough for every
/// convergent whose denominator fits comfortably in a fiber matrix.
pub fn golden_terms() -> Vec<u64> {
    std::iter::once(0)
        .chain(std::iter::repeat_n(1, 40))
        .collect()
}

/// Approximation sequences understood by `measure`. The index `n` runs over
/// `n_min..=n_max` and means: grid size (`unit-grid`), Cantor level,
/// exponent of the period `base^n` (`free`), convergent index
/// (`almost-mathieu`), substitution level (`fibonacci`), or step number
/// (`custom`, counted from 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SequenceModel {
    #[serde(rename = "unit-grid", alias = "example-1.1")]
    UnitGrid {
        /// Joins `[0, alpha]` to every grid when set.
        #[serde(default)]
        alpha: Option<f64>,
    },
    Cantor {},
    Free {
        #[serde(default = "one")]
        dim: usize,
        #[serde(default = "two")]
        base: usize,
    },
    AlmostMathieu {
        lambda: f64,
        #[serde(default)]
        offset: f64,
        /// Continued fraction of the frequency; golden mean by default.
        #[serde(default)]
        cf_terms: Option<Vec<u64>>,
    },
    Fibonacci {
        coupling: f64,
    },
    Custom {
        steps: Vec<CustomStep>,
    },
}

fn one() -> usize {
    1
}

fn two() -> usize {
    2
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomStep {
    pub potential: PeriodicPotential,
    #[serde(default)]
    pub delta: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaMode {
    /// Model-specific analytic radius.
    Analytic,
    /// `d_H` against the finest approximant in the run.
    Proxy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverKind {
    /// Eigenvalues of one fiber, widened by `δ_n + r_n`.
    #[default]
    Fiber,
    /// Band spectrum widened by `δ_n`.
    Bands,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputPaths {
    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    #[serde(default = "default_tail")]
    pub tail: usize,
    #[serde(default = "default_tol")]
    pub convergence: f64,
    #[serde(default = "default_tol")]
    pub corollary: f64,
    #[serde(default = "default_set_tol")]
    pub set: f64,
}

fn default_tail() -> usize {
    3
}

fn default_tol() -> f64 {
    1e-2
}

fn default_set_tol() -> f64 {
    1e-12
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tail: default_tail(),
            convergence: default_tol(),
            corollary: default_tol(),
            set: default_set_tol(),
        }
    }
}

fn lebesgue() -> Measure1D {
    Measure1D::Lebesgue
}

fn zero_phase() -> Vec<f64> {
    vec![0.0]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureConfig {
    pub model: SequenceModel,
    #[serde(default)]
    pub n_min: Option<usize>,
    #[serde(default)]
    pub n_max: Option<usize>,
    /// Total Floquet phase per lattice direction; a single value is used for
    /// every direction.
    #[serde(default = "zero_phase")]
    pub phase: Vec<f64>,
    #[serde(default = "lebesgue")]
    pub measure: Measure1D,
    #[serde(default)]
    pub strategy: Option<BandStrategy>,
    #[serde(default)]
    pub delta_mode: Option<DeltaMode>,
    /// Constant of the Almost-Mathieu frequency bound `c·|α - p/q|^{1/2}`.
    #[serde(default)]
    pub delta_constant: Option<f64>,
    #[serde(default)]
    pub cover: CoverKind,
    #[serde(default)]
    pub output: OutputPaths,
    #[serde(default)]
    pub tolerances: Tolerances,
}

/// A single periodic potential for `bands`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PotentialModel {
    Free {
        periods: Vec<usize>,
    },
    AlmostMathieu {
        lambda: f64,
        /// Frequency `p/q` as `[p, q]`.
        alpha: (i64, u64),
        #[serde(default)]
        offset: f64,
    },
    Fibonacci {
        level: usize,
        coupling: f64,
    },
    Custom {
        potential: PeriodicPotential,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandsConfig {
    pub model: PotentialModel,
    #[serde(default)]
    pub strategy: Option<BandStrategy>,
    #[serde(default)]
    pub output: OutputPaths,
}

pub fn parse_measure_config(text: &str) -> Result<MeasureConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
}

pub fn parse_bands_config(text: &str) -> Result<BandsConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Output file locations: explicit paths are taken relative to the config
/// file's directory; missing ones default to `<config stem><suffix>` there.
pub fn resolve_outputs(
    config_path: &Path,
    output: &OutputPaths,
    [csv_suffix, json_suffix]: [&str; 2],
) -> (PathBuf, PathBuf) {
    let dir = config_path.parent().unwrap_or_else(|| Path::new(""));
    let stem = config_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "run".into());
    let place = |p: &Option<PathBuf>, suffix: &str| match p {
        Some(p) if p.is_absolute() => p.clone(),
        Some(p) => dir.join(p),
        None => dir.join(format!("{stem}{suffix}")),
    };
    (
        place(&output.csv, csv_suffix),
        place(&output.json, json_suffix),
    )
}
