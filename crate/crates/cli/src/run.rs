//! Subcommand implementations. Each `cmd_*` returns the text to print on
//! stdout; files are written before it returns.

use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use serde::Serialize;

use hausmeas::bloch_floquet::{
    band_spectrum, estimate_measure_via_fibers, estimate_measure_with_proxy, kruger_radius,
    BandSpectrum, BandStrategy, FiberPipelineOptions, PeriodicApproximant, PeriodicPotential,
    Solver,
};
use hausmeas::compact_sets::{hausdorff_distance, Tolerance};
use hausmeas::convergence::{
    fattened_measure_sequence, ApproximationRecord, ConvergenceOptions, ConvergenceReport,
    DeltaProvenance,
};
use hausmeas::dimension::{dim_bound_direct, dim_bound_last};
use hausmeas::io::{
    format_sig, parse_compact_set, read_cover_stats, write_bands_csv, write_report_csv,
};
use hausmeas::models::{
    almost_mathieu, almost_mathieu_delta_bound, cantor_approximation, convergents,
    fibonacci_potential, free_potential, padded_unit_grid, unit_grid, Rational,
};

use crate::config::{
    golden_terms, parse_bands_config, parse_measure_config, read_text, resolve_outputs,
    BandsConfig, CoverKind, DeltaMode, MeasureConfig, PotentialModel, SequenceModel,
};
use crate::error::CliError;

/// Digits used for one-line summaries.
const SUMMARY_DIGITS: usize = 6;
/// Deepest Cantor level the CLI builds (2^24 intervals).
const MAX_CLI_CANTOR_LEVEL: usize = 24;
/// Largest single cell accepted from the measure pipeline's model generators.
const MAX_MODEL_CELL: usize = 4096;

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| config_err(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn cmd_hausdorff(a: &Path, b: &Path) -> Result<String, CliError> {
    let a = parse_compact_set(&read_text(a)?)?;
    let b = parse_compact_set(&read_text(b)?)?;
    Ok(format!("{}\n", format_sig(hausdorff_distance(&a, &b), 12)))
}

fn default_range(model: &SequenceModel) -> (usize, usize) {
    match model {
        SequenceModel::UnitGrid { .. } => (1, 100),
        SequenceModel::Cantor {} => (1, 10),
        SequenceModel::Free { .. } => (1, 7),
        SequenceModel::AlmostMathieu { .. } => (1, 12),
        SequenceModel::Fibonacci { .. } => (1, 10),
        SequenceModel::Custom { steps } => (1, steps.len()),
    }
}

fn convergence_options(cfg: &MeasureConfig) -> Result<ConvergenceOptions, CliError> {
    let t = &cfg.tolerances;
    for (name, x) in [
        ("convergence", t.convergence),
        ("corollary", t.corollary),
        ("set", t.set),
    ] {
        if !(x.is_finite() && x >= 0.0) {
            return Err(config_err(format!(
                "tolerance {name} must be finite and nonnegative"
            )));
        }
    }
    if t.tail == 0 {
        return Err(config_err("tolerances.tail must be positive"));
    }
    Ok(ConvergenceOptions {
        tail: t.tail,
        tolerance: t.convergence,
        corollary_tolerance: t.corollary,
        set_tolerance: Tolerance(t.set),
    })
}

/// Value of a finite continued fraction.
fn continued_fraction_value(terms: &[u64]) -> f64 {
    let mut x = 0.0;
    for (i, &a) in terms.iter().enumerate().rev() {
        x = if i + 1 == terms.len() {
            a as f64
        } else {
            a as f64 + 1.0 / x
        };
    }
    x
}

enum Sequence {
    Sets(Vec<ApproximationRecord>),
    Periodic {
        steps: Vec<(usize, PeriodicPotential)>,
        /// Analytic radii with their provenance, or `None` for proxy mode.
        deltas: Option<(Vec<f64>, DeltaProvenance)>,
    },
}

fn build_sequence(cfg: &MeasureConfig, range: (usize, usize)) -> Result<Sequence, CliError> {
    let (lo, hi) = range;
    let ns = lo..=hi;
    match &cfg.model {
        SequenceModel::UnitGrid { alpha } => {
            if cfg.delta_mode == Some(DeltaMode::Proxy) {
                return Err(config_err("proxy radii apply to periodic models only"));
            }
            let recs = ns
                .map(|n| match alpha {
                    Some(a) => padded_unit_grid(n, *a),
                    None => unit_grid(n),
                })
                .collect::<Result<_, _>>()?;
            Ok(Sequence::Sets(recs))
        }
        SequenceModel::Cantor {} => {
            if cfg.delta_mode == Some(DeltaMode::Proxy) {
                return Err(config_err("proxy radii apply to periodic models only"));
            }
            if hi > MAX_CLI_CANTOR_LEVEL {
                return Err(config_err(format!(
                    "cantor levels above {MAX_CLI_CANTOR_LEVEL} are not supported"
                )));
            }
            let recs = ns
                .map(|n| cantor_approximation(n as u32))
                .collect::<Result<_, _>>()?;
            Ok(Sequence::Sets(recs))
        }
        SequenceModel::Free { dim, base } => {
            if !(1..=2).contains(dim) || *base < 2 {
                return Err(config_err("free model needs dim in {1, 2} and base >= 2"));
            }
            let mut steps = Vec::new();
            for n in ns {
                let p = u32::try_from(n)
                    .ok()
                    .and_then(|e| base.checked_pow(e))
                    .filter(|p| p.pow(*dim as u32) <= MAX_MODEL_CELL)
                    .ok_or_else(|| config_err(format!("cell too large at n = {n}")))?;
                steps.push((n, free_potential(&vec![p; *dim])?));
            }
            // Every free approximant has exactly the limit spectrum.
            let deltas = match cfg.delta_mode {
                Some(DeltaMode::Proxy) => None,
                _ => Some((vec![0.0; steps.len()], DeltaProvenance::Exact)),
            };
            Ok(Sequence::Periodic { steps, deltas })
        }
        SequenceModel::AlmostMathieu {
            lambda,
            offset,
            cf_terms,
        } => {
            let terms = cf_terms.clone().unwrap_or_else(golden_terms);
            let cs = convergents(&terms, hi)?;
            let alpha = continued_fraction_value(&terms);
            let mut steps = Vec::new();
            let mut chosen: Vec<Rational> = Vec::new();
            for n in ns {
                let c = cs[n - 1];
                if c.den() as usize > MAX_MODEL_CELL {
                    return Err(config_err(format!(
                        "period {} too large at n = {n}",
                        c.den()
                    )));
                }
                steps.push((n, almost_mathieu(*lambda, c, *offset)?));
                chosen.push(c);
            }
            let deltas = match cfg.delta_mode {
                Some(DeltaMode::Analytic) => {
                    let c = cfg.delta_constant.ok_or_else(|| {
                        config_err("analytic radii for almost-mathieu need delta_constant")
                    })?;
                    if !(c.is_finite() && c >= 0.0) {
                        return Err(config_err("delta_constant must be finite and nonnegative"));
                    }
                    let ds = chosen
                        .iter()
                        .map(|&r| almost_mathieu_delta_bound(c, alpha, r))
                        .collect();
                    Some((ds, DeltaProvenance::Analytic))
                }
                _ => None,
            };
            Ok(Sequence::Periodic { steps, deltas })
        }
        SequenceModel::Fibonacci { coupling } => {
            if cfg.delta_mode == Some(DeltaMode::Analytic) {
                return Err(config_err(
                    "no analytic radius is available for the fibonacci model",
                ));
            }
            let steps = ns
                .map(|n| Ok((n, fibonacci_potential(n, *coupling)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            if steps.iter().any(|(_, v)| v.cell_size() > MAX_MODEL_CELL) {
                return Err(config_err("fibonacci level too large"));
            }
            Ok(Sequence::Periodic {
                steps,
                deltas: None,
            })
        }
        SequenceModel::Custom { steps: custom } => {
            if hi > custom.len() {
                return Err(config_err(format!(
                    "only {} custom steps given",
                    custom.len()
                )));
            }
            let chosen = &custom[lo - 1..hi];
            let steps = chosen
                .iter()
                .zip(ns)
                .map(|(s, n)| (n, s.potential.clone()))
                .collect();
            let all_given: Option<Vec<f64>> = chosen.iter().map(|s| s.delta).collect();
            let deltas = match (cfg.delta_mode, all_given) {
                (Some(DeltaMode::Proxy), _) => None,
                (_, Some(ds)) => Some((ds, DeltaProvenance::Analytic)),
                (Some(DeltaMode::Analytic), None) => {
                    return Err(config_err(
                        "analytic mode needs a delta for every custom step",
                    ))
                }
                (None, None) => None,
            };
            Ok(Sequence::Periodic { steps, deltas })
        }
    }
}

/// Runs the configured pipeline without touching the filesystem.
pub fn run_measure(cfg: &MeasureConfig) -> Result<ConvergenceReport, CliError> {
    let (dlo, dhi) = default_range(&cfg.model);
    let range = (cfg.n_min.unwrap_or(dlo), cfg.n_max.unwrap_or(dhi));
    if range.0 == 0 || range.0 > range.1 {
        return Err(config_err(format!(
            "need 1 <= n_min <= n_max, got {}..{}",
            range.0, range.1
        )));
    }
    let opts = convergence_options(cfg)?;
    match build_sequence(cfg, range)? {
        Sequence::Sets(recs) => {
            if cfg.cover == CoverKind::Bands {
                return Err(config_err("band covers apply to periodic models only"));
            }
            Ok(fattened_measure_sequence(&recs, &cfg.measure, &opts)?)
        }
        Sequence::Periodic { steps, deltas } => {
            let dim = steps[0].1.dim();
            if steps.iter().any(|(_, v)| v.dim() != dim) {
                return Err(config_err(
                    "all potentials must share one lattice dimension",
                ));
            }
            let phase = match cfg.phase.len() {
                1 => vec![cfg.phase[0]; dim],
                k if k == dim => cfg.phase.clone(),
                k => {
                    return Err(config_err(format!(
                        "phase has {k} entries for dimension {dim}"
                    )))
                }
            };
            if phase.iter().any(|x| !x.is_finite()) {
                return Err(config_err("phase must be finite"));
            }
            let strategy = cfg.strategy.unwrap_or(if dim == 1 {
                BandStrategy::Exact1d
            } else {
                BandStrategy::Grid(32)
            });
            let pipeline = FiberPipelineOptions {
                phase,
                solver: Solver::Jacobi,
                bands: Some(strategy),
                convergence: opts,
            };
            let report = match deltas {
                Some((ds, provenance)) => {
                    let seq: Vec<PeriodicApproximant> = steps
                        .into_iter()
                        .zip(ds)
                        .map(|((n, potential), delta)| PeriodicApproximant {
                            n,
                            potential,
                            delta,
                        })
                        .collect();
                    estimate_measure_via_fibers(&seq, provenance, &cfg.measure, &pipeline)?
                }
                None => estimate_measure_with_proxy(&steps, &cfg.measure, &pipeline)?,
            };
            Ok(match cfg.cover {
                CoverKind::Fiber => report,
                CoverKind::Bands => {
                    let provenance = report.summary.delta_provenance;
                    let rows = report
                        .rows
                        .into_iter()
                        .map(|mut r| {
                            r.mu_fattened = r.band_fattened.unwrap_or(r.mu_fattened);
                            r
                        })
                        .collect();
                    ConvergenceReport::from_rows(rows, provenance, &opts)
                }
            })
        }
    }
}

fn provenance_name(p: DeltaProvenance) -> &'static str {
    match p {
        DeltaProvenance::Exact => "exact",
        DeltaProvenance::Analytic => "analytic",
        DeltaProvenance::Proxy => "proxy",
    }
}

pub fn cmd_measure(config_path: &Path) -> Result<String, CliError> {
    let cfg = parse_measure_config(&read_text(config_path)?)?;
    let report = run_measure(&cfg)?;
    let (csv_path, json_path) = resolve_outputs(config_path, &cfg.output, [".csv", ".report.json"]);
    write_report_csv(&report, create(&csv_path)?)?;
    write_json(&json_path, &report)?;

    let s = &report.summary;
    let mut out = String::new();
    let g = |x: f64| format_sig(x, SUMMARY_DIGITS);
    let _ = writeln!(out, "rows: {}", report.rows.len());
    let _ = writeln!(out, "final fattened measure: {}", g(s.final_fattened));
    let _ = writeln!(out, "final raw measure: {}", g(s.final_raw));
    let _ = writeln!(
        out,
        "fattened tail stable: {}",
        if s.fattened_converged { "yes" } else { "no" }
    );
    let _ = writeln!(out, "delta: {}", provenance_name(s.delta_provenance));
    match s.corollary_measure_estimate {
        Some(m) if s.corollary_holds => {
            let _ = writeln!(
                out,
                "q*delta criterion: holds (limit of raw measures {})",
                g(m)
            );
        }
        _ => {
            let _ = writeln!(
                out,
                "q*delta criterion: fails (tail estimate {})",
                g(s.corollary_tail_estimate)
            );
        }
    }
    let _ = writeln!(out, "csv: {}", csv_path.display());
    let _ = writeln!(out, "json: {}", json_path.display());
    Ok(out)
}

fn bands_potential(model: &PotentialModel) -> Result<PeriodicPotential, CliError> {
    Ok(match model {
        PotentialModel::Free { periods } => free_potential(periods)?,
        PotentialModel::AlmostMathieu {
            lambda,
            alpha,
            offset,
        } => almost_mathieu(*lambda, Rational::new(alpha.0, alpha.1)?, *offset)?,
        PotentialModel::Fibonacci { level, coupling } => fibonacci_potential(*level, *coupling)?,
        PotentialModel::Custom { potential } => potential.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandsOutcome {
    pub periods: Vec<usize>,
    pub spectrum: BandSpectrum,
    pub kruger_radius: f64,
    /// Zero-based band indices wider than `kruger_radius + 2·error_bound`.
    pub violations: Vec<usize>,
}

pub fn run_bands(cfg: &BandsConfig) -> Result<BandsOutcome, CliError> {
    let v = bands_potential(&cfg.model)?;
    if v.cell_size() > MAX_MODEL_CELL {
        return Err(config_err("cell too large"));
    }
    let strategy = cfg.strategy.unwrap_or(if v.dim() == 1 {
        BandStrategy::Exact1d
    } else {
        BandStrategy::Grid(32)
    });
    let spectrum = band_spectrum(&v, strategy)?;
    Ok(BandsOutcome {
        periods: v.periods().to_vec(),
        kruger_radius: kruger_radius(v.periods()),
        violations: spectrum.kruger_violations(v.periods()),
        spectrum,
    })
}

/// Prints the band table summary; exits with the numerical-failure code when
/// any bandwidth breaks the Krüger bound.
pub fn cmd_bands(config_path: &Path) -> Result<(String, i32), CliError> {
    let cfg = parse_bands_config(&read_text(config_path)?)?;
    let outcome = run_bands(&cfg)?;
    let (csv_path, json_path) =
        resolve_outputs(config_path, &cfg.output, [".bands.csv", ".bands.json"]);
    write_bands_csv(&outcome.spectrum, create(&csv_path)?)?;
    write_json(&json_path, &outcome.spectrum)?;

    let g = |x: f64| format_sig(x, SUMMARY_DIGITS);
    let mut out = String::new();
    let union = outcome.spectrum.union()?;
    let _ = writeln!(out, "bands: {}", outcome.spectrum.bands.len());
    let _ = writeln!(
        out,
        "spectrum: {}",
        union
            .pairs()
            .iter()
            .map(|(lo, hi)| format!("[{}, {}]", g(*lo), g(*hi)))
            .collect::<Vec<_>>()
            .join(" u ")
    );
    let _ = writeln!(out, "error bound: {}", g(outcome.spectrum.error_bound));
    let _ = writeln!(out, "kruger radius: {}", g(outcome.kruger_radius));
    let code = if outcome.violations.is_empty() {
        let _ = writeln!(out, "kruger violations: none");
        0
    } else {
        let list: Vec<String> = outcome
            .violations
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        let _ = writeln!(out, "kruger violations: {}", list.join(","));
        3
    };
    let _ = writeln!(out, "csv: {}", csv_path.display());
    let _ = writeln!(out, "json: {}", json_path.display());
    Ok((out, code))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionMethod {
    Last,
    Direct,
}

pub fn cmd_dimension(
    stats_path: &Path,
    method: DimensionMethod,
    tail: Option<usize>,
    json_path: Option<&Path>,
) -> Result<String, CliError> {
    let file = File::open(stats_path).map_err(|source| CliError::Io {
        path: stats_path.to_path_buf(),
        source,
    })?;
    let stats = read_cover_stats(file)?;
    let g = |x: f64| format_sig(x, SUMMARY_DIGITS);
    let mut out = String::new();
    let json = match method {
        DimensionMethod::Last => {
            let b = dim_bound_last(&stats, tail)?;
            let _ = writeln!(out, "dimension bound: {}", g(b.bound));
            let _ = writeln!(out, "beta: {}", g(b.beta));
            let _ = writeln!(out, "residual: {}", g(b.residual));
            serde_json::to_value(b)
        }
        DimensionMethod::Direct => {
            let b = dim_bound_direct(&stats, tail)?;
            let _ = writeln!(out, "dimension bound: {}", g(b.alpha));
            let _ = writeln!(out, "residual: {}", g(b.residual));
            serde_json::to_value(b)
        }
    }
    .map_err(|e| config_err(e.to_string()))?;
    if let Some(path) = json_path {
        write_json(path, &json)?;
    }
    Ok(out)
}
