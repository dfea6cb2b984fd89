//! Library side of the `hausmeas` command-line tool: configuration schema and
//! subcommand implementations.

pub mod config;
pub mod error;
pub mod run;

pub use error::CliError;

/// Environment variable capping the worker threads used by parallel sweeps.
pub const THREADS_ENV: &str = "HAUSMEAS_THREADS";

/// Configures the global thread pool from [`THREADS_ENV`] when it is set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Config(format!(
                "{THREADS_ENV} must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Config(e.to_string()))
}
