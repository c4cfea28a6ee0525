//! Library half of the `bog2d` batch driver: config parsing, table encoding,
//! and the five scenario commands. The binary adds argument parsing and exit
//! codes on top.

pub mod commands;
pub mod config;
pub mod table;

use bogoliubov2d::scattering::ScatteringError;
use bogoliubov2d::{AsymptoticsError, BogError, QuadError};
use thiserror::Error;

/// Failure taxonomy mirroring the exit codes: `Config` exits 2, `Numeric`
/// (and failed checks) exit 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl From<ScatteringError> for CliError {
    fn from(e: ScatteringError) -> Self {
        match e {
            // A rejected potential is bad input, not a numerics problem.
            ScatteringError::InvalidPotential(_) => CliError::Config(e.to_string()),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

macro_rules! numeric_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Numeric(e.to_string())
            }
        }
    )*};
}
numeric_from!(QuadError, BogError, AsymptoticsError, bogoliubov2d::logft::LogFtError);
