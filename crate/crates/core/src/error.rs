use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = KdError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum KdError {
    #[error("invalid value for `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },

    #[error("mode {n} outside the window [{n_min}, {n_max}]")]
    OutOfWindow { n: i32, n_min: i32, n_max: i32 },

    #[error("resonant energy denominator for intermediate sign {sign}: {denominator:e}")]
    Resonance { sign: char, denominator: f64 },

    #[error("norm drift {drift:e} exceeds tolerance {tolerance:e} at t = {t} ħ/mc²")]
    NormDrift { t: f64, drift: f64, tolerance: f64 },

    #[error("non-finite value in {what} at t = {t} ħ/mc²")]
    NonFinite { what: &'static str, t: f64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config {path}: {message}")]
    ConfigParse { path: PathBuf, message: String },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl KdError {
    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        KdError::InvalidConfig { field: field.into(), reason: reason.into() }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        KdError::Io { path: path.into(), source }
    }
}
