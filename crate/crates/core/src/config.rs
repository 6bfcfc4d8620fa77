//! Tolerances and search parameters shared by the checker, the limits
//! module and the census.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("invalid configuration: {0}")]
pub struct ConfigError(pub String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// Relative eigenvalue grouping tolerance (times `max(1, spectral radius)`).
    pub grouping_tol: f64,
    /// Projection norm below which an eigenspace counts as unsupported.
    pub support_tol: f64,
    /// Vector tolerance of the per-eigenspace proportionality test.
    pub weight_tol: f64,
    /// How far `(phi_k0 - phi_k) / pi` may sit from an integer.
    pub phase_tol: f64,
    /// Absolute commensurability residual, scaled by `max(1, spectral radius)`.
    pub residual_tol: f64,
    pub max_denominator: i64,
    /// Required `1 - |<b|exp(-iHt0)|a>|` for a perfect verdict.
    pub fidelity_tol: f64,
    /// Horizon of the numerical fallback; `None` means `50 / spectral radius`.
    pub t_max: Option<f64>,
    /// Grid points of the numerical fallback scan.
    pub scan_grid: usize,
    /// Grid points of the autocorrelation zero scan.
    pub zero_grid: usize,
    /// `|<a|exp(-iHt)|a>|` below which a time counts as a zero.
    pub zero_tol: f64,
    /// Census worker threads; `None` uses the available parallelism.
    pub workers: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            grouping_tol: 1e-8,
            support_tol: 1e-9,
            weight_tol: 1e-7,
            phase_tol: 1e-7,
            residual_tol: 1e-9,
            max_denominator: 1_000_000,
            fidelity_tol: 1e-9,
            t_max: None,
            scan_grid: 10_000,
            zero_grid: 4096,
            zero_tol: 1e-8,
            workers: None,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let positive = [
            ("grouping_tol", self.grouping_tol),
            ("support_tol", self.support_tol),
            ("weight_tol", self.weight_tol),
            ("phase_tol", self.phase_tol),
            ("residual_tol", self.residual_tol),
            ("fidelity_tol", self.fidelity_tol),
            ("zero_tol", self.zero_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError(format!("{name} must be positive, got {v}")));
            }
        }
        if self.max_denominator < 1 {
            return Err(ConfigError("max_denominator must be at least 1".into()));
        }
        if let Some(t) = self.t_max {
            if !(t > 0.0 && t.is_finite()) {
                return Err(ConfigError(format!("t_max must be positive, got {t}")));
            }
        }
        if self.scan_grid < 2 {
            return Err(ConfigError("scan_grid must be at least 2".into()));
        }
        if self.zero_grid < 1000 {
            return Err(ConfigError("zero_grid must be at least 1000".into()));
        }
        if self.workers == Some(0) {
            return Err(ConfigError("workers must be at least 1".into()));
        }
        Ok(())
    }
}
