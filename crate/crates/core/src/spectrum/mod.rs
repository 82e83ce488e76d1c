//! Quantization conditions of the cutoff-regularized model and everything
//! built on them: eigenvalue enumeration, the model counting function and
//! cutoff calibration.
//!
//! Nothing in this module reads a [`CylinderMode`]: after the substitution
//! `x = R u / (2(n+α))` the radial problem no longer depends on `n`, `α` or
//! `R`, so the mode only enters through [`mode_to_radial`].

mod calibrate;
mod enumerate;
mod phase;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use calibrate::{calibrate_u0, Calibration, CalibrationOptions};
pub use enumerate::{counting_model, eigenvalues, first_eigenvalues};
pub use phase::{
    duplication_chain_defect, exact_condition, gamma_ratio_condition, level_count, level_value,
    phase_asymptotic, phase_exact, theta_form_condition, ExactCondition, SpectralCondition,
    SpectralPhase,
};

/// Largest admissible cutoff: `ln(8/u0)` must stay positive.
pub const U0_MAX: f64 = 8.0;

/// Which form of the square-integrability condition to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// Whittaker functions evaluated at the cutoff itself.
    Exact,
    /// Small-cutoff limit `W_{½,±iE}(u0) → u0^{½±iE}` (Gamma-ratio form).
    Asymptotic,
}

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Asymptotic,
    Shooting,
}

impl From<Condition> for Method {
    fn from(c: Condition) -> Self {
        match c {
            Condition::Exact => Method::Exact,
            Condition::Asymptotic => Method::Asymptotic,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Asymptotic => "asymptotic",
            Method::Shooting => "shooting",
        })
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Method::from(*self).fmt(f)
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Condition::Exact),
            "asymptotic" => Ok(Condition::Asymptotic),
            other => Err(Error::Config(format!(
                "unknown condition variant {other:?} (expected exact or asymptotic)"
            ))),
        }
    }
}

/// Inputs of an eigenvalue enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralConfig {
    /// Cutoff where `φ(u0) = 0` is imposed, `0 < u0 < 8`.
    pub u0: f64,
    /// Lower end of the energy window (exclusive). Zero is mapped to `tol_e`.
    pub e_min: f64,
    /// Upper end of the energy window (inclusive).
    pub e_max: f64,
    /// Bisection width for each eigenvalue.
    pub tol_e: f64,
    pub condition: Condition,
    /// Largest step of the bracketing scan; the scan shrinks it further where
    /// the phase grows quickly.
    pub scan_step: f64,
}

impl SpectralConfig {
    pub const DEFAULT_TOL_E: f64 = 1e-9;
    pub const DEFAULT_SCAN_STEP: f64 = 0.05;

    /// Window `(0, e_max]` with default tolerances and the asymptotic condition.
    pub fn new(u0: f64, e_max: f64) -> Self {
        Self {
            u0,
            e_min: 0.0,
            e_max,
            tol_e: Self::DEFAULT_TOL_E,
            condition: Condition::Asymptotic,
            scan_step: Self::DEFAULT_SCAN_STEP,
        }
    }

    pub fn with_condition(mut self, condition: Condition) -> Self {
        self.condition = condition;
        self
    }

    pub fn with_tol(mut self, tol_e: f64) -> Self {
        self.tol_e = tol_e;
        self
    }

    pub fn with_scan_step(mut self, scan_step: f64) -> Self {
        self.scan_step = scan_step;
        self
    }

    pub fn with_window(mut self, e_min: f64, e_max: f64) -> Self {
        self.e_min = e_min;
        self.e_max = e_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        validate_u0(self.u0)?;
        if !(self.e_min.is_finite() && self.e_min >= 0.0) {
            return Err(Error::Config(format!(
                "e_min must be >= 0, got {}",
                self.e_min
            )));
        }
        if !(self.e_max.is_finite() && self.e_max > self.e_min) {
            return Err(Error::Config(format!(
                "need e_min < e_max, got e_min = {}, e_max = {}",
                self.e_min, self.e_max
            )));
        }
        if !(self.tol_e.is_finite() && self.tol_e > 0.0) {
            return Err(Error::Config(format!(
                "tol_e must be > 0, got {}",
                self.tol_e
            )));
        }
        if !(self.scan_step.is_finite() && self.scan_step > 0.0) {
            return Err(Error::Config(format!(
                "scan_step must be > 0, got {}",
                self.scan_step
            )));
        }
        Ok(())
    }

    /// Lower end of the window actually scanned.
    pub(crate) fn effective_e_min(&self) -> f64 {
        if self.e_min <= 0.0 {
            self.tol_e
        } else {
            self.e_min
        }
    }
}

pub(crate) fn validate_u0(u0: f64) -> Result<()> {
    if !(u0.is_finite() && u0 > 0.0 && u0 < U0_MAX) {
        return Err(Error::Config(format!(
            "cutoff u0 must satisfy 0 < u0 < {U0_MAX} so that ln(8/u0) > 0, got {u0}"
        )));
    }
    Ok(())
}

/// One solved eigenvalue `E_k`, with `Φ(E_k) = π(k - ½)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    /// 1-based ordinal `k`.
    pub index: usize,
    pub energy: f64,
    /// `|Φ(E_k) - π(k - ½)|` at the returned energy. For shooting results,
    /// the width of the final bracket.
    pub residual: f64,
    #[serde(rename = "variant")]
    pub method: Method,
}

/// Angular mode on the cylinder: `e^{i(n+α)y/R}` dependence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderMode {
    pub n: i64,
    pub alpha: f64,
    pub radius: f64,
}

impl CylinderMode {
    pub fn new(n: i64, alpha: f64, radius: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Domain(format!(
                "alpha must lie in [0, 1), got {alpha}"
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::Domain(format!("radius must be > 0, got {radius}")));
        }
        Ok(Self { n, alpha, radius })
    }

    /// `n + α`.
    pub fn twist(&self) -> f64 {
        self.n as f64 + self.alpha
    }

    fn checked_twist(&self) -> Result<f64> {
        let t = self.twist();
        if t == 0.0 {
            Err(Error::Domain("degenerate mode: n + alpha = 0".into()))
        } else {
            Ok(t)
        }
    }
}

/// `x = R u / (2(n+α))`. Positive exactly when `n + α > 0`.
pub fn mode_to_radial(mode: &CylinderMode, u: f64) -> Result<f64> {
    if !(u.is_finite() && u > 0.0) {
        return Err(Error::Domain(format!(
            "radial coordinate u must be > 0, got {u}"
        )));
    }
    Ok(mode.radius * u / (2.0 * mode.checked_twist()?))
}

/// Inverse of [`mode_to_radial`]: `u = 2(n+α) x / R`.
pub fn radial_to_mode(mode: &CylinderMode, x: f64) -> Result<f64> {
    Ok(2.0 * mode.checked_twist()? * x / mode.radius)
}
