use std::fmt;

use crate::spectrum::EigenvalueRecord;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every numerical layer of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("log-gamma pole at z = {0} (non-positive integer)")]
    GammaPole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge after {terms} terms (last relative term {residual:e})")]
    Convergence {
        what: &'static str,
        terms: usize,
        residual: f64,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(
        "spectral phase is not monotone near E = {energy} (phase drops by {drop:e}); \
         use a smaller u0 or a smaller scan step"
    )]
    Monotonicity { energy: f64, drop: f64 },

    #[error("eigenvalue enumeration failed: {message} ({} eigenvalues found before the failure)", partial.len())]
    Enumeration {
        message: String,
        partial: Vec<EigenvalueRecord>,
    },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("integration failed at u = {at}: {message} (step {step:e})")]
    Integration { at: f64, step: f64, message: String },

    #[error("no sign change of the shooting functional on [{lo}, {hi}]")]
    Bracketing { lo: f64, hi: f64 },

    #[error("argument {value} outside the validity window {window}")]
    Range { value: f64, window: Window },

    #[error("zeta(1/2 + iE) is too close to zero at E = {energy} (|zeta| = {modulus:e})")]
    NearZero { energy: f64, modulus: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid zero table at line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

/// Closed interval used in range errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window(pub f64, pub f64);

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.0, self.1)
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    /// True for errors caused by bad user input rather than numerical failure.
    pub fn is_configuration(&self) -> bool {
        matches!(
            self,
            Error::Config(_)
                | Error::Domain(_)
                | Error::GammaPole(_)
                | Error::Range { .. }
                | Error::Parse { .. }
                | Error::Validation { .. }
                | Error::Io(_)
        )
    }
}
