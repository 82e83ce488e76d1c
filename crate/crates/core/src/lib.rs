//! Spectral pipeline of the Dirac-type `x·σp` model on a semi-infinite
//! cylinder.
//!
//! The reduced radial amplitude obeys a Whittaker equation. With a
//! short-distance cutoff `u0`, square-integrability gives a transcendental
//! condition on the energy `E`. This crate evaluates the special functions
//! behind that condition ([`specfun`]), solves it for the spectrum
//! ([`spectrum`]), cross-checks the result by direct ODE integration
//! ([`ode_oracle`]), and compares the model's counting function with the
//! Riemann–von Mangoldt count of zeta zeros ([`zeta`]).

pub mod cli;
pub mod error;
pub mod ode_oracle;
pub mod specfun;
pub mod spectrum;
pub mod verify;
pub mod zeta;

/// Complex scalar used throughout the special-function layer.
pub type ComplexValue = num_complex::Complex64;

pub use error::{Error, Result};
