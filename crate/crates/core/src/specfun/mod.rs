//! Complex special functions: log-Gamma, Kummer `M`, the model's Whittaker
//! function and the Riemann–Siegel theta.
//!
//! All functions are pure; they are safe to call from any number of threads.

pub mod gamma;
pub mod kummer;
pub mod theta;
pub mod whittaker;

pub use gamma::{gamma, log_gamma, reflection_rhs};
pub use kummer::{
    kummer_m, kummer_m_asymptotic, kummer_m_series, AsymptoticValue, ASYMPTOTIC_SWITCH,
};
pub use theta::riemann_siegel_theta;
pub use whittaker::{ln_whittaker_paper, whittaker_paper, WhittakerParams};
