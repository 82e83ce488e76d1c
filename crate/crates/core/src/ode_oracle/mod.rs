//! Independent numerical checks of the spectral conditions: direct
//! integration of the radial Whittaker equation
//!
//! ```text
//! φ'' + [-¼ + 1/(2u) + (E² + ¼)/u²] φ = 0,    φ(u0) = 0,
//! ```
//!
//! shooting for the energies at which the `e^{u/2}` branch is absent, and a
//! finite-difference residual check of the closed-form solution.

mod closed_form;
pub mod integrator;
mod shooting;

use crate::error::{Error, Result};

pub use closed_form::{closed_form_phi, residual_closed_form, ClosedFormCheck};
pub use shooting::{
    shoot_eigenvalue, shoot_eigenvalue_with, shooting_functional, shooting_spectrum,
    ShootingOptions,
};

/// `Q(u) = -¼ + 1/(2u) + (E² + ¼)/u²`.
pub fn whittaker_potential(energy: f64, u: f64) -> f64 {
    -0.25 + 0.5 / u + (energy * energy + 0.25) / (u * u)
}

/// Sum of the absolute values of the terms of `Q(u)`; the scale against which
/// ODE residuals are normalized.
pub(crate) fn potential_scale(energy: f64, u: f64) -> f64 {
    0.25 + 0.5 / u + (energy * energy + 0.25) / (u * u)
}

/// Samples of one integrated radial solution. `phi` is real: the equation is
/// real and so is the boundary data.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution {
    pub u_grid: Vec<f64>,
    pub phi: Vec<f64>,
    pub dphi: Vec<f64>,
    pub energy: f64,
}

impl RadialSolution {
    pub fn last(&self) -> (f64, f64, f64) {
        let i = self.u_grid.len() - 1;
        (self.u_grid[i], self.phi[i], self.dphi[i])
    }
}

/// Integrates from `u0` (with `φ(u0) = 0`, `φ'(u0) = 1`) to `u_max`, with the
/// local error of `(φ, min(u,1)·φ')` held below `rel_tol` relative to the
/// solution size.
pub fn integrate_whittaker(
    energy: f64,
    u0: f64,
    u_max: f64,
    rel_tol: f64,
) -> Result<RadialSolution> {
    if !(u0.is_finite() && u0 > 0.0 && u_max.is_finite() && u_max > u0) {
        return Err(Error::Config(format!(
            "need 0 < u0 < u_max, got u0 = {u0}, u_max = {u_max}"
        )));
    }
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(Error::Config(format!("rel_tol must be > 0, got {rel_tol}")));
    }
    if !energy.is_finite() {
        return Err(Error::Domain(format!(
            "energy must be finite, got {energy}"
        )));
    }
    let rhs = |u: f64, y: &integrator::State| [y[1], -whittaker_potential(energy, u) * y[0]];
    let norm = |u: f64, a: &integrator::State, b: &integrator::State, e: &integrator::State| {
        let w = u.min(1.0);
        let size = a[0]
            .abs()
            .max(b[0].abs())
            .max(w * a[1].abs().max(b[1].abs()));
        e[0].abs().max(w * e[1].abs()) / (rel_tol * size)
    };
    let traj = integrator::integrate(rhs, norm, u0, [0.0, 1.0], u_max, 1e-3 * u0)?;
    let (phi, dphi) = traj.y.iter().map(|y| (y[0], y[1])).unzip();
    Ok(RadialSolution {
        u_grid: traj.t,
        phi,
        dphi,
        energy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_data_is_exact() {
        let sol = integrate_whittaker(5.0, 1e-3, 10.0, 1e-9).unwrap();
        assert_eq!(sol.u_grid[0], 1e-3);
        assert_eq!(sol.phi[0], 0.0);
        assert_eq!(sol.dphi[0], 1.0);
        assert!(sol.u_grid.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(sol.u_grid.len(), sol.phi.len());
        assert_eq!(sol.last().0, 10.0);
    }

    #[test]
    fn bad_inputs() {
        assert!(integrate_whittaker(1.0, 1.0, 0.5, 1e-8).is_err());
        assert!(integrate_whittaker(1.0, 0.0, 10.0, 1e-8).is_err());
        assert!(integrate_whittaker(1.0, 1e-3, 10.0, 0.0).is_err());
    }
}
