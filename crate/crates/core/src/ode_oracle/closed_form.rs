use crate::error::Result;
use crate::ode_oracle::{potential_scale, whittaker_potential};
use crate::specfun::{whittaker_paper, WhittakerParams};
use crate::ComplexValue;

/// Relative finite-difference step for the second derivative.
const FD_RELATIVE_STEP: f64 = 1e-4;

/// Closed-form solution with `A = 1`:
/// `φ(u) = W_{½,-iE}(u0) W_{½,+iE}(u) - W_{½,+iE}(u0) W_{½,-iE}(u)`.
///
/// The two Whittaker functions are conjugate for real `E` and `u`, so `φ` is
/// purely imaginary.
pub fn closed_form_phi(energy: f64, u0: f64, u: f64) -> Result<ComplexValue> {
    let w_plus_0 = whittaker_paper(&WhittakerParams::spectral(energy, u0)?)?;
    let w_minus_0 = whittaker_paper(&WhittakerParams::spectral(-energy, u0)?)?;
    let w_plus = whittaker_paper(&WhittakerParams::spectral(energy, u)?)?;
    let w_minus = whittaker_paper(&WhittakerParams::spectral(-energy, u)?)?;
    Ok(w_minus_0 * w_plus - w_plus_0 * w_minus)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormCheck {
    /// `|φ(u0)| / |W_{½,iE}(u0)|²`.
    pub boundary_value: f64,
    /// Largest `|φ''_fd + Qφ| / (|Q|_terms · 2|W(u0)||W(u)|)`. The
    /// denominator is the envelope of `|φ|`; unlike `|φ|` itself it does not
    /// vanish at the nodes of the solution.
    pub max_residual: f64,
    /// Sample where `max_residual` occurs.
    pub worst_u: f64,
    /// Largest `|Re φ| / |φ|` over the samples.
    pub max_real_fraction: f64,
}

/// Finite-difference ODE residual of the closed-form solution at each sample
/// (central differences, `h = 1e-4·u`), plus the boundary value at `u0`.
pub fn residual_closed_form(energy: f64, u0: f64, u_samples: &[f64]) -> Result<ClosedFormCheck> {
    let w0 = whittaker_paper(&WhittakerParams::spectral(energy, u0)?)?;
    let boundary_value = closed_form_phi(energy, u0, u0)?.norm() / w0.norm_sqr();

    let mut max_residual = 0.0_f64;
    let mut worst_u = f64::NAN;
    let mut max_real_fraction = 0.0_f64;
    for &u in u_samples {
        let h = FD_RELATIVE_STEP * u;
        let left = closed_form_phi(energy, u0, u - h)?;
        let mid = closed_form_phi(energy, u0, u)?;
        let right = closed_form_phi(energy, u0, u + h)?;
        let second = (left - 2.0 * mid + right) / (h * h);
        let residual = (second + whittaker_potential(energy, u) * mid).norm();
        let envelope =
            2.0 * w0.norm() * whittaker_paper(&WhittakerParams::spectral(energy, u)?)?.norm();
        let scale = potential_scale(energy, u) * envelope;
        let r = residual / scale;
        if r > max_residual || worst_u.is_nan() {
            max_residual = r;
            worst_u = u;
        }
        if mid.norm() > 0.0 {
            max_real_fraction = max_real_fraction.max(mid.re.abs() / mid.norm());
        }
    }
    Ok(ClosedFormCheck {
        boundary_value,
        max_residual,
        worst_u,
        max_real_fraction,
    })
}
