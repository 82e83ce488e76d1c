use std::f64::consts::PI;

use crate::specfun::gamma::ln_gamma_unchecked;
use crate::ComplexValue;

/// Riemann–Siegel theta, `ϑ(E) = Im ln Γ(¼ + iE/2) - (E/2) ln π`.
///
/// Uses the principal log-Gamma, which is continuous along `Re z = ¼`, so no
/// `2π` unwrapping is involved. Odd in `E`, with `ϑ(0) = 0`.
pub fn riemann_siegel_theta(energy: f64) -> f64 {
    if !energy.is_finite() {
        return f64::NAN;
    }
    ln_gamma_unchecked(ComplexValue::new(0.25, 0.5 * energy)).im - 0.5 * energy * PI.ln()
}
