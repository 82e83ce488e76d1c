//! Spectral phases.
//!
//! Square-integrability at large `u` requires
//!
//! ```text
//! W_{½,-iE}(u0) / W_{½,+iE}(u0) = Γ(1-2iE)/Γ(1+2iE) · Γ(iE)/Γ(-iE)        (exact)
//! ```
//!
//! and, with `W_{½,±iE}(u0) → u0^{½±iE}`,
//!
//! ```text
//! (u0/8)^{2iE} = -Γ(¼+iE/2)Γ(¾+iE/2) / [Γ(¼-iE/2)Γ(¾-iE/2)]                (asymptotic)
//! ```
//!
//! Both sides of each condition are unimodular for real `E`, so each reduces to
//! a phase equation. Taking arguments of the asymptotic form gives
//!
//! ```text
//! Φ(E; u0) = E ln(8/u0) + Im ln Γ(¼+iE/2) + Im ln Γ(¾+iE/2) = π(k - ½),  k = 1, 2, …
//! ```
//!
//! The exact form is put on the same scale: if `D(E)` is the unwrapped
//! `arg LHS - arg RHS`, then `D(0⁺) = π` and the roots are `D = 2πk`, so
//! `(D - π)/2` has the same levels as `Φ`. By Legendre duplication the two
//! scaled phases differ exactly by `arg M(iE, 1+2iE; u0)`, which vanishes as
//! `u0 → 0`. The code below never uses that shortcut: each phase is assembled
//! from its own Gamma and Whittaker factors.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::specfun::gamma::ln_gamma_unchecked;
use crate::specfun::{ln_whittaker_paper, riemann_siegel_theta, WhittakerParams};
use crate::spectrum::{validate_u0, Condition};
use crate::ComplexValue;

/// Allowed deviation of `|LHS|` and `|RHS|` from 1 in the exact condition.
const UNIMODULAR_TOL: f64 = 1e-8;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Continuous `Im ln Γ(x + iy)`.
fn im_ln_gamma(x: f64, y: f64) -> f64 {
    ln_gamma_unchecked(c(x, y)).im
}

/// `Φ(E; u0) = E ln(8/u0) + Im ln Γ(¼+iE/2) + Im ln Γ(¾+iE/2)`.
///
/// `Φ(0) = 0`; eigenvalues solve `Φ(E) = π(k - ½)`.
pub fn phase_asymptotic(energy: f64, u0: f64) -> Result<f64> {
    validate_u0(u0)?;
    check_energy(energy, false)?;
    Ok(
        energy * (8.0 / u0).ln()
            + im_ln_gamma(0.25, 0.5 * energy)
            + im_ln_gamma(0.75, 0.5 * energy),
    )
}

/// Both sides of the exact (finite-cutoff) condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCondition {
    /// `W_{½,-iE}(u0) / W_{½,+iE}(u0)`.
    pub lhs: ComplexValue,
    /// `Γ(1-2iE)/Γ(1+2iE) · Γ(iE)/Γ(-iE)`.
    pub rhs: ComplexValue,
    /// Continuously unwrapped `arg lhs - arg rhs`; roots of the condition are
    /// where this is a multiple of `2π`.
    pub arg_difference: f64,
}

/// Evaluates the exact condition at `(E, u0)`, checking that both sides are
/// unimodular.
pub fn exact_condition(energy: f64, u0: f64) -> Result<ExactCondition> {
    if !(u0.is_finite() && u0 > 0.0) {
        return Err(Error::Config(format!("cutoff u0 must be > 0, got {u0}")));
    }
    check_energy(energy, true)?;

    let w_plus = ln_whittaker_paper(&WhittakerParams::spectral(energy, u0)?)?;
    let w_minus = ln_whittaker_paper(&WhittakerParams::spectral(-energy, u0)?)?;
    let ln_lhs = w_minus - w_plus;

    let e2 = 2.0 * energy;
    let ln_rhs = ln_gamma_unchecked(c(1.0, -e2)) - ln_gamma_unchecked(c(1.0, e2))
        + ln_gamma_unchecked(c(0.0, energy))
        - ln_gamma_unchecked(c(0.0, -energy));

    // ln|·| of both sides must vanish.
    for (side, v) in [("left", ln_lhs.re), ("right", ln_rhs.re)] {
        if v.exp_m1().abs() > UNIMODULAR_TOL {
            return Err(Error::Consistency(format!(
                "{side}-hand side of the exact condition has modulus {} at E = {energy}, u0 = {u0}",
                v.exp()
            )));
        }
    }
    Ok(ExactCondition {
        lhs: ln_lhs.exp(),
        rhs: ln_rhs.exp(),
        arg_difference: ln_lhs.im - ln_rhs.im,
    })
}

/// Exact-condition phase on the scale of [`phase_asymptotic`]:
/// `(arg LHS - arg RHS - π) / 2`, with roots at `π(k - ½)`.
pub fn phase_exact(energy: f64, u0: f64) -> Result<f64> {
    Ok(0.5 * (exact_condition(energy, u0)?.arg_difference - PI))
}

/// Two sides of one form of the asymptotic spectral condition,
/// arranged as `u0_side = gamma_side`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralCondition {
    /// `(u0/8)^{2iE}`.
    pub u0_side: ComplexValue,
    pub gamma_side: ComplexValue,
}

impl SpectralCondition {
    /// `u0_side / gamma_side`; equals 1 exactly at eigenvalues.
    pub fn mismatch(&self) -> ComplexValue {
        self.u0_side / self.gamma_side
    }
}

fn cutoff_power(energy: f64, u0: f64) -> ComplexValue {
    c(0.0, 2.0 * energy * (u0 / 8.0).ln()).exp()
}

/// Gamma-ratio form:
/// `(u0/8)^{2iE} = -Γ(¼+iE/2)Γ(¾+iE/2) / [Γ(¼-iE/2)Γ(¾-iE/2)]`.
pub fn gamma_ratio_condition(energy: f64, u0: f64) -> Result<SpectralCondition> {
    validate_u0(u0)?;
    check_energy(energy, false)?;
    let h = 0.5 * energy;
    let ln_ratio = ln_gamma_unchecked(c(0.25, h)) + ln_gamma_unchecked(c(0.75, h))
        - ln_gamma_unchecked(c(0.25, -h))
        - ln_gamma_unchecked(c(0.75, -h));
    Ok(SpectralCondition {
        u0_side: cutoff_power(energy, u0),
        gamma_side: -ln_ratio.exp(),
    })
}

/// Theta form: `e^{2iϑ(E) + iE ln π} = -(u0/8)^{2iE} Γ(¾-iE/2)/Γ(¾+iE/2)`,
/// rearranged to `(u0/8)^{2iE} = -e^{2iϑ(E) + iE ln π} Γ(¾+iE/2)/Γ(¾-iE/2)`.
pub fn theta_form_condition(energy: f64, u0: f64) -> Result<SpectralCondition> {
    validate_u0(u0)?;
    check_energy(energy, false)?;
    let theta = riemann_siegel_theta(energy);
    let h = 0.5 * energy;
    let ln_gamma_ratio = ln_gamma_unchecked(c(0.75, h)) - ln_gamma_unchecked(c(0.75, -h));
    let ln_lhs = c(0.0, 2.0 * theta + energy * PI.ln());
    Ok(SpectralCondition {
        u0_side: cutoff_power(energy, u0),
        gamma_side: -(ln_lhs + ln_gamma_ratio).exp(),
    })
}

/// `|RHS_exact · G · 8^{2iE} - 1|`, where `G` is the Gamma side of the
/// Gamma-ratio form. Zero by Legendre duplication and `Γ(z+1) = zΓ(z)`; this
/// is the algebra that turns the exact condition into the asymptotic one.
pub fn duplication_chain_defect(energy: f64) -> Result<f64> {
    check_energy(energy, true)?;
    let e2 = 2.0 * energy;
    let ln_rhs_exact = ln_gamma_unchecked(c(1.0, -e2)) - ln_gamma_unchecked(c(1.0, e2))
        + ln_gamma_unchecked(c(0.0, energy))
        - ln_gamma_unchecked(c(0.0, -energy));
    let h = 0.5 * energy;
    let ln_g = ln_gamma_unchecked(c(0.25, h)) + ln_gamma_unchecked(c(0.75, h))
        - ln_gamma_unchecked(c(0.25, -h))
        - ln_gamma_unchecked(c(0.75, -h));
    let eight_power = c(0.0, 2.0 * energy * 3.0 * LN_2);
    // G carries a leading minus sign.
    Ok(((ln_rhs_exact + ln_g + eight_power).exp() * -1.0 - 1.0).norm())
}

/// Number of levels `π(k - ½)` at or below `phase`.
pub fn level_count(phase: f64) -> usize {
    (phase / PI + 0.5).floor().max(0.0) as usize
}

/// `π(k - ½)`.
pub fn level_value(k: usize) -> f64 {
    PI * (k as f64 - 0.5)
}

fn check_energy(energy: f64, strictly_positive: bool) -> Result<()> {
    let ok = energy.is_finite()
        && if strictly_positive {
            energy > 0.0
        } else {
            energy >= 0.0
        };
    if ok {
        Ok(())
    } else {
        let bound = if strictly_positive { "> 0" } else { ">= 0" };
        Err(Error::Domain(format!(
            "energy must be {bound}, got {energy}"
        )))
    }
}

/// A spectral phase bound to a cutoff and a condition variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPhase {
    u0: f64,
    condition: Condition,
}

impl SpectralPhase {
    pub fn new(u0: f64, condition: Condition) -> Result<Self> {
        validate_u0(u0)?;
        Ok(Self { u0, condition })
    }

    pub fn u0(&self) -> f64 {
        self.u0
    }

    pub fn condition(&self) -> Condition {
        self.condition
    }

    /// Phase at `E ≥ 0`, on the `π(k - ½)` level scale. Both variants are 0 at
    /// `E = 0`.
    pub fn value(&self, energy: f64) -> Result<f64> {
        match self.condition {
            Condition::Asymptotic => phase_asymptotic(energy, self.u0),
            Condition::Exact if energy == 0.0 => Ok(0.0),
            Condition::Exact => phase_exact(energy, self.u0),
        }
    }

    /// Rough `dΦ/dE` used to size scan steps; overestimates the true slope.
    pub(crate) fn slope_estimate(&self, energy: f64) -> f64 {
        (8.0 / self.u0).ln().max(0.0) + (0.5 * energy).ln().max(0.0) + 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_vanishes_at_origin() {
        for u0 in [1e-9, 1e-3, 0.5, 7.9] {
            assert_eq!(phase_asymptotic(0.0, u0).unwrap(), 0.0);
        }
    }

    #[test]
    fn cutoff_bounds() {
        assert!(matches!(phase_asymptotic(1.0, 8.0), Err(Error::Config(_))));
        assert!(matches!(phase_asymptotic(1.0, 0.0), Err(Error::Config(_))));
        assert!(matches!(phase_exact(1.0, -1.0), Err(Error::Config(_))));
        assert!(matches!(phase_exact(0.0, 1e-3), Err(Error::Domain(_))));
    }

    #[test]
    fn both_sides_unimodular() {
        let cond = exact_condition(10.0, 0.01).unwrap();
        assert!((cond.lhs.norm() - 1.0).abs() < 1e-10);
        assert!((cond.rhs.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_phase_starts_at_zero() {
        let p = phase_exact(1e-9, 1e-3).unwrap();
        assert!(p.abs() < 1e-7, "{p}");
    }

    #[test]
    fn levels() {
        assert_eq!(level_count(0.0), 0);
        assert_eq!(level_count(-1.0), 0);
        assert_eq!(level_count(PI / 2.0 - 1e-12), 0);
        assert_eq!(level_count(PI / 2.0), 1);
        assert_eq!(level_count(3.0 * PI / 2.0 + 1e-9), 2);
        assert_eq!(level_value(1), PI / 2.0);
    }
}
