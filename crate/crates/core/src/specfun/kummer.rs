//! Kummer's confluent hypergeometric function `M(a, b; u)` for complex
//! parameters and real `u ≥ 0`.
//!
//! Two branches:
//!
//! * the defining power series `Σ (a)_n / (b)_n · uⁿ / n!`, used for small and
//!   moderate `u`;
//! * the large-`u` expansion
//!
//!   ```text
//!   M(a,b;u) ~ Γ(b)/Γ(a) · e^u u^{a-b} Σ (b-a)_s (1-a)_s / s! · u^{-s}
//!            + Γ(b)/Γ(b-a) · e^{iπa} u^{-a} Σ (a)_s (a-b+1)_s / s! · (-u)^{-s}
//!   ```
//!
//!   truncated at its smallest term, used once `u` passes
//!   [`ASYMPTOTIC_SWITCH`] and the truncation error estimate is below
//!   [`TARGET_TOLERANCE`]. Otherwise the series is used at any `u`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma;
use crate::ComplexValue;

/// `u` above which the asymptotic branch is tried first.
pub const ASYMPTOTIC_SWITCH: f64 = 40.0;

/// Iteration cap shared by the series and the asymptotic sums.
pub const MAX_TERMS: usize = 10_000;

/// Relative accuracy the asymptotic branch must reach to be accepted.
pub const TARGET_TOLERANCE: f64 = 1e-12;

/// Asymptotic evaluation together with its relative truncation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValue {
    pub value: ComplexValue,
    pub relative_error: f64,
}

/// `M(a, b; u)`, switching between the series and the asymptotic expansion.
pub fn kummer_m(a: ComplexValue, b: ComplexValue, u: f64) -> Result<ComplexValue> {
    check_args(a, b, u)?;
    if u == 0.0 {
        return Ok(ComplexValue::new(1.0, 0.0));
    }
    if u >= ASYMPTOTIC_SWITCH {
        if let Ok(asym) = kummer_m_asymptotic(a, b, u) {
            if asym.relative_error <= TARGET_TOLERANCE {
                return Ok(asym.value);
            }
        }
    }
    kummer_m_series(a, b, u)
}

/// Power-series branch of [`kummer_m`].
pub fn kummer_m_series(a: ComplexValue, b: ComplexValue, u: f64) -> Result<ComplexValue> {
    check_args(a, b, u)?;
    let mut term = ComplexValue::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) / (b + nf) * (u / (nf + 1.0));
        sum += term;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        // Only stop once the terms are shrinking for good.
        let next_ratio = ((a + nf + 1.0) / (b + nf + 1.0)).norm() * u / (nf + 2.0);
        if next_ratio < 1.0 && term.norm() <= f64::EPSILON * 0.125 * sum.norm() {
            return finite(sum, "Kummer series");
        }
    }
    Err(Error::Convergence {
        what: "Kummer series",
        terms: MAX_TERMS,
        residual: term.norm() / sum.norm(),
    })
}

/// Large-`u` branch of [`kummer_m`], truncated at the smallest term of each
/// sum. The subdominant `u^{-a}` part uses the `e^{+iπa}` phase.
pub fn kummer_m_asymptotic(a: ComplexValue, b: ComplexValue, u: f64) -> Result<AsymptoticValue> {
    check_args(a, b, u)?;
    if u <= 0.0 {
        return Err(Error::Domain("asymptotic Kummer branch needs u > 0".into()));
    }
    let ln_u = u.ln();
    let lg_b = log_gamma(b)?;

    // A pole of Γ(a) or Γ(b-a) makes the corresponding prefactor vanish.
    let dominant = match log_gamma(a) {
        Ok(lg_a) => {
            let (sum, err) = truncated_sum(b - a, 1.0 - a, u)?;
            let prefactor = (lg_b - lg_a + u + (a - b) * ln_u).exp();
            Some((prefactor * sum, prefactor.norm() * err))
        }
        Err(Error::GammaPole(_)) => None,
        Err(e) => return Err(e),
    };
    let recessive = match log_gamma(b - a) {
        Ok(lg_ba) => {
            let (sum, err) = truncated_sum(a, a - b + 1.0, -u)?;
            let prefactor = (lg_b - lg_ba + ComplexValue::i() * PI * a - a * ln_u).exp();
            Some((prefactor * sum, prefactor.norm() * err))
        }
        Err(Error::GammaPole(_)) => None,
        Err(e) => return Err(e),
    };

    let mut value = ComplexValue::new(0.0, 0.0);
    let mut abs_err = 0.0;
    for (v, e) in [dominant, recessive].into_iter().flatten() {
        value += v;
        abs_err += e;
    }
    let value = finite(value, "asymptotic Kummer expansion")?;
    let scale = value.norm();
    let relative_error = if scale > 0.0 {
        abs_err / scale
    } else {
        f64::INFINITY
    };
    Ok(AsymptoticValue {
        value,
        relative_error,
    })
}

/// `Σ_s (p)_s (q)_s / s! · x^{-s}` up to its smallest term. Returns the sum
/// and the magnitude of the first omitted term.
fn truncated_sum(p: ComplexValue, q: ComplexValue, x: f64) -> Result<(ComplexValue, f64)> {
    let mut term = ComplexValue::new(1.0, 0.0);
    let mut sum = ComplexValue::new(0.0, 0.0);
    for s in 0..MAX_TERMS {
        let sf = s as f64;
        sum += term;
        let next = term * (p + sf) * (q + sf) / ((sf + 1.0) * x);
        if next.norm() >= term.norm() || next.norm() <= f64::EPSILON * 0.125 * sum.norm() {
            return Ok((sum, next.norm().min(term.norm())));
        }
        term = next;
    }
    Err(Error::Convergence {
        what: "asymptotic Kummer sum",
        terms: MAX_TERMS,
        residual: term.norm() / sum.norm(),
    })
}

fn check_args(a: ComplexValue, b: ComplexValue, u: f64) -> Result<()> {
    if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::Domain("Kummer M parameters must be finite".into()));
    }
    if b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round() {
        return Err(Error::Domain(format!(
            "Kummer M is undefined for b = {} (non-positive integer)",
            b.re
        )));
    }
    if !(u.is_finite() && u >= 0.0) {
        return Err(Error::Domain(format!(
            "Kummer M needs finite u >= 0, got {u}"
        )));
    }
    Ok(())
}

fn finite(v: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{what} overflowed")))
    }
}
