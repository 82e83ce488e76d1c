//! The radial Whittaker-type solution `e^{-u/2} u^{m+½} M(m-k+½, 1+2m; u)`.
//!
//! Naming: the model writes this function as `W_{k,m}(u)`, but in the usual
//! special-function convention (Abramowitz–Stegun 13.1.32, DLMF 13.14.2) this
//! is the Whittaker *M* function `M_{k,m}(u)`, not the recessive `W_{k,m}`.
//! The functions here follow the model's formula exactly; the `paper` suffix
//! flags that convention. For `k = ½`, `m = ±iE` the pair `W_{½,±iE}` are
//! complex conjugates of each other, and the model's spectral condition is
//! built from them.

use crate::error::{Error, Result};
use crate::specfun::kummer::kummer_m;
use crate::ComplexValue;

/// Arguments of [`whittaker_paper`]: indices `k`, `m` and radial point `u > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerParams {
    k: ComplexValue,
    m: ComplexValue,
    u: f64,
}

impl WhittakerParams {
    pub fn new(k: ComplexValue, m: ComplexValue, u: f64) -> Result<Self> {
        if !(u.is_finite() && u > 0.0) {
            return Err(Error::Domain(format!(
                "Whittaker function needs u > 0, got {u}"
            )));
        }
        let b = 1.0 + 2.0 * m;
        if b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round() {
            return Err(Error::Domain(format!(
                "1 + 2m = {} is a pole of the Kummer series",
                b.re
            )));
        }
        Ok(Self { k, m, u })
    }

    /// The indices used by the spectral condition: `k = ½`, `m = i·mu`.
    pub fn spectral(mu: f64, u: f64) -> Result<Self> {
        Self::new(ComplexValue::new(0.5, 0.0), ComplexValue::new(0.0, mu), u)
    }

    pub fn k(&self) -> ComplexValue {
        self.k
    }

    pub fn m(&self) -> ComplexValue {
        self.m
    }

    pub fn u(&self) -> f64 {
        self.u
    }
}

/// `e^{-u/2} u^{m+½} M(m-k+½, 1+2m; u)` with `u^{m+½} = exp((m+½) ln u)`.
pub fn whittaker_paper(p: &WhittakerParams) -> Result<ComplexValue> {
    let v = ln_whittaker_paper(p)?.exp();
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!(
            "Whittaker function overflowed at u = {}",
            p.u
        )))
    }
}

/// Logarithm of [`whittaker_paper`], split as
/// `-u/2 + (m+½) ln u + ln M`. The imaginary part is continuous in `m` as long
/// as `M` stays off the negative real axis, which holds for the spectral
/// indices `k = ½, m = ±iE` at every cutoff `u < 8`.
pub fn ln_whittaker_paper(p: &WhittakerParams) -> Result<ComplexValue> {
    let a = p.m - p.k + 0.5;
    let b = 1.0 + 2.0 * p.m;
    let m = kummer_m(a, b, p.u)?;
    if m.norm() == 0.0 {
        return Err(Error::Domain(format!(
            "Kummer factor vanishes at u = {}",
            p.u
        )));
    }
    Ok(-0.5 * p.u + (p.m + 0.5) * p.u.ln() + m.ln())
}
