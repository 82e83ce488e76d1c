use diracxp::specfun::{
    kummer_m, log_gamma, riemann_siegel_theta, whittaker_paper, WhittakerParams,
};
use diracxp::spectrum::{phase_asymptotic, phase_exact};
use diracxp::zeta::{n_smooth, s_fluctuation, zeta_critical_line};
use diracxp::ComplexValue;

use crate::{call, store, DxpStatus};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DxpComplex {
    pub re: f64,
    pub im: f64,
}

impl From<DxpComplex> for ComplexValue {
    fn from(z: DxpComplex) -> Self {
        ComplexValue::new(z.re, z.im)
    }
}

impl From<ComplexValue> for DxpComplex {
    fn from(z: ComplexValue) -> Self {
        DxpComplex { re: z.re, im: z.im }
    }
}

/// Principal branch of `ln Γ(z)`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `DxpComplex`.
#[no_mangle]
pub unsafe extern "C" fn dxp_log_gamma(z: DxpComplex, out: *mut DxpComplex) -> DxpStatus {
    call(|| store(out, log_gamma(z.into())?.into(), "out"))
}

/// Kummer's `M(a, b; u)` for real `u ≥ 0`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `DxpComplex`.
#[no_mangle]
pub unsafe extern "C" fn dxp_kummer_m(
    a: DxpComplex,
    b: DxpComplex,
    u: f64,
    out: *mut DxpComplex,
) -> DxpStatus {
    call(|| store(out, kummer_m(a.into(), b.into(), u)?.into(), "out"))
}

/// `e^{-u/2} u^{m+½} M(m-k+½, 1+2m; u)` for `u > 0`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `DxpComplex`.
#[no_mangle]
pub unsafe extern "C" fn dxp_whittaker(
    k: DxpComplex,
    m: DxpComplex,
    u: f64,
    out: *mut DxpComplex,
) -> DxpStatus {
    call(|| {
        let params = WhittakerParams::new(k.into(), m.into(), u)?;
        store(out, whittaker_paper(&params)?.into(), "out")
    })
}

/// Riemann–Siegel theta. Total on finite input; NaN propagates.
#[no_mangle]
pub extern "C" fn dxp_riemann_siegel_theta(energy: f64) -> f64 {
    riemann_siegel_theta(energy)
}

/// Smooth zero count `ϑ(E)/π + 1`.
#[no_mangle]
pub extern "C" fn dxp_n_smooth(energy: f64) -> f64 {
    n_smooth(energy)
}

/// Small-cutoff spectral phase `Φ(E)`.
///
/// # Safety
/// `out` must be null or point to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn dxp_phase_asymptotic(energy: f64, u0: f64, out: *mut f64) -> DxpStatus {
    call(|| store(out, phase_asymptotic(energy, u0)?, "out"))
}

/// Spectral phase from the exact Whittaker condition.
///
/// # Safety
/// `out` must be null or point to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn dxp_phase_exact(energy: f64, u0: f64, out: *mut f64) -> DxpStatus {
    call(|| store(out, phase_exact(energy, u0)?, "out"))
}

/// `ζ(½ + iE)`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `DxpComplex`.
#[no_mangle]
pub unsafe extern "C" fn dxp_zeta_critical_line(energy: f64, out: *mut DxpComplex) -> DxpStatus {
    call(|| store(out, zeta_critical_line(energy)?.into(), "out"))
}

/// `S(E) = arg ζ(½ + iE) / π`, continuous from `E = 0⁺`.
///
/// # Safety
/// `out` must be null or point to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn dxp_s_fluctuation(energy: f64, out: *mut f64) -> DxpStatus {
    call(|| store(out, s_fluctuation(energy)?, "out"))
}
