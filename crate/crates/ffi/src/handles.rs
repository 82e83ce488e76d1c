use std::ffi::{c_char, CStr};
use std::path::Path;

use diracxp::spectrum::{eigenvalues, Condition, EigenvalueRecord, SpectralConfig};
use diracxp::zeta::{
    bundled_zero_table, count_zeros, load_zero_table_file, LoadOptions, ZeroTable,
};

use crate::{call, store, DxpStatus, Failure};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DxpVariant {
    Asymptotic = 0,
    Exact = 1,
}

impl From<DxpVariant> for Condition {
    fn from(v: DxpVariant) -> Self {
        match v {
            DxpVariant::Asymptotic => Condition::Asymptotic,
            DxpVariant::Exact => Condition::Exact,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DxpEigenvalue {
    /// 1-based level number.
    pub index: usize,
    pub energy: f64,
    pub residual: f64,
}

/// Eigenvalues in `(0, e_max]`, ascending.
pub struct DxpSpectrum {
    records: Vec<EigenvalueRecord>,
}

/// Ordinates of zeta zeros.
pub struct DxpZeroTable {
    table: ZeroTable,
}

/// Computes the eigenvalues up to `e_max` at cutoff `u0` to tolerance `tol_e`.
///
/// # Safety
/// `out` must be null or point to writable memory for one pointer. The handle
/// written there must be released with `dxp_spectrum_free`.
#[no_mangle]
pub unsafe extern "C" fn dxp_spectrum_new(
    u0: f64,
    e_max: f64,
    variant: DxpVariant,
    tol_e: f64,
    out: *mut *mut DxpSpectrum,
) -> DxpStatus {
    call(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let config = SpectralConfig::new(u0, e_max)
            .with_condition(variant.into())
            .with_tol(tol_e);
        let records = eigenvalues(&config)?;
        store(out, Box::into_raw(Box::new(DxpSpectrum { records })), "out")
    })
}

/// Number of eigenvalues held; 0 for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle from `dxp_spectrum_new`.
#[no_mangle]
pub unsafe extern "C" fn dxp_spectrum_len(spectrum: *const DxpSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.records.len())
}

/// Copies the eigenvalue at 0-based `position`.
///
/// # Safety
/// `spectrum` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn dxp_spectrum_get(
    spectrum: *const DxpSpectrum,
    position: usize,
    out: *mut DxpEigenvalue,
) -> DxpStatus {
    call(|| {
        let spectrum = spectrum.as_ref().ok_or_else(|| Failure::null("spectrum"))?;
        let r = spectrum.records.get(position).ok_or_else(|| {
            Failure::new(
                DxpStatus::OutOfRange,
                format!(
                    "position {position} past the {} eigenvalues held",
                    spectrum.records.len()
                ),
            )
        })?;
        store(
            out,
            DxpEigenvalue {
                index: r.index,
                energy: r.energy,
                residual: r.residual,
            },
            "out",
        )
    })
}

/// Releases a spectrum. Null is a no-op.
///
/// # Safety
/// `spectrum` must be null or a live handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dxp_spectrum_free(spectrum: *mut DxpSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Loads a zero table from a UTF-8 path. With `sanity_check` the first
/// ordinate must lie in (14, 15).
///
/// # Safety
/// `path` must be null or a NUL-terminated string; `out` must be null or
/// writable. Release the handle with `dxp_zero_table_free`.
#[no_mangle]
pub unsafe extern "C" fn dxp_zero_table_load(
    path: *const c_char,
    sanity_check: bool,
    out: *mut *mut DxpZeroTable,
) -> DxpStatus {
    call(|| {
        if path.is_null() {
            return Err(Failure::null("path"));
        }
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Failure::new(DxpStatus::InvalidArgument, "path is not valid UTF-8"))?;
        let table = load_zero_table_file(Path::new(path), LoadOptions { sanity_check })?;
        store(out, Box::into_raw(Box::new(DxpZeroTable { table })), "out")
    })
}

/// The 100-zero table shipped with the library.
///
/// # Safety
/// `out` must be null or writable. Release with `dxp_zero_table_free`.
#[no_mangle]
pub unsafe extern "C" fn dxp_zero_table_bundled(out: *mut *mut DxpZeroTable) -> DxpStatus {
    call(|| {
        let table = bundled_zero_table();
        store(out, Box::into_raw(Box::new(DxpZeroTable { table })), "out")
    })
}

/// Number of ordinates; 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dxp_zero_table_len(table: *const DxpZeroTable) -> usize {
    table.as_ref().map_or(0, |t| t.table.len())
}

/// Ordinates `≤ energy`; 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dxp_zero_table_count(table: *const DxpZeroTable, energy: f64) -> usize {
    table.as_ref().map_or(0, |t| count_zeros(&t.table, energy))
}

/// Releases a zero table. Null is a no-op.
///
/// # Safety
/// `table` must be null or a live handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dxp_zero_table_free(table: *mut DxpZeroTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}
