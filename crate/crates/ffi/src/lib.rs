//! C ABI over `diracxp`.
//!
//! Every fallible function returns a [`DxpStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can
//! be read with [`dxp_last_error_message`]. Spectra and zero tables are
//! opaque handles released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

mod handles;
mod scalar;

pub use handles::*;
pub use scalar::*;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DxpStatus {
    Ok = 0,
    NullPointer = 1,
    /// Argument outside the domain or an invalid configuration.
    InvalidArgument = 2,
    /// A series or iteration failed to converge.
    Convergence = 3,
    /// Other numerical failure: root bracketing, integration, monotonicity.
    Numerical = 4,
    Io = 5,
    /// Malformed zero-table contents.
    Parse = 6,
    /// Index past the end of a handle.
    OutOfRange = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

pub(crate) struct Failure {
    status: DxpStatus,
    message: String,
}

impl Failure {
    pub(crate) fn new(status: DxpStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }

    pub(crate) fn null(what: &str) -> Self {
        Self::new(DxpStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<diracxp::Error> for Failure {
    fn from(err: diracxp::Error) -> Self {
        use diracxp::Error as E;
        let status = match err {
            E::GammaPole(_) | E::Domain(_) | E::Config(_) | E::Range { .. } => {
                DxpStatus::InvalidArgument
            }
            E::Convergence { .. } => DxpStatus::Convergence,
            E::Parse { .. } | E::Validation { .. } => DxpStatus::Parse,
            E::Io(_) => DxpStatus::Io,
            _ => DxpStatus::Numerical,
        };
        Self::new(status, err.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

/// Runs `f`, converting errors and panics into a status code.
pub(crate) fn call(f: impl FnOnce() -> Result<(), Failure>) -> DxpStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DxpStatus::Ok,
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {what}"));
            DxpStatus::Panic
        }
    }
}

/// Writes `value` through `out`.
///
/// # Safety
/// `out` must be null or valid for writes.
pub(crate) unsafe fn store<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or null if it succeeded.
/// The pointer stays valid until the next call into the library on the same
/// thread.
#[no_mangle]
pub extern "C" fn dxp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dxp_version() -> *const c_char {
    const VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version string"),
        };
    VERSION.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        let status = |e: diracxp::Error| Failure::from(e).status;
        assert_eq!(
            status(diracxp::Error::GammaPole(-1.0)),
            DxpStatus::InvalidArgument
        );
        assert_eq!(status(diracxp::Error::Io("x".into())), DxpStatus::Io);
        assert_eq!(
            status(diracxp::Error::Bracketing { lo: 0.0, hi: 1.0 }),
            DxpStatus::Numerical
        );
    }

    #[test]
    fn panics_are_caught() {
        assert_eq!(call(|| panic!("boom")), DxpStatus::Panic);
        let msg = unsafe { CStr::from_ptr(dxp_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "panic: boom");
        assert_eq!(call(|| Ok(())), DxpStatus::Ok);
        assert!(dxp_last_error_message().is_null());
    }
}
