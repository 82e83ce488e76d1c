#ifndef DIRACXP_H
#define DIRACXP_H

/* Generated by cbindgen from crates/ffi/src; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  DXP_STATUS_OK = 0,
  DXP_STATUS_NULL_POINTER = 1,
  /**
   * Argument outside the domain or an invalid configuration.
   */
  DXP_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A series or iteration failed to converge.
   */
  DXP_STATUS_CONVERGENCE = 3,
  /**
   * Other numerical failure: root bracketing, integration, monotonicity.
   */
  DXP_STATUS_NUMERICAL = 4,
  DXP_STATUS_IO = 5,
  /**
   * Malformed zero-table contents.
   */
  DXP_STATUS_PARSE = 6,
  /**
   * Index past the end of a handle.
   */
  DXP_STATUS_OUT_OF_RANGE = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  DXP_STATUS_PANIC = 8,
} DxpStatus;

typedef enum {
  DXP_VARIANT_ASYMPTOTIC = 0,
  DXP_VARIANT_EXACT = 1,
} DxpVariant;

/**
 * Eigenvalues in `(0, e_max]`, ascending.
 */
typedef struct DxpSpectrum DxpSpectrum;

/**
 * Ordinates of zeta zeros.
 */
typedef struct DxpZeroTable DxpZeroTable;

typedef struct {
  /**
   * 1-based level number.
   */
  size_t index;
  double energy;
  double residual;
} DxpEigenvalue;

typedef struct {
  double re;
  double im;
} DxpComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if it succeeded.
 * The pointer stays valid until the next call into the library on the same
 * thread.
 */
const char *dxp_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *dxp_version(void);

/**
 * Computes the eigenvalues up to `e_max` at cutoff `u0` to tolerance `tol_e`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one pointer. The handle
 * written there must be released with `dxp_spectrum_free`.
 */
DxpStatus dxp_spectrum_new(double u0,
                           double e_max,
                           DxpVariant variant,
                           double tol_e,
                           DxpSpectrum **out);

/**
 * Number of eigenvalues held; 0 for a null handle.
 *
 * # Safety
 * `spectrum` must be null or a live handle from `dxp_spectrum_new`.
 */
size_t dxp_spectrum_len(const DxpSpectrum *spectrum);

/**
 * Copies the eigenvalue at 0-based `position`.
 *
 * # Safety
 * `spectrum` must be null or a live handle; `out` must be null or writable.
 */
DxpStatus dxp_spectrum_get(const DxpSpectrum *spectrum, size_t position, DxpEigenvalue *out);

/**
 * Releases a spectrum. Null is a no-op.
 *
 * # Safety
 * `spectrum` must be null or a live handle not freed before.
 */
void dxp_spectrum_free(DxpSpectrum *spectrum);

/**
 * Loads a zero table from a UTF-8 path. With `sanity_check` the first
 * ordinate must lie in (14, 15).
 *
 * # Safety
 * `path` must be null or a NUL-terminated string; `out` must be null or
 * writable. Release the handle with `dxp_zero_table_free`.
 */
DxpStatus dxp_zero_table_load(const char *path, bool sanity_check, DxpZeroTable **out);

/**
 * The 100-zero table shipped with the library.
 *
 * # Safety
 * `out` must be null or writable. Release with `dxp_zero_table_free`.
 */
DxpStatus dxp_zero_table_bundled(DxpZeroTable **out);

/**
 * Number of ordinates; 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
size_t dxp_zero_table_len(const DxpZeroTable *table);

/**
 * Ordinates `≤ energy`; 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
size_t dxp_zero_table_count(const DxpZeroTable *table, double energy);

/**
 * Releases a zero table. Null is a no-op.
 *
 * # Safety
 * `table` must be null or a live handle not freed before.
 */
void dxp_zero_table_free(DxpZeroTable *table);

/**
 * Principal branch of `ln Γ(z)`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `DxpComplex`.
 */
DxpStatus dxp_log_gamma(DxpComplex z, DxpComplex *out);

/**
 * Kummer's `M(a, b; u)` for real `u ≥ 0`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `DxpComplex`.
 */
DxpStatus dxp_kummer_m(DxpComplex a, DxpComplex b, double u, DxpComplex *out);

/**
 * `e^{-u/2} u^{m+½} M(m-k+½, 1+2m; u)` for `u > 0`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `DxpComplex`.
 */
DxpStatus dxp_whittaker(DxpComplex k, DxpComplex m, double u, DxpComplex *out);

/**
 * Riemann–Siegel theta. Total on finite input; NaN propagates.
 */
double dxp_riemann_siegel_theta(double energy);

/**
 * Smooth zero count `ϑ(E)/π + 1`.
 */
double dxp_n_smooth(double energy);

/**
 * Small-cutoff spectral phase `Φ(E)`.
 *
 * # Safety
 * `out` must be null or point to a writable `double`.
 */
DxpStatus dxp_phase_asymptotic(double energy, double u0, double *out);

/**
 * Spectral phase from the exact Whittaker condition.
 *
 * # Safety
 * `out` must be null or point to a writable `double`.
 */
DxpStatus dxp_phase_exact(double energy, double u0, double *out);

/**
 * `ζ(½ + iE)`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `DxpComplex`.
 */
DxpStatus dxp_zeta_critical_line(double energy, DxpComplex *out);

/**
 * `S(E) = arg ζ(½ + iE) / π`, continuous from `E = 0⁺`.
 *
 * # Safety
 * `out` must be null or point to a writable `double`.
 */
DxpStatus dxp_s_fluctuation(double energy, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIRACXP_H */
