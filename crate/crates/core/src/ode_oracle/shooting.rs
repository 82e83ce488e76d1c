use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_4;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ode_oracle::integrate_whittaker;
use crate::spectrum::{EigenvalueRecord, Method};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions {
    /// Outer end of the integration.
    pub u_max: f64,
    /// Local relative error of the integrator.
    pub rel_tol: f64,
    /// Width of the final energy bracket.
    pub energy_tol: f64,
    /// Largest energy step when scanning for sign changes.
    pub scan_step: f64,
}

impl Default for ShootingOptions {
    fn default() -> Self {
        Self {
            u_max: 50.0,
            rel_tol: 1e-10,
            energy_tol: 1e-10,
            scan_step: 0.05,
        }
    }
}

/// Coefficient of the growing branch, `φ(u_max) e^{-u_max/2} √u_max`. It is
/// real, changes sign at each eigenvalue, and its log-magnitude measures how
/// far `E` is from the spectrum.
pub fn shooting_functional(energy: f64, u0: f64, options: &ShootingOptions) -> Result<f64> {
    let sol = integrate_whittaker(energy, u0, options.u_max, options.rel_tol)?;
    let (u, phi, _) = sol.last();
    Ok(phi * (-0.5 * u).exp() * u.sqrt())
}

/// Bisection on the sign of [`shooting_functional`] inside `[e_lo, e_hi]`,
/// with default integration settings.
pub fn shoot_eigenvalue(e_lo: f64, e_hi: f64, u0: f64, u_max: f64) -> Result<f64> {
    shoot_eigenvalue_with(
        e_lo,
        e_hi,
        u0,
        &ShootingOptions {
            u_max,
            ..ShootingOptions::default()
        },
    )
}

pub fn shoot_eigenvalue_with(
    e_lo: f64,
    e_hi: f64,
    u0: f64,
    options: &ShootingOptions,
) -> Result<f64> {
    if e_lo.partial_cmp(&e_hi) != Some(Ordering::Less) {
        return Err(Error::Bracketing { lo: e_lo, hi: e_hi });
    }
    let mut f_lo = shooting_functional(e_lo, u0, options)?;
    let f_hi = shooting_functional(e_hi, u0, options)?;
    if f_lo == 0.0 {
        return Ok(e_lo);
    }
    if f_hi == 0.0 {
        return Ok(e_hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracketing { lo: e_lo, hi: e_hi });
    }
    let (mut a, mut b) = (e_lo, e_hi);
    while b - a > options.energy_tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let f_mid = shooting_functional(mid, u0, options)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            a = mid;
            f_lo = f_mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// First `count` shooting eigenvalues, located by scanning the functional
/// for sign changes from `E = scan_step/10` upward. Uses no information from
/// the phase conditions.
pub fn shooting_spectrum(
    u0: f64,
    count: usize,
    options: &ShootingOptions,
) -> Result<Vec<EigenvalueRecord>> {
    let mut records = Vec::with_capacity(count);
    let mut e = 0.1 * options.scan_step;
    let mut f_prev = shooting_functional(e, u0, options)?;
    // Scan in chunks so the sign checks can run in parallel.
    while records.len() < count {
        let mut grid = Vec::with_capacity(64);
        let mut x = e;
        for _ in 0..64 {
            let slope = (8.0 / u0).ln().max(0.0) + (1.0 + x).ln() + 1.0;
            x += options.scan_step.min(FRAC_PI_4 / slope);
            grid.push(x);
        }
        let values = grid
            .par_iter()
            .map(|&x| shooting_functional(x, u0, options))
            .collect::<Result<Vec<_>>>()?;
        let mut brackets = Vec::new();
        let mut lo = e;
        for (&x, &f) in grid.iter().zip(&values) {
            if f.signum() != f_prev.signum() {
                brackets.push((lo, x));
            }
            lo = x;
            f_prev = f;
        }
        e = *grid.last().expect("non-empty chunk");
        let roots = brackets
            .par_iter()
            .map(|&(a, b)| shoot_eigenvalue_with(a, b, u0, options))
            .collect::<Result<Vec<_>>>()?;
        for energy in roots {
            if records.len() == count {
                break;
            }
            records.push(EigenvalueRecord {
                index: records.len() + 1,
                energy,
                residual: options.energy_tol,
                method: Method::Shooting,
            });
        }
        if e > 1e4 {
            return Err(Error::Enumeration {
                message: format!("fewer than {count} shooting eigenvalues below E = 1e4"),
                partial: records,
            });
        }
    }
    Ok(records)
}
