use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result, Window};
use crate::specfun::riemann_siegel_theta;
use crate::ComplexValue;

/// `|E|` bound of the Euler–Maclaurin evaluation.
pub const ZETA_MAX_HEIGHT: f64 = 200.0;

/// Sampling step of the argument tracker; well below the smallest gap
/// between zeros with ordinate under [`ZETA_MAX_HEIGHT`].
pub const ARG_TRACK_STEP: f64 = 0.02;

/// `|ζ|` below which `S(E)` is considered undefined, measured as `|Z(E)|`.
pub const NEAR_ZERO: f64 = 1e-12;

/// `B_{2k} / (2k)!` for k = 1..=4.
const TAIL_COEFFS: [f64; 4] = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0];

/// `ζ(½ + iE)` by Euler–Maclaurin summation with `N = max(20, ⌈2|E|⌉)` terms
/// and four Bernoulli tail corrections.
pub fn zeta_critical_line(energy: f64) -> Result<ComplexValue> {
    if !(energy.is_finite() && energy.abs() <= ZETA_MAX_HEIGHT) {
        return Err(Error::Range {
            value: energy,
            window: Window(-ZETA_MAX_HEIGHT, ZETA_MAX_HEIGHT),
        });
    }
    let s = ComplexValue::new(0.5, energy);
    let n = (2.0 * energy.abs()).ceil().max(20.0) as usize;

    let mut sum = ComplexValue::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;

    // Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s;
    let mut power = n_pow / nf;
    for (j, &coeff) in TAIL_COEFFS.iter().enumerate() {
        sum += rising * power * coeff;
        let m = 2.0 * j as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        power /= nf * nf;
    }
    Ok(sum)
}

/// Hardy's `Z(E) = e^{iϑ(E)} ζ(½ + iE)`, real for real `E`.
pub fn hardy_z(energy: f64) -> Result<f64> {
    let zeta = zeta_critical_line(energy)?;
    let rotated = zeta * ComplexValue::new(0.0, riemann_siegel_theta(energy)).exp();
    Ok(rotated.re)
}

/// Smooth zero count `⟨N(E)⟩ = ϑ(E)/π + 1`.
pub fn n_smooth(energy: f64) -> f64 {
    riemann_siegel_theta(energy) / PI + 1.0
}

/// `S(E) = arg ζ(½ + iE) / π`.
///
/// The argument is continued along `½ + it`, `t: 0 → E`. On that line
/// `ζ = e^{-iϑ} Z` with `Z` real, so the continuous argument is `-ϑ(t)` plus a
/// multiple of `π` that changes only where `Z` changes sign. The branch starts
/// at `arg ζ(½) = -π` (`ζ(½) < 0`) and each zero crossing adds `+π`; this is
/// the convention under which `N(E) = ⟨N(E)⟩ + S(E)` holds. Consequently
/// `S(E) → -1` as `E → 0⁺`.
pub fn s_fluctuation(energy: f64) -> Result<f64> {
    let mut tracker = ArgumentTracker::new();
    tracker.advance_to(energy)
}

/// Incremental version of [`s_fluctuation`] for ascending energies.
#[derive(Debug, Clone)]
pub struct ArgumentTracker {
    position: f64,
    last_z: f64,
    /// Multiple of `π` in `arg ζ = -ϑ + π·branch`.
    branch: i64,
}

impl Default for ArgumentTracker {
    fn default() -> Self {
        Self::new()
    }
}

impl ArgumentTracker {
    pub fn new() -> Self {
        // Z(0) = ζ(½) < 0: arg starts at -π.
        Self {
            position: 0.0,
            last_z: -1.0,
            branch: -1,
        }
    }

    /// Current energy of the tracker.
    pub fn position(&self) -> f64 {
        self.position
    }

    /// Moves to `energy ≥ position()` and returns `S(energy)`.
    pub fn advance_to(&mut self, energy: f64) -> Result<f64> {
        if !(energy.is_finite() && (0.0..=ZETA_MAX_HEIGHT).contains(&energy)) {
            return Err(Error::Range {
                value: energy,
                window: Window(0.0, ZETA_MAX_HEIGHT),
            });
        }
        if energy < self.position {
            return Err(Error::Domain(format!(
                "argument tracker is at E = {} and cannot move back to {energy}",
                self.position
            )));
        }
        // |ζ| = |Z| on the line; the imaginary residue of e^{iϑ}ζ is
        // truncation error (~1e-11), so |Z| is the sharper modulus estimate.
        let modulus = hardy_z(energy)?.abs();
        if modulus < NEAR_ZERO {
            return Err(Error::NearZero { energy, modulus });
        }

        let span = energy - self.position;
        let steps = (span / ARG_TRACK_STEP).ceil() as usize;
        let start = self.position;
        let samples = (1..=steps)
            .into_par_iter()
            .map(|i| {
                let t = if i == steps {
                    energy
                } else {
                    start + span * i as f64 / steps as f64
                };
                hardy_z(t)
            })
            .collect::<Result<Vec<_>>>()?;
        for z in samples {
            if z != 0.0 && (z > 0.0) != (self.last_z > 0.0) {
                self.branch += 1;
            }
            if z != 0.0 {
                self.last_z = z;
            }
        }
        self.position = energy;
        Ok(self.branch as f64 - riemann_siegel_theta(energy) / PI)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_half() {
        let z = zeta_critical_line(0.0).unwrap();
        assert!((z.re + 1.460_354_508_809_586_8).abs() < 1e-12, "{z}");
        assert_eq!(z.im, 0.0);
    }

    #[test]
    fn conjugation() {
        let a = zeta_critical_line(9.0).unwrap();
        let b = zeta_critical_line(-9.0).unwrap();
        assert!((a.conj() - b).norm() < 1e-12);
    }

    #[test]
    fn window() {
        assert!(matches!(
            zeta_critical_line(200.5),
            Err(Error::Range { .. })
        ));
        assert!(matches!(s_fluctuation(-1.0), Err(Error::Range { .. })));
    }

    #[test]
    fn tracker_starts_on_minus_one() {
        let s = s_fluctuation(1e-6).unwrap();
        assert!((s + 1.0).abs() < 1e-5, "{s}");
    }

    #[test]
    fn tracker_cannot_rewind() {
        let mut t = ArgumentTracker::new();
        t.advance_to(5.0).unwrap();
        assert!(t.advance_to(4.0).is_err());
    }
}
