use std::f64::consts::FRAC_PI_4;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spectrum::phase::{level_count, level_value, SpectralPhase};
use crate::spectrum::{Condition, EigenvalueRecord, SpectralConfig};

/// Tolerated decrease between scan points before the phase is declared
/// non-monotone (relative to the phase magnitude).
const MONOTONE_SLACK: f64 = 1e-12;

/// Energy of the extra sample taken when a scan starts at the origin. Near
/// `E = 0` the phase is `Φ'(0) E + O(E³)` and `Φ'(0)` changes sign inside the
/// admissible cutoff range, so a dip can hide inside the first scan step.
const ORIGIN_PROBE: f64 = 1e-4;

/// Scan grid on `[lo, hi]`. Steps are capped at `scan_step` and at
/// `π/4 / Φ'` so a step never skips more than a quarter level spacing.
fn scan_grid(phase: &SpectralPhase, lo: f64, hi: f64, scan_step: f64) -> Vec<f64> {
    let mut grid = vec![lo];
    let mut e = lo;
    while e < hi {
        let h = scan_step.min(FRAC_PI_4 / phase.slope_estimate(e));
        e = (e + h).min(hi);
        grid.push(e);
    }
    grid
}

struct Scan {
    grid: Vec<f64>,
    values: Vec<f64>,
}

fn scan(phase: &SpectralPhase, lo: f64, hi: f64, scan_step: f64) -> Result<Scan> {
    if lo < ORIGIN_PROBE && ORIGIN_PROBE < hi {
        let drop = phase.value(lo)? - phase.value(ORIGIN_PROBE)?;
        if drop > MONOTONE_SLACK {
            return Err(Error::Monotonicity {
                energy: ORIGIN_PROBE,
                drop,
            });
        }
    }
    let grid = scan_grid(phase, lo, hi, scan_step);
    let values = grid
        .par_iter()
        .map(|&e| phase.value(e))
        .collect::<Result<Vec<_>>>()?;
    for (i, w) in values.windows(2).enumerate() {
        let drop = w[0] - w[1];
        if drop > MONOTONE_SLACK * (1.0 + w[0].abs()) {
            return Err(Error::Monotonicity {
                energy: grid[i + 1],
                drop,
            });
        }
    }
    Ok(Scan { grid, values })
}

/// All eigenvalues in `(e_min, e_max]`, ascending and consecutively indexed.
///
/// The phase is scanned on an adaptive grid, each crossing of a level
/// `π(k - ½)` is bracketed, and brackets are refined by bisection to `tol_e`.
/// Brackets are independent and are refined in parallel; the result does not
/// depend on the thread count.
pub fn eigenvalues(config: &SpectralConfig) -> Result<Vec<EigenvalueRecord>> {
    config.validate()?;
    let phase = SpectralPhase::new(config.u0, config.condition)?;
    let lo = config.effective_e_min();
    if lo >= config.e_max {
        return Ok(Vec::new());
    }
    let scan = scan(&phase, lo, config.e_max, config.scan_step)?;

    let mut brackets = Vec::new();
    for i in 0..scan.grid.len() - 1 {
        let below = level_count(scan.values[i]);
        let above = level_count(scan.values[i + 1]);
        for k in below + 1..=above {
            brackets.push((k, scan.grid[i], scan.grid[i + 1]));
        }
    }

    let solved: Vec<Result<EigenvalueRecord>> = brackets
        .par_iter()
        .map(|&(k, a, b)| solve_level(&phase, k, a, b, config.tol_e))
        .collect();

    let mut records: Vec<EigenvalueRecord> = Vec::with_capacity(solved.len());
    for r in solved {
        match r {
            Ok(rec) => {
                if let Some(prev) = records.last() {
                    if rec.energy <= prev.energy {
                        return Err(Error::Enumeration {
                            message: format!(
                                "eigenvalues {} and {} are not strictly ordered",
                                prev.index, rec.index
                            ),
                            partial: records,
                        });
                    }
                }
                records.push(rec);
            }
            Err(e) => {
                return Err(Error::Enumeration {
                    message: e.to_string(),
                    partial: records,
                })
            }
        }
    }
    Ok(records)
}

/// Bisection for `Φ(E) = π(k - ½)` on a bracket with `Φ(lo) < level ≤ Φ(hi)`.
fn solve_level(
    phase: &SpectralPhase,
    k: usize,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<EigenvalueRecord> {
    let target = level_value(k);
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if phase.value(mid)? < target {
            a = mid;
        } else {
            b = mid;
        }
    }
    let energy = 0.5 * (a + b);
    Ok(EigenvalueRecord {
        index: k,
        energy,
        residual: (phase.value(energy)? - target).abs(),
        method: phase.condition().into(),
    })
}

/// The first `count` eigenvalues, growing the window until enough are found.
pub fn first_eigenvalues(
    u0: f64,
    condition: Condition,
    count: usize,
    tol_e: f64,
) -> Result<Vec<EigenvalueRecord>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut e_max = 1.0;
    loop {
        let config = SpectralConfig::new(u0, e_max)
            .with_condition(condition)
            .with_tol(tol_e);
        let mut found = eigenvalues(&config)?;
        if found.len() >= count {
            found.truncate(count);
            return Ok(found);
        }
        e_max *= 2.0;
        if e_max > 1e6 {
            return Err(Error::Enumeration {
                message: format!("fewer than {count} eigenvalues below E = 1e6"),
                partial: found,
            });
        }
    }
}

/// Smooth eigenvalue count `Φ(E)/π + ½` of the model.
///
/// The staircase `floor(counting_model(E))` equals the number of eigenvalues
/// in `(0, E]`. Checks that the phase is monotone on `[0, E]` first.
pub fn counting_model(energy: f64, config: &SpectralConfig) -> Result<f64> {
    if !(energy.is_finite() && energy >= 0.0) {
        return Err(Error::Domain(format!("energy must be >= 0, got {energy}")));
    }
    let phase = SpectralPhase::new(config.u0, config.condition)?;
    if !(config.scan_step.is_finite() && config.scan_step > 0.0) {
        return Err(Error::Config(format!(
            "scan_step must be > 0, got {}",
            config.scan_step
        )));
    }
    if energy == 0.0 {
        return Ok(0.5);
    }
    let lo = config.tol_e.min(energy);
    let scan = scan(&phase, lo, energy, config.scan_step)?;
    let value = *scan.values.last().expect("scan grid is never empty");
    Ok(value / std::f64::consts::PI + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_monotone_phase_is_reported() {
        // Φ'(0) = -γ - ln u0 < 0 once u0 > e^{-γ}.
        let config = SpectralConfig::new(2.0, 5.0);
        assert!(matches!(
            eigenvalues(&config),
            Err(Error::Monotonicity { .. })
        ));
        assert!(matches!(
            counting_model(3.0, &config),
            Err(Error::Monotonicity { .. })
        ));
    }

    #[test]
    fn dip_narrower_than_a_scan_step_is_caught() {
        // Just above e^{-γ} ≈ 0.5615 the dip ends well before E = 0.05.
        let config = SpectralConfig::new(0.565, 5.0);
        assert!(matches!(
            eigenvalues(&config),
            Err(Error::Monotonicity { .. })
        ));
        assert!(eigenvalues(&SpectralConfig::new(0.56, 5.0)).is_ok());
    }

    #[test]
    fn records_are_consecutive() {
        let config = SpectralConfig::new(1e-3, 10.0).with_window(2.0, 10.0);
        let recs = eigenvalues(&config).unwrap();
        assert!(recs.len() > 5);
        for w in recs.windows(2) {
            assert_eq!(w[1].index, w[0].index + 1);
            assert!(w[1].energy > w[0].energy);
        }
        assert!(recs[0].energy > 2.0);
        let below = eigenvalues(&SpectralConfig::new(1e-3, 2.0)).unwrap();
        assert_eq!(recs[0].index, below.len() + 1);
    }

    #[test]
    fn counting_at_zero() {
        let config = SpectralConfig::new(1e-3, 10.0);
        assert_eq!(counting_model(0.0, &config).unwrap(), 0.5);
    }

    #[test]
    fn first_eigenvalues_grows_window() {
        let recs = first_eigenvalues(1e-3, Condition::Asymptotic, 40, 1e-9).unwrap();
        assert_eq!(recs.len(), 40);
        assert_eq!(recs[39].index, 40);
        assert!(recs[39].energy > 1.0);
    }
}
