use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::{first_eigenvalues, Condition};
use crate::zeta::ZeroTable;

/// Knobs of [`calibrate_u0`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationOptions {
    pub condition: Condition,
    /// Eigenvalue tolerance used inside the objective.
    pub tol_e: f64,
    /// Search interval in `ln u0`.
    pub ln_u0_lo: f64,
    pub ln_u0_hi: f64,
    /// Golden-section stops once the bracket is narrower than this in `ln u0`.
    pub ln_tol: f64,
    /// Points of the coarse pre-scan that locates the bracket and checks
    /// unimodality.
    pub coarse_points: usize,
}

impl Default for CalibrationOptions {
    fn default() -> Self {
        Self {
            condition: Condition::Asymptotic,
            tol_e: 1e-11,
            ln_u0_lo: (1e-12f64).ln(),
            ln_u0_hi: 0.0,
            ln_tol: 1e-10,
            coarse_points: 28,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Calibration {
    pub u0: f64,
    /// Sum of squared eigenvalue/target differences at `u0`.
    pub objective: f64,
    pub rms_residual: f64,
    /// Model eigenvalues at `u0`, paired with the targets.
    pub eigenvalues: Vec<f64>,
    pub targets: Vec<f64>,
    pub evaluations: usize,
    /// Set when the coarse scan finds more than one local minimum or the
    /// optimum sits on the edge of the admissible range.
    pub warning: Option<String>,
}

/// Least-squares fit of the cutoff: minimizes `Σ_k (E_k(u0) - t_k)²` over the
/// first `count` eigenvalues and ordinates, by golden-section search on
/// `ln u0`. Cutoffs where the phase is not monotone are treated as
/// inadmissible. Deterministic for fixed inputs.
pub fn calibrate_u0(
    targets: &ZeroTable,
    count: usize,
    options: &CalibrationOptions,
) -> Result<Calibration> {
    if count == 0 {
        return Err(Error::Config("calibration needs count >= 1".into()));
    }
    if targets.len() < count {
        return Err(Error::Config(format!(
            "calibration on {count} ordinates needs a table with at least {count} entries, got {}",
            targets.len()
        )));
    }
    if options.ln_u0_lo.partial_cmp(&options.ln_u0_hi) != Some(Ordering::Less)
        || options.coarse_points < 3
    {
        return Err(Error::Config("invalid calibration bracket".into()));
    }
    let t = &targets.ordinates()[..count];

    let objective = |ln_u0: f64| -> Result<f64> {
        match first_eigenvalues(ln_u0.exp(), options.condition, count, options.tol_e) {
            Ok(recs) => Ok(recs
                .iter()
                .zip(t)
                .map(|(r, t)| (r.energy - t).powi(2))
                .sum()),
            Err(Error::Monotonicity { .. }) | Err(Error::Config(_)) => Ok(f64::INFINITY),
            Err(e) => Err(e),
        }
    };

    let n = options.coarse_points;
    let step = (options.ln_u0_hi - options.ln_u0_lo) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n).map(|i| options.ln_u0_lo + step * i as f64).collect();
    let fs = xs
        .par_iter()
        .map(|&x| objective(x))
        .collect::<Result<Vec<_>>>()?;
    let mut evaluations = n;

    let best = (0..n)
        .filter(|&i| fs[i].is_finite())
        .min_by(|&i, &j| fs[i].total_cmp(&fs[j]))
        .ok_or_else(|| Error::Config("no admissible cutoff in the calibration bracket".into()))?;

    let mut warnings = Vec::new();
    let minima = (0..n)
        .filter(|&i| {
            fs[i].is_finite() && (i == 0 || fs[i] < fs[i - 1]) && (i + 1 == n || fs[i] <= fs[i + 1])
        })
        .count();
    if minima > 1 {
        warnings.push(format!(
            "objective is not unimodal on the bracket ({minima} local minima); returning the best value found"
        ));
    }

    // Golden section on the cells adjacent to the best coarse point.
    let mut a = xs[best.saturating_sub(1)];
    let mut b = xs[(best + 1).min(n - 1)];
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = objective(c)?;
    let mut fd = objective(d)?;
    evaluations += 2;
    let (mut best_x, mut best_f) = (xs[best], fs[best]);
    while (b - a).abs() > options.ln_tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = objective(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = objective(d)?;
        }
        evaluations += 1;
        for (x, f) in [(c, fc), (d, fd)] {
            if f < best_f {
                best_x = x;
                best_f = f;
            }
        }
    }

    let right_edge_blocked = best + 1 == n || !fs[best + 1].is_finite();
    let left_edge_blocked = best == 0 || !fs[best - 1].is_finite();
    if (right_edge_blocked && best_x >= xs[best]) || (left_edge_blocked && best_x <= xs[best]) {
        warnings.push(
            "optimum lies on the edge of the admissible cutoff range; the targets are out of reach"
                .to_string(),
        );
    }

    let u0 = best_x.exp();
    let recs = first_eigenvalues(u0, options.condition, count, options.tol_e)?;
    let eigenvalues: Vec<f64> = recs.iter().map(|r| r.energy).collect();
    let objective_at: f64 = eigenvalues
        .iter()
        .zip(t)
        .map(|(e, t)| (e - t).powi(2))
        .sum();
    Ok(Calibration {
        u0,
        objective: objective_at,
        rms_residual: (objective_at / count as f64).sqrt(),
        eigenvalues,
        targets: t.to_vec(),
        evaluations,
        warning: if warnings.is_empty() {
            None
        } else {
            Some(warnings.join("; "))
        },
    })
}
