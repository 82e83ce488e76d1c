//! Riemann-zero reference layer: `ζ(½ + iE)`, the smooth and fluctuating parts
//! of the zero count, zero tables, and the side-by-side comparison with the
//! model's counting function.

mod critical_line;
mod table;

use serde::Serialize;

use crate::error::{Error, Result, Window};
use crate::spectrum::{counting_model, SpectralConfig};

pub use critical_line::{
    hardy_z, n_smooth, s_fluctuation, zeta_critical_line, ArgumentTracker, ARG_TRACK_STEP,
    NEAR_ZERO, ZETA_MAX_HEIGHT,
};
pub use table::{
    bundled_zero_table, count_zeros, load_zero_table, load_zero_table_file, parse_zero_table,
    LoadOptions, ZeroTable,
};

/// One grid point of the counting comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountingSample {
    pub energy: f64,
    /// Model count `Φ(E)/π + ½`.
    pub n_model: f64,
    /// `⟨N(E)⟩ = ϑ(E)/π + 1`.
    pub n_smooth: f64,
    /// `S(E)`.
    pub s_fluct: f64,
    /// Tabulated zeros `≤ E`.
    pub n_table: usize,
}

/// Assembles model count, smooth count, fluctuation and tabulated count on a
/// grid. Output order follows `e_grid`.
pub fn compare_counting(
    config: &SpectralConfig,
    table: &ZeroTable,
    e_grid: &[f64],
) -> Result<Vec<CountingSample>> {
    for &e in e_grid {
        if !(e.is_finite() && (0.0..=ZETA_MAX_HEIGHT).contains(&e)) {
            return Err(Error::Range {
                value: e,
                window: Window(0.0, ZETA_MAX_HEIGHT),
            });
        }
    }
    let mut order: Vec<usize> = (0..e_grid.len()).collect();
    order.sort_by(|&a, &b| e_grid[a].total_cmp(&e_grid[b]));

    let mut tracker = ArgumentTracker::new();
    let mut out = vec![None; e_grid.len()];
    for i in order {
        let energy = e_grid[i];
        out[i] = Some(CountingSample {
            energy,
            n_model: counting_model(energy, config)?,
            n_smooth: n_smooth(energy),
            s_fluct: tracker.advance_to(energy)?,
            n_table: count_zeros(table, energy),
        });
    }
    Ok(out
        .into_iter()
        .map(|s| s.expect("every grid point is filled"))
        .collect())
}

/// Aggregate discrepancies of a comparison run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountingSummary {
    pub points: usize,
    /// RMS of `n_model - n_table`.
    pub rms_model_minus_table: f64,
    /// RMS of `n_smooth + s_fluct - n_table`.
    pub rms_formula_minus_table: f64,
    /// Grid points where `round(n_smooth + s_fluct) != n_table`.
    pub formula_mismatches: usize,
}

impl CountingSummary {
    pub fn from_samples(samples: &[CountingSample]) -> Self {
        let n = samples.len().max(1) as f64;
        let rms = |f: &dyn Fn(&CountingSample) -> f64| {
            (samples.iter().map(|s| f(s).powi(2)).sum::<f64>() / n).sqrt()
        };
        Self {
            points: samples.len(),
            rms_model_minus_table: rms(&|s| s.n_model - s.n_table as f64),
            rms_formula_minus_table: rms(&|s| s.n_smooth + s.s_fluct - s.n_table as f64),
            formula_mismatches: samples
                .iter()
                .filter(|s| (s.n_smooth + s.s_fluct).round() as i64 != s.n_table as i64)
                .count(),
        }
    }
}
