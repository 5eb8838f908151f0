//! Detector for DM-strength regions where discord and concurrence move in
//! opposite directions.

use rayon::prelude::*;
use serde::Serialize;

use xxzdm_core::{quantum_discord, thermal_state, ModelParams};

use crate::sweep::{ModelArg, SweepError};

/// Finite-difference slopes below this (per unit D) count as flat.
pub const SLOPE_THRESHOLD: f64 = 1e-6;

/// A maximal run of grid cells whose discord and concurrence slopes have
/// strictly opposite signs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OppositeInterval {
    pub d_start: f64,
    pub d_end: f64,
    /// Sign of d(discord)/dD on the interval: -1 or +1.
    pub discord_slope_sign: i8,
    /// Sign of d(concurrence)/dD on the interval: -1 or +1.
    pub concurrence_slope_sign: i8,
}

/// Sample discord and concurrence at `points` equally spaced D values in
/// `[d_start, d_stop]` at fixed couplings and temperature, then report the
/// maximal intervals where the finite-difference slopes have strictly
/// opposite signs and both exceed [`SLOPE_THRESHOLD`] in magnitude.
pub fn detect_opposite_tendency(
    model: ModelArg,
    j: f64,
    jz: f64,
    t: f64,
    d_start: f64,
    d_stop: f64,
    points: usize,
) -> Result<Vec<OppositeInterval>, SweepError> {
    if t <= 0.0 {
        return Err(SweepError::NonPositiveTemperature(t));
    }
    if points < 2 {
        return Err(SweepError::AxisTooShort("D".to_string()));
    }
    if !(d_start < d_stop) {
        return Err(SweepError::AxisReversed("D".to_string()));
    }

    let span = d_stop - d_start;
    let ds: Vec<f64> = (0..points)
        .map(|i| d_start + span * i as f64 / (points - 1) as f64)
        .collect();

    let samples = ds
        .par_iter()
        .map(|&d| {
            let p = ModelParams::new(model.into(), j, jz, d, t);
            let rho = thermal_state(&p)?;
            let report = quantum_discord(&rho).map_err(|e| SweepError::Numerical(e.to_string()))?;
            Ok((report.quantum_discord, report.concurrence))
        })
        .collect::<Result<Vec<_>, SweepError>>()?;

    Ok(merge_opposite_cells(&ds, &samples))
}

/// Per-cell slope classification and merging of adjacent cells that share an
/// opposite-sign pattern.
fn merge_opposite_cells(ds: &[f64], samples: &[(f64, f64)]) -> Vec<OppositeInterval> {
    let mut intervals: Vec<OppositeInterval> = Vec::new();
    for k in 0..ds.len() - 1 {
        let dd = ds[k + 1] - ds[k];
        let discord_slope = (samples[k + 1].0 - samples[k].0) / dd;
        let concurrence_slope = (samples[k + 1].1 - samples[k].1) / dd;

        let pattern = if discord_slope < -SLOPE_THRESHOLD && concurrence_slope > SLOPE_THRESHOLD {
            Some((-1i8, 1i8))
        } else if discord_slope > SLOPE_THRESHOLD && concurrence_slope < -SLOPE_THRESHOLD {
            Some((1i8, -1i8))
        } else {
            None
        };

        if let Some((dq, dc)) = pattern {
            let extend = intervals.last().is_some_and(|last| {
                last.discord_slope_sign == dq
                    && last.concurrence_slope_sign == dc
                    && last.d_end == ds[k]
            });
            if extend {
                intervals.last_mut().unwrap().d_end = ds[k + 1];
            } else {
                intervals.push(OppositeInterval {
                    d_start: ds[k],
                    d_end: ds[k + 1],
                    discord_slope_sign: dq,
                    concurrence_slope_sign: dc,
                });
            }
        }
    }
    intervals
}
