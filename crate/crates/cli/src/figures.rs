//! Sweep presets reproducing the figure parameter sets: discord or
//! concurrence versus temperature for fixed coupling families, plus two
//! (T, D) surfaces.
//!
//! Captions fix the couplings but not the temperature grid; the presets use
//! 60 points on [0.05, 3] (and a 60x40 surface grid with D on [0, 2]), so
//! the CSV output is a qualitative reproduction of each figure.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::format::{csv_line, fmt_sig};
use crate::sweep::{run_sweep, sweep_csv, Axis, ModelArg, Quantity, SweepError, SweepSpec};

const T_POINTS: usize = 60;
const SURFACE_D_POINTS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    F1a,
    F1b,
    F1c,
    F2a,
    F2b,
    F3,
    F4,
    F5a,
    F5b,
    F6,
}

impl FigureId {
    pub const ALL: [FigureId; 10] = [
        FigureId::F1a,
        FigureId::F1b,
        FigureId::F1c,
        FigureId::F2a,
        FigureId::F2b,
        FigureId::F3,
        FigureId::F4,
        FigureId::F5a,
        FigureId::F5b,
        FigureId::F6,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::F1a => "1a",
            FigureId::F1b => "1b",
            FigureId::F1c => "1c",
            FigureId::F2a => "2a",
            FigureId::F2b => "2b",
            FigureId::F3 => "3",
            FigureId::F4 => "4",
            FigureId::F5a => "5a",
            FigureId::F5b => "5b",
            FigureId::F6 => "6",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown figure id `{0}`; valid ids: 1a, 1b, 1c, 2a, 2b, 3, 4, 5a, 5b, 6")]
pub struct UnknownFigureId(String);

impl FromStr for FigureId {
    type Err = UnknownFigureId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .iter()
            .find(|id| id.as_str() == s)
            .copied()
            .ok_or_else(|| UnknownFigureId(s.to_string()))
    }
}

/// A figure is either a family of single-axis sweeps (one per curve, sharing
/// the temperature axis) or one two-axis surface sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub id: FigureId,
    /// One spec per curve; exactly one spec carrying `axis2` for surfaces.
    pub specs: Vec<SweepSpec>,
    /// CSV column name per spec, e.g. `discord_D0.5`.
    pub labels: Vec<String>,
}

impl FigurePreset {
    pub fn is_surface(&self) -> bool {
        self.specs.len() == 1 && self.specs[0].axis2.is_some()
    }
}

fn t_axis() -> Axis {
    Axis::new("T", 0.05, 3.0, T_POINTS)
}

fn curve_family(
    id: FigureId,
    model: ModelArg,
    quantity: Quantity,
    fixed: &[(&str, f64)],
    varied: (&str, &[f64]),
) -> FigurePreset {
    let (vary_name, values) = varied;
    let mut specs = Vec::new();
    let mut labels = Vec::new();
    for &value in values {
        let mut map: BTreeMap<String, f64> = fixed
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        map.insert(vary_name.to_string(), value);
        specs.push(SweepSpec {
            model,
            fixed: map,
            axis1: t_axis(),
            axis2: None,
            quantities: vec![quantity],
        });
        labels.push(format!("{}_{}{:?}", quantity.column_name(), vary_name, value));
    }
    FigurePreset { id, specs, labels }
}

fn surface(id: FigureId, model: ModelArg, fixed: &[(&str, f64)]) -> FigurePreset {
    let map: BTreeMap<String, f64> = fixed.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    FigurePreset {
        id,
        specs: vec![SweepSpec {
            model,
            fixed: map,
            axis1: t_axis(),
            axis2: Some(Axis::new("D", 0.0, 2.0, SURFACE_D_POINTS)),
            quantities: vec![Quantity::Discord],
        }],
        labels: vec![Quantity::Discord.column_name().to_string()],
    }
}

/// The exact coupling sets from the figure captions.
pub fn figure_preset(id: FigureId) -> FigurePreset {
    const DM_SET: [f64; 3] = [0.5, 0.7, 1.0];
    match id {
        FigureId::F1a => curve_family(
            id,
            ModelArg::Dz,
            Quantity::Discord,
            &[("J", 1.0), ("Jz", 0.2)],
            ("D", &DM_SET),
        ),
        FigureId::F1b => curve_family(
            id,
            ModelArg::Dz,
            Quantity::Concurrence,
            &[("J", 1.0), ("Jz", 0.2)],
            ("D", &DM_SET),
        ),
        FigureId::F1c => curve_family(
            id,
            ModelArg::Dz,
            Quantity::Discord,
            &[("J", 1.0), ("Jz", 1.0)],
            ("D", &DM_SET),
        ),
        FigureId::F2a => curve_family(
            id,
            ModelArg::Dz,
            Quantity::Discord,
            &[("J", 1.0), ("D", 1.0)],
            ("Jz", &[1.0, 2.0, 3.0]),
        ),
        FigureId::F2b => curve_family(
            id,
            ModelArg::Dz,
            Quantity::Concurrence,
            &[("J", 1.0), ("D", 1.0)],
            ("Jz", &[1.0, 2.0, 3.0]),
        ),
        FigureId::F3 => surface(id, ModelArg::Dz, &[("J", 1.0), ("Jz", 0.2)]),
        FigureId::F4 => curve_family(
            id,
            ModelArg::Dx,
            Quantity::Discord,
            &[("J", 1.0), ("D", 1.0)],
            ("Jz", &[0.0, 0.4, 0.9]),
        ),
        // The Fig. 5 caption reuses the D_z label, but the section it
        // belongs to is the Dx model; the values are read as D_x.
        FigureId::F5a => curve_family(
            id,
            ModelArg::Dx,
            Quantity::Discord,
            &[("J", 1.0), ("Jz", 1.0)],
            ("D", &DM_SET),
        ),
        FigureId::F5b => curve_family(
            id,
            ModelArg::Dx,
            Quantity::Discord,
            &[("J", 1.0), ("Jz", 0.2)],
            ("D", &DM_SET),
        ),
        FigureId::F6 => surface(id, ModelArg::Dx, &[("J", 1.0), ("Jz", 0.2)]),
    }
}

/// Run a preset and merge its sweeps into one CSV: `T,<curve columns>` for
/// curve families, `T,D,discord` for surfaces.
pub fn render_figure_csv(id: FigureId) -> Result<String, SweepError> {
    let preset = figure_preset(id);
    if preset.is_surface() {
        return Ok(sweep_csv(&run_sweep(&preset.specs[0])?));
    }

    let results = preset
        .specs
        .iter()
        .map(run_sweep)
        .collect::<Result<Vec<_>, _>>()?;

    let mut header = vec!["T".to_string()];
    header.extend(preset.labels.iter().cloned());
    let mut out = csv_line(header);

    let rows = results[0].rows.len();
    for i in 0..rows {
        let mut cells = vec![fmt_sig(results[0].rows[i].axis_values[0])];
        for result in &results {
            cells.push(fmt_sig(result.rows[i].values[0]));
        }
        out.push_str(&csv_line(cells));
    }
    Ok(out)
}
