//! Parameter-sweep engine: a validated grid over couplings and temperature,
//! evaluated in parallel with deterministic row ordering (axis1 outer, axis2
//! inner).

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use xxzdm_core::{
    concurrence_closed_dz, concurrence_wootters, quantum_discord, thermal_state, Model,
    ModelError, ModelParams,
};

use crate::format::{csv_line, fmt_sig};

/// Lowest admissible start of a temperature axis.
pub const T_AXIS_FLOOR: f64 = 1e-2;

/// Serde- and clap-friendly model selector mirroring [`Model`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModelArg {
    Dz,
    Dx,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Dz => Model::Dz,
            ModelArg::Dx => Model::Dx,
        }
    }
}

impl fmt::Display for ModelArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelArg::Dz => write!(f, "dz"),
            ModelArg::Dx => write!(f, "dx"),
        }
    }
}

/// Quantities a sweep can evaluate per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    #[value(name = "discord")]
    Discord,
    #[value(name = "classical_correlation")]
    ClassicalCorrelation,
    #[value(name = "mutual_information")]
    MutualInformation,
    #[value(name = "concurrence")]
    Concurrence,
    /// The published closed-form concurrence expression (Dz model only).
    #[value(name = "concurrence_closed")]
    ConcurrenceClosed,
}

impl Quantity {
    pub fn column_name(&self) -> &'static str {
        match self {
            Quantity::Discord => "discord",
            Quantity::ClassicalCorrelation => "classical_correlation",
            Quantity::MutualInformation => "mutual_information",
            Quantity::Concurrence => "concurrence",
            Quantity::ConcurrenceClosed => "concurrence_closed",
        }
    }
}

/// The sweepable parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamName {
    T,
    J,
    Jz,
    D,
}

impl ParamName {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "T" => Some(ParamName::T),
            "J" => Some(ParamName::J),
            "Jz" | "J_z" => Some(ParamName::Jz),
            "D" => Some(ParamName::D),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ParamName::T => "T",
            ParamName::J => "J",
            ParamName::Jz => "Jz",
            ParamName::D => "D",
        }
    }
}

/// One linear axis of a sweep grid, endpoints inclusive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(name: &str, start: f64, stop: f64, count: usize) -> Self {
        Self {
            name: name.to_string(),
            start,
            stop,
            count,
        }
    }

    fn values(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        (0..self.count)
            .map(|i| self.start + span * i as f64 / (self.count - 1) as f64)
            .collect()
    }
}

/// Sweep description; the JSON config format mirrors these field names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub model: ModelArg,
    #[serde(default)]
    pub fixed: BTreeMap<String, f64>,
    pub axis1: Axis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis2: Option<Axis>,
    pub quantities: Vec<Quantity>,
}

/// One output row: the axis value(s) followed by one value per requested
/// quantity, in spec order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub axis_values: Vec<f64>,
    pub values: Vec<f64>,
}

/// Tool version and optimizer settings recorded with every sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub tool_version: &'static str,
    pub optimizer: &'static str,
}

impl Provenance {
    fn current() -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION"),
            optimizer: "coarse grid 33x65 over [0,pi/2]x[0,2pi); compass refinement from pi/32 \
                        down to 1e-7 rad, improvement tolerance 1e-11",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
    pub provenance: Provenance,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("unknown axis `{0}` (valid: T, J, Jz, D)")]
    UnknownAxis(String),
    #[error("unknown parameter `{0}` (valid: T, J, Jz, D)")]
    UnknownParameter(String),
    #[error("axis `{0}` needs at least 2 points")]
    AxisTooShort(String),
    #[error("axis `{0}` needs start < stop")]
    AxisReversed(String),
    #[error("T axis must start at or above {T_AXIS_FLOOR}")]
    TemperatureAxisTooLow,
    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),
    #[error("parameter `{0}` given both as fixed and as an axis")]
    DuplicateParameter(&'static str),
    #[error("parameter `{0}` is neither fixed nor on an axis")]
    MissingParameter(&'static str),
    #[error("no quantities requested")]
    NoQuantities,
    #[error("concurrence_closed is defined for model dz only")]
    ClosedConcurrenceNeedsDz,
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl SweepError {
    /// 2 for usage errors (bad spec), 1 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            SweepError::Numerical(_) => 1,
            _ => 2,
        }
    }
}

impl From<ModelError> for SweepError {
    fn from(e: ModelError) -> Self {
        SweepError::Numerical(e.to_string())
    }
}

struct ResolvedAxis {
    param: ParamName,
    values: Vec<f64>,
}

struct Plan {
    model: Model,
    fixed: Vec<(ParamName, f64)>,
    axis1: ResolvedAxis,
    axis2: Option<ResolvedAxis>,
}

impl Plan {
    fn params_at(&self, v1: f64, v2: Option<f64>) -> ModelParams {
        let mut p = ModelParams::new(self.model, 0.0, 0.0, 0.0, 0.0);
        let mut set = |name: ParamName, value: f64| match name {
            ParamName::T => p.t = value,
            ParamName::J => p.j = value,
            ParamName::Jz => p.jz = value,
            ParamName::D => p.d = value,
        };
        for &(name, value) in &self.fixed {
            set(name, value);
        }
        set(self.axis1.param, v1);
        if let (Some(axis), Some(value)) = (&self.axis2, v2) {
            set(axis.param, value);
        }
        p
    }
}

fn resolve_axis(axis: &Axis) -> Result<ResolvedAxis, SweepError> {
    let param =
        ParamName::parse(&axis.name).ok_or_else(|| SweepError::UnknownAxis(axis.name.clone()))?;
    if axis.count < 2 {
        return Err(SweepError::AxisTooShort(axis.name.clone()));
    }
    if !(axis.start < axis.stop) {
        return Err(SweepError::AxisReversed(axis.name.clone()));
    }
    if param == ParamName::T && axis.start < T_AXIS_FLOOR {
        return Err(SweepError::TemperatureAxisTooLow);
    }
    Ok(ResolvedAxis {
        param,
        values: axis.values(),
    })
}

fn validate(spec: &SweepSpec) -> Result<Plan, SweepError> {
    if spec.quantities.is_empty() {
        return Err(SweepError::NoQuantities);
    }
    if spec.quantities.contains(&Quantity::ConcurrenceClosed) && spec.model == ModelArg::Dx {
        return Err(SweepError::ClosedConcurrenceNeedsDz);
    }

    let axis1 = resolve_axis(&spec.axis1)?;
    let axis2 = spec.axis2.as_ref().map(resolve_axis).transpose()?;

    let mut fixed = Vec::new();
    for (name, &value) in &spec.fixed {
        let param =
            ParamName::parse(name).ok_or_else(|| SweepError::UnknownParameter(name.clone()))?;
        if param == ParamName::T && value <= 0.0 {
            return Err(SweepError::NonPositiveTemperature(value));
        }
        fixed.push((param, value));
    }

    // Every parameter comes from exactly one place.
    let mut axis_params = vec![axis1.param];
    if let Some(a) = &axis2 {
        axis_params.push(a.param);
    }
    if axis_params.len() == 2 && axis_params[0] == axis_params[1] {
        return Err(SweepError::DuplicateParameter(axis_params[0].as_str()));
    }
    for name in [ParamName::T, ParamName::J, ParamName::Jz, ParamName::D] {
        let on_axis = axis_params.contains(&name);
        let is_fixed = fixed.iter().any(|(n, _)| *n == name);
        if on_axis && is_fixed {
            return Err(SweepError::DuplicateParameter(name.as_str()));
        }
        if !on_axis && !is_fixed {
            return Err(SweepError::MissingParameter(name.as_str()));
        }
    }

    Ok(Plan {
        model: spec.model.into(),
        fixed,
        axis1,
        axis2,
    })
}

fn evaluate_point(p: &ModelParams, quantities: &[Quantity]) -> Result<Vec<f64>, SweepError> {
    let rho = thermal_state(p)?;
    let needs_optimizer = quantities.iter().any(|q| {
        matches!(
            q,
            Quantity::Discord | Quantity::ClassicalCorrelation | Quantity::MutualInformation
        )
    });
    let report = if needs_optimizer {
        Some(quantum_discord(&rho).map_err(|e| SweepError::Numerical(e.to_string()))?)
    } else {
        None
    };

    let mut values = Vec::with_capacity(quantities.len());
    for q in quantities {
        let value = match q {
            Quantity::Discord => report.as_ref().unwrap().quantum_discord,
            Quantity::ClassicalCorrelation => report.as_ref().unwrap().classical_correlation,
            Quantity::MutualInformation => report.as_ref().unwrap().mutual_information,
            Quantity::Concurrence => match &report {
                Some(r) => r.concurrence,
                None => {
                    concurrence_wootters(&rho).map_err(|e| SweepError::Numerical(e.to_string()))?
                }
            },
            Quantity::ConcurrenceClosed => concurrence_closed_dz(p)?,
        };
        if value.is_nan() {
            return Err(SweepError::Numerical(format!(
                "{} is NaN at {p:?}",
                q.column_name()
            )));
        }
        values.push(value);
    }
    Ok(values)
}

/// Evaluate the requested quantities on the whole grid. Rows come back in
/// deterministic order (axis1 outer, axis2 inner) regardless of parallelism.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult, SweepError> {
    let plan = validate(spec)?;

    let mut points = Vec::new();
    match &plan.axis2 {
        None => {
            for &v1 in &plan.axis1.values {
                points.push((vec![v1], plan.params_at(v1, None)));
            }
        }
        Some(axis2) => {
            for &v1 in &plan.axis1.values {
                for &v2 in &axis2.values {
                    points.push((vec![v1, v2], plan.params_at(v1, Some(v2))));
                }
            }
        }
    }

    let rows = points
        .into_par_iter()
        .map(|(axis_values, p)| {
            evaluate_point(&p, &spec.quantities).map(|values| SweepRow { axis_values, values })
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(SweepResult {
        spec: spec.clone(),
        rows,
        provenance: Provenance::current(),
    })
}

/// CSV rendering: snake_case header, `,` separator, 12 significant digits,
/// `\n` line endings.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut header = vec![result.spec.axis1.name.clone()];
    if let Some(axis2) = &result.spec.axis2 {
        header.push(axis2.name.clone());
    }
    header.extend(
        result
            .spec
            .quantities
            .iter()
            .map(|q| q.column_name().to_string()),
    );

    let mut out = csv_line(header);
    for row in &result.rows {
        let cells = row
            .axis_values
            .iter()
            .chain(row.values.iter())
            .map(|&x| fmt_sig(x));
        out.push_str(&csv_line(cells));
    }
    out
}
