//! Sweep engine, figure presets, opposite-tendency detector, and the
//! command-line front end over `xxzdm-core`.

pub mod cli;
pub mod figures;
pub mod format;
pub mod sweep;
pub mod tendency;

pub use cli::cli_main;
pub use figures::{figure_preset, render_figure_csv, FigureId, FigurePreset};
pub use sweep::{run_sweep, sweep_csv, Axis, ModelArg, Quantity, SweepError, SweepResult, SweepSpec};
pub use tendency::{detect_opposite_tendency, OppositeInterval};
