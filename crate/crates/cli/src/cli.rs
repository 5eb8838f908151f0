//! Command-line front end: `point`, `sweep`, `figure`, `critical-temp`, and
//! `opposite` subcommands. Exit codes: 0 success, 2 usage error, 1 numerical
//! failure; all errors go to stderr with an `error:` prefix.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use xxzdm_core::{
    critical_temperature, quantum_discord, thermal_state, CriticalTemperature, ModelError,
    ModelParams,
};

use crate::figures::{render_figure_csv, FigureId};
use crate::sweep::{run_sweep, sweep_csv, Axis, ModelArg, Quantity, SweepError, SweepSpec};
use crate::tendency::detect_opposite_tendency;

#[derive(Debug, Parser)]
#[command(
    name = "xxzdm",
    version,
    about = "Thermal quantum discord and entanglement of a two-qubit XXZ chain with DM interaction"
)]
struct Cli {
    /// Cap on worker threads for sweeps (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full correlation report for one parameter point, as JSON.
    Point(PointArgs),
    /// Parameter sweep over one or two axes, as CSV.
    Sweep(SweepArgs),
    /// Preset sweep reproducing one of the figure parameter sets, as CSV.
    Figure(FigureArgs),
    /// Temperature at which the thermal concurrence vanishes, as JSON.
    CriticalTemp(CriticalTempArgs),
    /// DM-strength intervals where discord and concurrence move oppositely, as JSON.
    Opposite(OppositeArgs),
}

#[derive(Debug, Args)]
struct ModelCouplings {
    /// Model variant: dz or dx.
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Exchange coupling J.
    #[arg(long = "J", allow_hyphen_values = true)]
    j: f64,
    /// Anisotropic coupling J_z.
    #[arg(long = "Jz", allow_hyphen_values = true)]
    jz: f64,
}

#[derive(Debug, Args)]
struct ModelPoint {
    #[command(flatten)]
    couplings: ModelCouplings,
    /// DM interaction strength (D_z or D_x per the model).
    #[arg(long = "D", allow_hyphen_values = true)]
    d: f64,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    at: ModelPoint,
    /// Temperature (k_B = 1).
    #[arg(long = "T")]
    t: f64,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// JSON config file mirroring the sweep-spec fields; flags override it.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    /// Fixed parameter, e.g. --fix J=1 (repeatable).
    #[arg(long = "fix", value_name = "NAME=VALUE")]
    fix: Vec<String>,
    /// Outer axis, NAME:START:STOP:COUNT (axis names: T, J, Jz, D).
    #[arg(long, value_name = "AXIS")]
    axis1: Option<String>,
    /// Optional inner axis, same format.
    #[arg(long, value_name = "AXIS")]
    axis2: Option<String>,
    /// Comma-separated quantities to evaluate.
    #[arg(long, value_delimiter = ',', value_enum)]
    quantities: Vec<Quantity>,
    /// Output CSV path (default: stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure id: 1a, 1b, 1c, 2a, 2b, 3, 4, 5a, 5b, or 6.
    id: String,
    /// Output CSV path (default: stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CriticalTempArgs {
    #[command(flatten)]
    at: ModelPoint,
    /// Upper end of the bisection interval.
    #[arg(long = "t-hi", default_value_t = 8.0)]
    t_hi: f64,
}

#[derive(Debug, Args)]
struct OppositeArgs {
    #[command(flatten)]
    at: ModelCouplings,
    /// Temperature at which the D scan runs.
    #[arg(long = "T")]
    t: f64,
    /// Scan range start.
    #[arg(long = "d-min", default_value_t = 0.3)]
    d_min: f64,
    /// Scan range end.
    #[arg(long = "d-max", default_value_t = 1.2)]
    d_max: f64,
    /// Number of scan samples.
    #[arg(long, default_value_t = 41)]
    points: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error("{0}")]
    Model(ModelError),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Sweep(e) => e.exit_code(),
            // A bad temperature or model tag is a command-line problem; a
            // linear-algebra failure is not.
            CliError::Model(ModelError::Linalg(_)) => 1,
            CliError::Model(_) => 2,
            CliError::Numerical(_) => 1,
            CliError::Io(_) => 1,
        }
    }
}

/// Entry point shared by `main` and the interface tests: parses `argv`,
/// runs the subcommand, and returns the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };

    let Cli { threads, command } = cli;
    let outcome = match threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".to_string())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(command)),
            Err(e) => Err(CliError::Usage(format!("cannot build thread pool: {e}"))),
        },
        None => dispatch(command),
    };

    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Point(args) => point_cmd(args),
        Command::Sweep(args) => sweep_cmd(args),
        Command::Figure(args) => figure_cmd(args),
        Command::CriticalTemp(args) => critical_temp_cmd(args),
        Command::Opposite(args) => opposite_cmd(args),
    }
}

fn point_cmd(args: PointArgs) -> Result<(), CliError> {
    let p = ModelParams::new(
        args.at.couplings.model.into(),
        args.at.couplings.j,
        args.at.couplings.jz,
        args.at.d,
        args.t,
    );
    let rho = thermal_state(&p).map_err(CliError::Model)?;
    let report = quantum_discord(&rho).map_err(|e| CliError::Numerical(e.to_string()))?;
    let json = serde_json::json!({
        "model": args.at.couplings.model.to_string(),
        "J": args.at.couplings.j,
        "Jz": args.at.couplings.jz,
        "D": args.at.d,
        "T": args.t,
        "mutual_information": report.mutual_information,
        "classical_correlation": report.classical_correlation,
        "quantum_discord": report.quantum_discord,
        "quantum_discord_raw": report.quantum_discord_raw,
        "concurrence": report.concurrence,
        "optimal_basis": {
            "theta_m": report.optimal_basis.theta_m(),
            "phi_m": report.optimal_basis.phi_m(),
        },
        "optimizer_evals": report.optimizer_evals,
    });
    println!("{}", serde_json::to_string_pretty(&json).expect("json"));
    Ok(())
}

fn parse_axis(text: &str) -> Result<Axis, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CliError::Usage(format!("invalid axis `{text}`, expected NAME:START:STOP:COUNT"));
    if parts.len() != 4 {
        return Err(bad());
    }
    Ok(Axis {
        name: parts[0].to_string(),
        start: parts[1].parse().map_err(|_| bad())?,
        stop: parts[2].parse().map_err(|_| bad())?,
        count: parts[3].parse().map_err(|_| bad())?,
    })
}

fn parse_fix(text: &str) -> Result<(String, f64), CliError> {
    let bad = || CliError::Usage(format!("invalid --fix `{text}`, expected NAME=VALUE"));
    let (name, value) = text.split_once('=').ok_or_else(bad)?;
    Ok((name.to_string(), value.parse().map_err(|_| bad())?))
}

fn build_sweep_spec(args: &SweepArgs) -> Result<SweepSpec, CliError> {
    let base: Option<SweepSpec> = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            Some(
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("invalid config: {e}")))?,
            )
        }
        None => None,
    };

    let model = args
        .model
        .or(base.as_ref().map(|b| b.model))
        .ok_or_else(|| CliError::Usage("--model is required without a config".to_string()))?;

    let axis1 = match &args.axis1 {
        Some(text) => parse_axis(text)?,
        None => base
            .as_ref()
            .map(|b| b.axis1.clone())
            .ok_or_else(|| CliError::Usage("--axis1 is required without a config".to_string()))?,
    };
    let axis2 = match &args.axis2 {
        Some(text) => Some(parse_axis(text)?),
        None => base.as_ref().and_then(|b| b.axis2.clone()),
    };

    let mut fixed: BTreeMap<String, f64> = base.as_ref().map(|b| b.fixed.clone()).unwrap_or_default();
    for entry in &args.fix {
        let (name, value) = parse_fix(entry)?;
        fixed.insert(name, value);
    }

    let quantities = if args.quantities.is_empty() {
        base.map(|b| b.quantities).unwrap_or_default()
    } else {
        args.quantities.clone()
    };

    Ok(SweepSpec {
        model,
        fixed,
        axis1,
        axis2,
        quantities,
    })
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn sweep_cmd(args: SweepArgs) -> Result<(), CliError> {
    let spec = build_sweep_spec(&args)?;
    let result = run_sweep(&spec)?;
    write_output(&args.out, &sweep_csv(&result))
}

fn figure_cmd(args: FigureArgs) -> Result<(), CliError> {
    let id: FigureId = args
        .id
        .parse()
        .map_err(|e: crate::figures::UnknownFigureId| CliError::Usage(e.to_string()))?;
    let csv = render_figure_csv(id)?;
    write_output(&args.out, &csv)
}

fn critical_temp_cmd(args: CriticalTempArgs) -> Result<(), CliError> {
    let p = ModelParams::new(args.at.couplings.model.into(), args.at.couplings.j, args.at.couplings.jz, args.at.d, 1.0);
    let outcome = critical_temperature(&p, args.t_hi).map_err(CliError::Model)?;
    let (status, value) = match outcome {
        CriticalTemperature::Found(tc) => ("found", Some(tc)),
        CriticalTemperature::ZeroThroughout => ("zero_throughout", None),
        CriticalTemperature::PositiveThroughout => ("positive_throughout", None),
    };
    let json = serde_json::json!({
        "model": args.at.couplings.model.to_string(),
        "J": args.at.couplings.j,
        "Jz": args.at.couplings.jz,
        "D": args.at.d,
        "t_hi": args.t_hi,
        "status": status,
        "critical_temperature": value,
    });
    println!("{}", serde_json::to_string_pretty(&json).expect("json"));
    Ok(())
}

fn opposite_cmd(args: OppositeArgs) -> Result<(), CliError> {
    let intervals = detect_opposite_tendency(
        args.at.model,
        args.at.j,
        args.at.jz,
        args.t,
        args.d_min,
        args.d_max,
        args.points,
    )?;
    let json = serde_json::json!({
        "model": args.at.model.to_string(),
        "J": args.at.j,
        "Jz": args.at.jz,
        "T": args.t,
        "d_min": args.d_min,
        "d_max": args.d_max,
        "points": args.points,
        "intervals": intervals,
    });
    println!("{}", serde_json::to_string_pretty(&json).expect("json"));
    Ok(())
}
