//! Command-line front end for the fibrous-filter model: single-point
//! evaluation, one-parameter sweeps, and the MPPS search.

mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use filtration_core::{find_mpps, sweep, GridScale};

use config::{CliError, ScenarioConfig};
use report::{InputEcho, MppsReport, ReportRecord, SweepReport, CSV_HEADER};

#[derive(Parser)]
#[command(name = "filtration", version, about = "Fibrous-filter efficiency and penetration calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one scenario and report E, P and all mechanism factors
    Point(PointArgs),
    /// Sweep one parameter over a grid and emit a table
    Sweep(SweepArgs),
    /// Search the most-penetrating particle size on a diameter bracket
    Mpps(MppsArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Human-readable, six significant digits
    Report,
    /// Full-precision JSON
    Json,
    /// Full-precision CSV
    Csv,
}

/// Scenario inputs shared by every subcommand. Flags override config values.
#[derive(Args)]
struct ScenarioFlags {
    /// JSON scenario file; any flag below overrides its fields
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Filter thickness L (mm)
    #[arg(long = "L", value_name = "MM", allow_negative_numbers = true)]
    thickness: Option<f64>,
    /// Particle diameter d_p (um)
    #[arg(long, value_name = "UM", allow_negative_numbers = true)]
    dp: Option<f64>,
    /// Fiber diameter d_f (um)
    #[arg(long, value_name = "UM", allow_negative_numbers = true)]
    df: Option<f64>,
    /// Solidity (fiber volume fraction)
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Face velocity u (m/s)
    #[arg(long, allow_negative_numbers = true)]
    u: Option<f64>,
    /// Absolute temperature T (K)
    #[arg(long = "T", value_name = "K", allow_negative_numbers = true)]
    temperature: Option<f64>,
    /// Absolute viscosity mu (kg/(m s))
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Sets both fluid and particle density (kg/m^3)
    #[arg(long, allow_negative_numbers = true)]
    rho: Option<f64>,
    /// Fluid density (kg/m^3); takes precedence over --rho
    #[arg(long, allow_negative_numbers = true)]
    rho_fluid: Option<f64>,
    /// Particle density (kg/m^3); takes precedence over --rho
    #[arg(long, allow_negative_numbers = true)]
    rho_particle: Option<f64>,
    /// Element (pipeline) diameter d_F (m); enables the Reynolds number
    #[arg(long = "dF", value_name = "M", allow_negative_numbers = true)]
    element_diameter: Option<f64>,
    /// Element cross-section area (m^2); with --perimeter, derives d_F
    #[arg(long, allow_negative_numbers = true)]
    area: Option<f64>,
    /// Element cross-section perimeter (m)
    #[arg(long, allow_negative_numbers = true)]
    perimeter: Option<f64>,
    /// Drag coefficient C_D
    #[arg(long, allow_negative_numbers = true)]
    cd: Option<f64>,
    /// Boltzmann constant (J/K)
    #[arg(long, allow_negative_numbers = true)]
    kb: Option<f64>,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    scenario: ScenarioFlags,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Report)]
    format: OutputFormat,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    scenario: ScenarioFlags,
    /// Parameter to sweep: dp, L, df, alpha, u, T, mu or rho_p
    #[arg(long, value_name = "SYMBOL")]
    param: Option<String>,
    /// First grid value, in the parameter's unit
    #[arg(long, allow_negative_numbers = true)]
    start: Option<f64>,
    /// Last grid value
    #[arg(long, allow_negative_numbers = true)]
    stop: Option<f64>,
    /// Number of grid points (>= 2)
    #[arg(long)]
    points: Option<usize>,
    /// Space the grid logarithmically
    #[arg(long)]
    log: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct MppsArgs {
    #[command(flatten)]
    scenario: ScenarioFlags,
    /// Lower end of the diameter bracket (um)
    #[arg(long = "dp-lo", allow_negative_numbers = true)]
    dp_lo: Option<f64>,
    /// Upper end of the diameter bracket (um)
    #[arg(long = "dp-hi", allow_negative_numbers = true)]
    dp_hi: Option<f64>,
    /// Bracket width at which refinement stops (um)
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Report)]
    format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Point(args) => run_point(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Mpps(args) => run_mpps(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Overlay flags onto the (optional) config file.
fn merged_config(flags: &ScenarioFlags) -> Result<ScenarioConfig, CliError> {
    let mut cfg = match &flags.config {
        Some(path) => ScenarioConfig::load(path)?,
        None => ScenarioConfig::default(),
    };
    if let Some(v) = flags.thickness {
        cfg.thickness_mm = Some(v);
    }
    if let Some(v) = flags.dp {
        cfg.particle_diameter_um = Some(v);
    }
    if let Some(v) = flags.df {
        cfg.fiber_diameter_um = Some(v);
    }
    if let Some(v) = flags.alpha {
        cfg.solidity = Some(v);
    }
    if let Some(v) = flags.u {
        cfg.velocity_m_s = Some(v);
    }
    if let Some(v) = flags.temperature {
        cfg.temperature_k = Some(v);
    }
    if let Some(v) = flags.mu {
        cfg.viscosity_pa_s = Some(v);
    }
    // --rho fills both roles; the dedicated flags win over it.
    if let Some(v) = flags.rho {
        cfg.fluid_density_kg_m3 = Some(v);
        cfg.particle_density_kg_m3 = Some(v);
    }
    if let Some(v) = flags.rho_fluid {
        cfg.fluid_density_kg_m3 = Some(v);
    }
    if let Some(v) = flags.rho_particle {
        cfg.particle_density_kg_m3 = Some(v);
    }
    if let Some(v) = flags.element_diameter {
        cfg.element_diameter_m = Some(v);
    }
    if let Some(v) = flags.area {
        cfg.area = Some(v);
    }
    if let Some(v) = flags.perimeter {
        cfg.perimeter = Some(v);
    }
    if flags.cd.is_some() || flags.kb.is_some() {
        let constants = cfg.constants.get_or_insert_with(Default::default);
        if let Some(v) = flags.cd {
            constants.drag_cd = Some(v);
        }
        if let Some(v) = flags.kb {
            constants.boltzmann_k = Some(v);
        }
    }
    Ok(cfg)
}

fn emit(text: &str) -> Result<(), CliError> {
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
}

fn to_json(value: &impl serde::Serialize) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Io(format!("cannot serialize report: {e}")))
}

fn scale_name(scale: GridScale) -> &'static str {
    match scale {
        GridScale::Linear => "linear",
        GridScale::Logarithmic => "logarithmic",
    }
}

fn run_point(args: PointArgs) -> Result<(), CliError> {
    let scenario = merged_config(&args.scenario)?.resolve()?;
    let result = scenario.evaluate()?;
    let record = ReportRecord::new(&result, Some(InputEcho::from(&scenario)), None);
    let text = match args.format {
        OutputFormat::Report => report::render_point_report(&record),
        OutputFormat::Json => to_json(&record)?,
        OutputFormat::Csv => format!("{CSV_HEADER}\n{}\n", report::csv_row(&record)),
    };
    emit(&text)
}

fn run_sweep(args: SweepArgs) -> Result<(), CliError> {
    let cfg = merged_config(&args.scenario)?;
    let scenario = cfg.resolve()?;
    let spec = cfg.resolve_sweep(
        args.param.as_deref(),
        args.start,
        args.stop,
        args.points,
        args.log,
    )?;
    let curve = sweep(&scenario, &spec)?;
    let points: Vec<ReportRecord> = curve
        .iter()
        .map(|p| ReportRecord::new(&p.result, None, Some(p.parameter_value)))
        .collect();
    let text = match args.format {
        OutputFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for record in &points {
                out.push_str(&report::csv_row(record));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => to_json(&SweepReport {
            parameter: spec.parameter.symbol(),
            scale: scale_name(spec.scale),
            inputs: InputEcho::from(&scenario),
            points,
        })?,
        OutputFormat::Report => report::render_sweep_report(&SweepReport {
            parameter: spec.parameter.symbol(),
            scale: scale_name(spec.scale),
            inputs: InputEcho::from(&scenario),
            points,
        }),
    };
    emit(&text)
}

fn run_mpps(args: MppsArgs) -> Result<(), CliError> {
    let scenario = merged_config(&args.scenario)?.resolve()?;
    let dp_lo = args
        .dp_lo
        .ok_or_else(|| CliError::Validation("missing required input: dp_lo".into()))?;
    let dp_hi = args
        .dp_hi
        .ok_or_else(|| CliError::Validation("missing required input: dp_hi".into()))?;
    let result = find_mpps(&scenario, dp_lo, dp_hi, args.tol)?;
    let mpps = MppsReport::new(&scenario, &result);
    let text = match args.format {
        OutputFormat::Report => report::render_mpps_report(&mpps),
        OutputFormat::Json => to_json(&mpps)?,
        OutputFormat::Csv => format!(
            "dp_star_um,p_max_percent,bracket_lo_um,bracket_hi_um,boundary\n{},{},{},{},{}\n",
            mpps.dp_star_um, mpps.p_max_percent, mpps.bracket_um.0, mpps.bracket_um.1, mpps.boundary
        ),
    };
    emit(&text)
}
