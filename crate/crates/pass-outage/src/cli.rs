//! Command-line front end: `sweep`, `validate`, and `reproduce`.
//!
//! Exit codes: 0 success, 1 usage/config error (including infeasible NOMA
//! splits), 2 validation failure, 3 I/O failure. Values may also come from
//! a plain `key=value` config file (`--config`); command-line flags win.

use crate::figures::{reproduce, FigureConfig, FigureId};
use crate::geometry::RoomGeometry;
use crate::link::{AccessScheme, ChannelParams};
use crate::outage::{SystemKind, UserId};
use crate::sweep::{render_csv, run_sweep, SweepConfig};
use crate::validate::{run_validation, ValidationLevel};
use clap::{Args, Parser, Subcommand};
use std::collections::HashMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "pass-outage",
    version,
    about = "Outage analysis for pinching-antenna vs conventional antenna systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep outage probabilities over an SNR grid and write a CSV table
    Sweep(SweepArgs),
    /// Run the self-check suites and print one line per check
    Validate(ValidateArgs),
    /// Reproduce one of the study figures (fig2..fig7) as CSV
    Reproduce(ReproduceArgs),
}

/// Flags shared by the table-producing commands.
#[derive(Args, Debug, Default)]
struct ModelArgs {
    /// Room side length D in meters [default: 20]
    #[arg(long = "side-length")]
    side_length: Option<f64>,
    /// Antenna/waveguide height d in meters [default: 5]
    #[arg(long)]
    height: Option<f64>,
    /// Carrier frequency in GHz [default: 10]
    #[arg(long = "carrier-ghz")]
    carrier_ghz: Option<f64>,
    /// NLoS path-loss exponent [default: 6]
    #[arg(long = "pathloss-exp")]
    pathloss_exp: Option<f64>,
    /// NOMA power fraction of the LoS user [default: 0.1]
    #[arg(long)]
    alpha1: Option<f64>,
    /// Target rate in bit/s/Hz [default: 1]
    #[arg(long)]
    rate: Option<f64>,
    /// Number of Chebyshev-Gauss nodes [default: 100]
    #[arg(long = "quad-nodes")]
    quad_nodes: Option<usize>,
    /// Monte-Carlo trials per grid point; 0 disables the MC columns
    #[arg(long)]
    trials: Option<u64>,
    /// Monte-Carlo seed [default: 1]
    #[arg(long)]
    seed: Option<u64>,
    /// Output path
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plain key=value config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Systems to sweep (comma-separated subset of CASS,PASS)
    #[arg(long = "system", value_delimiter = ',')]
    systems: Option<Vec<String>>,
    /// Schemes to sweep (comma-separated subset of OMA,NOMA)
    #[arg(long = "scheme", value_delimiter = ',')]
    schemes: Option<Vec<String>>,
    /// Users to sweep (comma-separated subset of 1,2)
    #[arg(long = "user", value_delimiter = ',')]
    users: Option<Vec<String>>,
    /// First SNR grid point in dB [default: 60]
    #[arg(long = "snr-start-db")]
    snr_start_db: Option<f64>,
    /// Last SNR grid point in dB [default: 120]
    #[arg(long = "snr-stop-db")]
    snr_stop_db: Option<f64>,
    /// SNR grid step in dB [default: 1]
    #[arg(long = "snr-step-db")]
    snr_step_db: Option<f64>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    /// Effort level: quick (1e5 samples) or full (1e6 samples)
    #[arg(default_value = "quick")]
    level: String,
    /// Sampling seed for the stochastic checks
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the report to this path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    /// Figure id: fig2, fig3, fig4, fig5, fig6 or fig7
    figure: String,
    #[command(flatten)]
    model: ModelArgs,
    /// Also render the figure's curves to this SVG path
    #[arg(long)]
    chart: Option<PathBuf>,
}

#[derive(Debug)]
enum CmdError {
    Usage(String),
    Validation(Vec<String>),
    Io(String),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 1,
            CmdError::Validation(_) => 2,
            CmdError::Io(_) => 3,
        }
    }
}

impl From<crate::Error> for CmdError {
    fn from(e: crate::Error) -> Self {
        CmdError::Usage(e.to_string())
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Testable entry point.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Cmd::Sweep(args) => cmd_sweep(args),
        Cmd::Validate(args) => cmd_validate(args),
        Cmd::Reproduce(args) => cmd_reproduce(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(err) => {
            match &err {
                CmdError::Usage(msg) => eprintln!("error: {msg}"),
                CmdError::Validation(names) => {
                    eprintln!("validation failed: {}", names.join(", "))
                }
                CmdError::Io(msg) => eprintln!("i/o error: {msg}"),
            }
            err.exit_code()
        }
    }
}

/// key=value pairs from the optional config file. Blank lines and
/// `#`-comments are ignored.
fn load_config(path: Option<&Path>) -> Result<HashMap<String, String>, CmdError> {
    let mut map = HashMap::new();
    let Some(path) = path else {
        return Ok(map);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CmdError::Usage(format!(
                "{}:{}: expected key=value, got '{line}'",
                path.display(),
                lineno + 1
            )));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn resolve<T: FromStr>(
    flag: Option<T>,
    file: &HashMap<String, String>,
    key: &str,
    default: T,
) -> Result<T, CmdError> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match file.get(key) {
        Some(raw) => raw
            .parse::<T>()
            .map_err(|_| CmdError::Usage(format!("config key {key}: cannot parse '{raw}'"))),
        None => Ok(default),
    }
}

struct ResolvedModel {
    geometry: RoomGeometry,
    channel: ChannelParams,
    oma: AccessScheme,
    noma: AccessScheme,
    quadrature_order: usize,
    mc_trials: u64,
    mc_seed: u64,
    out: Option<PathBuf>,
}

fn resolve_model(args: ModelArgs, default_trials: u64) -> Result<ResolvedModel, CmdError> {
    let file = load_config(args.config.as_deref())?;
    let side = resolve(args.side_length, &file, "side-length", 20.0)?;
    let height = resolve(args.height, &file, "height", 5.0)?;
    let carrier_ghz = resolve(args.carrier_ghz, &file, "carrier-ghz", 10.0)?;
    let pathloss = resolve(args.pathloss_exp, &file, "pathloss-exp", 6.0)?;
    let alpha1 = resolve(args.alpha1, &file, "alpha1", 0.1)?;
    let rate = resolve(args.rate, &file, "rate", 1.0)?;
    let quad_nodes = resolve(
        args.quad_nodes,
        &file,
        "quad-nodes",
        crate::DEFAULT_QUADRATURE_ORDER,
    )?;
    let mc_trials = resolve(args.trials, &file, "trials", default_trials)?;
    let mc_seed = resolve(args.seed, &file, "seed", 1)?;
    let out = match args.out {
        Some(p) => Some(p),
        None => file.get("out").map(PathBuf::from),
    };
    Ok(ResolvedModel {
        geometry: RoomGeometry::new(side, height)?,
        channel: ChannelParams::new(carrier_ghz * 1e9, 3e8, pathloss)?,
        oma: AccessScheme::oma(rate)?,
        noma: AccessScheme::noma(alpha1, rate)?,
        quadrature_order: quad_nodes,
        mc_trials,
        mc_seed,
        out,
    })
}

fn parse_selection<T>(
    raw: Option<Vec<String>>,
    file: &HashMap<String, String>,
    key: &str,
    default: Vec<T>,
    parse: impl Fn(&str) -> Result<T, CmdError>,
) -> Result<Vec<T>, CmdError> {
    let from_file = file
        .get(key)
        .map(|v| v.split(',').map(str::to_string).collect::<Vec<_>>());
    let Some(items) = raw.or(from_file) else {
        return Ok(default);
    };
    let items: Vec<String> = items.into_iter().filter(|s| !s.trim().is_empty()).collect();
    if items.is_empty() {
        return Err(CmdError::Usage(format!("selection of {key} is empty")));
    }
    items.iter().map(|s| parse(s.trim())).collect()
}

fn parse_system(s: &str) -> Result<SystemKind, CmdError> {
    match s.to_ascii_uppercase().as_str() {
        "CASS" => Ok(SystemKind::Cass),
        "PASS" => Ok(SystemKind::Pass),
        other => Err(CmdError::Usage(format!(
            "unknown system '{other}' (expected CASS or PASS)"
        ))),
    }
}

fn parse_user(s: &str) -> Result<UserId, CmdError> {
    match s {
        "1" => Ok(UserId::User1),
        "2" => Ok(UserId::User2),
        other => Err(CmdError::Usage(format!(
            "unknown user '{other}' (expected 1 or 2)"
        ))),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CmdError> {
    std::fs::write(path, contents)
        .map_err(|e| CmdError::Io(format!("cannot write {}: {e}", path.display())))
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CmdError> {
    let file = load_config(args.model.config.as_deref())?;
    let snr_start_db = resolve(args.snr_start_db, &file, "snr-start-db", 60.0)?;
    let snr_stop_db = resolve(args.snr_stop_db, &file, "snr-stop-db", 120.0)?;
    let snr_step_db = resolve(args.snr_step_db, &file, "snr-step-db", 1.0)?;
    let systems = parse_selection(
        args.systems,
        &file,
        "system",
        SystemKind::ALL.to_vec(),
        parse_system,
    )?;
    let users = parse_selection(args.users, &file, "user", UserId::ALL.to_vec(), parse_user)?;
    let model = resolve_model(args.model, 0)?;
    let schemes = parse_selection(
        args.schemes,
        &file,
        "scheme",
        vec![model.oma, model.noma],
        |s| match s.to_ascii_uppercase().as_str() {
            "OMA" => Ok(model.oma),
            "NOMA" => Ok(model.noma),
            other => Err(CmdError::Usage(format!(
                "unknown scheme '{other}' (expected OMA or NOMA)"
            ))),
        },
    )?;

    let config = SweepConfig {
        snr_start_db,
        snr_stop_db,
        snr_step_db,
        systems,
        schemes,
        users,
        geometry: model.geometry,
        channel: model.channel,
        quadrature_order: model.quadrature_order,
        mc_trials: model.mc_trials,
        mc_seed: model.mc_seed,
    };
    let rows = run_sweep(&config)?;
    let csv = render_csv(&rows);
    let path = model.out.unwrap_or_else(|| PathBuf::from("sweep.csv"));
    write_file(&path, &csv)?;
    println!("wrote {} ({} rows)", path.display(), rows.len());
    Ok(())
}

fn cmd_validate(args: ValidateArgs) -> Result<(), CmdError> {
    let level = match args.level.to_ascii_lowercase().as_str() {
        "quick" => ValidationLevel::Quick,
        "full" => ValidationLevel::Full,
        other => {
            return Err(CmdError::Usage(format!(
                "unknown level '{other}' (expected quick or full)"
            )))
        }
    };
    let report = run_validation(level, args.seed.unwrap_or(42))?;
    let text = report.render_machine();
    print!("{text}");
    if let Some(path) = args.out {
        write_file(&path, &text)?;
    }
    let failed: Vec<String> = report
        .failed_names()
        .into_iter()
        .map(str::to_string)
        .collect();
    println!(
        "validation: {} checks, {} failed",
        report.checks.len(),
        failed.len()
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CmdError::Validation(failed))
    }
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<(), CmdError> {
    let figure = args.figure.parse::<FigureId>().map_err(CmdError::Usage)?;
    let model = resolve_model(args.model, 100_000)?;
    let config = FigureConfig {
        channel: model.channel,
        geometry: model.geometry,
        quadrature_order: model.quadrature_order,
        mc_trials: model.mc_trials,
        mc_seed: model.mc_seed,
    };
    let output = reproduce(figure, &config)?;
    let path = model
        .out
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", figure.name())));
    write_file(&path, &output.csv)?;
    println!(
        "wrote {} ({}: {})",
        path.display(),
        figure.name(),
        figure.description()
    );
    if let Some(chart_path) = args.chart {
        let svg = crate::chart::render_log_chart(
            figure.description(),
            "transmit SNR (dB)",
            &output.series,
            crate::sweep::CSV_ZERO_FLOOR,
        );
        write_file(&chart_path, &svg)?;
        println!("wrote {}", chart_path.display());
    }
    Ok(())
}
