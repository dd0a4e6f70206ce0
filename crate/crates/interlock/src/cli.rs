//! Batch command-line front end.
//!
//! Exit codes: 0 — the command ran (simulate: regardless of the simulated
//! outcome); 1 — an expectation or suite mismatch; 2 — invalid or
//! unreadable input. Output paths are created when absent.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::gait::run_scenario_with;
use crate::model::{Environment, SoilModel, SpikeDesign};
use crate::report::RunArtifacts;
use crate::scenario::{load_scenario_file, ScenarioFile};
use crate::soil;
use crate::stability::stability_report;
use crate::suite::{bundled_groups, render_table, run_suite, SuiteOptions};
use crate::sweep::{run_sweep, to_csv, SweepParam};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser)]
#[command(
    name = "interlock",
    about = "Quasi-static slope-mobility analysis for spike-anchored push-pull crawlers",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpikeClass {
    Front,
    Rear,
}

#[derive(Subcommand)]
enum Command {
    /// Static stability figures for a scenario, no simulation.
    Analyze(AnalyzeArgs),
    /// Run one scenario file and write report + log.
    Simulate(SimulateArgs),
    /// Run the bundled field-trial suite and print the match table.
    Suite(SuiteArgs),
    /// Sweep one parameter over a scenario.
    Sweep(SweepArgs),
    /// Solve the soil resistance multiplier against a holding-force target.
    Calibrate(CalibrateArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Scenario JSON file.
    scenario: PathBuf,
    /// Write the report JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Scenario JSON file.
    scenario: PathBuf,
    /// Cycle budget.
    #[arg(long, default_value_t = 200)]
    max_cycles: u32,
    /// Force the depth-equalizer actuator on or off.
    #[arg(long, value_enum)]
    equalizer: Option<OnOff>,
    /// Use tip thrust angles for lift (conservative).
    #[arg(long)]
    strict_gamma: bool,
    /// Output directory for report + log (default: alongside the input).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Use tip thrust angles for lift (conservative).
    #[arg(long)]
    strict_gamma: bool,
    /// Override gravity [m/s^2]; prints a divergence table without
    /// asserting matches.
    #[arg(long)]
    gravity: Option<f64>,
    /// Export the bundled scenario files into this directory.
    #[arg(long)]
    export: Option<PathBuf>,
    /// Also write the table here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Scenario JSON file.
    scenario: PathBuf,
    /// Parameter to sweep: slope_deg, blade_draft_demand, gravity_g, cf,
    /// hinge_height_h or mass.
    #[arg(long)]
    param: String,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    /// Number of steps; 0 runs the single `from` value.
    #[arg(long)]
    steps: u32,
    #[arg(long, default_value_t = 200)]
    max_cycles: u32,
    /// Write the CSV table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CalibrateArgs {
    /// Holding-force target [N].
    #[arg(long)]
    target_force: f64,
    /// Depth at which the target must hold [m].
    #[arg(long)]
    depth: f64,
    /// Soil preset to calibrate: beach_sand, quarry_fine or quarry_coarse.
    #[arg(long, default_value = "beach_sand")]
    soil: String,
    /// Spike class providing the anchor.
    #[arg(long, value_enum, default_value_t = SpikeClass::Rear)]
    spike: SpikeClass,
    /// Gravity [m/s^2].
    #[arg(long, default_value_t = Environment::STANDARD_GRAVITY)]
    gravity: f64,
    /// Write the updated soil JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write_output(path: &Path, content: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, content)
}

fn fail_invalid(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_INVALID
}

fn cmd_analyze(args: &AnalyzeArgs) -> i32 {
    let file = match load_scenario_file(&args.scenario) {
        Ok(f) => f,
        Err(e) => return fail_invalid(e),
    };
    let report = match stability_report(&file.scenario) {
        Ok(r) => r,
        Err(e) => return fail_invalid(e),
    };
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    match &args.out {
        Some(path) => {
            if let Err(e) = write_output(path, &json) {
                return fail_invalid(e);
            }
        }
        None => print!("{json}"),
    }
    EXIT_OK
}

fn cmd_simulate(args: &SimulateArgs) -> i32 {
    let file = match load_scenario_file(&args.scenario) {
        Ok(f) => f,
        Err(e) => return fail_invalid(e),
    };
    let mut scenario = file.scenario.clone();
    if let Some(eq) = args.equalizer {
        scenario.vehicle.depth_equalizer = eq == OnOff::On;
    }
    let mut tuning = file.tuning.unwrap_or_default();
    if args.strict_gamma {
        tuning.strict_gamma = true;
    }
    let trial = match run_scenario_with(&scenario, args.max_cycles, &tuning) {
        Ok(t) => t,
        Err(e) => return fail_invalid(e),
    };
    let artifacts = RunArtifacts::new(&scenario, &tuning, trial);

    let out_dir = args.out.clone().unwrap_or_else(|| {
        args.scenario
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from("."))
    });
    let stem = args
        .scenario
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "scenario".to_string());
    let report_path = out_dir.join(format!("{stem}_report.json"));
    let log_path = out_dir.join(format!("{stem}_log.csv"));
    if let Err(e) = write_output(&report_path, &artifacts.report_json()) {
        return fail_invalid(e);
    }
    if let Err(e) = write_output(&log_path, &artifacts.log_csv()) {
        return fail_invalid(e);
    }
    print!("{}", artifacts.summary_text());
    println!("report: {}", report_path.display());
    println!("log: {}", log_path.display());

    if let Some(expected) = file.expected_outcome {
        if expected != artifacts.report.trial.outcome {
            eprintln!(
                "expectation mismatch: expected {expected}, simulated {}",
                artifacts.report.trial.outcome
            );
            return EXIT_MISMATCH;
        }
    }
    EXIT_OK
}

fn cmd_suite(args: &SuiteArgs) -> i32 {
    if let Some(dir) = &args.export {
        for group in bundled_groups() {
            for case in group.cases {
                let mut file = ScenarioFile::new(case.scenario.clone());
                file.expected_outcome = Some(case.expected_outcome);
                let path = dir.join(format!("{}.json", case.scenario.label));
                if let Err(e) = write_output(&path, &file.to_json()) {
                    return fail_invalid(e);
                }
            }
        }
    }
    let options = SuiteOptions {
        strict_gamma: args.strict_gamma,
        gravity_override: args.gravity,
    };
    let result = run_suite(&options);
    let table = render_table(&result, &options);
    print!("{table}");
    if let Some(path) = &args.out {
        if let Err(e) = write_output(path, &table) {
            return fail_invalid(e);
        }
    }
    // A gravity override prints a divergence table with no ground truth.
    if args.gravity.is_none() && !result.all_match {
        return EXIT_MISMATCH;
    }
    EXIT_OK
}

fn cmd_sweep(args: &SweepArgs) -> i32 {
    let param: SweepParam = match args.param.parse() {
        Ok(p) => p,
        Err(e) => return fail_invalid(e),
    };
    let file = match load_scenario_file(&args.scenario) {
        Ok(f) => f,
        Err(e) => return fail_invalid(e),
    };
    let tuning = file.tuning.unwrap_or_default();
    let rows = match run_sweep(
        &file.scenario,
        param,
        args.from,
        args.to,
        args.steps,
        args.max_cycles,
        &tuning,
    ) {
        Ok(r) => r,
        Err(e) => return fail_invalid(e),
    };
    let csv = to_csv(param, &rows);
    match &args.out {
        Some(path) => {
            if let Err(e) = write_output(path, &csv) {
                return fail_invalid(e);
            }
        }
        None => print!("{csv}"),
    }
    EXIT_OK
}

fn cmd_calibrate(args: &CalibrateArgs) -> i32 {
    let mut soil_model = match SoilModel::preset(&args.soil) {
        Some(s) => s,
        None => {
            return fail_invalid(format!(
                "unknown soil preset '{}' (expected one of {})",
                args.soil,
                SoilModel::PRESET_NAMES.join(", ")
            ))
        }
    };
    let spike: SpikeDesign = match args.spike {
        SpikeClass::Front => SpikeDesign::small(),
        SpikeClass::Rear => SpikeDesign::large(),
    };
    let env = Environment {
        gravity_g: args.gravity,
    };
    let mp = match soil::calibrate_multiplier(args.target_force, args.depth, &soil_model, &spike, &env)
    {
        Ok(m) => m,
        Err(e) => return fail_invalid(e),
    };
    soil_model.resistance_multiplier_mp = mp;
    let mut json = serde_json::to_string_pretty(&soil_model).expect("soil serializes");
    json.push('\n');
    match &args.out {
        Some(path) => {
            if let Err(e) = write_output(path, &json) {
                return fail_invalid(e);
            }
        }
        None => print!("{json}"),
    }
    EXIT_OK
}

/// Parse arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Suite(args) => cmd_suite(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Calibrate(args) => cmd_calibrate(args),
    }
}
