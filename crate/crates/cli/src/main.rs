//! `contact`: solve, sweep, and validate plane contact of power-law graded
//! bodies. Exit codes: 0 success, 2 configuration error, 3 solver failure,
//! 4 validation failure.

mod config;
mod presets;
mod runner;
mod validate;

use clap::{Args, Parser, Subcommand};
use config::{RawConfig, RunConfig};
use rayon::prelude::*;
use runner::Record;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "contact", version, about = "Plane Hertzian and adhesive contact of graded elastic bodies")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a single configuration and write summary plus field traces.
    Solve(RunArgs),
    /// Solve the Cartesian product of the configured sweep axes.
    Sweep(RunArgs),
    /// Run the built-in cross-check suite and report per-check results.
    Validate {
        /// Negative control: perturb closed forms so every check fails.
        #[arg(long)]
        inject_perturbation: bool,
    },
    /// Inspect the built-in presets.
    Preset {
        #[command(subcommand)]
        cmd: PresetCmd,
    },
}

#[derive(Subcommand)]
enum PresetCmd {
    /// List preset names and descriptions.
    List,
    /// Print the configuration text of one preset.
    Show { name: String },
}

#[derive(Args)]
struct RunArgs {
    /// Configuration file (key = value lines).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Start from a built-in preset (see `preset list`).
    #[arg(long)]
    preset: Option<String>,
    /// Override a single key, repeatable; applied after file and preset.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Output directory for the CSV files.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Concurrent solves during sweeps.
    #[arg(long, default_value_t = 4)]
    workers: usize,
}

const EXIT_CONFIG: u8 = 2;
const EXIT_SOLVER: u8 = 3;
const EXIT_VALIDATION: u8 = 4;

fn load_config(args: &RunArgs) -> Result<RunConfig, String> {
    let mut raw = RawConfig::default();
    if let Some(name) = &args.preset {
        let p = presets::find(name)
            .ok_or_else(|| format!("unknown preset {name:?}; see `contact preset list`"))?;
        raw.extend(RawConfig::parse(p.text)?);
    }
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|e| format!("read {path:?}: {e}"))?;
        raw.extend(RawConfig::parse(&text)?);
    }
    for s in &args.set {
        raw.push_set(s)?;
    }
    RunConfig::from_raw(&raw)
}

fn cmd_solve(args: &RunArgs) -> ExitCode {
    let cfg = match load_config(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let solved = match runner::solve_one(&cfg) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("solver failure: {e}");
            return ExitCode::from(EXIT_SOLVER);
        }
    };
    println!(
        "tag {}: b = {}, delta = {}, p(0) = {} ({:.2}s)",
        cfg.tag,
        runner::sig12(solved.solution.b),
        runner::sig12(solved.solution.delta),
        runner::sig12(solved.solution.pressure(0.0)),
        solved.seconds
    );
    let emit = || -> Result<(), String> {
        if cfg.emit_pressure {
            runner::write_pressure(&args.out, &cfg, &solved).map_err(|e| e.to_string())?;
        }
        if cfg.emit_displacement {
            runner::write_displacements(&args.out, &cfg, &solved)?;
        }
        let rec = Record { cfg: cfg.clone(), outcome: Ok(solved) };
        runner::write_summary(&args.out, &cfg.effective(), std::slice::from_ref(&rec))
            .map_err(|e| e.to_string())
    };
    match emit() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("output failure: {e}");
            ExitCode::from(EXIT_SOLVER)
        }
    }
}

fn cmd_sweep(args: &RunArgs) -> ExitCode {
    let cfg = match load_config(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if cfg.sweeps.is_empty() {
        eprintln!("config error: sweep requires at least one sweep.<param> axis");
        return ExitCode::from(EXIT_CONFIG);
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("config error: workers: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let points = runner::sweep_points(&cfg);
    let records: Vec<Record> = pool.install(|| {
        points
            .into_par_iter()
            .map(|c| {
                let outcome = runner::solve_one(&c);
                Record { cfg: c, outcome }
            })
            .collect()
    });
    let failures = records.iter().filter(|r| r.outcome.is_err()).count();
    if let Err(e) = runner::write_summary(&args.out, &cfg.effective(), &records) {
        eprintln!("output failure: {e}");
        return ExitCode::from(EXIT_SOLVER);
    }
    println!(
        "swept {} points, {} failed; summary in {:?}",
        records.len(),
        failures,
        args.out.join("summary.csv")
    );
    if failures == records.len() {
        // nothing solved at all: treat as a solver failure, partial
        // failures stay visible in the per-row error column
        return ExitCode::from(EXIT_SOLVER);
    }
    ExitCode::SUCCESS
}

fn cmd_validate(inject: bool) -> ExitCode {
    let results = validate::run(inject);
    let mut all_ok = true;
    for r in &results {
        all_ok &= r.pass();
        println!(
            "check {:<36} {}  worst {:.3e}  tol {:.1e}  {:.2}s",
            r.name,
            if r.pass() { "pass" } else { "FAIL" },
            r.worst,
            r.tol,
            r.seconds
        );
    }
    if all_ok {
        println!("all {} checks passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("validation failed");
        ExitCode::from(EXIT_VALIDATION)
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Solve(args) => cmd_solve(&args),
        Cmd::Sweep(args) => cmd_sweep(&args),
        Cmd::Validate { inject_perturbation } => cmd_validate(inject_perturbation),
        Cmd::Preset { cmd } => match cmd {
            PresetCmd::List => {
                for p in presets::PRESETS {
                    println!("{:<16} {}", p.name, p.about);
                }
                ExitCode::SUCCESS
            }
            PresetCmd::Show { name } => match presets::find(&name) {
                Some(p) => {
                    print!("{}", p.text);
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!("unknown preset {name:?}");
                    ExitCode::from(EXIT_CONFIG)
                }
            },
        },
    }
}
