//! Solve dispatch, post-hoc verification, and CSV emission.

use crate::config::{ModelKind, RunConfig};
use contact_core::assembly::Model;
use contact_core::displacement::surface_displacement;
use contact_core::hertz::{self, ContactSolution};
use contact_core::jkr;
use contact_core::kernel;
use contact_core::tables_io;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

/// One solved configuration with its diagnostics.
pub struct Solved {
    pub solution: ContactSolution,
    pub b_star: Option<f64>,
    pub seconds: f64,
}

/// One summary row: the configuration echo plus either a solution or the
/// failure message, never partial numbers.
pub struct Record {
    pub cfg: RunConfig,
    pub outcome: Result<Solved, String>,
}

/// 12 significant digits, fixed exponent notation for deterministic output.
pub fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn solve_one(cfg: &RunConfig) -> Result<Solved, String> {
    let problem = cfg.problem()?;
    let pair = problem.exponent_pair().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let tables = match &cfg.tables_dir {
        Some(dir) => tables_io::load_or_build(dir, &pair, cfg.n_terms, cfg.tail_tol),
        None => kernel::build_tables(&pair, cfg.n_terms, cfg.tail_tol),
    }
    .map_err(|e| e.to_string())?;
    let solution = match problem.model {
        Model::Hertz => hertz::solve_hertz_with_tables(&problem, &tables),
        Model::Jkr { .. } => {
            if pair.is_degenerate() && problem.profile.is_quadratic() {
                jkr::solve_jkr_equal(&problem, &tables)
            } else {
                jkr::solve_jkr_general(&problem, &tables)
            }
        }
    }
    .map_err(|e| e.to_string())?;

    // re-verify the defining residual before anything is written
    let gamma_s = match problem.model {
        Model::Jkr { gamma_s } => gamma_s,
        Model::Hertz => 0.0,
    };
    if gamma_s == 0.0 {
        let r = hertz::endpoint_residual(&problem, &tables, solution.b)
            .map_err(|e| e.to_string())?;
        if !(r.abs() <= 1e-8) {
            return Err(format!(
                "edge-pressure residual {r:.3e} exceeds 1e-8 at b = {}",
                solution.b
            ));
        }
    } else {
        let r = if pair.is_degenerate() && problem.profile.is_quadratic() {
            jkr::equal_exponent_energy_residual(&problem, solution.b)
        } else {
            jkr::strain_energy_general(&problem, &tables, solution.b)
                .map(|rep| rep.du_db - 2.0 * gamma_s)
        }
        .map_err(|e| e.to_string())?;
        let scale = (2.0 * gamma_s).max(1.0);
        if !(r.abs() <= 1e-6 * scale) {
            return Err(format!("stationarity residual {r:.3e} at b = {}", solution.b));
        }
    }

    let b_star = if gamma_s > 0.0 {
        jkr::tensile_onset(&solution)
    } else {
        None
    };
    Ok(Solved {
        solution,
        b_star,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub const SUMMARY_COLUMNS: &str = "tag,alpha1,alpha2,e1,e2,nu1,nu2,q0,q1,load,model,gamma_s,\
n_terms,fd_epsilon,b,delta,p0,b_star,endpoint_residual,load_balance_error,truncation_tail,\
solve_seconds,error";

pub fn summary_row(rec: &Record) -> String {
    let c = &rec.cfg;
    let mut row = format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        c.tag,
        c.alpha1,
        c.alpha2_value(),
        c.e1,
        c.e2,
        c.nu1,
        c.nu2,
        c.q0,
        c.q1,
        c.load,
        match c.model {
            ModelKind::Hertz => "hertz",
            ModelKind::Jkr => "jkr",
        },
        c.gamma_s,
        c.n_terms,
        c.fd_epsilon
    );
    match &rec.outcome {
        Ok(s) => {
            let sol = &s.solution;
            write!(
                row,
                ",{},{},{},{},{},{},{},{},",
                sig12(sol.b),
                sig12(sol.delta),
                sig12(sol.pressure(0.0)),
                s.b_star.map(sig12).unwrap_or_default(),
                sig12(sol.endpoint_residual),
                sig12(sol.load_balance_error),
                sig12(sol.truncation_tail),
                sig12(s.seconds)
            )
            .unwrap();
        }
        Err(msg) => {
            // keep the column count; quote the message so commas survive
            write!(row, ",,,,,,,,,\"{}\"", msg.replace('"', "'")).unwrap();
        }
    }
    row
}

pub fn write_summary(dir: &Path, effective: &str, rows: &[Record]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut text = format!("# config: {effective}\n{SUMMARY_COLUMNS}\n");
    for r in rows {
        text.push_str(&summary_row(r));
        text.push('\n');
    }
    std::fs::write(dir.join("summary.csv"), text)
}

pub fn write_pressure(dir: &Path, cfg: &RunConfig, s: &Solved) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let sol = &s.solution;
    let n = cfg.pressure_samples;
    let mut text = format!("# config: {}\nx,p\n", cfg.effective());
    for i in 0..n {
        let x = sol.b * (2.0 * i as f64 / (n - 1) as f64 - 1.0);
        let _ = writeln!(text, "{},{}", sig12(x), sig12(sol.pressure(x)));
    }
    std::fs::write(dir.join(format!("pressure_{}.csv", cfg.tag)), text)
}

pub fn write_displacements(dir: &Path, cfg: &RunConfig, s: &Solved) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let problem = cfg.problem()?;
    let sol = &s.solution;
    let n = cfg.displacement_samples;
    for body in [1usize, 2] {
        let mut text = format!("# config: {}\nx,v\n", cfg.effective());
        for i in 0..n {
            let x = sol.b * (1.0 + 1e-6 + (cfg.displacement_span - 1.0 - 1e-6) * i as f64 / (n - 1) as f64);
            let v = surface_displacement(&problem, sol, body, x).map_err(|e| e.to_string())?;
            let _ = writeln!(text, "{},{}", sig12(x), sig12(v));
        }
        std::fs::write(dir.join(format!("displacement_{}_body{}.csv", cfg.tag, body)), text)
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Cartesian product of the sweep axes in declaration order; each element is
/// a fully applied configuration with an indexed tag.
pub fn sweep_points(cfg: &RunConfig) -> Vec<RunConfig> {
    let mut points = vec![cfg.clone()];
    for (param, values) in &cfg.sweeps {
        let mut next = Vec::with_capacity(points.len() * values.len());
        for base in &points {
            for &v in values {
                let mut c = base.clone();
                c.apply_axis(param, v);
                next.push(c);
            }
        }
        points = next;
    }
    for (i, p) in points.iter_mut().enumerate() {
        p.tag = format!("{}-{i}", cfg.tag);
        p.sweeps.clear();
    }
    points
}
