//! Adhesive (JKR) contact: the half-length minimizes the total energy
//! U_e - 2 gamma_s b instead of quenching the edge singularity. Equal
//! exponents with a quadratic profile give a closed-form energy and an exact
//! derivative; the general case differentiates numerically.

use crate::assembly::{self, ContactProblem, Model};
use crate::error::{ContactError, Result};
use crate::hertz::{self, ContactSolution};
use crate::kernel::{self, KernelTables};
use crate::roots;
use crate::specfun::gamma;

/// Elastic strain energy and its derivative at one half-length.
#[derive(Debug, Clone, Copy)]
pub struct EnergyReport {
    pub b: f64,
    pub u_elastic: f64,
    pub u_total: f64,
    pub du_db: f64,
    /// Innermost zero of the pressure on (0, b), if the edge stress is
    /// tensile.
    pub tensile_onset: Option<f64>,
}

fn gamma_s_of(problem: &ContactProblem) -> Result<f64> {
    match problem.model {
        Model::Jkr { gamma_s } => Ok(gamma_s),
        Model::Hertz => Err(ContactError::InvalidInput(
            "adhesive solver requires the adhesive model".into(),
        )),
    }
}

/// Closed-form strain energy for equal exponents and a quadratic profile,
/// with its exact b-derivative.
pub fn strain_energy_equal(problem: &ContactProblem, b: f64) -> Result<EnergyReport> {
    let alpha = problem.body1.alpha;
    if !problem.profile.is_quadratic() {
        return Err(ContactError::InvalidInput(
            "closed-form energy requires a quadratic profile".into(),
        ));
    }
    let gamma_s = match problem.model {
        Model::Jkr { gamma_s } => gamma_s,
        Model::Hertz => 0.0,
    };
    let theta_sum = problem.body1.theta + problem.body2.theta;
    let (p, q0) = (problem.load, problem.profile.q0);
    let rt_pi = std::f64::consts::PI.sqrt();
    let term1 = p * p * theta_sum * gamma(alpha / 2.0 + 1.0) * gamma((1.0 - alpha) / 2.0)
        * b.powf(-alpha)
        / (2.0 * alpha * rt_pi);
    let term2 = rt_pi * q0 * q0 * b.powf(alpha + 4.0)
        / (2.0 * theta_sum * (alpha + 2.0) * gamma((1.0 - alpha) / 2.0) * gamma(alpha / 2.0 + 3.0));
    let u_elastic = term1 + term2;
    let du_db = -alpha * term1 / b + (alpha + 4.0) * term2 / b;
    Ok(EnergyReport {
        b,
        u_elastic,
        u_total: u_elastic - 2.0 * gamma_s * b,
        du_db,
        tensile_onset: None,
    })
}

/// Residual of the equal-exponent stationarity equation at half-length `b`,
/// scaled by b^{alpha+1} (all three terms polynomial in b).
pub fn equal_exponent_energy_residual(problem: &ContactProblem, b: f64) -> Result<f64> {
    let alpha = problem.body1.alpha;
    let gamma_s = gamma_s_of(problem)?;
    let theta_sum = problem.body1.theta + problem.body2.theta;
    let (p, q0) = (problem.load, problem.profile.q0);
    let rt_pi = std::f64::consts::PI.sqrt();
    Ok(rt_pi * q0 * q0 * b.powf(2.0 * alpha + 4.0)
        / (theta_sum * (alpha + 2.0) * gamma((1.0 - alpha) / 2.0) * gamma(alpha / 2.0 + 2.0))
        - 2.0 * gamma_s * b.powf(alpha + 1.0)
        - p * p * theta_sum * gamma(alpha / 2.0 + 1.0) * gamma((1.0 - alpha) / 2.0)
            / (2.0 * rt_pi))
}

/// Strain energy from the spectral coefficients at half-length `b`, with the
/// derivative taken by forward difference of step `fd_epsilon`.
pub fn strain_energy_general(
    problem: &ContactProblem,
    tables: &KernelTables,
    b: f64,
) -> Result<EnergyReport> {
    let gamma_s = match problem.model {
        Model::Jkr { gamma_s } => gamma_s,
        Model::Hertz => 0.0,
    };
    let u_elastic = elastic_energy_at(problem, tables, b)?;
    let eps = problem.controls.fd_epsilon;
    let u_plus = elastic_energy_at(problem, tables, b + eps)?;
    Ok(EnergyReport {
        b,
        u_elastic,
        u_total: u_elastic - 2.0 * gamma_s * b,
        du_db: (u_plus - u_elastic) / eps,
        tensile_onset: None,
    })
}

/// U_e at one half-length via the orthogonality-reduced series: the rigid
/// term plus the profile-expansion terms a_0, a_2 (quadratic) and a_4
/// (quartic).
fn elastic_energy_at(problem: &ContactProblem, tables: &KernelTables, b: f64) -> Result<f64> {
    let coeffs = assembly::solve_system(problem, tables, b)?;
    let delta = assembly::rigid_displacement(&coeffs, problem.load, b)?;
    let alpha1 = problem.body1.alpha;
    let (q0, q1) = (problem.profile.q0, problem.profile.q1);
    let g0c = kernel::gamma0(alpha1);
    let combined = |i: usize| coeffs.phi1[i] + delta * coeffs.phi2[i];
    // profile expansion f(bt) = sum a_{2k} C_{2k}; a_0 folds into the rigid
    // term below
    let b2 = b * b;
    let a0 = b2 / (alpha1 + 2.0) * (q0 + 3.0 * q1 * b2 / (alpha1 + 4.0));
    let a2 = 2.0 * b2 / (alpha1 * (alpha1 + 2.0)) * (q0 + 6.0 * q1 * b2 / (alpha1 + 6.0));
    let a4 = 24.0 * q1 * b2 * b2
        / (alpha1 * (alpha1 + 2.0) * (alpha1 + 4.0) * (alpha1 + 6.0));
    let mut u = 0.5 * b * g0c * combined(0) * (delta - a0);
    u -= 0.5 * b * combined(1) * a2 * kernel::h_n(alpha1, 2);
    if q1 != 0.0 && coeffs.phi1.len() > 2 {
        u -= 0.5 * b * combined(2) * a4 * kernel::h_n(alpha1, 4);
    }
    Ok(u)
}

/// Innermost zero of the pressure on (0, b); absent when the pressure keeps
/// one sign.
pub fn tensile_onset(solution: &ContactSolution) -> Option<f64> {
    let b = solution.b;
    let samples = 256;
    let mut prev_x = 0.0;
    let mut prev_p = solution.pressure(0.0);
    for i in 1..samples {
        let x = b * i as f64 / samples as f64;
        let p = solution.pressure(x);
        if prev_p * p < 0.0 {
            let root = roots::brent(
                |x| Ok(solution.pressure(x)),
                prev_x,
                x,
                1e-12,
            )
            .ok()?;
            return Some(root);
        }
        prev_x = x;
        prev_p = p;
    }
    None
}

/// Solves the adhesive problem for equal exponents and a quadratic profile
/// through the exact stationarity equation.
pub fn solve_jkr_equal(problem: &ContactProblem, tables: &KernelTables) -> Result<ContactSolution> {
    let gamma_s = gamma_s_of(problem)?;
    let hertz_b = hertz::b_closed_equal(
        problem.body1.alpha,
        problem.profile.q0,
        problem.load,
        problem.body1.theta + problem.body2.theta,
    );
    let b = if gamma_s == 0.0 {
        hertz_b
    } else {
        let mut f = |b: f64| equal_exponent_energy_residual(problem, b);
        // the Hertzian length is a lower bound once adhesion pulls the zone
        // outward
        let (lo, hi) = bracket_above(&mut f, hertz_b)?;
        roots::brent(&mut f, lo, hi, problem.controls.b_rel_tol)?
    };
    finish(problem, tables, b)
}

/// Solves the adhesive problem for any exponent pair by minimizing the total
/// energy with a forward-difference derivative.
pub fn solve_jkr_general(
    problem: &ContactProblem,
    tables: &KernelTables,
) -> Result<ContactSolution> {
    let gamma_s = gamma_s_of(problem)?;
    let hertz_sol = hertz::solve_hertz_with_tables(
        &ContactProblem { model: Model::Hertz, ..problem.clone() },
        tables,
    )?;
    if gamma_s == 0.0 {
        return finish(problem, tables, hertz_sol.b);
    }
    let mut f = |b: f64| {
        let report = strain_energy_general(problem, tables, b)?;
        Ok(report.du_db - 2.0 * gamma_s)
    };
    let (lo, hi) = bracket_above(&mut f, hertz_sol.b)?;
    let sign_changes = roots::count_sign_changes(&mut f, lo, hi, 32)?;
    let b = roots::brent(&mut f, lo, hi, problem.controls.b_rel_tol)?;
    let mut sol = finish(problem, tables, b)?;
    sol.sign_changes = sign_changes;
    Ok(sol)
}

/// Dispatcher mirroring the Hertzian front door.
pub fn solve_jkr(problem: &ContactProblem) -> Result<ContactSolution> {
    let pair = problem.exponent_pair()?;
    let tables = kernel::build_tables(&pair, problem.controls.n_terms, problem.controls.tail_tol)?;
    if pair.is_degenerate() && problem.profile.is_quadratic() {
        solve_jkr_equal(problem, &tables)
    } else {
        solve_jkr_general(problem, &tables)
    }
}

/// Expands [b0, 2 b0] upward until the residual changes sign.
fn bracket_above<F>(f: &mut F, b0: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut lo = b0 * 0.999;
    let mut hi = b0 * 2.0;
    let flo = f(lo)?;
    for _ in 0..=10 {
        let fhi = f(hi)?;
        if flo * fhi <= 0.0 {
            return Ok((lo, hi));
        }
        lo = hi;
        hi *= 2.0;
    }
    Err(ContactError::NoBracket { lo, hi })
}

fn finish(problem: &ContactProblem, tables: &KernelTables, b: f64) -> Result<ContactSolution> {
    let coeffs = assembly::solve_system(problem, tables, b)?;
    let delta = assembly::rigid_displacement(&coeffs, problem.load, b)?;
    let residual = assembly::endpoint_series(&coeffs, delta);
    let g0c = kernel::gamma0(coeffs.alpha1);
    let load = b * g0c * (coeffs.phi1[0] + delta * coeffs.phi2[0]);
    let n = coeffs.phi1.len();
    let lead = (coeffs.phi1[0] + delta * coeffs.phi2[0]).abs();
    let last = (coeffs.phi1[n - 1] + delta * coeffs.phi2[n - 1]).abs();
    Ok(ContactSolution {
        b,
        delta,
        coeffs,
        model: problem.model,
        endpoint_residual: residual,
        load_balance_error: (load - problem.load).abs() / problem.load,
        truncation_tail: if lead > 0.0 { last / lead } else { f64::INFINITY },
        sign_changes: 1,
    })
}
