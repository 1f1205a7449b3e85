//! Hertzian contact: the half-length b is fixed by requiring the pressure to
//! vanish at the contact edges. Distinct exponents lead to a transcendental
//! equation solved by bracketed root-finding; equal exponents with a
//! quadratic profile admit a closed form.

use crate::assembly::{self, ContactProblem, SpectralCoeffs};
use crate::error::Result;
use crate::kernel::{self, KernelTables};
use crate::roots;
use crate::specfun::gamma;

/// Relative size of the last retained coefficient above which the truncation
/// is considered suspect.
pub const TRUNCATION_WARN: f64 = 1e-6;

/// A solved contact configuration with its diagnostics.
#[derive(Debug, Clone)]
pub struct ContactSolution {
    pub b: f64,
    pub delta: f64,
    pub coeffs: SpectralCoeffs,
    pub model: assembly::Model,
    /// Value of the edge-pressure series at the solved b.
    pub endpoint_residual: f64,
    /// Relative error of the recomputed total load against P.
    pub load_balance_error: f64,
    /// |last combined coefficient| / |leading combined coefficient|.
    pub truncation_tail: f64,
    /// Sign changes of the defining residual seen on a 32-point bracket scan.
    pub sign_changes: usize,
}

impl ContactSolution {
    pub fn pressure(&self, x: f64) -> f64 {
        assembly::pressure_at(&self.coeffs, self.delta, x)
    }

    pub fn combined_coeff(&self, i: usize) -> f64 {
        self.coeffs.phi1[i] + self.delta * self.coeffs.phi2[i]
    }

    /// True when the retained expansion looks under-resolved.
    pub fn truncation_warning(&self) -> bool {
        !(self.truncation_tail <= TRUNCATION_WARN)
    }
}

/// Edge-pressure residual at half-length `b`: the value whose root in b makes
/// the pressure vanish at x = +-b.
pub fn endpoint_residual(problem: &ContactProblem, tables: &KernelTables, b: f64) -> Result<f64> {
    let coeffs = assembly::solve_system(problem, tables, b)?;
    let delta = assembly::rigid_displacement(&coeffs, problem.load, b)?;
    Ok(assembly::endpoint_series(&coeffs, delta))
}

/// Closed-form half-length for equal exponents and a quadratic profile.
pub fn b_closed_equal(alpha: f64, q0: f64, load: f64, theta_sum: f64) -> f64 {
    (gamma(2.0 + alpha / 2.0) * gamma((1.0 - alpha) / 2.0) * theta_sum * load
        / (std::f64::consts::PI.sqrt() * q0))
        .powf(1.0 / (alpha + 2.0))
}

/// Starting guess for the root bracket: the closed form at the mean exponent,
/// with a dimensional analogue for purely quartic profiles.
fn initial_guess(problem: &ContactProblem) -> f64 {
    let abar = 0.5 * (problem.body1.alpha + problem.body2.alpha);
    let theta_sum = problem.body1.theta + problem.body2.theta;
    let q0 = problem.profile.q0;
    if q0 > 0.0 {
        b_closed_equal(abar, q0, problem.load, theta_sum)
    } else {
        (gamma(2.0 + abar / 2.0) * gamma((1.0 - abar) / 2.0) * theta_sum * problem.load
            / (std::f64::consts::PI.sqrt() * problem.profile.q1))
            .powf(1.0 / (abar + 4.0))
    }
}

fn package(
    problem: &ContactProblem,
    tables: &KernelTables,
    b: f64,
    sign_changes: usize,
) -> Result<ContactSolution> {
    let coeffs = assembly::solve_system(problem, tables, b)?;
    let delta = assembly::rigid_displacement(&coeffs, problem.load, b)?;
    let residual = assembly::endpoint_series(&coeffs, delta);
    let g0c = kernel::gamma0(coeffs.alpha1);
    let load = b * g0c * (coeffs.phi1[0] + delta * coeffs.phi2[0]);
    let load_balance_error = (load - problem.load).abs() / problem.load;
    let n = coeffs.phi1.len();
    let lead = (coeffs.phi1[0] + delta * coeffs.phi2[0]).abs();
    let last = (coeffs.phi1[n - 1] + delta * coeffs.phi2[n - 1]).abs();
    let truncation_tail = if lead > 0.0 { last / lead } else { f64::INFINITY };
    Ok(ContactSolution {
        b,
        delta,
        coeffs,
        model: problem.model,
        endpoint_residual: residual,
        load_balance_error,
        truncation_tail,
        sign_changes,
    })
}

/// Solves the Hertzian problem, dispatching to the closed form when the
/// exponents coincide and the profile is quadratic.
pub fn solve_hertz(problem: &ContactProblem) -> Result<ContactSolution> {
    let pair = problem.exponent_pair()?;
    let tables = kernel::build_tables(&pair, problem.controls.n_terms, problem.controls.tail_tol)?;
    solve_hertz_with_tables(problem, &tables)
}

/// Same as `solve_hertz` but reuses prebuilt tables (sweeps vary b-dependent
/// quantities only).
pub fn solve_hertz_with_tables(
    problem: &ContactProblem,
    tables: &KernelTables,
) -> Result<ContactSolution> {
    if tables.exponents.is_degenerate() && problem.profile.is_quadratic() {
        return solve_equal_exponent(problem, tables);
    }
    solve_transcendental(problem, tables)
}

/// Closed-form branch: equal exponents, quadratic profile.
pub fn solve_equal_exponent(
    problem: &ContactProblem,
    tables: &KernelTables,
) -> Result<ContactSolution> {
    let alpha = problem.body1.alpha;
    let theta_sum = problem.body1.theta + problem.body2.theta;
    let b = b_closed_equal(alpha, problem.profile.q0, problem.load, theta_sum);
    package(problem, tables, b, 1)
}

/// Root-finding branch: any exponents, any polynomial profile.
pub fn solve_transcendental(
    problem: &ContactProblem,
    tables: &KernelTables,
) -> Result<ContactSolution> {
    let mut f = |b: f64| endpoint_residual(problem, tables, b);
    let guess = initial_guess(problem);
    let (lo, hi) = roots::expand_bracket(&mut f, guess)?;
    if lo == hi {
        return package(problem, tables, lo, 1);
    }
    let sign_changes = roots::count_sign_changes(&mut f, lo, hi, 32)?;
    let b = roots::brent(&mut f, lo, hi, problem.controls.b_rel_tol)?;
    package(problem, tables, b, sign_changes)
}
