//! Self-check suite: closed forms against their defining integrals and the
//! spectral solver against a direct discretization, with per-check timing.
//! The perturbation hook multiplies every closed-form value by 1.01 so each
//! check must flip to fail; it exists as a negative control for the report
//! machinery itself.

use contact_core::assembly::{
    ContactProblem, MaterialHalfPlane, Model, NumericControls, ProfilePoly,
};
use contact_core::displacement::{i_n, ExteriorPoint};
use contact_core::hertz::solve_hertz;
use contact_core::jkr::strain_energy_general;
use contact_core::kernel::{self, ExponentPair};
use contact_core::oracle::{
    nystrom_solve, quad_coefficient, spectral_lhs_quad, strain_energy_quad, Coefficient,
    CollocationGrid,
};
use contact_core::specfun::gegenbauer;
use std::time::Instant;

pub struct CheckResult {
    pub name: &'static str,
    pub worst: f64,
    pub tol: f64,
    pub seconds: f64,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        self.worst <= self.tol
    }
}

fn problem(a1: f64, a2: f64) -> ContactProblem {
    let m1 = MaterialHalfPlane::new(1.0, a1, 0.3).unwrap();
    let m2 = MaterialHalfPlane::new(1.0, a2, 0.3).unwrap();
    ContactProblem::new(
        m1,
        m2,
        ProfilePoly::new(1.0, 0.0).unwrap(),
        1.0,
        Model::Hertz,
        NumericControls::default(),
    )
    .unwrap()
}

/// Runs all checks. `perturb` scales the closed-form side of every
/// comparison by 1.01.
pub fn run(perturb: bool) -> Vec<CheckResult> {
    let nudge = if perturb { 1.01 } else { 1.0 };
    let mut out = Vec::new();
    let timed = |name: &'static str, tol: f64, f: &dyn Fn() -> f64| {
        let start = Instant::now();
        let worst = f();
        CheckResult {
            name,
            worst,
            tol,
            seconds: start.elapsed().as_secs_f64(),
        }
    };

    out.push(timed("cross-basis projections", 1e-8, &|| {
        let pair = ExponentPair::new(0.7, 0.3).unwrap();
        let mut worst = 0.0f64;
        for (n, k) in [(0usize, 0usize), (0, 4), (2, 2), (2, 6), (4, 8)] {
            let closed = nudge * kernel::h_coeff(n, k, &pair);
            let q = quad_coefficient(Coefficient::H { n, m: k }, 0.7, 0.3);
            worst = worst.max((closed - q.value).abs() / q.value.abs());
        }
        worst
    }));

    out.push(timed("basis norms", 1e-8, &|| {
        let mut worst = 0.0f64;
        for alpha in [0.3, 0.55, 0.9] {
            for n in [0usize, 2, 6] {
                let closed = nudge * kernel::h_n(alpha, n);
                let q = quad_coefficient(Coefficient::Norm { n }, alpha, alpha);
                worst = worst.max((closed - q.value).abs() / q.value);
            }
        }
        worst
    }));

    out.push(timed("spectral relation", 1e-6, &|| {
        let mut worst = 0.0f64;
        for alpha in [0.3, 0.7] {
            for (n, t) in [(0usize, 0.4), (2, 0.4), (4, -0.75)] {
                let lhs = spectral_lhs_quad(n, alpha, t);
                let rhs = nudge * kernel::beta_n(alpha, n) * gegenbauer(n, alpha / 2.0, t);
                worst = worst.max((lhs.value - rhs).abs() / rhs.abs());
            }
        }
        worst
    }));

    out.push(timed("exterior integrals", 1e-7, &|| {
        let mut worst = 0.0f64;
        for (t, n, aj, a1) in [(-1.5, 0usize, 0.35, 0.7), (-2.5, 2, 0.35, 0.7), (-5.0, 4, 0.6, 0.6)]
        {
            let closed = nudge * i_n(ExteriorPoint::new(t).unwrap(), n, aj, a1).unwrap();
            let q = quad_coefficient(Coefficient::Exterior { n, t, alpha_j: aj }, a1, a1);
            worst = worst.max((closed - q.value).abs() / q.value.abs());
        }
        worst
    }));

    out.push(timed("strain energy", 1e-8, &|| {
        let p = problem(0.7, 0.35);
        let pair = p.exponent_pair().unwrap();
        let tables = kernel::build_tables(&pair, 16, kernel::DEFAULT_TAIL_TOL).unwrap();
        let sol = solve_hertz(&p).unwrap();
        let series = nudge * strain_energy_general(&p, &tables, sol.b).unwrap().u_elastic;
        let quad = strain_energy_quad(&p, &sol).value;
        (series - quad).abs() / quad
    }));

    out.push(timed("spectral vs direct discretization", 1e-3, &|| {
        let mut worst = 0.0f64;
        for (a1, a2) in [(0.7, 0.3), (0.5, 0.25)] {
            let p = problem(a1, a2);
            let sol = solve_hertz(&p).unwrap();
            let grid = CollocationGrid::new(60, a1).unwrap();
            let ny = nystrom_solve(&p, sol.b, &grid).unwrap();
            let scale = sol.pressure(0.0);
            for &t in grid.nodes.iter().filter(|t| t.abs() < 0.9) {
                let diff = (ny.pressure(t) - nudge * sol.pressure(sol.b * t)).abs();
                worst = worst.max(diff / scale);
            }
        }
        worst
    }));

    out
}
