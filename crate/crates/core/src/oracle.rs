//! Quadrature-based cross-checks. Everything here goes back to the defining
//! integrals: expansion coefficients are integrated numerically rather than
//! taken from the closed forms elsewhere in the crate, and the governing
//! equation is discretized directly with a piecewise-linear Nystrom scheme.
//! Slow by design; used to validate the spectral solver, never to drive it.

use crate::assembly::ContactProblem;
use crate::error::{ContactError, Result};
use crate::hertz::ContactSolution;
use crate::linalg;
use crate::quadrature::{tanh_sinh, tanh_sinh_gaps, QuadResult};
use crate::specfun::gegenbauer;

/// Chebyshev-Lobatto node set on [-1, 1] with the hat-function weight
/// integrals against (1 - tau^2)^{(alpha1-1)/2}.
#[derive(Debug, Clone)]
pub struct CollocationGrid {
    pub m: usize,
    /// m + 1 nodes, ascending, including both endpoints.
    pub nodes: Vec<f64>,
    /// Integral of the weighted hat function attached to each node.
    pub weights: Vec<f64>,
}

impl CollocationGrid {
    pub fn new(m: usize, alpha1: f64) -> Result<Self> {
        if m < 4 {
            return Err(ContactError::InvalidInput(format!(
                "collocation grid needs at least 4 panels, got {m}"
            )));
        }
        let nodes: Vec<f64> = (0..=m)
            .map(|i| -(std::f64::consts::PI * i as f64 / m as f64).cos())
            .collect();
        let e = (alpha1 - 1.0) / 2.0;
        let mut weights = vec![0.0; m + 1];
        for j in 0..=m {
            let mut w = 0.0;
            if j > 0 {
                let (a, b) = (nodes[j - 1], nodes[j]);
                w += tanh_sinh(
                    |tau| (1.0 - tau * tau).powf(e) * (tau - a) / (b - a),
                    a,
                    b,
                    1e-12,
                )
                .value;
            }
            if j < m {
                let (a, b) = (nodes[j], nodes[j + 1]);
                w += tanh_sinh(
                    |tau| (1.0 - tau * tau).powf(e) * (b - tau) / (b - a),
                    a,
                    b,
                    1e-12,
                )
                .value;
            }
            weights[j] = w;
        }
        Ok(Self { m, nodes, weights })
    }
}

/// Solution of the direct discretization: smooth factors of the two partial
/// pressures at the grid nodes, plus the rigid displacement tying them.
#[derive(Debug, Clone)]
pub struct NystromSolution {
    pub grid: CollocationGrid,
    pub u1: Vec<f64>,
    pub u2: Vec<f64>,
    pub delta: f64,
    pub b: f64,
    pub alpha1: f64,
    /// Pivot-ratio condition estimate of the collocation matrix.
    pub cond_estimate: f64,
}

impl NystromSolution {
    /// Interpolated contact pressure at x = b t, |t| < 1.
    pub fn pressure(&self, t: f64) -> f64 {
        let n = &self.grid.nodes;
        let i = match n.binary_search_by(|v| v.total_cmp(&t)) {
            Ok(i) => i.min(n.len() - 2),
            Err(i) => i.saturating_sub(1).min(n.len() - 2),
        };
        let s = (t - n[i]) / (n[i + 1] - n[i]);
        let u = |v: &Vec<f64>| v[i] * (1.0 - s) + v[i + 1] * s;
        let smooth = u(&self.u1) + self.delta * u(&self.u2);
        (1.0 - t * t).powf((self.alpha1 - 1.0) / 2.0) * smooth
    }
}

/// Kernel of the governing equation in normalized coordinates.
fn kernel_value(problem: &ContactProblem, b: f64, dist: f64) -> f64 {
    let a1 = problem.body1.theta * b.powf(1.0 - problem.body1.alpha) / problem.body1.alpha;
    let a2 = problem.body2.theta * b.powf(1.0 - problem.body2.alpha) / problem.body2.alpha;
    a1 * dist.powf(-problem.body1.alpha) + a2 * dist.powf(-problem.body2.alpha)
}

/// One collocation-matrix entry: the weighted hat function of node `j`
/// integrated against the kernel centred at `t`. Each panel is split at the
/// kernel singularity so every sub-integral has endpoint singularities only.
fn matrix_entry(problem: &ContactProblem, b: f64, grid: &CollocationGrid, t: f64, j: usize) -> f64 {
    let e = (problem.body1.alpha - 1.0) / 2.0;
    let n = &grid.nodes;
    let mut total = 0.0;
    let mut panel = |lo: f64, hi: f64, rising: bool| {
        let hat = move |tau: f64| {
            let s = (tau - lo) / (hi - lo);
            if rising {
                s
            } else {
                1.0 - s
            }
        };
        let mut piece = |a: f64, c: f64| {
            if c <= a {
                return;
            }
            // exact endpoint distances: both the edge weight and the kernel
            // need far more precision near their singular points than the
            // rounded abscissa can carry
            let f = |tau: f64, da: f64, db: f64| {
                let one_plus = if a == -1.0 { da } else { 1.0 + tau };
                let one_minus = if c == 1.0 { db } else { 1.0 - tau };
                let dist = if t == c {
                    db
                } else if t == a {
                    da
                } else {
                    (t - tau).abs()
                };
                (one_plus * one_minus).powf(e) * hat(tau) * kernel_value(problem, b, dist)
            };
            total += tanh_sinh_gaps(f, a, c, 1e-11).value;
        };
        if t > lo && t < hi {
            piece(lo, t);
            piece(t, hi);
        } else {
            piece(lo, hi);
        }
    };
    if j > 0 {
        panel(n[j - 1], n[j], true);
    }
    if j < grid.m {
        panel(n[j], n[j + 1], false);
    }
    total
}

/// Solves the governing equation at fixed half-length `b` by collocation on
/// the grid, for the profile-driven and unit right-hand sides together, then
/// fixes the rigid displacement from the load balance.
pub fn nystrom_solve(
    problem: &ContactProblem,
    b: f64,
    grid: &CollocationGrid,
) -> Result<NystromSolution> {
    let n = grid.m + 1;
    let mut a = vec![0.0; n * n];
    for (i, &t) in grid.nodes.iter().enumerate() {
        for j in 0..n {
            a[i * n + j] = matrix_entry(problem, b, grid, t, j);
        }
    }
    let q0 = problem.profile.q0;
    let q1 = problem.profile.q1;
    let rhs1: Vec<f64> = grid
        .nodes
        .iter()
        .map(|&t| {
            let x = b * t;
            -(q0 * x * x + q1 * x * x * x * x)
        })
        .collect();
    let rhs2 = vec![1.0; n];
    let (sols, cond) = linalg::solve_multi(a, n, &[rhs1, rhs2])?;
    let (u1, u2) = (sols[0].clone(), sols[1].clone());
    let int = |u: &[f64]| -> f64 { u.iter().zip(&grid.weights).map(|(v, w)| v * w).sum() };
    let i2 = int(&u2);
    if i2.abs() < 1e-300 {
        return Err(ContactError::DegenerateLoadComponent);
    }
    let delta = (problem.load / b - int(&u1)) / i2;
    Ok(NystromSolution {
        grid: grid.clone(),
        u1,
        u2,
        delta,
        b,
        alpha1: problem.body1.alpha,
        cond_estimate: cond,
    })
}

/// Applies the governing two-power kernel to a pressure given by its smooth
/// factor (pressure = edge weight times `smooth`), at interior point `t`.
/// Splits at the kernel singularity and feeds exact endpoint distances to
/// the integrand, which matters for exponents close to 1.
pub fn apply_operator(
    problem: &ContactProblem,
    b: f64,
    smooth: &dyn Fn(f64) -> f64,
    t: f64,
) -> QuadResult {
    debug_assert!(t.abs() < 1.0);
    let e = (problem.body1.alpha - 1.0) / 2.0;
    let mut value = 0.0;
    let mut err = 0.0;
    for (a, c) in [(-1.0, t), (t, 1.0)] {
        let f = |tau: f64, da: f64, db: f64| {
            let one_plus = if a == -1.0 { da } else { 1.0 + tau };
            let one_minus = if c == 1.0 { db } else { 1.0 - tau };
            let dist = if t == c { db } else { da };
            (one_plus * one_minus).powf(e) * smooth(tau) * kernel_value(problem, b, dist)
        };
        let r = tanh_sinh_gaps(f, a, c, 1e-12);
        value += r.value;
        err += r.error_estimate;
    }
    QuadResult { value, error_estimate: err }
}

/// Which expansion coefficient to reproduce by direct integration.
#[derive(Debug, Clone, Copy)]
pub enum Coefficient {
    /// Cross-basis projection of the degree-n polynomial onto degree m.
    H { n: usize, m: usize },
    /// Squared norm of the degree-n basis polynomial.
    Norm { n: usize },
    /// Profile moment of degree n for the quadratic + quartic shape.
    G { n: usize, q0: f64, q1: f64, b: f64 },
    /// Unit right-hand-side moment of degree n.
    GUnit { n: usize },
    /// Exterior power-kernel integral at |t| > 1.
    Exterior { n: usize, t: f64, alpha_j: f64 },
}

/// Integrates the defining integral of the requested coefficient. The error
/// estimate is the quadrature's attained-accuracy report.
pub fn quad_coefficient(kind: Coefficient, alpha1: f64, alpha2: f64) -> QuadResult {
    let e1 = (alpha1 - 1.0) / 2.0;
    match kind {
        Coefficient::H { n, m } => tanh_sinh(
            |tau| {
                gegenbauer(n, alpha1 / 2.0, tau)
                    * gegenbauer(m, alpha2 / 2.0, tau)
                    * (1.0 - tau * tau).powf(e1)
            },
            -1.0,
            1.0,
            1e-13,
        ),
        Coefficient::Norm { n } => tanh_sinh(
            |tau| {
                let c = gegenbauer(n, alpha1 / 2.0, tau);
                c * c * (1.0 - tau * tau).powf(e1)
            },
            -1.0,
            1.0,
            1e-13,
        ),
        Coefficient::G { n, q0, q1, b } => tanh_sinh(
            |tau| {
                let x = b * tau;
                -(q0 * x * x + q1 * x * x * x * x)
                    * gegenbauer(n, alpha1 / 2.0, tau)
                    * (1.0 - tau * tau).powf(e1)
            },
            -1.0,
            1.0,
            1e-13,
        ),
        Coefficient::GUnit { n } => tanh_sinh(
            |tau| gegenbauer(n, alpha1 / 2.0, tau) * (1.0 - tau * tau).powf(e1),
            -1.0,
            1.0,
            1e-13,
        ),
        Coefficient::Exterior { n, t, alpha_j } => tanh_sinh(
            |tau| {
                (1.0 - tau * tau).powf(e1) * gegenbauer(n, alpha1 / 2.0, tau)
                    / (tau - t).abs().powf(alpha_j)
            },
            -1.0,
            1.0,
            1e-14,
        ),
    }
}

/// Elastic strain energy by direct integration of pressure times normal
/// displacement over the contact zone.
pub fn strain_energy_quad(problem: &ContactProblem, solution: &ContactSolution) -> QuadResult {
    let b = solution.b;
    let q0 = problem.profile.q0;
    let q1 = problem.profile.q1;
    let delta = solution.delta;
    let r = tanh_sinh(
        |tau| {
            let x = b * tau;
            let v = delta - (q0 * x * x + q1 * x * x * x * x);
            solution.pressure(x) * v
        },
        -1.0,
        1.0,
        1e-13,
    );
    QuadResult {
        value: 0.5 * b * r.value,
        error_estimate: 0.5 * b * r.error_estimate,
    }
}

/// Weighted singular integral of the degree-n basis polynomial at an interior
/// point, by subtracting the singularity: the remaining integrand is
/// continuous at `t` and the subtracted part integrates in closed form.
pub fn spectral_lhs_quad(n: usize, alpha: f64, t: f64) -> QuadResult {
    debug_assert!(t.abs() < 1.0);
    let e = (alpha - 1.0) / 2.0;
    let num = |tau: f64| gegenbauer(n, alpha / 2.0, tau) * (1.0 - tau * tau).powf(e);
    let nt = num(t);
    let f = |tau: f64| (num(tau) - nt) / (tau - t).abs().powf(alpha);
    let left = tanh_sinh(f, -1.0, t, 1e-12);
    let right = tanh_sinh(f, t, 1.0, 1e-12);
    let analytic = nt * ((1.0 + t).powf(1.0 - alpha) + (1.0 - t).powf(1.0 - alpha)) / (1.0 - alpha);
    QuadResult {
        value: left.value + right.value + analytic,
        error_estimate: left.error_estimate + right.error_estimate,
    }
}
