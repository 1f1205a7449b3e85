//! Problem definition and per-half-length assembly: material compliance,
//! polynomial right-hand sides, the truncated canonical system for both
//! right-hand-side vectors, the rigid displacement and the contact pressure.

use crate::error::{ContactError, Result};
use crate::kernel::{self, KernelTables};
use crate::linalg;
use crate::specfun::{gamma, gegenbauer_all};

/// One graded elastic half-plane with Young modulus factor `e`, grading
/// exponent `alpha` and Poisson ratio `nu`. The compliance `theta` and the
/// intermediate constants `q`, `c` are derived at construction.
#[derive(Debug, Clone, Copy)]
pub struct MaterialHalfPlane {
    pub e: f64,
    pub alpha: f64,
    pub nu: f64,
    pub q: f64,
    pub c: f64,
    pub theta: f64,
}

impl MaterialHalfPlane {
    pub fn new(e: f64, alpha: f64, nu: f64) -> Result<Self> {
        if !(e > 0.0) {
            return Err(ContactError::InvalidInput(format!("modulus factor must be > 0, got {e}")));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ContactError::InvalidInput(format!("exponent must lie in (0,1), got {alpha}")));
        }
        if !(nu > 0.0 && nu <= 0.5) {
            return Err(ContactError::InvalidInput(format!("Poisson ratio must lie in (0, 0.5], got {nu}")));
        }
        let q2 = (1.0 + alpha) * (1.0 - alpha * nu / (1.0 - nu));
        if !(q2 > 0.0) {
            return Err(ContactError::InvalidInput(format!("invalid material: q^2 = {q2} <= 0")));
        }
        let q = q2.sqrt();
        let c = 2f64.powf(alpha + 1.0) / (std::f64::consts::PI * gamma(alpha + 2.0))
            * gamma(alpha / 2.0 - q / 2.0 + 1.5)
            * gamma(alpha / 2.0 + q / 2.0 + 1.5);
        let theta = c * (1.0 - nu * nu) * q * (std::f64::consts::PI * q / 2.0).sin()
            / ((alpha + 1.0) * e);
        Ok(Self { e, alpha, nu, q, c, theta })
    }
}

/// Compliance factor of one body.
pub fn material_theta(body: &MaterialHalfPlane) -> f64 {
    body.theta
}

/// Even polynomial gap profile f(x) = q0 x^2 + q1 x^4.
#[derive(Debug, Clone, Copy)]
pub struct ProfilePoly {
    pub q0: f64,
    pub q1: f64,
}

impl ProfilePoly {
    pub fn new(q0: f64, q1: f64) -> Result<Self> {
        if q0 < 0.0 || q1 < 0.0 || q0 + q1 <= 0.0 {
            return Err(ContactError::InvalidInput(format!(
                "profile coefficients must be nonnegative with q0 + q1 > 0, got q0={q0}, q1={q1}"
            )));
        }
        Ok(Self { q0, q1 })
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.q0 * x * x + self.q1 * x.powi(4)
    }

    pub fn is_quadratic(&self) -> bool {
        self.q1 == 0.0
    }
}

/// Contact model selector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Hertz,
    /// Adhesive model with work of adhesion `gamma_s`.
    Jkr { gamma_s: f64 },
}

/// Numerical controls shared by the solvers.
#[derive(Debug, Clone, Copy)]
pub struct NumericControls {
    /// Retained even-index basis functions.
    pub n_terms: usize,
    /// Relative tail tolerance for the kernel coefficient series.
    pub tail_tol: f64,
    /// Relative tolerance on the contact half-length root.
    pub b_rel_tol: f64,
    /// Forward-difference step for the adhesive energy derivative.
    pub fd_epsilon: f64,
}

impl Default for NumericControls {
    fn default() -> Self {
        Self {
            n_terms: kernel::DEFAULT_TRUNCATION,
            tail_tol: kernel::DEFAULT_TAIL_TOL,
            b_rel_tol: 1e-10,
            fd_epsilon: 1e-4,
        }
    }
}

/// Full problem statement. `body1` always carries the larger exponent; if the
/// constructor had to swap the bodies to enforce that, `swapped` is set so
/// reports can map back to the caller's numbering.
#[derive(Debug, Clone)]
pub struct ContactProblem {
    pub body1: MaterialHalfPlane,
    pub body2: MaterialHalfPlane,
    pub profile: ProfilePoly,
    pub load: f64,
    pub model: Model,
    pub controls: NumericControls,
    pub swapped: bool,
}

impl ContactProblem {
    pub fn new(
        body1: MaterialHalfPlane,
        body2: MaterialHalfPlane,
        profile: ProfilePoly,
        load: f64,
        model: Model,
        controls: NumericControls,
    ) -> Result<Self> {
        if !(load > 0.0) {
            return Err(ContactError::InvalidInput(format!("load must be > 0, got {load}")));
        }
        if let Model::Jkr { gamma_s } = model {
            if gamma_s < 0.0 {
                return Err(ContactError::InvalidInput(format!(
                    "work of adhesion must be >= 0, got {gamma_s}"
                )));
            }
        }
        let swapped = body1.alpha < body2.alpha;
        let (b1, b2) = if swapped { (body2, body1) } else { (body1, body2) };
        Ok(Self {
            body1: b1,
            body2: b2,
            profile,
            load,
            model,
            controls,
            swapped,
        })
    }

    pub fn exponent_pair(&self) -> Result<kernel::ExponentPair> {
        kernel::ExponentPair::new(self.body1.alpha, self.body2.alpha)
    }

    /// Kernel amplitude A_j = theta_j b^{1-alpha_j} / alpha_j.
    pub fn amplitude(&self, body: usize, b: f64) -> f64 {
        let m = if body == 1 { &self.body1 } else { &self.body2 };
        m.theta * b.powf(1.0 - m.alpha) / m.alpha
    }

    /// Kernel ratio gamma = A_2 / A_1 at half-length `b`.
    pub fn kernel_ratio(&self, b: f64) -> f64 {
        self.amplitude(2, b) / self.amplitude(1, b)
    }
}

/// Spectral coefficients of the two pressure components at one half-length.
/// `phi1[i]`, `phi2[i]` hold the even-index coefficients of degree 2i.
#[derive(Debug, Clone)]
pub struct SpectralCoeffs {
    pub phi1: Vec<f64>,
    pub phi2: Vec<f64>,
    pub b: f64,
    pub alpha1: f64,
}

/// Right-hand-side projections of the profile term (first vector) and the
/// unit term (second vector) onto the retained basis, at half-length `b`.
///
/// For the quadratic profile only slots 0 and 1 (degrees 0 and 2) are
/// nonzero; the quartic term adds slot 2 (degree 4).
pub fn profile_rhs(profile: &ProfilePoly, b: f64, alpha1: f64, n_terms: usize) -> (Vec<f64>, Vec<f64>) {
    let g0c = kernel::gamma0(alpha1);
    let rt_pi = std::f64::consts::PI.sqrt();
    let (q0, q1) = (profile.q0, profile.q1);
    let mut g1 = vec![0.0; n_terms];
    g1[0] = -b * b * g0c / (alpha1 + 2.0) * (q0 + 3.0 * q1 * b * b / (alpha1 + 4.0));
    if n_terms > 1 {
        g1[1] = -b * b * rt_pi * alpha1 * gamma((alpha1 + 3.0) / 2.0) / (2.0 * gamma(alpha1 / 2.0 + 3.0))
            * (q0 + 6.0 * q1 * b * b / (alpha1 + 6.0));
    }
    if n_terms > 2 && q1 != 0.0 {
        g1[2] = -b.powi(4) * rt_pi * alpha1 * (alpha1 + 2.0) * gamma((alpha1 + 5.0) / 2.0)
            / (4.0 * gamma(alpha1 / 2.0 + 5.0))
            * q1;
    }
    let mut g2 = vec![0.0; n_terms];
    g2[0] = g0c;
    (g1, g2)
}

/// Solves the truncated canonical system (I + gamma R) Phi = d for both
/// right-hand sides at half-length `b`.
pub fn solve_system(problem: &ContactProblem, tables: &KernelTables, b: f64) -> Result<SpectralCoeffs> {
    let n = tables.n_terms;
    let alpha1 = problem.body1.alpha;
    let a1 = problem.amplitude(1, b);
    let gam = problem.kernel_ratio(b);
    let (g1, g2) = profile_rhs(&problem.profile, b, alpha1, n);
    let d1: Vec<f64> = (0..n).map(|i| g1[i] / (a1 * tables.betas[i] * tables.hs[i])).collect();
    let d2: Vec<f64> = (0..n).map(|i| g2[i] / (a1 * tables.betas[i] * tables.hs[i])).collect();
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = gam * tables.r_at(i, j);
        }
        m[i * n + i] += 1.0;
    }
    let (mut sols, _cond) = linalg::solve_multi(m, n, &[d1, d2])?;
    let phi2 = sols.pop().unwrap();
    let phi1 = sols.pop().unwrap();
    Ok(SpectralCoeffs { phi1, phi2, b, alpha1 })
}

/// Rigid displacement fixed by load balance:
/// delta = (P/b - Phi_0^{(1)} Gamma_0) / (Phi_0^{(2)} Gamma_0).
pub fn rigid_displacement(coeffs: &SpectralCoeffs, load: f64, b: f64) -> Result<f64> {
    let g0c = kernel::gamma0(coeffs.alpha1);
    if coeffs.phi2[0] == 0.0 {
        return Err(ContactError::DegenerateLoadComponent);
    }
    Ok((load / b - coeffs.phi1[0] * g0c) / (coeffs.phi2[0] * g0c))
}

/// Contact pressure at `x` in [-b, b].
///
/// At |x| = b the analytic limit is returned: 0 when the endpoint series
/// vanishes (Hertzian), otherwise a signed infinity carrying the sign of the
/// bracketed series (adhesive case).
pub fn pressure_at(coeffs: &SpectralCoeffs, delta: f64, x: f64) -> f64 {
    let b = coeffs.b;
    let t = x / b;
    debug_assert!(t.abs() <= 1.0 + 1e-12);
    let n = coeffs.phi1.len();
    let combined: Vec<f64> = (0..n).map(|i| coeffs.phi1[i] + delta * coeffs.phi2[i]).collect();
    if t.abs() >= 1.0 {
        let s = endpoint_series(coeffs, delta);
        let scale: f64 = combined.iter().map(|v| v.abs()).sum();
        if s.abs() <= 1e-8 * scale.max(1e-300) {
            return 0.0;
        }
        return s.signum() * f64::INFINITY;
    }
    let c = gegenbauer_all(2 * (n - 1), coeffs.alpha1 / 2.0, t);
    let mut series = 0.0;
    for (i, phi) in combined.iter().enumerate() {
        series += phi * c[2 * i];
    }
    series * (1.0 - t * t).powf((coeffs.alpha1 - 1.0) / 2.0)
}

/// Endpoint series sum_n (alpha1)_{2n}/(2n)! (Phi_{2n}^{(1)} + delta Phi_{2n}^{(2)}):
/// the value of the pressure's polynomial factor at t = 1.
pub fn endpoint_series(coeffs: &SpectralCoeffs, delta: f64) -> f64 {
    let alpha1 = coeffs.alpha1;
    let mut w = 1.0; // (alpha1)_{2n} / (2n)!
    let mut s = 0.0;
    for i in 0..coeffs.phi1.len() {
        s += w * (coeffs.phi1[i] + delta * coeffs.phi2[i]);
        let k = 2.0 * i as f64;
        w *= (alpha1 + k) / (k + 1.0) * (alpha1 + k + 1.0) / (k + 2.0);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn theta_classical_limit() {
        // alpha -> 0: theta -> 2(1-nu^2)/(pi E)
        let m = MaterialHalfPlane::new(1.0, 1e-8, 0.3).unwrap();
        let want = 2.0 * (1.0 - 0.09) / std::f64::consts::PI;
        assert_relative_eq!(m.theta, want, max_relative = 1e-6);
    }

    #[test]
    fn theta_reference_value() {
        // frozen from a 40-digit evaluation
        let m = MaterialHalfPlane::new(1.0, 0.5, 0.3).unwrap();
        assert_relative_eq!(m.theta, 0.47051945118440541, max_relative = 1e-12);
    }

    #[test]
    fn theta_incompressible_linear_limit() {
        // nu = 1/2, alpha -> 1: theta ~ 3 (1 - alpha^2) / (8 e)
        let alpha = 1.0 - 1e-8;
        let m = MaterialHalfPlane::new(2.0, alpha, 0.5).unwrap();
        let want = 3.0 * (1.0 - alpha * alpha) / (8.0 * 2.0);
        assert_relative_eq!(m.theta, want, max_relative = 1e-6);
    }

    #[test]
    fn profile_rhs_quadratic_sparsity() {
        let p = ProfilePoly::new(1.5, 0.0).unwrap();
        let (g1, g2) = profile_rhs(&p, 1.3, 0.6, 8);
        let g0c = kernel::gamma0(0.6);
        assert_relative_eq!(g1[0], -1.3f64.powi(2) * 1.5 * g0c / 2.6, max_relative = 1e-13);
        assert!(g1[1] < 0.0);
        for v in &g1[2..] {
            assert_eq!(*v, 0.0);
        }
        assert_eq!(g2[0], g0c);
        assert!(g2[1..].iter().all(|v| *v == 0.0));
    }

    #[test]
    fn profile_rhs_quartic_three_entries() {
        let p = ProfilePoly::new(0.0, 1.0).unwrap();
        let (g1, _) = profile_rhs(&p, 0.9, 0.5, 8);
        assert!(g1[0] != 0.0 && g1[1] != 0.0 && g1[2] != 0.0);
        assert!(g1[3..].iter().all(|v| *v == 0.0));
    }

    #[test]
    fn bodies_normalized_by_exponent() {
        let lo = MaterialHalfPlane::new(1.0, 0.2, 0.3).unwrap();
        let hi = MaterialHalfPlane::new(1.0, 0.8, 0.3).unwrap();
        let p = ContactProblem::new(
            lo,
            hi,
            ProfilePoly::new(1.0, 0.0).unwrap(),
            1.0,
            Model::Hertz,
            NumericControls::default(),
        )
        .unwrap();
        assert!(p.swapped);
        assert_eq!(p.body1.alpha, 0.8);
    }

    #[test]
    fn equal_exponent_solution_is_entrywise() {
        // alpha1 = alpha2: Phi_n = d_n / (1 + gamma)
        let m1 = MaterialHalfPlane::new(1.0, 0.4, 0.3).unwrap();
        let m2 = MaterialHalfPlane::new(2.0, 0.4, 0.3).unwrap();
        let problem = ContactProblem::new(
            m1,
            m2,
            ProfilePoly::new(1.0, 0.0).unwrap(),
            1.0,
            Model::Hertz,
            NumericControls::default(),
        )
        .unwrap();
        let pair = problem.exponent_pair().unwrap();
        let tables = kernel::build_tables(&pair, 8, kernel::DEFAULT_TAIL_TOL).unwrap();
        let b = 1.1;
        let coeffs = solve_system(&problem, &tables, b).unwrap();
        let gam = problem.kernel_ratio(b);
        let a1 = problem.amplitude(1, b);
        let (g1, _) = profile_rhs(&problem.profile, b, 0.4, 8);
        for i in 0..8 {
            let d = g1[i] / (a1 * tables.betas[i] * tables.hs[i]);
            assert_relative_eq!(coeffs.phi1[i], d / (1.0 + gam), max_relative = 1e-12, epsilon = 1e-300);
        }
    }

    #[test]
    fn pressure_is_even() {
        let coeffs = SpectralCoeffs {
            phi1: vec![0.4, -0.1, 0.02],
            phi2: vec![0.1, 0.0, 0.0],
            b: 1.0,
            alpha1: 0.6,
        };
        for x in [0.1, 0.35, 0.77] {
            assert_relative_eq!(
                pressure_at(&coeffs, 0.5, x),
                pressure_at(&coeffs, 0.5, -x),
                max_relative = 1e-13
            );
        }
    }
}
