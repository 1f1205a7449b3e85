//! Surface normal displacements outside the contact zone, evaluated through
//! the residue formulas for the exterior power-kernel integrals I_n, plus a
//! Chebyshev-node quadrature cross-check.

use crate::assembly::ContactProblem;
use crate::error::{ContactError, Result};
use crate::hertz::ContactSolution;
use crate::kernel;
use crate::quadrature::tanh_sinh;
use crate::specfun::{gamma, gauss_2f1, gegenbauer, pochhammer, Hyp2f1Args};

/// Exterior evaluation point in normalized coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// 1 < |t| < 3
    Near,
    /// |t| > 3
    Far,
}

#[derive(Debug, Clone, Copy)]
pub struct ExteriorPoint {
    pub t: f64,
    pub regime: Regime,
}

impl ExteriorPoint {
    pub fn new(t: f64) -> Result<Self> {
        if t.abs() <= 1.0 {
            return Err(ContactError::InvalidInput(format!(
                "exterior point requires |t| > 1, got {t}"
            )));
        }
        let regime = if t.abs() < 3.0 { Regime::Near } else { Regime::Far };
        Ok(Self { t, regime })
    }
}

/// Exterior integral I_n(t; alpha_j) of the weighted degree-n basis
/// polynomial against |tau - t|^{-alpha_j}, for even n and |t| > 1.
pub fn i_n(point: ExteriorPoint, n: usize, alpha_j: f64, alpha1: f64) -> Result<f64> {
    debug_assert!(n % 2 == 0, "odd indices are out of scope");
    // even integrand in tau against an even-in-t kernel family
    let t = -point.t.abs();
    let zeta = -(t + 1.0) / 2.0;
    let nf = n as f64;
    if point.regime == Regime::Near {
        let pre = pochhammer(alpha1, n) * gamma((alpha1 + 1.0) / 2.0)
            / (2f64.powf(alpha_j - alpha1) * gamma(nf + 1.0));
        let f1 = gauss_2f1(Hyp2f1Args {
            a: alpha_j - alpha1 - nf,
            b: alpha_j + nf,
            c: alpha_j + (1.0 - alpha1) / 2.0,
            z: -zeta,
        })?;
        let term1 = pochhammer(alpha_j, n) * gamma((alpha1 + 1.0) / 2.0 - alpha_j)
            / gamma(alpha1 - alpha_j + nf + 1.0)
            * f1;
        let f2 = gauss_2f1(Hyp2f1Args {
            a: (1.0 + alpha1) / 2.0 + nf,
            b: (1.0 - alpha1) / 2.0 - nf,
            c: (3.0 + alpha1) / 2.0 - alpha_j,
            z: -zeta,
        })?;
        let term2 = gamma(alpha_j - (alpha1 + 1.0) / 2.0) / gamma(alpha_j)
            * zeta.powf((alpha1 + 1.0) / 2.0 - alpha_j)
            * f2;
        let sum = term1 + term2;
        // the two terms grow with n and nearly cancel; once more than ~6
        // digits are lost the closed form is worse than direct quadrature
        let loss = f64::EPSILON * (term1.abs() + term2.abs());
        if !sum.is_finite() || loss > 1e-10 * sum.abs() {
            return Ok(i_n_quad(t, n, alpha_j, alpha1));
        }
        Ok(pre * sum)
    } else {
        let pre = std::f64::consts::PI.sqrt() * pochhammer(alpha1, n) * pochhammer(alpha_j, n)
            * gamma((alpha1 + 1.0) / 2.0)
            / (2f64.powf(alpha_j + 2.0 * nf)
                * gamma(nf + 1.0)
                * gamma(alpha1 / 2.0 + nf + 1.0)
                * zeta.powf(alpha_j + nf));
        let f = gauss_2f1(Hyp2f1Args {
            a: alpha_j + nf,
            b: (alpha1 + 1.0) / 2.0 + nf,
            c: alpha1 + 2.0 * nf + 1.0,
            z: -1.0 / zeta,
        })?;
        Ok(pre * f)
    }
}

/// Direct quadrature of the defining integral; the integrand is smooth apart
/// from the endpoint weight because |t| > 1.
fn i_n_quad(t: f64, n: usize, alpha_j: f64, alpha1: f64) -> f64 {
    tanh_sinh(
        |tau| {
            (1.0 - tau * tau).powf((alpha1 - 1.0) / 2.0) * gegenbauer(n, alpha1 / 2.0, tau)
                / (tau - t).abs().powf(alpha_j)
        },
        -1.0,
        1.0,
        1e-14,
    )
    .value
}

/// Normal surface displacement of body `body` (1 or 2, in normalized order)
/// at |x| > b, from the solved spectral coefficients.
pub fn surface_displacement(
    problem: &ContactProblem,
    solution: &ContactSolution,
    body: usize,
    x: f64,
) -> Result<f64> {
    let b = solution.b;
    if x.abs() <= b {
        return Err(ContactError::InvalidInput(format!(
            "displacement formulas apply outside the contact zone, |x| > {b}, got {x}"
        )));
    }
    let m = if body == 1 { &problem.body1 } else { &problem.body2 };
    let a_j = m.theta * b.powf(1.0 - m.alpha) / m.alpha;
    let point = ExteriorPoint::new(x / b)?;
    let mut v = 0.0;
    for i in 0..solution.coeffs.phi1.len() {
        let phi = solution.combined_coeff(i);
        if phi == 0.0 {
            continue;
        }
        v += phi * i_n(point, 2 * i, m.alpha, problem.body1.alpha)?;
    }
    Ok(a_j * v)
}

/// Two-term specialization for equal exponents and a quadratic profile, with
/// the leading coefficients in explicit form.
pub fn surface_displacement_equal(
    problem: &ContactProblem,
    solution: &ContactSolution,
    body: usize,
    x: f64,
) -> Result<f64> {
    let alpha = problem.body1.alpha;
    let b = solution.b;
    let m = if body == 1 { &problem.body1 } else { &problem.body2 };
    let theta_sum = problem.body1.theta + problem.body2.theta;
    let phi0 = problem.load / (b * kernel::gamma0(alpha));
    let phi2 = -4.0 * b.powf(alpha + 1.0) * problem.profile.q0
        * (std::f64::consts::PI * alpha / 2.0).cos()
        / (std::f64::consts::PI * alpha * (alpha + 1.0) * (alpha + 2.0) * theta_sum);
    let point = ExteriorPoint::new(x / b)?;
    let i0 = i_n(point, 0, alpha, alpha)?;
    let i2 = i_n(point, 2, alpha, alpha)?;
    Ok(m.theta * b.powf(1.0 - alpha) / alpha * (phi0 * i0 + phi2 * i2))
}

/// Chebyshev-node quadrature approximation of the exterior displacement.
pub fn displacement_gauss_check(
    problem: &ContactProblem,
    solution: &ContactSolution,
    body: usize,
    x: f64,
    n_quad: usize,
) -> f64 {
    let b = solution.b;
    let m = if body == 1 { &problem.body1 } else { &problem.body2 };
    let a_j = m.theta * b.powf(1.0 - m.alpha) / m.alpha;
    let t = x / b;
    let nf = n_quad as f64;
    let mut s = 0.0;
    for i in 1..=n_quad {
        let phase = (2.0 * i as f64 - 1.0) * std::f64::consts::PI / (2.0 * nf);
        let xi = phase.cos();
        s += solution.pressure(b * xi) / (t - xi).abs().powf(m.alpha) * phase.sin();
    }
    std::f64::consts::PI * a_j * s / nf
}
