//! Self-contained special-function kernel: log-gamma, gamma, Pochhammer
//! symbols, Gegenbauer polynomials and the Gauss hypergeometric function.
//!
//! Everything here is a pure function of its arguments.

use crate::error::{ContactError, Result};

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural logarithm of |Gamma(x)| for x > 0 (Lanczos approximation).
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Gamma(x) for real x (poles excluded by the caller).
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        // reflection handles negative non-integer arguments
        let s = (std::f64::consts::PI * x).sin();
        std::f64::consts::PI / (s * ln_gamma(1.0 - x).exp())
    }
}

/// Ratio Gamma(num)/Gamma(den) for positive arguments, via log-gamma
/// differences to avoid overflow at moderate indices.
pub fn gamma_ratio(num: f64, den: f64) -> f64 {
    (ln_gamma(num) - ln_gamma(den)).exp()
}

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

/// Gegenbauer polynomial C_n^lambda(t) by the three-term recurrence.
pub fn gegenbauer(n: usize, lambda: f64, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut c_prev = 1.0;
    let mut c = 2.0 * lambda * t;
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * (kf + lambda - 1.0) * t * c - (kf + 2.0 * lambda - 2.0) * c_prev) / kf;
        c_prev = c;
        c = next;
    }
    c
}

/// Values C_0^lambda(t), ..., C_n^lambda(t) in one recurrence pass.
pub fn gegenbauer_all(n: usize, lambda: f64, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(2.0 * lambda * t);
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * (kf + lambda - 1.0) * t * out[k - 1]
            - (kf + 2.0 * lambda - 2.0) * out[k - 2])
            / kf;
        out.push(next);
    }
    out
}

/// Arguments of the Gauss hypergeometric function F(a,b,c;z).
#[derive(Debug, Clone, Copy)]
pub struct Hyp2f1Args {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

const HYP_TOL: f64 = 1e-15;
const HYP_MAX_TERMS: usize = 10_000;

fn nonpositive_int(x: f64) -> Option<usize> {
    if x <= 0.0 && x == x.round() {
        Some((-x) as usize)
    } else {
        None
    }
}

/// Direct series summation of F(a,b,c;z).
fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64, cap: Option<usize>) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let nmax = cap.unwrap_or(HYP_MAX_TERMS);
    for k in 0..nmax {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if cap.is_none() && term.abs() <= HYP_TOL * sum.abs() {
            return Ok(sum);
        }
    }
    if cap.is_some() {
        Ok(sum)
    } else {
        Err(ContactError::HypergeometricNonConvergence {
            a,
            b,
            c,
            z,
            terms: HYP_MAX_TERMS,
        })
    }
}

/// F(a,b,c;z) after the Pfaff map z -> z/(z-1); used for z < -1/2.
fn hyp2f1_transformed(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let w = z / (z - 1.0);
    Ok((1.0 - z).powf(-b) * hyp2f1_series(b, c - a, c, w, None)?)
}

/// Gauss hypergeometric function F(a,b,c;z).
///
/// Terminating series (a or b a nonpositive integer) are summed exactly as
/// finite sums for any real z. Nonterminating series are summed directly for
/// |z| <= 1/2 and through the argument transformation z -> z/(z-1) for
/// z < -1/2.
pub fn gauss_2f1(args: Hyp2f1Args) -> Result<f64> {
    let Hyp2f1Args { a, b, c, z } = args;
    if z == 0.0 {
        return Ok(1.0);
    }
    // terminating cases: finite polynomial, exact for any z
    let na = nonpositive_int(a);
    let nb = nonpositive_int(b);
    if na.is_some() || nb.is_some() {
        let n = match (na, nb) {
            (Some(na), Some(nb)) => na.min(nb),
            (Some(na), None) => na,
            (None, Some(nb)) => nb,
            _ => unreachable!(),
        };
        return hyp2f1_series(a, b, c, z, Some(n));
    }
    if z.abs() <= 0.5 {
        hyp2f1_series(a, b, c, z, None)
    } else if z < 0.0 {
        hyp2f1_transformed(a, b, c, z)
    } else {
        // slow region (1/2, 1); the cap guards against divergence
        hyp2f1_series(a, b, c, z, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn gamma_small_integers() {
        for (x, want) in [(1.0, 1.0), (2.0, 1.0), (3.0, 2.0), (6.0, 120.0)] {
            assert_relative_eq!(gamma(x), want, max_relative = 1e-13);
        }
        assert_relative_eq!(gamma(0.5), std::f64::consts::PI.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn gamma_reflection_negative() {
        // Gamma(-0.5) = -2 sqrt(pi)
        assert_relative_eq!(gamma(-0.5), -2.0 * std::f64::consts::PI.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(0.7, 0), 1.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
    }

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer(0, 0.35, 0.2), 1.0);
        assert_relative_eq!(gegenbauer(1, 0.25, 0.5), 0.25, max_relative = 1e-15);
        // C_n^l(1) = (2l)_n / n!
        assert_relative_eq!(gegenbauer(2, 0.25, 1.0), 0.375, max_relative = 1e-14);
    }

    #[test]
    fn hyp2f1_examples() {
        assert_eq!(gauss_2f1(Hyp2f1Args { a: 1.3, b: 0.2, c: 0.9, z: 0.0 }).unwrap(), 1.0);
        // F(1,1,2;z) = -ln(1-z)/z
        let v = gauss_2f1(Hyp2f1Args { a: 1.0, b: 1.0, c: 2.0, z: 0.5 }).unwrap();
        assert_relative_eq!(v, 2.0 * (2.0f64).ln(), max_relative = 1e-13);
        // F(-2,b,b;z) = (1-z)^2
        let v = gauss_2f1(Hyp2f1Args { a: -2.0, b: 1.0, c: 1.0, z: 0.3 }).unwrap();
        assert_relative_eq!(v, 0.49, max_relative = 1e-14);
    }

    #[test]
    fn hyp2f1_transform_agrees_with_direct() {
        // overlap region: direct summation still converges for z in (-1, -1/2)
        for z in [-0.55, -0.7, -0.9] {
            for (a, b, c) in [(0.3, 0.8, 1.7), (0.25, 1.75, 2.25), (-0.35, 0.95, 1.15)] {
                let direct = hyp2f1_series(a, b, c, z, None).unwrap();
                let transformed = hyp2f1_transformed(a, b, c, z).unwrap();
                assert_relative_eq!(direct, transformed, max_relative = 1e-10);
            }
        }
    }

    proptest! {
        #[test]
        fn pochhammer_splits(a in -3.0f64..3.0, m in 0usize..8, n in 0usize..8) {
            let lhs = pochhammer(a, m + n);
            let rhs = pochhammer(a, m) * pochhammer(a + m as f64, n);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1.0));
        }

        #[test]
        fn gegenbauer_recurrence_holds(lambda in 0.05f64..2.0, t in -1.0f64..1.0, n in 2usize..64) {
            let c = gegenbauer_all(n, lambda, t);
            let nf = n as f64;
            let lhs = nf * c[n];
            let rhs = 2.0 * (nf + lambda - 1.0) * t * c[n - 1] - (nf + 2.0 * lambda - 2.0) * c[n - 2];
            let scale = c[n].abs().max(c[n - 1].abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn gegenbauer_parity(lambda in 0.05f64..2.0, t in -1.0f64..1.0, n in 0usize..32) {
            let plus = gegenbauer(n, lambda, t);
            let minus = gegenbauer(n, lambda, -t);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let scale = plus.abs().max(1e-30);
            prop_assert!((plus - sign * minus).abs() <= 1e-13 * scale.max(1.0));
        }
    }
}
