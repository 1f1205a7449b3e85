//! Spectral kernel coefficients for the dual-power-kernel integral equation:
//! the eigenvalues `beta_n`, the basis norms `h_n`, the cross-basis
//! coefficients `H_k^{(n)}`, and the system matrices `L` and `R` for a given
//! exponent pair and truncation.
//!
//! Only even-index basis functions are retained (all profiles in scope are
//! even, so odd coefficients vanish identically): a truncation of `N` keeps
//! the actual indices 0, 2, ..., 2(N-1).

use crate::error::{ContactError, Result};
use crate::specfun::{gamma, ln_gamma};

/// Below this exponent gap the degenerate (diagonal) branch is used to avoid
/// 0 * inf cancellation in the Pochhammer factors of (alpha2 - alpha1)/2.
pub const EQUAL_EXPONENT_GAP: f64 = 1e-8;

/// Default number of retained even-index basis functions.
pub const DEFAULT_TRUNCATION: usize = 16;

/// Default relative tail tolerance for the `L` coefficient series.
pub const DEFAULT_TAIL_TOL: f64 = 1e-13;

/// Term cap per `L` entry.
pub const SERIES_TERM_CAP: usize = 100_000;

/// Grading exponents of the two bodies, normalized so alpha1 >= alpha2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPair {
    alpha1: f64,
    alpha2: f64,
}

impl ExponentPair {
    pub fn new(alpha1: f64, alpha2: f64) -> Result<Self> {
        if !(alpha1 > 0.0 && alpha1 < 1.0) || !(alpha2 > 0.0 && alpha2 < 1.0) {
            return Err(ContactError::InvalidInput(format!(
                "exponents must lie in (0,1): alpha1={alpha1}, alpha2={alpha2}"
            )));
        }
        if alpha2 > alpha1 {
            return Err(ContactError::InvalidInput(format!(
                "expected alpha2 <= alpha1, got alpha1={alpha1}, alpha2={alpha2}"
            )));
        }
        Ok(Self { alpha1, alpha2 })
    }

    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    /// True when the exponents are close enough that the exact diagonal
    /// branch applies.
    pub fn is_degenerate(&self) -> bool {
        self.alpha1 - self.alpha2 < EQUAL_EXPONENT_GAP
    }
}

/// Leading right-hand-side constant: the integral of the weight alone,
/// sqrt(pi) Gamma((alpha1+1)/2) / Gamma(alpha1/2 + 1).
pub fn gamma0(alpha1: f64) -> f64 {
    std::f64::consts::PI.sqrt() * gamma((alpha1 + 1.0) / 2.0) / gamma(alpha1 / 2.0 + 1.0)
}

/// Spectral eigenvalue pi (alpha)_n / (n! cos(pi alpha / 2)).
pub fn beta_n(alpha: f64, n: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..n {
        r *= (alpha + i as f64) / (i as f64 + 1.0);
    }
    std::f64::consts::PI * r / (std::f64::consts::PI * alpha / 2.0).cos()
}

/// Weighted norm of the degree-n basis polynomial:
/// pi 2^{1-alpha} Gamma(n+alpha) / (n! (n + alpha/2) Gamma^2(alpha/2)).
pub fn h_n(alpha: f64, n: usize) -> f64 {
    let ratio = (ln_gamma(n as f64 + alpha) - ln_gamma(n as f64 + 1.0)).exp();
    std::f64::consts::PI * 2f64.powf(1.0 - alpha) * ratio
        / ((n as f64 + alpha / 2.0) * gamma(alpha / 2.0).powi(2))
}

/// Series weight Gamma(alpha2/2) Gamma((1-alpha2)/2) (k + alpha2/2) / sqrt(pi);
/// equals beta_k(alpha2) / h_k(alpha2).
pub fn delta_k(alpha2: f64, k: usize) -> f64 {
    gamma(alpha2 / 2.0) * gamma((1.0 - alpha2) / 2.0) * (k as f64 + alpha2 / 2.0)
        / std::f64::consts::PI.sqrt()
}

/// Cross-basis coefficient H_k^{(n)}: the weighted overlap of the degree-n
/// basis polynomial for alpha1 with the degree-k basis polynomial for alpha2.
///
/// Exact zeros: k < n, or k - n odd. Evaluated in Pochhammer-product form,
/// which stays finite term by term as alpha2 -> alpha1.
pub fn h_coeff(n: usize, k: usize, pair: &ExponentPair) -> f64 {
    if k < n || (k - n) % 2 != 0 {
        return 0.0;
    }
    let (a1, a2) = (pair.alpha1, pair.alpha2);
    if pair.is_degenerate() {
        if k != n {
            return 0.0;
        }
        return h_diag(a1, n);
    }
    let s = (k + n) / 2;
    let d = (k - n) / 2;
    let mut v = gamma0(a1);
    for i in 0..n {
        let fi = i as f64;
        v *= (a1 + fi) / (fi + 1.0);
    }
    for i in 0..s {
        let fi = i as f64;
        v *= (a2 / 2.0 + fi) / (a1 / 2.0 + 1.0 + fi);
    }
    for i in 0..d {
        let fi = i as f64;
        v *= ((a2 - a1) / 2.0 + fi) / (fi + 1.0);
    }
    v
}

/// Diagonal coefficient H_n^{(n)} in the equal-exponent limit.
fn h_diag(alpha: f64, n: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..n {
        r *= (alpha + i as f64) / (i as f64 + 1.0);
    }
    std::f64::consts::PI.sqrt() * gamma((alpha + 1.0) / 2.0) * r
        / (gamma(alpha / 2.0) * (alpha / 2.0 + n as f64))
}

/// Precomputed coefficient tables for one (alpha1, alpha2, N) triple.
///
/// `L` is exactly symmetric; entries with odd index difference are exactly
/// zero. `R = L_{nm} / (beta_n(alpha1) h_n(alpha1))`. Matrices are stored
/// row-major over the retained even indices.
#[derive(Debug, Clone)]
pub struct KernelTables {
    pub exponents: ExponentPair,
    pub n_terms: usize,
    pub tail_tol: f64,
    /// Leading block of cross-basis coefficients: h[i*N+j] = H_{2j}^{(2i)}.
    pub h: Vec<f64>,
    pub l: Vec<f64>,
    pub r: Vec<f64>,
    pub betas: Vec<f64>,
    pub hs: Vec<f64>,
}

impl KernelTables {
    pub fn l_at(&self, i: usize, j: usize) -> f64 {
        self.l[i * self.n_terms + j]
    }

    pub fn r_at(&self, i: usize, j: usize) -> f64 {
        self.r[i * self.n_terms + j]
    }
}

/// Single entry L_{nm} (actual even indices n <= m) by incremental summation
/// of the rapidly convergent product series.
fn l_entry(n: usize, m: usize, pair: &ExponentPair, tail_tol: f64) -> Result<f64> {
    debug_assert!(n <= m && (m - n) % 2 == 0);
    let (a1, a2) = (pair.alpha1, pair.alpha2);
    if pair.is_degenerate() {
        // diagonal limit: only H_n^{(n)} survives
        if n != m {
            return Ok(0.0);
        }
        let h = h_diag(a1, n);
        return Ok(h * h * delta_k(a2, n));
    }
    // series over k = m, m+2, ...; both factors advanced by rational ratios
    let mut hk_n = h_coeff(n, m, pair);
    let mut hk_m = h_coeff(m, m, pair);
    let dk_slope = gamma(a2 / 2.0) * gamma((1.0 - a2) / 2.0) / std::f64::consts::PI.sqrt();
    let mut sum = 0.0;
    for l in 0..SERIES_TERM_CAP {
        let k = m + 2 * l;
        let term = hk_n * hk_m * dk_slope * (k as f64 + a2 / 2.0);
        sum += term;
        // advance H_{k}^{(q)} -> H_{k+2}^{(q)}
        let sn = ((k + n) / 2) as f64;
        let dn = ((k - n) / 2) as f64;
        hk_n *= (a2 / 2.0 + sn) / (a1 / 2.0 + 1.0 + sn) * ((a2 - a1) / 2.0 + dn) / (dn + 1.0);
        let sm = ((k + m) / 2) as f64;
        let dm = ((k - m) / 2) as f64;
        hk_m *= (a2 / 2.0 + sm) / (a1 / 2.0 + 1.0 + sm) * ((a2 - a1) / 2.0 + dm) / (dm + 1.0);
        if l >= 8 && term != 0.0 {
            // Euler-Maclaurin remainder estimate from the measured local decay
            // exponent; the error of the corrected sum tracks the last term
            let k2 = m + 2 * (l + 1);
            let next = hk_n * hk_m * dk_slope * (k2 as f64 + a2 / 2.0);
            let lf = l as f64;
            let p = (next / term).abs().ln() / ((lf + 1.0) / lf).ln();
            if p < -1.5 {
                let tail = next * ((lf + 1.0) / (-p - 1.0) + 0.5);
                if term.abs() <= tail_tol * (sum + tail).abs() {
                    return Ok(sum + tail);
                }
            }
        }
    }
    Err(ContactError::SeriesTailNotMet {
        n,
        m,
        cap: SERIES_TERM_CAP,
    })
}

/// Builds the `L`/`R` matrices and the `beta`/`h` arrays for a truncation of
/// `n_terms` even-index basis functions.
pub fn build_tables(pair: &ExponentPair, n_terms: usize, tail_tol: f64) -> Result<KernelTables> {
    if n_terms == 0 {
        return Err(ContactError::InvalidInput("truncation must be >= 1".into()));
    }
    if !(tail_tol > 0.0) {
        return Err(ContactError::InvalidInput("tail tolerance must be > 0".into()));
    }
    let a1 = pair.alpha1;
    let betas: Vec<f64> = (0..n_terms).map(|i| beta_n(a1, 2 * i)).collect();
    let hs: Vec<f64> = (0..n_terms).map(|i| h_n(a1, 2 * i)).collect();
    let mut l = vec![0.0; n_terms * n_terms];
    for i in 0..n_terms {
        for j in i..n_terms {
            let v = l_entry(2 * i, 2 * j, pair, tail_tol)?;
            l[i * n_terms + j] = v;
            l[j * n_terms + i] = v;
        }
    }
    let mut r = vec![0.0; n_terms * n_terms];
    for i in 0..n_terms {
        for j in 0..n_terms {
            r[i * n_terms + j] = l[i * n_terms + j] / (betas[i] * hs[i]);
        }
    }
    let mut h = vec![0.0; n_terms * n_terms];
    for i in 0..n_terms {
        for j in 0..n_terms {
            h[i * n_terms + j] = h_coeff(2 * i, 2 * j, pair);
        }
    }
    Ok(KernelTables {
        exponents: *pair,
        n_terms,
        tail_tol,
        h,
        l,
        r,
        betas,
        hs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn beta_examples() {
        let b0 = beta_n(0.5, 0);
        assert_relative_eq!(b0, std::f64::consts::PI * 2f64.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(b0, 4.442882938158366, max_relative = 1e-12);
        // (0.5)_2 / 2! = 0.375
        assert_relative_eq!(beta_n(0.5, 2), b0 * 0.375, max_relative = 1e-13);
    }

    #[test]
    fn h_n_limit_alpha_one() {
        // h_0(alpha) -> 2 as alpha -> 1
        assert_relative_eq!(h_n(1.0 - 1e-10, 0), 2.0, max_relative = 1e-8);
    }

    #[test]
    fn delta_examples() {
        // frozen from 50-digit evaluation of Gamma(1/4)^2 / (4 sqrt(pi))
        assert_relative_eq!(delta_k(0.5, 0), 1.8540746773013719, max_relative = 1e-13);
        // affine in k
        let slope = gamma(0.25) * gamma(0.25) / std::f64::consts::PI.sqrt();
        for k in 0..6 {
            assert_relative_eq!(
                delta_k(0.5, k),
                delta_k(0.5, 0) + slope * k as f64,
                max_relative = 1e-12
            );
            assert!(delta_k(0.5, k) > 0.0);
        }
    }

    #[test]
    fn h_coeff_zero_rules() {
        let pair = ExponentPair::new(0.7, 0.3).unwrap();
        for n in 0..8 {
            for k in 0..8 {
                let v = h_coeff(n, k, &pair);
                if k < n || (k + n) % 2 != 0 {
                    assert_eq!(v, 0.0, "H_{k}^{n} should vanish");
                } else {
                    assert!(v.is_finite());
                }
            }
        }
    }

    #[test]
    fn equal_exponent_r_is_identity() {
        let pair = ExponentPair::new(0.6, 0.6).unwrap();
        let t = build_tables(&pair, 8, DEFAULT_TAIL_TOL).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (t.r_at(i, j) - want).abs() <= 1e-12,
                    "R[{i}][{j}] = {}",
                    t.r_at(i, j)
                );
            }
        }
    }

    #[test]
    fn equal_exponent_l_matches_diagonal_form() {
        let alpha = 0.45;
        let pair = ExponentPair::new(alpha, alpha).unwrap();
        let t = build_tables(&pair, 6, DEFAULT_TAIL_TOL).unwrap();
        for i in 0..6 {
            let h = h_diag(alpha, 2 * i);
            assert_relative_eq!(t.l_at(i, i), h * h * delta_k(alpha, 2 * i), max_relative = 1e-12);
        }
    }

    #[test]
    fn l_symmetric_and_finite() {
        let pair = ExponentPair::new(0.9, 0.1).unwrap();
        let t = build_tables(&pair, 10, DEFAULT_TAIL_TOL).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                assert!(t.l_at(i, j).is_finite());
                assert_eq!(t.l_at(i, j), t.l_at(j, i));
            }
        }
    }

    #[test]
    fn series_decay_rate_matches_asymptotics() {
        // successive term magnitudes of the L series behave like l^{2(a2-a1)-3}
        let (a1, a2) = (0.7, 0.3);
        let pair = ExponentPair::new(a1, a2).unwrap();
        let term = |l: usize| {
            let k = 2 * l;
            h_coeff(0, k, &pair).powi(2) * delta_k(a2, k)
        };
        let expected = 2.0 * (a2 - a1) - 3.0;
        let slope = (term(200).abs().ln() - term(20).abs().ln()) / (200f64.ln() - 20f64.ln());
        assert!(
            (slope - expected).abs() < 0.2,
            "slope {slope} vs expected {expected}"
        );
    }

    #[test]
    fn r_offdiagonal_vanishes_as_exponents_coincide() {
        let a1 = 0.6;
        let mut prev = f64::INFINITY;
        for j in 2..=6 {
            let a2 = a1 - 10f64.powi(-j);
            let pair = ExponentPair::new(a1, a2).unwrap();
            let t = build_tables(&pair, 6, DEFAULT_TAIL_TOL).unwrap();
            let mut max_off = 0.0f64;
            for i in 0..6 {
                for k in 0..6 {
                    if i != k {
                        max_off = max_off.max(t.r_at(i, k).abs());
                    }
                }
            }
            assert!(max_off < prev, "off-diagonal not decreasing at gap 1e-{j}");
            prev = max_off;
        }
    }

    proptest! {
        // the Pochhammer-product form must stay pole-free across a dense
        // exponent grid, including near-coincident pairs
        #[test]
        fn h_coeff_finite_on_dense_grid(
            a1 in 0.02f64..0.98,
            frac in 0.01f64..1.0,
            n in 0usize..10,
            l in 0usize..10,
        ) {
            let a2 = a1 * frac;
            let pair = ExponentPair::new(a1, a2).unwrap();
            let v = h_coeff(n, n + 2 * l, &pair);
            prop_assert!(v.is_finite());
        }
    }
}
