//! Dense direct solve for the small truncated systems (N ~ 16).

use crate::error::{ContactError, Result};

/// Condition-estimate threshold above which the solve is rejected.
const COND_LIMIT: f64 = 1e12;

/// Solves `a x = b` for several right-hand sides by LU with partial pivoting.
/// `a` is row-major n x n and is consumed. Returns the solutions and a crude
/// condition estimate (ratio of extreme pivot magnitudes).
pub fn solve_multi(mut a: Vec<f64>, n: usize, rhs: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, f64)> {
    debug_assert!(a.len() == n * n);
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let (piv, piv_val) = (col..n)
            .map(|r| (r, a[r * n + col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if piv_val == 0.0 {
            return Err(ContactError::IllConditioned { cond: f64::INFINITY });
        }
        if piv != col {
            for j in 0..n {
                a.swap(col * n + j, piv * n + j);
            }
            perm.swap(col, piv);
        }
        let d = a[col * n + col];
        for r in col + 1..n {
            let f = a[r * n + col] / d;
            a[r * n + col] = f;
            for j in col + 1..n {
                a[r * n + j] -= f * a[col * n + j];
            }
        }
    }
    let mut pmax = 0.0f64;
    let mut pmin = f64::INFINITY;
    for i in 0..n {
        let p = a[i * n + i].abs();
        pmax = pmax.max(p);
        pmin = pmin.min(p);
    }
    let cond = pmax / pmin;
    if !cond.is_finite() || cond > COND_LIMIT {
        return Err(ContactError::IllConditioned { cond });
    }
    let mut out = Vec::with_capacity(rhs.len());
    for b in rhs {
        debug_assert!(b.len() == n);
        let mut x: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] = x[i] - a[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] = x[i] - a[i * n + j] * x[j];
            }
            x[i] /= a[i * n + i];
        }
        out.push(x);
    }
    Ok((out, cond))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let a = vec![4.0, 1.0, 0.5, 1.0, 3.0, 0.25, 0.5, 0.25, 2.0];
        let b = vec![vec![1.0, 2.0, 3.0]];
        let (x, cond) = solve_multi(a.clone(), 3, &b).unwrap();
        // residual check
        for i in 0..3 {
            let mut r = -b[0][i];
            for j in 0..3 {
                r += a[i * 3 + j] * x[0][j];
            }
            assert!(r.abs() < 1e-12);
        }
        assert!(cond < 10.0);
    }

    #[test]
    fn rejects_singular() {
        let a = vec![1.0, 2.0, 2.0, 4.0];
        assert!(solve_multi(a, 2, &[vec![1.0, 1.0]]).is_err());
    }
}
