//! Bracketed root finding: bisection-safeguarded inverse quadratic
//! interpolation (Brent) plus geometric bracket expansion.

use crate::error::{ContactError, Result};

const MAX_ITER: usize = 200;

/// Finds a root of `f` in `[a, b]` (which must bracket a sign change) to the
/// given relative tolerance on the abscissa.
pub fn brent<F>(mut f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (a, b);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(ContactError::NoBracket { lo: a, hi: b });
    }
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut mflag = true;
    for _ in 0..MAX_ITER {
        let tol = rel_tol * b.abs().max(1e-300) + f64::MIN_POSITIVE;
        if fb == 0.0 || (b - a).abs() <= tol {
            return Ok(b);
        }
        let mut s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        let lo = (3.0 * a + b) / 4.0;
        let cond = !(((lo.min(b))..=(lo.max(b))).contains(&s))
            || (mflag && (s - b).abs() >= (b - c).abs() / 2.0)
            || (!mflag && (s - b).abs() >= (c - d).abs() / 2.0)
            || (mflag && (b - c).abs() < tol)
            || (!mflag && (c - d).abs() < tol);
        if cond {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        let fs = f(s)?;
        d = c;
        c = b;
        fc = fb;
        if fa * fs < 0.0 {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
    }
    Err(ContactError::RootNonConvergence { iters: MAX_ITER })
}

/// Expands `[guess/2, 2*guess]` geometrically (factor 2, up to 2^10) until a
/// sign change appears; also reports the number of sign changes seen on a
/// 32-point scan of the final bracket.
pub fn expand_bracket<F>(f: &mut F, guess: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut lo = guess / 2.0;
    let mut hi = guess * 2.0;
    for _ in 0..=10 {
        let flo = f(lo)?;
        let fhi = f(hi)?;
        if flo == 0.0 {
            return Ok((lo, lo));
        }
        if fhi == 0.0 {
            return Ok((hi, hi));
        }
        if flo * fhi < 0.0 {
            return Ok((lo, hi));
        }
        lo /= 2.0;
        hi *= 2.0;
    }
    Err(ContactError::NoBracket { lo, hi })
}

/// Counts sign changes of `f` over `points` equispaced samples of `[lo, hi]`.
pub fn count_sign_changes<F>(f: &mut F, lo: f64, hi: f64, points: usize) -> Result<usize>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut changes = 0;
    let mut prev: Option<f64> = None;
    for i in 0..points {
        let x = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let v = f(x)?;
        if let Some(p) = prev {
            if p * v < 0.0 {
                changes += 1;
            }
        }
        prev = Some(v);
    }
    Ok(changes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt2() {
        let r = brent(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn finds_transcendental_root() {
        let r = brent(|x: f64| Ok(x.cos() - x), 0.0, 1.0, 1e-14).unwrap();
        assert!((r - 0.7390851332151607).abs() < 1e-12);
    }

    #[test]
    fn expand_finds_bracket() {
        let mut f = |x: f64| Ok(x - 3.0);
        let (lo, hi) = expand_bracket(&mut f, 0.1).unwrap();
        assert!(lo < 3.0 && 3.0 < hi);
    }

    #[test]
    fn no_bracket_reported() {
        let mut f = |_x: f64| Ok(1.0);
        assert!(matches!(
            expand_bracket(&mut f, 1.0),
            Err(ContactError::NoBracket { .. })
        ));
    }
}
