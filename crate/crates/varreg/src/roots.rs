//! Scalar root finding and one-dimensional minimization.

use crate::{Error, Result};

/// Bisection on a bracketing interval. Requires `f(lo)` and `f(hi)` to have
/// opposite signs; returns `x` with `|x - root| <= tol`.
pub fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 || !flo.is_finite() || !fhi.is_finite() {
        return Err(Error::Bracket { lo, hi });
    }
    while hi - lo > 2.0 * tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval exhausted at floating-point resolution
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section minimization of a unimodal function on `[lo, hi]`.
/// Returns `(argmin, min)` located to within `xtol`.
pub fn golden_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x).min(fc).min(fd))
}
