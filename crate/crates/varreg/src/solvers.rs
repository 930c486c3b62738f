//! Derived constants and constructive witnesses: the starlikeness radius,
//! the non-convexity threshold of the log regions, strip-coverage witnesses
//! for the LW and LV limit regions, and the LU corner asymptotics.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::envelope::{f_eval, g_eval};
use crate::extremal::{f_ab_zlogderiv, ExtremalParams};
use crate::predicates::curvature_sign_changes;
use crate::regions::{boundary_curve, Family, RegionSpec};
use crate::roots::{bisect, golden_min};
use crate::{Error, Result};

/// A point of the parameter region Omega used by the LW witness:
/// `0 < s < 2`, `0 < r s^2 < 2`, `|t| < pi/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessTriple {
    pub r: f64,
    pub s: f64,
    pub t: f64,
}

impl WitnessTriple {
    pub fn new(r: f64, s: f64, t: f64) -> Result<Self> {
        if !(0.0 < s && s < 2.0) {
            return Err(Error::Domain(format!("s = {s} outside (0, 2)")));
        }
        if !(0.0 < r * s * s && r * s * s < 2.0) {
            return Err(Error::Domain(format!("r s^2 = {} outside (0, 2)", r * s * s)));
        }
        if !(t.abs() < FRAC_PI_2) {
            return Err(Error::Domain(format!("|t| = {} not below pi/2", t.abs())));
        }
        Ok(WitnessTriple { r, s, t })
    }
}

/// Extremal-family parameters realizing a witnessed value at radius `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalWitness {
    pub a: Complex64,
    pub b: Complex64,
    pub rho: f64,
}

/// `w(r, s, t) = log(2r) + 3it - log(1 + r s e^{2it} cos t)`, the value
/// reached in the LW strip by the witness construction.
pub fn lw_value(r: f64, s: f64, t: f64) -> Complex64 {
    let inner = Complex64::new(1.0, 0.0) + Complex64::from_polar(r * s * t.cos(), 2.0 * t);
    Complex64::new((2.0 * r).ln(), 3.0 * t) - inner.ln()
}

/// Minimum of `Re F` over the circle `|z| = r`: a coarse scan of `scan_n`
/// angles followed by golden-section refinement around the best sample.
pub fn min_re_on_circle(r: f64, scan_n: usize) -> Result<f64> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius r = {r} outside (0, 1)")));
    }
    let re_at = |theta: f64| {
        f_eval(Complex64::from_polar(r, theta))
            .map(|w| w.re)
            .unwrap_or(f64::INFINITY)
    };
    let mut best = (0.0f64, f64::INFINITY);
    for k in 0..scan_n {
        let theta = TAU * k as f64 / scan_n as f64;
        let v = re_at(theta);
        if v < best.1 {
            best = (theta, v);
        }
    }
    let step = TAU / scan_n as f64;
    let (_, refined) = golden_min(re_at, best.0 - step, best.0 + step, 1e-12);
    Ok(refined.min(best.1))
}

/// Largest radius on which every close-to-convex function is starlike,
/// found by bisecting the predicate `min_theta Re F(r e^{i theta}) >= 0`.
/// The exact value is `4 sqrt(2) - 5`.
pub fn starlike_radius(tol: f64) -> Result<f64> {
    starlike_radius_with_scan(tol, 1024)
}

pub fn starlike_radius_with_scan(tol: f64, scan_n: usize) -> Result<f64> {
    if tol < 1e-12 {
        return Err(Error::Domain(format!("tolerance {tol} below 1e-12")));
    }
    bisect(
        |r| min_re_on_circle(r, scan_n).unwrap_or(f64::NAN),
        0.5,
        0.8,
        tol,
    )
}

/// Whether the LU boundary at radius `r` shows a curvature sign change
/// (sampled at `n` vertices).
pub fn lu_has_concavity(r: f64, n: usize) -> Result<bool> {
    let curve = boundary_curve(RegionSpec::new(Family::LU, r)?, n)?;
    Ok(!curvature_sign_changes(&curve.polyline)?.is_empty())
}

/// Smallest radius beyond which the LU (equivalently LW, a translate)
/// boundary stops being convex, located by bisection on the discrete
/// curvature predicate at 4096 samples.
pub fn nonconvexity_threshold(tol: f64) -> Result<f64> {
    if tol < 1e-6 {
        return Err(Error::Domain(format!("tolerance {tol} below 1e-6")));
    }
    let n = 4096;
    let mut lo = 0.9;
    let mut hi = 0.999;
    if lu_has_concavity(lo, n)? {
        lo = 0.5; // threshold lower than expected; widen the bracket
        if lu_has_concavity(lo, n)? {
            return Err(Error::Internal("LU concave already at r = 0.5".into()));
        }
    }
    if !lu_has_concavity(hi, n)? {
        return Err(Error::Internal(
            "no curvature sign change found up to r = 0.999".into(),
        ));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if lu_has_concavity(mid, n)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Constructive witness that any `z0` with `|Im z0| < 3 pi / 2` is attained
/// by the log of `z f'/f` over the close-to-convex class: returns the
/// parameter triple and the extremal `(a, b, rho)` realizing
/// `z f'(z)/f(z) = exp(z0)` at `z = rho`.
pub fn lw_witness(z0: Complex64, tol: f64) -> Result<(WitnessTriple, ExtremalWitness)> {
    let bound = 1.5 * PI;
    if !(z0.im.abs() < bound) {
        return Err(Error::OutOfStrip { bound });
    }
    let r0 = z0.re.exp() / 2.0;
    let mut s0 = 0.1f64.min(1.0 / (4.0 * r0));
    let t_hi = FRAC_PI_2 - 1e-12;
    for _ in 0..20 {
        let im_gap = |t: f64| lw_value(r0, s0, t).im - z0.im;
        let t0 = match bisect(im_gap, -t_hi, t_hi, 1e-13) {
            Ok(t0) => t0,
            Err(Error::Bracket { .. }) => {
                s0 /= 2.0;
                continue;
            }
            Err(e) => return Err(e),
        };
        // multiplying r by e^{x1} and dividing s by it shifts only Re w
        let x1 = z0.re - lw_value(r0, s0, t0).re;
        let (r, s, t) = (r0 * x1.exp(), s0 * (-x1).exp(), t0);
        let residual = (lw_value(r, s, t) - z0).norm();
        let u = Complex64::from_polar(r * s * s * t.cos() * t.cos(), t);
        let v = Complex64::from_polar(s * t.cos(), -t);
        let one = Complex64::new(1.0, 0.0);
        let du = (u - one).norm();
        let dv = (v - one).norm();
        let triple = WitnessTriple::new(r, s, t);
        let admissible =
            residual <= tol && du < 1.0 && dv < 1.0 && du.max(dv) > 0.0 && triple.is_ok();
        if !admissible {
            s0 /= 2.0;
            continue;
        }
        let rho = du.max(dv);
        let a = (u - one) / rho;
        let b = (v - one) / rho;
        let witness = ExtremalWitness { a, b, rho };
        let params = ExtremalParams::new(a, b)?;
        let value = f_ab_zlogderiv(params, Complex64::new(rho, 0.0))?;
        if (value - z0.exp()).norm() > 10.0 * tol * z0.exp().norm().max(1.0) {
            return Err(Error::Internal(format!(
                "witness functional mismatch at z0 = {z0}: {value} vs {}",
                z0.exp()
            )));
        }
        return Ok((triple?, witness));
    }
    Err(Error::Internal(format!(
        "witness bracket failed after 20 shrinks of s0 for z0 = {z0}"
    )))
}

/// Constructive witness that any `z0` with `|Im z0| < 2 pi` is attained by
/// `Log(1+z) - 3 Log(1+w)` with `|z| < 1`, `|w| < 1`: writes
/// `z0 = a + 4bi` and pushes both factors toward 0 along `e^{-c}`.
pub fn lv_witness(z0: Complex64, tol: f64) -> Result<(Complex64, Complex64)> {
    let bound = TAU;
    if !(z0.im.abs() < bound) {
        return Err(Error::OutOfStrip { bound });
    }
    let a = z0.re;
    let b = z0.im / 4.0; // |b| < pi/2
    let cap = 2.0 * b.cos();
    let mut c = 1.0f64;
    while (a - 3.0 * c).exp() >= cap || (-c).exp() >= cap {
        c *= 2.0;
        if c > 1e6 {
            return Err(Error::Internal(format!("no admissible c for z0 = {z0}")));
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let z = Complex64::from_polar((a - 3.0 * c).exp(), b) - one;
    let w = Complex64::from_polar((-c).exp(), -b) - one;
    let residual = ((one + z).ln() - (one + w).ln() * 3.0 - z0).norm();
    if residual > tol {
        return Err(Error::Internal(format!(
            "witness residual {residual} exceeds {tol} for z0 = {z0}"
        )));
    }
    Ok((z, w))
}

/// Convergence report for the corner of the LU limit region.
#[derive(Debug, Clone)]
pub struct CornerReport {
    pub limit: Complex64,
    /// `(delta, |G((1-delta) e^{i(pi - (a delta)^{1/3})}) - limit|)` pairs.
    pub errors: Vec<(f64, f64)>,
    /// Least-squares slope of `log error` against `log delta`.
    pub exponent: f64,
    pub pass: bool,
}

/// Approach to the corner value `pi i + log(1 + (a+2i)/(a-2i))` along the
/// paths `angle = pi - (a delta)^{1/3}`, radius `1 - delta`. The error decays
/// like `delta^{1/3}`; the fitted exponent is accepted in `[0.2, 0.45]`.
pub fn lu_corner_asymptote(a: f64, deltas: &[f64]) -> Result<CornerReport> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("corner parameter a = {a} must be positive")));
    }
    if deltas.len() < 2 || deltas.windows(2).any(|p| p[1] >= p[0] || p[1] <= 0.0) {
        return Err(Error::Domain(
            "deltas must be positive and strictly decreasing".into(),
        ));
    }
    let two_i = Complex64::new(0.0, 2.0);
    let az = Complex64::new(a, 0.0);
    let limit = Complex64::new(0.0, PI)
        + (Complex64::new(1.0, 0.0) + (az + two_i) / (az - two_i)).ln();
    let mut errors = Vec::with_capacity(deltas.len());
    for &delta in deltas {
        let alpha = (a * delta).cbrt();
        let z = Complex64::from_polar(1.0 - delta, PI - alpha);
        errors.push((delta, (g_eval(z)? - limit).norm()));
    }
    let decreasing = errors.windows(2).all(|p| p[1].1 < p[0].1);
    // least-squares slope in log-log coordinates
    let logs: Vec<(f64, f64)> = errors.iter().map(|&(d, e)| (d.ln(), e.ln())).collect();
    let n = logs.len() as f64;
    let (sx, sy): (f64, f64) = logs.iter().fold((0.0, 0.0), |(x, y), &(a, b)| (x + a, y + b));
    let (sxx, sxy): (f64, f64) = logs
        .iter()
        .fold((0.0, 0.0), |(xx, xy), &(a, b)| (xx + a * a, xy + a * b));
    let exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let pass = decreasing && (0.2..=0.45).contains(&exponent);
    Ok(CornerReport {
        limit,
        errors,
        exponent,
        pass,
    })
}
