//! Discrete-geometry predicates: winding number, Hausdorff distance,
//! curvature sign changes, convex hull.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::polyline::{cross, Polyline};
use crate::{Error, Result};

/// Proximity below which a winding query is refused as "on the boundary".
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Magnitude below which a discrete cross product counts as zero curvature.
pub const CURVATURE_TOL: f64 = 1e-12;

/// Standard winding number of a closed polyline around `p`.
///
/// Nonzero means inside. Fails with [`Error::Boundary`] when `p` is within
/// [`BOUNDARY_TOL`] of the curve.
pub fn winding_number(p: Complex64, curve: &Polyline) -> Result<i32> {
    if !curve.closed() {
        return Err(Error::Domain("winding number needs a closed curve".into()));
    }
    let dist = curve.distance_to(p);
    if dist < BOUNDARY_TOL {
        return Err(Error::Boundary { dist });
    }
    let mut wn = 0i32;
    for (a, b) in curve.edges() {
        if a.im <= p.im {
            if b.im > p.im && cross(b - a, p - a) > 0.0 {
                wn += 1;
            }
        } else if b.im <= p.im && cross(b - a, p - a) < 0.0 {
            wn -= 1;
        }
    }
    Ok(wn)
}

/// Symmetric Hausdorff distance between two point sets.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Empty("hausdorff needs nonempty sets"));
    }
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}

/// Directed Hausdorff distance `sup_{x in a} inf_{y in b} |x - y|`.
pub fn directed_hausdorff(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Empty("hausdorff needs nonempty sets"));
    }
    Ok(a.par_iter()
        .map(|&p| {
            b.iter()
                .map(|&q| (p - q).norm_sqr())
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max)
        .sqrt())
}

/// Parameter values where the discrete curvature of a closed curve changes
/// sign. Cross products with magnitude below [`CURVATURE_TOL`] are skipped.
pub fn curvature_sign_changes(curve: &Polyline) -> Result<Vec<f64>> {
    if !curve.closed() {
        return Err(Error::Domain("curvature scan needs a closed curve".into()));
    }
    let pts = curve.cycle_points();
    let n = pts.len();
    if n < 16 {
        return Err(Error::Resolution(format!(
            "curvature scan needs >= 16 samples, got {n}"
        )));
    }
    // cross product of consecutive edge pairs, indexed by the middle vertex
    let mut signed: Vec<(usize, f64)> = Vec::new();
    for k in 0..n {
        let a = pts[(k + 1) % n] - pts[k];
        let b = pts[(k + 2) % n] - pts[(k + 1) % n];
        if a.norm() == 0.0 || b.norm() == 0.0 {
            return Err(Error::Resolution("duplicate points in curvature scan".into()));
        }
        let c = cross(a, b);
        if c.abs() > CURVATURE_TOL {
            signed.push(((k + 1) % n, c));
        }
    }
    let mut changes = Vec::new();
    let m = signed.len();
    if m < 2 {
        return Ok(changes);
    }
    for i in 0..m {
        let (_, prev) = signed[i];
        let (idx, next) = signed[(i + 1) % m];
        if prev * next < 0.0 {
            changes.push(curve.params()[idx]);
        }
    }
    changes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    changes.dedup();
    Ok(changes)
}

/// Convex hull (counterclockwise, Andrew's monotone chain).
/// Collinear points on the hull boundary are dropped.
pub fn convex_hull(points: &[Complex64]) -> Result<Vec<Complex64>> {
    if points.len() < 3 {
        return Err(Error::Empty("convex hull needs >= 3 points"));
    }
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    pts.dedup_by(|a, b| a.re == b.re && a.im == b.im);
    if pts.len() < 3 {
        return Err(Error::Empty("convex hull needs >= 3 distinct points"));
    }
    let chain = |iter: &mut dyn Iterator<Item = Complex64>| {
        let mut out: Vec<Complex64> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if cross(b - a, p - a) <= 0.0 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out
    };
    let mut lower = chain(&mut pts.iter().copied());
    let mut upper = chain(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    Ok(lower)
}
