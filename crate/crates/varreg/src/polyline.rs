//! Discrete carriers for boundary curves: polylines and disks.

use num_complex::Complex64;

use crate::{Error, Result};

/// Two endpoints coinciding within this distance count as an explicit closure.
pub const CLOSURE_TOL: f64 = 1e-12;

/// Ordered polyline with parameter values, open or closed.
///
/// A closed polyline may either repeat its first point at the end
/// (explicit closure, within [`CLOSURE_TOL`]) or leave the closing
/// segment implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    points: Vec<Complex64>,
    params: Vec<f64>,
    closed: bool,
}

impl Polyline {
    pub fn new(points: Vec<Complex64>, params: Vec<f64>, closed: bool) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("polyline needs at least 2 points".into()));
        }
        if points.len() != params.len() {
            return Err(Error::Domain(format!(
                "points/params length mismatch: {} vs {}",
                points.len(),
                params.len()
            )));
        }
        if points.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
            return Err(Error::Domain("non-finite point in polyline".into()));
        }
        if params.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("params must be strictly increasing".into()));
        }
        Ok(Self {
            points,
            params,
            closed,
        })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Vertices of the closed cycle, with an explicit closing duplicate dropped.
    pub fn cycle_points(&self) -> &[Complex64] {
        let n = self.points.len();
        if self.closed && n > 2 && (self.points[n - 1] - self.points[0]).norm() <= CLOSURE_TOL {
            &self.points[..n - 1]
        } else {
            &self.points
        }
    }

    /// Edges as index pairs into `cycle_points`, including the closing edge
    /// when the polyline is closed.
    pub fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let pts = if self.closed {
            self.cycle_points()
        } else {
            &self.points[..]
        };
        let n = pts.len();
        let m = if self.closed { n } else { n - 1 };
        (0..m).map(move |k| (pts[k], pts[(k + 1) % n]))
    }

    /// Minimum distance from `p` to any segment of the polyline.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        self.edges()
            .map(|(a, b)| segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Twice the signed area of the closed cycle (positive = counterclockwise).
    pub fn signed_area2(&self) -> f64 {
        let pts = self.cycle_points();
        let n = pts.len();
        (0..n)
            .map(|k| {
                let a = pts[k];
                let b = pts[(k + 1) % n];
                a.re * b.im - b.re * a.im
            })
            .sum()
    }

    /// True if no two non-adjacent segments intersect.
    pub fn is_simple(&self) -> bool {
        let segs: Vec<(Complex64, Complex64)> = self.edges().collect();
        let n = segs.len();
        for i in 0..n {
            for j in (i + 1)..n {
                // skip adjacent segments (sharing an endpoint)
                let adjacent = j == i + 1 || (self.closed && i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if segments_intersect(segs[i].0, segs[i].1, segs[j].0, segs[j].1) {
                    return false;
                }
            }
        }
        true
    }

    /// New polyline with every point transformed, parameters kept.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        Self::new(
            self.points.iter().map(|&p| f(p)).collect(),
            self.params.clone(),
            self.closed,
        )
    }
}

/// Closed disk given by center and radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::Domain(format!("negative disk radius {radius}")));
        }
        Ok(Self { center, radius })
    }

    /// Distance from `p` to the closed disk (0 inside).
    pub fn distance_to(&self, p: Complex64) -> f64 {
        ((p - self.center).norm() - self.radius).max(0.0)
    }
}

pub fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

pub fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

fn segments_intersect(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    // bounding-box reject
    if a.re.max(b.re) < c.re.min(d.re)
        || c.re.max(d.re) < a.re.min(b.re)
        || a.im.max(b.im) < c.im.min(d.im)
        || c.im.max(d.im) < a.im.min(b.im)
    {
        return false;
    }
    let d1 = cross(b - a, c - a);
    let d2 = cross(b - a, d - a);
    let d3 = cross(d - c, a - c);
    let d4 = cross(d - c, b - c);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}
