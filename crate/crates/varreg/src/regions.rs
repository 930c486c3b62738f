//! Boundary curves and brute-force sample clouds for the six region
//! families, the limit curves of the boundary as r -> 1, and the membership,
//! nesting, and exp-relation checks.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::branch::continuous_log_along;
use crate::envelope::{f_eval, g_eval};
use crate::extremal::{family_map, FamilyKind};
use crate::polyline::{cross, Polyline};
use crate::predicates::{convex_hull, winding_number};
use crate::roots::golden_min;
use crate::{Error, Result};

/// The six region families: value regions of z/f, f', zf'/f over the
/// close-to-convex class, and their logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    U,
    V,
    W,
    LU,
    LV,
    LW,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::U,
        Family::V,
        Family::W,
        Family::LU,
        Family::LV,
        Family::LW,
    ];

    /// The log-families LU, LV, LW.
    pub fn logarithmic(self) -> bool {
        matches!(self, Family::LU | Family::LV | Family::LW)
    }

    /// Underlying functional slot (U/V/W) of this family.
    pub fn base_kind(self) -> FamilyKind {
        match self {
            Family::U | Family::LU => FamilyKind::U,
            Family::V | Family::LV => FamilyKind::V,
            Family::W | Family::LW => FamilyKind::W,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::U => "U",
            Family::V => "V",
            Family::W => "W",
            Family::LU => "LU",
            Family::LV => "LV",
            Family::LW => "LW",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "U" => Ok(Family::U),
            "V" => Ok(Family::V),
            "W" => Ok(Family::W),
            "LU" => Ok(Family::LU),
            "LV" => Ok(Family::LV),
            "LW" => Ok(Family::LW),
            other => Err(Error::Domain(format!(
                "unknown family {other:?}; expected one of U, V, W, LU, LV, LW"
            ))),
        }
    }
}

/// A family together with the evaluation radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionSpec {
    pub family: Family,
    pub r: f64,
}

impl RegionSpec {
    pub fn new(family: Family, r: f64) -> Result<Self> {
        if !(r.is_finite() && 0.0 < r && r < 1.0) {
            return Err(Error::Domain(format!("radius r = {r} outside (0, 1)")));
        }
        Ok(RegionSpec { family, r })
    }
}

/// Output of a brute-force parameter sweep.
#[derive(Debug, Clone)]
pub struct SampleCloud {
    pub points: Vec<Complex64>,
    pub family: Family,
    pub r: f64,
    pub n_outer: usize,
    pub n_inner: usize,
}

/// A sampled region boundary. `approximate` marks the V family, whose
/// boundary has no closed form and is reported as the hull of its cloud.
#[derive(Debug, Clone)]
pub struct BoundaryCurve {
    pub polyline: Polyline,
    pub approximate: bool,
}

/// Polar grid of the closed disk of the given radius: the center, three
/// interior rings at quarter-radius spacing with `n/4` angles each, and the
/// boundary circle with `n` angles.
pub fn disk_grid(radius: f64, n: usize) -> Vec<Complex64> {
    let mut pts = vec![Complex64::new(0.0, 0.0)];
    let inner = (n / 4).max(2);
    for k in 1..4 {
        let rho = radius * k as f64 / 4.0;
        for j in 0..inner {
            pts.push(Complex64::from_polar(rho, TAU * j as f64 / inner as f64));
        }
    }
    for j in 0..n {
        pts.push(Complex64::from_polar(radius, TAU * j as f64 / n as f64));
    }
    pts
}

/// Boundary curve of the LV region: the convex curve
/// `sigma_r(t) = Log(1 - r e^{i theta_2}) - 3 Log(1 - r e^{i theta_1})`
/// with `theta_1 = t - arcsin(r sin t)` and `theta_2 = pi + t + arcsin(r sin t)`.
///
/// Both factors have positive real part, so the principal branches are
/// continuous in t.
pub fn lv_sigma(r: f64, t: f64) -> Result<Complex64> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius r = {r} outside (0, 1)")));
    }
    let shift = (r * t.sin()).asin();
    let theta1 = t - shift;
    let theta2 = PI + t + shift;
    let one = Complex64::new(1.0, 0.0);
    Ok((one - Complex64::from_polar(r, theta2)).ln()
        - (one - Complex64::from_polar(r, theta1)).ln() * 3.0)
}

/// Point of the smooth boundary parametrization at parameter `t`.
/// U/W/LU/LW take `t` as the angle of `z = r e^{it}`; LV uses the sigma
/// parametrization. The V boundary has no closed form.
pub fn boundary_point(spec: RegionSpec, t: f64) -> Result<Complex64> {
    let z = Complex64::from_polar(spec.r, t);
    match spec.family {
        Family::U => f_eval(z),
        Family::W => {
            let scale = (1.0 - spec.r * spec.r).powi(-2);
            Ok(f_eval(z)? * scale)
        }
        Family::LU => g_eval(z),
        Family::LW => {
            let shift = -2.0 * (1.0 - spec.r * spec.r).ln();
            Ok(g_eval(z)? + Complex64::new(shift, 0.0))
        }
        Family::LV => lv_sigma(spec.r, t),
        Family::V => Err(Error::Domain(
            "the V boundary has no closed form; use oracle_cloud or the hull".into(),
        )),
    }
}

/// Sampled boundary curve with `n` vertices (implicit closure).
///
/// For V the result is the convex hull of an oracle cloud, flagged
/// approximate and parametrized by the angle around the hull centroid.
pub fn boundary_curve(spec: RegionSpec, n: usize) -> Result<BoundaryCurve> {
    if n < 4 {
        return Err(Error::Resolution(format!("boundary needs n >= 4, got {n}")));
    }
    if spec.family == Family::V {
        let cloud = oracle_cloud(spec, 256, 256)?;
        let hull = convex_hull(&cloud.points)?;
        let centroid = hull.iter().sum::<Complex64>() / hull.len() as f64;
        let mut indexed: Vec<(f64, Complex64)> =
            hull.iter().map(|&p| ((p - centroid).arg(), p)).collect();
        indexed.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let (params, points): (Vec<f64>, Vec<Complex64>) = indexed.into_iter().unzip();
        return Ok(BoundaryCurve {
            polyline: Polyline::new(points, params, true)?,
            approximate: true,
        });
    }
    let offset = if spec.family == Family::LV { -PI } else { 0.0 };
    let mut points = Vec::with_capacity(n);
    let mut params = Vec::with_capacity(n);
    for k in 0..n {
        let t = offset + TAU * k as f64 / n as f64;
        points.push(boundary_point(spec, t)?);
        params.push(t);
    }
    Ok(BoundaryCurve {
        polyline: Polyline::new(points, params, true)?,
        approximate: false,
    })
}

/// Value of the region functional for parameters `(a, b)` at radius `rho`:
/// the two slots are `u = 1 + a rho`, `v = 1 + b rho`.
fn functional(kind: FamilyKind, a: Complex64, b: Complex64, rho: f64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    family_map(kind, one + a * rho, one + b * rho)
}

/// Branch-tracked logarithm of the functional along the radial path
/// `rho: 0 -> r`, normalized to 0 at rho = 0. The step count starts at 64
/// and doubles until the endpoint stabilizes to 1e-10.
fn tracked_log_endpoint(kind: FamilyKind, a: Complex64, b: Complex64, r: f64) -> Result<Complex64> {
    let mut m = 64usize;
    let mut prev: Option<Complex64> = None;
    loop {
        let mut pts = Vec::with_capacity(m + 1);
        let mut params = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let rho = r * k as f64 / m as f64;
            pts.push(functional(kind, a, b, rho)?);
            params.push(rho);
        }
        let path = Polyline::new(pts, params, false)?;
        match continuous_log_along(&path, Complex64::new(0.0, 0.0)) {
            Ok(logs) => {
                let end = *logs.points().last().unwrap();
                if let Some(p) = prev {
                    if (end - p).norm() <= 1e-10 {
                        return Ok(end);
                    }
                }
                prev = Some(end);
            }
            Err(Error::Resolution(_)) => {} // too coarse; double and retry
            Err(e) => return Err(e),
        }
        m *= 2;
        if m > 16384 {
            return Err(Error::Resolution(format!(
                "log endpoint did not stabilize for a = {a}, b = {b}, r = {r}"
            )));
        }
    }
}

/// Brute-force sweep of both parameter disks.
///
/// For U/V/W the slot values `u = 1 + s`, `v = 1 + t` range over polar grids
/// of the disk of radius `r` (boundary circles included). The log families
/// apply the same functionals to the radial path `[0, r]` and branch-track
/// the logarithm from 0.
pub fn oracle_cloud(spec: RegionSpec, n_outer: usize, n_inner: usize) -> Result<SampleCloud> {
    if n_outer < 8 || n_inner < 8 {
        return Err(Error::Resolution(format!(
            "oracle grids need >= 8 angles, got {n_outer} x {n_inner}"
        )));
    }
    let kind = spec.family.base_kind();
    let points: Vec<Complex64> = if spec.family.logarithmic() {
        // parameter grids over the unit bidisk; the radius enters via the path
        let outer = disk_grid(1.0, n_outer);
        let inner = disk_grid(1.0, n_inner);
        outer
            .par_iter()
            .map(|&a| {
                inner
                    .iter()
                    .map(|&b| tracked_log_endpoint(kind, a, b, spec.r))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect()
    } else {
        let one = Complex64::new(1.0, 0.0);
        let outer = disk_grid(spec.r, n_outer);
        let inner = disk_grid(spec.r, n_inner);
        outer
            .par_iter()
            .map(|&s| {
                inner
                    .iter()
                    .map(|&t| family_map(kind, one + s, one + t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect()
    };
    Ok(SampleCloud {
        points,
        family: spec.family,
        r: spec.r,
        n_outer,
        n_inner,
    })
}

/// Limit of the LU boundary as r -> 1: `Log(1 + 3 e^{it})` on `|t| < pi`,
/// `Log(1 - e^{it}) + sign(t) pi i` on `pi <= |t| < 2 pi`.
pub fn limit_curve_gamma(t: f64) -> Result<Complex64> {
    if !(t.abs() < TAU) {
        return Err(Error::Domain(format!("gamma parameter |{t}| >= 2 pi")));
    }
    let one = Complex64::new(1.0, 0.0);
    if t.abs() < PI {
        Ok((one + Complex64::from_polar(3.0, t)).ln())
    } else {
        Ok((one - Complex64::from_polar(1.0, t)).ln() + Complex64::new(0.0, t.signum() * PI))
    }
}

/// `tau(t) = Log(1 + e^{it}) = log(2 cos(t/2)) + i t/2` on `|t| < pi`.
pub fn limit_curve_tau(t: f64) -> Result<Complex64> {
    if !(t.abs() < PI) {
        return Err(Error::Domain(format!("tau parameter |{t}| >= pi")));
    }
    Ok(Complex64::new((2.0 * (t / 2.0).cos()).ln(), t / 2.0))
}

/// Classification of a point against a region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Membership {
    Inside,
    Outside,
    /// Within 1e-9 of the boundary; carries the measured distance.
    Boundary { dist: f64 },
}

/// Offset up to which a point beyond the curve still counts as boundary.
pub const MEMBERSHIP_BAND: f64 = 1e-9;

/// Point-in-region test: coarse winding number against the sampled boundary,
/// then local refinement against the smooth parametrization for points the
/// polygon calls outside but that sit within its sagitta.
pub fn region_membership(p: Complex64, spec: RegionSpec, n: usize) -> Result<Membership> {
    let curve = boundary_curve(spec, n)?;
    membership_against(p, spec, &curve)
}

/// [`region_membership`] against a prebuilt boundary curve; callers testing
/// many points build the curve once.
pub fn membership_against(p: Complex64, spec: RegionSpec, curve: &BoundaryCurve) -> Result<Membership> {
    let poly = &curve.polyline;
    let coarse = match winding_number(p, poly) {
        Ok(wn) => {
            if wn != 0 {
                Membership::Inside
            } else {
                Membership::Outside
            }
        }
        Err(Error::Boundary { dist }) => Membership::Boundary { dist },
        Err(e) => return Err(e),
    };
    if curve.approximate {
        // hull-based region: no smooth curve to refine against
        return Ok(match coarse {
            Membership::Boundary { dist } if dist > MEMBERSHIP_BAND => Membership::Outside,
            other => other,
        });
    }
    let dist_poly = poly.distance_to(p);
    if dist_poly > 1e-2 {
        return Ok(coarse);
    }

    // nearest-vertex parameter window, then golden-section nearest point on
    // the smooth curve
    let params = poly.params();
    let (mut best_k, mut best_d) = (0usize, f64::INFINITY);
    for (k, &q) in poly.points().iter().enumerate() {
        let d = (p - q).norm_sqr();
        if d < best_d {
            best_d = d;
            best_k = k;
        }
    }
    let step = TAU / poly.points().len() as f64;
    let t0 = params[best_k];
    let (t_star, _) = golden_min(
        |t| match boundary_point(spec, t) {
            Ok(q) => (q - p).norm(),
            Err(_) => f64::INFINITY,
        },
        t0 - 2.0 * step,
        t0 + 2.0 * step,
        1e-12,
    );
    let q = boundary_point(spec, t_star)?;
    let h = 1e-7;
    let tangent = (boundary_point(spec, t_star + h)? - boundary_point(spec, t_star - h)?) / (2.0 * h);
    let orient = poly.signed_area2().signum();
    let side = cross(tangent, p - q) * orient;
    let dist = (p - q).norm();
    if dist <= MEMBERSHIP_BAND {
        return Ok(Membership::Boundary { dist });
    }
    Ok(if side > 0.0 {
        Membership::Inside
    } else {
        Membership::Outside
    })
}

/// Checks that every cloud point lies inside the region (or within the
/// membership band of its boundary). Builds the boundary once; returns the
/// worst outward excursion.
pub fn cloud_inside_check(spec: RegionSpec, cloud: &SampleCloud, n: usize) -> Result<CheckReport> {
    let curve = boundary_curve(spec, n)?;
    let results: Vec<(Membership, Complex64)> = cloud
        .points
        .par_iter()
        .map(|&p| membership_against(p, spec, &curve).map(|m| (m, p)))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0.0f64;
    let mut offender = None;
    for (m, p) in results {
        if let Membership::Outside = m {
            let d = curve.polyline.distance_to(p);
            if d > worst {
                worst = d;
                offender = Some(p);
            }
        }
    }
    let pass = worst <= MEMBERSHIP_BAND;
    Ok(CheckReport {
        pass,
        measured: worst,
        tolerance: MEMBERSHIP_BAND,
        note: match offender {
            Some(p) if !pass => format!("cloud point {p} escapes {} at r = {}", spec.family, spec.r),
            _ => format!("{} cloud of {} points inside at r = {}", spec.family, cloud.points.len(), spec.r),
        },
    })
}

/// Result of a nesting or exp-relation sweep.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub pass: bool,
    pub measured: f64,
    pub tolerance: f64,
    pub note: String,
}

/// Checks that regions grow with the radius: every boundary vertex at the
/// smaller radius must lie inside (or within 1e-9 of) the region at the next
/// radius.
pub fn monotone_nesting_check(family: Family, radii: &[f64], n: usize) -> Result<CheckReport> {
    if radii.len() < 2 {
        return Err(Error::Domain("nesting check needs >= 2 radii".into()));
    }
    let mut worst = 0.0f64;
    for pair in radii.windows(2) {
        let (r_small, r_large) = (pair[0], pair[1]);
        if r_large <= r_small {
            return Ok(CheckReport {
                pass: false,
                measured: f64::NAN,
                tolerance: MEMBERSHIP_BAND,
                note: if r_large == r_small {
                    format!("equal radii {r_small}")
                } else {
                    format!("radii not increasing: {r_small} then {r_large}")
                },
            });
        }
        let small = boundary_curve(RegionSpec::new(family, r_small)?, n)?;
        let spec_large = RegionSpec::new(family, r_large)?;
        let large = boundary_curve(spec_large, n)?;
        for &p in small.polyline.points() {
            match membership_against(p, spec_large, &large)? {
                Membership::Inside | Membership::Boundary { .. } => {}
                Membership::Outside => {
                    let d = large.polyline.distance_to(p);
                    worst = worst.max(d);
                    if d > MEMBERSHIP_BAND {
                        return Ok(CheckReport {
                            pass: false,
                            measured: d,
                            tolerance: MEMBERSHIP_BAND,
                            note: format!(
                                "vertex {p} of {family} at r = {r_small} escapes r = {r_large}"
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        pass: true,
        measured: worst,
        tolerance: MEMBERSHIP_BAND,
        note: format!("{family} nested over {radii:?}"),
    })
}

/// Verifies that exponentiating a log-region boundary reproduces the plain
/// region: pointwise to 1e-9 where both sides have closed forms (LU vs U,
/// LW vs W), and by one-sided Hausdorff distance to an oracle cloud for LV.
pub fn exp_relation_check(family: Family, r: f64, n: usize) -> Result<CheckReport> {
    let spec = RegionSpec::new(family, r)?;
    match family {
        Family::LU | Family::LW => {
            let plain = match family {
                Family::LU => Family::U,
                _ => Family::W,
            };
            let log_curve = boundary_curve(spec, n)?;
            let plain_curve = boundary_curve(RegionSpec::new(plain, r)?, n)?;
            let measured = log_curve
                .polyline
                .points()
                .iter()
                .zip(plain_curve.polyline.points())
                .map(|(lw, w)| (lw.exp() - w).norm())
                .fold(0.0f64, f64::max);
            Ok(CheckReport {
                pass: measured <= 1e-9,
                measured,
                tolerance: 1e-9,
                note: format!("exp({family}) vs {plain} pointwise at r = {r}"),
            })
        }
        Family::LV => {
            // the V map stretches the slot grids hard near its modulus
            // extremes, so the comparison cloud needs a much finer angular
            // resolution than the curve; the curve sampling is capped to keep
            // the scan affordable
            let curve = boundary_curve(spec, n.min(512))?;
            let image: Vec<Complex64> =
                curve.polyline.points().iter().map(|w| w.exp()).collect();
            let cloud = oracle_cloud(RegionSpec::new(Family::V, r)?, 2048, 2048)?;
            let measured = image
                .par_iter()
                .map(|&p| {
                    cloud
                        .points
                        .iter()
                        .map(|q| (q - p).norm_sqr())
                        .fold(f64::INFINITY, f64::min)
                })
                .reduce(|| 0.0, f64::max)
                .sqrt();
            Ok(CheckReport {
                pass: measured <= 1e-2,
                measured,
                tolerance: 1e-2,
                note: format!("exp(LV) boundary vs V cloud at r = {r}"),
            })
        }
        other => Err(Error::Domain(format!(
            "exp relation applies to log families, not {other}"
        ))),
    }
}
