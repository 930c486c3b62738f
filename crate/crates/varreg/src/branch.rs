//! Principal and path-continued branches of the complex logarithm.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::polyline::Polyline;
use crate::{Error, Result};

/// Principal branch `Log z = log|z| + i Arg z` with `Arg z` in `(-pi, pi]`.
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("log of zero".into()));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("log of non-finite value".into()));
    }
    Ok(z.ln())
}

/// Continuous branch of `log` along a sampled path, normalized by
/// `result[0] = base_value`.
///
/// Each step picks the branch whose imaginary part is nearest to the
/// previous sample, so the caller must supply sampling with angular steps
/// below `pi`.
pub fn continuous_log_along(path: &Polyline, base_value: Complex64) -> Result<Polyline> {
    let pts = path.points();
    let mut out = Vec::with_capacity(pts.len());
    if pts[0].norm() == 0.0 {
        return Err(Error::Domain("zero on logarithm path".into()));
    }
    out.push(base_value);
    for k in 1..pts.len() {
        let p = pts[k];
        if p.norm() == 0.0 {
            return Err(Error::Domain("zero on logarithm path".into()));
        }
        let step = (p / pts[k - 1]).arg();
        if step.abs() >= PI {
            return Err(Error::Resolution(format!(
                "angular step {step} at sample {k} reaches pi; supply denser sampling"
            )));
        }
        let mut w = p.ln();
        let turns = ((out[k - 1].im - w.im) / TAU).round();
        w.im += TAU * turns;
        out.push(w);
    }
    Polyline::new(out, path.params().to_vec(), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    fn line(points: Vec<C>) -> Polyline {
        let params: Vec<f64> = (0..points.len()).map(|k| k as f64).collect();
        Polyline::new(points, params, false).unwrap()
    }

    /// Winding count of a path around 0 by quadrant crossings; assumes the
    /// angular step stays below a quarter turn. Independent of atan2.
    fn quadrant_winding(path: &[C]) -> i32 {
        fn quadrant(p: C) -> i32 {
            match (p.re >= 0.0, p.im >= 0.0) {
                (true, true) => 0,
                (false, true) => 1,
                (false, false) => 2,
                (true, false) => 3,
            }
        }
        let mut quarter_turns = 0i32;
        for w in path.windows(2) {
            let dq = quadrant(w[1]) - quadrant(w[0]);
            quarter_turns += match dq.rem_euclid(4) {
                0 => 0,
                1 => 1,
                3 => -1,
                _ => panic!("step skipped a quadrant"),
            };
        }
        debug_assert_eq!(quarter_turns.rem_euclid(4), 0);
        quarter_turns.div_euclid(4)
    }

    #[test]
    fn principal_log_examples() {
        assert_eq!(principal_log(C::new(1.0, 0.0)).unwrap(), C::new(0.0, 0.0));
        let l = principal_log(C::new(-2.0, 0.0)).unwrap();
        assert!((l.re - 2.0f64.ln()).abs() < 1e-15);
        assert!((l.im - std::f64::consts::PI).abs() < 1e-15);
        let l = principal_log(C::new(0.0, 1.0)).unwrap();
        assert!((l - C::new(0.0, std::f64::consts::FRAC_PI_2)).norm() < 1e-15);
        assert!(principal_log(C::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn constant_path_stays_at_base() {
        let path = line(vec![C::new(1.0, 0.0); 8]);
        let out = continuous_log_along(&path, C::new(0.0, 0.0)).unwrap();
        assert!(out.points().iter().all(|w| w.norm() == 0.0));
    }

    #[test]
    fn full_circle_gains_two_pi_i() {
        let n = 64;
        let mut pts: Vec<C> = (0..n)
            .map(|k| C::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect();
        pts.push(pts[0]); // close exactly, avoiding sin(2 pi) roundoff
        assert_eq!(quadrant_winding(&pts), 1);
        let out = continuous_log_along(&line(pts), C::new(0.0, 0.0)).unwrap();
        let end = *out.points().last().unwrap();
        assert!((end - C::new(0.0, TAU)).norm() < 1e-12, "endpoint {end}");
    }

    #[test]
    fn loop_not_around_origin_returns_to_base() {
        let n = 64;
        let base = C::new(3.0, 0.0);
        let mut pts: Vec<C> = (0..n)
            .map(|k| base + C::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect();
        pts.push(pts[0]); // close exactly, avoiding sin(2 pi) roundoff
        assert_eq!(quadrant_winding(&pts), 0);
        let log4 = C::new(4.0f64.ln(), 0.0);
        let out = continuous_log_along(&line(pts), log4).unwrap();
        let end = *out.points().last().unwrap();
        assert!((end - log4).norm() < 1e-10);
    }

    #[test]
    fn rejects_zero_and_antipodal_steps() {
        let path = line(vec![C::new(1.0, 0.0), C::new(0.0, 0.0)]);
        assert!(matches!(
            continuous_log_along(&path, C::new(0.0, 0.0)),
            Err(Error::Domain(_))
        ));
        let path = line(vec![C::new(1.0, 0.0), C::new(-1.0, 0.0)]);
        assert!(matches!(
            continuous_log_along(&path, C::new(0.0, 0.0)),
            Err(Error::Resolution(_))
        ));
    }

    proptest! {
        #[test]
        fn exp_inverts_principal_log(
            logr in -13.8f64..13.8, arg in -3.14f64..3.14
        ) {
            let z = C::from_polar(logr.exp(), arg);
            let w = principal_log(z).unwrap().exp();
            prop_assert!((w - z).norm() <= 1e-14 * z.norm());
        }

        #[test]
        fn exp_inverts_tracked_log_along_spirals(
            winds in -3i32..=3, n in 48usize..128, r0 in 0.5f64..2.0
        ) {
            let total = TAU * winds as f64;
            let pts: Vec<C> = (0..=n)
                .map(|k| {
                    let t = k as f64 / n as f64;
                    C::from_polar(r0 + t, total * t)
                })
                .collect();
            let path = line(pts.clone());
            let out = continuous_log_along(&path, C::new(r0.ln(), 0.0)).unwrap();
            for (w, p) in out.points().iter().zip(&pts) {
                prop_assert!((w.exp() - p).norm() <= 1e-12 * p.norm());
            }
            let end = out.points().last().unwrap();
            prop_assert!((end.im - total).abs() < 1e-9);
        }
    }
}
