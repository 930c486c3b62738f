//! The map `F`, its logarithm `G`, their Wirtinger derivatives, the
//! envelope-of-circles construction for the `U` region, and the auxiliary
//! angle functions used in the monotonicity and positivity sweeps.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::polyline::Disk;
use crate::roots::bisect;
use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_in_open_disk(z: Complex64) -> Result<()> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!("|z| = {} >= 1", z.norm())));
    }
    Ok(())
}

/// `F(z) = (3 + conj z)(1+z)^3 / (3 + 3z + conj z + z^2)` on the closed disk.
///
/// Not analytic: it depends on `conj z`. The denominator only degenerates in
/// the limit `z -> -1`, which is excluded from the domain.
pub fn f_eval(z: Complex64) -> Result<Complex64> {
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("|z| = {} > 1", z.norm())));
    }
    let zb = z.conj();
    let den = Complex64::new(3.0, 0.0) + z * 3.0 + zb + z * z;
    if den.norm() <= 1e-14 {
        return Err(Error::Domain("denominator of F vanishes (z near -1)".into()));
    }
    let w = ONE + z;
    Ok((Complex64::new(3.0, 0.0) + zb) * w * w * w / den)
}

/// Continuous branch `G = log F` with `G(0) = 0`:
/// `G(z) = 3 Log(1+z) - Log(1 + z e^{2 i phi})`, `phi = Arg(3+z)`.
pub fn g_eval(z: Complex64) -> Result<Complex64> {
    check_in_open_disk(z)?;
    let phi = (Complex64::new(3.0, 0.0) + z).arg();
    let rot = Complex64::from_polar(1.0, 2.0 * phi);
    Ok((ONE + z).ln() * 3.0 - (ONE + z * rot).ln())
}

/// Wirtinger derivative pair of a map of `z` and `conj z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerPair {
    pub d_z: Complex64,
    pub d_zbar: Complex64,
}

/// Closed-form Wirtinger derivatives of `G`.
pub fn g_wirtinger(z: Complex64) -> Result<WirtingerPair> {
    check_in_open_disk(z)?;
    let zb = z.conj();
    let den = Complex64::new(3.0, 0.0) + z * 3.0 + zb + z * z;
    let d_z = (Complex64::new(6.0, 0.0) + z * 4.0 + zb * 3.0 + z * z) / ((ONE + z) * den);
    let d_zbar = z * (Complex64::new(3.0, 0.0) + z) / ((Complex64::new(3.0, 0.0) + zb) * den);
    Ok(WirtingerPair { d_z, d_zbar })
}

/// Jacobian `J_G = |G_z|^2 - |G_zbar|^2`; positive throughout the open disk.
pub fn jacobian_g(z: Complex64) -> Result<f64> {
    let w = g_wirtinger(z)?;
    Ok(w.d_z.norm_sqr() - w.d_zbar.norm_sqr())
}

/// Raw numerator difference `|6 + 4z + 3 conj z + z^2|^2 - |z(1+z)|^2`
/// driving the sign of `J_G`.
pub fn jacobian_numerator_raw(z: Complex64) -> f64 {
    let zb = z.conj();
    let num = Complex64::new(6.0, 0.0) + z * 4.0 + zb * 3.0 + z * z;
    num.norm_sqr() - (z * (ONE + z)).norm_sqr()
}

/// Factored form `12 (1 + r cos t)(2 (1 + r cos t)^2 + 1 - r^2)` of the
/// same numerator difference, written in polar coordinates.
pub fn jacobian_numerator_factored(z: Complex64) -> f64 {
    let r = z.norm();
    let rcos = z.re; // r cos(theta)
    12.0 * (1.0 + rcos) * (2.0 * (1.0 + rcos) * (1.0 + rcos) + 1.0 - r * r)
}

/// `phi = Arg(3 + r e^{i theta})` and `h = theta + 2 phi`.
/// `h` increases strictly from 0 to pi as `theta` runs over `[0, pi]`.
pub fn phi_and_h(r: f64, theta: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain(format!("theta = {theta} outside [0, pi]")));
    }
    let phi = (Complex64::new(3.0, 0.0) + Complex64::from_polar(r, theta)).arg();
    Ok((phi, theta + 2.0 * phi))
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0 < r && r < 1.0) {
        return Err(Error::Domain(format!("radius r = {r} outside (0, 1)")));
    }
    Ok(())
}

/// `Phi_r(x) = Arg(1 + r e^{ix})`.
pub fn phi_r(r: f64, x: f64) -> Result<f64> {
    check_radius(r)?;
    Ok((ONE + Complex64::from_polar(r, x)).arg())
}

/// `Phi_r'(x) = r (r + cos x) / (1 + 2 r cos x + r^2)`.
pub fn d_phi_r(r: f64, x: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(r * (r + x.cos()) / (1.0 + 2.0 * r * x.cos() + r * r))
}

/// `g_r(theta) = Im G(r e^{i theta}) = 3 Phi_r(theta) - Phi_r(theta + 2 phi)`.
pub fn g_r(r: f64, theta: f64) -> Result<f64> {
    let (phi, h) = phi_and_h(r, theta)?;
    let _ = phi;
    Ok(3.0 * phi_r(r, theta)? - phi_r(r, h)?)
}

/// Finite-difference derivative of `g_r` in `theta` (step 1e-6, one-sided
/// near the interval ends).
pub fn dg_r_dtheta(r: f64, theta: f64) -> Result<f64> {
    check_radius(r)?;
    let h = 1e-6;
    let lo = (theta - h).max(1e-12);
    let hi = (theta + h).min(PI - 1e-12);
    Ok((g_r(r, hi)? - g_r(r, lo)?) / (hi - lo))
}

/// Pieces of the closed form for the theta-derivative of `Re G(r e^{i theta})`.
#[derive(Debug, Clone, Copy)]
pub struct ReGDerivative {
    pub value: f64,
    pub h_factor: f64,
    pub k_factor: f64,
}

/// Closed-form `d/dtheta Re G(r e^{i theta})`, together with the positive
/// factors `H(r, theta)` and `K(r, theta)` that control its sign:
///
/// ```text
/// d/dtheta Re G = - 6 r sin(theta) (3 + 4 r cos theta + r^2 cos 2theta) H
///                 / ((1 + 2 r cos theta + r^2)(9 + 6 r cos theta + r^2) K)
/// H = 9 + 12 r cos theta - 4 r^2 sin^2 theta - 4 r^3 cos theta - r^4
/// K = 9 - 2 r^2 + r^4 + 24 r cos theta + 24 r^2 cos^2 theta + 8 r^3 cos^3 theta
/// ```
pub fn d_re_g_dtheta(r: f64, theta: f64) -> Result<ReGDerivative> {
    check_radius(r)?;
    let (s, c) = theta.sin_cos();
    let c2 = (2.0 * theta).cos();
    let r2 = r * r;
    let r3 = r2 * r;
    let r4 = r2 * r2;
    let h_factor = 9.0 + 12.0 * r * c - 4.0 * r2 * s * s - 4.0 * r3 * c - r4;
    let k_factor = 9.0 - 2.0 * r2 + r4 + 24.0 * r * c + 24.0 * r2 * c * c + 8.0 * r3 * c * c * c;
    let numerator = -6.0 * r * s * (3.0 + 4.0 * r * c + r2 * c2) * h_factor;
    let denominator = (1.0 + 2.0 * r * c + r2) * (9.0 + 6.0 * r * c + r2) * k_factor;
    Ok(ReGDerivative {
        value: numerator / denominator,
        h_factor,
        k_factor,
    })
}

/// Solutions of `3 Phi_r(x) = arcsin r`, bracketing the maximizer
/// `x_star = pi - arccos r` of `Phi_r`.
#[derive(Debug, Clone, Copy)]
pub struct CriticalAngles {
    pub x_minus: f64,
    pub x_star: f64,
    pub x_plus: f64,
}

pub fn critical_angles(r: f64) -> Result<CriticalAngles> {
    check_radius(r)?;
    let x_star = PI - r.acos();
    let target = r.asin();
    let eq = |x: f64| 3.0 * phi_r(r, x).expect("r checked") - target;
    // 3 Phi_r rises from 0 to 3 arcsin r on (0, x_star), then falls back to 0
    let x_minus = bisect(eq, 1e-12, x_star, 1e-10)
        .map_err(|e| Error::Internal(format!("x_minus bracket failed: {e}")))?;
    let x_plus = bisect(eq, x_star, PI - 1e-12, 1e-10)
        .map_err(|e| Error::Internal(format!("x_plus bracket failed: {e}")))?;
    let angles = CriticalAngles {
        x_minus,
        x_star,
        x_plus,
    };
    if !(0.0 < x_minus && x_minus < x_star && x_star < x_plus && x_plus < PI) {
        return Err(Error::Internal(format!("critical angle order violated: {angles:?}")));
    }
    if x_minus > x_star / 3.0 + 1e-9 {
        return Err(Error::Internal(format!(
            "x_minus = {x_minus} exceeds x_star/3 = {}",
            x_star / 3.0
        )));
    }
    Ok(angles)
}

/// Circle `Delta_s` of the envelope family for `s = r e^{i alpha}`:
/// center `(2-s)/(2(1-s)^2)`, radius `r / (2|1-s|^2)`.
///
/// These circles sweep the reciprocal region `1/U_r`.
pub fn envelope_circle(r: f64, alpha: f64) -> Result<Disk> {
    check_radius(r)?;
    let s = Complex64::from_polar(r, alpha);
    let om = ONE - s;
    let center = (Complex64::new(2.0, 0.0) - s) / (om * om * 2.0);
    let radius = r / (2.0 * om.norm_sqr());
    Disk::new(center, radius)
}

/// Derivative magnitudes `|c'(alpha)| + |rho'(alpha)|` of the circle family;
/// bounds how fast neighboring circles move.
pub fn envelope_circle_speed(r: f64, alpha: f64) -> Result<f64> {
    check_radius(r)?;
    let s = Complex64::from_polar(r, alpha);
    let om = ONE - s;
    let c_prime = Complex64::i() * s * (Complex64::new(3.0, 0.0) - s) / (om * om * om * 2.0);
    let rho_prime = -r * r * alpha.sin() / om.norm_sqr().powi(2);
    Ok(c_prime.norm() + rho_prime.abs())
}

/// Tangency point `zeta(alpha) = 1 / F(-r e^{i alpha})` of the envelope.
pub fn envelope_point(r: f64, alpha: f64) -> Result<Complex64> {
    check_radius(r)?;
    let value = f_eval(-Complex64::from_polar(r, alpha))?;
    Ok(value.inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, TAU};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_disk_point(rng: &mut impl Rng, radius: f64) -> Complex64 {
        let r = radius * rng.gen::<f64>().sqrt();
        Complex64::from_polar(r, rng.gen::<f64>() * TAU)
    }

    #[test]
    fn f_point_values() {
        assert!((f_eval(c(0., 0.)).unwrap() - c(1., 0.)).norm() < 1e-15);
        // F(e^{i theta}) = 1 + 3 e^{i theta} at theta = 0
        assert!((f_eval(c(1., 0.)).unwrap() - c(4., 0.)).norm() < 1e-14);
        // on the real axis F(r) = (1+r)^2, F(-r) = (1-r)^2
        assert!((f_eval(c(0.5, 0.)).unwrap() - c(2.25, 0.)).norm() < 1e-14);
        assert!((f_eval(c(-0.5, 0.)).unwrap() - c(0.25, 0.)).norm() < 1e-14);
        assert!(f_eval(c(1.5, 0.)).is_err());
    }

    #[test]
    fn g_point_values_and_symmetry() {
        assert!(g_eval(c(0., 0.)).unwrap().norm() < 1e-15);
        let g = g_eval(c(0.5, 0.)).unwrap();
        assert!((g - c(2.25f64.ln(), 0.)).norm() < 1e-14);
        let a = g_eval(c(0., 0.5)).unwrap();
        let b = g_eval(c(0., -0.5)).unwrap();
        assert!((a - b.conj()).norm() < 1e-15);
        assert!(g_eval(c(1., 0.)).is_err());
    }

    #[test]
    fn exp_g_equals_f_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..10_000 {
            let z = random_disk_point(&mut rng, 0.9999);
            let f = f_eval(z).unwrap();
            let g = g_eval(z).unwrap();
            assert!(
                (g.exp() - f).norm() <= 1e-12 * f.norm(),
                "exp(G) != F at z = {z}"
            );
        }
    }

    #[test]
    fn wirtinger_at_zero_and_fd() {
        let w = g_wirtinger(c(0., 0.)).unwrap();
        assert!((w.d_z - c(2., 0.)).norm() < 1e-15);
        assert!(w.d_zbar.norm() < 1e-15);

        // directional finite differences in the directions 1 and i
        let h = 1e-5;
        for z in [c(0.5, 0.0), c(0.3, 0.4), c(-0.2, 0.6)] {
            let w = g_wirtinger(z).unwrap();
            for e in [c(1., 0.), c(0., 1.)] {
                let fd = (g_eval(z + e * h).unwrap() - g_eval(z - e * h).unwrap()) / (2.0 * h);
                let expected = w.d_z * e + w.d_zbar * e.conj();
                assert!(
                    (fd - expected).norm() <= 1e-6,
                    "directional derivative mismatch at z = {z}, e = {e}"
                );
            }
        }
    }

    #[test]
    fn jacobian_positive_and_factored_identity() {
        assert!((jacobian_g(c(0., 0.)).unwrap() - 4.0).abs() < 1e-15);
        let n = 100;
        for i in 0..n {
            for j in 0..n {
                let z = Complex64::from_polar(
                    0.99 * (i as f64 + 0.5) / n as f64,
                    TAU * j as f64 / n as f64,
                );
                assert!(jacobian_g(z).unwrap() > 0.0, "J_G <= 0 at {z}");
                let raw = jacobian_numerator_raw(z);
                let factored = jacobian_numerator_factored(z);
                assert!(
                    (raw - factored).abs() <= 1e-10 * raw.abs().max(1.0),
                    "identity residual at {z}: {raw} vs {factored}"
                );
            }
        }
    }

    #[test]
    fn phi_and_h_values() {
        let (phi, h) = phi_and_h(0.5, 0.0).unwrap();
        assert!(phi.abs() < 1e-15 && h.abs() < 1e-15);
        let (phi, h) = phi_and_h(0.5, PI).unwrap();
        assert!(phi.abs() < 1e-15);
        assert!((h - PI).abs() < 1e-15);
        let (phi, h) = phi_and_h(0.5, FRAC_PI_2).unwrap();
        assert!((phi - (0.5f64 / 3.0).atan()).abs() < 1e-12);
        assert!((h - (FRAC_PI_2 + 2.0 * (1.0f64 / 6.0).atan())).abs() < 1e-12);
        assert!((h - 1.90110).abs() < 1e-4);
        // h strictly increasing
        let mut prev = -1.0;
        for k in 0..=256 {
            let (_, h) = phi_and_h(0.9, PI * k as f64 / 256.0).unwrap();
            assert!(h > prev);
            prev = h;
        }
    }

    #[test]
    fn phi_r_values_and_derivative() {
        assert!(phi_r(0.5, 1e-12).unwrap().abs() < 1e-12);
        assert!((phi_r(0.5, FRAC_PI_2).unwrap() - 0.5f64.atan()).abs() < 1e-15);
        // maximum value arcsin r at x_star
        let x_star = PI - 0.5f64.acos();
        assert!((x_star - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!((phi_r(0.5, x_star).unwrap() - 0.5f64.asin()).abs() < 1e-14);
        assert!((0.5f64.asin() - PI / 6.0).abs() < 1e-15);

        // closed-form derivative matches finite differences; concavity
        let h = 1e-6;
        for r in [0.2, 0.5, 0.8] {
            let mut prev_slope = f64::INFINITY;
            for k in 1..64 {
                let x = PI * k as f64 / 64.0;
                let fd = (phi_r(r, x + h).unwrap() - phi_r(r, x - h).unwrap()) / (2.0 * h);
                let closed = d_phi_r(r, x).unwrap();
                assert!((fd - closed).abs() <= 1e-8);
                assert!(closed < prev_slope, "Phi_r' not decreasing at x = {x}");
                prev_slope = closed;
            }
        }
    }

    #[test]
    fn g_r_matches_im_g_and_positive() {
        for r in [0.5, 0.9] {
            for k in 1..128 {
                let theta = PI * k as f64 / 128.0;
                let lhs = g_r(r, theta).unwrap();
                let rhs = g_eval(Complex64::from_polar(r, theta)).unwrap().im;
                assert!((lhs - rhs).abs() <= 1e-12);
                assert!(lhs > 0.0, "Im G <= 0 at r = {r}, theta = {theta}");
            }
        }
    }

    #[test]
    fn re_g_derivative_closed_form() {
        // endpoint factorizations
        let d = d_re_g_dtheta(0.5, PI - 1e-14).unwrap();
        assert!((d.h_factor - 3.4375).abs() < 1e-9);
        assert!((d.k_factor - 1.5625).abs() < 1e-9);
        for r in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let hp = d_re_g_dtheta(r, PI).unwrap();
            assert!((hp.h_factor - (1.0 - r) * (3.0 - r) * (3.0 - r * r)).abs() < 1e-12);
            assert!((hp.k_factor - (3.0 - r) * (3.0 - r) * (1.0 - r) * (1.0 - r)).abs() < 1e-12);
        }

        // matches finite differences of Re G and stays nonpositive
        let h = 1e-6;
        for r in [0.2, 0.5, 0.8] {
            for k in 1..128 {
                let theta = PI * k as f64 / 128.0 - 1e-4;
                if theta <= 0.0 {
                    continue;
                }
                let closed = d_re_g_dtheta(r, theta).unwrap().value;
                let fd = (g_eval(Complex64::from_polar(r, theta + h)).unwrap().re
                    - g_eval(Complex64::from_polar(r, theta - h)).unwrap().re)
                    / (2.0 * h);
                assert!(
                    (closed - fd).abs() <= 1e-7,
                    "closed {closed} vs fd {fd} at r = {r}, theta = {theta}"
                );
                assert!(closed <= 0.0);
            }
        }
        // odd sin factor kills the derivative at theta -> 0+
        assert!(d_re_g_dtheta(0.5, 1e-9).unwrap().value.abs() < 1e-8);
    }

    #[test]
    fn g_r_increasing_below_x_star() {
        let r = 0.5f64;
        let x_star = PI - r.acos();
        assert!(dg_r_dtheta(r, 0.5).unwrap() > 0.0);
        for k in 1..64 {
            let theta = x_star * k as f64 / 64.0;
            assert!(dg_r_dtheta(r, theta).unwrap() > 0.0, "g_r' <= 0 at {theta}");
        }
        // finite, positive slope at the left end
        let slope = dg_r_dtheta(r, 1e-6).unwrap();
        assert!(slope.is_finite() && slope > 0.0);
    }

    #[test]
    fn critical_angle_residuals() {
        let angles = critical_angles(0.5).unwrap();
        assert!((angles.x_star - 2.0 * PI / 3.0).abs() < 1e-14);
        let residual = 3.0 * phi_r(0.5, angles.x_minus).unwrap() - 0.5f64.asin();
        assert!(residual.abs() < 1e-9);
        let residual = 3.0 * phi_r(0.5, angles.x_plus).unwrap() - 0.5f64.asin();
        assert!(residual.abs() < 1e-9);
        for k in 1..20 {
            let r = k as f64 / 20.0;
            let a = critical_angles(r).unwrap();
            assert!(a.x_minus <= a.x_star / 3.0 + 1e-9);
        }
    }

    #[test]
    fn x_minus_agrees_with_dense_scan() {
        // independent oracle: dense scan of 3 Phi_r - arcsin r for its first
        // sign flip, cross-checking the bisection path
        let r = 0.5f64;
        let target = r.asin();
        let n = 2_000_000;
        let x_star = PI - r.acos();
        let mut scan = None;
        for k in 1..n {
            let x = x_star * k as f64 / n as f64;
            if 3.0 * phi_r(r, x).unwrap() - target >= 0.0 {
                scan = Some(x);
                break;
            }
        }
        let scan = scan.expect("sign flip exists");
        let angles = critical_angles(r).unwrap();
        assert!((angles.x_minus - scan).abs() <= 2.0 * x_star / n as f64);
    }

    #[test]
    fn envelope_circle_values() {
        let d = envelope_circle(0.5, 0.0).unwrap();
        assert!((d.center - c(3.0, 0.0)).norm() < 1e-14);
        assert!((d.radius - 1.0).abs() < 1e-14);
        let d = envelope_circle(0.5, PI).unwrap();
        assert!((d.center - c(2.5 / 4.5, 0.0)).norm() < 1e-14);
        assert!((d.radius - 0.5 / 4.5).abs() < 1e-14);
        // definition restated: center = (1 - s/2)/(1-s)^2 * ... at alpha = pi/2
        let s = Complex64::from_polar(0.5, FRAC_PI_2);
        let om = ONE - s;
        let d = envelope_circle(0.5, FRAC_PI_2).unwrap();
        assert!((d.center - (ONE - s * 0.5) / (om * om)).norm() < 1e-14);
    }

    #[test]
    fn envelope_point_on_its_circle() {
        let z = envelope_point(0.5, 0.0).unwrap();
        assert!((z - c(4.0, 0.0)).norm() < 1e-13);
        let z = envelope_point(0.5, PI).unwrap();
        assert!((z - c(1.0 / 2.25, 0.0)).norm() < 1e-14);

        for r in [0.2, 0.5, 0.8] {
            for k in 0..256 {
                let alpha = TAU * k as f64 / 256.0;
                let zeta = envelope_point(r, alpha).unwrap();
                let disk = envelope_circle(r, alpha).unwrap();
                let residual = ((zeta - disk.center).norm() - disk.radius).abs();
                assert!(residual <= 1e-10, "tangency residual {residual} at alpha {alpha}");
            }
        }
    }

    #[test]
    fn envelope_locally_extremal() {
        // neighboring circles pass within eps * speed of the tangency point
        let eps = 1e-4;
        for r in [0.2, 0.5, 0.8] {
            for k in 0..128 {
                let alpha = TAU * k as f64 / 128.0;
                let zeta = envelope_point(r, alpha).unwrap();
                let speed = envelope_circle_speed(r, alpha).unwrap();
                for da in [-eps, eps] {
                    let disk = envelope_circle(r, alpha + da).unwrap();
                    let gap = ((zeta - disk.center).norm() - disk.radius).abs();
                    assert!(
                        gap <= 2.0 * eps * speed.max(1.0),
                        "gap {gap} vs bound {} at r={r}, alpha={alpha}",
                        2.0 * eps * speed
                    );
                }
            }
        }
    }
}
