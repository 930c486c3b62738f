//! The extremal close-to-convex functions `f_{a,b}` and the two-slot
//! Möbius forms that parametrize the value regions.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Parameters `(a, b)` of an extremal function, both in the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalParams {
    pub a: Complex64,
    pub b: Complex64,
}

impl ExtremalParams {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        if a.norm() > 1.0 + 1e-15 || b.norm() > 1.0 + 1e-15 {
            return Err(Error::Domain(format!(
                "extremal parameters must lie in the closed unit disk: |a|={}, |b|={}",
                a.norm(),
                b.norm()
            )));
        }
        Ok(Self { a, b })
    }
}

/// Which of the three value functionals a Möbius form parametrizes:
/// `U` for `z/f(z)`, `V` for `f'(z)`, `W` for `zf'(z)/f(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    U,
    V,
    W,
}

/// `f_{a,b}(z) = z (1 + (a+b)z/2) / (1+bz)^2`.
pub fn f_ab(p: ExtremalParams, z: Complex64) -> Result<Complex64> {
    let den = ONE + p.b * z;
    if den.norm() < 1e-14 {
        return Err(Error::Domain("pole of f_ab: 1 + b z = 0".into()));
    }
    Ok(z * (ONE + (p.a + p.b) * z * 0.5) / (den * den))
}

/// `f_{a,b}'(z) = (1+az)/(1+bz)^3`.
pub fn f_ab_deriv(p: ExtremalParams, z: Complex64) -> Result<Complex64> {
    let den = ONE + p.b * z;
    if den.norm() < 1e-14 {
        return Err(Error::Domain("pole of f_ab': 1 + b z = 0".into()));
    }
    Ok((ONE + p.a * z) / (den * den * den))
}

/// `z f_{a,b}'(z) / f_{a,b}(z) = 2(1+az) / ((1+bz)(2+(a+b)z))`.
pub fn f_ab_zlogderiv(p: ExtremalParams, z: Complex64) -> Result<Complex64> {
    let den1 = ONE + p.b * z;
    let den2 = Complex64::new(2.0, 0.0) + (p.a + p.b) * z;
    if den1.norm() < 1e-14 || den2.norm() < 1e-14 {
        return Err(Error::Domain(
            "zero or pole of z f'/f inside evaluation".into(),
        ));
    }
    Ok((ONE + p.a * z) * 2.0 / (den1 * den2))
}

/// Report of the close-to-convexity certificate for `f_{a,b}`.
///
/// `f_{a,b}'(z) / g'(z) = (1+az)/(1+bz)` for the convex comparison
/// `g(z) = z/(1+bz)`; membership in the class holds when the real part
/// stays positive on the disk.
#[derive(Debug, Clone, Copy)]
pub struct CertificateReport {
    pub min_re: f64,
    pub argmin: Complex64,
    pub pass: bool,
}

/// Samples `Re[(1+az)/(1+bz)]` over a polar grid of radius up to 0.999.
pub fn close_to_convex_certificate(p: ExtremalParams, grid_n: usize) -> Result<CertificateReport> {
    if grid_n < 64 {
        return Err(Error::Resolution(format!(
            "certificate grid must be >= 64, got {grid_n}"
        )));
    }
    let mut min_re = f64::INFINITY;
    let mut argmin = Complex64::new(0.0, 0.0);
    for k in 0..=grid_n {
        let radius = 0.999 * k as f64 / grid_n as f64;
        for j in 0..grid_n {
            let z = Complex64::from_polar(radius, TAU * j as f64 / grid_n as f64);
            let v = ((ONE + p.a * z) / (ONE + p.b * z)).re;
            if v < min_re {
                min_re = v;
                argmin = z;
            }
        }
    }
    Ok(CertificateReport {
        min_re,
        argmin,
        pass: min_re > 0.0,
    })
}

/// Value-region parametrization in slot form:
/// `U -> 2u^2/(u+v)`, `W -> 2u/(v(u+v))`, `V -> u/v^3`,
/// for `u`, `v` in the closed unit disk around 1.
pub fn family_map(kind: FamilyKind, u: Complex64, v: Complex64) -> Result<Complex64> {
    if (u - ONE).norm() > 1.0 + 1e-12 || (v - ONE).norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "slots must satisfy |u-1|<=1, |v-1|<=1: got u={u}, v={v}"
        )));
    }
    let sum = u + v;
    match kind {
        FamilyKind::U => {
            if sum.norm() < 1e-14 {
                return Err(Error::Domain("u + v = 0".into()));
            }
            Ok(u * u * 2.0 / sum)
        }
        FamilyKind::W => {
            if sum.norm() < 1e-14 || v.norm() < 1e-14 {
                return Err(Error::Domain("u + v = 0 or v = 0".into()));
            }
            Ok(u * 2.0 / (v * sum))
        }
        FamilyKind::V => {
            if v.norm() < 1e-14 {
                return Err(Error::Domain("v = 0".into()));
            }
            Ok(u / (v * v * v))
        }
    }
}

/// Biernacki's two-slot form `(1+s)^2 / (1 + (s+t)/2)` of the `U` region.
pub fn mobius_u_st(s: Complex64, t: Complex64) -> Result<Complex64> {
    let den = ONE + (s + t) * 0.5;
    if den.norm() < 1e-14 {
        return Err(Error::Domain("1 + (s+t)/2 = 0".into()));
    }
    let num = ONE + s;
    Ok(num * num / den)
}
