//! Python bindings for the varreg library.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use varreg::regions::{self, Family, RegionSpec};
use varreg::solvers;

fn err(e: varreg::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// F(z) = (3 + conj z)(1+z)^3 / (3 + 3z + conj z + z^2).
#[pyfunction]
fn f_eval(z: Complex64) -> PyResult<Complex64> {
    varreg::envelope::f_eval(z).map_err(err)
}

/// Continuous branch G = log F with G(0) = 0.
#[pyfunction]
fn g_eval(z: Complex64) -> PyResult<Complex64> {
    varreg::envelope::g_eval(z).map_err(err)
}

/// Jacobian |G_z|^2 - |G_zbar|^2 of G.
#[pyfunction]
fn jacobian_g(z: Complex64) -> PyResult<f64> {
    varreg::envelope::jacobian_g(z).map_err(err)
}

/// Boundary curve of a region as a list of (param, point) pairs.
#[pyfunction]
#[pyo3(signature = (family, r, n = 1024))]
fn boundary_curve(family: &str, r: f64, n: usize) -> PyResult<Vec<(f64, Complex64)>> {
    let spec = RegionSpec::new(family.parse::<Family>().map_err(err)?, r).map_err(err)?;
    let curve = regions::boundary_curve(spec, n).map_err(err)?;
    Ok(curve
        .polyline
        .params()
        .iter()
        .copied()
        .zip(curve.polyline.points().iter().copied())
        .collect())
}

/// Brute-force oracle cloud of a region.
#[pyfunction]
#[pyo3(signature = (family, r, n_outer = 64, n_inner = 64))]
fn oracle_cloud(family: &str, r: f64, n_outer: usize, n_inner: usize) -> PyResult<Vec<Complex64>> {
    let spec = RegionSpec::new(family.parse::<Family>().map_err(err)?, r).map_err(err)?;
    Ok(regions::oracle_cloud(spec, n_outer, n_inner).map_err(err)?.points)
}

/// Limit of the LU boundary as r -> 1.
#[pyfunction]
fn limit_curve_gamma(t: f64) -> PyResult<Complex64> {
    regions::limit_curve_gamma(t).map_err(err)
}

/// Log(1 + e^{it}) on |t| < pi.
#[pyfunction]
fn limit_curve_tau(t: f64) -> PyResult<Complex64> {
    regions::limit_curve_tau(t).map_err(err)
}

/// Symmetric Hausdorff distance between two point clouds.
#[pyfunction]
fn hausdorff(a: Vec<Complex64>, b: Vec<Complex64>) -> PyResult<f64> {
    varreg::predicates::hausdorff(&a, &b).map_err(err)
}

/// Radius of starlikeness of the close-to-convex class (4 sqrt 2 - 5).
#[pyfunction]
#[pyo3(signature = (tol = 1e-7))]
fn starlike_radius(tol: f64) -> PyResult<f64> {
    solvers::starlike_radius(tol).map_err(err)
}

/// Radius beyond which the LU/LW boundaries stop being convex.
#[pyfunction]
#[pyo3(signature = (tol = 1e-4))]
fn nonconvexity_threshold(tol: f64) -> PyResult<f64> {
    solvers::nonconvexity_threshold(tol).map_err(err)
}

/// Witness reaching a target in the LW strip |Im| < 3 pi / 2:
/// returns ((r, s, t), (a, b, rho)).
#[pyfunction]
#[pyo3(signature = (target, tol = 1e-9))]
fn lw_witness(
    target: Complex64,
    tol: f64,
) -> PyResult<((f64, f64, f64), (Complex64, Complex64, f64))> {
    let (triple, wit) = solvers::lw_witness(target, tol).map_err(err)?;
    Ok(((triple.r, triple.s, triple.t), (wit.a, wit.b, wit.rho)))
}

/// Witness (z, w) with Log(1+z) - 3 Log(1+w) = target, |Im target| < 2 pi.
#[pyfunction]
#[pyo3(signature = (target, tol = 1e-9))]
fn lv_witness(target: Complex64, tol: f64) -> PyResult<(Complex64, Complex64)> {
    solvers::lv_witness(target, tol).map_err(err)
}

#[pymodule]
fn _varreg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", varreg::VERSION)?;
    m.add_function(wrap_pyfunction!(f_eval, m)?)?;
    m.add_function(wrap_pyfunction!(g_eval, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian_g, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_curve, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_cloud, m)?)?;
    m.add_function(wrap_pyfunction!(limit_curve_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(limit_curve_tau, m)?)?;
    m.add_function(wrap_pyfunction!(hausdorff, m)?)?;
    m.add_function(wrap_pyfunction!(starlike_radius, m)?)?;
    m.add_function(wrap_pyfunction!(nonconvexity_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(lw_witness, m)?)?;
    m.add_function(wrap_pyfunction!(lv_witness, m)?)?;
    Ok(())
}
