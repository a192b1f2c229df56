//! Python module `sfgreen`.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sfgreen_core::green::{self, GreenOptions, NormalizationMethod, RadialGreen};
use sfgreen_core::lorentz::{self, FAlpha, RieszParams};
use sfgreen_core::radial;
use sfgreen_core::spaceform::{ProductConfig, SpaceForm};
use sfgreen_core::spectral::{self, SpectralTruncation, DEFAULT_J_MAX, DEFAULT_NODE_COUNT};
use sfgreen_core::Error;

create_exception!(sfgreen, SfgreenError, PyValueError);

fn py_err(e: Error) -> PyErr {
    SfgreenError::new_err(format!("{}: {e}", e.kind()))
}

fn riemannian(n: usize, k: f64) -> PyResult<SpaceForm> {
    SpaceForm::new(n, k).map_err(py_err)
}

/// Radial Green's function g(r₀) of T - λ₀ on the base space form M^n(k).
#[pyfunction]
#[pyo3(signature = (n, k, lambda0, r0, method=None))]
fn radial_green(n: usize, k: f64, lambda0: f64, r0: f64, method: Option<&str>) -> PyResult<f64> {
    let m = riemannian(n, k)?;
    let method = match method {
        None => None,
        Some("closed_form") => Some(NormalizationMethod::ClosedForm),
        Some("asymptotic_match") => Some(NormalizationMethod::AsymptoticMatch),
        Some(other) => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    let g = RadialGreen::with_options(&m, lambda0, GreenOptions { method, perturb: false }).map_err(py_err)?;
    g.value(r0).map_err(py_err)
}

/// Normalization constant C of the radial Green's function.
#[pyfunction]
fn green_constant(n: usize, k: f64, lambda0: f64) -> PyResult<f64> {
    Ok(green::green_constant(&riemannian(n, k)?, lambda0).map_err(py_err)?.c)
}

/// Radial eigenfunction w(r, λ) with w(0) = 1.
#[pyfunction]
fn eigenfunction_w(n: usize, k: f64, lambda_: f64, r: f64) -> PyResult<f64> {
    radial::eigenfunction_w(&riemannian(n, k)?, lambda_, r).map_err(py_err)
}

/// Atom k(n/2 + j)² of a spherical space form.
#[pyfunction]
fn atom(n: usize, k: f64, j: usize) -> PyResult<f64> {
    Ok(radial::atom(&riemannian(n, k)?, j))
}

/// Spectral measure as (λ values, masses): atoms for k > 0, quadrature of the
/// density for k < 0.
#[pyfunction]
#[pyo3(signature = (n, k, j_max=DEFAULT_J_MAX, node_count=DEFAULT_NODE_COUNT, lambda_max=None))]
fn spectral_measure(
    n: usize,
    k: f64,
    j_max: usize,
    node_count: usize,
    lambda_max: Option<f64>,
) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let rep = spectral::spectral_measure(&riemannian(n, k)?, &SpectralTruncation { j_max, lambda_max, node_count })
        .map_err(py_err)?;
    Ok((rep.lambdas().to_vec(), rep.masses()))
}

/// Spectral density at λ (k < 0).
#[pyfunction]
fn spectral_density(n: usize, k: f64, lambda_: f64) -> PyResult<f64> {
    spectral::spectral_density(&riemannian(n, k)?, lambda_).map_err(py_err)
}

/// Product kernel K(r₀, r̄) as (value, relative truncation error).
/// `config` is the JSON product configuration.
#[pyfunction]
#[pyo3(signature = (config, r0, rbar, tol=1e-6))]
fn product_kernel(config: &str, r0: f64, rbar: Vec<f64>, tol: f64) -> PyResult<(f64, f64)> {
    let cfg = ProductConfig::from_json(config).map_err(py_err)?;
    let k = green::product_kernel(&cfg, r0, &rbar, tol).map_err(py_err)?;
    Ok((k.value, k.truncation_error))
}

/// Riesz kernel g_α(s) on a Lorentzian space form.
#[pyfunction]
#[pyo3(signature = (n, k, alpha, s, lambda_shift=0.0))]
fn riesz_kernel(n: usize, k: f64, alpha: Complex64, s: f64, lambda_shift: f64) -> PyResult<Complex64> {
    let m = SpaceForm::lorentzian(n, k).map_err(py_err)?;
    let p = RieszParams::new(alpha, m, lambda_shift).map_err(py_err)?;
    lorentz::riesz_kernel(&p, s).map_err(py_err)
}

/// f_α at the given radii on a Lorentzian space form.
#[pyfunction]
#[pyo3(signature = (n, k, alpha, r0, lambda_shift=1.0, j_max=512))]
fn f_alpha(
    n: usize,
    k: f64,
    alpha: Complex64,
    r0: Vec<f64>,
    lambda_shift: f64,
    j_max: usize,
) -> PyResult<Vec<Complex64>> {
    let m = SpaceForm::lorentzian(n, k).map_err(py_err)?;
    let p = RieszParams::new(alpha, m, lambda_shift).map_err(py_err)?;
    let f = FAlpha::new(&p, j_max).map_err(py_err)?;
    r0.iter().map(|&r| f.value(r).map_err(py_err)).collect()
}

#[pymodule]
fn sfgreen(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SfgreenError", m.py().get_type::<SfgreenError>())?;
    m.add_function(wrap_pyfunction!(radial_green, m)?)?;
    m.add_function(wrap_pyfunction!(green_constant, m)?)?;
    m.add_function(wrap_pyfunction!(eigenfunction_w, m)?)?;
    m.add_function(wrap_pyfunction!(atom, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_measure, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_density, m)?)?;
    m.add_function(wrap_pyfunction!(product_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(riesz_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(f_alpha, m)?)?;
    Ok(())
}
