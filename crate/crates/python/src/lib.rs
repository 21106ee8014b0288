//! Python bindings for the concave-fs verification lab.

use std::collections::BTreeMap;

use concave_fs::bounds::{self, Extremal};
use concave_fs::concave::{self, CoeffPair, ConcaveGrid};
use concave_fs::oracle::{self, OracleGrid};
use concave_fs::starlike;
use concave_fs::{AlphaParam, Complex64, ComplexSeries, Error};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_alpha(a: f64) -> PyResult<AlphaParam> {
    AlphaParam::new(a).map_err(py_err)
}

/// Truncated power series with complex coefficients.
#[pyclass(name = "Series", frozen)]
struct PySeries(ComplexSeries);

#[pymethods]
impl PySeries {
    #[new]
    fn new(coeffs: Vec<Complex64>) -> PyResult<Self> {
        if coeffs.is_empty() {
            return Err(PyValueError::new_err("series needs at least one coefficient"));
        }
        Ok(Self(ComplexSeries::new(coeffs)))
    }

    #[staticmethod]
    fn identity(order: usize) -> Self {
        Self(ComplexSeries::identity(order))
    }

    #[staticmethod]
    fn linear(a: Complex64, order: usize) -> Self {
        Self(ComplexSeries::linear(a, order))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.0.coeffs().to_vec()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.div(&other.0).map(Self).map_err(py_err)
    }

    fn pow(&self, gamma: f64) -> PyResult<Self> {
        self.0.pow_real(gamma).map(Self).map_err(py_err)
    }

    fn integrate(&self) -> Self {
        Self(self.0.integrate())
    }

    fn derivative(&self) -> PyResult<Self> {
        self.0.derivative().map(Self).map_err(py_err)
    }

    fn truncate(&self, order: usize) -> PyResult<Self> {
        self.0.truncate(order).map(Self).map_err(py_err)
    }

    fn __call__(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Series(order={})", self.0.order())
    }
}

/// First two Schur parameters of a self-map of the disk.
#[pyclass(name = "SchurPoint", frozen)]
struct PySchurPoint(starlike::SchurPoint);

#[pymethods]
impl PySchurPoint {
    #[new]
    fn new(c0: Complex64, c1: Complex64) -> PyResult<Self> {
        starlike::SchurPoint::new(c0, c1).map(Self).map_err(py_err)
    }

    #[getter]
    fn c0(&self) -> Complex64 {
        self.0.c0()
    }

    #[getter]
    fn c1(&self) -> Complex64 {
        self.0.c1()
    }

    fn omega(&self, order: usize) -> PyResult<PySeries> {
        self.0.omega(order).map(PySeries).map_err(py_err)
    }

    /// Coefficients `(phi2, phi3)` of the associated starlike function.
    fn phi23(&self) -> (Complex64, Complex64) {
        starlike::phi23_from_schur(&self.0)
    }

    /// Concave function of opening `alpha` built from this point.
    fn concave_function(&self, alpha: f64, order: usize) -> PyResult<PySeries> {
        concave::extremal_from_schur(to_alpha(alpha)?, &self.0, order).map(PySeries).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("SchurPoint(c0={}, c1={})", self.0.c0(), self.0.c1())
    }
}

#[pyclass(name = "BoundResult", frozen, get_all)]
struct PyBoundResult {
    value: f64,
    regime: String,
    thresholds: BTreeMap<String, f64>,
    extremal_kind: String,
    extremal_param: Option<f64>,
}

#[pymethods]
impl PyBoundResult {
    fn __repr__(&self) -> String {
        format!("BoundResult(value={}, regime={})", self.value, self.regime)
    }
}

fn thresholds_map(t: &bounds::Thresholds) -> BTreeMap<String, f64> {
    [("t0", t.t0), ("t1", t.t1), ("t2", t.t2), ("lam1", t.lam1), ("lam2", t.lam2), ("t3", t.t3), ("t4", t.t4)]
        .into_iter()
        .map(|(k, v)| (k.to_owned(), v))
        .collect()
}

/// Sharp bound of `|a3 - lambda a2^2|` over concave functions of opening `alpha`.
#[pyfunction]
fn fs_bound(alpha: f64, lambda: f64) -> PyResult<PyBoundResult> {
    let b = bounds::fs_bound(to_alpha(alpha)?, lambda);
    let extremal_param = match b.extremal {
        Extremal::CaseDParams { r_m } => Some(r_m),
        Extremal::CaseFTheta { theta0 } => Some(theta0),
        _ => None,
    };
    Ok(PyBoundResult {
        value: b.value,
        regime: b.regime.as_str().to_owned(),
        thresholds: thresholds_map(&b.thresholds),
        extremal_kind: b.extremal.kind().to_owned(),
        extremal_param,
    })
}

#[pyfunction]
fn thresholds(alpha: f64) -> PyResult<BTreeMap<String, f64>> {
    Ok(thresholds_map(&bounds::thresholds(to_alpha(alpha)?)))
}

/// Grid maximum of the reduced functional; returns `(value, c0)`.
#[pyfunction]
#[pyo3(signature = (alpha, lambda, radial_steps=400, angular_steps=400, refine_iters=3))]
fn maximize_reduced(
    alpha: f64,
    lambda: f64,
    radial_steps: usize,
    angular_steps: usize,
    refine_iters: usize,
) -> PyResult<(f64, Complex64)> {
    if radial_steps < 8 || angular_steps < 8 {
        return Err(PyValueError::new_err("grid needs at least 8 steps per axis"));
    }
    let grid = OracleGrid {
        radial_steps,
        angular_steps,
        refine_iters,
    };
    let m = oracle::maximize_reduced(to_alpha(alpha)?, lambda, grid);
    Ok((m.value, m.c0))
}

#[pyfunction]
fn classical_s_bound(lambda: f64) -> PyResult<f64> {
    bounds::classical_s_bound(lambda).map_err(py_err)
}

#[pyfunction]
fn koepf_bound(lambda: f64) -> f64 {
    starlike::koepf_bound(lambda)
}

#[pyfunction]
#[pyo3(signature = (alpha, order=16))]
fn outer_extremal(alpha: f64, order: usize) -> PyResult<PySeries> {
    concave::outer_extremal(to_alpha(alpha)?, order).map(PySeries).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (alpha, lambda, order=16))]
fn case_f_extremal(alpha: f64, lambda: f64, order: usize) -> PyResult<PySeries> {
    concave::case_f_extremal(to_alpha(alpha)?, lambda, order).map(PySeries).map_err(py_err)
}

/// Extremal function for the regime of `lambda`.
#[pyfunction]
#[pyo3(signature = (alpha, lambda, order=16))]
fn regime_extremal(alpha: f64, lambda: f64, order: usize) -> PyResult<PySeries> {
    concave::regime_extremal(to_alpha(alpha)?, lambda, order).map(|r| PySeries(r.series)).map_err(py_err)
}

/// `|a3 - lambda a2^2|` for a normalized series.
#[pyfunction]
fn functional(f: &PySeries, lambda: f64) -> PyResult<f64> {
    CoeffPair::from_series(&f.0).map(|c| concave::functional(c, lambda)).map_err(py_err)
}

#[pyfunction]
fn p_transform(f: &PySeries, alpha: f64, order: usize) -> PyResult<PySeries> {
    concave::p_transform(&f.0, to_alpha(alpha)?, order).map(PySeries).map_err(py_err)
}

/// Minimum of `Re P_f` on a polar grid.
#[pyfunction]
#[pyo3(signature = (f, alpha, radial_steps=64, angular_steps=128, max_radius=0.99))]
fn check_concave(f: &PySeries, alpha: f64, radial_steps: usize, angular_steps: usize, max_radius: f64) -> PyResult<f64> {
    let grid = ConcaveGrid {
        radial_steps,
        angular_steps,
        max_radius,
    };
    concave::check_concave(&f.0, to_alpha(alpha)?, grid).map_err(py_err)
}

#[pymodule]
fn fs_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PySchurPoint>()?;
    m.add_class::<PyBoundResult>()?;
    m.add_function(wrap_pyfunction!(fs_bound, m)?)?;
    m.add_function(wrap_pyfunction!(thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_reduced, m)?)?;
    m.add_function(wrap_pyfunction!(classical_s_bound, m)?)?;
    m.add_function(wrap_pyfunction!(koepf_bound, m)?)?;
    m.add_function(wrap_pyfunction!(outer_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(case_f_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(regime_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(functional, m)?)?;
    m.add_function(wrap_pyfunction!(p_transform, m)?)?;
    m.add_function(wrap_pyfunction!(check_concave, m)?)?;
    Ok(())
}
