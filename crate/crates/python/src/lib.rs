//! Python bindings for `teissier-core`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use teissier_core as core;
use teissier_core::{ColengthMode, ExponentVector, MonomialIdeal};

create_exception!(teissier, TeissierError, PyValueError);

fn py_err(e: core::Error) -> PyErr {
    TeissierError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// An m-primary (or unit) monomial ideal, stored by its minimal generators.
#[pyclass(name = "Ideal", module = "teissier", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyIdeal {
    inner: MonomialIdeal,
}

impl From<MonomialIdeal> for PyIdeal {
    fn from(inner: MonomialIdeal) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyIdeal {
    #[new]
    #[pyo3(signature = (gens, dim=None))]
    fn new(gens: Vec<Vec<u32>>, dim: Option<usize>) -> PyResult<Self> {
        let dim = dim
            .or_else(|| gens.first().map(Vec::len))
            .ok_or_else(|| py_err(core::Error::EmptyGenerators))?;
        MonomialIdeal::normalize(dim, gens.into_iter().map(ExponentVector::new))
            .map(Self::from)
            .map_err(py_err)
    }

    /// Text such as "x^2, x*y, y^3" or the JSON literal.
    #[staticmethod]
    #[pyo3(signature = (text, dim=None))]
    fn parse(text: &str, dim: Option<usize>) -> PyResult<Self> {
        core::format::parse_ideal(text, dim)
            .map(Self::from)
            .map_err(py_err)
    }

    #[staticmethod]
    fn maximal(dim: usize) -> Self {
        MonomialIdeal::maximal(dim).into()
    }

    #[staticmethod]
    fn pure_powers(exponents: Vec<u32>) -> PyResult<Self> {
        MonomialIdeal::pure_powers(&exponents)
            .map(Self::from)
            .map_err(py_err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn gens(&self) -> Vec<Vec<u32>> {
        self.inner.gens().iter().map(|g| g.coords().to_vec()).collect()
    }

    fn is_m_primary(&self) -> bool {
        self.inner.is_m_primary()
    }

    fn contains(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.contains_ideal(&other.inner).map_err(py_err)
    }

    #[pyo3(signature = (mode="sliced"))]
    fn colength(&self, mode: &str) -> PyResult<BigInt> {
        let mode = match mode {
            "sliced" => ColengthMode::Sliced,
            "bruteforce" => ColengthMode::Bruteforce,
            other => return Err(PyValueError::new_err(format!("unknown colength mode {other:?}"))),
        };
        core::colength(&self.inner, mode).map_err(py_err)
    }

    fn multiplicity(&self) -> PyResult<BigInt> {
        core::multiplicity(&self.inner).map_err(py_err)
    }

    /// `{"threshold": N, "e": [e_0, ..., e_d]}`.
    fn hilbert_polynomial<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let poly = core::hilbert_polynomial(&self.inner).map_err(py_err)?;
        to_py(py, &poly.to_json())
    }

    fn product(&self, other: &PyIdeal) -> PyResult<Self> {
        self.inner.product(&other.inner).map(Self::from).map_err(py_err)
    }

    fn power(&self, n: u32) -> PyResult<Self> {
        self.inner.power(n).map(Self::from).map_err(py_err)
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<Self> {
        self.inner.intersect(&other.inner).map(Self::from).map_err(py_err)
    }

    fn colon(&self, other: &PyIdeal) -> PyResult<Self> {
        self.inner.colon(&other.inner).map(Self::from).map_err(py_err)
    }

    fn frobenius_power(&self, n: u32) -> PyResult<Self> {
        self.inner.frobenius_power(n).map(Self::from).map_err(py_err)
    }

    fn integral_closure(&self) -> PyResult<Self> {
        core::integral_closure(&self.inner)
            .map(Self::from)
            .map_err(py_err)
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<Self> {
        self.product(other)
    }

    fn __pow__(&self, n: u32, _modulo: Option<u32>) -> PyResult<Self> {
        self.power(n)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?})", self.gens())
    }
}

#[pyfunction]
fn mixed_multiplicities(i: &PyIdeal, j: &PyIdeal) -> PyResult<Vec<BigInt>> {
    Ok(core::mixed_multiplicities(&i.inner, &j.inner).map_err(py_err)?.e)
}

#[pyfunction]
fn mixed_via_vandermonde(i: &PyIdeal, j: &PyIdeal) -> PyResult<Vec<BigInt>> {
    Ok(core::mixed_via_vandermonde(&i.inner, &j.inner).map_err(py_err)?.e)
}

/// `"equality"` or `"strict"`.
#[pyfunction]
fn minkowski_status(i: &PyIdeal, j: &PyIdeal) -> PyResult<&'static str> {
    Ok(core::minkowski_status(&i.inner, &j.inner)
        .map_err(py_err)?
        .status
        .as_str())
}

#[pyfunction]
fn equality_pipeline<'py>(py: Python<'py>, i: &PyIdeal, j: &PyIdeal) -> PyResult<Bound<'py, PyAny>> {
    let cert = core::equality_pipeline(&i.inner, &j.inner).map_err(py_err)?;
    to_py(py, &cert.to_json())
}

/// Rees's theorem for `j` inside `i`.
#[pyfunction]
fn check_rees<'py>(py: Python<'py>, j: &PyIdeal, i: &PyIdeal) -> PyResult<Bound<'py, PyAny>> {
    let report = core::check_rees(&j.inner, &i.inner).map_err(py_err)?;
    to_py(py, &report.to_json())
}

#[pyfunction]
fn milnor<'py>(py: Python<'py>, exponents: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    let f = core::BrieskornPolynomial::new(exponents).map_err(py_err)?;
    let report = core::milnor_report(&f).map_err(py_err)?;
    to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (seed, count, dim, max_exp, threads=None, oracle=false))]
fn sweep<'py>(
    py: Python<'py>,
    seed: u64,
    count: usize,
    dim: usize,
    max_exp: u32,
    threads: Option<usize>,
    oracle: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let config = core::sweep::SweepConfig {
        seed,
        count,
        dim,
        max_exp,
        threads,
        oracle,
    };
    let report = py.detach(|| core::sweep::sweep(&config)).map_err(py_err)?;
    to_py(py, &report.to_json())
}

/// Runs the command-line front end; returns `(exit_code, output)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let report = core::cli::run(std::iter::once("teissier".to_string()).chain(args));
    (report.exit_code, report.rendered())
}

#[pymodule]
fn teissier(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TeissierError", m.py().get_type::<TeissierError>())?;
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(mixed_multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(mixed_via_vandermonde, m)?)?;
    m.add_function(wrap_pyfunction!(minkowski_status, m)?)?;
    m.add_function(wrap_pyfunction!(equality_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(check_rees, m)?)?;
    m.add_function(wrap_pyfunction!(milnor, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
