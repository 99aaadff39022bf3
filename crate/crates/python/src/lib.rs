//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs accept anything whose `str()` is an integer, `p/q` or a decimal.

use gregzeta_core::arith::{self, Rational};
use gregzeta_core::asymptotic::{self, EpsilonVector};
use gregzeta_core::bernoulli::BernoulliCache;
use gregzeta_core::error::Error;
use gregzeta_core::gregory;
use gregzeta_core::index_sets::{self, IndexFamily};
use gregzeta_core::poly::Poly;
use gregzeta_core::table::{self, TableBounds, TableName};
use gregzeta_core::verify::{self, CheckId, Profile};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.to_string(),))
}

fn fractions<'py>(py: Python<'py>, qs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = qs
        .iter()
        .map(|q| fraction(py, q))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    arith::parse(&obj.str()?.to_cow()?).map_err(to_py)
}

fn rationals(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(rational).collect()
}

/// A polynomial with exact rational coefficients.
#[pyclass(
    name = "Polynomial",
    module = "gregzeta",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial {
    inner: Poly,
}

#[pymethods]
impl PyPolynomial {
    /// Coefficients from the constant term upwards.
    #[new]
    #[pyo3(signature = (coeffs, var = 'a'))]
    fn new(coeffs: Vec<Bound<'_, PyAny>>, var: char) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: Poly::new(var, rationals(&coeffs)?),
        })
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.inner.coeffs())
    }

    #[getter]
    fn var(&self) -> char {
        self.inner.variable()
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn derivative(&self) -> Self {
        PyPolynomial {
            inner: self.inner.derivative(),
        }
    }

    fn __call__<'py>(
        &self,
        py: Python<'py>,
        at: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.eval(&rational(at)?))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner * &other.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

fn wrap(p: Poly) -> PyPolynomial {
    PyPolynomial { inner: p }
}

/// Outcome of one identity check.
#[pyclass(name = "CheckReport", module = "gregzeta", frozen, get_all)]
pub struct PyCheckReport {
    check_id: String,
    range: String,
    passed: bool,
    counterexample: Option<(String, String, String)>,
    elapsed_ms: f64,
}

#[pymethods]
impl PyCheckReport {
    fn __repr__(&self) -> String {
        let status = if self.passed { "passed" } else { "FAILED" };
        format!("CheckReport({} {status}, {})", self.check_id, self.range)
    }
}

impl From<verify::CheckReport> for PyCheckReport {
    fn from(r: verify::CheckReport) -> Self {
        PyCheckReport {
            check_id: r.check_id.to_string(),
            range: r.range,
            passed: r.passed,
            counterexample: r.counterexample.map(|c| (c.params, c.lhs, c.rhs)),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}

fn bern() -> &'static BernoulliCache {
    BernoulliCache::global()
}

/// Bernoulli number `B_n` with `B_1 = +1/2`.
#[pyfunction]
fn bernoulli(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &bern().number(n))
}

/// Bernoulli polynomial `B_n(a)`.
#[pyfunction]
fn bernoulli_polynomial(n: usize) -> PyPolynomial {
    wrap(bern().polynomial(n))
}

/// `C^(d)` for a 0/1 vector `d` of length `r - 1`.
#[pyfunction]
fn coefficient(py: Python<'_>, d: Vec<u8>) -> PyResult<Bound<'_, PyAny>> {
    if d.len() >= verify::MAX_R {
        return Err(PyValueError::new_err(format!(
            "r = {} exceeds {}",
            d.len() + 1,
            verify::MAX_R
        )));
    }
    let set = index_sets::enumerate(&IndexFamily::D { d }).map_err(to_py)?;
    fraction(py, &index_sets::coefficient_c(&set, bern()))
}

/// `C_{i,r}`, `1 <= i <= r <= 8`.
#[pyfunction]
fn c_ir(py: Python<'_>, i: usize, r: usize) -> PyResult<Bound<'_, PyAny>> {
    check_ir(i, r)?;
    fraction(py, &index_sets::c_ir(i, r, bern()))
}

/// `C_{i,r}(a)` as a polynomial in `a`.
#[pyfunction]
fn c_ir_poly(i: usize, r: usize) -> PyResult<PyPolynomial> {
    check_ir(i, r)?;
    Ok(wrap(index_sets::c_ir_poly(i, r, bern())))
}

fn check_ir(i: usize, r: usize) -> PyResult<()> {
    if i == 0 || i > r || r > verify::MAX_R {
        return Err(PyValueError::new_err(format!(
            "need 1 <= i <= r <= {}, got i={i}, r={r}",
            verify::MAX_R
        )));
    }
    Ok(())
}

fn check_mn(m: usize, n: usize) -> PyResult<()> {
    if m > verify::MAX_ORDER || n > verify::MAX_ORDER {
        return Err(PyValueError::new_err(format!(
            "indices are limited to {}",
            verify::MAX_ORDER
        )));
    }
    Ok(())
}

/// Generalized Gregory coefficient `G_{m,n}`.
#[pyfunction]
fn gregory_coefficient(py: Python<'_>, m: usize, n: usize) -> PyResult<Bound<'_, PyAny>> {
    check_mn(m, n)?;
    fraction(py, gregory::generalized_gregory(m, n).get(m, n))
}

/// `Gtilde_{m,n}`, `m, n >= 1`.
#[pyfunction]
fn gtilde_coefficient(py: Python<'_>, m: usize, n: usize) -> PyResult<Bound<'_, PyAny>> {
    check_mn(m, n)?;
    if m == 0 || n == 0 {
        return Err(PyValueError::new_err("Gtilde_{m,n} needs m, n >= 1"));
    }
    fraction(py, gregory::gtilde(m, n).get(m, n))
}

/// `G^(1)_{m,n}`.
#[pyfunction]
fn g1_coefficient(py: Python<'_>, m: usize, n: usize) -> PyResult<Bound<'_, PyAny>> {
    check_mn(m, n)?;
    fraction(py, gregory::g1(m, n).get(m, n))
}

/// `G_{m,n}(a)` as a polynomial in `a`.
#[pyfunction]
fn gregory_polynomial(m: usize, n: usize) -> PyResult<PyPolynomial> {
    if m + n > 12 {
        return Err(PyValueError::new_err("m + n is limited to 12"));
    }
    Ok(wrap(
        gregory::generalized_gregory_poly(m, n).get(m, n).clone(),
    ))
}

/// Classical Gregory coefficients `G_0, ..., G_n`.
#[pyfunction]
fn gregory_numbers(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyList>> {
    check_mn(n, 0)?;
    fractions(py, &gregory::classical_gregory(n))
}

/// `lambda_1(a), ..., lambda_n(a)`.
#[pyfunction]
fn lambda_polynomials(n: usize) -> PyResult<Vec<PyPolynomial>> {
    check_mn(n, 0)?;
    Ok(gregory::lambda_polys(n).into_iter().map(wrap).collect())
}

/// Main term of the expansion of `zeta(eps_1, ..., eps_r)` at the origin, or
/// of its Hurwitz analogue when shifts `a` are given. The `O(|eps|)`
/// remainder is not part of the value.
#[pyfunction]
#[pyo3(signature = (eps, a = None))]
fn main_term<'py>(
    py: Python<'py>,
    eps: Vec<Bound<'py, PyAny>>,
    a: Option<Vec<Bound<'py, PyAny>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let e = EpsilonVector::new(rationals(&eps)?).map_err(to_py)?;
    let value = match a {
        Some(a) => asymptotic::main_term_hurwitz(&e, &rationals(&a)?, bern()),
        None => asymptotic::main_term(&e, bern()),
    }
    .map_err(to_py)?;
    fraction(py, &value)
}

/// A named table rendered as `json`, `csv` or `markdown`.
#[pyfunction]
#[pyo3(signature = (name, format = "json", rows = None, cols = None))]
fn render_table(
    name: &str,
    format: &str,
    rows: Option<usize>,
    cols: Option<usize>,
) -> PyResult<String> {
    let name: TableName = name.parse().map_err(to_py)?;
    let d = name.default_bounds();
    let bounds = TableBounds {
        rows: rows.unwrap_or(d.rows),
        cols: cols.unwrap_or(d.cols),
    };
    let t = table::build(name, Some(bounds), bern()).map_err(to_py)?;
    match format {
        "json" => Ok(t.to_json()),
        "csv" => Ok(t.to_csv()),
        "markdown" => Ok(t.to_markdown()),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

fn profile(name: &str) -> PyResult<Profile> {
    name.parse().map_err(to_py)
}

/// Runs one identity check by id.
#[pyfunction]
#[pyo3(signature = (check_id, profile = "quick"))]
fn run_check(py: Python<'_>, check_id: &str, profile: &str) -> PyResult<PyCheckReport> {
    let id: CheckId = check_id.parse().map_err(to_py)?;
    let bounds = self::profile(profile)?.bounds();
    let report = py
        .detach(|| verify::run_check(id, &bounds, bern()))
        .map_err(to_py)?;
    Ok(report.into())
}

/// Runs every identity check.
#[pyfunction]
#[pyo3(signature = (profile = "quick"))]
fn run_all(py: Python<'_>, profile: &str) -> PyResult<Vec<PyCheckReport>> {
    let p = self::profile(profile)?;
    let reports = py.detach(|| verify::run_all(p, bern()));
    Ok(reports.into_iter().map(Into::into).collect())
}

/// Identifiers of the registered checks.
#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    CheckId::ALL.iter().map(|c| c.as_str()).collect()
}

#[pymodule]
fn gregzeta(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyCheckReport>()?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(c_ir, m)?)?;
    m.add_function(wrap_pyfunction!(c_ir_poly, m)?)?;
    m.add_function(wrap_pyfunction!(gregory_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(gtilde_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(g1_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(gregory_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(gregory_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_polynomials, m)?)?;
    m.add_function(wrap_pyfunction!(main_term, m)?)?;
    m.add_function(wrap_pyfunction!(render_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_all, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    Ok(())
}
