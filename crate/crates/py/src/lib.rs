//! Python module `apdenom`.
//!
//! Integers cross the boundary as Python `int`, rationals as
//! `(numerator, denominator)` tuples. Bernoulli numbers are memoized in one
//! process-wide cache guarded by a mutex.

use std::sync::{Mutex, MutexGuard, OnceLock};

use ::apdenom as core;
use core::verify::{SweepConfig, TheoremId};
use core::{BernoulliCache, Error, ProgressionSpec, Rational, RationalPoly, SequenceId};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(apdenom, DomainError, PyValueError);
create_exception!(apdenom, TheoremViolation, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TheoremViolation(_) => TheoremViolation::new_err(e.to_string()),
        _ => DomainError::new_err(e.to_string()),
    }
}

fn cache() -> MutexGuard<'static, BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE
        .get_or_init(|| Mutex::new(BernoulliCache::new()))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn pair(q: &Rational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

fn rational(num: BigInt, den: BigInt) -> PyResult<Rational> {
    if den == BigInt::from(0) {
        return Err(DomainError::new_err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Polynomial with exact rational coefficients.
#[pyclass(name = "RationalPoly", frozen)]
struct PyPoly {
    inner: RationalPoly,
}

#[pymethods]
impl PyPoly {
    /// `(num, den)` pairs in ascending degree order.
    fn coefficients(&self) -> Vec<(BigInt, BigInt)> {
        self.inner.coeffs().iter().map(pair).collect()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn denominator(&self) -> BigInt {
        self.inner.denominator()
    }

    fn is_integral(&self) -> bool {
        self.inner.is_integral()
    }

    /// Evaluates at `num/den` and returns `(num, den)`.
    #[pyo3(signature = (num, den = BigInt::from(1)))]
    fn eval(&self, num: BigInt, den: BigInt) -> PyResult<(BigInt, BigInt)> {
        Ok(pair(&self.inner.eval(&rational(num, den)?)))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RationalPoly({})", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn poly(inner: RationalPoly) -> PyPoly {
    PyPoly { inner }
}

#[pyfunction]
fn digit_sum(p: BigInt, n: BigInt) -> PyResult<BigInt> {
    core::digit_sum(&p, &n).map_err(to_py)
}

#[pyfunction]
fn expand(n: BigInt, base: BigInt) -> PyResult<Vec<BigInt>> {
    Ok(core::expand(&n, &base).map_err(to_py)?.digits().to_vec())
}

#[pyfunction]
fn p_valuation(p: BigInt, n: BigInt) -> PyResult<u64> {
    core::p_valuation(&p, &n).map_err(to_py)
}

/// Returns `(value, primes)`.
#[pyfunction]
fn radical(k: u64) -> PyResult<(BigInt, Vec<u64>)> {
    let r = core::radical(k).map_err(to_py)?;
    Ok((r.value().clone(), r.primes().to_vec()))
}

#[pyfunction]
fn primes_up_to(bound: u64) -> Vec<u64> {
    core::primes_up_to(bound)
}

#[pyfunction]
fn bernoulli_number(n: u64) -> (BigInt, BigInt) {
    pair(&core::bernoulli_number(&mut cache(), n))
}

#[pyfunction]
fn bernoulli_polynomial(n: u64) -> PyPoly {
    poly(core::bernoulli_polynomial(&mut cache(), n))
}

#[pyfunction]
#[pyo3(signature = (n, num, den = BigInt::from(1)))]
fn bernoulli_poly_at(n: u64, num: BigInt, den: BigInt) -> PyResult<(BigInt, BigInt)> {
    let q = rational(num, den)?;
    Ok(pair(&core::bernoulli_poly_at(&mut cache(), n, &q)))
}

#[pyfunction]
fn d_formula(n: u64) -> PyResult<BigInt> {
    Ok(core::d_formula(n).map_err(to_py)?.into_value())
}

#[pyfunction]
fn dd_formula(n: u64) -> PyResult<BigInt> {
    Ok(core::dd_formula(n).map_err(to_py)?.into_value())
}

#[pyfunction]
fn db_formula(n: u64) -> PyResult<BigInt> {
    Ok(core::db_formula(n).map_err(to_py)?.into_value())
}

#[pyfunction]
fn d_direct(n: u64) -> PyResult<BigInt> {
    core::d_direct(&mut cache(), n).map_err(to_py)
}

#[pyfunction]
fn dd_direct(n: u64) -> PyResult<BigInt> {
    core::dd_direct(&mut cache(), n).map_err(to_py)
}

#[pyfunction]
fn db_direct(n: u64) -> PyResult<BigInt> {
    core::db_direct(&mut cache(), n).map_err(to_py)
}

#[pyfunction]
fn dd_quotient(n: u64) -> PyResult<BigInt> {
    core::dd_quotient(n).map_err(to_py)
}

#[pyfunction]
fn db_quotient(n: u64) -> PyResult<BigInt> {
    core::db_quotient(n).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (p, q, cap = core::denom::DEFAULT_SEARCH_CAP))]
fn first_index_digit_sum_reaches(p: u64, q: u64, cap: u64) -> PyResult<u64> {
    core::first_index_digit_sum_reaches(p, q, cap).map_err(to_py)
}

fn spec(m: BigInt, r: BigInt, n: u64) -> PyResult<ProgressionSpec> {
    ProgressionSpec::new(m, r, n).map_err(to_py)
}

#[pyfunction]
fn power_sum_poly(m: BigInt, r: BigInt, n: u64) -> PyResult<PyPoly> {
    let s = spec(m, r, n)?;
    Ok(poly(core::power_sum_poly(&mut cache(), &s)))
}

#[pyfunction]
fn power_sum_naive(m: BigInt, r: BigInt, n: u64, x: u64) -> PyResult<BigInt> {
    Ok(core::power_sum_naive(&spec(m, r, n)?, x))
}

#[pyfunction]
fn power_sum_denominator(m: BigInt, r: BigInt, n: u64) -> PyResult<BigInt> {
    core::power_sum_denominator(&spec(m, r, n)?).map_err(to_py)
}

#[pyfunction]
fn is_integral(m: BigInt, r: BigInt, n: u64) -> PyResult<bool> {
    core::is_integral(&spec(m, r, n)?).map_err(to_py)
}

#[pyfunction]
fn power_sum_difference(m: BigInt, r1: BigInt, r2: BigInt, n: u64) -> PyResult<PyPoly> {
    let d = core::power_sum_difference(&mut cache(), &m, &r1, &r2, n).map_err(to_py)?;
    Ok(poly(d))
}

#[pyfunction]
fn am_integer(m: BigInt, r: BigInt, n: u64) -> PyResult<BigInt> {
    Ok(core::am_integer(&mut cache(), &m, &r, n).map_err(to_py)?.value)
}

#[pyfunction]
fn am_congruence_check(m: BigInt, r: BigInt, n: u64, p: u64, e: u64) -> PyResult<bool> {
    core::am_congruence_check(&mut cache(), &m, &r, n, p, e).map_err(to_py)
}

#[pyfunction]
fn c_coeff(n: u64, k: u64) -> PyResult<(BigInt, BigInt)> {
    Ok(pair(&core::c_coeff(n, k).map_err(to_py)?))
}

/// Sequence terms as `[(index, value), ...]`.
#[pyfunction]
fn sequence(id: &str, start: u64, stop: u64) -> PyResult<Vec<(u64, BigInt)>> {
    let id: SequenceId = id.parse().map_err(to_py)?;
    Ok(core::seq::terms(id, start, stop).map_err(to_py)?.terms)
}

/// Sequence terms rendered as b-file or CSV text.
#[pyfunction]
#[pyo3(signature = (id, start, stop, format = "bfile"))]
fn sequence_text(id: &str, start: u64, stop: u64, format: &str) -> PyResult<String> {
    let id: SequenceId = id.parse().map_err(to_py)?;
    let format = format.parse().map_err(to_py)?;
    let t = core::seq::terms(id, start, stop).map_err(to_py)?;
    Ok(core::seq::format_terms(&t.terms, format))
}

/// Runs a sweep; missing bounds take the sweep's defaults.
#[pyfunction]
#[pyo3(signature = (theorem, max_n = None, m_max = None, r_max = None, jobs = None))]
fn verify<'py>(
    py: Python<'py>,
    theorem: &str,
    max_n: Option<u64>,
    m_max: Option<u64>,
    r_max: Option<u64>,
    jobs: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let theorem: TheoremId = theorem.parse().map_err(to_py)?;
    let d = theorem.default_config();
    let config = SweepConfig {
        max_n: max_n.unwrap_or(d.max_n),
        m_max: m_max.unwrap_or(d.m_max),
        r_max: r_max.unwrap_or(d.r_max),
        jobs,
    };
    let report = py
        .detach(|| core::verify::run(theorem, &config))
        .map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("theorem", report.theorem.name())?;
    out.set_item("range", &report.range)?;
    out.set_item("checked", report.checked)?;
    out.set_item("elapsed", report.elapsed.as_secs_f64())?;
    let failures: Vec<(String, String, String)> = report
        .failures
        .into_iter()
        .map(|f| (f.input, f.expected, f.actual))
        .collect();
    out.set_item("failures", failures)?;
    Ok(out)
}

#[pymodule]
fn apdenom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DomainError", m.py().get_type::<DomainError>())?;
    m.add("TheoremViolation", m.py().get_type::<TheoremViolation>())?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(digit_sum, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(p_valuation, m)?)?;
    m.add_function(wrap_pyfunction!(radical, m)?)?;
    m.add_function(wrap_pyfunction!(primes_up_to, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_number, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_poly_at, m)?)?;
    m.add_function(wrap_pyfunction!(d_formula, m)?)?;
    m.add_function(wrap_pyfunction!(dd_formula, m)?)?;
    m.add_function(wrap_pyfunction!(db_formula, m)?)?;
    m.add_function(wrap_pyfunction!(d_direct, m)?)?;
    m.add_function(wrap_pyfunction!(dd_direct, m)?)?;
    m.add_function(wrap_pyfunction!(db_direct, m)?)?;
    m.add_function(wrap_pyfunction!(dd_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(db_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(first_index_digit_sum_reaches, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_poly, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_naive, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_denominator, m)?)?;
    m.add_function(wrap_pyfunction!(is_integral, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_difference, m)?)?;
    m.add_function(wrap_pyfunction!(am_integer, m)?)?;
    m.add_function(wrap_pyfunction!(am_congruence_check, m)?)?;
    m.add_function(wrap_pyfunction!(c_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_text, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
