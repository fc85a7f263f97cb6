//! Python bindings: partitions, truncated series, the catalog builders, the
//! brute-force oracles and single-case verification.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fixed_hooks::catalog::{self, Params, TheoremId, Variant};
use fixed_hooks::oracle::{self, HookQuery};
use fixed_hooks::partition::{self, Family};
use fixed_hooks::series::{self, LaurentSeries, PochCount, PochSpec, SeriesError, Sign};
use fixed_hooks::verify::{self, IdentityCase};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn series_err(e: SeriesError) -> PyErr {
    match e {
        SeriesError::ZeroSeries | SeriesError::NonUnitLeading(_) => PyZeroDivisionError::new_err(e.to_string()),
        _ => value_err(e),
    }
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(value_err)
}

/// An integer partition with cached conjugate.
#[pyclass(name = "Partition", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(partition::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        partition::Partition::new(parts).map(PyPartition).map_err(value_err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn hook_length(&self, i: usize, j: usize) -> PyResult<usize> {
        self.0.hook_length(i, j).map_err(value_err)
    }

    fn column_hooks(&self, m: usize) -> Vec<usize> {
        self.0.column_hooks(m)
    }

    /// Rows `i` whose hook in column `m` has length `i + h`.
    fn fixed_hook_rows(&self, m: usize, h: i64) -> Vec<usize> {
        self.0.fixed_hook_rows(m, h).collect()
    }

    fn is_odd(&self) -> bool {
        self.0.is_odd()
    }

    fn is_distinct(&self) -> bool {
        self.0.is_distinct()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A Laurent series known exactly below `q^order`.
#[pyclass(name = "Series", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySeries(LaurentSeries);

#[pymethods]
impl PySeries {
    /// `coeffs[i]` is the coefficient of `q^(min_exp + i)`.
    #[new]
    #[pyo3(signature = (coeffs, order, min_exp = 0))]
    fn new(coeffs: Vec<i64>, order: i64, min_exp: i64) -> Self {
        PySeries(LaurentSeries::from_coeffs(min_exp, coeffs, order))
    }

    #[getter]
    fn order(&self) -> i64 {
        self.0.order()
    }

    #[getter]
    fn min_exp(&self) -> i64 {
        self.0.min_exp()
    }

    /// Coefficient of `q^exp`; `None` at or above the order.
    fn coeff(&self, exp: i64) -> Option<i64> {
        self.0.coeff(exp)
    }

    /// Coefficients of `q^0 .. q^(order-1)`.
    fn coefficients(&self) -> Vec<i64> {
        self.0.nonnegative_coefficients()
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    fn terms(&self) -> Vec<(i64, i64)> {
        self.0.terms().collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn truncate(&self, order: i64) -> PyResult<Self> {
        self.0.truncate(order).map(PySeries).map_err(series_err)
    }

    fn shift(&self, exp: i64) -> Self {
        PySeries(self.0.shift(exp))
    }

    fn reciprocal(&self) -> PyResult<Self> {
        self.0.reciprocal().map(PySeries).map_err(series_err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(PySeries).map_err(series_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(PySeries).map_err(series_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(PySeries).map_err(series_err)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PySeries).map_err(series_err)
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (n, family = "all"))]
fn partitions(n: usize, family: &str) -> PyResult<Vec<PyPartition>> {
    Ok(partition::enumerate(n, self::family(family)?).into_iter().map(PyPartition).collect())
}

/// `(a; q^step)_count` with `a = sign * q^base_exp`, so `sign="+"` gives `(q^base_exp; q^step)_count`
/// and `sign="-"` gives `(-q^base_exp; q^step)_count`; `count=None` is the infinite product.
#[pyfunction]
#[pyo3(signature = (base_exp, step, count, order, sign = "+"))]
fn pochhammer(base_exp: i64, step: i64, count: Option<u64>, order: i64, sign: &str) -> PyResult<PySeries> {
    let sign = match sign {
        "+" | "plus" => Sign::Plus,
        "-" | "minus" => Sign::Minus,
        other => return Err(value_err(format!("sign must be '+' or '-', got '{other}'"))),
    };
    let count = count.map_or(PochCount::Infinite, PochCount::Finite);
    let spec = PochSpec { sign, base_exp, step, count };
    series::pochhammer(spec, order).map(PySeries).map_err(series_err)
}

#[pyfunction]
#[pyo3(signature = (a, b, order, step = 1))]
fn gauss_binomial(a: i64, b: i64, order: i64, step: i64) -> PyResult<PySeries> {
    series::gauss_binomial(a, b, step, order).map(PySeries).map_err(series_err)
}

#[pyfunction]
#[pyo3(signature = (n, order, step = 1))]
fn inverse_q_factorial(n: i64, order: i64, step: i64) -> PyResult<PySeries> {
    series::inverse_q_factorial(n, step, order).map(PySeries).map_err(series_err)
}

fn variant(v: Option<&str>) -> PyResult<Option<Variant>> {
    v.map(|s| s.parse::<Variant>().map_err(value_err)).transpose()
}

/// Tag names accepted by `build` and `verify`.
#[pyfunction]
fn theorems() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.name()).collect()
}

#[pyfunction]
#[pyo3(signature = (theorem, order, m = None, k = None, h = None, variant = None))]
fn build(
    theorem: &str,
    order: usize,
    m: Option<usize>,
    k: Option<usize>,
    h: Option<i64>,
    variant: Option<&str>,
) -> PyResult<PySeries> {
    let t: TheoremId = theorem.parse().map_err(value_err)?;
    catalog::build(t, Params::new(m, k, h), order, self::variant(variant)?).map(PySeries).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (n, m, h, k, family = "all"))]
fn count_fixed_by_part(n: usize, m: usize, h: i64, k: usize, family: &str) -> PyResult<u64> {
    oracle::count_fixed_by_part(HookQuery::new(n, m, h, k), self::family(family)?).map_err(value_err)
}

/// `k=None` sums over every hook size.
#[pyfunction]
#[pyo3(signature = (n, m, h, k = None, family = "all"))]
fn count_fixed_by_hook(n: usize, m: usize, h: i64, k: Option<usize>, family: &str) -> PyResult<u64> {
    let w = oracle::fixed_by_hook_witnesses(n, m, h, k, self::family(family)?).map_err(value_err)?;
    Ok(w.len() as u64)
}

#[pyfunction]
#[pyo3(signature = (n, k, m = None, family = "all"))]
fn count_hooks_of_size(n: usize, k: usize, m: Option<usize>, family: &str) -> PyResult<u64> {
    Ok(oracle::count_hooks_of_size(n, k, m, self::family(family)?))
}

#[pyfunction]
fn count_colored_thm11(n: usize, m: usize) -> u64 {
    oracle::count_colored_thm11(n, m)
}

#[pyfunction]
fn count_restricted_thm12(n: usize, m: usize, h: i64) -> u64 {
    oracle::count_restricted_thm12(n, m, h)
}

#[pyfunction]
fn count_colored_thm13(weight: i64, m: usize, k: usize) -> u64 {
    oracle::count_colored_thm13(weight, m, k)
}

/// Checks one case; returns `status`, `first_mismatch` as
/// `(exponent, coefficient, oracle, against)` or `None`, and `note`.
#[pyfunction]
#[pyo3(signature = (theorem, order, m = None, k = None, h = None, variant = None))]
fn verify_case<'py>(
    py: Python<'py>,
    theorem: &str,
    order: usize,
    m: Option<usize>,
    k: Option<usize>,
    h: Option<i64>,
    variant: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let t: TheoremId = theorem.parse().map_err(value_err)?;
    let case = IdentityCase::new(t, Params::new(m, k, h), order, self::variant(variant)?);
    let report = py.detach(|| verify::run_case(case));
    let out = PyDict::new(py);
    out.set_item("case", case.to_string())?;
    out.set_item("status", report.status.name())?;
    out.set_item(
        "first_mismatch",
        report.first_mismatch.map(|mm| (mm.exponent, mm.coefficient, mm.oracle, mm.against)),
    )?;
    out.set_item("note", report.note)?;
    Ok(out)
}

#[pymodule]
fn fixed_hooks_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(pochhammer, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(count_fixed_by_part, m)?)?;
    m.add_function(wrap_pyfunction!(count_fixed_by_hook, m)?)?;
    m.add_function(wrap_pyfunction!(count_hooks_of_size, m)?)?;
    m.add_function(wrap_pyfunction!(count_colored_thm11, m)?)?;
    m.add_function(wrap_pyfunction!(count_restricted_thm12, m)?)?;
    m.add_function(wrap_pyfunction!(count_colored_thm13, m)?)?;
    m.add_function(wrap_pyfunction!(verify_case, m)?)?;
    Ok(())
}
