//! Python bindings. Rationals cross the boundary as `"p/q"` strings (ints
//! are accepted on input); polynomials in t come back as coefficient lists,
//! lowest degree first.

use norlund::multiindex::{indices_up_to, partitions as mi_partitions};
use norlund::polynomials::family_poly;
use norlund::ring::{format_rational, parse_rational};
use norlund::verify::{self, run_montecarlo_rademacher, run_montecarlo_uniform};
use norlund::{
    Error, Family, MonteCarloConfig, MultiIndex, MvPolynomial, OrderPolynomial, Rational,
    VerificationReport,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(err)
}

fn index(parts: Vec<u32>) -> PyResult<MultiIndex> {
    if parts.is_empty() {
        return Err(PyValueError::new_err(
            "multi-index must have at least one entry",
        ));
    }
    Ok(MultiIndex::new(parts))
}

fn rational(value: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(n) = value.extract::<i64>() {
        return Ok(Rational::from_integer(n.into()));
    }
    let text: String = value.extract()?;
    parse_rational(&text).map_err(err)
}

/// `None` or `"symbolic"` means symbolic order.
fn order(t: Option<&Bound<'_, PyAny>>) -> PyResult<Option<Rational>> {
    match t {
        None => Ok(None),
        Some(v) if v.extract::<String>().is_ok_and(|s| s == "symbolic") => Ok(None),
        Some(v) => rational(v).map(Some),
    }
}

fn coefficients(p: &OrderPolynomial) -> Vec<String> {
    if p.coeffs().is_empty() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(format_rational).collect()
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("suite", &r.suite)?;
    d.set_item("attempted", r.attempted)?;
    d.set_item("passed", r.passed)?;
    match &r.counterexample {
        Some(ce) => {
            let c = PyDict::new(py);
            c.set_item("inputs", &ce.inputs)?;
            c.set_item("lhs", &ce.lhs)?;
            c.set_item("rhs", &ce.rhs)?;
            d.set_item("counterexample", c)?;
        }
        None => d.set_item("counterexample", py.None())?,
    }
    d.set_item("notes", r.notes.clone())?;
    Ok(d)
}

/// Multivariate Bernoulli or Euler polynomial, symbolic in t or at a fixed t.
#[pyclass(frozen, module = "pynorlund")]
struct Polynomial {
    symbolic: MvPolynomial<OrderPolynomial>,
    fixed: Option<(Rational, MvPolynomial<Rational>)>,
}

#[pymethods]
impl Polynomial {
    #[getter]
    fn dim(&self) -> usize {
        self.symbolic.dim()
    }

    /// List of `(exponent, coefficient)`; the coefficient is a string at a
    /// fixed order and a list of strings otherwise.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let out = PyList::empty(py);
        match &self.fixed {
            Some((_, p)) => {
                for (e, c) in p.terms() {
                    out.append((e.parts().to_vec(), format_rational(c)))?;
                }
            }
            None => {
                for (e, c) in self.symbolic.terms() {
                    out.append((e.parts().to_vec(), coefficients(c)))?;
                }
            }
        }
        Ok(out)
    }

    /// Exact value at a rational point; `t` defaults to the fixed order.
    #[pyo3(signature = (x, t = None))]
    fn evaluate(&self, x: Vec<Bound<'_, PyAny>>, t: Option<&Bound<'_, PyAny>>) -> PyResult<String> {
        let x: Vec<Rational> = x.iter().map(rational).collect::<PyResult<_>>()?;
        let t = match (order(t)?, &self.fixed) {
            (Some(t), _) => t,
            (None, Some((t, _))) => t.clone(),
            (None, None) => {
                return Err(PyValueError::new_err(
                    "a symbolic polynomial needs t to evaluate",
                ))
            }
        };
        self.symbolic
            .evaluate(&x, &t)
            .map(|q| format_rational(&q))
            .map_err(err)
    }

    fn __str__(&self) -> String {
        match &self.fixed {
            Some((_, p)) => p.to_string(),
            None => self.symbolic.to_string(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.__str__())
    }
}

/// Moment tables truncated at `order`.
#[pyclass(frozen, module = "pynorlund")]
struct Tables {
    inner: norlund::Tables,
}

#[pymethods]
impl Tables {
    #[new]
    #[pyo3(signature = (order = norlund::DEFAULT_ORDER))]
    fn new(order: usize) -> PyResult<Self> {
        if order == 0 {
            return Err(PyValueError::new_err("order must be at least 1"));
        }
        Ok(Tables {
            inner: norlund::Tables::new(order),
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// B_v or E_v: a string at fixed t, a coefficient list when symbolic.
    #[pyo3(signature = (family, v, t = None))]
    fn number(
        &self,
        py: Python<'_>,
        family: &str,
        v: Vec<u32>,
        t: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Py<PyAny>> {
        let (f, v) = (self::family(family)?, index(v)?);
        Ok(match order(t)? {
            Some(t) => format_rational(&self.inner.number_at(f, &v, &t).map_err(err)?)
                .into_pyobject(py)?
                .into_any()
                .unbind(),
            None => coefficients(&self.inner.number(f, &v).map_err(err)?)
                .into_pyobject(py)?
                .into_any()
                .unbind(),
        })
    }

    /// `[(v, value)]` for all |v| ≤ max_deg in lexicographic order.
    #[pyo3(signature = (family, dim, max_deg, t = None))]
    fn numbers<'py>(
        &self,
        py: Python<'py>,
        family: &str,
        dim: usize,
        max_deg: usize,
        t: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyList>> {
        if dim == 0 {
            return Err(PyValueError::new_err("dimension must be at least 1"));
        }
        let out = PyList::empty(py);
        for v in indices_up_to(dim, max_deg) {
            let value = self.number(py, family, v.parts().to_vec(), t)?;
            out.append((v.parts().to_vec(), value))?;
        }
        Ok(out)
    }

    #[pyo3(signature = (family, v, t = None))]
    fn polynomial(
        &self,
        family: &str,
        v: Vec<u32>,
        t: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Polynomial> {
        let symbolic = family_poly(&self.inner, self::family(family)?, &index(v)?).map_err(err)?;
        let fixed = order(t)?.map(|t| {
            let p = symbolic.map_coeffs(|c| c.eval(&t));
            (t, p)
        });
        Ok(Polynomial { symbolic, fixed })
    }

    /// Runs a suite (`exact`, `oracle`, `montecarlo`, `all`) and returns one
    /// dict per report.
    #[allow(clippy::too_many_arguments)]
    #[pyo3(signature = (suite = "exact", max_deg = 4, dim = 2, samples = 1_000_000, seed = 42, shards = 1))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        suite: &str,
        max_deg: usize,
        dim: usize,
        samples: u64,
        seed: u64,
        shards: usize,
    ) -> PyResult<Bound<'py, PyList>> {
        let (exact, oracle, mc) = match suite {
            "exact" => (true, false, false),
            "oracle" => (false, true, false),
            "montecarlo" => (false, false, true),
            "all" => (true, true, true),
            other => return Err(err(Error::UnknownName(other.to_string()))),
        };
        let tables = &self.inner;
        let reports = py
            .detach(|| -> Result<Vec<VerificationReport>, Error> {
                let mut reports = Vec::new();
                if exact {
                    reports.extend(verify::run_exact_suite(tables, max_deg, dim)?);
                }
                if oracle {
                    reports.push(verify::oracle_check(tables, max_deg, dim));
                }
                if mc {
                    let cfg = MonteCarloConfig {
                        samples,
                        seed,
                        dim,
                        max_degree: max_deg,
                        shards,
                        ..MonteCarloConfig::default()
                    };
                    reports.push(run_montecarlo_uniform(tables, &cfg)?);
                    reports.push(run_montecarlo_rademacher(tables, &cfg)?);
                }
                Ok(reports)
            })
            .map_err(err)?;
        let out = PyList::empty(py);
        for r in &reports {
            out.append(report_dict(py, r)?)?;
        }
        Ok(out)
    }
}

/// Multipartite partitions of v, each a list of columns with repetition.
#[pyfunction]
fn partitions(v: Vec<u32>) -> PyResult<Vec<Vec<Vec<u32>>>> {
    let v = index(v)?;
    let parts = mi_partitions(&v).map_err(err)?;
    Ok(parts
        .iter()
        .map(|p| p.expanded().map(|c| c.parts().to_vec()).collect())
        .collect())
}

/// Classical B_0..B_n or E_0..E_n.
#[pyfunction]
fn classical(family: &str, n: usize) -> PyResult<Vec<String>> {
    let f = self::family(family)?;
    Ok(norlund::umbrae::classical_numbers(f, n + 1)
        .iter()
        .take(n + 1)
        .map(format_rational)
        .collect())
}

#[pymodule]
fn pynorlund(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tables>()?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(classical, m)?)?;
    Ok(())
}
