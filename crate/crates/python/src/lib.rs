//! Python bindings: colorings, the plane construction, bounds and the exact
//! solver. Searches release the interpreter lock while they run.

use std::time::Duration;

use achromatic_core as core;
use achromatic_core::{Budget, Edge, EdgeColoring, ExactStatus, SearchOutcome};
use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An edge coloring of `K_n`; not necessarily valid.
#[pyclass(name = "Coloring", module = "achromatic", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyColoring {
    inner: EdgeColoring,
}

#[pymethods]
impl PyColoring {
    /// `classes` is a list of classes, each a list of `(u, v)` pairs.
    #[new]
    fn new(n: usize, classes: Vec<Vec<(u32, u32)>>) -> PyResult<Self> {
        let classes = classes
            .into_iter()
            .map(|class| {
                class
                    .into_iter()
                    .map(|(a, b)| {
                        Edge::try_new(a, b)
                            .ok_or_else(|| value_error(format!("loop at vertex {a}")))
                    })
                    .collect::<PyResult<Vec<_>>>()
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Self {
            inner: EdgeColoring::new(n, classes),
        })
    }

    /// Parses the JSON document format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = core::ColoringDocument::parse(text).map_err(value_error)?;
        Ok(Self {
            inner: doc.to_coloring().map_err(value_error)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn classes(&self) -> Vec<Vec<(u32, u32)>> {
        self.inner
            .classes()
            .iter()
            .map(|class| class.iter().map(|e| (e.u(), e.v())).collect())
            .collect()
    }

    fn verify(&self) -> PyReport {
        PyReport {
            inner: core::verify_coloring(&self.inner),
        }
    }

    fn is_valid(&self) -> bool {
        core::verify_coloring(&self.inner).is_valid
    }

    fn to_json(&self) -> String {
        core::ColoringDocument::from_coloring(&self.inner, None).to_json()
    }

    fn to_dot(&self) -> String {
        core::to_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.k()
    }

    fn __repr__(&self) -> String {
        format!("Coloring(n={}, k={})", self.inner.n(), self.inner.k())
    }
}

#[pyclass(name = "VerificationReport", module = "achromatic", frozen)]
pub struct PyReport {
    inner: core::VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn is_valid(&self) -> bool {
        self.inner.is_valid
    }

    #[getter]
    fn partition_ok(&self) -> bool {
        self.inner.partition_ok
    }

    /// Human-readable descriptions of partition defects.
    #[getter]
    fn partition_issues(&self) -> Vec<String> {
        self.inner
            .partition_issues
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[getter]
    fn acyclic_failures(&self) -> Vec<usize> {
        self.inner.acyclic_failures.clone()
    }

    #[getter]
    fn pair_failures(&self) -> Vec<(usize, usize)> {
        self.inner.pair_failures.clone()
    }

    fn __bool__(&self) -> bool {
        self.inner.is_valid
    }

    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(is_valid={}, partition_issues={}, acyclic_failures={}, pair_failures={})",
            self.inner.is_valid,
            self.inner.partition_issues.len(),
            self.inner.acyclic_failures.len(),
            self.inner.pair_failures.len()
        )
    }
}

/// `PG(2, q)` for prime `q`. Points and lines are addressed by index.
#[pyclass(name = "ProjectivePlane", module = "achromatic", frozen)]
pub struct PyPlane {
    inner: core::ProjectivePlane,
}

impl PyPlane {
    fn line_at(&self, i: usize) -> PyResult<core::PlaneLine> {
        if i < self.inner.size() {
            Ok(self.inner.line(i))
        } else {
            Err(value_error(format!("line index {i} out of range")))
        }
    }

    fn point_at(&self, i: usize) -> PyResult<core::PlanePoint> {
        if i < self.inner.size() {
            Ok(self.inner.point(i))
        } else {
            Err(value_error(format!("point index {i} out of range")))
        }
    }
}

#[pymethods]
impl PyPlane {
    #[new]
    fn new(q: u32) -> PyResult<Self> {
        Ok(Self {
            inner: core::build_plane(q).map_err(value_error)?,
        })
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    /// Number of points, which is also the number of lines.
    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn point_name(&self, i: usize) -> PyResult<String> {
        Ok(self.point_at(i)?.to_string())
    }

    fn line_name(&self, i: usize) -> PyResult<String> {
        Ok(self.line_at(i)?.to_string())
    }

    fn incident(&self, point: usize, line: usize) -> PyResult<bool> {
        Ok(self
            .inner
            .incident(self.point_at(point)?, self.line_at(line)?))
    }

    fn line_points(&self, line: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.line_point_indices(self.line_at(line)?))
    }

    fn line_intersection(&self, a: usize, b: usize) -> PyResult<usize> {
        let p = self
            .inner
            .line_intersection(self.line_at(a)?, self.line_at(b)?)
            .map_err(value_error)?;
        Ok(self.inner.point_index(p))
    }

    fn __repr__(&self) -> String {
        format!("ProjectivePlane(q={})", self.inner.order())
    }
}

#[pyclass(name = "ExactResult", module = "achromatic", frozen)]
pub struct PyExactResult {
    #[pyo3(get)]
    n: usize,
    /// One of "exact", "bracket" or "timed_out".
    #[pyo3(get)]
    status: &'static str,
    #[pyo3(get)]
    lower: u64,
    #[pyo3(get)]
    upper: u64,
    #[pyo3(get)]
    nodes_explored: u64,
    #[pyo3(get)]
    elapsed_seconds: f64,
    witness: Option<EdgeColoring>,
}

#[pymethods]
impl PyExactResult {
    #[getter]
    fn value(&self) -> Option<u64> {
        (self.status == "exact").then_some(self.lower)
    }

    #[getter]
    fn witness(&self) -> Option<PyColoring> {
        self.witness.clone().map(|inner| PyColoring { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "ExactResult(n={}, status={:?}, lower={}, upper={})",
            self.n, self.status, self.lower, self.upper
        )
    }
}

fn budget(max_nodes: Option<u64>, max_seconds: Option<f64>) -> PyResult<Budget> {
    let mut b = Budget::nodes(max_nodes.unwrap_or(core::DEFAULT_MAX_NODES));
    if let Some(s) = max_seconds {
        b = b.with_time(Duration::try_from_secs_f64(s).map_err(value_error)?);
    }
    Ok(b)
}

fn check_search_size(n: usize) -> PyResult<()> {
    if (2..=core::MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(value_error(format!(
            "the solver supports 2 <= n <= {}, got {n}",
            core::MAX_VERTICES
        )))
    }
}

/// The plane coloring of `K_{q^2+q+1}` for an odd prime `q`.
#[pyfunction]
fn build_coloring(q: u32) -> PyResult<PyColoring> {
    Ok(PyColoring {
        inner: core::build_coloring(q).map_err(value_error)?,
    })
}

/// Lowest-class greedy extension of a valid coloring to `K_n`.
#[pyfunction]
fn greedy_extend(coloring: &PyColoring, n: usize) -> PyResult<PyColoring> {
    Ok(PyColoring {
        inner: core::greedy_extend(&coloring.inner, n).map_err(value_error)?,
    })
}

/// Extension to `K_n` that adds one class per new vertex.
#[pyfunction]
fn star_extend(coloring: &PyColoring, n: usize) -> PyResult<PyColoring> {
    Ok(PyColoring {
        inner: core::star_extend(&coloring.inner, n).map_err(value_error)?,
    })
}

#[pyfunction]
fn verify_coloring(coloring: &PyColoring) -> PyReport {
    coloring.verify()
}

/// Counting upper bound, defined for `n >= 5`.
#[pyfunction]
fn upper_bound(n: usize) -> PyResult<u64> {
    core::upper_bound_lemma1(n).map_err(value_error)
}

/// Best constructive lower bound and a description of where it comes from.
#[pyfunction]
fn lower_bound(n: usize) -> PyResult<(u64, String)> {
    let s = core::summarize(n).map_err(value_error)?;
    Ok((s.lower, s.lower_source.to_string()))
}

/// `(lower, upper, exact)` where `exact` is `None` unless known.
#[pyfunction]
fn bounds(n: usize) -> PyResult<(u64, u64, Option<u64>)> {
    let s = core::summarize(n).map_err(value_error)?;
    Ok((s.lower, s.upper, s.exact))
}

/// A coloring of `K_n` with exactly `k` classes, or `None` if there is
/// none. Raises `TimeoutError` if the budget runs out first.
#[pyfunction]
#[pyo3(signature = (n, k, max_nodes=None, max_seconds=None))]
fn exists_coloring(
    py: Python<'_>,
    n: usize,
    k: usize,
    max_nodes: Option<u64>,
    max_seconds: Option<f64>,
) -> PyResult<Option<PyColoring>> {
    check_search_size(n)?;
    if k == 0 {
        return Err(value_error("k must be at least 1"));
    }
    let b = budget(max_nodes, max_seconds)?;
    let deadline = b.max_time.map(|t| std::time::Instant::now() + t);
    let report = py.detach(move || core::search(n, k, b, deadline));
    match report.outcome {
        SearchOutcome::Found(inner) => Ok(Some(PyColoring { inner })),
        SearchOutcome::NotExists => Ok(None),
        SearchOutcome::Timeout(why) => Err(PyTimeoutError::new_err(format!(
            "search for n={n}, k={k} stopped after {} nodes ({why:?} budget)",
            report.nodes
        ))),
    }
}

/// Searches down from the upper bound for the exact value.
#[pyfunction]
#[pyo3(signature = (n, max_nodes=None, max_seconds=None))]
fn exact_value(
    py: Python<'_>,
    n: usize,
    max_nodes: Option<u64>,
    max_seconds: Option<f64>,
) -> PyResult<PyExactResult> {
    check_search_size(n)?;
    let b = budget(max_nodes, max_seconds)?;
    let r = py.detach(move || core::exact_value(n, b));
    let status = match r.status {
        ExactStatus::Exact { .. } => "exact",
        ExactStatus::Bracket { .. } => "bracket",
        ExactStatus::TimedOut { .. } => "timed_out",
    };
    Ok(PyExactResult {
        n,
        status,
        lower: r.status.lower(),
        upper: r.status.upper(),
        nodes_explored: r.nodes_explored,
        elapsed_seconds: r.elapsed.as_secs_f64(),
        witness: r.witness,
    })
}

#[pymodule]
pub fn achromatic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyColoring>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyPlane>()?;
    m.add_class::<PyExactResult>()?;
    m.add_function(wrap_pyfunction!(build_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_extend, m)?)?;
    m.add_function(wrap_pyfunction!(star_extend, m)?)?;
    m.add_function(wrap_pyfunction!(verify_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(exists_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(exact_value, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
