//! Python bindings for `eod_core`.
//!
//! Vertex sets cross the boundary as sorted lists of ints, partitions as
//! `WeakPartition` objects, and trees as plain `Graph`s.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use eod_core::amenability::{self, Flavor, WeakPartition as CorePartition, ZigzagSet};
use eod_core::eod::{self, SearchOptions};
use eod_core::harness::{run_suite as core_run_suite, SuiteId, SuiteParams};
use eod_core::io::{self, GraphFormat};
use eod_core::oracles::{self, OracleAnswer};
use eod_core::product::{cartesian_product, Factor};
use eod_core::trees::{self, RecognizeOutcome, TreeTrace};
use eod_core::{Error, Graph as CoreGraph, VertexSet};

create_exception!(eodpy, EodError, PyValueError);
create_exception!(eodpy, PreconditionError, EodError);
create_exception!(eodpy, DomainError, EodError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Precondition { .. } => PreconditionError::new_err(e.to_string()),
        Error::Domain(_) => DomainError::new_err(e.to_string()),
        other => EodError::new_err(other.to_string()),
    }
}

fn set_of(d: Vec<usize>) -> VertexSet {
    d.into_iter().collect()
}

#[pyclass(name = "Graph", module = "eodpy", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: CoreGraph,
}

impl From<CoreGraph> for PyGraph {
    fn from(inner: CoreGraph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        CoreGraph::from_edges(n, edges).map(Into::into).map_err(to_py)
    }

    /// Parses edge-list or graph6 text; the format is detected when omitted.
    #[staticmethod]
    #[pyo3(signature = (text, format = None))]
    fn parse(text: &str, format: Option<&str>) -> PyResult<Self> {
        let format = match format {
            Some(f) => f.parse::<GraphFormat>().map_err(to_py)?,
            None => io::detect_format(text),
        };
        io::parse_graph(text, format).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        CoreGraph::path(n).into()
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        CoreGraph::cycle(n).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        CoreGraph::complete(n).into()
    }

    #[staticmethod]
    fn complete_bipartite(m: usize, n: usize) -> Self {
        CoreGraph::complete_bipartite(m, n).into()
    }

    #[staticmethod]
    fn star(r: usize) -> Self {
        CoreGraph::star(r).into()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(EodError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    /// `self □ other`; vertex `(g, h)` gets index `g * other.order + h`.
    fn product(&self, other: &PyGraph) -> Self {
        cartesian_product(&self.inner, &other.inner).0.into()
    }

    fn to_graph6(&self) -> PyResult<String> {
        io::to_graph6(&self.inner).map_err(to_py)
    }

    fn to_edge_list(&self) -> String {
        io::to_edge_list(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

#[pyclass(name = "WeakPartition", module = "eodpy", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: CorePartition,
}

#[pymethods]
impl PyPartition {
    /// Reads the partition file format, one `<label>: <vertices>` line per
    /// part, for a flavor such as `K3`, `K2,3`, `C4` or `C5`.
    #[staticmethod]
    fn parse(text: &str, flavor: &str, n: usize) -> PyResult<Self> {
        let flavor: Flavor = flavor.parse().map_err(to_py)?;
        CorePartition::parse(text, flavor, n)
            .map(|inner| PyPartition { inner })
            .map_err(to_py)
    }

    #[getter]
    fn flavor(&self) -> String {
        self.inner.flavor().to_string()
    }

    /// One label per vertex, as text (`0`, `2`, `[1,3]`).
    fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(ToString::to_string).collect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __eq__(&self, other: &PyPartition) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("WeakPartition({}, {:?})", self.inner.flavor(), self.inner.to_text())
    }
}

#[pyfunction]
fn is_eod_set(g: &PyGraph, d: Vec<usize>) -> bool {
    eod::is_eod_set(&g.inner, &set_of(d))
}

/// First EOD-set found by the exact solver, or `None`.
#[pyfunction]
fn find_eod_set(py: Python<'_>, g: &PyGraph) -> PyResult<Option<Vec<usize>>> {
    let graph = g.inner.clone();
    let cert = py
        .detach(move || eod::find_eod_set(&graph, &SearchOptions::default()))
        .map_err(to_py)?;
    Ok(cert.found().map(|d| d.as_slice().to_vec()))
}

#[pyfunction]
fn enumerate_eod_sets(py: Python<'_>, g: &PyGraph) -> Vec<Vec<usize>> {
    let graph = g.inner.clone();
    py.detach(move || eod::enumerate_eod_sets(&graph))
        .into_iter()
        .map(|d| d.as_slice().to_vec())
        .collect()
}

/// Whether every edge of `<D>` in `g □ h` projects to an edge of the chosen factor.
#[pyfunction]
#[pyo3(signature = (g, h, d, factor = "first"))]
fn is_parallel_eod(g: &PyGraph, h: &PyGraph, d: Vec<usize>, factor: &str) -> PyResult<bool> {
    let factor = match factor {
        "first" => Factor::First,
        "second" => Factor::Second,
        other => return Err(EodError::new_err(format!("factor must be 'first' or 'second', got {other:?}"))),
    };
    let (prod, dims) = cartesian_product(&g.inner, &h.inner);
    eod::is_parallel_eod(&prod, dims, factor, &set_of(d)).map_err(to_py)
}

/// Violations of the flavor's conditions, as `(condition, detail)` pairs;
/// empty when the partition is amenable.
#[pyfunction]
fn check_amenable(g: &PyGraph, p: &PyPartition) -> PyResult<Vec<(String, String)>> {
    let report = amenability::check_amenable(&g.inner, &p.inner).map_err(to_py)?;
    Ok(report
        .violations
        .iter()
        .map(|v| (v.condition.to_string(), v.detail.clone()))
        .collect())
}

#[pyfunction]
fn find_amenable(py: Python<'_>, g: &PyGraph, flavor: &str) -> PyResult<Option<PyPartition>> {
    let flavor: Flavor = flavor.parse().map_err(to_py)?;
    let graph = g.inner.clone();
    let found = py
        .detach(move || amenability::find_amenable(&graph, flavor))
        .map_err(to_py)?;
    Ok(found.map(|inner| PyPartition { inner }))
}

/// The EOD-set of the product that the partition certifies.
#[pyfunction]
fn partition_to_eod(g: &PyGraph, p: &PyPartition) -> PyResult<Vec<usize>> {
    let d = match p.inner.flavor() {
        Flavor::Kr(_) => amenability::kr_partition_to_eod(&g.inner, &p.inner),
        Flavor::Kmn(..) => amenability::kmn_partition_to_eod(&g.inner, &p.inner),
        Flavor::C4 | Flavor::C5 => amenability::cycle_partition_to_parallel_eod(&g.inner, &p.inner),
    }
    .map_err(to_py)?;
    Ok(d.as_slice().to_vec())
}

#[pyfunction]
fn is_zigzag_set(g: &PyGraph, edges: Vec<(usize, usize)>) -> PyResult<bool> {
    let report = amenability::is_zigzag_set(&g.inner, &ZigzagSet::new(edges)).map_err(to_py)?;
    Ok(report.is_ok())
}

#[pyfunction]
fn find_zigzag_set(g: &PyGraph) -> PyResult<Option<Vec<(usize, usize)>>> {
    let found = amenability::find_zigzag_set(&g.inner).map_err(to_py)?;
    Ok(found.map(|z| z.edges().to_vec()))
}

#[pyfunction]
fn canonical_code(t: &PyGraph) -> PyResult<String> {
    trees::canonical_code(&t.inner)
        .map(|c| c.as_str().to_string())
        .map_err(to_py)
}

/// `"P2"`, the construction trace of a `T_r` member, or `None`.
#[pyfunction]
fn recognize_tree(t: &PyGraph, r: usize) -> PyResult<Option<String>> {
    Ok(match trees::recognize_tree(&t.inner, r).map_err(to_py)? {
        RecognizeOutcome::P2 => Some("P2".to_string()),
        RecognizeOutcome::Member(trace) => Some(trace.to_string()),
        RecognizeOutcome::NotMember => None,
    })
}

/// Rebuilds the tree a trace describes, with its partition.
#[pyfunction]
fn replay_trace(trace: &str) -> PyResult<(PyGraph, PyPartition)> {
    let trace: TreeTrace = trace.parse().map_err(to_py)?;
    let (tree, partition) = trace.replay().map_err(to_py)?.into_parts();
    Ok((tree.into(), PyPartition { inner: partition }))
}

#[pyfunction]
fn generate_family(py: Python<'_>, r: usize, max_order: usize) -> PyResult<Vec<String>> {
    let codes = py.detach(move || trees::generate_family(r, max_order)).map_err(to_py)?;
    Ok(codes.into_iter().map(|c| c.as_str().to_string()).collect())
}

#[pyfunction]
fn enumerate_trees(py: Python<'_>, order: usize) -> Vec<PyGraph> {
    py.detach(move || trees::enumerate_trees(order))
        .into_iter()
        .map(Into::into)
        .collect()
}

/// Closed-form answer as `(value, source)`. `kind` is one of `path`, `cycle`,
/// `grid`, `torus`, `torus-parallel`, `c4-torus`.
#[pyfunction]
#[pyo3(signature = (kind, a, b = None))]
fn oracle(kind: &str, a: usize, b: Option<usize>) -> PyResult<(bool, String)> {
    let need_b = || b.ok_or_else(|| EodError::new_err(format!("oracle {kind} takes two sizes")));
    let answer: OracleAnswer = match kind {
        "path" => oracles::path_eod(a),
        "cycle" => oracles::cycle_eod(a),
        "c4-torus" => oracles::c4_torus_eod(a),
        "grid" => oracles::grid_eod(a, need_b()?),
        "torus" => oracles::torus_eod(a, need_b()?),
        "torus-parallel" => oracles::torus_parallel_eod(a, need_b()?),
        other => return Err(EodError::new_err(format!("unknown oracle {other:?}"))),
    }
    .map_err(to_py)?;
    Ok((answer.value, answer.source.to_string()))
}

/// Runs a verification suite at its default sizes and returns
/// `(passed, report_text)`.
#[pyfunction]
fn run_suite(py: Python<'_>, name: &str) -> PyResult<(bool, String)> {
    let id: SuiteId = name.parse().map_err(to_py)?;
    let report = py
        .detach(move || core_run_suite(id, &SuiteParams::defaults(id)))
        .map_err(to_py)?;
    Ok((report.is_success(), report.to_text()))
}

#[pymodule]
fn eodpy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("EodError", py.get_type::<EodError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(is_eod_set, m)?)?;
    m.add_function(wrap_pyfunction!(find_eod_set, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_eod_sets, m)?)?;
    m.add_function(wrap_pyfunction!(is_parallel_eod, m)?)?;
    m.add_function(wrap_pyfunction!(check_amenable, m)?)?;
    m.add_function(wrap_pyfunction!(find_amenable, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_eod, m)?)?;
    m.add_function(wrap_pyfunction!(is_zigzag_set, m)?)?;
    m.add_function(wrap_pyfunction!(find_zigzag_set, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_code, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_tree, m)?)?;
    m.add_function(wrap_pyfunction!(replay_trace, m)?)?;
    m.add_function(wrap_pyfunction!(generate_family, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
