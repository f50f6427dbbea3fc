//! Python bindings. Vertices are numbered from 1 as in the text formats.

use chordal_core::generators::{generate as generate_graph, GenParams, GraphClass};
use chordal_core::io::{parse_graph_text, write_graph_text};
use chordal_core::oracle;
use chordal_core::{
    bfs_order as core_bfs_order, is_chordal as core_is_chordal, is_peo as core_is_peo,
    lexbfs_labels as core_lexbfs_labels, lexbfs_partition as core_lexbfs_partition, mcs_order as core_mcs_order,
    parallel_is_chordal, parallel_lexbfs as core_parallel_lexbfs, parallel_peo_test, Arbitration, ChordalityVerdict,
    Graph, LexBfsVariant, ParallelConfig, TieBreak, VertexOrdering, WitnessTriple,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Witness = (usize, usize, usize);

fn value_error(e: chordal_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_zero_based_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, chordal_core::Error> {
    edges
        .iter()
        .map(|&(u, v)| {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(chordal_core::Error::InvalidVertex { vertex: w, n });
                }
            }
            Ok((u - 1, v - 1))
        })
        .collect()
}

fn to_ordering(order: &[usize], n: usize) -> Result<VertexOrdering, chordal_core::Error> {
    let mut zero_based = Vec::with_capacity(order.len());
    for &v in order {
        if v == 0 || v > n {
            return Err(chordal_core::Error::InvalidOrdering(format!(
                "vertex {v} is out of range 1..={n}"
            )));
        }
        zero_based.push(v - 1);
    }
    if zero_based.len() != n {
        return Err(chordal_core::Error::InvalidOrdering(format!(
            "expected {n} vertices, found {}",
            zero_based.len()
        )));
    }
    VertexOrdering::new(zero_based)
}

fn witness_tuple(w: WitnessTriple) -> Witness {
    w.to_one_based()
}

fn parallel_config(seed: Option<u64>, workers: Option<usize>) -> ParallelConfig {
    ParallelConfig {
        workers,
        ..ParallelConfig::new(Arbitration::from_seed(seed))
    }
}

/// An undirected simple graph on vertices `1..=n`.
#[pyclass(name = "Graph", module = "chordal", frozen)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let edges = to_zero_based_edges(n, &edges).map_err(value_error)?;
        let inner = Graph::from_edges(n, edges).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Parses the `p <n> <m>` / `e <u> <v>` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let inner = parse_graph_text(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn to_text(&self) -> String {
        write_graph_text(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        let n = self.inner.vertex_count();
        if v == 0 || v > n {
            return Err(value_error(chordal_core::Error::InvalidVertex { vertex: v, n }));
        }
        Ok(self.inner.neighbors(v - 1).map(|w| w + 1).collect())
    }

    fn is_adjacent(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.vertex_count();
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(value_error(chordal_core::Error::InvalidVertex { vertex: w, n }));
            }
        }
        Ok(u != v && self.inner.is_adjacent(u - 1, v - 1))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// Outcome of a chordality test: a PEO when chordal, otherwise the searched
/// order and a witness triple `(v, p, z)`.
#[pyclass(name = "Verdict", module = "chordal", frozen, get_all)]
pub struct PyVerdict {
    chordal: bool,
    order: Vec<usize>,
    peo: Option<Vec<usize>>,
    witness: Option<Witness>,
}

impl From<ChordalityVerdict> for PyVerdict {
    fn from(verdict: ChordalityVerdict) -> Self {
        let order = verdict.order().to_one_based();
        Self {
            chordal: verdict.is_chordal(),
            peo: verdict.is_chordal().then(|| order.clone()),
            witness: verdict.witness().map(witness_tuple),
            order,
        }
    }
}

#[pymethods]
impl PyVerdict {
    fn __bool__(&self) -> bool {
        self.chordal
    }

    fn __repr__(&self) -> String {
        match self.witness {
            None => format!("Verdict(chordal=True, peo={:?})", self.order),
            Some(w) => format!("Verdict(chordal=False, order={:?}, witness={w:?})", self.order),
        }
    }
}

#[pyfunction]
#[pyo3(signature = (g, seed = None))]
fn bfs_order(g: &PyGraph, seed: Option<u64>) -> Vec<usize> {
    core_bfs_order(&g.inner, TieBreak::from_seed(seed)).to_one_based()
}

#[pyfunction]
#[pyo3(signature = (g, seed = None))]
fn lexbfs_labels(g: &PyGraph, seed: Option<u64>) -> Vec<usize> {
    core_lexbfs_labels(&g.inner, TieBreak::from_seed(seed)).to_one_based()
}

#[pyfunction]
#[pyo3(signature = (g, seed = None))]
fn lexbfs_partition(g: &PyGraph, seed: Option<u64>) -> Vec<usize> {
    core_lexbfs_partition(&g.inner, TieBreak::from_seed(seed)).to_one_based()
}

#[pyfunction]
#[pyo3(signature = (g, seed = None))]
fn mcs_order(g: &PyGraph, seed: Option<u64>) -> Vec<usize> {
    core_mcs_order(&g.inner, TieBreak::from_seed(seed)).to_one_based()
}

#[pyfunction]
#[pyo3(signature = (g, seed = None, workers = None))]
fn parallel_lexbfs(g: &PyGraph, seed: Option<u64>, workers: Option<usize>) -> PyResult<Vec<usize>> {
    let ord = core_parallel_lexbfs(&g.inner, &parallel_config(seed, workers)).map_err(value_error)?;
    Ok(ord.to_one_based())
}

#[pyfunction]
fn is_peo(g: &PyGraph, order: Vec<usize>) -> PyResult<bool> {
    Ok(peo_witness(g, order, false, None, None)?.is_none())
}

/// The witness triple `(v, p, z)` showing `order` is not a PEO, or `None`.
#[pyfunction]
#[pyo3(signature = (g, order, parallel = false, seed = None, workers = None))]
fn peo_witness(
    g: &PyGraph,
    order: Vec<usize>,
    parallel: bool,
    seed: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Option<Witness>> {
    let ord = to_ordering(&order, g.inner.vertex_count()).map_err(value_error)?;
    let check = if parallel {
        parallel_peo_test(&g.inner, &ord, &parallel_config(seed, workers))
    } else {
        core_is_peo(&g.inner, &ord)
    }
    .map_err(value_error)?;
    Ok(check.witness().map(witness_tuple))
}

/// Runs a chordality pipeline; `algo` is `partition`, `labels` or `parallel`.
#[pyfunction]
#[pyo3(signature = (g, algo = "partition", seed = None, workers = None))]
fn is_chordal(g: &PyGraph, algo: &str, seed: Option<u64>, workers: Option<usize>) -> PyResult<PyVerdict> {
    let tie_break = TieBreak::from_seed(seed);
    let verdict = match algo {
        "partition" => core_is_chordal(&g.inner, LexBfsVariant::Partition, tie_break),
        "labels" => core_is_chordal(&g.inner, LexBfsVariant::Labels, tie_break),
        "parallel" => parallel_is_chordal(&g.inner, &parallel_config(seed, workers)).map_err(value_error)?,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown algorithm `{other}` (expected partition, labels or parallel)"
            )))
        }
    };
    Ok(verdict.into())
}

#[pyfunction]
fn satisfies_b_property(g: &PyGraph, order: Vec<usize>) -> PyResult<bool> {
    let ord = to_ordering(&order, g.inner.vertex_count()).map_err(value_error)?;
    Ok(oracle::satisfies_b_property(&g.inner, &ord)
        .map_err(value_error)?
        .holds())
}

#[pyfunction]
fn satisfies_lb_property(g: &PyGraph, order: Vec<usize>) -> PyResult<bool> {
    let ord = to_ordering(&order, g.inner.vertex_count()).map_err(value_error)?;
    Ok(oracle::satisfies_lb_property(&g.inner, &ord)
        .map_err(value_error)?
        .holds())
}

#[pyfunction]
fn is_chordal_bruteforce(g: &PyGraph) -> PyResult<bool> {
    oracle::is_chordal_bruteforce(&g.inner).map_err(value_error)
}

#[pyfunction]
fn find_chordless_cycle(g: &PyGraph) -> PyResult<Option<Vec<usize>>> {
    let cycle = oracle::find_chordless_cycle(&g.inner).map_err(value_error)?;
    Ok(cycle.map(|c| c.into_iter().map(|v| v + 1).collect()))
}

/// Generates a benchmark graph of class `clique`, `dense`, `sparse`, `tree`
/// or `chordal`.
#[pyfunction]
#[pyo3(signature = (class_name, n, seed = 0, p = None, k = None))]
fn generate(class_name: &str, n: usize, seed: u64, p: Option<f64>, k: Option<usize>) -> PyResult<PyGraph> {
    let class: GraphClass = class_name.parse().map_err(PyValueError::new_err)?;
    let inner = generate_graph(class, n, GenParams { p, k }, seed).map_err(value_error)?;
    Ok(PyGraph { inner })
}

#[pymodule]
fn chordal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(bfs_order, m)?)?;
    m.add_function(wrap_pyfunction!(lexbfs_labels, m)?)?;
    m.add_function(wrap_pyfunction!(lexbfs_partition, m)?)?;
    m.add_function(wrap_pyfunction!(mcs_order, m)?)?;
    m.add_function(wrap_pyfunction!(parallel_lexbfs, m)?)?;
    m.add_function(wrap_pyfunction!(is_peo, m)?)?;
    m.add_function(wrap_pyfunction!(peo_witness, m)?)?;
    m.add_function(wrap_pyfunction!(is_chordal, m)?)?;
    m.add_function(wrap_pyfunction!(satisfies_b_property, m)?)?;
    m.add_function(wrap_pyfunction!(satisfies_lb_property, m)?)?;
    m.add_function(wrap_pyfunction!(is_chordal_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(find_chordless_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
