//! Efficient open dominating sets: verification, exact search and enumeration.
//!
//! A set `D` is an EOD-set when every vertex has exactly one neighbor in `D`.
//! The searcher treats this as the 0/1 system `A x = 1` over the adjacency
//! matrix: each vertex row tracks how many chosen neighbors cover it and how
//! many neighbors are still undecided, and forced assignments are propagated
//! before branching.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::product::{project_edge, Factor, ProductDims, Projection};

pub fn is_total_dominating_set(g: &Graph, d: &VertexSet) -> bool {
    let mask = d.to_mask(g.order());
    d.check_within(g.order()).is_ok()
        && g.vertices()
            .all(|v| g.neighbors(v).iter().any(|&w| mask[w]))
}

pub fn is_eod_set(g: &Graph, d: &VertexSet) -> bool {
    let mask = d.to_mask(g.order());
    d.check_within(g.order()).is_ok()
        && g.vertices()
            .all(|v| g.neighbors(v).iter().filter(|&&w| mask[w]).count() == 1)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    #[default]
    First,
    EnumerateAll,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Requirement {
    #[default]
    None,
    /// Accept only sets that are parallel with respect to the filter's factor.
    ParallelOnly,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Product layout of the searched graph plus the factor parallelism is judged against.
    pub parallel_filter: Option<(ProductDims, Factor)>,
    pub require: Requirement,
}

impl SearchOptions {
    pub fn parallel_to(dims: ProductDims, factor: Factor) -> Self {
        SearchOptions {
            mode: SearchMode::First,
            parallel_filter: Some((dims, factor)),
            require: Requirement::ParallelOnly,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(VertexSet),
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EodCertificate {
    pub order: usize,
    pub outcome: Outcome,
    /// Branching nodes visited by the search.
    pub nodes_explored: u64,
    /// Whether the found set is parallel w.r.t. the first factor; set when dims were supplied.
    pub is_parallel_wrt_first: Option<bool>,
}

impl EodCertificate {
    pub fn found(&self) -> Option<&VertexSet> {
        match &self.outcome {
            Outcome::Found(d) => Some(d),
            Outcome::NotFound => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }
}

impl fmt::Display for EodCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Found(d) => write!(f, "EOD n={} D={d}", self.order),
            Outcome::NotFound => write!(f, "NO-EOD nodes={}", self.nodes_explored),
        }
    }
}

/// Parses the `D={...}` form of a vertex set, also accepting a bare
/// comma- or space-separated list.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let inner = text.trim();
    let inner = inner.strip_prefix("D=").unwrap_or(inner);
    let inner = inner
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(inner);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(1, format!("`{t}` is not a vertex index")))
        })
        .collect()
}

/// Reads back the one-line form written by `Display`. Search statistics
/// other than `nodes=` are not part of the text and come back zeroed.
impl FromStr for EodCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("NO-EOD") {
            let nodes = rest
                .trim()
                .strip_prefix("nodes=")
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(1, "malformed NO-EOD certificate"))?;
            return Ok(EodCertificate {
                order: 0,
                outcome: Outcome::NotFound,
                nodes_explored: nodes,
                is_parallel_wrt_first: None,
            });
        }
        let rest = s
            .strip_prefix("EOD")
            .ok_or_else(|| Error::parse(1, "certificate must start with EOD or NO-EOD"))?
            .trim();
        let (n_part, d_part) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::parse(1, "malformed EOD certificate"))?;
        let order = n_part
            .strip_prefix("n=")
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(1, "malformed n= field"))?;
        let d = parse_vertex_set(d_part)?;
        d.check_within(order)?;
        Ok(EodCertificate {
            order,
            outcome: Outcome::Found(d),
            nodes_explored: 0,
            is_parallel_wrt_first: None,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Assign {
    Undecided,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    assign: Vec<Assign>,
    /// Chosen neighbors of each row.
    cover: Vec<u32>,
    /// Undecided neighbors of each row.
    open: Vec<u32>,
}

struct Solver<'g> {
    g: &'g Graph,
    nodes: u64,
    queue: Vec<(usize, Assign)>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph) -> Self {
        Solver {
            g,
            nodes: 0,
            queue: Vec::new(),
        }
    }

    fn initial(&mut self) -> Option<State> {
        let g = self.g;
        let mut st = State {
            assign: vec![Assign::Undecided; g.order()],
            cover: vec![0; g.order()],
            open: g.vertices().map(|v| g.degree(v) as u32).collect(),
        };
        self.queue.clear();
        for v in g.vertices() {
            match g.degree(v) {
                0 => return None,
                1 => self.queue.push((g.neighbors(v)[0], Assign::In)),
                _ => {}
            }
        }
        self.propagate(&mut st).then_some(st)
    }

    /// Applies queued assignments and everything they force. False on conflict.
    fn propagate(&mut self, st: &mut State) -> bool {
        while let Some((u, val)) = self.queue.pop() {
            match st.assign[u] {
                Assign::Undecided => {}
                cur if cur == val => continue,
                _ => {
                    self.queue.clear();
                    return false;
                }
            }
            st.assign[u] = val;
            for &v in self.g.neighbors(u) {
                st.open[v] -= 1;
                if val == Assign::In {
                    st.cover[v] += 1;
                }
            }
            for &v in self.g.neighbors(u) {
                match st.cover[v] {
                    0 if st.open[v] == 0 => {
                        self.queue.clear();
                        return false;
                    }
                    0 if st.open[v] == 1 => {
                        let w = self.g.neighbors(v)
                            .iter()
                            .copied()
                            .find(|&w| st.assign[w] == Assign::Undecided)
                            .expect("one undecided neighbor remains");
                        self.queue.push((w, Assign::In));
                    }
                    0 => {}
                    1 => {
                        if st.open[v] > 0 {
                            for &w in self.g.neighbors(v) {
                                if st.assign[w] == Assign::Undecided {
                                    self.queue.push((w, Assign::Out));
                                }
                            }
                        }
                    }
                    _ => {
                        self.queue.clear();
                        return false;
                    }
                }
            }
        }
        true
    }

    fn branch_variable(&self, st: &State) -> Option<usize> {
        let row = self
            .g
            .vertices()
            .filter(|&v| st.cover[v] == 0)
            .min_by_key(|&v| (st.open[v], v))?;
        self.g
            .neighbors(row)
            .iter()
            .copied()
            .find(|&u| st.assign[u] == Assign::Undecided)
    }

    fn search<F>(&mut self, st: State, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        self.nodes += 1;
        let Some(u) = self.branch_variable(&st) else {
            let d = st
                .assign
                .iter()
                .enumerate()
                .filter_map(|(v, &a)| (a == Assign::In).then_some(v))
                .collect();
            return visit(d);
        };
        for val in [Assign::Out, Assign::In] {
            let mut child = st.clone();
            self.queue.push((u, val));
            if self.propagate(&mut child) {
                self.search(child, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Runs the exact search, calling `visit` on each EOD-set in discovery order.
/// Returns the number of branching nodes explored.
pub fn search_eod_sets<F>(g: &Graph, mut visit: F) -> u64
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let mut solver = Solver::new(g);
    if let Some(st) = solver.initial() {
        let _ = solver.search(st, &mut visit);
    } else {
        solver.nodes += 1;
    }
    solver.nodes
}

fn check_filter(g: &Graph, opts: &SearchOptions) -> Result<()> {
    match opts.parallel_filter {
        Some((dims, _)) => dims.check_graph(g),
        None if opts.require == Requirement::ParallelOnly => Err(Error::argument(
            "parallel-only search needs product dimensions",
        )),
        None => Ok(()),
    }
}

fn accepts(g: &Graph, opts: &SearchOptions, d: &VertexSet) -> bool {
    match (opts.require, opts.parallel_filter) {
        (Requirement::ParallelOnly, Some((dims, factor))) => parallel_edges(g, dims, factor, d),
        _ => true,
    }
}

pub fn find_eod_set(g: &Graph, opts: &SearchOptions) -> Result<EodCertificate> {
    check_filter(g, opts)?;
    let mut first = None;
    let nodes = search_eod_sets(g, |d| {
        if accepts(g, opts, &d) {
            first = Some(d);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let is_parallel_wrt_first = match (&first, opts.parallel_filter) {
        (Some(d), Some((dims, _))) => Some(parallel_edges(g, dims, Factor::First, d)),
        _ => None,
    };
    Ok(EodCertificate {
        order: g.order(),
        outcome: first.map_or(Outcome::NotFound, Outcome::Found),
        nodes_explored: nodes,
        is_parallel_wrt_first,
    })
}

/// Every EOD-set of `g`, each once, in lexicographic order of member lists.
pub fn enumerate_eod_sets(g: &Graph) -> Vec<VertexSet> {
    let mut all = Vec::new();
    search_eod_sets(g, |d| {
        all.push(d);
        ControlFlow::Continue(())
    });
    all.sort();
    all
}

/// Like [`enumerate_eod_sets`] but honoring the parallel filter in `opts`.
pub fn enumerate_eod_sets_with(g: &Graph, opts: &SearchOptions) -> Result<Vec<VertexSet>> {
    check_filter(g, opts)?;
    Ok(enumerate_eod_sets(g)
        .into_iter()
        .filter(|d| accepts(g, opts, d))
        .collect())
}

fn parallel_edges(product: &Graph, dims: ProductDims, factor: Factor, d: &VertexSet) -> bool {
    let mask = d.to_mask(product.order());
    d.iter().all(|u| {
        product.neighbors(u).iter().filter(|&&v| mask[v]).all(|&v| {
            matches!(
                project_edge(dims, (u, v), factor),
                Ok(Projection::Edge(_))
            )
        })
    })
}

/// Whether the EOD-set `d` of `product` is parallel with respect to `factor`:
/// every edge of `<D>` projects onto an edge of that factor.
pub fn is_parallel_eod(
    product: &Graph,
    dims: ProductDims,
    factor: Factor,
    d: &VertexSet,
) -> Result<bool> {
    dims.check_graph(product)?;
    if !is_eod_set(product, d) {
        return Err(Error::precondition(format!(
            "{d} is not an EOD-set of the product"
        )));
    }
    Ok(parallel_edges(product, dims, factor, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LayerOccupancy {
    /// Vertex of the other factor that fixes the layer.
    pub at: usize,
    pub count: usize,
    /// For two-vertex intersections: whether the two vertices are adjacent.
    pub adjacent: Option<bool>,
}

/// `|D ∩ layer|` for every copy of `layer_factor` in the product.
///
/// With `Factor::Second` the layers are the `H`-layers `^gH`, one per `g`.
pub fn layer_occupancy(
    product: &Graph,
    dims: ProductDims,
    layer_factor: Factor,
    d: &VertexSet,
) -> Result<Vec<LayerOccupancy>> {
    dims.check_graph(product)?;
    d.check_within(product.order())?;
    let (outer, layer): (usize, Box<dyn Fn(usize) -> Vec<usize>>) = match layer_factor {
        Factor::Second => (dims.g_size, Box::new(|g| dims.h_layer(g).collect())),
        Factor::First => (dims.h_size, Box::new(|h| dims.g_layer(h).collect())),
    };
    Ok((0..outer)
        .map(|at| {
            let hit: Vec<usize> = layer(at).into_iter().filter(|&v| d.contains(v)).collect();
            LayerOccupancy {
                at,
                count: hit.len(),
                adjacent: (hit.len() == 2).then(|| product.has_edge(hit[0], hit[1])),
            }
        })
        .collect())
}
