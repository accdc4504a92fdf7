//! Immutable simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Simple undirected graph. Neighbor lists are sorted and symmetric; there
/// are no loops and no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u},{v}) has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::argument(format!(
                    "duplicate edge ({},{})",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::from_edges(n, edges).expect("path edges are valid")
    }

    /// Cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::argument(format!("cycle needs n >= 3, got {n}")));
        }
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Graph::from_edges(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// `K_{m,n}` with side A = `0..m` and side B = `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b)));
        Graph::from_edges(m + n, edges).expect("complete bipartite edges are valid")
    }

    /// Star `K_{1,r}` with center 0.
    pub fn star(r: usize) -> Self {
        Graph::complete_bipartite(1, r)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Subgraph induced by `keep`, together with the map from new to old indices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let edges: Vec<Edge> = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let g = Graph::from_edges(keep.len(), edges).expect("induced subgraph is simple");
        (g, keep.to_vec())
    }

    /// BFS distances from a set of sources; `None` marks unreachable vertices.
    pub fn bfs_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_from(&[u])[v]
    }

    /// Distance between two edges: the least endpoint-to-endpoint distance.
    pub fn edge_distance(&self, e1: Edge, e2: Edge) -> Option<usize> {
        let dist = self.bfs_from(&[e1.0, e1.1]);
        dist[e2.0].into_iter().chain(dist[e2.1]).min()
    }

    /// Distance between an edge and a vertex.
    pub fn edge_vertex_distance(&self, e: Edge, v: usize) -> Option<usize> {
        self.bfs_from(&[e.0, e.1])[v]
    }

    /// Least distance between a vertex of `p` and a vertex of `q`. Both must be non-empty.
    pub fn set_distance(&self, p: &VertexSet, q: &VertexSet) -> Result<Option<usize>> {
        if p.is_empty() || q.is_empty() {
            return Err(Error::argument("set distance needs two non-empty sets"));
        }
        p.check_within(self.order())?;
        q.check_within(self.order())?;
        let dist = self.bfs_from(p.as_slice());
        Ok(q.iter().filter_map(|v| dist[v]).min())
    }

    /// Largest pairwise distance; `None` for a disconnected graph, `Some(0)` when `n <= 1`.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.bfs_from(&[v]) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_from(&[0]).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Every vertex of `s` has exactly one neighbor inside `s`, i.e. `<S>` is a perfect
    /// matching with no further edges. Vacuously true for the empty set.
    pub fn is_induced_one_regular(&self, s: &VertexSet) -> bool {
        let mask = s.to_mask(self.order());
        s.iter()
            .all(|v| self.adj[v].iter().filter(|&&w| mask[w]).count() == 1)
    }

    /// Vertices grouped by connected component, each sorted, components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A set of vertices kept as a sorted, duplicate-free list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            if v < n {
                mask[v] = true;
            }
        }
        mask
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::argument(format!(
                "vertex {v} is not in a graph of order {n}"
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_components() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::from_edges(3, [(2, 2)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn vertex_distances() {
        let p5 = Graph::path(5);
        assert_eq!(p5.distance(0, 4), Some(4));
        assert_eq!(p5.distance(3, 3), Some(0));
        assert_eq!(two_components().distance(0, 3), None);
    }

    #[test]
    fn edge_distances() {
        let p5 = Graph::path(5);
        assert_eq!(p5.edge_distance((0, 1), (3, 4)), Some(2));
        assert_eq!(p5.edge_vertex_distance((0, 1), 3), Some(2));
        assert_eq!(p5.edge_distance((0, 1), (1, 2)), Some(0));
        assert_eq!(two_components().edge_distance((0, 1), (2, 3)), None);
    }

    #[test]
    fn set_distances() {
        let p5 = Graph::path(5);
        let d = |p: &[usize], q: &[usize]| {
            p5.set_distance(
                &p.iter().copied().collect(),
                &q.iter().copied().collect(),
            )
        };
        assert_eq!(d(&[0], &[4]).unwrap(), Some(4));
        assert_eq!(d(&[0, 1, 2], &[2, 3]).unwrap(), Some(0));
        assert_eq!(d(&[0, 1], &[3]).unwrap(), Some(2));
        assert!(matches!(d(&[], &[3]), Err(Error::Argument(_))));
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::cycle(4).unwrap().diameter(), Some(2));
        assert_eq!(Graph::cycle(5).unwrap().diameter(), Some(2));
        assert_eq!(Graph::path(4).diameter(), Some(3));
        assert_eq!(Graph::complete_bipartite(2, 3).diameter(), Some(2));
        assert_eq!(Graph::empty(1).diameter(), Some(0));
        assert_eq!(Graph::empty(0).diameter(), Some(0));
        assert_eq!(two_components().diameter(), None);
    }

    #[test]
    fn induced_one_regular() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(c6.is_induced_one_regular(&[0, 1, 3, 4].into()));
        assert!(!c6.is_induced_one_regular(&[0, 1, 2].into()));
        assert!(c6.is_induced_one_regular(&VertexSet::new()));
        assert!(!c6.is_induced_one_regular(&[0].into()));
    }

    #[test]
    fn trees() {
        assert!(Graph::path(4).is_tree());
        assert!(Graph::star(3).is_tree());
        assert!(!Graph::cycle(4).unwrap().is_tree());
        assert!(!two_components().is_tree());
        assert!(Graph::empty(1).is_tree());
    }
}
