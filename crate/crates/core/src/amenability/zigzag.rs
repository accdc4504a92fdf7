//! Zig-zag sets and their equivalence with `K_2`-amenable partitions.
//!
//! An edge set `E' = {u_i v_i}` of a graph on at least three vertices is a
//! zig-zag set when
//! (i) `N(u_i) ∩ N(v_i) = ∅`,
//! (ii) distinct edges of `E'` are at distance at least 2,
//! (iii) every vertex outside `E'` is at distance 1 from exactly two edges of `E'`,
//! (iv) every cyclic sequence of distinct edges with consecutive distance
//!      exactly 2 has even length.
//!
//! (iv) is checked as bipartiteness of the auxiliary graph on `E'` whose
//! adjacency is "distance exactly 2".

use std::collections::VecDeque;
use std::fmt;

use super::kr::check_kr_amenable;
use super::partition::{Flavor, Label, WeakPartition};
use super::rules::{CheckReport, Condition, Violation};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZigzagSet {
    edges: Vec<Edge>,
}

impl ZigzagSet {
    /// Normalizes each edge to `(min, max)` and sorts the set.
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        ZigzagSet { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl fmt::Display for ZigzagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

fn validate(g: &Graph, z: &ZigzagSet) -> Result<()> {
    if g.order() < 3 {
        return Err(Error::argument("zig-zag sets are defined on graphs with at least 3 vertices"));
    }
    if z.is_empty() {
        return Err(Error::argument("a zig-zag set must be non-empty"));
    }
    if let Some(&(u, v)) = z.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::argument(format!("{u}-{v} is not an edge of the graph")));
    }
    Ok(())
}

/// True when the two edges are at distance 0 or 1.
fn touches(g: &Graph, a: Edge, b: Edge) -> bool {
    let ends_a = [a.0, a.1];
    let ends_b = [b.0, b.1];
    ends_a
        .iter()
        .any(|&x| ends_b.iter().any(|&y| x == y || g.has_edge(x, y)))
}

/// Auxiliary adjacency: pairs of edges at distance exactly 2.
fn two_step_graph(g: &Graph, edges: &[Edge]) -> Vec<Vec<usize>> {
    let dists: Vec<Vec<Option<usize>>> = edges.iter().map(|&(u, v)| g.bfs_from(&[u, v])).collect();
    let k = edges.len();
    let mut adj = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = edges[j];
            let d = dists[i][a].into_iter().chain(dists[i][b]).min();
            if d == Some(2) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// 2-colours the auxiliary graph component by component, starting each
/// component at its lowest edge with colour 0. On an odd cycle returns the
/// conflicting pair of edge indices.
fn two_colour(adj: &[Vec<usize>]) -> std::result::Result<Vec<u8>, (usize, usize)> {
    let mut colour = vec![u8::MAX; adj.len()];
    for s in 0..adj.len() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if colour[j] == u8::MAX {
                    colour[j] = 1 - colour[i];
                    queue.push_back(j);
                } else if colour[j] == colour[i] {
                    return Err((i.min(j), i.max(j)));
                }
            }
        }
    }
    Ok(colour)
}

pub fn is_zigzag_set(g: &Graph, z: &ZigzagSet) -> Result<CheckReport> {
    validate(g, z)?;
    let edges = &z.edges;
    let mut report = CheckReport::default();

    for &(u, v) in edges {
        if let Some(&x) = g.neighbors(u).iter().find(|&&x| g.has_edge(x, v)) {
            report.push_first(Violation {
                condition: Condition::ZigzagI,
                witness: vec![u, v, x],
                detail: format!("{x} is a common neighbor of {u} and {v}"),
            });
        }
    }

    'pairs: for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if touches(g, a, b) {
                report.push_first(Violation {
                    condition: Condition::ZigzagII,
                    witness: vec![a.0, a.1, b.0, b.1],
                    detail: format!("edges {}-{} and {}-{} are at distance < 2", a.0, a.1, b.0, b.1),
                });
                break 'pairs;
            }
        }
    }

    let mut covered = vec![false; g.order()];
    for &(u, v) in edges {
        covered[u] = true;
        covered[v] = true;
    }
    for x in g.vertices().filter(|&x| !covered[x]) {
        let near = edges
            .iter()
            .filter(|&&(u, v)| g.has_edge(x, u) || g.has_edge(x, v))
            .count();
        if near != 2 {
            report.push_first(Violation {
                condition: Condition::ZigzagIII,
                witness: vec![x],
                detail: format!("{x} is at distance 1 from {near} edges, needs exactly 2"),
            });
            break;
        }
    }

    if let Err((i, j)) = two_colour(&two_step_graph(g, edges)) {
        let (a, b) = (edges[i], edges[j]);
        report.push_first(Violation {
            condition: Condition::ZigzagIV,
            witness: vec![a.0, a.1, b.0, b.1],
            detail: format!(
                "edges {}-{} and {}-{} close an odd cyclic 2-step sequence",
                a.0, a.1, b.0, b.1
            ),
        });
    }
    Ok(report)
}

/// `V_1`/`V_2` by the parity of 2-step distance from the lowest edge of each
/// 2-step component; uncovered vertices go to `V_0`.
pub fn zigzag_to_k2_partition(g: &Graph, z: &ZigzagSet) -> Result<WeakPartition> {
    is_zigzag_set(g, z)?.into_result("a zig-zag set")?;
    let colour = two_colour(&two_step_graph(g, &z.edges)).expect("checked bipartite");
    let mut labels = vec![Label::Zero; g.order()];
    for (&(u, v), &c) in z.edges.iter().zip(&colour) {
        let l = Label::Class(usize::from(c) + 1);
        labels[u] = l;
        labels[v] = l;
    }
    WeakPartition::new(Flavor::Kr(2), labels)
}

/// The edges of `<V_1 ∪ V_2>`.
pub fn k2_partition_to_zigzag(g: &Graph, p: &WeakPartition) -> Result<ZigzagSet> {
    if p.flavor() != Flavor::Kr(2) {
        return Err(Error::argument(format!("expected a K_2 partition, got {}", p.flavor())));
    }
    check_kr_amenable(g, p)?.into_result("K_2-amenable")?;
    let inside = p.nonzero();
    if inside.is_empty() {
        return Err(Error::precondition("V_1 ∪ V_2 is empty"));
    }
    Ok(ZigzagSet::new(
        g.edges().filter(|&(u, v)| inside.contains(u) && inside.contains(v)),
    ))
}

/// Exhaustive search over non-empty sets of pairwise non-touching edges that
/// satisfy (i); returns the first zig-zag set in edge order.
pub fn find_zigzag_set(g: &Graph) -> Result<Option<ZigzagSet>> {
    if g.order() < 3 {
        return Err(Error::argument("zig-zag sets are defined on graphs with at least 3 vertices"));
    }
    let candidates: Vec<Edge> = g
        .edges()
        .filter(|&(u, v)| !g.neighbors(u).iter().any(|&x| g.has_edge(x, v)))
        .collect();

    fn rec(g: &Graph, cands: &[Edge], at: usize, chosen: &mut Vec<Edge>) -> Option<ZigzagSet> {
        if at == cands.len() {
            if chosen.is_empty() {
                return None;
            }
            let z = ZigzagSet::new(chosen.iter().copied());
            return is_zigzag_set(g, &z).ok()?.is_ok().then_some(z);
        }
        let e = cands[at];
        if chosen.iter().all(|&c| !touches(g, c, e)) {
            chosen.push(e);
            let found = rec(g, cands, at + 1, chosen);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        rec(g, cands, at + 1, chosen)
    }

    Ok(rec(g, &candidates, 0, &mut Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_pair_is_zigzag() {
        let g = Graph::cycle(6).unwrap();
        let z = ZigzagSet::new([(0, 1), (3, 4)]);
        assert!(is_zigzag_set(&g, &z).unwrap().is_ok());
        let p = zigzag_to_k2_partition(&g, &z).unwrap();
        assert_eq!(p.members(Label::Class(1)).as_slice(), &[0, 1]);
        assert_eq!(p.members(Label::Class(2)).as_slice(), &[3, 4]);
        assert_eq!(p.members(Label::Zero).as_slice(), &[2, 5]);
        assert_eq!(k2_partition_to_zigzag(&g, &p).unwrap(), z);
    }

    #[test]
    fn p4_violates_distance() {
        let report = is_zigzag_set(&Graph::path(4), &ZigzagSet::new([(0, 1), (2, 3)])).unwrap();
        assert!(report.violation(Condition::ZigzagII).is_some());
    }

    #[test]
    fn c9_triple_violates_parity() {
        let g = Graph::cycle(9).unwrap();
        let z = ZigzagSet::new([(0, 1), (3, 4), (6, 7)]);
        let report = is_zigzag_set(&g, &z).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert!(report.violation(Condition::ZigzagIV).is_some());
        assert!(matches!(zigzag_to_k2_partition(&g, &z), Err(Error::Precondition { .. })));
    }

    #[test]
    fn p5_canonical_partition() {
        let g = Graph::path(5);
        let p = WeakPartition::from_parts(
            Flavor::Kr(2),
            5,
            [(Label::Class(1), vec![0, 1]), (Label::Class(2), vec![3, 4])],
        )
        .unwrap();
        assert_eq!(k2_partition_to_zigzag(&g, &p).unwrap(), ZigzagSet::new([(0, 1), (3, 4)]));
    }

    #[test]
    fn argument_errors() {
        let p2 = Graph::path(2);
        assert!(is_zigzag_set(&p2, &ZigzagSet::new([(0, 1)])).is_err());
        let c6 = Graph::cycle(6).unwrap();
        assert!(is_zigzag_set(&c6, &ZigzagSet::new([])).is_err());
        assert!(is_zigzag_set(&c6, &ZigzagSet::new([(0, 3)])).is_err());
    }

    #[test]
    fn search() {
        assert!(find_zigzag_set(&Graph::cycle(6).unwrap()).unwrap().is_some());
        assert!(find_zigzag_set(&Graph::path(4)).unwrap().is_none());
        assert!(find_zigzag_set(&Graph::cycle(5).unwrap()).unwrap().is_none());
    }
}
