//! Membership in `T_r` with a construction trace as witness.
//!
//! The recognizer first searches for a `K_r`-amenable partition, then takes
//! the tree apart along it: a `V_0` vertex of degree above `r` has a `V_0`
//! neighbor and the edge between them splits off a Type-b step; otherwise the
//! two closest `V_0` vertices `u, v` locate a Type-a step at the edge `uw`
//! leaving `u` toward `v`, where the `u` side gets a fresh pendant pair in the
//! class of `w`. Each piece keeps the induced partition and has fewer `V_0`
//! vertices, ending at `K_{1,r}^+`.

use super::canon::require_tree;
use super::family::Orientation;
use super::trace::TreeTrace;
use crate::amenability::{find_kr_amenable, Flavor, Label, WeakPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognizeOutcome {
    /// `P_2`, which is `K_r`-amenable but outside `T_r`.
    P2,
    Member(TreeTrace),
    NotMember,
}

impl RecognizeOutcome {
    /// True for `P_2` and for members: exactly the `K_r`-amenable trees.
    pub fn is_amenable(&self) -> bool {
        !matches!(self, RecognizeOutcome::NotMember)
    }

    pub fn trace(&self) -> Option<&TreeTrace> {
        match self {
            RecognizeOutcome::Member(t) => Some(t),
            _ => None,
        }
    }
}

pub fn recognize_tree(t: &Graph, r: usize) -> Result<RecognizeOutcome> {
    require_tree(t)?;
    if r < 2 {
        return Err(Error::argument(format!("r must be at least 2, got {r}")));
    }
    if t.order() == 2 {
        return Ok(RecognizeOutcome::P2);
    }
    match find_kr_amenable(t, r)? {
        None => Ok(RecognizeOutcome::NotMember),
        Some(p) => decompose(t, &p).map(|(trace, _)| RecognizeOutcome::Member(trace)),
    }
}

/// Like [`recognize_tree`] but decomposes along a given partition.
///
/// Also returns the map from vertices of `t` to vertices of the replayed
/// tree; it is an isomorphism that preserves labels.
pub fn trace_from_partition(t: &Graph, p: &WeakPartition) -> Result<(TreeTrace, Vec<usize>)> {
    require_tree(t)?;
    // PartitionedTree::new runs the checker and rejects non-K_r flavors.
    super::family::PartitionedTree::new(t.clone(), p.clone())?;
    if t.order() < 3 {
        return Err(Error::argument("trees of order below 3 have no construction trace"));
    }
    decompose(t, p)
}

fn restrict(p: &WeakPartition, keep: &[usize]) -> WeakPartition {
    let labels = keep.iter().map(|&v| p.label(v)).collect();
    WeakPartition::new(p.flavor(), labels).expect("restriction keeps valid labels")
}

fn class_of(p: &WeakPartition, v: usize) -> usize {
    match p.label(v) {
        Label::Class(i) => i,
        other => unreachable!("vertex {v} expected in a class, has label {other}"),
    }
}

fn class_partner(t: &Graph, p: &WeakPartition, v: usize) -> usize {
    let l = p.label(v);
    *t.neighbors(v)
        .iter()
        .find(|&&x| p.label(x) == l)
        .expect("classes induce perfect matchings")
}

/// Vertices of the component of `t - ab` containing `a`, sorted.
fn side_of(t: &Graph, a: usize, b: usize) -> Vec<usize> {
    let mut seen = vec![false; t.order()];
    seen[a] = true;
    seen[b] = true;
    let mut stack = vec![a];
    let mut out = vec![a];
    while let Some(v) = stack.pop() {
        for &x in t.neighbors(v) {
            if !seen[x] {
                seen[x] = true;
                out.push(x);
                stack.push(x);
            }
        }
    }
    out.sort_unstable();
    out
}

fn local_index(keep: &[usize], v: usize) -> usize {
    keep.binary_search(&v).expect("vertex belongs to the piece")
}

fn decompose(t: &Graph, p: &WeakPartition) -> Result<(TreeTrace, Vec<usize>)> {
    let Flavor::Kr(r) = p.flavor() else {
        return Err(Error::argument("decomposition needs a K_r partition"));
    };
    let zeros: Vec<usize> = p.members(Label::Zero).iter().collect();
    match zeros.len() {
        0 => Err(Error::argument("a tree of order at least 3 has V_0 vertices")),
        1 => Ok(leaf(t, p, r, zeros[0])),
        _ => {
            if let Some(&v) = zeros.iter().find(|&&v| t.degree(v) > r) {
                let w = *t
                    .neighbors(v)
                    .iter()
                    .find(|&&x| p.label(x) == Label::Zero)
                    .expect("a V_0 vertex of degree above r has a V_0 neighbor");
                Ok(split_b(t, p, v, w)?)
            } else {
                split_a(t, p, &zeros)
            }
        }
    }
}

fn leaf(t: &Graph, p: &WeakPartition, r: usize, center: usize) -> (TreeTrace, Vec<usize>) {
    let mut phi = vec![0usize; t.order()];
    for &u in t.neighbors(center) {
        let i = class_of(p, u);
        let w = class_partner(t, p, u);
        phi[u] = 2 * i - 1;
        phi[w] = 2 * i;
    }
    (TreeTrace::Leaf(r), phi)
}

fn split_b(t: &Graph, p: &WeakPartition, v: usize, w: usize) -> Result<(TreeTrace, Vec<usize>)> {
    let left_keep = side_of(t, v, w);
    let right_keep = side_of(t, w, v);
    let (left_g, _) = t.induced_subgraph(&left_keep);
    let (right_g, _) = t.induced_subgraph(&right_keep);
    let (left, phi_l) = decompose(&left_g, &restrict(p, &left_keep))?;
    let (right, phi_r) = decompose(&right_g, &restrict(p, &right_keep))?;
    let n_left = left_keep.len();

    let mut phi = vec![0usize; t.order()];
    for (local, &old) in left_keep.iter().enumerate() {
        phi[old] = phi_l[local];
    }
    for (local, &old) in right_keep.iter().enumerate() {
        phi[old] = n_left + phi_r[local];
    }
    let trace = TreeTrace::TypeB {
        x: phi_l[local_index(&left_keep, v)],
        y: phi_r[local_index(&right_keep, w)],
        left: Box::new(left),
        right: Box::new(right),
    };
    Ok((trace, phi))
}

fn split_a(t: &Graph, p: &WeakPartition, zeros: &[usize]) -> Result<(TreeTrace, Vec<usize>)> {
    let dist: Vec<Vec<Option<usize>>> = zeros.iter().map(|&z| t.bfs_from(&[z])).collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for (a, &u) in zeros.iter().enumerate() {
        for &v in &zeros[a + 1..] {
            let d = dist[a][v].expect("trees are connected");
            if best.is_none_or(|b| (d, u, v) < b) {
                best = Some((d, u, v));
            }
        }
    }
    let (d, u, v) = best.expect("at least two V_0 vertices");
    let v_idx = zeros.binary_search(&v).expect("v is a V_0 vertex");
    let w = *t
        .neighbors(u)
        .iter()
        .find(|&&x| dist[v_idx][x] == Some(d - 1))
        .expect("u has a neighbor on the path to v");
    let i = class_of(p, w);
    let w2 = class_partner(t, p, w);

    // T' = T_u plus a pendant pair t - t' hanging from u, both in class i.
    let left_keep = side_of(t, u, w);
    let (t_u, _) = t.induced_subgraph(&left_keep);
    let n_u = left_keep.len();
    let (pend, pend2) = (n_u, n_u + 1);
    let u_local = local_index(&left_keep, u);
    let left_g = Graph::from_edges(n_u + 2, t_u.edges().chain([(u_local, pend), (pend, pend2)]))?;
    let mut left_labels: Vec<Label> = left_keep.iter().map(|&x| p.label(x)).collect();
    left_labels.extend([Label::Class(i); 2]);
    let left_p = WeakPartition::new(p.flavor(), left_labels)?;

    let right_keep = side_of(t, w, u);
    let (right_g, _) = t.induced_subgraph(&right_keep);
    let (left, phi_l) = decompose(&left_g, &left_p)?;
    let (right, phi_r) = decompose(&right_g, &restrict(p, &right_keep))?;

    let e_left = (phi_l[pend], phi_l[pend2]);
    let e_right = (phi_r[local_index(&right_keep, w)], phi_r[local_index(&right_keep, w2)]);
    let n_left = n_u + 2;
    let mut phi = vec![0usize; t.order()];
    for (local, &old) in left_keep.iter().enumerate() {
        phi[old] = phi_l[local];
    }
    for (local, &old) in right_keep.iter().enumerate() {
        phi[old] = if old == w {
            e_left.0
        } else if old == w2 {
            e_left.1
        } else {
            let x = phi_r[local];
            let skipped = usize::from(e_right.0 < x) + usize::from(e_right.1 < x);
            n_left + x - skipped
        };
    }
    let trace = TreeTrace::TypeA {
        class: i,
        left_edge: e_left,
        right_edge: e_right,
        orientation: Orientation::Straight,
        left: Box::new(left),
        right: Box::new(right),
    };
    Ok((trace, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::canon::canonical_code;
    use crate::trees::family::{k1r_plus, type_b};

    fn assert_faithful(t: &Graph, p: &WeakPartition) {
        let (trace, phi) = trace_from_partition(t, p).unwrap();
        let rebuilt = trace.replay().unwrap();
        assert_eq!(rebuilt.order(), t.order());
        for (a, b) in t.edges() {
            assert!(rebuilt.tree().has_edge(phi[a], phi[b]), "{a}-{b} not preserved by {phi:?}");
        }
        for v in t.vertices() {
            assert_eq!(rebuilt.partition().label(phi[v]), p.label(v));
        }
    }

    #[test]
    fn p5_is_a_leaf() {
        assert_eq!(recognize_tree(&Graph::path(5), 2).unwrap(), RecognizeOutcome::Member(TreeTrace::Leaf(2)));
    }

    #[test]
    fn p4_is_not_a_member() {
        assert_eq!(recognize_tree(&Graph::path(4), 2).unwrap(), RecognizeOutcome::NotMember);
    }

    #[test]
    fn p2_is_distinguished() {
        assert_eq!(recognize_tree(&Graph::path(2), 3).unwrap(), RecognizeOutcome::P2);
    }

    #[test]
    fn type_b_join_is_recognized() {
        let s = k1r_plus(3).unwrap();
        let joined = type_b(&s, &s, 0, 0).unwrap();
        let outcome = recognize_tree(joined.tree(), 3).unwrap();
        let trace = outcome.trace().expect("member");
        assert!(matches!(trace, TreeTrace::TypeB { .. }));
        assert_eq!(
            canonical_code(trace.replay().unwrap().tree()).unwrap(),
            canonical_code(joined.tree()).unwrap()
        );
        assert_faithful(joined.tree(), joined.partition());
    }

    #[test]
    fn type_a_join_is_faithful() {
        let s = k1r_plus(3).unwrap();
        let t = crate::trees::family::type_a(&s, &s, 2, (3, 4), (4, 3), Orientation::Straight).unwrap();
        assert_faithful(t.tree(), t.partition());
        let outcome = recognize_tree(t.tree(), 3).unwrap();
        assert!(matches!(outcome.trace(), Some(TreeTrace::TypeA { .. })));
    }

    #[test]
    fn non_tree_is_an_error() {
        assert!(recognize_tree(&Graph::cycle(5).unwrap(), 2).is_err());
    }
}
