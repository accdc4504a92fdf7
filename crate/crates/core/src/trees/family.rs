//! Partitioned trees and the constructions that generate the family `T_r`.

use std::fmt;
use std::str::FromStr;

use super::canon::require_tree;
use crate::amenability::{check_kr_amenable, Flavor, Label, WeakPartition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A tree with a `K_r`-amenable weak partition. Only constructible through
/// checked paths, so every value passes `check_kr_amenable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedTree {
    tree: Graph,
    partition: WeakPartition,
}

impl PartitionedTree {
    pub fn new(tree: Graph, partition: WeakPartition) -> Result<Self> {
        require_tree(&tree)?;
        let Flavor::Kr(_) = partition.flavor() else {
            return Err(Error::argument(format!(
                "expected a K_r partition, got {}",
                partition.flavor()
            )));
        };
        check_kr_amenable(&tree, &partition)?.into_result("K_r-amenable")?;
        Ok(PartitionedTree { tree, partition })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn partition(&self) -> &WeakPartition {
        &self.partition
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn r(&self) -> usize {
        self.partition.flavor().classes()
    }

    pub fn into_parts(self) -> (Graph, WeakPartition) {
        (self.tree, self.partition)
    }

    /// Renames class `i` to `perm[i-1]`; `perm` must be a permutation of `1..=r`.
    pub fn permute_classes(&self, perm: &[usize]) -> Result<Self> {
        let r = self.r();
        let mut seen = vec![false; r + 1];
        if perm.len() != r || perm.iter().any(|&c| c == 0 || c > r || std::mem::replace(&mut seen[c], true)) {
            return Err(Error::argument(format!("{perm:?} is not a permutation of 1..={r}")));
        }
        let labels = self
            .partition
            .labels()
            .iter()
            .map(|&l| match l {
                Label::Class(i) => Label::Class(perm[i - 1]),
                other => other,
            })
            .collect();
        Ok(PartitionedTree {
            tree: self.tree.clone(),
            partition: WeakPartition::new(self.partition.flavor(), labels)?,
        })
    }

    /// Edges of `<V_i>`.
    pub fn class_edges(&self, i: usize) -> Vec<Edge> {
        self.tree
            .edges()
            .filter(|&(u, v)| self.partition.label(u) == Label::Class(i) && self.partition.label(v) == Label::Class(i))
            .collect()
    }

    pub fn zero_vertices(&self) -> Vec<usize> {
        self.partition.members(Label::Zero).iter().collect()
    }
}

/// How the two identified edges of a Type-a construction line up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `eL.0 ~ eR.0` and `eL.1 ~ eR.1`.
    Straight,
    /// `eL.0 ~ eR.1` and `eL.1 ~ eR.0`.
    Flipped,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Straight => "straight",
            Orientation::Flipped => "flipped",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "straight" => Ok(Orientation::Straight),
            "flipped" => Ok(Orientation::Flipped),
            _ => Err(Error::argument(format!("unknown orientation {s:?}"))),
        }
    }
}

/// `K_{1,r}^+` with center 0, middle vertices `u_i = 2i-1` and leaves
/// `w_i = 2i`; the center is in `V_0` and `{u_i, w_i} = V_i`.
pub fn k1r_plus(r: usize) -> Result<PartitionedTree> {
    if r < 2 {
        return Err(Error::argument(format!("K_1,r^+ needs r >= 2, got {r}")));
    }
    let edges = (1..=r).flat_map(|i| [(0, 2 * i - 1), (2 * i - 1, 2 * i)]);
    let tree = Graph::from_edges(2 * r + 1, edges)?;
    let mut labels = vec![Label::Zero];
    labels.extend((1..=r).flat_map(|i| [Label::Class(i); 2]));
    PartitionedTree::new(tree, WeakPartition::new(Flavor::Kr(r), labels)?)
}

fn same_r(left: &PartitionedTree, right: &PartitionedTree) -> Result<usize> {
    if left.r() != right.r() {
        return Err(Error::argument(format!(
            "operands have different r ({} and {})",
            left.r(),
            right.r()
        )));
    }
    Ok(left.r())
}

fn require_class_edge(t: &PartitionedTree, e: Edge, i: usize, side: &str) -> Result<()> {
    let (a, b) = e;
    let ok = t.tree.has_edge(a, b)
        && t.partition.label(a) == Label::Class(i)
        && t.partition.label(b) == Label::Class(i);
    if ok {
        Ok(())
    } else {
        Err(Error::argument(format!("{side} edge {a}-{b} is not an edge of <V_{i}>")))
    }
}

/// Identifies `eL` of `left` with `eR` of `right`, both inside class `i`.
///
/// The result keeps `left`'s vertex numbering and appends the vertices of
/// `right` other than the ends of `eR`, in increasing order.
pub fn type_a(
    left: &PartitionedTree,
    right: &PartitionedTree,
    i: usize,
    e_left: Edge,
    e_right: Edge,
    orientation: Orientation,
) -> Result<PartitionedTree> {
    let r = same_r(left, right)?;
    if i == 0 || i > r {
        return Err(Error::argument(format!("class {i} is outside 1..={r}")));
    }
    require_class_edge(left, e_left, i, "left")?;
    require_class_edge(right, e_right, i, "right")?;

    let n = left.order();
    let (mate0, mate1) = match orientation {
        Orientation::Straight => (e_left.0, e_left.1),
        Orientation::Flipped => (e_left.1, e_left.0),
    };
    let mut map = vec![usize::MAX; right.order()];
    map[e_right.0] = mate0;
    map[e_right.1] = mate1;
    let mut next = n;
    let mut labels = left.partition.labels().to_vec();
    for v in right.tree.vertices() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
            labels.push(right.partition.label(v));
        }
    }
    let (a, b) = (e_right.0.min(e_right.1), e_right.0.max(e_right.1));
    let edges = left.tree.edges().chain(
        right
            .tree
            .edges()
            .filter(|&e| e != (a, b))
            .map(|(u, v)| (map[u], map[v])),
    );
    let tree = Graph::from_edges(next, edges)?;
    PartitionedTree::new(tree, WeakPartition::new(Flavor::Kr(r), labels)?)
}

/// Disjoint union of `left` and `right` (shifted by `|left|`) plus the edge `x-y`.
pub fn type_b(left: &PartitionedTree, right: &PartitionedTree, x: usize, y: usize) -> Result<PartitionedTree> {
    let r = same_r(left, right)?;
    if x >= left.order() || left.partition.label(x) != Label::Zero {
        return Err(Error::argument(format!("{x} is not a V_0 vertex of the left tree")));
    }
    if y >= right.order() || right.partition.label(y) != Label::Zero {
        return Err(Error::argument(format!("{y} is not a V_0 vertex of the right tree")));
    }
    let n = left.order();
    let edges = left
        .tree
        .edges()
        .chain(right.tree.edges().map(|(u, v)| (u + n, v + n)))
        .chain(std::iter::once((x, y + n)));
    let tree = Graph::from_edges(n + right.order(), edges)?;
    let mut labels = left.partition.labels().to_vec();
    labels.extend_from_slice(right.partition.labels());
    PartitionedTree::new(tree, WeakPartition::new(Flavor::Kr(r), labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::canon::canonical_code;

    #[test]
    fn base_trees() {
        let p5 = k1r_plus(2).unwrap();
        assert_eq!(canonical_code(p5.tree()).unwrap(), canonical_code(&Graph::path(5)).unwrap());
        assert_eq!(p5.partition().label(0), Label::Zero);
        let spider = k1r_plus(3).unwrap();
        assert_eq!(spider.order(), 7);
        assert_eq!(spider.tree().degree(0), 3);
        for r in 2..=6 {
            let t = k1r_plus(r).unwrap();
            assert!(check_kr_amenable(t.tree(), t.partition()).unwrap().is_ok());
        }
        assert!(k1r_plus(1).is_err());
    }

    #[test]
    fn type_a_orders() {
        let p5 = k1r_plus(2).unwrap();
        let t = type_a(&p5, &p5, 1, (1, 2), (1, 2), Orientation::Straight).unwrap();
        assert_eq!(t.order(), 8);
        let s = k1r_plus(3).unwrap();
        let t = type_a(&s, &s, 2, (3, 4), (3, 4), Orientation::Flipped).unwrap();
        assert_eq!(t.order(), 12);
    }

    #[test]
    fn orientations_can_differ() {
        let s = k1r_plus(3).unwrap();
        let a = type_a(&s, &s, 1, (1, 2), (1, 2), Orientation::Straight).unwrap();
        let b = type_a(&s, &s, 1, (1, 2), (1, 2), Orientation::Flipped).unwrap();
        assert_ne!(canonical_code(a.tree()).unwrap(), canonical_code(b.tree()).unwrap());
    }

    #[test]
    fn type_a_rejects_cross_class_edge() {
        let s = k1r_plus(3).unwrap();
        assert!(matches!(
            type_a(&s, &s, 1, (0, 1), (1, 2), Orientation::Straight),
            Err(Error::Argument(_))
        ));
        assert!(type_a(&s, &s, 2, (1, 2), (3, 4), Orientation::Straight).is_err());
    }

    #[test]
    fn type_b_orders_and_errors() {
        let p5 = k1r_plus(2).unwrap();
        assert_eq!(type_b(&p5, &p5, 0, 0).unwrap().order(), 10);
        let s = k1r_plus(3).unwrap();
        assert_eq!(type_b(&s, &s, 0, 0).unwrap().order(), 14);
        assert!(matches!(type_b(&s, &s, 1, 0), Err(Error::Argument(_))));
    }

    #[test]
    fn mixed_r_rejected() {
        assert!(type_b(&k1r_plus(2).unwrap(), &k1r_plus(3).unwrap(), 0, 0).is_err());
    }
}
