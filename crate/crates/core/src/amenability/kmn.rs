//! `K_{m,n}`-amenable partitions and EOD-sets of `G □ K_{m,n}`.
//!
//! The factor `K_{m,n}` has side A = classes `1..=m` (product coordinates
//! `0..m`) and side B = classes `m+1..=m+n`. A vertex of `G` whose layer holds
//! two EOD vertices gets a pair label `[i, m+j]`, one index per side.

use super::partition::{Flavor, Label, WeakPartition};
use super::rules::{CheckReport, RuleTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::product::ProductDims;

fn kmn_flavor(p: &WeakPartition) -> Result<(usize, usize)> {
    match p.flavor() {
        Flavor::Kmn(m, n) => Ok((m, n)),
        other => Err(Error::argument(format!("expected a K_m,n partition, got {other}"))),
    }
}

/// Checks conditions (I)–(V).
pub fn check_kmn_amenable(g: &Graph, p: &WeakPartition) -> Result<CheckReport> {
    let (m, n) = kmn_flavor(p)?;
    RuleTable::new(Flavor::Kmn(m, n))?.check(g, p)
}

/// Exhaustive search. Classes within a side are interchangeable and, when
/// `m = n`, so are the sides; both symmetries are broken during the search.
pub fn find_kmn_amenable(g: &Graph, m: usize, n: usize) -> Result<Option<WeakPartition>> {
    Ok(RuleTable::new(Flavor::Kmn(m, n))?.search(g))
}

pub fn kmn_partition_to_eod(g: &Graph, p: &WeakPartition) -> Result<VertexSet> {
    let (m, n) = kmn_flavor(p)?;
    check_kmn_amenable(g, p)?.into_result("K_m,n-amenable")?;
    let dims = ProductDims::new(g.order(), m + n);
    let mut d = VertexSet::new();
    for v in g.vertices() {
        match p.label(v) {
            Label::Zero => {}
            Label::Class(i) => {
                d.insert(dims.index(v, i - 1));
            }
            Label::Pair(i, j) => {
                d.insert(dims.index(v, i - 1));
                d.insert(dims.index(v, j - 1));
            }
        }
    }
    Ok(d)
}

/// Labels each `g` by the pattern `D ∩ ^gK_{m,n}`.
///
/// Fails when a layer holds more than two vertices of `D`, or two on the same
/// side: in an EOD-set of a product with a diameter-2 factor each layer meets
/// `D` in at most two vertices, and two such vertices are adjacent.
pub fn eod_to_kmn_partition(dims: ProductDims, m: usize, n: usize, d: &VertexSet) -> Result<WeakPartition> {
    let flavor = Flavor::Kmn(m, n);
    flavor.validate()?;
    if dims.h_size != m + n {
        return Err(Error::argument(format!(
            "second factor has {} vertices, expected K_{m},{n}",
            dims.h_size
        )));
    }
    d.check_within(dims.order())?;
    let mut labels = Vec::with_capacity(dims.g_size);
    for g in 0..dims.g_size {
        let hit: Vec<usize> = (0..dims.h_size).filter(|&h| d.contains(dims.index(g, h))).collect();
        let label = match hit.as_slice() {
            [] => Label::Zero,
            &[h] => Label::Class(h + 1),
            &[a, b] if a < m && b >= m => Label::Pair(a + 1, b + 1),
            &[_, _] => {
                return Err(Error::precondition(format!(
                    "layer of vertex {g} holds two non-adjacent (same-side) vertices of D; an EOD-set meets each layer of a diameter-2 factor in an adjacent pair at most"
                )))
            }
            _ => {
                return Err(Error::precondition(format!(
                    "layer of vertex {g} holds {} vertices of D; an EOD-set meets each layer of a diameter-2 factor at most twice",
                    hit.len()
                )))
            }
        };
        labels.push(label);
    }
    WeakPartition::new(flavor, labels)
}
