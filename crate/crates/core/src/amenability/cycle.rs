//! `C_4`- and `C_5`-parallel amenable partitions.
//!
//! Conditions (A) and (B) as for `K_r`, plus (C′): `<V_i ∪ V_{i+1}>` is an
//! induced matching, and (D) for `C_5` (one neighbor in each of `V_{i±2}`) or
//! (D′) for `C_4` (one neighbor in `V_{i+2}`). Indices are cyclic over `1..=k`.
//! These partitions correspond to EOD-sets of `G □ C_k` that are parallel
//! with respect to `G`.

use super::partition::{Flavor, Label, WeakPartition};
use super::rules::{CheckReport, RuleTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::product::ProductDims;

fn cycle_flavor(k: usize) -> Result<Flavor> {
    match k {
        4 => Ok(Flavor::C4),
        5 => Ok(Flavor::C5),
        _ => Err(Error::argument(format!("cycle-parallel amenability is defined for k = 4, 5; got {k}"))),
    }
}

fn cycle_len(p: &WeakPartition) -> Result<usize> {
    match p.flavor() {
        Flavor::C4 => Ok(4),
        Flavor::C5 => Ok(5),
        other => Err(Error::argument(format!("expected a C4 or C5 partition, got {other}"))),
    }
}

pub fn check_cycle_parallel_amenable(g: &Graph, p: &WeakPartition) -> Result<CheckReport> {
    let k = cycle_len(p)?;
    RuleTable::new(cycle_flavor(k)?)?.check(g, p)
}

pub fn find_cycle_parallel_amenable(g: &Graph, k: usize) -> Result<Option<WeakPartition>> {
    Ok(RuleTable::new(cycle_flavor(k)?)?.search(g))
}

/// `D = {(g, i-1) : g ∈ V_i}` in `G □ C_k`; parallel with respect to `G`.
pub fn cycle_partition_to_parallel_eod(g: &Graph, p: &WeakPartition) -> Result<VertexSet> {
    let k = cycle_len(p)?;
    check_cycle_parallel_amenable(g, p)?.into_result("cycle-parallel amenable")?;
    let dims = ProductDims::new(g.order(), k);
    Ok(g
        .vertices()
        .filter_map(|v| match p.label(v) {
            Label::Class(i) => Some(dims.index(v, i - 1)),
            _ => None,
        })
        .collect())
}

/// Reads the partition off an EOD-set of `G □ C_k` that is parallel w.r.t. `G`.
///
/// A `C_k`-layer holding two vertices of `D` means some edge of `<D>` projects
/// to a single vertex of `G`, so `D` is not parallel and the call fails.
pub fn parallel_eod_to_cycle_partition(dims: ProductDims, k: usize, d: &VertexSet) -> Result<WeakPartition> {
    let flavor = cycle_flavor(k)?;
    if dims.h_size != k {
        return Err(Error::argument(format!(
            "second factor has {} vertices, expected C_{k}",
            dims.h_size
        )));
    }
    d.check_within(dims.order())?;
    let mut labels = vec![Label::Zero; dims.g_size];
    for v in d.iter() {
        let (g, h) = dims.coords(v);
        if labels[g] != Label::Zero {
            return Err(Error::precondition(format!(
                "C_{k}-layer of vertex {g} holds two vertices of D, so D is not parallel with respect to the first factor"
            )));
        }
        labels[g] = Label::Class(h + 1);
    }
    WeakPartition::new(flavor, labels)
}
