//! `K_r`-amenable partitions and EOD-sets of `G □ K_r`.
//!
//! A partition `{V_0, ..., V_r}` is `K_r`-amenable when
//! (A) each `V_0` vertex has exactly one neighbor in every `V_i`,
//! (B) each `<V_i>` is an induced perfect matching, and
//! (C) `<V_1 ∪ ... ∪ V_r>` is an induced perfect matching.
//! For `r >= 3` these are exactly the traces of EOD-sets of `G □ K_r`
//! on the `K_r`-layers, which hold at most one EOD vertex each.

use super::partition::{Flavor, Label, WeakPartition};
use super::rules::{CheckReport, RuleTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::product::ProductDims;

fn kr_flavor(p: &WeakPartition) -> Result<usize> {
    match p.flavor() {
        Flavor::Kr(r) => Ok(r),
        other => Err(Error::argument(format!("expected a K_r partition, got {other}"))),
    }
}

pub fn check_kr_amenable(g: &Graph, p: &WeakPartition) -> Result<CheckReport> {
    let r = kr_flavor(p)?;
    RuleTable::new(Flavor::Kr(r))?.check(g, p)
}

/// Exhaustive search for a `K_r`-amenable partition. Classes are interchangeable,
/// so the answer is canonical up to the search order: the first vertex to leave
/// `V_0` gets class 1, the next new class is 2, and so on.
pub fn find_kr_amenable(g: &Graph, r: usize) -> Result<Option<WeakPartition>> {
    Ok(RuleTable::new(Flavor::Kr(r))?.search(g))
}

/// `D = {(g, i-1) : g ∈ V_i}` in `G □ K_r`.
pub fn kr_partition_to_eod(g: &Graph, p: &WeakPartition) -> Result<VertexSet> {
    let r = kr_flavor(p)?;
    check_kr_amenable(g, p)?.into_result("K_r-amenable")?;
    let dims = ProductDims::new(g.order(), r);
    Ok(g
        .vertices()
        .filter_map(|v| match p.label(v) {
            Label::Class(i) => Some(dims.index(v, i - 1)),
            _ => None,
        })
        .collect())
}

/// Reads the partition back off an EOD-set of `G □ K_r`: `V_i` holds the `g` with
/// `(g, i-1) ∈ D`, and `V_0` the layers `D` misses.
pub fn eod_to_kr_partition(dims: ProductDims, r: usize, d: &VertexSet) -> Result<WeakPartition> {
    if dims.h_size != r {
        return Err(Error::argument(format!(
            "second factor has {} vertices, expected K_{r}",
            dims.h_size
        )));
    }
    d.check_within(dims.order())?;
    let mut labels = vec![Label::Zero; dims.g_size];
    for v in d.iter() {
        let (g, h) = dims.coords(v);
        if labels[g] != Label::Zero {
            return Err(Error::precondition(format!(
                "K_{r}-layer of vertex {g} holds two vertices of D; for r > 2 that never happens in an EOD-set"
            )));
        }
        labels[g] = Label::Class(h + 1);
    }
    WeakPartition::new(Flavor::Kr(r), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amenability::rules::Condition;
    use crate::eod::is_eod_set;
    use crate::product::cartesian_product;

    fn c6_partition() -> (Graph, WeakPartition) {
        let g = Graph::cycle(6).unwrap();
        let p = WeakPartition::from_parts(
            Flavor::Kr(2),
            6,
            [(Label::Class(1), vec![0, 1]), (Label::Class(2), vec![3, 4])],
        )
        .unwrap();
        (g, p)
    }

    #[test]
    fn c6_is_k2_amenable() {
        let (g, p) = c6_partition();
        assert!(check_kr_amenable(&g, &p).unwrap().is_ok());
    }

    #[test]
    fn p3_violates_a() {
        let g = Graph::path(3);
        let p = WeakPartition::from_parts(Flavor::Kr(2), 3, [(Label::Class(1), vec![0, 1])]).unwrap();
        let report = check_kr_amenable(&g, &p).unwrap();
        let a = report.violation(Condition::A).expect("condition A fails");
        assert_eq!(a.witness, vec![2]);
    }

    #[test]
    fn flavor_mismatch_is_an_error() {
        let g = Graph::path(2);
        let p = WeakPartition::all_zero(Flavor::C4, 2).unwrap();
        assert!(matches!(check_kr_amenable(&g, &p), Err(Error::Argument(_))));
    }

    #[test]
    fn search_small_cases() {
        let p2 = find_kr_amenable(&Graph::path(2), 5).unwrap().unwrap();
        assert_eq!(p2.labels(), &[Label::Class(1), Label::Class(1)]);
        assert!(find_kr_amenable(&Graph::path(3), 2).unwrap().is_none());
        assert!(find_kr_amenable(&Graph::path(5), 2).unwrap().is_some());
        assert!(find_kr_amenable(&Graph::path(2), 1).is_err());
    }

    #[test]
    fn construction_and_converse() {
        let (g, p) = c6_partition();
        let d = kr_partition_to_eod(&g, &p).unwrap();
        let (prod, dims) = cartesian_product(&g, &Graph::complete(2));
        assert_eq!(d, dims.set_from_pairs([(0, 0), (1, 0), (3, 1), (4, 1)]));
        assert!(is_eod_set(&prod, &d));
        assert_eq!(eod_to_kr_partition(dims, 2, &d).unwrap(), p);

        let p2 = WeakPartition::new(Flavor::Kr(3), vec![Label::Class(1); 2]).unwrap();
        let d2 = kr_partition_to_eod(&Graph::path(2), &p2).unwrap();
        let (prod2, dims2) = cartesian_product(&Graph::path(2), &Graph::complete(3));
        assert_eq!(d2, dims2.set_from_pairs([(0, 0), (1, 0)]));
        assert!(is_eod_set(&prod2, &d2));
        assert_eq!(eod_to_kr_partition(dims2, 3, &d2).unwrap(), p2);
    }

    #[test]
    fn converse_rejects_two_per_layer() {
        let dims = ProductDims::new(3, 3);
        let d = dims.set_from_pairs([(0, 0), (0, 1)]);
        assert!(matches!(eod_to_kr_partition(dims, 3, &d), Err(Error::Precondition { .. })));
    }

    #[test]
    fn construction_requires_passing_check() {
        let g = Graph::path(3);
        let p = WeakPartition::from_parts(Flavor::Kr(2), 3, [(Label::Class(1), vec![0, 1])]).unwrap();
        match kr_partition_to_eod(&g, &p) {
            Err(Error::Precondition { violations, .. }) => assert!(!violations.is_empty()),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }
}
