//! Bounded closure of `{K_{1,r}^+}` under Type-a and Type-b.
//!
//! Members are kept as partitioned trees, deduplicated up to isomorphism and
//! a global renaming of the classes. Because the base tree's partition is
//! only determined up to class renaming, each composition also tries every
//! renaming of the right operand's classes.

use std::collections::{BTreeSet, HashSet};

use super::canon::{canonical_code, labeled_code, permutations, CanonicalCode};
use super::family::{k1r_plus, type_a, type_b, Orientation, PartitionedTree};
use crate::error::Result;

/// Canonical codes of all members of `T_r` of order at most `max_order`, sorted.
pub fn generate_family(r: usize, max_order: usize) -> Result<Vec<CanonicalCode>> {
    let codes: BTreeSet<CanonicalCode> = generate_members(r, max_order)?
        .iter()
        .map(|m| canonical_code(m.tree()).expect("members are trees"))
        .collect();
    Ok(codes.into_iter().collect())
}

/// Every partitioned member of order at most `max_order`, one per class of
/// (tree, partition) up to isomorphism and class renaming, in discovery order.
pub fn generate_members(r: usize, max_order: usize) -> Result<Vec<PartitionedTree>> {
    let base = k1r_plus(r)?;
    if base.order() > max_order {
        return Ok(Vec::new());
    }
    let perms = permutations(r);
    let mut seen = HashSet::new();
    let mut members: Vec<PartitionedTree> = Vec::new();
    let mut admit = |t: PartitionedTree, members: &mut Vec<PartitionedTree>| {
        let key = labeled_code(t.tree(), t.partition()).expect("members are trees");
        if seen.insert(key) {
            members.push(t);
        }
    };
    admit(base, &mut members);

    let mut done = 0;
    while done < members.len() {
        let k = done;
        done += 1;
        for j in 0..=k {
            let pairs = if j == k { vec![(k, k)] } else { vec![(j, k), (k, j)] };
            for (a, b) in pairs {
                for out in compositions(&members[a], &members[b], &perms, max_order)? {
                    admit(out, &mut members);
                }
            }
        }
    }
    Ok(members)
}

fn compositions(
    left: &PartitionedTree,
    right: &PartitionedTree,
    perms: &[Vec<usize>],
    max_order: usize,
) -> Result<Vec<PartitionedTree>> {
    let mut out = Vec::new();
    let a_fits = left.order() + right.order() - 2 <= max_order;
    let b_fits = left.order() + right.order() <= max_order;
    if !a_fits {
        return Ok(out);
    }
    let r = left.r();
    for perm in perms {
        let right = right.permute_classes(perm)?;
        for i in 1..=r {
            let left_edges = left.class_edges(i);
            let right_edges = right.class_edges(i);
            for &el in &left_edges {
                for &er in &right_edges {
                    for orientation in [Orientation::Straight, Orientation::Flipped] {
                        out.push(type_a(left, &right, i, el, er, orientation)?);
                    }
                }
            }
        }
        if b_fits {
            for x in left.zero_vertices() {
                for y in right.zero_vertices() {
                    out.push(type_b(left, &right, x, y)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn base_only() {
        let spider = generate_family(3, 7).unwrap();
        assert_eq!(spider.len(), 1);
        assert_eq!(spider[0].order(), 7);
        let p5 = generate_family(2, 5).unwrap();
        assert_eq!(p5, vec![canonical_code(&Graph::path(5)).unwrap()]);
        assert!(generate_family(3, 6).unwrap().is_empty());
    }

    #[test]
    fn r2_up_to_eight() {
        let codes = generate_family(2, 8).unwrap();
        assert!(codes.iter().all(|c| c.order() == 5 || c.order() == 8));
        assert!(codes.iter().any(|c| c.order() == 8));
        assert!(codes.contains(&canonical_code(&Graph::path(8)).unwrap()));
    }
}
