//! All labeled graphs on `n` vertices, by ascending edge mask.
//!
//! Bit `k` of the mask selects the `k`-th vertex pair in lexicographic order
//! `(0,1), (0,2), ..., (n-2,n-1)`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest order enumerated without an explicit override.
pub const LABELED_MAX_ORDER: usize = 6;
/// Hard ceiling: the mask has to fit in 64 bits.
const MASK_MAX_ORDER: usize = 11;

pub fn vertex_pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labeled graph with edge mask `mask`.
pub fn labeled_graph(n: usize, mask: u64) -> Result<Graph> {
    let pairs = vertex_pairs(n);
    if pairs.len() < 64 && mask >> pairs.len() != 0 {
        return Err(Error::argument(format!("mask {mask:#x} has bits beyond the {} pairs of {n} vertices", pairs.len())));
    }
    Graph::from_edges(n, pairs.into_iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, e)| e))
}

pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<Edge>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self.pairs.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Some((mask, Graph::from_edges(self.n, edges).expect("pairs are distinct")))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Every labeled graph on `n` vertices together with its mask. Orders above
/// [`LABELED_MAX_ORDER`] need `allow_large`.
pub fn enumerate_labeled_graphs(n: usize, allow_large: bool) -> Result<LabeledGraphs> {
    if n == 0 {
        return Err(Error::argument("order must be at least 1"));
    }
    if n > LABELED_MAX_ORDER && !allow_large {
        return Err(Error::argument(format!(
            "{n} vertices means 2^{} graphs; orders above {LABELED_MAX_ORDER} need the large-order override",
            n * (n - 1) / 2
        )));
    }
    if n > MASK_MAX_ORDER {
        return Err(Error::argument(format!("labeled enumeration supports at most {MASK_MAX_ORDER} vertices")));
    }
    let pairs = vertex_pairs(n);
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, end })
}
