//! One representative per isomorphism class of trees of a given order.
//!
//! Orders up to [`PRUFER_MAX_ORDER`] decode every Prüfer sequence; larger
//! orders grow each tree of the previous order by one pendant vertex. Both
//! deduplicate by canonical code and return trees sorted by that code.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::canon::{canonical_code, CanonicalCode};
use crate::graph::{Edge, Graph};

pub const PRUFER_MAX_ORDER: usize = 9;

pub fn enumerate_trees(order: usize) -> Vec<Graph> {
    enumerate_coded_trees(order).into_values().collect()
}

type TreeTable = Arc<BTreeMap<CanonicalCode, Graph>>;

/// Like [`enumerate_trees`], keyed by canonical code. Results are cached for
/// the life of the process.
pub fn enumerate_coded_trees(order: usize) -> BTreeMap<CanonicalCode, Graph> {
    (*cached(order)).clone()
}

fn cached(order: usize) -> TreeTable {
    static CACHE: OnceLock<Mutex<HashMap<usize, TreeTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("tree cache lock").get(&order) {
        return Arc::clone(hit);
    }
    // Computed outside the lock; a concurrent duplicate computation is harmless.
    let table = Arc::new(compute(order));
    cache
        .lock()
        .expect("tree cache lock")
        .entry(order)
        .or_insert(table)
        .clone()
}

fn compute(order: usize) -> BTreeMap<CanonicalCode, Graph> {
    match order {
        0 => BTreeMap::new(),
        1 => single(Graph::empty(1)),
        2 => single(Graph::path(2)),
        n if n <= PRUFER_MAX_ORDER => by_prufer(n),
        n => by_pendant_extension(n),
    }
}

fn single(t: Graph) -> BTreeMap<CanonicalCode, Graph> {
    let code = canonical_code(&t).expect("tree");
    BTreeMap::from([(code, t)])
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges: Vec<Edge> = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

fn by_prufer(n: usize) -> BTreeMap<CanonicalCode, Graph> {
    let mut out = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = prufer_decode(&seq, n);
        out.entry(canonical_code(&t).expect("tree")).or_insert(t);
        // odometer increment over base n
        let mut k = 0;
        while k < seq.len() && seq[k] == n - 1 {
            seq[k] = 0;
            k += 1;
        }
        if k == seq.len() {
            return out;
        }
        seq[k] += 1;
    }
}

fn by_pendant_extension(n: usize) -> BTreeMap<CanonicalCode, Graph> {
    let mut out = BTreeMap::new();
    for t in cached(n - 1).values() {
        for v in t.vertices() {
            let edges = t.edges().chain(std::iter::once((v, n - 1)));
            let grown = Graph::from_edges(n, edges).expect("adding a leaf keeps a tree");
            out.entry(canonical_code(&grown).expect("tree")).or_insert(grown);
        }
    }
    out
}
