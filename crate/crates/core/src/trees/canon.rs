//! Center-rooted parenthesis codes for trees.
//!
//! A rooted subtree encodes as `(` + its children's codes in sorted order +
//! `)`. The tree is rooted at its center; a bicentral tree takes the smaller
//! of the two encodings. Equal codes mean isomorphic trees.

use std::fmt;

use crate::amenability::{Label, WeakPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices encoded (one `(` per vertex).
    pub fn order(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'(').count()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<CanonicalCode> for String {
    fn from(c: CanonicalCode) -> String {
        c.0
    }
}

pub(crate) fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::argument(format!(
            "expected a tree, got a graph with {} vertices, {} edges{}",
            t.order(),
            t.size(),
            if t.is_connected() { "" } else { " (disconnected)" }
        )))
    }
}

/// The one or two central vertices, by repeated leaf stripping.
pub fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &x in t.neighbors(leaf) {
                if degree[x] > 1 {
                    degree[x] -= 1;
                    if degree[x] == 1 {
                        next.push(x);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, root: usize, tag: &dyn Fn(usize) -> String) -> Vec<u8> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &x in t.neighbors(v) {
            if parent[x] == usize::MAX {
                parent[x] = v;
                stack.push(x);
            }
        }
    }
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        code.extend_from_slice(tag(v).as_bytes());
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if v == root {
            return code;
        }
        children[parent[v]].push(code);
    }
    unreachable!("the root is processed last")
}

fn code_with(t: &Graph, tag: &dyn Fn(usize) -> String) -> CanonicalCode {
    if t.order() == 0 {
        return CanonicalCode(String::new());
    }
    let code = tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, tag))
        .min()
        .expect("a non-empty tree has a center");
    CanonicalCode(String::from_utf8(code).expect("codes are built from UTF-8 pieces"))
}

pub fn canonical_code(t: &Graph) -> Result<CanonicalCode> {
    require_tree(t)?;
    Ok(code_with(t, &|_| String::new()))
}

/// Code of a tree together with its `K_r` partition, minimized over
/// renamings of the classes `1..=r`. Two partitioned trees get the same code
/// iff some isomorphism carries one partition to a class-renaming of the other.
pub fn labeled_code(t: &Graph, p: &WeakPartition) -> Result<CanonicalCode> {
    require_tree(t)?;
    if p.order() != t.order() {
        return Err(Error::argument("partition and tree have different orders"));
    }
    let r = p.flavor().classes();
    let mut best: Option<CanonicalCode> = None;
    for perm in permutations(r) {
        let tag = |v: usize| match p.label(v) {
            Label::Zero => "0".to_string(),
            Label::Class(i) => perm[i - 1].to_string(),
            Label::Pair(i, j) => format!("[{i},{j}]"),
        };
        let code = code_with(t, &tag);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    Ok(best.expect("at least one permutation"))
}

/// All permutations of `1..=r` in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=r).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_copies_agree() {
        let p4 = Graph::path(4);
        let relabeled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&p4).unwrap(), canonical_code(&relabeled).unwrap());
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&Graph::star(3)).unwrap());
    }

    #[test]
    fn small_codes() {
        assert_eq!(canonical_code(&Graph::empty(1)).unwrap().as_str(), "()");
        assert_eq!(canonical_code(&Graph::path(2)).unwrap().as_str(), "(())");
        assert_eq!(canonical_code(&Graph::path(3)).unwrap().as_str(), "(()())");
        assert_eq!(canonical_code(&Graph::path(5)).unwrap().order(), 5);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(canonical_code(&Graph::cycle(4).unwrap()).is_err());
        assert!(canonical_code(&Graph::empty(2)).is_err());
    }

    #[test]
    fn centers() {
        assert_eq!(tree_centers(&Graph::path(5)), vec![2]);
        assert_eq!(tree_centers(&Graph::path(6)), vec![2, 3]);
        assert_eq!(tree_centers(&Graph::star(4)), vec![0]);
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![1, 3, 2]);
        assert_eq!(permutations(1), vec![vec![1]]);
    }
}
