//! The two worked example graphs, with their labelings.
//!
//! `fig1` is a `K_{2,3}`-amenable graph on vertices `a..g, u, v, w, x, y`
//! (indices 0..11 in that order). `fig2` is a graph on `a..h` (0..7) whose
//! labels name the `C_6` vertices (1-based) an EOD-set of `G □ C_6` uses in
//! each `C_6`-layer.

use crate::amenability::{check_kmn_amenable, kmn_partition_to_eod, CheckReport, Flavor, Label, WeakPartition};
use crate::eod::is_eod_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::product::{cartesian_product, ProductDims};

pub const FIXTURE_NAMES: [&str; 2] = ["fig1", "fig2"];

#[derive(Clone, Debug)]
pub enum FixtureLabels {
    /// A weak partition to be checked by the amenability checker of its flavor.
    Partition(WeakPartition),
    /// Per vertex of `G`, the (1-based) factor vertices whose copies lie in `D`.
    LayerClasses(Vec<Label>),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub vertex_names: Vec<&'static str>,
    pub graph: Graph,
    pub factor: Graph,
    pub factor_name: &'static str,
    pub labels: FixtureLabels,
}

fn named_edges(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |s: &str| names.iter().position(|&n| n == s).expect("fixture vertex name");
    Graph::from_edges(names.len(), edges.iter().map(|&(a, b)| (idx(a), idx(b)))).expect("fixture edges are valid")
}

fn labels_by_name(names: &[&str], spec: &[(&str, Label)]) -> Vec<Label> {
    names
        .iter()
        .map(|n| spec.iter().find(|(m, _)| m == n).expect("every fixture vertex is labeled").1)
        .collect()
}

fn fig1() -> Fixture {
    let names = vec!["a", "b", "c", "d", "e", "f", "g", "u", "v", "w", "x", "y"];
    let graph = named_edges(
        &names,
        &[
            ("a", "b"),
            ("a", "u"),
            ("a", "y"),
            ("b", "c"),
            ("b", "e"),
            ("b", "f"),
            ("c", "d"),
            ("c", "g"),
            ("a", "f"),
            ("d", "e"),
            ("d", "g"),
            ("e", "f"),
            ("f", "g"),
            ("u", "v"),
            ("u", "w"),
            ("v", "x"),
            ("x", "w"),
        ],
    );
    let c = Label::Class;
    let labels = labels_by_name(
        &names,
        &[
            ("a", Label::Zero),
            ("y", Label::Pair(2, 5)),
            ("d", c(5)),
            ("e", c(5)),
            ("g", c(3)),
            ("f", c(3)),
            ("b", c(4)),
            ("c", c(4)),
            ("u", c(1)),
            ("v", c(1)),
            ("w", c(2)),
            ("x", c(2)),
        ],
    );
    Fixture {
        name: "fig1",
        description: "a K_2,3-amenable graph",
        vertex_names: names,
        graph,
        factor: Graph::complete_bipartite(2, 3),
        factor_name: "K_2,3",
        labels: FixtureLabels::Partition(WeakPartition::new(Flavor::Kmn(2, 3), labels).expect("valid labels")),
    }
}

fn fig2() -> Fixture {
    let names = vec!["a", "b", "c", "d", "e", "f", "g", "h"];
    let graph = named_edges(
        &names,
        &[
            ("a", "b"),
            ("g", "h"),
            ("c", "h"),
            ("b", "c"),
            ("b", "f"),
            ("a", "f"),
            ("f", "g"),
            ("d", "e"),
            ("d", "g"),
        ],
    );
    let labels = labels_by_name(
        &names,
        &[
            ("a", Label::Pair(1, 2)),
            ("d", Label::Pair(1, 2)),
            ("e", Label::Pair(4, 5)),
            ("f", Label::Pair(4, 5)),
            ("c", Label::Pair(3, 6)),
            ("h", Label::Pair(3, 6)),
            ("g", Label::Zero),
            ("b", Label::Zero),
        ],
    );
    Fixture {
        name: "fig2",
        description: "a graph G with an EOD-set of G □ C_6 given by layer labels",
        vertex_names: names,
        graph,
        factor: Graph::cycle(6).expect("C6"),
        factor_name: "C_6",
        labels: FixtureLabels::LayerClasses(labels),
    }
}

pub fn load_fixture(name: &str) -> Result<Fixture> {
    match name {
        "fig1" => Ok(fig1()),
        "fig2" => Ok(fig2()),
        _ => Err(Error::Usage(format!(
            "unknown fixture {name:?}; known fixtures: {}",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

impl Fixture {
    pub fn product(&self) -> (Graph, ProductDims) {
        cartesian_product(&self.graph, &self.factor)
    }

    /// Amenability report for partition fixtures; `None` for layer labels.
    pub fn check(&self) -> Result<Option<CheckReport>> {
        match &self.labels {
            FixtureLabels::Partition(p) => check_kmn_amenable(&self.graph, p).map(Some),
            FixtureLabels::LayerClasses(_) => Ok(None),
        }
    }

    /// The EOD candidate in `G □ factor` the labels describe.
    pub fn implied_set(&self) -> Result<VertexSet> {
        match &self.labels {
            FixtureLabels::Partition(p) => kmn_partition_to_eod(&self.graph, p),
            FixtureLabels::LayerClasses(labels) => {
                let dims = ProductDims::new(self.graph.order(), self.factor.order());
                let mut d = VertexSet::new();
                for (g, l) in labels.iter().enumerate() {
                    let hits: Vec<usize> = match *l {
                        Label::Zero => vec![],
                        Label::Class(i) => vec![i],
                        Label::Pair(i, j) => vec![i, j],
                    };
                    for h in hits {
                        d.insert(dims.index(g, h - 1));
                    }
                }
                Ok(d)
            }
        }
    }

    /// Checker (if any) passes and the implied set is an EOD-set of the product.
    pub fn verify(&self) -> Result<bool> {
        if let Some(report) = self.check()? {
            if !report.is_ok() {
                return Ok(false);
            }
        }
        let (prod, _) = self.product();
        Ok(is_eod_set(&prod, &self.implied_set()?))
    }

    /// `label: names...` lines, one per label in order of first appearance.
    pub fn labels_text(&self) -> String {
        let labels: &[Label] = match &self.labels {
            FixtureLabels::Partition(p) => p.labels(),
            FixtureLabels::LayerClasses(l) => l,
        };
        let mut order: Vec<Label> = Vec::new();
        for &l in labels {
            if !order.contains(&l) {
                order.push(l);
            }
        }
        let mut out = String::new();
        for l in order {
            let members: Vec<&str> = labels
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m == l)
                .map(|(v, _)| self.vertex_names[v])
                .collect();
            out.push_str(&format!("{l}: {}\n", members.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_shape_and_check() {
        let f = load_fixture("fig1").unwrap();
        assert_eq!((f.graph.order(), f.graph.size()), (12, 17));
        assert!(f.check().unwrap().unwrap().is_ok());
        assert_eq!(f.implied_set().unwrap().len(), 12);
        assert!(f.verify().unwrap());
    }

    #[test]
    fn fig2_shape_and_check() {
        let f = load_fixture("fig2").unwrap();
        assert_eq!((f.graph.order(), f.graph.size()), (8, 9));
        let (prod, _) = f.product();
        assert_eq!(prod.order(), 48);
        assert!(f.verify().unwrap());
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(load_fixture("nope"), Err(Error::Usage(_))));
    }
}
