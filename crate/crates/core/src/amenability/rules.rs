//! Counting rules behind every amenability flavor.
//!
//! Each condition reduces to statements of the form "a vertex with label `L`
//! has exactly `c` neighbors whose labels lie in the set `S`", with `c` equal
//! to 0 or 1. A [`RuleTable`] lists those statements per label; the checker
//! evaluates them and the searcher prunes partial labellings with them.

use std::fmt;

use super::partition::{Flavor, Label, WeakPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Condition names, rendered as in the usual literature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    A,
    B,
    C,
    CPrime,
    D,
    DPrime,
    I,
    II,
    III,
    IV,
    V,
    ZigzagI,
    ZigzagII,
    ZigzagIII,
    ZigzagIV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A => "A",
            Condition::B => "B",
            Condition::C => "C",
            Condition::CPrime => "C'",
            Condition::D => "D",
            Condition::DPrime => "D'",
            Condition::I => "I",
            Condition::II => "II",
            Condition::III => "III",
            Condition::IV => "IV",
            Condition::V => "V",
            Condition::ZigzagI => "i",
            Condition::ZigzagII => "ii",
            Condition::ZigzagIII => "iii",
            Condition::ZigzagIV => "iv",
        };
        f.write_str(s)
    }
}

/// A failed condition with the vertices that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VIOLATION {} at ", self.condition)?;
        for (i, v) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Checker outcome. Holds the first violation of each failed condition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, condition: Condition) -> Option<&Violation> {
        self.violations.iter().find(|v| v.condition == condition)
    }

    pub(crate) fn push_first(&mut self, v: Violation) {
        if self.violation(v.condition).is_none() {
            self.violations.push(v);
        }
    }

    pub(crate) fn into_result(self, what: &str) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::failed_check(format!("partition is not {what}"), self.violations))
        }
    }
}

#[derive(Clone, Debug)]
struct Rule {
    condition: Condition,
    /// Bitmask over label indices.
    targets: u64,
    want: u32,
}

#[derive(Clone, Debug)]
pub(crate) struct RuleTable {
    flavor: Flavor,
    labels: Vec<Label>,
    rules: Vec<Vec<Rule>>,
}

fn cyc(i: isize, k: usize) -> usize {
    (i - 1).rem_euclid(k as isize) as usize + 1
}

impl RuleTable {
    pub(crate) fn new(flavor: Flavor) -> Result<Self> {
        flavor.validate()?;
        let labels = flavor.labels();
        let bit = |l: Label| 1u64 << flavor.index_of(l).expect("label belongs to flavor");
        let class = |i: usize| bit(Label::Class(i));
        let rule = |condition, targets, want| Rule { condition, targets, want };
        let nonzero: u64 = labels.iter().skip(1).fold(0, |acc, &l| acc | bit(l));

        let mut rules = vec![Vec::new(); labels.len()];
        match flavor {
            Flavor::Kr(r) => {
                rules[0] = (1..=r).map(|i| rule(Condition::A, class(i), 1)).collect();
                for i in 1..=r {
                    rules[i] = vec![rule(Condition::B, class(i), 1), rule(Condition::C, nonzero, 1)];
                }
            }
            Flavor::Kmn(m, n) => {
                let side_a = 1..=m;
                let side_b = m + 1..=m + n;
                for i in 1..=m + n {
                    let in_a = side_a.contains(&i);
                    let mut list = vec![rule(Condition::I, class(i), 1)];
                    let (same, other) = if in_a {
                        (side_a.clone(), side_b.clone())
                    } else {
                        (side_b.clone(), side_a.clone())
                    };
                    list.extend(other.map(|j| rule(Condition::II, class(i) | class(j), 1)));
                    list.extend(same.filter(|&j| j != i).map(|j| rule(Condition::III, class(j), 1)));
                    rules[i] = list;
                }
                for i in 1..=m {
                    for j in m + 1..=m + n {
                        let idx = flavor.index_of(Label::Pair(i, j)).unwrap();
                        rules[idx] = vec![rule(Condition::IV, nonzero, 0)];
                    }
                }
                let mut zero = Vec::new();
                for i in 1..=m {
                    let t = side_b.clone().fold(class(i), |acc, j| acc | bit(Label::Pair(i, j)));
                    zero.push(rule(Condition::V, t, 1));
                }
                for j in m + 1..=m + n {
                    let t = (1..=m).fold(class(j), |acc, i| acc | bit(Label::Pair(i, j)));
                    zero.push(rule(Condition::V, t, 1));
                }
                rules[0] = zero;
            }
            Flavor::C4 | Flavor::C5 => {
                let k = flavor.classes();
                rules[0] = (1..=k).map(|i| rule(Condition::A, class(i), 1)).collect();
                for i in 1..=k {
                    let at = |d: isize| class(cyc(i as isize + d, k));
                    let mut list = vec![
                        rule(Condition::B, class(i), 1),
                        rule(Condition::CPrime, class(i) | at(1), 1),
                        rule(Condition::CPrime, at(-1) | class(i), 1),
                    ];
                    if k == 5 {
                        list.push(rule(Condition::D, at(2), 1));
                        list.push(rule(Condition::D, at(-2), 1));
                    } else {
                        list.push(rule(Condition::DPrime, at(2), 1));
                    }
                    rules[i] = list;
                }
            }
        }
        Ok(RuleTable { flavor, labels, rules })
    }

    fn describe(&self, targets: u64) -> String {
        let parts: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| targets >> i & 1 == 1)
            .map(|(_, l)| match l {
                Label::Zero => "V0".to_string(),
                Label::Class(i) => format!("V{i}"),
                Label::Pair(i, j) => format!("V[{i},{j}]"),
            })
            .collect();
        if parts.len() > 4 {
            format!("{} parts", parts.len())
        } else {
            parts.join("∪")
        }
    }

    pub(crate) fn check(&self, g: &Graph, p: &WeakPartition) -> Result<CheckReport> {
        if p.flavor() != self.flavor {
            return Err(Error::argument(format!(
                "expected a {} partition, got {}",
                self.flavor,
                p.flavor()
            )));
        }
        if p.order() != g.order() {
            return Err(Error::argument(format!(
                "partition labels {} vertices but the graph has {}",
                p.order(),
                g.order()
            )));
        }
        let idx: Vec<usize> = p
            .labels()
            .iter()
            .map(|&l| self.flavor.index_of(l).unwrap())
            .collect();
        let mut report = CheckReport::default();
        for x in g.vertices() {
            for rule in &self.rules[idx[x]] {
                let got = g
                    .neighbors(x)
                    .iter()
                    .filter(|&&y| rule.targets >> idx[y] & 1 == 1)
                    .count() as u32;
                if got != rule.want {
                    report.push_first(Violation {
                        condition: rule.condition,
                        witness: vec![x],
                        detail: format!(
                            "{} in {} needs {} neighbor(s) in {}, has {got}",
                            x,
                            label_name(p.label(x)),
                            rule.want,
                            self.describe(rule.targets)
                        ),
                    });
                }
            }
        }
        Ok(report)
    }

    /// Depth-first labelling search. Returns the first labelling that satisfies
    /// every rule, trying labels in index order at each vertex.
    pub(crate) fn search(&self, g: &Graph) -> Option<WeakPartition> {
        let n = g.order();
        let mut s = SearchState {
            table: self,
            g,
            order: search_order(g),
            label: vec![None; n],
            counts: vec![vec![0; self.labels.len()]; n],
            open: g.vertices().map(|v| g.degree(v) as u32).collect(),
        };
        let sym = Symmetry::start(self.flavor);
        if s.extend(0, sym) {
            let labels = s
                .label
                .iter()
                .map(|l| self.labels[l.expect("complete labelling")])
                .collect();
            Some(WeakPartition::new(self.flavor, labels).expect("search emits valid labels"))
        } else {
            None
        }
    }
}

fn label_name(l: Label) -> String {
    match l {
        Label::Zero => "V0".into(),
        Label::Class(i) => format!("V{i}"),
        Label::Pair(i, j) => format!("V[{i},{j}]"),
    }
}

/// Breadth-first vertex order, component by component from the lowest index,
/// so each vertex's constraints close early.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Interchangeable-class bookkeeping: a class index may only be used once
/// every smaller index of the same interchangeable group has been used.
#[derive(Clone, Copy, Debug)]
struct Symmetry {
    flavor: Flavor,
    used_a: usize,
    used_b: usize,
    any_nonzero: bool,
}

impl Symmetry {
    fn start(flavor: Flavor) -> Self {
        Symmetry {
            flavor,
            used_a: 0,
            used_b: 0,
            any_nonzero: false,
        }
    }

    /// Returns the updated state, or `None` if `label` is a redundant symmetric choice.
    fn admit(self, label: Label) -> Option<Self> {
        let mut next = self;
        match (self.flavor, label) {
            (_, Label::Zero) => return Some(self),
            (Flavor::Kr(_), Label::Class(i)) => {
                if i > self.used_a + 1 {
                    return None;
                }
                next.used_a = self.used_a.max(i);
            }
            (Flavor::Kmn(m, _), Label::Class(i)) if i <= m => {
                if i > self.used_a + 1 {
                    return None;
                }
                next.used_a = self.used_a.max(i);
            }
            (Flavor::Kmn(m, n), Label::Class(i)) => {
                let j = i - m;
                // With m = n the two sides are interchangeable as well.
                if j > self.used_b + 1 || (m == n && !self.any_nonzero) {
                    return None;
                }
                next.used_b = self.used_b.max(j);
            }
            (Flavor::Kmn(m, _), Label::Pair(i, j)) => {
                let j = j - m;
                if i > self.used_a + 1 || j > self.used_b + 1 {
                    return None;
                }
                next.used_a = self.used_a.max(i);
                next.used_b = self.used_b.max(j);
            }
            // Rotations of the cycle: the first non-zero vertex takes class 1.
            (Flavor::C4 | Flavor::C5, Label::Class(i)) => {
                if !self.any_nonzero && i != 1 {
                    return None;
                }
            }
            _ => {}
        }
        next.any_nonzero = true;
        Some(next)
    }
}

struct SearchState<'a> {
    table: &'a RuleTable,
    g: &'a Graph,
    order: Vec<usize>,
    label: Vec<Option<usize>>,
    /// `counts[x][l]`: labelled neighbors of `x` carrying label index `l`.
    counts: Vec<Vec<u32>>,
    /// Unlabelled neighbors of each vertex.
    open: Vec<u32>,
}

impl SearchState<'_> {
    fn assign(&mut self, v: usize, l: usize) {
        self.label[v] = Some(l);
        for &w in self.g.neighbors(v) {
            self.counts[w][l] += 1;
            self.open[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize, l: usize) {
        self.label[v] = None;
        for &w in self.g.neighbors(v) {
            self.counts[w][l] -= 1;
            self.open[w] += 1;
        }
    }

    /// Can the rules of labelled vertex `x` still be met?
    fn feasible_at(&self, x: usize) -> bool {
        let Some(l) = self.label[x] else {
            return true;
        };
        self.table.rules[l].iter().all(|rule| {
            let mut have = 0;
            let mut bits = rule.targets;
            while bits != 0 {
                let t = bits.trailing_zeros() as usize;
                have += self.counts[x][t];
                bits &= bits - 1;
            }
            have <= rule.want && have + self.open[x] >= rule.want
        })
    }

    fn extend(&mut self, depth: usize, sym: Symmetry) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for l in 0..self.table.labels.len() {
            let Some(next) = sym.admit(self.table.labels[l]) else {
                continue;
            };
            self.assign(v, l);
            let ok = self.feasible_at(v) && self.g.neighbors(v).iter().all(|&w| self.feasible_at(w));
            if ok && self.extend(depth + 1, next) {
                return true;
            }
            self.unassign(v, l);
        }
        false
    }
}
