//! Labelled weak partitions `{V_0, V_1, ...}` of a graph's vertex set.
//!
//! Class labels are 1-based as in the usual notation; vertices are 0-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Part of a weak partition a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Zero,
    Class(usize),
    /// `V_[i, m+j]` of a `K_{m,n}` partition; stores `(i, m + j)`.
    Pair(usize, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Zero => write!(f, "0"),
            Label::Class(i) => write!(f, "{i}"),
            Label::Pair(i, j) => write!(f, "[{i},{j}]"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(1, format!("`{s}` is not a partition label"));
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            return Ok(Label::Pair(a, b));
        }
        match s.parse::<usize>().map_err(|_| bad())? {
            0 => Ok(Label::Zero),
            i => Ok(Label::Class(i)),
        }
    }
}

/// Which product factor a partition certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `K_r`, `r >= 2`; classes `1..=r`.
    Kr(usize),
    /// `K_{m,n}`, `1 <= m <= n`; side A is `1..=m`, side B is `m+1..=m+n`.
    Kmn(usize, usize),
    /// `C_4`, parallel variant; classes `1..=4`, cyclic.
    C4,
    /// `C_5`, parallel variant; classes `1..=5`, cyclic.
    C5,
}

/// Labels are packed into a `u64` bitmask during checking.
const MAX_LABELS: usize = 64;

impl Flavor {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Flavor::Kr(r) if r < 2 => Err(Error::argument(format!("K_r flavor needs r >= 2, got {r}"))),
            Flavor::Kmn(m, n) if m < 1 || m > n => Err(Error::argument(format!(
                "K_m,n flavor needs 1 <= m <= n, got m={m} n={n}"
            ))),
            _ if self.label_count() > MAX_LABELS => Err(Error::argument(format!(
                "{self} has more than {MAX_LABELS} labels"
            ))),
            _ => Ok(()),
        }
    }

    /// Number of singleton classes `V_1 .. V_k` (excluding pair classes).
    pub fn classes(&self) -> usize {
        match *self {
            Flavor::Kr(r) => r,
            Flavor::Kmn(m, n) => m + n,
            Flavor::C4 => 4,
            Flavor::C5 => 5,
        }
    }

    pub fn label_count(&self) -> usize {
        match *self {
            Flavor::Kmn(m, n) => 1 + m + n + m * n,
            _ => 1 + self.classes(),
        }
    }

    /// All labels in canonical order: `0`, the classes, then pair classes.
    pub fn labels(&self) -> Vec<Label> {
        let mut out = vec![Label::Zero];
        out.extend((1..=self.classes()).map(Label::Class));
        if let Flavor::Kmn(m, n) = *self {
            for i in 1..=m {
                out.extend((1..=n).map(|j| Label::Pair(i, m + j)));
            }
        }
        out
    }

    /// Dense index of `label` in [`Flavor::labels`], or `None` when it is not valid here.
    pub fn index_of(&self, label: Label) -> Option<usize> {
        let k = self.classes();
        match (label, *self) {
            (Label::Zero, _) => Some(0),
            (Label::Class(i), _) if (1..=k).contains(&i) => Some(i),
            (Label::Pair(i, j), Flavor::Kmn(m, n)) if (1..=m).contains(&i) && (m + 1..=m + n).contains(&j) => {
                Some(1 + m + n + (i - 1) * n + (j - m - 1))
            }
            _ => None,
        }
    }

    /// Size of the factor graph this flavor stands for.
    pub fn factor_order(&self) -> usize {
        self.classes()
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Kr(r) => write!(f, "k{r}"),
            Flavor::Kmn(m, n) => write!(f, "kmn:{m},{n}"),
            Flavor::C4 => write!(f, "c4"),
            Flavor::C5 => write!(f, "c5"),
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;

    /// Accepts `k<r>`, `kmn:<m>,<n>`, `c4`, `c5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Usage(format!("unknown flavor `{s}`; expected k<r>, kmn:<m>,<n>, c4 or c5"));
        let flavor = if s == "c4" {
            Flavor::C4
        } else if s == "c5" {
            Flavor::C5
        } else if let Some(rest) = s.strip_prefix("kmn:") {
            let (m, n) = rest.split_once(',').ok_or_else(bad)?;
            Flavor::Kmn(
                m.trim().parse().map_err(|_| bad())?,
                n.trim().parse().map_err(|_| bad())?,
            )
        } else if let Some(r) = s.strip_prefix('k') {
            Flavor::Kr(r.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        flavor.validate()?;
        Ok(flavor)
    }
}

/// A total labelling of `0..n` by the parts of a weak partition. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakPartition {
    flavor: Flavor,
    labels: Vec<Label>,
}

impl WeakPartition {
    pub fn new(flavor: Flavor, labels: Vec<Label>) -> Result<Self> {
        flavor.validate()?;
        if let Some((v, l)) = labels
            .iter()
            .enumerate()
            .find(|(_, &l)| flavor.index_of(l).is_none())
        {
            return Err(Error::argument(format!(
                "label {l} of vertex {v} is not valid for flavor {flavor}"
            )));
        }
        Ok(WeakPartition { flavor, labels })
    }

    /// Every vertex in `V_0`.
    pub fn all_zero(flavor: Flavor, n: usize) -> Result<Self> {
        WeakPartition::new(flavor, vec![Label::Zero; n])
    }

    /// Builds a partition from explicit parts; vertices not listed go to `V_0`.
    pub fn from_parts<I>(flavor: Flavor, n: usize, parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Vec<usize>)>,
    {
        let mut labels = vec![None; n];
        for (label, members) in parts {
            for v in members {
                let slot = labels.get_mut(v).ok_or_else(|| {
                    Error::argument(format!("vertex {v} is outside 0..{n}"))
                })?;
                if let Some(prev) = slot.replace(label) {
                    return Err(Error::argument(format!(
                        "vertex {v} labelled both {prev} and {label}"
                    )));
                }
            }
        }
        WeakPartition::new(flavor, labels.into_iter().map(|l| l.unwrap_or(Label::Zero)).collect())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn members(&self, label: Label) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(v, &l)| (l == label).then_some(v))
            .collect()
    }

    /// `V_1 ∪ ... ∪ V_k ∪` pair classes: everything outside `V_0`.
    pub fn nonzero(&self) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(v, &l)| (l != Label::Zero).then_some(v))
            .collect()
    }

    /// Renders the partition file format, one line per non-empty part.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for label in self.flavor.labels() {
            let members = self.members(label);
            if members.is_empty() {
                continue;
            }
            out.push_str(&label.to_string());
            out.push(':');
            for v in members.iter() {
                out.push(' ');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the partition file format for a graph of order `n`.
    ///
    /// Every vertex must appear exactly once; omitted parts are empty.
    pub fn parse(text: &str, flavor: Flavor, n: usize) -> Result<Self> {
        flavor.validate()?;
        let mut labels: Vec<Option<Label>> = vec![None; n];
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno, "expected `<label>: <vertices>`"))?;
            let label: Label = head
                .parse()
                .map_err(|_| Error::parse(lineno, format!("`{head}` is not a partition label")))?;
            if flavor.index_of(label).is_none() {
                return Err(Error::parse(lineno, format!("label {label} is not valid for flavor {flavor}")));
            }
            for tok in tail.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("`{tok}` is not a vertex index")))?;
                if v >= n {
                    return Err(Error::parse(lineno, format!("vertex {v} >= n = {n}")));
                }
                if labels[v].replace(label).is_some() {
                    return Err(Error::parse(lineno, format!("vertex {v} is labelled twice")));
                }
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| Error::parse(0, format!("vertex {v} has no label"))))
            .collect::<Result<Vec<_>>>()?;
        WeakPartition::new(flavor, labels)
    }
}

impl fmt::Display for WeakPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
