//! Text formats for graphs: a plain edge list and short-form graph6.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. `#` starts a comment
//! and blank lines are skipped. Serialization emits edges in lexicographic order.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Usage(format!("unknown graph format `{other}`"))),
        }
    }
}

/// Largest order representable by the short graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::EdgeList => Ok(to_edge_list(g)),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

/// Guesses the format: edge lists start with two integers, anything else is graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let mut tokens = first.split_whitespace();
    let numeric = |t: Option<&str>| t.is_some_and(|t| t.parse::<usize>().is_ok());
    if numeric(tokens.next()) && numeric(tokens.next()) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::parse(lineno, format!("malformed {what}: expected two integers")))?;
        tok.parse()
            .map_err(|_| Error::parse(lineno, format!("malformed {what}: `{tok}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if tokens.next().is_some() {
        return Err(Error::parse(lineno, format!("malformed {what}: trailing tokens")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "malformed header: missing `n m` line"))?;
    let (n, m) = parse_pair(header, header_line, "header")?;

    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (lineno, line) in lines {
        last_line = lineno;
        let (u, v) = parse_pair(line, lineno, "edge")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                lineno,
                format!("vertex index {} >= n = {n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("loop edge at vertex {u}")));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::parse(lineno, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (lineno, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "malformed header: empty graph6 input"))?;
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();

    let (&head, rest) = body
        .split_first()
        .ok_or_else(|| Error::parse(lineno, "malformed header: empty graph6 string"))?;
    if head == b'~' {
        return Err(Error::parse(
            lineno,
            format!("malformed header: only short-form graph6 (n <= {GRAPH6_MAX_ORDER}) is supported"),
        ));
    }
    if !(63..=126).contains(&head) {
        return Err(Error::parse(lineno, "malformed header: byte outside graph6 range"));
    }
    let n = usize::from(head - 63);
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return Err(Error::parse(
            lineno,
            format!("graph6 body for n = {n} needs {need} bytes, found {}", rest.len()),
        ));
    }

    let mut bits = Vec::with_capacity(need * 6);
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(lineno, "byte outside graph6 range"));
        }
        let x = b - 63;
        bits.extend((0..6).rev().map(|k| (x >> k) & 1 == 1));
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Error::parse(lineno, "nonzero padding bits in graph6 body"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| Error::parse(lineno, e.to_string()))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::argument(format!(
            "graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}"
        )));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
