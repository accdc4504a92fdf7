//! Construction traces: how a member of `T_r` is built from copies of
//! `K_{1,r}^+`.
//!
//! Text form is an s-expression:
//! `(leaf r)`, `(type-a i a-b c-d straight|flipped L R)`, `(type-b x y L R)`.

use std::fmt;
use std::str::FromStr;

use super::family::{k1r_plus, type_a, type_b, Orientation, PartitionedTree};
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeTrace {
    Leaf(usize),
    TypeA {
        class: usize,
        left_edge: Edge,
        right_edge: Edge,
        orientation: Orientation,
        left: Box<TreeTrace>,
        right: Box<TreeTrace>,
    },
    TypeB {
        x: usize,
        y: usize,
        left: Box<TreeTrace>,
        right: Box<TreeTrace>,
    },
}

impl TreeTrace {
    /// Rebuilds the partitioned tree.
    pub fn replay(&self) -> Result<PartitionedTree> {
        match self {
            TreeTrace::Leaf(r) => k1r_plus(*r),
            TreeTrace::TypeA {
                class,
                left_edge,
                right_edge,
                orientation,
                left,
                right,
            } => type_a(&left.replay()?, &right.replay()?, *class, *left_edge, *right_edge, *orientation),
            TreeTrace::TypeB { x, y, left, right } => type_b(&left.replay()?, &right.replay()?, *x, *y),
        }
    }

    /// Order of the replayed tree, from the construction arithmetic alone.
    pub fn order(&self) -> usize {
        match self {
            TreeTrace::Leaf(r) => 2 * r + 1,
            TreeTrace::TypeA { left, right, .. } => left.order() + right.order() - 2,
            TreeTrace::TypeB { left, right, .. } => left.order() + right.order(),
        }
    }

    /// Number of `K_{1,r}^+` leaves in the trace.
    pub fn leaves(&self) -> usize {
        match self {
            TreeTrace::Leaf(_) => 1,
            TreeTrace::TypeA { left, right, .. } | TreeTrace::TypeB { left, right, .. } => {
                left.leaves() + right.leaves()
            }
        }
    }
}

impl fmt::Display for TreeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeTrace::Leaf(r) => write!(f, "(leaf {r})"),
            TreeTrace::TypeA {
                class,
                left_edge: (a, b),
                right_edge: (c, d),
                orientation,
                left,
                right,
            } => write!(f, "(type-a {class} {a}-{b} {c}-{d} {orientation} {left} {right})"),
            TreeTrace::TypeB { x, y, left, right } => write!(f, "(type-b {x} {y} {left} {right})"),
        }
    }
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(s: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push(Token::Atom(&s[st..i]));
            }
            match c {
                '(' => out.push(Token::Open),
                ')' => out.push(Token::Close),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(Token::Atom(&s[st..]));
    }
    out
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl fmt::Display) -> Error {
        Error::parse(1, format!("trace token {}: {msg}", self.pos + 1))
    }

    fn next(&mut self) -> Result<&Token<'a>> {
        let t = self.tokens.get(self.pos).ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Token<'_>) -> Result<()> {
        let got = self.next()?;
        if *got == want {
            Ok(())
        } else {
            let msg = format!("expected {want:?}, found {got:?}");
            Err(self.err(msg))
        }
    }

    fn atom(&mut self) -> Result<&'a str> {
        match self.next()? {
            Token::Atom(a) => Ok(a),
            other => {
                let msg = format!("expected an atom, found {other:?}");
                Err(self.err(msg))
            }
        }
    }

    fn number(&mut self) -> Result<usize> {
        let a = self.atom()?;
        a.parse().map_err(|_| self.err(format!("{a:?} is not a vertex or class number")))
    }

    fn edge(&mut self) -> Result<Edge> {
        let a = self.atom()?;
        let parsed = a
            .split_once('-')
            .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)));
        parsed.ok_or_else(|| self.err(format!("{a:?} is not an edge 'u-v'")))
    }

    fn trace(&mut self) -> Result<TreeTrace> {
        self.expect(Token::Open)?;
        let trace = match self.atom()? {
            "leaf" => TreeTrace::Leaf(self.number()?),
            "type-a" => {
                let class = self.number()?;
                let left_edge = self.edge()?;
                let right_edge = self.edge()?;
                let orientation = self.atom()?.parse()?;
                let left = Box::new(self.trace()?);
                let right = Box::new(self.trace()?);
                TreeTrace::TypeA {
                    class,
                    left_edge,
                    right_edge,
                    orientation,
                    left,
                    right,
                }
            }
            "type-b" => {
                let x = self.number()?;
                let y = self.number()?;
                let left = Box::new(self.trace()?);
                let right = Box::new(self.trace()?);
                TreeTrace::TypeB { x, y, left, right }
            }
            other => return Err(self.err(format!("unknown node {other:?}"))),
        };
        self.expect(Token::Close)?;
        Ok(trace)
    }
}

impl FromStr for TreeTrace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { tokens: tokenize(s), pos: 0 };
        let trace = p.trace()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input after trace"));
        }
        Ok(trace)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "(type-a 1 1-2 2-1 flipped (leaf 3) (type-b 0 0 (leaf 3) (leaf 3)))";
        let t: TreeTrace = text.parse().unwrap();
        assert_eq!(t.to_string(), text);
        assert_eq!(t.order(), 7 + 14 - 2);
        assert_eq!(t.replay().unwrap().order(), t.order());
        assert_eq!(t.leaves(), 3);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "(leaf)", "(leaf 3", "(leaf 3))", "(twig 3)", "(type-b 0 (leaf 2) (leaf 2))"] {
            assert!(bad.parse::<TreeTrace>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn invalid_replay_is_an_error() {
        let t: TreeTrace = "(type-b 1 0 (leaf 2) (leaf 2))".parse().unwrap();
        assert!(t.replay().is_err());
    }
}
