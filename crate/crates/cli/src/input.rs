//! Graph, partition and set arguments.
//!
//! A graph argument is a file path, `-` for stdin, or a named family:
//! `@P<n>`, `@C<n>`, `@K<n>`, `@K<m>,<n>`, `@star<r>`, `@spider<r>`
//! (`K_{1,r}^+`), `@E<n>` (edgeless), `@fig1`, `@fig2`.

use std::fs;
use std::io::Read;

use eod_core::amenability::{Flavor, WeakPartition};
use eod_core::harness::load_fixture;
use eod_core::io::{detect_format, parse_graph, GraphFormat};
use eod_core::trees::k1r_plus;
use eod_core::{Error, Graph};

use crate::CliError;

pub fn read_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))
    }
}

fn family(spec: &str) -> Result<Graph, Error> {
    let bad = || Error::Usage(format!("unknown graph family @{spec}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if spec == "fig1" || spec == "fig2" {
        return Ok(load_fixture(spec)?.graph);
    }
    if let Some(r) = spec.strip_prefix("spider") {
        return Ok(k1r_plus(num(r)?)?.into_parts().0);
    }
    if let Some(r) = spec.strip_prefix("star") {
        return Ok(Graph::star(num(r)?));
    }
    let (head, rest) = spec.split_at(1.min(spec.len()));
    match head {
        "P" => Ok(Graph::path(num(rest)?)),
        "C" => Graph::cycle(num(rest)?),
        "E" => Ok(Graph::empty(num(rest)?)),
        "K" => match rest.split_once([',', 'x']) {
            Some((m, n)) => Ok(Graph::complete_bipartite(num(m)?, num(n)?)),
            None => Ok(Graph::complete(num(rest)?)),
        },
        _ => Err(bad()),
    }
}

pub fn read_graph(arg: &str, format: Option<GraphFormat>) -> Result<Graph, CliError> {
    if let Some(spec) = arg.strip_prefix('@') {
        return Ok(family(spec)?);
    }
    let text = read_text(arg)?;
    let format = format.unwrap_or_else(|| detect_format(&text));
    Ok(parse_graph(&text, format)?)
}

pub fn read_partition(arg: &str, flavor: Flavor, n: usize) -> Result<WeakPartition, CliError> {
    Ok(WeakPartition::parse(&read_text(arg)?, flavor, n)?)
}
