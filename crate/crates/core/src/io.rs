//! Edge-list and DIMACS graph files.
//!
//! Edge-list: `p <n> <m>` header followed by `<u> <v>` lines with 0-based ids.
//! DIMACS: `p edge <n> <m>` header followed by `e <u> <v>` lines with 1-based ids.
//! In both formats `#` lines are comments; DIMACS also skips `c` lines.

use std::fmt::Write as _;
use std::io::{self, Read};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "gr" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p` header line")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn line_err(line: usize, msg: impl Into<String>) -> ReadError {
    ReadError::Line {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ReadError> {
    let tok = tok.ok_or_else(|| line_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| line_err(line, format!("invalid {what} `{tok}`")))
}

pub fn read_graph<R: Read>(mut source: R, format: GraphFormat) -> Result<Graph, ReadError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_graph(&text, format)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ReadError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let head = toks.next().unwrap_or_default();
        if format == GraphFormat::Dimacs && head == "c" {
            continue;
        }
        if head == "p" {
            if n.is_some() {
                return Err(line_err(line, "duplicate header"));
            }
            if format == GraphFormat::Dimacs {
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(line_err(line, "expected `p edge <n> <m>`")),
                }
            }
            n = Some(parse_num(toks.next(), line, "vertex count")?);
            parse_num(toks.next(), line, "edge count")?;
            if toks.next().is_some() {
                return Err(line_err(line, "trailing tokens in header"));
            }
            continue;
        }
        let count = n.ok_or_else(|| line_err(line, "edge before `p` header"))?;
        let (u_tok, v_tok) = match format {
            GraphFormat::EdgeList => (Some(head), toks.next()),
            GraphFormat::Dimacs => {
                if head != "e" {
                    return Err(line_err(line, format!("unexpected line type `{head}`")));
                }
                (toks.next(), toks.next())
            }
        };
        let mut u = parse_num(u_tok, line, "vertex id")?;
        let mut v = parse_num(v_tok, line, "vertex id")?;
        if toks.next().is_some() {
            return Err(line_err(line, "trailing tokens on edge line"));
        }
        if format == GraphFormat::Dimacs {
            if u == 0 || v == 0 {
                return Err(line_err(line, "DIMACS ids are 1-based"));
            }
            u -= 1;
            v -= 1;
        }
        if u >= count || v >= count {
            return Err(line_err(
                line,
                format!("vertex id {} out of range (n = {count})", u.max(v)),
            ));
        }
        if u == v {
            return Err(line_err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or(ReadError::MissingHeader)?;
    Ok(Graph::from_edges(n, edges).expect("edges validated while parsing"))
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}
