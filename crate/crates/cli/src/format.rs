//! The `.tg` text format.
//!
//! ```text
//! tgraph 1
//! # comment
//! vertex a b c d
//! edge a b 1 2 5
//! edge b c 3
//! ```
//!
//! `vertex` lines declare labels (in id order) and may introduce isolated
//! vertices; `edge` lines intern their endpoints on first sight. Repeated
//! edges merge, and `edge b a` is the same edge as `edge a b`.

use std::fmt::Write;

use tcluster::TemporalGraph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_time(token: &str, line: usize) -> Result<u32, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("time `{token}` is not a positive integer")));
    }
    match token.parse::<u32>() {
        Ok(0) => Err(err(line, "times must be positive")),
        Ok(t) => Ok(t),
        Err(_) => Err(err(line, format!("time `{token}` is out of range"))),
    }
}

pub fn parse_tg(text: &str) -> Result<TemporalGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    match lines.next() {
        Some((_, "tgraph 1")) => {}
        Some((_, other)) => return Err(err(1, format!("expected header `tgraph 1`, found `{other}`"))),
        None => return Err(err(1, "empty input, expected header `tgraph 1`")),
    }
    let mut g = TemporalGraph::new();
    for (no, line) in lines {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None => {}
            Some("vertex") => {
                for label in tokens {
                    g.add_vertex(label);
                }
            }
            Some("edge") => {
                let (Some(x), Some(y)) = (tokens.next(), tokens.next()) else {
                    return Err(err(no, "edge needs two endpoints"));
                };
                if x == y {
                    return Err(err(no, format!("self-loop on `{x}`")));
                }
                let times = tokens.map(|t| parse_time(t, no)).collect::<Result<Vec<_>, _>>()?;
                if times.is_empty() {
                    return Err(err(no, "edge needs at least one time"));
                }
                for t in times {
                    g.add_labelled(x, y, t).map_err(|e| err(no, e.to_string()))?;
                }
            }
            Some(other) => return Err(err(no, format!("unknown directive `{other}`"))),
        }
    }
    Ok(g)
}

/// Canonical text: the header, every label in id order, then one line per
/// static edge in id order with its times ascending.
pub fn serialise_tg(g: &TemporalGraph) -> String {
    let mut out = String::from("tgraph 1\n");
    if g.vertex_count() > 0 {
        out.push_str("vertex");
        for l in g.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    for ((u, v), times) in g.static_edges() {
        write!(out, "edge {} {}", g.label(u), g.label(v)).unwrap();
        for t in times {
            write!(out, " {t}").unwrap();
        }
        out.push('\n');
    }
    out
}
