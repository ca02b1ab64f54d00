//! Text formats: edge lists, colorings (JSON and `v c` lines), vertex labels, and DOT.
//!
//! Edge list:
//!
//! ```text
//! # comments run to the end of the line
//! 3 2        # n m
//! 0 1
//! 1 2
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{CodeVector, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Fill colors for DOT output, cycled when there are more than twelve classes.
pub const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments removed, split into positioned tokens.
fn token_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        line,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((line, tokens))
    })
}

fn number(tok: &Token<'_>, what: &str) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| parse_error(tok.line, tok.column, format!("expected {what}, found {:?}", tok.text)))
}

fn pair<'a>(line: usize, tokens: &'a [Token<'a>], what: &str) -> Result<(&'a Token<'a>, &'a Token<'a>)> {
    match tokens {
        [a, b] => Ok((a, b)),
        [_] => Err(parse_error(line, tokens[0].column, format!("expected two fields for {what}"))),
        _ => Err(parse_error(line, tokens[2].column, format!("unexpected third field in {what}"))),
    }
}

/// Parses the `n m` + `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = token_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing \"n m\" header"))?;
    let (tn, tm) = pair(line, &header, "the header")?;
    let n = number(tn, "vertex count")?;
    let m = number(tm, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, tokens) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(parse_error(line, tokens[0].column, format!("more than the declared {m} edges")));
        }
        let (tu, tv) = pair(line, &tokens, "an edge")?;
        let u = number(tu, "vertex id")?;
        let v = number(tv, "vertex id")?;
        for (id, tok) in [(u, tu), (v, tv)] {
            if id >= n {
                return Err(parse_error(line, tok.column, format!("vertex {id} outside 0..{n}")));
            }
        }
        if u == v {
            return Err(parse_error(line, tu.column, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `v c` lines: vertex ids `0..n` each exactly once, colors 1-based.
/// The number of colors is the largest color used.
pub fn parse_coloring_text(text: &str) -> Result<Coloring> {
    let mut entries: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (line, tokens) in token_lines(text) {
        let (tv, tc) = pair(line, &tokens, "a coloring entry")?;
        let v = number(tv, "vertex id")?;
        let c = number(tc, "color")?;
        if c == 0 {
            return Err(parse_error(line, tc.column, "colors are 1-based"));
        }
        entries.push((v, c, line, tv.column));
    }
    let n = entries.len();
    let mut colors = vec![0; n];
    for &(v, c, line, column) in &entries {
        if v >= n {
            return Err(parse_error(line, column, format!("vertex {v} outside 0..{n}")));
        }
        if colors[v] != 0 {
            return Err(parse_error(line, column, format!("vertex {v} listed twice")));
        }
        colors[v] = c;
    }
    let k = colors.iter().copied().max().unwrap_or(0);
    Coloring::new(k.max(1), colors)
}

pub fn format_coloring_text(f: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in f.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

/// Parses `{"k": .., "colors": [..]}`.
pub fn parse_coloring_json(text: &str) -> Result<Coloring> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))
}

pub fn format_coloring_json(f: &Coloring) -> String {
    serde_json::to_string(f).expect("colorings always serialize")
}

/// JSON when the text starts with `{`, `v c` lines otherwise.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    if text.trim_start().starts_with('{') {
        parse_coloring_json(text)
    } else {
        parse_coloring_text(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub id: usize,
    pub label: String,
}

/// `[{"id": 0, "label": "x"}, ...]`.
pub fn format_labels_json<L: ToString>(labels: &[L]) -> String {
    let entries: Vec<LabelEntry> = labels
        .iter()
        .enumerate()
        .map(|(id, l)| LabelEntry {
            id,
            label: l.to_string(),
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("labels always serialize")
}

pub fn parse_labels_json(text: &str) -> Result<Vec<LabelEntry>> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// An undirected DOT graph. Colored vertices are filled by class, labels
/// become node labels, and codes become tooltips.
pub fn to_dot(
    g: &Graph,
    coloring: Option<&Coloring>,
    labels: Option<&[String]>,
    codes: Option<&[CodeVector]>,
) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.vertex_count() {
        let mut attrs = Vec::new();
        let name = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
        attrs.push(format!("label=\"{}\"", escape(&name)));
        if let Some(f) = coloring {
            attrs.push(format!("fillcolor=\"{}\"", PALETTE[(f.color(v) - 1) % PALETTE.len()]));
        }
        if let Some(codes) = codes {
            attrs.push(format!("tooltip=\"{}\"", codes[v]));
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
