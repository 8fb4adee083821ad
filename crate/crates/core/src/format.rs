//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! p cm <N> <k>
//! e <u> <v> <color>
//! ```
//!
//! Uncolored graphs use `k = 1` with every edge colored 1; the color field
//! may then be omitted on input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{components, EdgeColoring, Graph, GraphError};
use crate::partition::Part;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
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

fn number(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, format!("invalid {what} `{tok}`")))
}

/// Parses the edge-list format. The coloring is `None` when the header
/// declares a single color.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<EdgeColoring>), ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                if toks.len() != 4 || toks[1] != "cm" {
                    return Err(err(line, "expected `p cm <N> <k>`"));
                }
                let n = number(toks[2], line, "vertex count")?;
                let k = number(toks[3], line, "color count")?;
                if k == 0 {
                    return Err(err(line, "color count must be positive"));
                }
                header = Some((n, k));
            }
            "e" => {
                let (n, k) = header.ok_or_else(|| err(line, "edge before header"))?;
                let color = match toks.len() {
                    4 => number(toks[3], line, "color")?,
                    3 if k == 1 => 1,
                    _ => return Err(err(line, "expected `e <u> <v> <color>`")),
                };
                let u = number(toks[1], line, "vertex")?;
                let v = number(toks[2], line, "vertex")?;
                for w in [u, v] {
                    if w >= n {
                        return Err(err(line, format!("vertex {w} out of range (N = {n})")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                if color == 0 || color > k {
                    return Err(err(line, format!("color {color} outside 1..={k}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, format!("duplicate edge {{{u}, {v}}}")));
                }
                edges.push(((u.min(v), u.max(v)), color));
            }
            other => return Err(err(line, format!("unknown record `{other}`"))),
        }
    }

    let (n, k) = header.ok_or_else(|| err(0, "missing header `p cm <N> <k>`"))?;
    edges.sort_unstable();
    colors.extend(edges.iter().map(|&(_, c)| c));
    let graph = Graph::new(n, edges.iter().map(|&(e, _)| e)).map_err(|e| err(0, e.to_string()))?;
    let coloring = if k == 1 {
        None
    } else {
        Some(EdgeColoring::new(&graph, k, colors).map_err(|e: GraphError| err(0, e.to_string()))?)
    };
    Ok((graph, coloring))
}

/// Writes the edge-list format, edges in lexicographic order.
pub fn serialize(g: &Graph, c: Option<&EdgeColoring>) -> String {
    let k = c.map_or(1, EdgeColoring::color_count);
    let mut out = format!("p cm {} {}\n", g.vertex_count(), k);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let color = c.map_or(1, |c| c.color_at(i));
        writeln!(out, "e {u} {v} {color}").unwrap();
    }
    out
}

/// Graphviz export: one `cluster_<id>` subgraph per component, edges carry
/// `color=<i>` and, when given, nodes carry `class=S|Q|I`.
pub fn to_dot(g: &Graph, c: Option<&EdgeColoring>, classes: Option<&[Part]>) -> String {
    let labeling = components(g);
    let mut out = String::from("graph G {\n");
    for (id, members) in labeling.members().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{id} {{").unwrap();
        for &v in members {
            match classes {
                Some(cl) => writeln!(out, "    {v} [class={}];", cl[v]).unwrap(),
                None => writeln!(out, "    {v};").unwrap(),
            }
        }
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if labeling.label(u) == id {
                let color = c.map_or(1, |c| c.color_at(i));
                writeln!(out, "    {u} -- {v} [color={color}];").unwrap();
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
