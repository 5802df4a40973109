//! Text input formats: the line-oriented edge list and graph6 auto-detection.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graph6;

/// Parses the edge-list format: one `u v` pair per line, `#` comments, and an
/// optional `n <count>` header fixing the order. Without a header the order is
/// one more than the largest index.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, Edge)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: line_no, msg };
        match fields.as_slice() {
            ["n", count] => {
                if declared.is_some() {
                    return Err(err("repeated order header".into()));
                }
                let n = count
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count {count:?}")))?;
                declared = Some(n);
            }
            [a, b] => {
                let u = a
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex index {a:?}")))?;
                let v = b
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex index {b:?}")))?;
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                edges.push((line_no, Edge::new(u, v)));
            }
            _ => return Err(err(format!("expected `u v` or `n <count>`, got {line:?}"))),
        }
    }

    let implied = edges.iter().map(|(_, e)| e.hi() + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) => {
            if let Some((_, e)) = edges.iter().find(|(_, e)| e.hi() >= n) {
                return Err(Error::VertexOutOfRange {
                    vertex: e.hi(),
                    order: n,
                });
            }
            n
        }
        None => implied,
    };
    Graph::new(n, edges.into_iter().map(|(_, e)| e))
}

/// Reads either format. A single whitespace-free token (optionally behind the
/// `>>graph6<<` header) is taken as graph6; anything else as an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_graph6(text) {
        graph6::parse_graph6(text)
    } else {
        parse_edge_list(text)
    }
}

fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim();
    if t.starts_with(">>graph6<<") {
        return true;
    }
    !t.is_empty()
        && !t.contains(char::is_whitespace)
        && !t.starts_with('#')
        && t.bytes().all(|b| (63..=126).contains(&b))
}
