//! Serialisation: the JSON colouring document, DOT export and a matrix view.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colouring::{edge_sums, total_sums, Colour, EdgeColouring, TotalColouring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const FORMAT_TAG: &str = "nsd-colouring/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Edge,
    Total,
}

/// Either kind of colouring, as read from or written to a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colouring {
    Edge(EdgeColouring),
    Total(TotalColouring),
}

impl Colouring {
    pub fn mode(&self) -> Mode {
        match self {
            Colouring::Edge(_) => Mode::Edge,
            Colouring::Total(_) => Mode::Total,
        }
    }

    pub fn k(&self) -> Colour {
        match self {
            Colouring::Edge(c) => c.k,
            Colouring::Total(c) => c.k,
        }
    }
}

impl From<EdgeColouring> for Colouring {
    fn from(c: EdgeColouring) -> Self {
        Colouring::Edge(c)
    }
}

impl From<TotalColouring> for Colouring {
    fn from(c: TotalColouring) -> Self {
        Colouring::Total(c)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: String,
    mode: Mode,
    k: Colour,
    edges: Vec<(usize, usize, Colour)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<(usize, Colour)>>,
}

fn edge_rows(map: &BTreeMap<Edge, Colour>) -> Vec<(usize, usize, Colour)> {
    map.iter().map(|(e, &c)| (e.lo(), e.hi(), c)).collect()
}

pub fn to_json(c: &Colouring) -> String {
    let doc = match c {
        Colouring::Edge(c) => Document {
            format: FORMAT_TAG.into(),
            mode: Mode::Edge,
            k: c.k,
            edges: edge_rows(&c.colour),
            vertices: None,
        },
        Colouring::Total(c) => Document {
            format: FORMAT_TAG.into(),
            mode: Mode::Total,
            k: c.k,
            edges: edge_rows(&c.edge_colour),
            vertices: Some(c.vertex_colour.iter().map(|(&v, &c)| (v, c)).collect()),
        },
    };
    serde_json::to_string(&doc).expect("colouring documents always serialise")
}

pub fn from_json(text: &str) -> Result<Colouring> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.format != FORMAT_TAG {
        return Err(Error::Format(format!(
            "unknown format tag {:?}, expected {FORMAT_TAG:?}",
            doc.format
        )));
    }
    let mut edges = BTreeMap::new();
    for (u, v, c) in doc.edges {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = Edge::new(u, v);
        if edges.insert(e, c).is_some() {
            return Err(Error::DuplicateEdge(e));
        }
    }
    match (doc.mode, doc.vertices) {
        (Mode::Edge, None) => Ok(Colouring::Edge(EdgeColouring::new(doc.k, edges))),
        (Mode::Edge, Some(_)) => Err(Error::Format("edge mode document lists vertices".into())),
        (Mode::Total, None) => Err(Error::Format("total mode document has no vertices".into())),
        (Mode::Total, Some(list)) => {
            let mut vertices = BTreeMap::new();
            for (v, c) in list {
                if vertices.insert(v, c).is_some() {
                    return Err(Error::Format(format!("vertex {v} listed twice")));
                }
            }
            Ok(Colouring::Total(TotalColouring::new(
                doc.k, edges, vertices,
            )))
        }
    }
}

/// Graphviz text with colours on edges and sums on vertices (`colour/sum`
/// for total colourings).
pub fn to_dot(g: &Graph, c: &Colouring) -> Result<String> {
    let (labels, edges): (Vec<String>, &BTreeMap<Edge, Colour>) = match c {
        Colouring::Edge(c) => {
            let sums = edge_sums(g, c)?.sums;
            (sums.iter().map(u64::to_string).collect(), &c.colour)
        }
        Colouring::Total(c) => {
            let sums = total_sums(g, c)?.sums;
            let labels = g
                .vertices()
                .map(|v| format!("{}/{}", c.vertex_colour[&v], sums[v]))
                .collect();
            (labels, &c.edge_colour)
        }
    };
    let mut out = String::from("graph G {\n");
    for (v, label) in labels.iter().enumerate() {
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (e, col) in edges {
        writeln!(out, "  {} -- {} [label=\"{col}\"];", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// The colouring as an adjacency matrix: `-` on the diagonal, `.` for
/// non-edges, then the vertex sums as a last column.
pub fn to_matrix(g: &Graph, c: &EdgeColouring) -> Result<String> {
    let sums = edge_sums(g, c)?.sums;
    let n = g.order();
    let width = c
        .colour
        .values()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (u, sum) in sums.iter().enumerate() {
        let cells: Vec<String> = (0..n)
            .map(|v| {
                let cell = if u == v {
                    "-".to_string()
                } else {
                    c.get(Edge::new(u, v))
                        .map_or(".".to_string(), |x| x.to_string())
                };
                format!("{cell:>width$}")
            })
            .collect();
        writeln!(out, "{} | {}", cells.join(" "), sum).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, path};

    fn k2_total() -> TotalColouring {
        TotalColouring::from_parts(2, &[1, 2], &[((0, 1), 1)])
    }

    #[test]
    fn json_is_bit_exact() {
        let c = EdgeColouring::from_pairs(2, [((1, 2), 2), ((0, 1), 1)]);
        assert_eq!(
            to_json(&c.into()),
            r#"{"format":"nsd-colouring/v1","mode":"edge","k":2,"edges":[[0,1,1],[1,2,2]]}"#
        );
        assert_eq!(
            to_json(&k2_total().into()),
            r#"{"format":"nsd-colouring/v1","mode":"total","k":2,"edges":[[0,1,1]],"vertices":[[0,1],[1,2]]}"#
        );
    }

    #[test]
    fn json_round_trip() {
        let c: Colouring = k2_total().into();
        assert_eq!(from_json(&to_json(&c)).unwrap(), c);
        let e: Colouring = EdgeColouring::from_pairs(3, [((0, 2), 3)]).into();
        assert_eq!(from_json(&to_json(&e)).unwrap(), e);
    }

    #[test]
    fn json_rejects_bad_documents() {
        assert!(from_json("{").is_err());
        assert!(from_json(r#"{"format":"other","mode":"edge","k":1,"edges":[]}"#).is_err());
        assert!(
            from_json(r#"{"format":"nsd-colouring/v1","mode":"total","k":1,"edges":[]}"#).is_err()
        );
        assert_eq!(
            from_json(
                r#"{"format":"nsd-colouring/v1","mode":"edge","k":1,"edges":[[0,1,1],[1,0,1]]}"#
            ),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn dot_labels() {
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_pairs(2, [((0, 1), 1), ((1, 2), 2)]);
        let dot = to_dot(&p3, &c.into()).unwrap();
        assert!(dot.contains("1 [label=\"3\"];"));
        assert!(dot.contains("1 -- 2 [label=\"2\"];"));
        let k2 = complete(2).unwrap();
        let dot = to_dot(&k2, &k2_total().into()).unwrap();
        assert!(dot.contains("0 [label=\"1/2\"];"));
        assert!(dot.contains("1 [label=\"2/3\"];"));
    }

    #[test]
    fn matrix_view() {
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_pairs(2, [((0, 1), 1), ((1, 2), 2)]);
        assert_eq!(
            to_matrix(&p3, &c).unwrap(),
            "- 1 . | 1\n1 - 2 | 3\n. 2 - | 2\n"
        );
    }
}
