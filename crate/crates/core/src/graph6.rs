//! The graph6 format: an order prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed big-endian into 6-bit printable
//! characters (offset 63).

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let word = text.trim();
    let word = word.strip_prefix(HEADER).unwrap_or(word);
    let bytes = word.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("bad character {:?}", b as char)));
    }
    let (n, body) = read_order(bytes)?;

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated: {} data characters for {} vertices, expected {}",
            body.len(),
            n,
            needed
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "trailing data after {needed} characters"
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn read_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => Err(Error::Graph6(format!(
            "orders above {MAX_ORDER} are not supported"
        ))),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok((usize::from(first - 63), rest)),
    }
}

/// Encodes `g` without the optional header.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::InvalidSize(format!(
            "graph6 supports at most {MAX_ORDER} vertices"
        )));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    // Reference words produced by networkx.to_graph6_bytes.
    #[test]
    fn known_words() {
        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!(k5, generate::complete(5).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("A_").unwrap(), generate::complete(2).unwrap());
        assert_eq!(to_graph6(&k5).unwrap(), "D~{");
        assert_eq!(to_graph6(&Graph::empty(2)).unwrap(), "A?");
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap().size(), 10);
    }

    #[test]
    fn rejects_malformed() {
        assert!(
            matches!(parse_graph6("A?garbage"), Err(Error::Graph6(m)) if m.contains("trailing"))
        );
        assert!(matches!(parse_graph6("D~"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(
            matches!(parse_graph6("A\u{7f}"), Err(Error::Graph6(m)) if m.contains("bad character"))
        );
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_order_prefix() {
        let g = generate::random_bipartite(40, 40, 0.1, 3).unwrap().0;
        let word = to_graph6(&g).unwrap();
        assert_eq!(word.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&word).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let word = to_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&word).unwrap(), g);
        }
    }
}
