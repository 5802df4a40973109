//! Equitable edge nsd-colourings of complete bipartite graphs with the least
//! possible number of colours.
//!
//! Vertices follow [`generate::complete_bipartite`]: the smaller side is
//! `0..m`, the other `m..m+n`.

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Edge;

pub fn colour_complete_bipartite_edge(m: usize, n: usize) -> Result<EdgeColouring> {
    let (m, n) = (m.min(n), m.max(n));
    generate::complete_bipartite(m, n)?;
    if (m, n) == (1, 1) {
        return Err(Error::IsolatedEdge(Edge::new(0, 1)));
    }
    let build = |k: Colour, f: &dyn Fn(usize, usize) -> Colour| {
        EdgeColouring::from_pairs(
            k,
            (0..m).flat_map(|i| (0..n).map(move |j| ((i, m + j), f(i, j)))),
        )
    };
    if m < n {
        return Ok(build(1, &|_, _| 1));
    }
    if n == 3 {
        const TABLE: [[Colour; 3]; 3] = [[1, 2, 3], [1, 2, 3], [1, 3, 2]];
        return Ok(build(3, &|i, j| TABLE[i][j]));
    }
    // Rows alternate 1, 2 from the first row on; an odd order adds a last
    // row of 1s and a last column of 2s meeting in a 1.
    let even = |i: usize| if i % 2 == 0 { 1 } else { 2 };
    if n % 2 == 0 {
        Ok(build(2, &|i, _| even(i)))
    } else {
        let last = n - 1;
        Ok(build(2, &|i, j| match (i == last, j == last) {
            (true, _) => 1,
            (false, true) => 2,
            (false, false) => even(i),
        }))
    }
}
