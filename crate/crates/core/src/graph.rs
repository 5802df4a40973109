//! Simple undirected graphs over dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge, always stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", from = "(usize, usize)")]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge { lo: u, hi: v }
        } else {
            Edge { lo: v, hi: u }
        }
    }

    pub fn ends(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn contains(self, x: usize) -> bool {
        self.lo == x || self.hi == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.lo == x {
            self.hi
        } else {
            self.lo
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        e.ends()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            let (u, v) = e.ends();
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.lo].push(e.hi);
            adj[e.hi].push(e.lo);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Incident edges of `v`, ordered by the neighbour index.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = Edge> + '_ {
        self.adj[v].iter().map(move |&w| Edge::new(v, w))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree when the graph is regular (an empty graph is 0-regular).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// Edges forming a whole component on their own (a `K2` component).
    pub fn isolated_edges(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| self.degree(e.lo) == 1 && self.degree(e.hi) == 1)
            .collect()
    }

    pub fn is_forest(&self) -> bool {
        self.size() + components(self).len() == self.n
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() <= 1
    }

    /// The subgraph induced by `vertices`, relabelled `0..len` in the given
    /// order. Returns the subgraph and the local-to-global vertex map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| local[e.lo] != usize::MAX && local[e.hi] != usize::MAX)
            .map(|e| Edge::new(local[e.lo], local[e.hi]))
            .collect();
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, vertices.to_vec())
    }
}

/// A two-sided partition of the vertex set with every edge crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl Bipartition {
    /// Membership table: `true` for vertices on side X.
    pub fn x_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.side_x {
            mask[v] = true;
        }
        mask
    }
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Two-colours the vertices so that every edge crosses. In each component the
/// side holding the smallest vertex is side X.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &w in g.neighbours(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return Err(Error::NotBipartite(w)),
                    Some(_) => {}
                }
            }
        }
    }
    let (mut side_x, mut side_y) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(true) {
            side_x.push(v);
        } else {
            side_y.push(v);
        }
    }
    Ok(Bipartition { side_x, side_y })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::new(4, [(2, 1), (0, 1), (3, 1)]).unwrap();
        assert_eq!(
            g.edges(),
            &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(1, 3)]
        );
        assert_eq!(g.neighbours(1), &[0, 2, 3]);
        assert_eq!(g.degree(1), 3);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(0, 3));
    }

    #[test]
    fn components_examples() {
        let k5 = crate::generate::complete(5).unwrap();
        assert_eq!(components(&k5), vec![vec![0, 1, 2, 3, 4]]);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&two).len(), 2);
        let p3_plus = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let sizes: Vec<usize> = components(&p3_plus).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 1]);
    }

    #[test]
    fn bipartition_examples() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = bipartition(&c4).unwrap();
        assert_eq!(b.side_x, vec![0, 2]);
        assert_eq!(b.side_y, vec![1, 3]);

        let triangle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            bipartition(&triangle),
            Err(Error::NotBipartite(_))
        ));

        let (k23, _) = crate::generate::complete_bipartite(2, 3).unwrap();
        let b = bipartition(&k23).unwrap();
        assert_eq!((b.side_x.len(), b.side_y.len()), (2, 3));
    }

    #[test]
    fn isolated_edges_and_forest() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.isolated_edges(), vec![Edge::new(0, 1)]);
        assert!(g.is_forest());
        let c3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!c3.is_forest());
    }
}
