//! Graph families and seeded random instances.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, Graph};

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)));
    Graph::new(n, edges)
}

/// `K_{m,n}` with side X = `0..m` and side Y = `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<(Graph, Bipartition)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize(format!(
            "complete bipartite graph needs both sides nonempty, got ({m},{n})"
        )));
    }
    let edges = (0..m).flat_map(|i| (m..m + n).map(move |j| Edge::new(i, j)));
    let g = Graph::new(m + n, edges)?;
    Ok((g, sides(m, n)))
}

fn sides(m: usize, n: usize) -> Bipartition {
    Bipartition {
        side_x: (0..m).collect(),
        side_y: (m..m + n).collect(),
    }
}

/// The path on `n` vertices `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| Edge::new(i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)))
}

/// The star with centre 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| Edge::new(0, i)))
}

/// A uniformly random labelled tree, decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("tree needs n >= 1".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::new(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<Edge> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves
            .pop_first()
            .expect("a Prüfer sequence always leaves a leaf");
        edges.push(Edge::new(leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push(Edge::new(a, b));
    edges
}

/// Keeps each of the `m*n` cross pairs independently with probability `p`.
/// Side X is `0..m`, side Y is `m..m+n`.
pub fn random_bipartite(m: usize, n: usize, p: f64, seed: u64) -> Result<(Graph, Bipartition)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..m {
        for j in m..m + n {
            if rng.random_bool(p) {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Ok((Graph::new(m + n, edges)?, sides(m, n)))
}

/// A random graph on `n` vertices with each pair kept with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// All unlabelled trees on `n` vertices, one representative each, in a
/// deterministic order. Built by attaching a leaf to every vertex of every
/// tree on `n - 1` vertices and keeping one tree per canonical form.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let mut edges = t.edges().to_vec();
                edges.push(Edge::new(v, size - 1));
                let grown = Graph::new(size, edges).expect("adding a leaf keeps the graph simple");
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// A string identifying a tree up to isomorphism: the smallest AHU encoding
/// over the tree's centres.
pub fn tree_canonical_form(t: &Graph) -> String {
    centres(t)
        .into_iter()
        .map(|c| ahu(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn centres(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbours(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer
}

fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = t
        .neighbours(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(t, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}
