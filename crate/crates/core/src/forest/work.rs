//! Mutable forests used while reducing, and the partial colouring rebuilt
//! while unwinding.

use std::collections::{BTreeSet, HashMap};

use crate::graph::{Edge, Graph};

/// A forest whose vertex set can grow (rewrites append fresh vertices).
#[derive(Clone, Debug)]
pub(crate) struct WorkForest {
    adj: Vec<BTreeSet<usize>>,
}

impl WorkForest {
    pub(crate) fn from_graph(g: &Graph) -> Self {
        WorkForest {
            adj: g
                .vertices()
                .map(|v| g.neighbours(v).iter().copied().collect())
                .collect(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub(crate) fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub(crate) fn edges(&self) -> Vec<Edge> {
        (0..self.len())
            .flat_map(|u| self.adj[u].range(u + 1..).map(move |&v| Edge::new(u, v)))
            .collect()
    }

    pub(crate) fn isolated_edges(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|e| self.degree(e.lo()) == 1 && self.degree(e.hi()) == 1)
            .collect()
    }

    /// Vertices of the component of `s`, in BFS order.
    pub(crate) fn component(&self, s: usize) -> Vec<usize> {
        let mut seen = BTreeSet::from([s]);
        let mut out = vec![s];
        let mut i = 0;
        while i < out.len() {
            for w in self.neighbours(out[i]) {
                if seen.insert(w) {
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    }

    /// The pendant path leaving `v` through `w`, as `[w, ..., leaf]`, if every
    /// vertex before the leaf has degree 2.
    pub(crate) fn pendant_path(&self, v: usize, w: usize) -> Option<Vec<usize>> {
        let (mut prev, mut cur) = (v, w);
        let mut path = vec![w];
        loop {
            match self.degree(cur) {
                1 => return Some(path),
                2 => {
                    let next = self.neighbours(cur).find(|&x| x != prev)?;
                    if next == v {
                        return None;
                    }
                    prev = cur;
                    cur = next;
                    path.push(cur);
                }
                _ => return None,
            }
        }
    }

    pub(crate) fn to_graph(&self) -> Graph {
        Graph::new(self.len(), self.edges()).expect("work forests stay simple")
    }
}

/// A colouring of the current forest with 1s and 2s, its sums, and the
/// running balance between the two colours.
#[derive(Clone, Debug)]
pub(crate) struct Partial {
    pub(crate) adj: Vec<BTreeSet<usize>>,
    pub(crate) colour: HashMap<Edge, u8>,
    pub(crate) sums: Vec<u64>,
    pub(crate) ones: i64,
    pub(crate) twos: i64,
}

impl Partial {
    pub(crate) fn empty(n: usize) -> Self {
        Partial {
            adj: vec![BTreeSet::new(); n],
            colour: HashMap::new(),
            sums: vec![0; n],
            ones: 0,
            twos: 0,
        }
    }

    /// Ones minus twos.
    pub(crate) fn balance(&self) -> i64 {
        self.ones - self.twos
    }

    pub(crate) fn ensure(&mut self, n: usize) {
        if self.adj.len() < n {
            self.adj.resize(n, BTreeSet::new());
            self.sums.resize(n, 0);
        }
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub(crate) fn get(&self, u: usize, v: usize) -> Option<u8> {
        self.colour.get(&Edge::new(u, v)).copied()
    }

    fn tally(&mut self, c: u8, sign: i64) {
        if c == 1 {
            self.ones += sign;
        } else {
            self.twos += sign;
        }
    }

    pub(crate) fn add(&mut self, u: usize, v: usize, c: u8) {
        self.ensure(u.max(v) + 1);
        let prev = self.colour.insert(Edge::new(u, v), c);
        debug_assert!(prev.is_none(), "edge {u}-{v} coloured twice");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.sums[u] += u64::from(c);
        self.sums[v] += u64::from(c);
        self.tally(c, 1);
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) -> Option<u8> {
        let c = self.colour.remove(&Edge::new(u, v))?;
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.sums[u] -= u64::from(c);
        self.sums[v] -= u64::from(c);
        self.tally(c, -1);
        Some(c)
    }

    /// No edge at any of `vertices` joins equal sums, except edges that form
    /// a component on their own (those are settled once the forest grows).
    pub(crate) fn clean_at(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&x| {
            self.adj[x].iter().all(|&y| {
                self.sums[x] != self.sums[y] || (self.degree(x) == 1 && self.degree(y) == 1)
            })
        })
    }

    pub(crate) fn clean_everywhere(&self) -> bool {
        let all: Vec<usize> = (0..self.adj.len()).collect();
        self.clean_at(&all)
    }
}

/// The colour that moves `balance` toward zero (1 on a tie), applied to it.
pub(crate) fn greedy(balance: &mut i64) -> u8 {
    let c = if *balance > 0 { 2 } else { 1 };
    *balance += if c == 1 { 1 } else { -1 };
    c
}

pub(crate) fn other(c: u8) -> u8 {
    3 - c
}
