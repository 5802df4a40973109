//! Exact search for the least `k` admitting an equitable nsd-colouring.
//!
//! Plain backtracking over a fixed element order (vertices first in total
//! mode, then edges in lexicographic order), trying colours in ascending
//! order. Colour values enter the sums, so permuting colours is not a
//! symmetry and no colour is fixed in advance. Pruning:
//!
//! * a class never exceeds `⌈M/k⌉` elements, and at most `M mod k` classes
//!   reach that size (`M` = number of elements);
//! * the elements left must be able to lift every class to `⌊M/k⌋`;
//! * once both ends of an edge have all incident elements coloured, their
//!   sums must differ.

use serde_json::{json, Value};

use crate::colouring::{Colour, EdgeColouring, TotalColouring};
use crate::error::{Error, Result};
use crate::format::{to_json, Colouring, Mode};
use crate::graph::{Edge, Graph};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub k_max: Colour,
    pub node_limit: Option<u64>,
    pub mode: Mode,
}

impl SearchConfig {
    pub fn new(mode: Mode, k_max: Colour) -> Self {
        SearchConfig {
            k_max,
            node_limit: Some(DEFAULT_NODE_LIMIT),
            mode,
        }
    }
}

/// Result of probing a single `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Probe {
    Feasible(Colouring),
    Infeasible,
    /// The node limit ran out before the search finished.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Least feasible `k` in `1..=k_max`, if any was found.
    pub value: Option<Colour>,
    pub witness: Option<Colouring>,
    pub nodes: u64,
    /// Some probe hit the node limit, so `value` is not a proven optimum.
    pub indeterminate: bool,
}

impl SearchOutcome {
    pub fn to_json_value(&self) -> Value {
        let witness = self
            .witness
            .as_ref()
            .map(|w| serde_json::from_str::<Value>(&to_json(w)).expect("documents are valid JSON"));
        json!({
            "value": self.value,
            "witness": witness,
            "nodes": self.nodes,
            "indeterminate": self.indeterminate,
        })
    }
}

enum Element {
    Vertex(usize),
    Edge(Edge),
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    elements: Vec<Element>,
    assigned: Vec<Colour>,
    sums: Vec<u64>,
    pending: Vec<usize>,
    counts: Vec<usize>,
    floor: usize,
    cap: usize,
    /// How many classes may sit at `cap` when `cap > floor`.
    top_slots: usize,
    at_cap: usize,
    /// Total shortfall of all classes below `floor`.
    deficit: usize,
    nodes: u64,
    limit: u64,
}

#[derive(PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    OutOfNodes,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, mode: Mode, limit: u64) -> Self {
        let mut elements = Vec::new();
        let mut pending = vec![0usize; g.order()];
        if mode == Mode::Total {
            for v in g.vertices() {
                elements.push(Element::Vertex(v));
                pending[v] += 1;
            }
        }
        for &e in g.edges() {
            elements.push(Element::Edge(e));
            pending[e.lo()] += 1;
            pending[e.hi()] += 1;
        }
        let m = elements.len();
        let (floor, rem) = (m / k, m % k);
        Search {
            g,
            k,
            assigned: Vec::with_capacity(m),
            elements,
            sums: vec![0; g.order()],
            pending,
            counts: vec![0; k + 1],
            floor,
            cap: floor + usize::from(rem > 0),
            top_slots: rem,
            at_cap: 0,
            deficit: floor * k,
            nodes: 0,
            limit,
        }
    }

    fn touched(&self, i: usize) -> ([usize; 2], usize) {
        match self.elements[i] {
            Element::Vertex(v) => ([v, v], 1),
            Element::Edge(e) => ([e.lo(), e.hi()], 2),
        }
    }

    /// Adds colour `c` to class bookkeeping; false if it breaks equitability.
    fn admit(&mut self, c: usize) -> bool {
        let n = self.counts[c];
        if n >= self.cap {
            return false;
        }
        if self.cap > self.floor && n + 1 == self.cap && self.at_cap == self.top_slots {
            return false;
        }
        self.counts[c] += 1;
        if n < self.floor {
            self.deficit -= 1;
        }
        if self.cap > self.floor && n + 1 == self.cap {
            self.at_cap += 1;
        }
        true
    }

    fn release(&mut self, c: usize) {
        let n = self.counts[c];
        self.counts[c] -= 1;
        if n <= self.floor {
            self.deficit += 1;
        }
        if self.cap > self.floor && n == self.cap {
            self.at_cap -= 1;
        }
    }

    fn completes_cleanly(&self, x: usize) -> bool {
        self.g
            .neighbours(x)
            .iter()
            .all(|&y| self.pending[y] > 0 || self.sums[y] != self.sums[x])
    }

    fn run(&mut self) -> Flow {
        let i = self.assigned.len();
        if i == self.elements.len() {
            return Flow::Found;
        }
        let left_after = self.elements.len() - i - 1;
        let (ends, arity) = self.touched(i);
        for c in 1..=self.k {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Flow::OutOfNodes;
            }
            if !self.admit(c) {
                continue;
            }
            let mut ok = self.deficit <= left_after;
            let mut applied = 0;
            while ok && applied < arity {
                let x = ends[applied];
                self.sums[x] += c as u64;
                self.pending[x] -= 1;
                applied += 1;
                if self.pending[x] == 0 && !self.completes_cleanly(x) {
                    ok = false;
                }
            }
            if ok {
                self.assigned.push(c as Colour);
                match self.run() {
                    Flow::Exhausted => {}
                    done => return done,
                }
                self.assigned.pop();
            }
            for &x in &ends[..applied] {
                self.sums[x] -= c as u64;
                self.pending[x] += 1;
            }
            self.release(c);
        }
        Flow::Exhausted
    }

    fn witness(&self, mode: Mode) -> Colouring {
        let k = self.k as Colour;
        let mut edges = std::collections::BTreeMap::new();
        let mut vertices = std::collections::BTreeMap::new();
        for (el, &c) in self.elements.iter().zip(&self.assigned) {
            match *el {
                Element::Vertex(v) => {
                    vertices.insert(v, c);
                }
                Element::Edge(e) => {
                    edges.insert(e, c);
                }
            }
        }
        match mode {
            Mode::Edge => Colouring::Edge(EdgeColouring::new(k, edges)),
            Mode::Total => Colouring::Total(TotalColouring::new(k, edges, vertices)),
        }
    }
}

/// Decides whether `g` has an equitable nsd-colouring with palette `1..=k`,
/// spending at most `node_limit` search nodes. Returns the probe result and
/// the nodes used.
pub fn exists_equitable_nsd(
    g: &Graph,
    k: Colour,
    mode: Mode,
    node_limit: Option<u64>,
) -> Result<(Probe, u64)> {
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    if mode == Mode::Edge {
        if let Some(&e) = g.isolated_edges().first() {
            return Err(Error::IsolatedEdge(e));
        }
    }
    let k = usize::try_from(k)
        .map_err(|_| Error::InvalidSize(format!("k = {k} is too large to search")))?;
    if k > 1 << 20 {
        return Err(Error::InvalidSize(format!(
            "k = {k} is too large to search"
        )));
    }
    let mut s = Search::new(g, k, mode, node_limit.unwrap_or(u64::MAX));
    let probe = match s.run() {
        Flow::Found => Probe::Feasible(s.witness(mode)),
        Flow::Exhausted => Probe::Infeasible,
        Flow::OutOfNodes => Probe::Indeterminate,
    };
    Ok((probe, s.nodes))
}

/// Scans `k = 1, 2, ..., k_max` and stops at the first feasible value or the
/// first probe that runs out of nodes. The node limit applies per probe.
pub fn exact_value(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.k_max == 0 {
        return Err(Error::precondition("k_max must be at least 1"));
    }
    let mut nodes = 0;
    for k in 1..=cfg.k_max {
        let (probe, used) = exists_equitable_nsd(g, k, cfg.mode, cfg.node_limit)?;
        nodes += used;
        match probe {
            Probe::Feasible(w) => {
                return Ok(SearchOutcome {
                    value: Some(k),
                    witness: Some(w),
                    nodes,
                    indeterminate: false,
                })
            }
            Probe::Infeasible => {}
            Probe::Indeterminate => {
                return Ok(SearchOutcome {
                    value: None,
                    witness: None,
                    nodes,
                    indeterminate: true,
                })
            }
        }
    }
    Ok(SearchOutcome {
        value: None,
        witness: None,
        nodes,
        indeterminate: false,
    })
}
