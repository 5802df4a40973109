//! Equitable total nsd-colourings: two colours for bipartite graphs, three for
//! complete graphs of order at least 3.
//!
//! The bipartite construction keeps every vertex sum even on one side of the
//! bipartition and odd on the other, which separates all neighbours. Flipping
//! `1 ↔ 2` on an edge and both its ends (its *negative*) moves each affected
//! sum by an even amount, so parities survive; negatives are composed to
//! raise the number of 2s one at a time until the colouring is equitable.

use std::collections::{BTreeMap, VecDeque};

use crate::colouring::{extend_edge_to_total, total_sums, Colour, TotalColouring};
use crate::complete::colour_complete_edge;
use crate::error::{Error, Result};
use crate::generate::complete;
use crate::graph::{bipartition, components, Edge, Graph};

/// Which colour a connected component with an odd element count uses more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Majority {
    Ones,
    Twos,
}

/// Colours of `(u, uv, v)` on an edge, up to swapping the ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeType {
    T111,
    T222,
    T212,
    T122,
    T121,
    T112,
}

impl EdgeType {
    pub fn of(cu: Colour, ce: Colour, cv: Colour) -> EdgeType {
        let (a, b) = (cu.min(cv), cu.max(cv));
        match (a, ce, b) {
            (1, 1, 1) => EdgeType::T111,
            (2, 2, 2) => EdgeType::T222,
            (2, 1, 2) => EdgeType::T212,
            (1, 2, 2) => EdgeType::T122,
            (1, 2, 1) => EdgeType::T121,
            _ => EdgeType::T112,
        }
    }
}

/// A 1/2 total colouring of one connected graph, held in flat arrays indexed
/// by vertex and by position in `g.edges()`.
#[derive(Clone)]
struct Work<'a> {
    g: &'a Graph,
    vc: Vec<Colour>,
    ec: Vec<Colour>,
}

fn flip(c: Colour) -> Colour {
    3 - c
}

impl<'a> Work<'a> {
    fn from_colouring(g: &'a Graph, c: &TotalColouring) -> Result<Self> {
        total_sums(g, c)?;
        let vc: Vec<Colour> = g.vertices().map(|v| c.vertex_colour[&v]).collect();
        let ec: Vec<Colour> = g.edges().iter().map(|e| c.edge_colour[e]).collect();
        if vc.iter().chain(&ec).any(|&x| x != 1 && x != 2) {
            return Err(Error::precondition("colours must be 1 or 2"));
        }
        Ok(Work { g, vc, ec })
    }

    fn to_colouring(&self) -> TotalColouring {
        TotalColouring::new(
            2,
            self.g
                .edges()
                .iter()
                .copied()
                .zip(self.ec.iter().copied())
                .collect(),
            self.vc.iter().copied().enumerate().collect(),
        )
    }

    fn twos(&self) -> usize {
        self.vc.iter().chain(&self.ec).filter(|&&c| c == 2).count()
    }

    fn ones(&self) -> usize {
        self.vc.len() + self.ec.len() - self.twos()
    }

    fn sums(&self) -> Vec<u64> {
        let mut s = self.vc.clone();
        for (e, &c) in self.g.edges().iter().zip(&self.ec) {
            s[e.lo()] += c;
            s[e.hi()] += c;
        }
        s
    }

    fn negate(&mut self, i: usize) {
        let e = self.g.edges()[i];
        self.vc[e.lo()] = flip(self.vc[e.lo()]);
        self.vc[e.hi()] = flip(self.vc[e.hi()]);
        self.ec[i] = flip(self.ec[i]);
    }

    fn edge_type(&self, i: usize) -> EdgeType {
        let e = self.g.edges()[i];
        EdgeType::of(self.vc[e.lo()], self.ec[i], self.vc[e.hi()])
    }

    fn index(&self, u: usize, v: usize) -> usize {
        self.g
            .edge_index(Edge::new(u, v))
            .expect("walks follow edges")
    }

    /// Negates the edges of `path` (given by its vertices) in order if that
    /// adds exactly one 2.
    fn try_path(&mut self, path: &[usize]) -> bool {
        let before = self.twos();
        let mut trial = self.clone();
        for w in path.windows(2) {
            let i = trial.index(w[0], w[1]);
            trial.negate(i);
        }
        if trial.twos() == before + 1 {
            *self = trial;
            true
        } else {
            false
        }
    }
}

fn is_star(g: &Graph) -> bool {
    g.is_connected()
        && g.size() + 1 == g.order()
        && g.vertices().any(|v| g.degree(v) + 1 == g.order())
}

/// Parity target: `true` for vertices whose sum must share the parity of
/// vertex 0's side.
fn same_side_as_zero(g: &Graph) -> Result<Vec<bool>> {
    Ok(bipartition(g)?.x_mask(g.order()))
}

fn parity_correct(g: &Graph, sums: &[u64], side: &[bool]) -> bool {
    let Some(&first) = sums.first() else {
        return true;
    };
    let p = first % 2;
    g.vertices()
        .all(|v| sums[v] % 2 == if side[v] { p } else { 1 - p })
}

fn require_connected_bipartite(g: &Graph) -> Result<Vec<bool>> {
    let side = same_side_as_zero(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.size() == 0 {
        return Err(Error::precondition("graph has no edges"));
    }
    Ok(side)
}

/// All edges 1, the first vertex of side X coloured 2, every other vertex
/// coloured (in BFS order) so that side X has the parity of that seed and side
/// Y the other. If 2s are not then outnumbered, one edge is negated.
pub fn parity_base(g: &Graph) -> Result<TotalColouring> {
    require_connected_bipartite(g)?;
    Ok(parity_base_work(g)?.to_colouring())
}

fn parity_base_work(g: &Graph) -> Result<Work<'_>> {
    let side = require_connected_bipartite(g)?;
    let seed = 0;
    let mut w = Work {
        g,
        vc: vec![0; g.order()],
        ec: vec![1; g.size()],
    };
    w.vc[seed] = 2;
    let x_parity = (2 + g.degree(seed)) % 2;
    let mut seen = vec![false; g.order()];
    seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        if v != seed {
            let want = if side[v] { x_parity } else { 1 - x_parity };
            w.vc[v] = if (1 + g.degree(v)) % 2 == want { 1 } else { 2 };
        }
        for &u in g.neighbours(v) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    if w.ones() <= w.twos() {
        w.negate(0);
    }
    if !(w.ones() > w.twos() && w.twos() >= 1) {
        return Err(Error::internal(format!(
            "base colouring has {} ones and {} twos",
            w.ones(),
            w.twos()
        )));
    }
    Ok(w)
}

/// Flips `u`, `uv` and `v` between 1 and 2.
pub fn edge_negative(c: &TotalColouring, e: Edge) -> Result<TotalColouring> {
    if c.k != 2 {
        return Err(Error::precondition(format!(
            "negatives need k = 2, got {}",
            c.k
        )));
    }
    let mut out = c.clone();
    let ce = out.edge_colour.get_mut(&e).ok_or(Error::UnknownEdge(e))?;
    *ce = flip(*ce);
    for x in [e.lo(), e.hi()] {
        let cx = out
            .vertex_colour
            .get_mut(&x)
            .ok_or(Error::MissingVertex(x))?;
        *cx = flip(*cx);
    }
    Ok(out)
}

/// One more 2, same sum parities. `g` must be connected, bipartite and not a
/// star; `c` parity-correct with more 1s than 2s and at least one 2.
pub fn increment_twos(g: &Graph, c: &TotalColouring) -> Result<TotalColouring> {
    let side = require_connected_bipartite(g)?;
    if is_star(g) {
        return Err(Error::precondition("graph is a star"));
    }
    if c.k != 2 {
        return Err(Error::precondition(format!("expected k = 2, got {}", c.k)));
    }
    let w = Work::from_colouring(g, c)?;
    if !parity_correct(g, &w.sums(), &side) {
        return Err(Error::precondition(
            "sum parities do not follow the bipartition",
        ));
    }
    if !(w.ones() > w.twos() && w.twos() >= 1) {
        return Err(Error::precondition(
            "need more 1s than 2s and at least one 2",
        ));
    }
    Ok(increment_work(w)?.to_colouring())
}

fn increment_work(mut w: Work<'_>) -> Result<Work<'_>> {
    let before_twos = w.twos();
    let before_parity: Vec<u64> = w.sums().iter().map(|s| s % 2).collect();
    if !step(&mut w) {
        return Err(Error::internal(format!(
            "no negative sequence adds a 2; graph edges {:?}, vertex colours {:?}, edge colours {:?}",
            w.g.edges(),
            w.vc,
            w.ec
        )));
    }
    let parity: Vec<u64> = w.sums().iter().map(|s| s % 2).collect();
    if w.twos() != before_twos + 1 || parity != before_parity {
        return Err(Error::internal(
            "increment broke its count or parity guarantee",
        ));
    }
    Ok(w)
}

fn step(w: &mut Work<'_>) -> bool {
    let g = w.g;
    let m = g.size();
    let types: Vec<EdgeType> = (0..m).map(|i| w.edge_type(i)).collect();

    // A 121 or 112 edge: one negative suffices.
    if let Some(i) = (0..m).find(|&i| matches!(types[i], EdgeType::T121 | EdgeType::T112)) {
        w.negate(i);
        return true;
    }

    let idx = |u: usize, v: usize| g.edge_index(Edge::new(u, v)).expect("walks follow edges");
    let of_type = |u: usize, v: usize, t: &[EdgeType]| t.contains(&types[idx(u, v)]);

    if !types.contains(&EdgeType::T111) {
        // The 212 edges contain a cycle; negate three consecutive ones.
        let t212 = [EdgeType::T212];
        for (i, e) in g.edges().iter().enumerate() {
            if types[i] != EdgeType::T212 {
                continue;
            }
            let (b, c) = e.ends();
            let a = g
                .neighbours(b)
                .iter()
                .find(|&&a| a != c && of_type(a, b, &t212));
            let d = g
                .neighbours(c)
                .iter()
                .find(|&&d| d != b && of_type(c, d, &t212));
            if let (Some(&a), Some(&d)) = (a, d) {
                if w.try_path(&[a, b, c, d]) {
                    return true;
                }
            }
        }
        return false;
    }

    let t111 = [EdgeType::T111];
    if let Some(i) = (0..m).find(|&i| types[i] == EdgeType::T222) {
        // The 222 edge plus two adjacent 111 edges.
        let y = g.vertices().find(|&y| {
            g.neighbours(y)
                .iter()
                .filter(|&&x| of_type(x, y, &t111))
                .count()
                >= 2
        });
        if let Some(y) = y {
            let mut arms = g
                .neighbours(y)
                .iter()
                .copied()
                .filter(|&x| of_type(x, y, &t111));
            let (x, z) = (arms.next().unwrap(), arms.next().unwrap());
            let before = w.twos();
            let mut trial = w.clone();
            for j in [i, idx(x, y), idx(y, z)] {
                trial.negate(j);
            }
            if trial.twos() == before + 1 {
                *w = trial;
                return true;
            }
        }
        return false;
    }

    // Only 111 edges (type A) and 212/122 edges (type B) remain. Look at each
    // component of the type-A subgraph for a path A-A-B or B-B-A.
    let type_b = [EdgeType::T212, EdgeType::T122];
    let is_a = |u: usize, v: usize| of_type(u, v, &t111);
    let is_b = |u: usize, v: usize| of_type(u, v, &type_b);
    let a_nbrs = |v: usize| -> Vec<usize> {
        g.neighbours(v)
            .iter()
            .copied()
            .filter(|&x| is_a(v, x))
            .collect()
    };

    let mut seen = vec![false; g.order()];
    for start in g.vertices() {
        if seen[start] || a_nbrs(start).is_empty() {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for x in a_nbrs(comp[k]) {
                if !seen[x] {
                    seen[x] = true;
                    comp.push(x);
                }
            }
            k += 1;
        }
        let centre = comp
            .iter()
            .copied()
            .find(|&v| a_nbrs(v).len() + 1 == comp.len());
        let star = centre.is_some() && comp.len() >= 3;

        // A vertex with a B edge out and an A-path of length 2 onwards.
        let candidates: Vec<usize> = match (star, centre) {
            (true, Some(c)) => comp.iter().copied().filter(|&v| v != c).collect(),
            _ => comp.clone(),
        };
        for &v in &candidates {
            let Some(&u) = g.neighbours(v).iter().find(|&&u| is_b(u, v)) else {
                continue;
            };
            for x in a_nbrs(v) {
                for wv in a_nbrs(x) {
                    if wv != v && w.try_path(&[u, v, x, wv]) {
                        return true;
                    }
                }
            }
        }
        if let (true, Some(c)) = (star, centre) {
            // Leaves carry no B edge: walk B-B off the centre.
            let leaf = a_nbrs(c)[0];
            for &u in g.neighbours(c) {
                if !is_b(c, u) {
                    continue;
                }
                for &z in g.neighbours(u) {
                    if z != c && is_b(u, z) && w.try_path(&[leaf, c, u, z]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn target_twos(total: usize, majority: Majority) -> usize {
    match majority {
        Majority::Ones => total / 2,
        Majority::Twos => total.div_ceil(2),
    }
}

/// An equitable total 2-nsd-colouring of a connected bipartite graph. When the
/// element count is odd, `majority` picks the more frequent colour.
pub fn colour_connected_bipartite_total(g: &Graph, majority: Majority) -> Result<TotalColouring> {
    let side = same_side_as_zero(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (vc, ec): (Vec<Colour>, Vec<Colour>) = match (g.order(), g.size()) {
        (0, _) => (Vec::new(), Vec::new()),
        (1, 0) => (
            vec![if majority == Majority::Ones { 1 } else { 2 }],
            Vec::new(),
        ),
        (2, 1) => match majority {
            Majority::Ones => (vec![2, 1], vec![1]),
            Majority::Twos => (vec![1, 2], vec![2]),
        },
        _ if is_star(g) => {
            let (v, e) = match majority {
                Majority::Ones => (1, 2),
                Majority::Twos => (2, 1),
            };
            (vec![v; g.order()], vec![e; g.size()])
        }
        _ => {
            let target = target_twos(g.order() + g.size(), majority);
            let mut w = parity_base_work(g)?;
            debug_assert!(parity_correct(g, &w.sums(), &side));
            while w.twos() < target {
                w = increment_work(w)?;
            }
            (w.vc, w.ec)
        }
    };
    Ok(Work { g, vc, ec }.to_colouring())
}

/// An equitable total nsd-colouring of a bipartite graph with at most two
/// colours. Components are coloured largest first; those with an odd element
/// count alternate between a majority of 1s and a majority of 2s.
pub fn colour_bipartite_total(g: &Graph) -> Result<TotalColouring> {
    bipartition(g)?;
    let ones = TotalColouring::new(
        1,
        g.edges().iter().map(|&e| (e, 1)).collect(),
        g.vertices().map(|v| (v, 1)).collect(),
    );
    if g.edges()
        .iter()
        .all(|e| g.degree(e.lo()) != g.degree(e.hi()))
    {
        return Ok(ones);
    }

    let mut comps: Vec<(Graph, Vec<usize>)> = components(g).iter().map(|c| g.induced(c)).collect();
    comps.sort_by_key(|(h, map)| (std::cmp::Reverse(h.order() + h.size()), map[0]));
    let mut next_odd = Majority::Ones;
    let mut edge_colour = BTreeMap::new();
    let mut vertex_colour = BTreeMap::new();
    for (h, map) in &comps {
        let majority = if (h.order() + h.size()) % 2 == 1 {
            let m = next_odd;
            next_odd = if m == Majority::Ones {
                Majority::Twos
            } else {
                Majority::Ones
            };
            m
        } else {
            Majority::Ones
        };
        let local = colour_connected_bipartite_total(h, majority)?;
        for (e, c) in local.edge_colour {
            edge_colour.insert(Edge::new(map[e.lo()], map[e.hi()]), c);
        }
        for (v, c) in local.vertex_colour {
            vertex_colour.insert(map[v], c);
        }
    }
    Ok(TotalColouring::new(2, edge_colour, vertex_colour))
}

/// Equitable total nsd-colouring of `K_n`: fixed tables up to `K4`, and the
/// edge colouring of `K_n` extended to vertices beyond.
pub fn colour_complete_total(n: usize) -> Result<TotalColouring> {
    match n {
        0 | 1 => Err(Error::InvalidSize(format!(
            "K{n}: total construction needs n >= 2"
        ))),
        2 => Ok(TotalColouring::from_parts(2, &[1, 2], &[((0, 1), 1)])),
        3 => Ok(TotalColouring::from_parts(
            3,
            &[1, 2, 3],
            &[((0, 1), 1), ((0, 2), 2), ((1, 2), 3)],
        )),
        4 => Ok(TotalColouring::from_parts(
            3,
            &[1, 2, 3, 1],
            &[
                ((0, 1), 1),
                ((0, 2), 2),
                ((0, 3), 1),
                ((1, 2), 3),
                ((1, 3), 2),
                ((2, 3), 3),
            ],
        )),
        _ => extend_edge_to_total(&complete(n)?, &colour_complete_edge(n)?),
    }
}
