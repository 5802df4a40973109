//! Colourings, induced sums, verification, and the two universal
//! constructions: the edge-to-total extension and the powers-of-two labelling.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Colours are positive integers; `u64` leaves room for powers of two.
pub type Colour = u64;

pub type Rational = Ratio<i128>;

/// An edge colouring with a declared palette `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColouring {
    pub k: Colour,
    pub colour: BTreeMap<Edge, Colour>,
}

impl EdgeColouring {
    pub fn new(k: Colour, colour: BTreeMap<Edge, Colour>) -> Self {
        EdgeColouring { k, colour }
    }

    pub fn from_pairs<I: IntoIterator<Item = ((usize, usize), Colour)>>(
        k: Colour,
        pairs: I,
    ) -> Self {
        let colour = pairs.into_iter().map(|(e, c)| (Edge::from(e), c)).collect();
        EdgeColouring { k, colour }
    }

    /// Colours every edge of `g` with `f(edge)`.
    pub fn from_fn(g: &Graph, k: Colour, mut f: impl FnMut(Edge) -> Colour) -> Self {
        let colour = g.edges().iter().map(|&e| (e, f(e))).collect();
        EdgeColouring { k, colour }
    }

    pub fn get(&self, e: Edge) -> Option<Colour> {
        self.colour.get(&e).copied()
    }

    /// Colour of `uv`. Panics when the edge is uncoloured.
    pub fn at(&self, u: usize, v: usize) -> Colour {
        self.colour[&Edge::new(u, v)]
    }

    pub fn class_sizes(&self) -> ClassSizes {
        ClassSizes::count(self.k, self.colour.values().copied())
    }
}

/// A colouring of vertices and edges with a declared palette `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalColouring {
    pub k: Colour,
    pub edge_colour: BTreeMap<Edge, Colour>,
    pub vertex_colour: BTreeMap<usize, Colour>,
}

impl TotalColouring {
    pub fn new(
        k: Colour,
        edge_colour: BTreeMap<Edge, Colour>,
        vertex_colour: BTreeMap<usize, Colour>,
    ) -> Self {
        TotalColouring {
            k,
            edge_colour,
            vertex_colour,
        }
    }

    pub fn from_parts(k: Colour, vertices: &[Colour], edges: &[((usize, usize), Colour)]) -> Self {
        TotalColouring {
            k,
            edge_colour: edges.iter().map(|&(e, c)| (Edge::from(e), c)).collect(),
            vertex_colour: vertices.iter().copied().enumerate().collect(),
        }
    }

    pub fn class_sizes(&self) -> ClassSizes {
        ClassSizes::count(
            self.k,
            self.edge_colour
                .values()
                .chain(self.vertex_colour.values())
                .copied(),
        )
    }

    /// Number of elements (vertices and edges) carrying colour `c`.
    pub fn count(&self, c: Colour) -> usize {
        self.edge_colour
            .values()
            .chain(self.vertex_colour.values())
            .filter(|&&x| x == c)
            .count()
    }

    pub fn edge_part(&self) -> EdgeColouring {
        EdgeColouring::new(self.k, self.edge_colour.clone())
    }
}

/// Per-colour class sizes over a declared palette. Only colours in use are
/// stored, so huge palettes stay cheap; declared but unused colours count as
/// empty classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSizes {
    pub k: Colour,
    pub used: BTreeMap<Colour, usize>,
}

impl ClassSizes {
    pub fn count(k: Colour, colours: impl IntoIterator<Item = Colour>) -> Self {
        let mut used = BTreeMap::new();
        for c in colours {
            *used.entry(c).or_insert(0) += 1;
        }
        ClassSizes { k, used }
    }

    pub fn of(&self, c: Colour) -> usize {
        self.used.get(&c).copied().unwrap_or(0)
    }

    fn in_palette(&self) -> impl Iterator<Item = (&Colour, &usize)> {
        let k = self.k;
        self.used.iter().filter(move |(&c, _)| (1..=k).contains(&c))
    }

    pub fn min(&self) -> usize {
        let present = self.in_palette().count() as u128;
        if present < u128::from(self.k) {
            0
        } else {
            self.in_palette().map(|(_, &n)| n).min().unwrap_or(0)
        }
    }

    pub fn max(&self) -> usize {
        self.in_palette().map(|(_, &n)| n).max().unwrap_or(0)
    }

    pub fn is_equitable(&self) -> bool {
        self.max() - self.min() <= 1
    }

    /// Sizes of classes `1..=k`, or `None` when the palette is too large to list.
    pub fn dense(&self) -> Option<Vec<usize>> {
        (self.k <= 1 << 16).then(|| (1..=self.k).map(|c| self.of(c)).collect())
    }
}

/// Induced vertex sums with their mean and deviations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumProfile {
    pub sums: Vec<u64>,
    pub mean: Rational,
    pub deviations: Vec<Rational>,
}

impl SumProfile {
    pub fn from_sums(sums: Vec<u64>) -> Self {
        let total: i128 = sums.iter().map(|&s| i128::from(s)).sum();
        let mean = if sums.is_empty() {
            Rational::from_integer(0)
        } else {
            Rational::new(total, sums.len() as i128)
        };
        let deviations = sums
            .iter()
            .map(|&s| Rational::from_integer(i128::from(s)) - mean)
            .collect();
        SumProfile {
            sums,
            mean,
            deviations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub nsd_violations: Vec<Edge>,
    pub equitable: bool,
    pub in_range: bool,
    pub class_sizes: ClassSizes,
    pub sums: Vec<u64>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn build(g: &Graph, sums: Vec<u64>, class_sizes: ClassSizes, mut notes: Vec<String>) -> Self {
        let nsd_violations: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| sums[e.lo()] == sums[e.hi()])
            .collect();
        let out_of_range: Vec<Colour> = class_sizes
            .used
            .keys()
            .copied()
            .filter(|c| !(1..=class_sizes.k).contains(c))
            .collect();
        let in_range = class_sizes.k >= 1 && out_of_range.is_empty();
        if class_sizes.k == 0 {
            notes.push("declared k must be at least 1".into());
        }
        if !out_of_range.is_empty() {
            notes.push(format!(
                "colours outside 1..={}: {:?}",
                class_sizes.k, out_of_range
            ));
        }
        let equitable = class_sizes.is_equitable();
        if !equitable {
            notes.push(format!(
                "class sizes range from {} to {}",
                class_sizes.min(),
                class_sizes.max()
            ));
        }
        for e in nsd_violations.iter().take(10) {
            notes.push(format!(
                "adjacent vertices {} share sum {}",
                e,
                sums[e.lo()]
            ));
        }
        if nsd_violations.len() > 10 {
            notes.push(format!(
                "... {} nsd violations in total",
                nsd_violations.len()
            ));
        }
        VerificationReport {
            valid: nsd_violations.is_empty() && equitable && in_range,
            nsd_violations,
            equitable,
            in_range,
            class_sizes,
            sums,
            notes,
        }
    }
}

fn check_edge_coverage(g: &Graph, colour: &BTreeMap<Edge, Colour>) -> Result<()> {
    if let Some(e) = g.edges().iter().find(|e| !colour.contains_key(e)) {
        return Err(Error::MissingEdge(*e));
    }
    if let Some(e) = colour.keys().find(|&&e| g.edge_index(e).is_none()) {
        return Err(Error::UnknownEdge(*e));
    }
    Ok(())
}

fn raw_edge_sums(g: &Graph, colour: &BTreeMap<Edge, Colour>) -> Vec<u64> {
    let mut sums = vec![0u64; g.order()];
    for (e, &c) in colour {
        sums[e.lo()] = sums[e.lo()].saturating_add(c);
        sums[e.hi()] = sums[e.hi()].saturating_add(c);
    }
    sums
}

pub fn edge_sums(g: &Graph, c: &EdgeColouring) -> Result<SumProfile> {
    check_edge_coverage(g, &c.colour)?;
    Ok(SumProfile::from_sums(raw_edge_sums(g, &c.colour)))
}

fn raw_total_sums(g: &Graph, c: &TotalColouring) -> Result<Vec<u64>> {
    check_edge_coverage(g, &c.edge_colour)?;
    if let Some(v) = g.vertices().find(|v| !c.vertex_colour.contains_key(v)) {
        return Err(Error::MissingVertex(v));
    }
    if let Some(&v) = c.vertex_colour.keys().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let mut sums = raw_edge_sums(g, &c.edge_colour);
    for (&v, &col) in &c.vertex_colour {
        sums[v] = sums[v].saturating_add(col);
    }
    Ok(sums)
}

pub fn total_sums(g: &Graph, c: &TotalColouring) -> Result<SumProfile> {
    Ok(SumProfile::from_sums(raw_total_sums(g, c)?))
}

pub fn verify_edge(g: &Graph, c: &EdgeColouring) -> Result<VerificationReport> {
    check_edge_coverage(g, &c.colour)?;
    let sums = raw_edge_sums(g, &c.colour);
    Ok(VerificationReport::build(
        g,
        sums,
        c.class_sizes(),
        Vec::new(),
    ))
}

pub fn verify_total(g: &Graph, c: &TotalColouring) -> Result<VerificationReport> {
    let sums = raw_total_sums(g, c)?;
    Ok(VerificationReport::build(
        g,
        sums,
        c.class_sizes(),
        Vec::new(),
    ))
}

/// Checks `σ(v) = d₃(v) − d₁(v) + 2d` at every vertex of a `d`-regular graph
/// under a 3-colouring, and, when colours 1 and 3 are used equally often,
/// that the mean sum is `2d` and each deviation is `d₃(v) − d₁(v)`.
pub fn deviation_check(g: &Graph, c: &EdgeColouring) -> Result<bool> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if c.k != 3 {
        return Err(Error::precondition(format!("expected k = 3, got {}", c.k)));
    }
    let profile = edge_sums(g, c)?;
    let mut d1 = vec![0i128; g.order()];
    let mut d3 = vec![0i128; g.order()];
    for (e, &col) in &c.colour {
        let tally = match col {
            1 => &mut d1,
            3 => &mut d3,
            2 => continue,
            other => return Err(Error::precondition(format!("colour {other} outside 1..=3"))),
        };
        tally[e.lo()] += 1;
        tally[e.hi()] += 1;
    }
    let two_d = 2 * d as i128;
    let pointwise = g
        .vertices()
        .all(|v| i128::from(profile.sums[v]) == d3[v] - d1[v] + two_d);
    let sizes = c.class_sizes();
    if !pointwise || sizes.of(1) != sizes.of(3) {
        return Ok(pointwise);
    }
    let balanced = profile.mean == Rational::from_integer(two_d)
        && g.vertices()
            .all(|v| profile.deviations[v] == Rational::from_integer(d3[v] - d1[v]));
    Ok(balanced)
}

/// Extends an equitable edge `k`-nsd-colouring to an equitable total one with
/// the same palette. Vertices are ranked by edge sum (ties by index) and
/// coloured by cumulative class deficits, so vertex colours never decrease
/// along the ranking and the total sums keep the order of the edge sums.
pub fn extend_edge_to_total(g: &Graph, c: &EdgeColouring) -> Result<TotalColouring> {
    let report = verify_edge(g, c)?;
    if !report.valid {
        return Err(Error::InvalidColouring(report.notes.join("; ")));
    }
    let k = u128::from(c.k);
    let total = (g.order() + g.size()) as u128;
    let (q, r) = (total / k, total % k);
    let sizes = &report.class_sizes;

    // Colours with a nonzero deficit. With q >= 1 the palette is no larger
    // than the element count, so it can be listed. With q = 0 only the r
    // colours promoted to q + 1 can receive vertices.
    let mut by_size: Vec<Colour> = sizes.used.keys().copied().collect();
    by_size.sort_by_key(|&col| (std::cmp::Reverse(sizes.of(col)), col));
    let mut upper: BTreeSet<Colour> = by_size.iter().copied().take(r as usize).collect();
    let mut fresh = (1..=c.k).filter(|col| !sizes.used.contains_key(col));
    while (upper.len() as u128) < r {
        upper.insert(
            fresh
                .next()
                .ok_or_else(|| Error::internal("palette exhausted"))?,
        );
    }
    let candidates: Vec<Colour> = if q >= 1 {
        (1..=c.k).collect()
    } else {
        upper.iter().copied().collect()
    };

    let mut deficits = Vec::with_capacity(candidates.len());
    for col in candidates {
        let target = q + u128::from(upper.contains(&col));
        let have = sizes.of(col) as u128;
        if have > target {
            return Err(Error::internal(format!(
                "class {col} has {have} edges, above its target {target}"
            )));
        }
        deficits.push((col, (target - have) as usize));
    }

    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (report.sums[v], v));
    let mut vertex_colour = BTreeMap::new();
    let mut slots = deficits
        .iter()
        .flat_map(|&(col, n)| std::iter::repeat(col).take(n));
    for v in order {
        let col = slots
            .next()
            .ok_or_else(|| Error::internal("class deficits do not cover the vertices"))?;
        vertex_colour.insert(v, col);
    }
    if slots.next().is_some() {
        return Err(Error::internal("class deficits exceed the vertex count"));
    }
    Ok(TotalColouring::new(c.k, c.colour.clone(), vertex_colour))
}

/// Colours the edges, in lexicographic order, with distinct powers of two.
/// Every vertex sum is then the binary code of its incidence set.
pub fn powers_of_two_colouring(g: &Graph) -> Result<EdgeColouring> {
    if let Some(&e) = g.isolated_edges().first() {
        return Err(Error::IsolatedEdge(e));
    }
    if g.size() > 63 {
        return Err(Error::TooManyEdges(g.size()));
    }
    let k = if g.size() == 0 {
        1
    } else {
        1u64 << (g.size() - 1)
    };
    let colour = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, 1u64 << i))
        .collect();
    Ok(EdgeColouring::new(k, colour))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path, random_graph};
    use proptest::prelude::*;

    pub(crate) fn k5_reference() -> EdgeColouring {
        let rows = [
            [0, 1, 1, 1, 3],
            [1, 0, 2, 2, 2],
            [1, 2, 0, 3, 2],
            [1, 2, 3, 0, 3],
            [3, 2, 2, 3, 0],
        ];
        EdgeColouring::from_pairs(
            3,
            (0..5).flat_map(|i| (i + 1..5).map(move |j| ((i, j), rows[i][j]))),
        )
    }

    fn k33_reference() -> (Graph, EdgeColouring) {
        let (g, _) = complete_bipartite(3, 3).unwrap();
        let rows = [[1, 2, 3], [1, 2, 3], [1, 3, 2]];
        let c = EdgeColouring::from_pairs(
            3,
            (0..3).flat_map(|i| (0..3).map(move |j| ((i, 3 + j), rows[i][j]))),
        );
        (g, c)
    }

    fn k3_123() -> EdgeColouring {
        EdgeColouring::from_pairs(3, [((0, 1), 1), ((0, 2), 2), ((1, 2), 3)])
    }

    #[test]
    fn edge_sum_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(
            edge_sums(&k5, &k5_reference()).unwrap().sums,
            vec![6, 7, 8, 9, 10]
        );
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_pairs(2, [((0, 1), 1), ((1, 2), 2)]);
        assert_eq!(edge_sums(&p3, &c).unwrap().sums, vec![1, 3, 2]);
        assert_eq!(
            edge_sums(&complete(3).unwrap(), &k3_123()).unwrap().sums,
            vec![3, 4, 5]
        );
    }

    #[test]
    fn isolated_vertex_has_zero_sum() {
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let g4 = Graph::new(4, g.edges().iter().copied()).unwrap();
        let c = EdgeColouring::from_fn(&g4, 1, |_| 1);
        assert_eq!(edge_sums(&g4, &c).unwrap().sums, vec![2, 1, 1, 0]);
    }

    #[test]
    fn coverage_errors() {
        let p3 = path(3).unwrap();
        let partial = EdgeColouring::from_pairs(1, [((0, 1), 1)]);
        assert_eq!(
            edge_sums(&p3, &partial),
            Err(Error::MissingEdge(Edge::new(1, 2)))
        );
        let extra = EdgeColouring::from_pairs(1, [((0, 1), 1), ((1, 2), 1), ((0, 2), 1)]);
        assert_eq!(
            verify_edge(&p3, &extra),
            Err(Error::UnknownEdge(Edge::new(0, 2)))
        );
        let t = TotalColouring::from_parts(1, &[1, 1], &[((0, 1), 1), ((1, 2), 1)]);
        assert_eq!(total_sums(&p3, &t), Err(Error::MissingVertex(2)));
    }

    #[test]
    fn total_sum_examples() {
        let k2 = complete(2).unwrap();
        let c = TotalColouring::from_parts(2, &[1, 2], &[((0, 1), 1)]);
        assert_eq!(total_sums(&k2, &c).unwrap().sums, vec![2, 3]);
        let k3 = complete(3).unwrap();
        let c = TotalColouring::from_parts(3, &[1, 2, 3], &[((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
        let s = total_sums(&k3, &c).unwrap().sums;
        assert!(s[0] != s[1] && s[1] != s[2] && s[0] != s[2]);
        let single = Graph::empty(1);
        let c = TotalColouring::from_parts(2, &[2], &[]);
        assert_eq!(total_sums(&single, &c).unwrap().sums, vec![2]);
    }

    #[test]
    fn verify_edge_examples() {
        let k5 = complete(5).unwrap();
        let r = verify_edge(&k5, &k5_reference()).unwrap();
        assert!(r.valid);
        assert_eq!(r.class_sizes.dense().unwrap(), vec![3, 4, 3]);

        let k4 = complete(4).unwrap();
        let ones = EdgeColouring::from_fn(&k4, 1, |_| 1);
        let r = verify_edge(&k4, &ones).unwrap();
        assert!(!r.valid);
        assert_eq!(r.nsd_violations.len(), 6);

        let (k33, c) = k33_reference();
        let r = verify_edge(&k33, &c).unwrap();
        assert!(r.valid);
        assert_eq!(r.sums, vec![6, 6, 6, 3, 7, 8]);
    }

    #[test]
    fn verify_total_examples() {
        let k4 = complete(4).unwrap();
        let c = TotalColouring::from_parts(
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
        );
        assert!(verify_total(&k4, &c).unwrap().valid);

        let c4 = cycle(4).unwrap();
        let ones = TotalColouring::new(
            1,
            c4.edges().iter().map(|&e| (e, 1)).collect(),
            (0..4).map(|v| (v, 1)).collect(),
        );
        let r = verify_total(&c4, &ones).unwrap();
        assert!(!r.valid);
        assert_eq!(r.sums, vec![3; 4]);

        let k2 = complete(2).unwrap();
        let c = TotalColouring::from_parts(2, &[1, 2], &[((0, 1), 1)]);
        let r = verify_total(&k2, &c).unwrap();
        assert!(r.valid);
        assert_eq!(r.class_sizes.dense().unwrap(), vec![2, 1]);
    }

    #[test]
    fn unused_declared_colours_count_as_empty() {
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_pairs(3, [((0, 1), 1), ((1, 2), 1)]);
        let r = verify_edge(&p3, &c).unwrap();
        assert!(!r.equitable);
        let c = EdgeColouring::from_pairs(3, [((0, 1), 1), ((1, 2), 2)]);
        assert!(verify_edge(&p3, &c).unwrap().valid);
    }

    #[test]
    fn out_of_range_colours_are_reported() {
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_pairs(2, [((0, 1), 1), ((1, 2), 3)]);
        let r = verify_edge(&p3, &c).unwrap();
        assert!(!r.in_range && !r.valid);
        let c = EdgeColouring::from_pairs(2, [((0, 1), 0), ((1, 2), 2)]);
        assert!(!verify_edge(&p3, &c).unwrap().in_range);
    }

    #[test]
    fn deviation_check_examples() {
        let k5 = complete(5).unwrap();
        assert!(deviation_check(&k5, &k5_reference()).unwrap());
        assert_eq!(
            edge_sums(&k5, &k5_reference()).unwrap().mean,
            Rational::from_integer(8)
        );
        let k3 = complete(3).unwrap();
        assert!(deviation_check(&k3, &k3_123()).unwrap());
        assert_eq!(
            edge_sums(&k3, &k3_123()).unwrap().mean,
            Rational::from_integer(4)
        );
        let p3 = path(3).unwrap();
        let c = EdgeColouring::from_fn(&p3, 3, |_| 1);
        assert_eq!(deviation_check(&p3, &c), Err(Error::NotRegular));
    }

    #[test]
    fn extension_examples() {
        let k3 = complete(3).unwrap();
        let t = extend_edge_to_total(&k3, &k3_123()).unwrap();
        assert_eq!(
            t.vertex_colour.values().copied().collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(total_sums(&k3, &t).unwrap().sums, vec![4, 6, 8]);
        assert!(verify_total(&k3, &t).unwrap().valid);

        let star = crate::generate::star(4).unwrap();
        let ones = EdgeColouring::from_fn(&star, 1, |_| 1);
        let t = extend_edge_to_total(&star, &ones).unwrap();
        assert!(t.vertex_colour.values().all(|&c| c == 1));
        assert!(verify_total(&star, &t).unwrap().valid);

        let k5 = complete(5).unwrap();
        let t = extend_edge_to_total(&k5, &k5_reference()).unwrap();
        assert!(verify_total(&k5, &t).unwrap().valid);
        assert_eq!(t.edge_colour, k5_reference().colour);
    }

    #[test]
    fn extension_rejects_invalid_input() {
        let k4 = complete(4).unwrap();
        let ones = EdgeColouring::from_fn(&k4, 1, |_| 1);
        assert!(matches!(
            extend_edge_to_total(&k4, &ones),
            Err(Error::InvalidColouring(_))
        ));
    }

    #[test]
    fn powers_of_two_examples() {
        let p3 = path(3).unwrap();
        let c = powers_of_two_colouring(&p3).unwrap();
        assert_eq!(c.colour.values().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(verify_edge(&p3, &c).unwrap().sums, vec![1, 3, 2]);
        assert!(verify_edge(&p3, &c).unwrap().valid);

        let k3 = complete(3).unwrap();
        let c = powers_of_two_colouring(&k3).unwrap();
        assert_eq!(
            c.colour.values().copied().collect::<Vec<_>>(),
            vec![1, 2, 4]
        );
        let r = verify_edge(&k3, &c).unwrap();
        assert_eq!(r.sums, vec![3, 5, 6]);
        assert!(r.valid);

        let k2 = complete(2).unwrap();
        assert_eq!(
            powers_of_two_colouring(&k2),
            Err(Error::IsolatedEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn powers_of_two_extension_with_huge_palette() {
        let k3 = complete(3).unwrap();
        let c = powers_of_two_colouring(&k3).unwrap();
        let t = extend_edge_to_total(&k3, &c).unwrap();
        assert!(verify_total(&k3, &t).unwrap().valid);

        let g = cycle(40).unwrap();
        let c = powers_of_two_colouring(&g).unwrap();
        assert_eq!(c.k, 1 << 39);
        let t = extend_edge_to_total(&g, &c).unwrap();
        assert!(verify_total(&g, &t).unwrap().valid);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9, any::<u64>(), 0.1f64..0.9)
            .prop_map(|(n, seed, p)| random_graph(n, p, seed).unwrap())
    }

    proptest! {
        #[test]
        fn handshake_and_zero_deviation(g in arb_graph(), seed in any::<u64>()) {
            let mut x = seed;
            let c = EdgeColouring::from_fn(&g, 3, |_| {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                1 + (x >> 33) % 3
            });
            let p = edge_sums(&g, &c).unwrap();
            let colour_total: u64 = c.colour.values().sum();
            prop_assert_eq!(p.sums.iter().sum::<u64>(), 2 * colour_total);
            let dev: Rational = p.deviations.iter().sum();
            prop_assert_eq!(dev, Rational::from_integer(0));
        }

        #[test]
        fn powers_of_two_always_valid(g in arb_graph()) {
            prop_assume!(g.isolated_edges().is_empty());
            let c = powers_of_two_colouring(&g).unwrap();
            let r = verify_edge(&g, &c).unwrap();
            prop_assert!(r.valid);
            prop_assert!(r.class_sizes.used.values().all(|&n| n <= 1));
            let t = extend_edge_to_total(&g, &c).unwrap();
            prop_assert!(verify_total(&g, &t).unwrap().valid);
        }
    }
}
