//! Equitable edge 3-nsd-colourings of complete graphs, grown two vertices at a
//! time from fixed tables for `K3`, `K5` and `K6`, plus the 4-colouring of `K4`.
//!
//! The induction carries a *good* colouring: colours 1 and 3 are used equally
//! often, every deviation `μ(v) = σ(v) − mean` lies in `[−⌊n/2⌋, ⌊n/2⌋]`, and
//! both bounds are attained (at `w_min` and `w_max`).

use std::collections::BTreeSet;

use crate::colouring::{edge_sums, Colour, EdgeColouring, Rational, SumProfile};
use crate::error::{Error, Result};
use crate::generate::complete;
use crate::graph::Edge;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodColouring {
    pub n: usize,
    pub colouring: EdgeColouring,
    pub w_min: usize,
    pub w_max: usize,
    pub profile: SumProfile,
}

impl GoodColouring {
    /// Wraps a 3-colouring of `K_n`, locating its extreme vertices, and checks
    /// that it is good and nsd.
    pub fn new(n: usize, colouring: EdgeColouring) -> Result<Self> {
        let g = complete(n)?;
        let profile = edge_sums(&g, &colouring)?;
        let w_min = argmin(&profile.sums);
        let w_max = argmax(&profile.sums);
        let good = GoodColouring {
            n,
            colouring,
            w_min,
            w_max,
            profile,
        };
        good.check()?;
        Ok(good)
    }

    /// All good-colouring conditions, plus pairwise distinct sums.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| {
            Err(Error::internal(format!(
                "K{} colouring is not good: {msg}",
                self.n
            )))
        };
        let sizes = self.colouring.class_sizes();
        if self.colouring.k != 3 || sizes.used.keys().any(|c| !(1..=3).contains(c)) {
            return fail("not a 3-colouring".into());
        }
        if sizes.of(1) != sizes.of(3) {
            return fail(format!(
                "|E(1)| = {} but |E(3)| = {}",
                sizes.of(1),
                sizes.of(3)
            ));
        }
        let bound = Rational::from_integer((self.n / 2) as i128);
        if let Some(v) = (0..self.n)
            .find(|&v| self.profile.deviations[v] > bound || self.profile.deviations[v] < -bound)
        {
            return fail(format!(
                "deviation {} at vertex {v}",
                self.profile.deviations[v]
            ));
        }
        if self.profile.deviations[self.w_min] != -bound
            || self.profile.deviations[self.w_max] != bound
        {
            return fail("extreme deviations not attained".into());
        }
        let distinct: BTreeSet<u64> = self.profile.sums.iter().copied().collect();
        if distinct.len() != self.n {
            return fail("two vertices share a sum".into());
        }
        Ok(())
    }
}

fn argmin(s: &[u64]) -> usize {
    (0..s.len()).min_by_key(|&i| (s[i], i)).unwrap_or(0)
}

fn argmax(s: &[u64]) -> usize {
    (0..s.len())
        .max_by_key(|&i| (s[i], std::cmp::Reverse(i)))
        .unwrap_or(0)
}

fn from_matrix<const N: usize>(rows: [[Colour; N]; N], k: Colour) -> EdgeColouring {
    EdgeColouring::from_pairs(
        k,
        (0..N).flat_map(|i| (i + 1..N).map(move |j| ((i, j), rows[i][j]))),
    )
}

/// The fixed good colourings of `K3`, `K5` and `K6`.
pub fn base_good(n: usize) -> Result<GoodColouring> {
    let c = match n {
        3 => EdgeColouring::from_pairs(3, [((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]),
        5 => from_matrix(
            [
                [0, 1, 1, 1, 3],
                [1, 0, 2, 2, 2],
                [1, 2, 0, 3, 2],
                [1, 2, 3, 0, 3],
                [3, 2, 2, 3, 0],
            ],
            3,
        ),
        6 => from_matrix(
            [
                [0, 1, 1, 1, 1, 3],
                [1, 0, 1, 2, 2, 2],
                [1, 1, 0, 2, 3, 2],
                [1, 2, 2, 0, 3, 3],
                [1, 2, 3, 3, 0, 3],
                [3, 2, 2, 3, 3, 0],
            ],
            3,
        ),
        _ => return Err(Error::InvalidSize(format!("no base table for K{n}"))),
    };
    GoodColouring::new(n, c)
}

/// The equitable 4-nsd-colouring of `K4`; three colours do not suffice there.
pub fn colour_k4() -> EdgeColouring {
    from_matrix([[0, 3, 1, 2], [3, 0, 4, 1], [1, 4, 0, 2], [2, 1, 2, 0]], 4)
}

/// Colour-count bookkeeping for one growth step `K_n → K_{n+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InductionBudget {
    pub n: usize,
    pub r: usize,
    pub r_next: usize,
    pub half: usize,
    /// Edges of colour 2 to recolour to 1, and as many to 3.
    pub q: usize,
}

impl InductionBudget {
    pub fn new(n: usize) -> Result<Self> {
        let r = n * (n - 1) / 6;
        let r_next = (n + 2) * (n + 1) / 6;
        let half = (n + 2) / 2;
        let q = r_next
            .checked_sub(r + half)
            .ok_or_else(|| Error::internal(format!("negative recolouring budget at n = {n}")))?;
        if 3 * q + 3 * half > 2 * n + 2 {
            return Err(Error::internal(format!(
                "recolouring budget q = {q} infeasible at n = {n}"
            )));
        }
        Ok(InductionBudget {
            n,
            r,
            r_next,
            half,
            q,
        })
    }
}

/// Adds vertices `u = n` and `v = n + 1`: `uv` gets 2, `u` sends 1 and `v`
/// sends 3 to the vertices of `s`, and both send 2 to everything else.
pub fn gamma0(base: &GoodColouring, s: &[usize]) -> Result<(EdgeColouring, usize, usize)> {
    let n = base.n;
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.len() != s.len() || set.len() != (n + 2) / 2 || set.iter().any(|&x| x >= n) {
        return Err(Error::precondition(format!(
            "S must be {} distinct vertices of K{n}",
            (n + 2) / 2
        )));
    }
    let (u, v) = (n, n + 1);
    let mut colour = base.colouring.colour.clone();
    colour.insert(Edge::new(u, v), 2);
    for x in 0..n {
        let (cu, cv) = if set.contains(&x) { (1, 3) } else { (2, 2) };
        colour.insert(Edge::new(u, x), cu);
        colour.insert(Edge::new(v, x), cv);
    }
    Ok((EdgeColouring::new(3, colour), u, v))
}

fn require_two(c: &EdgeColouring, edges: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in edges {
        if c.get(Edge::new(a, b)) != Some(2) {
            return Err(Error::precondition(format!(
                "edge {a}-{b} is not coloured 2, so the 4-cycle is not 2-monochromatic"
            )));
        }
    }
    Ok(())
}

/// Recolours `v·w_min` to 1 and `u·w_max` to 3 on the 2-coloured 4-cycle
/// `u w_min v w_max`.
pub fn recolour_type1(
    c: &EdgeColouring,
    u: usize,
    v: usize,
    w_min: usize,
    w_max: usize,
) -> Result<EdgeColouring> {
    require_two(c, &[(u, w_min), (w_min, v), (v, w_max), (w_max, u)])?;
    let mut out = c.clone();
    out.colour.insert(Edge::new(v, w_min), 1);
    out.colour.insert(Edge::new(u, w_max), 3);
    Ok(out)
}

/// For each pair `(x, y)` on a 2-coloured 4-cycle `u x v y`, recolours
/// `ux`, `vy` to 1 and `uy`, `vx` to 3. Every vertex sum is unchanged.
pub fn recolour_type2(
    c: &EdgeColouring,
    u: usize,
    v: usize,
    pairs: &[(usize, usize)],
) -> Result<EdgeColouring> {
    let mut seen = BTreeSet::from([u, v]);
    for &(x, y) in pairs {
        if !seen.insert(x) || !seen.insert(y) {
            return Err(Error::precondition(
                "recolouring pairs must be vertex-disjoint",
            ));
        }
        require_two(c, &[(u, x), (x, v), (v, y), (y, u)])?;
    }
    let mut out = c.clone();
    for &(x, y) in pairs {
        out.colour.insert(Edge::new(u, x), 1);
        out.colour.insert(Edge::new(v, y), 1);
        out.colour.insert(Edge::new(u, y), 3);
        out.colour.insert(Edge::new(v, x), 3);
    }
    Ok(out)
}

/// One induction step: a good equitable colouring of `K_n` (`n >= 5`) becomes
/// one of `K_{n+2}`.
pub fn extend_by_two(base: &GoodColouring) -> Result<GoodColouring> {
    let n = base.n;
    if n < 5 {
        return Err(Error::precondition(format!(
            "growth starts at K5, got K{n}"
        )));
    }
    let budget = InductionBudget::new(n)?;
    let ones = base.colouring.class_sizes().of(1);
    if ones != budget.r {
        return Err(Error::internal(format!(
            "K{n} uses colour 1 on {ones} edges, expected {}",
            budget.r
        )));
    }
    let q = budget.q;
    let odd = q % 2 == 1;
    let reserved = |x: &usize| odd && (*x == base.w_min || *x == base.w_max);

    let s: Vec<usize> = (0..n).filter(|x| !reserved(x)).take(budget.half).collect();
    let (mut c, u, v) = gamma0(base, &s)?;
    GoodColouring::new(n + 2, c.clone())?;

    let pair_pool: Vec<usize> = (0..n).filter(|x| !s.contains(x) && !reserved(x)).collect();
    let t = q / 2;
    if pair_pool.len() < 2 * t {
        return Err(Error::internal(format!(
            "K{n}: {} vertices outside S for {t} recolouring pairs",
            pair_pool.len()
        )));
    }
    let pairs: Vec<(usize, usize)> = pair_pool.chunks(2).take(t).map(|p| (p[0], p[1])).collect();
    c = recolour_type2(&c, u, v, &pairs)?;
    if odd {
        c = recolour_type1(&c, u, v, base.w_min, base.w_max)?;
    }

    let grown = GoodColouring::new(n + 2, c)?;
    let sizes = grown.colouring.class_sizes();
    if sizes.of(1) != budget.r_next || !(sizes.of(1)..=sizes.of(1) + 1).contains(&sizes.of(2)) {
        return Err(Error::internal(format!(
            "K{} class sizes {:?} off the expected pattern",
            n + 2,
            sizes.dense()
        )));
    }
    Ok(grown)
}

/// The good colouring of `K_n` for `n = 3` or `n >= 5`, with every
/// intermediate step of the growth checked.
pub fn good_colouring(n: usize) -> Result<GoodColouring> {
    match n {
        3 | 5 | 6 => base_good(n),
        _ if n >= 7 => {
            let mut g = base_good(if n % 2 == 1 { 5 } else { 6 })?;
            while g.n < n {
                g = extend_by_two(&g)?;
            }
            Ok(g)
        }
        _ => Err(Error::InvalidSize(format!("no good 3-colouring of K{n}"))),
    }
}

/// An equitable edge nsd-colouring of `K_n`, `n >= 3`: three colours, except
/// four for `K4`.
pub fn colour_complete_edge(n: usize) -> Result<EdgeColouring> {
    match n {
        0..=2 => Err(Error::InvalidSize(format!(
            "K{n} has no equitable edge nsd-colouring construction (n >= 3 required)"
        ))),
        4 => Ok(colour_k4()),
        _ => Ok(good_colouring(n)?.colouring),
    }
}
