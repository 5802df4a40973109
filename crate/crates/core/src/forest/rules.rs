//! Locating a reducible configuration and cutting it out.

use serde::Serialize;

use super::work::WorkForest;
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    PathComponent,
    Claim2Rewrite,
    PendantBundle,
    ShortPathAtBigVertex,
    TwoPathsAtDeg3,
    MultifatherLeaves,
    MultigrandfatherCase,
}

/// What the extension needs to recolour the removed part.
///
/// Paths are listed from the attachment vertex outwards, excluding it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Pullback {
    /// A whole path component, in order.
    Path { vertices: Vec<usize> },
    /// `u` of degree 3 with leaf `w`, pendant 2-path `x y`, and neighbour `v`,
    /// replaced by the pendant path `v a b c d`.
    Rewrite {
        u: usize,
        v: usize,
        w: usize,
        x: usize,
        y: usize,
        fresh: [usize; 4],
    },
    /// `v` with pendant leaves, pendant 4-paths and at most one other neighbour.
    Bundle {
        v: usize,
        leaves: Vec<usize>,
        paths: Vec<[usize; 4]>,
        other: Option<usize>,
    },
    /// A pendant path of length 2 or 3 at `v`; only its first edge stays.
    ShortPath { v: usize, path: Vec<usize> },
    /// `v` of degree 3 with a short and a long pendant path and neighbour `other`.
    TwoPaths {
        v: usize,
        short: Vec<usize>,
        long: Vec<usize>,
        other: usize,
    },
    /// `v` loses the listed pendant leaves; `father` stays attached.
    Leaves {
        v: usize,
        father: usize,
        leaves: Vec<usize>,
    },
    /// Two big sons `u`, `w` of `v`, two leaves removed at each.
    TwoSons {
        v: usize,
        u: usize,
        u_leaves: [usize; 2],
        w: usize,
        w_leaves: [usize; 2],
    },
    /// `v` of degree at least 4 with one big son `u`; two leaves each.
    SonAndLeaves {
        v: usize,
        u: usize,
        u_leaves: [usize; 2],
        v_leaves: [usize; 2],
    },
    /// `v` of degree 3 with big son `u` and leaf son `w`.
    SonAndLeaf {
        v: usize,
        father: usize,
        u: usize,
        w: usize,
        u_leaves: Vec<usize>,
    },
    /// `v` of degree 3 with big son `u` and pendant 2-path `w w2`.
    SonAndTwoPath {
        v: usize,
        father: usize,
        u: usize,
        w: usize,
        w2: usize,
        u_leaves: Vec<usize>,
    },
    /// `v` with big son `u` and a pendant path of length 3 or 4.
    SonAndLongPath {
        v: usize,
        father: usize,
        u: usize,
        path: Vec<usize>,
        u_leaves: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub site: Vec<usize>,
    pub removed_edges: Vec<Edge>,
    /// Edges on fresh vertices added by the rewrite rule.
    pub added_edges: Vec<Edge>,
    pub pullback: Pullback,
}

fn path_edges(start: usize, path: &[usize]) -> Vec<Edge> {
    std::iter::once(start)
        .chain(path.iter().copied())
        .zip(path.iter().copied())
        .map(|(a, b)| Edge::new(a, b))
        .collect()
}

fn star_edges(centre: usize, leaves: &[usize]) -> Vec<Edge> {
    leaves.iter().map(|&l| Edge::new(centre, l)).collect()
}

/// The first applicable rule on a forest without isolated edges.
pub(crate) fn find_step(f: &WorkForest) -> Result<ReductionStep> {
    type Finder = fn(&WorkForest) -> Option<ReductionStep>;
    const FINDERS: [Finder; 7] = [
        path_component,
        rewrite,
        bundle,
        short_path,
        two_paths,
        multifather,
        multigrandfather,
    ];
    FINDERS.iter().find_map(|find| find(f)).ok_or_else(|| {
        let edges: Vec<String> = f.edges().iter().map(ToString::to_string).collect();
        Error::internal(format!(
            "no reduction applies to forest with edges [{}]",
            edges.join(", ")
        ))
    })
}

/// Applies `step` to `f`, allocating the fresh vertices a rewrite names.
pub(crate) fn apply(f: &mut WorkForest, step: &ReductionStep) {
    for e in &step.removed_edges {
        f.remove_edge(e.lo(), e.hi());
    }
    while f.len() <= step.added_edges.iter().map(|e| e.hi()).max().unwrap_or(0) {
        f.add_vertex();
    }
    for e in &step.added_edges {
        f.add_edge(e.lo(), e.hi());
    }
}

fn path_component(f: &WorkForest) -> Option<ReductionStep> {
    let mut seen = vec![false; f.len()];
    for s in 0..f.len() {
        if seen[s] || f.degree(s) != 1 {
            continue;
        }
        let comp = f.component(s);
        comp.iter().for_each(|&x| seen[x] = true);
        if comp.len() < 3 || comp.iter().any(|&x| f.degree(x) > 2) {
            continue;
        }
        let first = f.neighbours(s).next()?;
        let mut vertices = vec![s];
        vertices.extend(f.pendant_path(s, first)?);
        let removed = path_edges(s, &vertices[1..]);
        return Some(ReductionStep {
            rule: Rule::PathComponent,
            site: vertices.clone(),
            removed_edges: removed,
            added_edges: vec![],
            pullback: Pullback::Path { vertices },
        });
    }
    None
}

fn rewrite(f: &WorkForest) -> Option<ReductionStep> {
    for u in (0..f.len()).filter(|&u| f.degree(u) == 3) {
        let nb: Vec<usize> = f.neighbours(u).collect();
        let Some(&w) = nb.iter().find(|&&w| f.degree(w) == 1) else {
            continue;
        };
        let Some((x, y)) = nb.iter().filter(|&&x| f.degree(x) == 2).find_map(|&x| {
            let y = f.neighbours(x).find(|&y| y != u)?;
            (f.degree(y) == 1).then_some((x, y))
        }) else {
            continue;
        };
        let v = *nb.iter().find(|&&v| v != w && v != x)?;
        let base = f.len();
        let fresh = [base, base + 1, base + 2, base + 3];
        let mut added = vec![Edge::new(v, fresh[0])];
        added.extend(fresh.windows(2).map(|p| Edge::new(p[0], p[1])));
        return Some(ReductionStep {
            rule: Rule::Claim2Rewrite,
            site: vec![u, v, w, x, y],
            removed_edges: vec![
                Edge::new(u, v),
                Edge::new(u, w),
                Edge::new(u, x),
                Edge::new(x, y),
            ],
            added_edges: added,
            pullback: Pullback::Rewrite {
                u,
                v,
                w,
                x,
                y,
                fresh,
            },
        });
    }
    None
}

fn bundle(f: &WorkForest) -> Option<ReductionStep> {
    for v in (0..f.len()).filter(|&v| f.degree(v) >= 2) {
        let (mut leaves, mut paths, mut others) = (vec![], vec![], vec![]);
        for w in f.neighbours(v) {
            match f.pendant_path(v, w) {
                Some(p) if p.len() == 1 => leaves.push(w),
                Some(p) if p.len() == 4 => paths.push([p[0], p[1], p[2], p[3]]),
                _ => others.push(w),
            }
        }
        if paths.is_empty() || others.len() > 1 {
            continue;
        }
        let mut removed = star_edges(v, &leaves);
        for p in &paths {
            removed.extend(path_edges(v, p));
        }
        return Some(ReductionStep {
            rule: Rule::PendantBundle,
            site: vec![v],
            removed_edges: removed,
            added_edges: vec![],
            pullback: Pullback::Bundle {
                v,
                leaves,
                paths,
                other: others.first().copied(),
            },
        });
    }
    None
}

fn short_path(f: &WorkForest) -> Option<ReductionStep> {
    for v in (0..f.len()).filter(|&v| f.degree(v) >= 4) {
        for u in f.neighbours(v) {
            let Some(path) = f.pendant_path(v, u) else {
                continue;
            };
            if path.len() == 2 || path.len() == 3 {
                return Some(ReductionStep {
                    rule: Rule::ShortPathAtBigVertex,
                    site: vec![v],
                    removed_edges: path_edges(path[0], &path[1..]),
                    added_edges: vec![],
                    pullback: Pullback::ShortPath { v, path },
                });
            }
        }
    }
    None
}

/// Pairs of pendant-path lengths (shorter first) handled at a degree-3 vertex.
pub(crate) const TWO_PATH_CASES: [(usize, usize); 6] =
    [(1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)];

fn two_paths(f: &WorkForest) -> Option<ReductionStep> {
    for v in (0..f.len()).filter(|&v| f.degree(v) == 3) {
        let nb: Vec<usize> = f.neighbours(v).collect();
        let paths: Vec<Option<Vec<usize>>> = nb.iter().map(|&w| f.pendant_path(v, w)).collect();
        for i in 0..3 {
            for j in 0..3 {
                let (Some(a), Some(b)) = (&paths[i], &paths[j]) else {
                    continue;
                };
                if i == j
                    || !TWO_PATH_CASES.contains(&(a.len(), b.len()))
                    || (a.len() == b.len() && i > j)
                {
                    continue;
                }
                let other = nb[3 - i - j];
                let mut removed = path_edges(v, a);
                removed.extend(path_edges(v, b));
                return Some(ReductionStep {
                    rule: Rule::TwoPathsAtDeg3,
                    site: vec![v],
                    removed_edges: removed,
                    added_edges: vec![],
                    pullback: Pullback::TwoPaths {
                        v,
                        short: a.clone(),
                        long: b.clone(),
                        other,
                    },
                });
            }
        }
    }
    None
}

fn leaf_neighbours(f: &WorkForest, v: usize) -> Vec<usize> {
    f.neighbours(v).filter(|&w| f.degree(w) == 1).collect()
}

fn multifather(f: &WorkForest) -> Option<ReductionStep> {
    for v in (0..f.len()).filter(|&v| f.degree(v) >= 3) {
        let leaves = leaf_neighbours(f, v);
        let father = match f.degree(v) - leaves.len() {
            0 => leaves[0],
            1 => f.neighbours(v).find(|&w| f.degree(w) != 1)?,
            _ => continue,
        };
        if f.degree(father) > 2 {
            continue;
        }
        let leaves: Vec<usize> = leaves.into_iter().filter(|&w| w != father).collect();
        return Some(ReductionStep {
            rule: Rule::MultifatherLeaves,
            site: vec![v, father],
            removed_edges: star_edges(v, &leaves),
            added_edges: vec![],
            pullback: Pullback::Leaves { v, father, leaves },
        });
    }
    None
}

/// Parent pointers and "big depth" for each component rooted at its
/// lowest-index leaf. Big depth counts degree-3+ vertices on the best
/// downward path, excluding the vertex itself.
fn rooted(f: &WorkForest) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = f.len();
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    for root in (0..n).filter(|&r| f.degree(r) == 1) {
        if seen[root] {
            continue;
        }
        let order = f.component(root);
        order.iter().for_each(|&x| seen[x] = true);
        for &x in &order {
            for w in f.neighbours(x) {
                if Some(w) != parent[x] {
                    parent[w] = Some(x);
                }
            }
        }
        for &x in order.iter().rev() {
            if let Some(p) = parent[x] {
                let up = depth[x] + usize::from(f.degree(x) >= 3);
                depth[p] = depth[p].max(up);
            }
        }
    }
    (parent, depth)
}

fn multigrandfather(f: &WorkForest) -> Option<ReductionStep> {
    let (parent, depth) = rooted(f);
    let v = (0..f.len()).find(|&v| f.degree(v) >= 3 && depth[v] == 1)?;
    let father = parent[v]?;
    let sons: Vec<usize> = f.neighbours(v).filter(|&s| s != father).collect();
    let big: Vec<usize> = sons.iter().copied().filter(|&s| f.degree(s) >= 3).collect();
    let two_leaves = |u: usize| -> Option<[usize; 2]> {
        let l = leaf_neighbours(f, u);
        (l.len() >= 2).then(|| [l[0], l[1]])
    };
    let all_leaves = |u: usize| -> Vec<usize> { f.neighbours(u).filter(|&x| x != v).collect() };
    let step = |pullback: Pullback, removed: Vec<Edge>| ReductionStep {
        rule: Rule::MultigrandfatherCase,
        site: vec![v, father],
        removed_edges: removed,
        added_edges: vec![],
        pullback,
    };

    if big.len() >= 2 {
        let (u, w) = (big[0], big[1]);
        let (u_leaves, w_leaves) = (two_leaves(u)?, two_leaves(w)?);
        let mut removed = star_edges(u, &u_leaves);
        removed.extend(star_edges(w, &w_leaves));
        return Some(step(
            Pullback::TwoSons {
                v,
                u,
                u_leaves,
                w,
                w_leaves,
            },
            removed,
        ));
    }
    let u = *big.first()?;
    let u_leaves = all_leaves(u);
    if u_leaves.iter().any(|&l| f.degree(l) != 1) {
        return None;
    }
    let rest: Vec<usize> = sons.iter().copied().filter(|&s| s != u).collect();
    if rest.iter().all(|&s| f.degree(s) == 1) {
        if f.degree(v) >= 4 {
            let u_two = [u_leaves[0], u_leaves[1]];
            let v_leaves = [rest[0], rest[1]];
            let mut removed = star_edges(u, &u_two);
            removed.extend(star_edges(v, &v_leaves));
            return Some(step(
                Pullback::SonAndLeaves {
                    v,
                    u,
                    u_leaves: u_two,
                    v_leaves,
                },
                removed,
            ));
        }
        let w = rest[0];
        let mut removed = vec![Edge::new(v, w), Edge::new(v, u)];
        removed.extend(star_edges(u, &u_leaves));
        return Some(step(
            Pullback::SonAndLeaf {
                v,
                father,
                u,
                w,
                u_leaves,
            },
            removed,
        ));
    }
    let paths: Vec<Vec<usize>> = rest.iter().filter_map(|&s| f.pendant_path(v, s)).collect();
    if f.degree(v) == 3 {
        if let Some(p) = paths.iter().find(|p| p.len() == 2) {
            let (w, w2) = (p[0], p[1]);
            let mut removed = vec![Edge::new(v, w), Edge::new(w, w2), Edge::new(v, u)];
            removed.extend(star_edges(u, &u_leaves));
            return Some(step(
                Pullback::SonAndTwoPath {
                    v,
                    father,
                    u,
                    w,
                    w2,
                    u_leaves,
                },
                removed,
            ));
        }
    }
    let path = paths.into_iter().find(|p| p.len() == 3 || p.len() == 4)?;
    let mut removed = path_edges(v, &path);
    removed.push(Edge::new(v, u));
    removed.extend(star_edges(u, &u_leaves));
    Some(step(
        Pullback::SonAndLongPath {
            v,
            father,
            u,
            path,
            u_leaves,
        },
        removed,
    ))
}
