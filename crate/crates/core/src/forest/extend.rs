//! Recolouring the part a reduction removed.
//!
//! Each pullback yields a short list of candidate assignments in the order
//! the construction prefers them. The first one that keeps the colours
//! balanced and creates no conflict is kept.

use super::rules::{Pullback, ReductionStep};
use super::work::{greedy, other, Partial};
use crate::error::{Error, Result};

type Assignment = Vec<(usize, usize, u8)>;

pub(crate) fn extend(p: &mut Partial, step: &ReductionStep) -> Result<()> {
    if let Pullback::Rewrite { v, fresh, .. } = step.pullback {
        let chain = [v, fresh[0], fresh[1], fresh[2], fresh[3]];
        let mut seen = vec![];
        for pair in chain.windows(2) {
            let c = p.remove(pair[0], pair[1]).ok_or_else(|| {
                Error::internal(format!("rewrite edge {}-{} uncoloured", pair[0], pair[1]))
            })?;
            seen.push(c);
        }
        if seen.iter().filter(|&&c| c == 1).count() != 2 {
            return Err(Error::internal(format!("pendant 4-path coloured {seen:?}")));
        }
        return try_candidates(p, step, rewrite_candidates(step, seen[0]));
    }
    let candidates = candidates(p, &step.pullback);
    try_candidates(p, step, candidates)
}

fn try_candidates(
    p: &mut Partial,
    step: &ReductionStep,
    candidates: Vec<Assignment>,
) -> Result<()> {
    for cand in &candidates {
        for &(a, b, c) in cand {
            p.add(a, b, c);
        }
        let touched: Vec<usize> = cand.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        if p.balance().abs() <= 1 && p.clean_at(&touched) {
            return Ok(());
        }
        for &(a, b, _) in cand {
            p.remove(a, b);
        }
    }
    Err(Error::internal(format!(
        "no extension for {:?} at {:?} (balance {}, {} candidates)",
        step.rule,
        step.pullback,
        p.balance(),
        candidates.len()
    )))
}

/// `uv` keeps the colour the path had at `v`, so `v` keeps its sum.
fn rewrite_candidates(step: &ReductionStep, first: u8) -> Vec<Assignment> {
    let Pullback::Rewrite { u, v, w, x, y, .. } = step.pullback else {
        unreachable!()
    };
    [1, 2]
        .into_iter()
        .map(|ux| {
            vec![
                (u, v, first),
                (u, w, other(first)),
                (u, x, ux),
                (x, y, other(ux)),
            ]
        })
        .collect()
}

/// Greedy colours for `leaves` hanging off `centre`, continuing from `balance`.
fn greedy_star(centre: usize, leaves: &[usize], balance: &mut i64) -> Assignment {
    leaves
        .iter()
        .map(|&l| (centre, l, greedy(balance)))
        .collect()
}

fn tally(a: &Assignment) -> i64 {
    a.iter().map(|&(_, _, c)| if c == 1 { 1 } else { -1 }).sum()
}

/// Colours along `start, path[0], path[1], ...`.
fn along(start: usize, path: &[usize], colours: &[u8]) -> Assignment {
    std::iter::once(start)
        .chain(path.iter().copied())
        .zip(path.iter().copied())
        .zip(colours.iter().copied())
        .map(|((a, b), c)| (a, b, c))
        .collect()
}

/// Colour tables for two pendant paths at a degree-3 vertex, read from the
/// vertex outwards. Each entry is (short, long). The first alternative gives
/// the vertex 4 from these paths, the second 3.
fn two_path_tables(
    lens: (usize, usize),
    majority_two: bool,
) -> [(&'static [u8], &'static [u8]); 2] {
    match (lens, majority_two) {
        ((1, 3), _) => [(&[2], &[2, 1, 1]), (&[2], &[1, 1, 2])],
        ((2, 2), _) => [(&[2, 1], &[2, 1]), (&[1, 2], &[2, 1])],
        ((2, 4), _) => [(&[2, 1], &[2, 2, 1, 1]), (&[2, 1], &[1, 2, 2, 1])],
        ((3, 3), _) => [(&[2, 1, 1], &[2, 2, 1]), (&[1, 2, 2], &[2, 1, 1])],
        ((2, 3), true) => [(&[2, 1], &[2, 2, 1]), (&[2, 1], &[1, 2, 2])],
        ((2, 3), false) => [(&[2, 1], &[2, 1, 1]), (&[1, 2], &[2, 1, 1])],
        ((3, 4), true) => [(&[2, 2, 1], &[2, 2, 1, 1]), (&[1, 2, 2], &[2, 1, 1, 2])],
        ((3, 4), false) => [(&[2, 1, 1], &[2, 2, 1, 1]), (&[2, 1, 1], &[1, 2, 2, 1])],
        _ => unreachable!("two-path case {lens:?}"),
    }
}

fn candidates(p: &Partial, pullback: &Pullback) -> Vec<Assignment> {
    let d = p.balance();
    match pullback {
        Pullback::Rewrite { .. } => unreachable!(),

        Pullback::Path { vertices } => [(1, 2), (2, 1), (1, 1), (2, 2)]
            .into_iter()
            .map(|(a, b)| {
                let cycle = [a, b, other(a), other(b)];
                let colours: Vec<u8> = (0..vertices.len() - 1).map(|i| cycle[i % 4]).collect();
                along(vertices[0], &vertices[1..], &colours)
            })
            .collect(),

        Pullback::Bundle {
            v, leaves, paths, ..
        } => {
            let mut bal = d;
            let leaf_part = greedy_star(*v, leaves, &mut bal);
            let base = p.sums[*v] + leaf_part.iter().map(|&(_, _, c)| u64::from(c)).sum::<u64>();
            [1u8, 2]
                .into_iter()
                .map(|first| {
                    let starts: Vec<u8> = (0..paths.len())
                        .map(|i| if i == 0 { first } else { 1 })
                        .collect();
                    let sv = base + starts.iter().map(|&c| u64::from(c)).sum::<u64>();
                    let mut a = leaf_part.clone();
                    for (path, &e1) in paths.iter().zip(&starts) {
                        let e2 = if u64::from(e1) + 1 != sv { 1 } else { 2 };
                        a.extend(along(*v, path, &[e1, e2, other(e1), other(e2)]));
                    }
                    a
                })
                .collect()
        }

        Pullback::ShortPath { v, path } => {
            let mut bal = d;
            match *path.as_slice() {
                [u, w] => {
                    let c = greedy(&mut bal);
                    vec![vec![(u, w, c)], vec![(u, w, other(c))]]
                }
                [u, w, x] => {
                    let wx = other(p.get(*v, u).unwrap_or(1));
                    bal += if wx == 1 { 1 } else { -1 };
                    let uw = greedy(&mut bal);
                    vec![
                        vec![(w, x, wx), (u, w, uw)],
                        vec![(w, x, wx), (u, w, other(uw))],
                    ]
                }
                _ => unreachable!(),
            }
        }

        Pullback::TwoPaths { v, short, long, .. } => {
            let lens = (short.len(), long.len());
            let odd = (lens.0 + lens.1) % 2 == 1;
            let majorities: &[bool] = match (odd, d) {
                (false, _) => &[false],
                (true, d) if d > 0 => &[true],
                (true, d) if d < 0 => &[false],
                (true, _) => &[false, true],
            };
            majorities
                .iter()
                .flat_map(|&two| two_path_tables(lens, two))
                .map(|(s, l)| {
                    let mut a = along(*v, short, s);
                    a.extend(along(*v, long, l));
                    a
                })
                .collect()
        }

        Pullback::Leaves { v, leaves, .. } => {
            let mut bal = d - 1;
            let mut forced = vec![(*v, leaves[0], 2)];
            forced.extend(greedy_star(*v, &leaves[1..], &mut bal));
            let mut bal = d;
            vec![forced, greedy_star(*v, leaves, &mut bal)]
        }

        Pullback::TwoSons {
            u,
            u_leaves,
            w,
            w_leaves,
            ..
        } => [([1, 1], [2, 2]), ([1, 2], [1, 2]), ([2, 2], [1, 1])]
            .into_iter()
            .map(|(cu, cw)| {
                let mut a = along_star(*u, u_leaves, &cu);
                a.extend(along_star(*w, w_leaves, &cw));
                a
            })
            .collect(),

        Pullback::SonAndLeaves {
            v,
            u,
            u_leaves,
            v_leaves,
        } => [([1, 1], [2, 2]), ([1, 2], [1, 2]), ([2, 2], [1, 1])]
            .into_iter()
            .map(|(cu, cv)| {
                let mut a = along_star(*u, u_leaves, &cu);
                a.extend(along_star(*v, v_leaves, &cv));
                a
            })
            .collect(),

        Pullback::SonAndLeaf {
            v, u, w, u_leaves, ..
        } => {
            let mut out = vec![];
            for uv in [1u8, 2] {
                for swap in [false, true] {
                    let (cuv, cvw) = if swap { (1, uv) } else { (uv, 1) };
                    let mut a = vec![
                        (*v, *w, cvw),
                        (*u, u_leaves[0], 2),
                        (*u, *v, cuv),
                        (*u, u_leaves[1], other(uv)),
                    ];
                    let mut bal = d + tally(&a);
                    a.extend(greedy_star(*u, &u_leaves[2..], &mut bal));
                    out.push(a);
                }
            }
            out
        }

        Pullback::SonAndTwoPath {
            v,
            u,
            w,
            w2,
            u_leaves,
            ..
        } => {
            let mut out = vec![];
            for uv in [1u8, 2] {
                let mut a = vec![
                    (*w, *w2, 1),
                    (*v, *w, 1),
                    (*u, u_leaves[0], 2),
                    (*u, u_leaves[1], 2),
                    (*u, *v, uv),
                ];
                let mut bal = d + tally(&a);
                a.extend(greedy_star(*u, &u_leaves[2..], &mut bal));
                out.push(a);
            }
            for flip in [false, true] {
                let mut a = vec![
                    (*v, *w, 2),
                    (*u, *v, 2),
                    (*u, u_leaves[0], 1),
                    (*u, u_leaves[1], 1),
                ];
                let ww = greedy(&mut (d + tally(&a)));
                a.push((*w, *w2, if flip { other(ww) } else { ww }));
                let mut bal = d + tally(&a);
                a.extend(greedy_star(*u, &u_leaves[2..], &mut bal));
                out.push(a);
            }
            out
        }

        Pullback::SonAndLongPath {
            v,
            u,
            path,
            u_leaves,
            ..
        } => {
            let mut out = vec![];
            for (swap_u, swap_path) in [(false, false), (true, false), (true, true), (false, true)]
            {
                let mut colours = vec![1u8, 1, 2, 2];
                colours.truncate(path.len());
                if swap_path {
                    colours.swap(0, 2);
                }
                let (vu, uu) = if swap_u { (2, 1) } else { (1, 2) };
                let mut a = along(*v, path, &colours);
                a.push((*v, *u, vu));
                a.push((*u, u_leaves[0], uu));
                let mut bal = d + tally(&a);
                a.extend(greedy_star(*u, &u_leaves[1..], &mut bal));
                out.push(a);
            }
            out
        }
    }
}

fn along_star(centre: usize, leaves: &[usize; 2], colours: &[u8; 2]) -> Assignment {
    vec![
        (centre, leaves[0], colours[0]),
        (centre, leaves[1], colours[1]),
    ]
}
