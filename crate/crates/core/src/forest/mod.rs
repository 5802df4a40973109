//! Equitable edge nsd-colourings of forests with colours 1 and 2.
//!
//! The forest is shrunk one configuration at a time until nothing is left,
//! then rebuilt in reverse, recolouring each removed piece so that the
//! colours stay balanced and adjacent sums stay distinct. Components that
//! become a single edge are set aside and coloured toward whichever colour
//! is behind.

mod extend;
mod rules;
mod work;

pub use rules::{Pullback, ReductionStep, Rule};

use crate::colouring::{verify_edge, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use work::{greedy, Partial, WorkForest};

fn check_input(f: &Graph) -> Result<()> {
    if !f.is_forest() {
        return Err(Error::Cyclic);
    }
    match f.isolated_edges().first() {
        Some(&e) => Err(Error::IsolatedEdge(e)),
        None => Ok(()),
    }
}

pub fn colour_forest_edge(f: &Graph) -> Result<EdgeColouring> {
    colour_forest_edge_traced(f).map(|(c, _)| c)
}

/// Like [`colour_forest_edge`], also returning the reductions in the order
/// they were applied.
pub fn colour_forest_edge_traced(f: &Graph) -> Result<(EdgeColouring, Vec<ReductionStep>)> {
    check_input(f)?;
    let ones = EdgeColouring::from_fn(f, 1, |_| 1);
    if verify_edge(f, &ones)?.valid {
        return Ok((ones, vec![]));
    }

    let mut wf = WorkForest::from_graph(f);
    let mut levels = vec![];
    loop {
        let singles = wf.isolated_edges();
        for e in &singles {
            wf.remove_edge(e.lo(), e.hi());
        }
        if wf.edge_count() == 0 {
            levels.push((singles, None));
            break;
        }
        let step = rules::find_step(&wf)?;
        rules::apply(&mut wf, &step);
        levels.push((singles, Some(step)));
    }

    let mut p = Partial::empty(wf.len());
    for (singles, step) in levels.iter().rev() {
        if let Some(step) = step {
            extend::extend(&mut p, step)?;
            debug_assert!(p.clean_everywhere(), "conflict after {:?}", step.pullback);
        }
        let mut bal = p.balance();
        for e in singles {
            p.add(e.lo(), e.hi(), greedy(&mut bal));
        }
    }

    let colouring = collect(f, &p)?;
    let report = verify_edge(f, &colouring)?;
    if !report.valid {
        return Err(Error::internal(format!(
            "forest colouring failed verification: {:?}",
            report.notes
        )));
    }
    let steps = levels.into_iter().filter_map(|(_, s)| s).collect();
    Ok((colouring, steps))
}

fn collect(f: &Graph, p: &Partial) -> Result<EdgeColouring> {
    let mut out = EdgeColouring::new(2, Default::default());
    for &e in f.edges() {
        let c = p.get(e.lo(), e.hi()).ok_or(Error::MissingEdge(e))?;
        out.colour.insert(e, u64::from(c));
    }
    Ok(out)
}

/// The first configuration the reduction would remove from `f`.
pub fn find_reduction(f: &Graph) -> Result<ReductionStep> {
    check_input(f)?;
    if f.size() == 0 {
        return Err(Error::precondition("forest has no edges"));
    }
    rules::find_step(&WorkForest::from_graph(f))
}

impl ReductionStep {
    /// The forest left after this step. Fresh vertices of a rewrite are
    /// appended after the existing ones.
    pub fn reduce(&self, f: &Graph) -> Graph {
        let mut wf = WorkForest::from_graph(f);
        rules::apply(&mut wf, self);
        wf.to_graph()
    }
}

/// Lifts a colouring of `step.reduce(f)` back to `f`.
///
/// `inner` must use colours 1 and 2 in balanced numbers and have distinct
/// sums on every edge that is not a component by itself.
pub fn extend_reduction(
    f: &Graph,
    step: &ReductionStep,
    inner: &EdgeColouring,
) -> Result<EdgeColouring> {
    let reduced = step.reduce(f);
    let mut p = Partial::empty(reduced.order());
    for &e in reduced.edges() {
        match inner.get(e).ok_or(Error::MissingEdge(e))? {
            c @ (1 | 2) => p.add(e.lo(), e.hi(), c as u8),
            c => {
                return Err(Error::precondition(format!(
                    "edge {e} has colour {c}, expected 1 or 2"
                )))
            }
        }
    }
    if p.balance().abs() > 1 || !p.clean_everywhere() {
        return Err(Error::precondition(
            "inner colouring is not balanced and conflict-free",
        ));
    }
    extend::extend(&mut p, step)?;
    collect(f, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_value, SearchConfig};
    use crate::format::Mode;
    use crate::generate::{free_trees, path, random_tree, star};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(f: &Graph) -> EdgeColouring {
        let c = colour_forest_edge(f).unwrap_or_else(|e| panic!("{e}"));
        let r = verify_edge(f, &c).unwrap();
        assert!(r.valid, "{:?}", r.notes);
        assert!(c.k <= 2);
        c
    }

    #[test]
    fn small_examples() {
        let p4 = check(&path(4).unwrap());
        assert_eq!(p4.k, 2);
        let p5 = check(&path(5).unwrap());
        assert_eq!((p5.class_sizes().of(1), p5.class_sizes().of(2)), (2, 2));
        assert_eq!(check(&star(3).unwrap()).k, 1);
        assert_eq!(check(&Graph::empty(4)).k, 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            colour_forest_edge(&path(2).unwrap()),
            Err(Error::IsolatedEdge((0, 1).into()))
        );
        let c4 = crate::generate::cycle(4).unwrap();
        assert_eq!(colour_forest_edge(&c4), Err(Error::Cyclic));
    }

    #[test]
    fn every_tree_up_to_eleven_vertices() {
        for n in 3..=11 {
            for t in free_trees(n) {
                check(&t);
            }
        }
    }

    #[test]
    fn every_rule_fires() {
        let mut seen = std::collections::HashSet::new();
        for n in 3..=14 {
            for t in free_trees(n) {
                let (_, steps) = colour_forest_edge_traced(&t).unwrap();
                seen.extend(steps.iter().map(|s| s.rule));
            }
        }
        assert_eq!(seen.len(), 7, "{seen:?}");
    }

    #[test]
    fn k_matches_exact_search() {
        for n in 3..=8 {
            for t in free_trees(n) {
                let c = check(&t);
                let out = exact_value(&t, &SearchConfig::new(Mode::Edge, 2)).unwrap();
                assert_eq!(out.value, Some(c.k), "{:?}", t.edges());
            }
        }
    }

    fn random_forest(seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = vec![];
        let mut n = 0;
        for _ in 0..rng.random_range(1..=4) {
            let size = rng.random_range(3..=60);
            let t = random_tree(size, rng.random()).unwrap();
            edges.extend(t.edges().iter().map(|e| (e.lo() + n, e.hi() + n)));
            n += size;
        }
        Graph::new(n + rng.random_range(0..3), edges).unwrap()
    }

    #[test]
    fn random_forests() {
        for seed in 0..300 {
            check(&random_forest(seed));
        }
    }

    #[test]
    fn reductions_lift_one_step_at_a_time() {
        for seed in 0..40 {
            let f = random_tree(40, seed).unwrap();
            let (_, steps) = colour_forest_edge_traced(&f).unwrap();
            if steps.is_empty() {
                continue;
            }
            let step = find_reduction(&f).unwrap();
            assert_eq!(step, steps[0]);
            let reduced = step.reduce(&f);
            // The reduced forest may contain single edges; colour the rest and
            // put those on last, as the full construction does.
            let singles = reduced.isolated_edges();
            let core = Graph::new(
                reduced.order(),
                reduced
                    .edges()
                    .iter()
                    .copied()
                    .filter(|e| !singles.contains(e)),
            )
            .unwrap();
            let mut inner = colour_forest_edge(&core).unwrap();
            if inner.k == 1 {
                // An all-ones answer still has to be balanced to lift.
                continue;
            }
            let mut bal = inner.class_sizes().of(1) as i64 - inner.class_sizes().of(2) as i64;
            for e in singles {
                let c = if bal > 0 { 2 } else { 1 };
                bal += if c == 1 { 1 } else { -1 };
                inner.colour.insert(e, c);
            }
            let lifted = extend_reduction(&f, &step, &inner).unwrap();
            assert!(verify_edge(&f, &lifted).unwrap().valid);
        }
    }

    #[test]
    fn first_reduction_examples() {
        let step = find_reduction(&path(6).unwrap()).unwrap();
        assert_eq!(step.rule, Rule::PathComponent);
        assert_eq!(step.removed_edges.len(), 5);

        // A degree-3 vertex with a leaf, a pendant 2-path, and a longer arm.
        let spider = Graph::new(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let step = find_reduction(&spider).unwrap();
        assert_eq!(step.rule, Rule::Claim2Rewrite);
        assert_eq!(step.reduce(&spider).order(), 11);

        let big_star = star(5).unwrap();
        assert_eq!(
            find_reduction(&big_star).unwrap().rule,
            Rule::MultifatherLeaves
        );
    }

    proptest::proptest! {
        #[test]
        fn random_trees_colour(n in 3usize..120, seed: u64) {
            check(&random_tree(n, seed).unwrap());
        }
    }
}
