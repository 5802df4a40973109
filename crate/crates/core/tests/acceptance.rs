//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any failure.

use std::time::{Duration, Instant};

use eqnsd::colouring::{deviation_check, edge_sums, extend_edge_to_total, powers_of_two_colouring};
use eqnsd::complete::good_colouring;
use eqnsd::exact::Probe;
use eqnsd::generate::{
    complete, complete_bipartite, cycle, free_trees, path, random_bipartite, random_graph,
    random_tree,
};
use eqnsd::total::{colour_connected_bipartite_total, Majority};
use eqnsd::{
    colour_bipartite_total, colour_complete_bipartite_edge, colour_complete_edge,
    colour_complete_total, colour_forest_edge, components, exact_value, exists_equitable_nsd,
    verify_edge, verify_total, Colour, EdgeColouring, Graph, Mode, Rational, SearchConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: eqnsd::Error) -> String {
    e.to_string()
}

/// Every edge colouring produced along the way, for the blanket checks.
#[derive(Default)]
struct Produced {
    edge: Vec<(Graph, EdgeColouring)>,
}

impl Produced {
    fn keep(&mut self, g: &Graph, c: &EdgeColouring) {
        self.edge.push((g.clone(), c.clone()));
    }
}

fn exact(g: &Graph, mode: Mode, k_max: Colour) -> Result<Option<Colour>, String> {
    let out = exact_value(g, &SearchConfig::new(mode, k_max)).map_err(err)?;
    ensure!(!out.indeterminate, "search hit the node limit");
    Ok(out.value)
}

fn edge_witness(g: &Graph, k: Colour) -> Result<Option<EdgeColouring>, String> {
    match exists_equitable_nsd(g, k, Mode::Edge, None).map_err(err)?.0 {
        Probe::Feasible(eqnsd::Colouring::Edge(c)) => Ok(Some(c)),
        Probe::Feasible(_) => Err("edge search returned a total colouring".into()),
        Probe::Infeasible => Ok(None),
        Probe::Indeterminate => Err("search hit the node limit".into()),
    }
}

fn criterion1(out: &mut Produced) -> Outcome {
    for (n, want) in [(3, 3), (4, 4), (5, 3), (6, 3)] {
        let g = complete(n).unwrap();
        let start = Instant::now();
        let infeasible_two = edge_witness(&g, 2)?.is_none();
        let t2 = start.elapsed();
        ensure!(infeasible_two, "K{n} admits k=2");
        ensure!(t2 < Duration::from_secs(1), "K{n} k=2 proof took {t2:?}");
        let start = Instant::now();
        let got = exact(&g, Mode::Edge, 4)?;
        let t = start.elapsed();
        ensure!(
            got == Some(want),
            "K{n}: exact value {got:?}, expected {want}"
        );
        ensure!(t < Duration::from_secs(60), "K{n} took {t:?}");
        if let Some(c) = edge_witness(&g, want)? {
            out.keep(&g, &c);
        }
    }
    Ok("K3=3 K4=4 K5=3 K6=3".into())
}

fn criterion2(out: &mut Produced) -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 3..=75 {
        let g = complete(n).unwrap();
        let start = Instant::now();
        let c = colour_complete_edge(n).map_err(err)?;
        let r = verify_edge(&g, &c).map_err(err)?;
        let t = start.elapsed();
        slowest = slowest.max(t);
        ensure!(r.valid, "K{n} invalid: {:?}", r.notes);
        let want = if n == 4 { 4 } else { 3 };
        ensure!(c.k == want, "K{n} used k={}", c.k);
        ensure!(t < Duration::from_secs(1), "K{n} took {t:?}");
        if n != 4 {
            good_colouring(n).map_err(err)?.check().map_err(err)?;
        }
        out.keep(&g, &c);
    }
    Ok(format!("n=3..75 verified, slowest {slowest:?}"))
}

fn criterion3(out: &mut Produced) -> Outcome {
    for (m, n, want) in [(3, 3, 3), (2, 2, 2), (4, 4, 2), (1, 3, 1)] {
        let (g, _) = complete_bipartite(m, n).unwrap();
        let got = exact(&g, Mode::Edge, 3)?;
        ensure!(
            got == Some(want),
            "K{m},{n}: exact value {got:?}, expected {want}"
        );
        let c = colour_complete_bipartite_edge(m, n).map_err(err)?;
        let r = verify_edge(&g, &c).map_err(err)?;
        ensure!(
            r.valid && c.k == want,
            "K{m},{n} construction k={} valid={}",
            c.k,
            r.valid
        );
        out.keep(&g, &c);
    }
    for t in 1..=3usize {
        let (g, _) = complete_bipartite(2 * t, 2 * t).unwrap();
        let c = colour_complete_bipartite_edge(2 * t, 2 * t).map_err(err)?;
        let sums = edge_sums(&g, &c).map_err(err)?.sums;
        for i in 1..=2 * t {
            let want = if i % 2 == 1 { 2 * t } else { 4 * t };
            ensure!(
                sums[i - 1] == want as u64,
                "K{0},{0}: v{i} sums to {1}",
                2 * t,
                sums[i - 1]
            );
        }
        ensure!(
            sums[2 * t..].iter().all(|&s| s == 3 * t as u64),
            "K{0},{0}: other side not 3t",
            2 * t
        );
    }
    Ok("K3,3=3 K2,2=2 K4,4=2 K1,3=1; K2t,2t sums for t=1..3".into())
}

fn random_trees() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..1000)
        .map(|_| random_tree(rng.random_range(3..=300), rng.random()).unwrap())
        .collect()
}

fn small_trees() -> Vec<Graph> {
    (3..=11).flat_map(free_trees).collect()
}

fn criterion4(out: &mut Produced) -> Outcome {
    for t in random_trees() {
        let c = colour_forest_edge(&t).map_err(err)?;
        let r = verify_edge(&t, &c).map_err(err)?;
        ensure!(
            r.valid && c.k <= 2,
            "tree on {} vertices: k={} valid={}",
            t.order(),
            c.k,
            r.valid
        );
        out.keep(&t, &c);
    }
    let small = small_trees();
    for t in &small {
        let c = colour_forest_edge(t).map_err(err)?;
        let r = verify_edge(t, &c).map_err(err)?;
        ensure!(
            r.valid && c.k <= 2,
            "tree {:?}: k={} valid={}",
            t.edges(),
            c.k,
            r.valid
        );
        ensure!(
            edge_witness(t, c.k)?.is_some(),
            "search finds no colouring of {:?} at k={}",
            t.edges(),
            c.k
        );
        out.keep(t, &c);
    }
    let p4 = exact(&path(4).unwrap(), Mode::Edge, 3)?;
    ensure!(p4 == Some(2), "P4: exact value {p4:?}");
    Ok(format!(
        "1000 random trees, {} trees with <= 10 edges, P4=2",
        small.len()
    ))
}

fn total_ok(g: &Graph, c: &eqnsd::TotalColouring, what: &str) -> Result<(), String> {
    let r = verify_total(g, c).map_err(err)?;
    ensure!(
        r.valid && c.k <= 2,
        "{what}: k={} valid={} {:?}",
        c.k,
        r.valid,
        r.notes
    );
    Ok(())
}

fn both_majorities(g: &Graph, what: &str) -> Result<usize, String> {
    let mut checked = 0;
    for comp in components(g) {
        let (h, _) = g.induced(&comp);
        if h.size() == 0 || (h.order() + h.size()) % 2 == 0 {
            continue;
        }
        for maj in [Majority::Ones, Majority::Twos] {
            let c = colour_connected_bipartite_total(&h, maj).map_err(err)?;
            total_ok(&h, &c, &format!("{what} component, {maj:?} majority"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn criterion5() -> Outcome {
    let mut variants = 0;
    let mut count = 0;
    for i in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
        let (m, n) = (rng.random_range(1..=15), rng.random_range(1..=15));
        let p = if i % 2 == 0 { 0.1 } else { 0.5 };
        let (g, _) = random_bipartite(m, n, p, i).map_err(err)?;
        let c = colour_bipartite_total(&g).map_err(err)?;
        total_ok(&g, &c, &format!("random bipartite #{i}"))?;
        variants += both_majorities(&g, &format!("random bipartite #{i}"))?;
        count += 1;
    }
    for t in random_trees()
        .into_iter()
        .chain((2..=11).flat_map(free_trees))
    {
        let c = colour_bipartite_total(&t).map_err(err)?;
        total_ok(&t, &c, "tree")?;
        variants += both_majorities(&t, "tree")?;
        count += 1;
    }
    for n in (4..=20).step_by(2) {
        let g = cycle(n).unwrap();
        let c = colour_bipartite_total(&g).map_err(err)?;
        total_ok(&g, &c, &format!("C{n}"))?;
        variants += both_majorities(&g, &format!("C{n}"))?;
        count += 1;
    }
    Ok(format!("{count} graphs, {variants} majority variants"))
}

fn criterion6() -> Outcome {
    for (n, want) in [(2, 2), (3, 3), (4, 3)] {
        let got = exact(&complete(n).unwrap(), Mode::Total, 3)?;
        ensure!(
            got == Some(want),
            "K{n} total: exact value {got:?}, expected {want}"
        );
    }
    for n in 3..=40 {
        let g = complete(n).unwrap();
        let c = colour_complete_total(n).map_err(err)?;
        let r = verify_total(&g, &c).map_err(err)?;
        ensure!(
            r.valid && c.k == 3,
            "K{n} total: k={} valid={}",
            c.k,
            r.valid
        );
    }
    Ok("K2=2 K3=3 K4=3; n=3..40 verified".into())
}

fn criterion7(out: &Produced) -> Outcome {
    for (g, c) in &out.edge {
        let t = extend_edge_to_total(g, c).map_err(err)?;
        let r = verify_total(g, &t).map_err(err)?;
        ensure!(
            r.valid && t.k == c.k,
            "extension of a k={} colouring on {} vertices fails",
            c.k,
            g.order()
        );
    }
    Ok(format!("{} edge colourings extended", out.edge.len()))
}

fn criterion8(out: &Produced) -> Outcome {
    let mut checked = 0;
    let mut mean_checks = 0;
    for (g, c) in &out.edge {
        let Some(d) = g.regular_degree() else {
            continue;
        };
        if c.k != 3 || c.colour.values().any(|&x| x > 3) {
            continue;
        }
        ensure!(
            deviation_check(g, c).map_err(err)?,
            "deviation bound fails on a {d}-regular graph"
        );
        checked += 1;
        let sizes = c.class_sizes();
        if sizes.of(1) == sizes.of(3) {
            let mean = edge_sums(g, c).map_err(err)?.mean;
            ensure!(
                mean == Rational::from_integer(2 * d as i128),
                "mean {mean} != 2d on a {d}-regular graph"
            );
            mean_checks += 1;
        }
    }
    ensure!(checked > 0, "no regular 3-colourings were produced");
    Ok(format!(
        "{checked} regular 3-colourings, {mean_checks} mean checks"
    ))
}

fn criterion9() -> Outcome {
    let mut found = 0;
    let mut seed = 0u64;
    while found < 100 {
        seed += 1;
        let n = 4 + (seed % 9) as usize;
        let g = random_graph(n, 0.4, seed).map_err(err)?;
        if g.size() == 0 || g.size() > 20 || !g.isolated_edges().is_empty() {
            continue;
        }
        let c = powers_of_two_colouring(&g).map_err(err)?;
        let r = verify_edge(&g, &c).map_err(err)?;
        ensure!(r.valid, "seed {seed}: {:?}", r.notes);
        found += 1;
    }
    Ok(format!("100 graphs (seeds 1..={seed})"))
}

fn main() {
    let mut produced = Produced::default();
    let mut results: Vec<(u32, Outcome, Duration)> = vec![];
    let mut run = |id: u32, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let r = f();
        results.push((id, r, start.elapsed()));
    };
    run(1, &mut || criterion1(&mut produced));
    run(2, &mut || criterion2(&mut produced));
    run(3, &mut || criterion3(&mut produced));
    run(4, &mut || criterion4(&mut produced));
    run(5, &mut criterion5);
    run(6, &mut criterion6);
    run(7, &mut || criterion7(&produced));
    run(8, &mut || criterion8(&produced));
    run(9, &mut criterion9);

    let mut failed = false;
    for (id, r, t) in &results {
        match r {
            Ok(detail) => println!("PASS {id}: {detail} ({:.2?})", t),
            Err(why) => {
                failed = true;
                println!("FAIL {id}: {why} ({:.2?})", t);
            }
        }
    }
    if failed {
        std::process::exit(1);
    }
}
