//! Batch runs. Every instance is verified; any failure exits with code 4.
//!
//! CSV columns: `id,n,m,k,valid,class_sizes,wall_ms`, where `n` and `m`
//! are the vertex and edge counts and `class_sizes` lists the sizes of
//! classes `1..=k` separated by `;`.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::ValueEnum;
use eqnsd::{
    colour_bipartite_total, colour_complete_bipartite_edge, colour_complete_edge,
    colour_forest_edge, generate, Colouring, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{verify, CliResult, Fail};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub(crate) enum Family {
    Complete,
    CompleteBipartite,
    Trees,
    BipartiteTotal,
}

#[derive(clap::Args)]
pub(crate) struct Args {
    #[arg(long, value_enum)]
    family: Family,
    /// Smallest order (complete, complete-bipartite).
    #[arg(long, default_value_t = 3)]
    from: usize,
    /// Largest order (complete, complete-bipartite).
    #[arg(long, default_value_t = 40)]
    to: usize,
    /// Number of random instances (trees, bipartite-total).
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Largest tree order, or largest side for bipartite-total.
    #[arg(long, default_value_t = 50)]
    max_n: usize,
    /// Edge probability for bipartite-total.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout if absent.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct Row {
    id: String,
    n: usize,
    m: usize,
    k: u64,
    valid: bool,
    class_sizes: String,
    wall_ms: f64,
}

enum Instance {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Tree(usize, u64),
    Bipartite(usize, usize, u64),
}

impl Instance {
    fn id(&self) -> String {
        match self {
            Instance::Complete(n) => format!("K{n}"),
            Instance::CompleteBipartite(m, n) => format!("K{m},{n}"),
            Instance::Tree(n, s) => format!("tree-{n}-{s}"),
            Instance::Bipartite(m, n, s) => format!("bip-{m}x{n}-{s}"),
        }
    }

    fn solve(&self, p: f64) -> Result<(Graph, Colouring), eqnsd::Error> {
        Ok(match *self {
            Instance::Complete(n) => (generate::complete(n)?, colour_complete_edge(n)?.into()),
            Instance::CompleteBipartite(m, n) => (
                generate::complete_bipartite(m, n)?.0,
                colour_complete_bipartite_edge(m, n)?.into(),
            ),
            Instance::Tree(n, s) => {
                let g = generate::random_tree(n, s)?;
                let c = colour_forest_edge(&g)?;
                (g, c.into())
            }
            Instance::Bipartite(m, n, s) => {
                let (g, _) = generate::random_bipartite(m, n, p, s)?;
                let c = colour_bipartite_total(&g)?;
                (g, c.into())
            }
        })
    }
}

fn instances(a: &Args) -> Result<Vec<Instance>, Fail> {
    if a.from > a.to {
        return Err(Fail::new(2, "--from exceeds --to"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    Ok(match a.family {
        Family::Complete => (a.from..=a.to).map(Instance::Complete).collect(),
        Family::CompleteBipartite => (a.from.max(1)..=a.to)
            .flat_map(|n| (1..=n).map(move |m| (m, n)))
            .filter(|&p| p != (1, 1))
            .map(|(m, n)| Instance::CompleteBipartite(m, n))
            .collect(),
        Family::Trees => {
            if a.max_n < 3 {
                return Err(Fail::new(2, "--max-n must be at least 3 for trees"));
            }
            (0..a.count)
                .map(|_| Instance::Tree(rng.random_range(3..=a.max_n), rng.random()))
                .collect()
        }
        Family::BipartiteTotal => {
            if a.max_n < 1 {
                return Err(Fail::new(2, "--max-n must be at least 1"));
            }
            (0..a.count)
                .map(|_| {
                    Instance::Bipartite(
                        rng.random_range(1..=a.max_n),
                        rng.random_range(1..=a.max_n),
                        rng.random(),
                    )
                })
                .collect()
        }
    })
}

fn run_one(inst: &Instance, p: f64) -> Result<Row, Fail> {
    let start = Instant::now();
    let (g, c) = inst.solve(p)?;
    let r = verify(&g, &c)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let sizes = match r.class_sizes.dense() {
        Some(d) => d.iter().map(usize::to_string).collect::<Vec<_>>().join(";"),
        None => format!("{:?}", r.class_sizes.used),
    };
    Ok(Row {
        id: inst.id(),
        n: g.order(),
        m: g.size(),
        k: c.k(),
        valid: r.valid,
        class_sizes: sizes,
        wall_ms,
    })
}

pub(crate) fn run(a: Args) -> CliResult {
    if !(0.0..=1.0).contains(&a.p) {
        return Err(Fail::new(2, format!("--p {} is outside [0, 1]", a.p)));
    }
    let list = instances(&a)?;
    let rows: Vec<Result<Row, Fail>> = list.par_iter().map(|i| run_one(i, a.p)).collect();

    let sink: Box<dyn Write> = match &a.csv {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .map_err(|e| Fail::new(2, format!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let mut bad = 0;
    for (inst, row) in list.iter().zip(rows) {
        match row {
            Ok(row) => {
                bad += usize::from(!row.valid);
                w.serialize(&row).map_err(|e| Fail::new(2, e.to_string()))?;
            }
            Err(f) => {
                bad += 1;
                eprintln!("{}: {f}", inst.id());
            }
        }
    }
    w.flush().map_err(|e| Fail::new(2, e.to_string()))?;
    eprintln!("{} instances, {bad} failed", list.len());
    Ok(if bad == 0 { 0 } else { 4 })
}
