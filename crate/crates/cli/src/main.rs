//! `nsd`: build, check and search for equitable nsd colourings.
//!
//! Exit codes: 0 success, 1 invalid colouring, 2 usage or parse error,
//! 3 unsupported instance, 4 internal failure.

mod experiment;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eqnsd::colouring::{powers_of_two_colouring, VerificationReport};
use eqnsd::format::{from_json, to_dot, to_json, to_matrix};
use eqnsd::{
    colour_bipartite_total, colour_complete_bipartite_edge, colour_complete_edge,
    colour_complete_total, colour_forest_edge_traced, exact_value, generate, parse_graph,
    verify_edge, verify_total, Colouring, Error, Graph, Mode, SearchConfig,
};

#[derive(Parser)]
#[command(
    name = "nsd",
    version,
    about = "Equitable neighbour-sum-distinguishing colourings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a colouring with one of the constructions.
    Colour(ColourArgs),
    /// Check a colouring against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Find the least k by exhaustive search.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "edge")]
        mode: ModeArg,
        #[arg(long, default_value_t = 4)]
        kmax: u64,
        /// Search nodes allowed per value of k.
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Run a construction over a family of instances and write a CSV table.
    Experiment(experiment::Args),
    /// Write a Graphviz file with colours on edges and sums on vertices.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Class {
    Complete,
    CompleteBipartite,
    Forest,
    BipartiteTotal,
    CompleteTotal,
    Powers2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Edge,
    Total,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Edge => Mode::Edge,
            ModeArg::Total => Mode::Total,
        }
    }
}

#[derive(clap::Args)]
struct ColourArgs {
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Edge list or graph6 file (forest, bipartite-total, powers2).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Where to write the JSON colouring; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the final verification.
    #[arg(long)]
    no_verify: bool,
    /// Print the colour matrix (edge colourings only).
    #[arg(long)]
    matrix: bool,
    /// Write the forest reduction sequence here, one step per line.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// If the forest reduction fails internally, search for a 2-colouring instead.
    #[arg(long)]
    exact_fallback: bool,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub(crate) struct Fail {
    pub(crate) code: u8,
    pub(crate) msg: String,
}

impl Fail {
    pub(crate) fn new(code: u8, msg: impl Into<String>) -> Self {
        Fail {
            code,
            msg: msg.into(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Fail::new(2, msg)
    }
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidColouring(_) => 1,
            Error::Parse { .. }
            | Error::Graph6(_)
            | Error::Format(_)
            | Error::DuplicateEdge(_)
            | Error::SelfLoop(_)
            | Error::VertexOutOfRange { .. }
            | Error::InvalidProbability(_)
            | Error::MissingEdge(_)
            | Error::UnknownEdge(_)
            | Error::MissingVertex(_) => 2,
            Error::InvalidSize(_)
            | Error::NotBipartite(_)
            | Error::NotRegular
            | Error::Disconnected
            | Error::Cyclic
            | Error::IsolatedEdge(_)
            | Error::TooManyEdges(_)
            | Error::Precondition(_) => 3,
            Error::Internal(_) => 4,
        };
        Fail::new(code, e.to_string())
    }
}

type CliResult = Result<u8, Fail>;

pub(crate) fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    Ok(parse_graph(&read(path)?)?)
}

fn read_colouring(path: &Path) -> Result<Colouring, Fail> {
    Ok(from_json(&read(path)?)?)
}

pub(crate) fn verify(g: &Graph, c: &Colouring) -> Result<VerificationReport, Error> {
    match c {
        Colouring::Edge(c) => verify_edge(g, c),
        Colouring::Total(c) => verify_total(g, c),
    }
}

fn summary(r: &VerificationReport) -> String {
    let mut s = format!(
        "valid: {}\nequitable: {}\ncolours in range: {}\nclass sizes: {:?}",
        r.valid, r.equitable, r.in_range, r.class_sizes.used
    );
    for e in &r.nsd_violations {
        s.push_str(&format!(
            "\nconflict on edge {e}: both ends sum to {}",
            r.sums[e.lo()]
        ));
    }
    for note in &r.notes {
        s.push_str(&format!("\nnote: {note}"));
    }
    s
}

fn need(v: Option<usize>, flag: &str, class: Class) -> Result<usize, Fail> {
    v.ok_or_else(|| Fail::usage(format!("--{flag} is required for --class {class:?}")))
}

fn run_colour(a: ColourArgs) -> CliResult {
    let graph_arg = || {
        a.graph
            .as_deref()
            .ok_or_else(|| Fail::usage(format!("--graph is required for --class {:?}", a.class)))
    };
    let mut trace = None;
    let (g, c): (Graph, Colouring) = match a.class {
        Class::Complete => {
            let n = need(a.n, "n", a.class)?;
            (generate::complete(n)?, colour_complete_edge(n)?.into())
        }
        Class::CompleteBipartite => {
            let (m, n) = (need(a.m, "m", a.class)?, need(a.n, "n", a.class)?);
            let (g, _) = generate::complete_bipartite(m.min(n), m.max(n))?;
            (g, colour_complete_bipartite_edge(m, n)?.into())
        }
        Class::CompleteTotal => {
            let n = need(a.n, "n", a.class)?;
            (generate::complete(n)?, colour_complete_total(n)?.into())
        }
        Class::Forest => {
            let g = read_graph(graph_arg()?)?;
            match colour_forest_edge_traced(&g) {
                Ok((c, steps)) => {
                    trace = Some(steps);
                    (g, c.into())
                }
                Err(Error::Internal(why)) if a.exact_fallback => {
                    eprintln!("reduction failed ({why}); searching instead");
                    let out = exact_value(&g, &SearchConfig::new(Mode::Edge, 2))?;
                    let c = out
                        .witness
                        .ok_or_else(|| Fail::new(4, "search found no colouring with k <= 2"))?;
                    trace = Some(vec![]);
                    (g, c)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Class::BipartiteTotal => {
            let g = read_graph(graph_arg()?)?;
            let c = colour_bipartite_total(&g)?;
            (g, c.into())
        }
        Class::Powers2 => {
            let g = read_graph(graph_arg()?)?;
            let c = powers_of_two_colouring(&g)?;
            (g, c.into())
        }
    };

    if let (Some(path), Some(steps)) = (&a.trace, &trace) {
        let lines: String = steps
            .iter()
            .map(|s| {
                format!(
                    "{:?} site={:?} removed={}\n",
                    s.rule,
                    s.site,
                    s.removed_edges.len()
                )
            })
            .collect();
        write(path, &lines)?;
    } else if a.trace.is_some() {
        return Err(Fail::usage("--trace only applies to --class forest"));
    }

    let json = to_json(&c);
    match &a.out {
        Some(path) => write(path, &format!("{json}\n"))?,
        None => println!("{json}"),
    }
    eprintln!("k = {}", c.k());
    if a.matrix {
        match &c {
            Colouring::Edge(e) => eprint!("{}", to_matrix(&g, e)?),
            Colouring::Total(_) => {
                return Err(Fail::usage("--matrix only applies to edge colourings"))
            }
        }
    }
    if a.no_verify {
        eprintln!("verification skipped");
        return Ok(0);
    }
    let r = verify(&g, &c)?;
    eprintln!("{}", summary(&r));
    if !r.valid {
        return Err(Fail::new(4, "construction produced an invalid colouring"));
    }
    Ok(0)
}

fn run_verify(graph: &Path, colouring: &Path) -> CliResult {
    let g = read_graph(graph)?;
    let c = read_colouring(colouring)?;
    let r = verify(&g, &c)?;
    println!("mode: {:?}\nk: {}\n{}", c.mode(), c.k(), summary(&r));
    Ok(if r.valid { 0 } else { 1 })
}

fn run_exact(graph: &Path, mode: ModeArg, kmax: u64, node_limit: Option<u64>) -> CliResult {
    let g = read_graph(graph)?;
    let mut cfg = SearchConfig::new(mode.into(), kmax);
    if node_limit.is_some() {
        cfg.node_limit = node_limit;
    }
    let out = exact_value(&g, &cfg)?;
    println!("{}", out.to_json_value());
    Ok(0)
}

fn run_export_dot(graph: &Path, colouring: &Path, out: &Path) -> CliResult {
    let g = read_graph(graph)?;
    let c = read_colouring(colouring)?;
    write(out, &to_dot(&g, &c)?)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Colour(a) => run_colour(a),
        Command::Verify { graph, colouring } => run_verify(&graph, &colouring),
        Command::Exact {
            graph,
            mode,
            kmax,
            node_limit,
        } => run_exact(&graph, mode, kmax, node_limit),
        Command::Experiment(a) => experiment::run(a),
        Command::ExportDot {
            graph,
            colouring,
            out,
        } => run_export_dot(&graph, &colouring, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
