//! Equitable neighbour-sum-distinguishing (nsd) edge and total colourings.
//!
//! A colouring is nsd when adjacent vertices receive different induced sums
//! (the sum of colours on incident edges, plus the vertex's own colour for
//! total colourings), and equitable when any two of its `k` declared colour
//! classes differ in size by at most one.
//!
//! The crate provides explicit constructions for complete graphs, complete
//! bipartite graphs, forests and bipartite graphs (total), a verifier, and an
//! exact backtracking search for the smallest feasible `k` on small graphs.

pub mod bipartite;
pub mod colouring;
pub mod complete;
pub mod error;
pub mod exact;
pub mod forest;
pub mod format;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod parse;
pub mod total;

pub use bipartite::colour_complete_bipartite_edge;
pub use colouring::{
    deviation_check, edge_sums, extend_edge_to_total, powers_of_two_colouring, total_sums,
    verify_edge, verify_total, ClassSizes, Colour, EdgeColouring, Rational, SumProfile,
    TotalColouring, VerificationReport,
};
pub use complete::{colour_complete_edge, GoodColouring};
pub use error::{Error, Result};
pub use exact::{exact_value, exists_equitable_nsd, SearchConfig, SearchOutcome};
pub use forest::{
    colour_forest_edge, colour_forest_edge_traced, extend_reduction, find_reduction, ReductionStep,
    Rule,
};
pub use format::{Colouring, Mode};
pub use graph::{bipartition, components, Bipartition, Edge, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use parse::{parse_edge_list, parse_graph};
pub use total::{colour_bipartite_total, colour_complete_total};
