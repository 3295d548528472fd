//! Exact solvers for ordered graphs: retraction via 2-SAT, cores, interval
//! chromatic number, edge-collapsible matchings, and reduction gadgets with
//! brute-force verifiers.
//!
//! Vertices are `0..n`; the vertex order is the index order.

pub mod cli;
pub mod core_solver;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod matchings;
pub mod retraction;
pub mod search;
pub mod twosat;

pub use core_solver::{
    compute_core, decide_core_chi, decide_core_with_k_vertices, find_nonsurjective_endomorphism,
    is_core, solve_slice, solve_sub, Core, CoreVerdict, DoubleTuple, SliceTargets,
};
pub use error::{Error, Result};
pub use graph::{
    find_ordered_homomorphism, image_subgraph, interval_chromatic_number, is_independent_interval,
    is_ordered_homomorphism, IntervalPartition, MonotoneMap, OrderedGraph,
};
pub use hypergraph::{
    decide_hyper_retraction, find_nonsurjective_hyper_endomorphism, is_ordered_hyperhom,
    OrderedHypergraph,
};
pub use matchings::{is_edge_collapsible, mc, mc4, OrderedMatching};
pub use retraction::{
    decide_retraction, decode, decompose, encode, Encoding, SegmentDecomposition,
};
pub use twosat::{Assignment, Lit, TwoSatInstance};
