//! Instance generators for the three hardness reductions, the matching
//! witness extractors, and brute-force solvers for the source problems.

mod clique;
mod formula;
mod hyper;
mod slice;

pub use clique::{
    brute_force_multicolored_clique, clique_gadget, extract_clique, CliqueEdgeKind,
    CliqueGadgetLayout, PartEdge, PartitionedGraph,
};
pub use formula::{brute_force_x13, X13Formula};
pub use hyper::{extract_assignment, hypergraph_gadget, HyperGadgetLayout, VariableBlock};
pub use slice::{
    extract_slice_assignment, slice_gadget, SliceEdgeKind, SliceGadget, SliceGadgetLayout,
};
