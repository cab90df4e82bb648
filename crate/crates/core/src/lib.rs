//! Treewidth and pathwidth of line graphs through tree-embedding congestion.
//!
//! The central identities are `tw(L(G)) + 1 = con(G)` (minimum vertex
//! congestion of a leaf embedding into a sub-cubic tree) and
//! `pw(L(G)) + 1 = pcon(G)` (the same over paths). The crate computes both
//! sides exactly on small graphs, builds the decompositions that witness the
//! upper bounds, and evaluates the closed-form lower and upper bounds.

pub mod appendix;
pub mod bounds;
pub mod congestion;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod suite;
pub mod theorems;
pub mod tree;

/// Exact rational used for average degrees and bound values.
pub type Rational = num::rational::Ratio<i64>;

pub use appendix::{verify_appendix_a, verify_appendix_b, verify_appendix_c, CMode, GridSearchResult, Parity};
pub use bounds::{bounds_report, BoundEntry, BoundKind, BoundsReport, Target};
pub use congestion::{
    cutwidth, golovach_check, min_path_congestion, min_tree_congestion, vertex_congestion, CongestionCertificate,
    CongestionKind, LeafEmbedding, LinearOrdering, Witness,
};
pub use decomposition::{
    BaseNodeAssignment, NormalForm, PathDecomposition, Subject, TreeDecomposition, ValidationReport, Violation,
};
pub use error::{Error, Result};
pub use exact::{exact_pathwidth, exact_treewidth, EliminationCertificate};
pub use families::{generate, sharp_embedding, FamilySpec, SharpEmbedding};
pub use graph::{degree_stats, line_graph, minimal_dense_subgraph, DegreeStats, EdgeId, Graph};
pub use tree::Tree;
