//! Exact analysis of planar resistor networks.
//!
//! A network is a loopless connected multigraph with a planar embedding
//! (given as a rotation system) and a positive rational resistance on every
//! edge. This crate computes, all in exact rational arithmetic:
//!
//! - the weighted Laplacian, its cofactors and double minors, and from them
//!   the effective resistance over any edge;
//! - the dual electrical network, in which each edge is replaced by its dual
//!   carrying the reciprocal resistance, together with the edge and face
//!   correspondences;
//! - the duality check `r_e/R_e + r_e'/R_e' = 1` for every edge;
//! - a brute-force spanning-tree enumeration used as an independent oracle
//!   for all of the determinant identities.
//!
//! There is no floating-point arithmetic anywhere: results are rational
//! numbers compared for exact equality. All values are immutable after
//! construction and safe to share across threads.

pub mod dual;
pub mod graph;
pub mod kirchhoff;
pub mod matrix;
pub mod netfile;
pub mod oracle;
pub mod rational;

#[cfg(test)]
pub(crate) mod testutil;

pub use dual::{dual, psi_complement, DualCorrespondence, DualError, SpanningTree};
pub use graph::{Dart, DartEnd, Edge, EdgeSpec, EmbeddedMultigraph, FaceSet, GraphError, GraphSpec};
pub use kirchhoff::{
    CollapsedEdge, CollapsedNetwork, DualityRecord, KirchhoffError, LaplacianMatrix,
};
pub use matrix::{Matrix, MatrixError, RationalMatrix};
pub use netfile::{network_from_str, parse_network, EdgeRecord, NetFileError, NetworkFile};
pub use oracle::{
    enumerate_spanning_trees, oracle_report, subgraph_weight, total_graph_weight, CheckStatus,
    OracleCheck, OracleError, OracleReport, SpanningTreeSet, DEFAULT_TREE_CAP,
};
pub use rational::{parse_rational, Rational, RationalParseError};
