//! Feynman graphs with rotation systems, their polynomials and the τ map.

pub mod certify;
pub mod connectivity;
pub mod corpus;
pub mod embedding;
mod error;
pub mod graph;
pub mod loops;
pub mod poly;
pub mod surgery;
pub mod tau;
pub mod trees;

pub use certify::{certify_injectivity, CertificateReport};
pub use connectivity::{connectivity_report, edge_connected, vertex_splittings, ConnectivityReport};
pub use embedding::{
    faces, is_closed_2cell, search_embeddings, trace_faces, ClosedCellReport, EmbeddingSearch, Face, FaceSet,
};
pub use error::GraphError;
pub use graph::{
    dart, dart_edge, dart_end, edge_var_name, opposite, Dart, Edge, End, ExternalLeg, FeynmanGraph,
    RotationSystem,
};
pub use loops::{fundamental_cycles, loop_basis, BasisSource, LoopBasis};
pub use poly::{det_m_gamma, m_gamma, p_gamma, psi_from_det, psi_from_trees, MomentumData};
pub use surgery::{add_looping_edge, remove_looping_edges, subdivide_edge};
pub use tau::{
    minor_injectivity, sigma_gamma, sigma_lg, tau_matrix, ComponentLabel, DivisorComponent, DivisorSelection,
    MinorVerdict, Pullback, SigmaGamma, TauMap,
};
pub use trees::{cut_sets, cut_sides, matrix_tree_count, spanning_trees};
