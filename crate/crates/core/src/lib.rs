//! Hamiltonian cycles in squares of graphs.
//!
//! The crate decides whether G² is hamiltonian for connected graphs whose
//! block graph has its branch points at cut vertices, pairwise at least four
//! apart, and builds an explicit cycle by gluing cycles of smaller pieces
//! over shared cut vertices. Every claim can be re-checked by [`certify`],
//! which relies only on graph primitives and the exact search kernel.

pub mod blocks;
pub mod certify;
pub mod cycle;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod explore;
pub mod generate;
pub mod graph;
pub mod io;

pub use blocks::{
    branches, check_main_preconditions, decompose, is_subdivided_star, t_count, BlNode, BlShape,
    BlockDecomposition, BlockInfo, BlockKind, ClassCheck, ClassViolation, EndStatus,
};
pub use cycle::{HamCycle, Provenance};
pub use engine::search::{
    find_ham_cycle_constrained, CycleConstraint, Requirement, SearchLimits, Strategy,
};
pub use error::{Error, Result};
pub use graph::{connect, is_isomorphic_small, Graph, Vertex, DEFAULT_CAP};
pub use certify::{
    check_sk13_claim, verify_decision, verify_edge_conditions, verify_ham_cycle_in_square,
    ClaimReport, VerificationReport, Violation, ViolationKind,
};
pub use engine::{
    acceptable_cycle, branch_point_cycle, classify_vertex_type, compose_i, compose_ii, compose_iii,
    decide_and_construct, fleischner_cycle, schaar_cycle, star_block_cycle, thomassen_path_cycle,
    AcceptableCycle, Certificate, Decision, Mode, TraceStep, VertexType, Witness, WitnessKind,
};
pub use io::{CertificateDocument, EdgeListDocument};
