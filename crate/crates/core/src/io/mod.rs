//! File formats: edge lists in, JSON certificates in and out, DOT out.

pub mod certificate;
pub mod dot;
pub mod edge_list;

pub use certificate::{CertificateDocument, DecisionKind};
pub use dot::to_dot;
pub use edge_list::{natural_cmp, EdgeListDocument};
