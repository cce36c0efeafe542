//! JSON certificates, with vertices written as edge-list labels.
//!
//! ```json
//! {
//!   "decision": "hamiltonian",
//!   "cycle": ["v1", "v2", "v3"],
//!   "edge_provenance": ["G", "SQ", "G"],
//!   "witness": null,
//!   "trace": [{"theorem_case": "block", "merged_vertex": null, "subgraph_sizes": [3]}],
//!   "preconditions": {"in_class": true, "violations": []}
//! }
//! ```

use serde::{Deserialize, Serialize};

use super::edge_list::EdgeListDocument;
use crate::blocks::{ClassCheck, ClassViolation};
use crate::cycle::{HamCycle, Provenance};
use crate::engine::decide::{Certificate, Decision, Witness};
use crate::engine::TraceStep;
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionKind {
    Hamiltonian,
    NotHamiltonian,
    OutOfClass,
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeTag {
    G,
    #[serde(rename = "SQ")]
    Sq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    AcyclicNonEndBlocks { vertex: String, t: usize },
    TooSmall,
    OracleExhausted,
    /// The construction gave up after this many search expansions.
    Budget { budget: u64 },
    /// The graph was above the search cap.
    SizeCap { vertices: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationDoc {
    BlockBranchPoint {
        block: usize,
        vertices: Vec<String>,
        degree: usize,
    },
    CloseBranchPoints { a: String, b: String, distance: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepDoc {
    pub theorem_case: String,
    pub merged_vertex: Option<String>,
    pub subgraph_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preconditions {
    pub in_class: bool,
    pub violations: Vec<ViolationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub decision: DecisionKind,
    pub cycle: Vec<String>,
    pub edge_provenance: Vec<EdgeTag>,
    pub witness: Option<WitnessDoc>,
    pub trace: Vec<TraceStepDoc>,
    pub preconditions: Preconditions,
}

fn violation_doc(v: &ClassViolation, el: &EdgeListDocument) -> ViolationDoc {
    match v {
        ClassViolation::BlockBranchPoint {
            block,
            vertices,
            degree,
        } => ViolationDoc::BlockBranchPoint {
            block: *block,
            vertices: vertices.iter().map(|&v| el.label(v)).collect(),
            degree: *degree,
        },
        ClassViolation::CloseBranchPoints { a, b, distance } => ViolationDoc::CloseBranchPoints {
            a: el.label(*a),
            b: el.label(*b),
            distance: *distance,
        },
    }
}

fn id(el: &EdgeListDocument, label: &str) -> Result<Vertex> {
    el.id(label).ok_or_else(|| Error::Malformed {
        line: 0,
        msg: format!("certificate names unknown vertex {label:?}"),
    })
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed {
        line: 0,
        msg: msg.into(),
    }
}

impl CertificateDocument {
    pub fn from_certificate(cert: &Certificate, el: &EdgeListDocument) -> Self {
        let mut cycle = Vec::new();
        let mut edge_provenance = Vec::new();
        let mut witness = None;
        let decision = match &cert.decision {
            Decision::Hamiltonian(c) => {
                cycle = c.order().iter().map(|&v| el.label(v)).collect();
                edge_provenance = c
                    .provenance()
                    .iter()
                    .map(|p| match p {
                        Provenance::InG => EdgeTag::G,
                        Provenance::InSquareOnly => EdgeTag::Sq,
                    })
                    .collect();
                DecisionKind::Hamiltonian
            }
            Decision::NotHamiltonian(w) => {
                witness = Some(match *w {
                    Witness::AcyclicNonEndBlocks { vertex, t } => WitnessDoc::AcyclicNonEndBlocks {
                        vertex: el.label(vertex),
                        t,
                    },
                    Witness::TooSmall => WitnessDoc::TooSmall,
                    Witness::OracleExhausted => WitnessDoc::OracleExhausted,
                });
                DecisionKind::NotHamiltonian
            }
            Decision::OutOfClass(_) => DecisionKind::OutOfClass,
        };
        CertificateDocument {
            decision,
            cycle,
            edge_provenance,
            witness,
            trace: cert
                .trace
                .iter()
                .map(|s| TraceStepDoc {
                    theorem_case: s.theorem_case.clone(),
                    merged_vertex: s.merged_vertex.map(|v| el.label(v)),
                    subgraph_sizes: s.subgraph_sizes.clone(),
                })
                .collect(),
            preconditions: Preconditions {
                in_class: cert.class.is_in_class(),
                violations: match &cert.class {
                    ClassCheck::InClass => Vec::new(),
                    ClassCheck::OutOfClass(v) => vec![violation_doc(v, el)],
                },
            },
        }
    }

    /// Document for a run stopped by the search budget or the vertex cap;
    /// `None` for any other error.
    pub fn budget_exceeded(err: &Error, class: &ClassCheck, el: &EdgeListDocument) -> Option<Self> {
        let witness = match *err {
            Error::BudgetExceeded(budget) => WitnessDoc::Budget { budget },
            Error::SizeCapExceeded { n, cap } => WitnessDoc::SizeCap { vertices: n, cap },
            _ => return None,
        };
        Some(CertificateDocument {
            decision: DecisionKind::BudgetExceeded,
            cycle: Vec::new(),
            edge_provenance: Vec::new(),
            witness: Some(witness),
            trace: Vec::new(),
            preconditions: Preconditions {
                in_class: class.is_in_class(),
                violations: match class {
                    ClassCheck::InClass => Vec::new(),
                    ClassCheck::OutOfClass(v) => vec![violation_doc(v, el)],
                },
            },
        })
    }

    /// Converts back to ids. A `budget_exceeded` document carries no
    /// decision and yields the error that stopped the run.
    pub fn to_certificate(&self, el: &EdgeListDocument) -> Result<Certificate> {
        let class = match (self.preconditions.in_class, self.preconditions.violations.as_slice()) {
            (true, []) => ClassCheck::InClass,
            (false, [v]) => ClassCheck::OutOfClass(match v {
                ViolationDoc::BlockBranchPoint {
                    block,
                    vertices,
                    degree,
                } => ClassViolation::BlockBranchPoint {
                    block: *block,
                    vertices: vertices.iter().map(|l| id(el, l)).collect::<Result<_>>()?,
                    degree: *degree,
                },
                ViolationDoc::CloseBranchPoints { a, b, distance } => ClassViolation::CloseBranchPoints {
                    a: id(el, a)?,
                    b: id(el, b)?,
                    distance: *distance,
                },
            }),
            _ => return Err(malformed("preconditions need in_class with no violations, or exactly one")),
        };
        let decision = match self.decision {
            DecisionKind::Hamiltonian => {
                if self.cycle.len() != self.edge_provenance.len() {
                    return Err(malformed("cycle and edge_provenance differ in length"));
                }
                let order = self.cycle.iter().map(|l| id(el, l)).collect::<Result<Vec<_>>>()?;
                let prov = self
                    .edge_provenance
                    .iter()
                    .map(|t| match t {
                        EdgeTag::G => Provenance::InG,
                        EdgeTag::Sq => Provenance::InSquareOnly,
                    })
                    .collect();
                Decision::Hamiltonian(HamCycle::from_parts(order, prov))
            }
            DecisionKind::NotHamiltonian => Decision::NotHamiltonian(match &self.witness {
                Some(WitnessDoc::AcyclicNonEndBlocks { vertex, t }) => Witness::AcyclicNonEndBlocks {
                    vertex: id(el, vertex)?,
                    t: *t,
                },
                Some(WitnessDoc::TooSmall) => Witness::TooSmall,
                Some(WitnessDoc::OracleExhausted) => Witness::OracleExhausted,
                _ => return Err(malformed("not_hamiltonian needs a structural witness")),
            }),
            DecisionKind::OutOfClass => match &class {
                ClassCheck::OutOfClass(v) => Decision::OutOfClass(v.clone()),
                ClassCheck::InClass => return Err(malformed("out_of_class without a violation")),
            },
            DecisionKind::BudgetExceeded => {
                return Err(match self.witness {
                    Some(WitnessDoc::Budget { budget }) => Error::BudgetExceeded(budget),
                    Some(WitnessDoc::SizeCap { vertices, cap }) => Error::SizeCapExceeded { n: vertices, cap },
                    _ => malformed("budget_exceeded needs a budget witness"),
                })
            }
        };
        let trace = self
            .trace
            .iter()
            .map(|s| {
                Ok(TraceStep {
                    theorem_case: s.theorem_case.clone(),
                    merged_vertex: s.merged_vertex.as_deref().map(|l| id(el, l)).transpose()?,
                    subgraph_sizes: s.subgraph_sizes.clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Certificate { decision, trace, class })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}
