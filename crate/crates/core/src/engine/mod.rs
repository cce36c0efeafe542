//! Hamiltonian cycles of squares: the exact search kernel, vertex types, the
//! shared-vertex compositions, and the constructions built from them.

pub mod block_cycle;
pub mod branch_point;
pub mod compose;
pub mod decide;
pub mod search;
pub mod star_block;
pub mod thomassen;
pub mod types;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use search::SearchLimits;

/// One gluing or base step of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub theorem_case: String,
    pub merged_vertex: Option<Vertex>,
    pub subgraph_sizes: Vec<usize>,
}

/// Shared state of one construction: search limits, the trace, and the
/// supply of labels for helper vertices.
pub(crate) struct Ctx<'a> {
    limits: &'a SearchLimits,
    trace: Option<Vec<TraceStep>>,
    next_fresh: Vertex,
}

static DEFAULT_LIMITS: SearchLimits = SearchLimits {
    cap: crate::graph::DEFAULT_CAP,
    budget: search::DEFAULT_BUDGET,
};

impl<'a> Ctx<'a> {
    pub fn new(limits: &'a SearchLimits, first_fresh: Vertex) -> Self {
        Ctx {
            limits,
            trace: Some(Vec::new()),
            next_fresh: first_fresh,
        }
    }

    /// A context that keeps no trace, for the standalone compositions.
    pub fn quiet() -> Ctx<'static> {
        Ctx {
            limits: &DEFAULT_LIMITS,
            trace: None,
            next_fresh: Vertex::MAX,
        }
    }

    pub fn limits(&self) -> &SearchLimits {
        self.limits
    }

    pub fn record(&mut self, step: TraceStep) {
        if let Some(t) = &mut self.trace {
            t.push(step);
        }
    }

    pub fn fresh(&mut self) -> Vertex {
        let v = self.next_fresh;
        self.next_fresh += 1;
        v
    }

    pub fn into_trace(self) -> Vec<TraceStep> {
        self.trace.unwrap_or_default()
    }
}

pub use block_cycle::{fleischner_cycle, schaar_cycle};
pub use branch_point::branch_point_cycle;
pub use compose::{compose_i, compose_ii, compose_iii, neighbor_edge, WitnessKind};
pub use decide::{decide_and_construct, Certificate, Decision, Mode, Witness};
pub use star_block::{acceptable_cycle, star_block_cycle, AcceptableCycle};
pub use thomassen::thomassen_path_cycle;
pub use types::{classify_vertex_type, VertexType};
