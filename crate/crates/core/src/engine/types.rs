//! Vertex types: how many graph edges a hamiltonian cycle of G² can use at a
//! vertex.

use super::search::{find_ham_cycle_constrained, CycleConstraint, Requirement, SearchLimits};
use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Type 1: some cycle uses two graph edges at the vertex. Type 2: at best
/// one. Type 3: none, but some cycle joins two graph neighbors of it. Type 4:
/// none of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexType {
    pub type_index: u8,
    /// A cycle realizing the type; `None` for type 4.
    pub witness: Option<HamCycle>,
}

/// The least type of `x`, found by exhaustive constrained searches.
pub fn classify_vertex_type(g: &Graph, x: Vertex, limits: &SearchLimits) -> Result<VertexType> {
    if !g.contains(x) {
        return Err(Error::VertexNotFound(x));
    }
    limits.check_cap(g)?;
    if find_ham_cycle_constrained(g, &CycleConstraint::free(), limits.budget)?.is_none() {
        return Err(Error::SquareNotHamiltonian);
    }
    let tries = [
        (1, Requirement::BothInG),
        (2, Requirement::ExactlyOneInG),
        (3, Requirement::NeighborEdge),
    ];
    for (type_index, req) in tries {
        let c = CycleConstraint::free().with(x, req);
        if let Some(w) = find_ham_cycle_constrained(g, &c, limits.budget)? {
            return Ok(VertexType {
                type_index,
                witness: Some(w),
            });
        }
    }
    Ok(VertexType {
        type_index: 4,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(edges: &[(Vertex, Vertex)], x: Vertex) -> u8 {
        let g = Graph::from_edges(edges.iter().copied()).unwrap();
        classify_vertex_type(&g, x, &SearchLimits::default())
            .unwrap()
            .type_index
    }

    #[test]
    fn small_cases() {
        assert_eq!(ty(&[(0, 1), (1, 2), (0, 2)], 0), 1);
        assert_eq!(ty(&[(0, 1), (1, 2)], 0), 2);
        assert_eq!(ty(&[(0, 1), (1, 2)], 1), 1);
        // Center of a claw: every cycle of K4 uses two center edges.
        assert_eq!(ty(&[(0, 1), (0, 2), (0, 3)], 0), 1);
    }

    #[test]
    fn errors() {
        let s = Graph::from_edges([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let lim = SearchLimits::default();
        assert_eq!(classify_vertex_type(&s, 0, &lim), Err(Error::SquareNotHamiltonian));
        assert_eq!(classify_vertex_type(&s, 9, &lim), Err(Error::VertexNotFound(9)));
    }
}
