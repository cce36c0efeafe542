//! Cycles of squares of 2-connected graphs found by constrained search.

use super::compose::Piece;
use super::search::{find_ham_cycle_constrained, CycleConstraint, Requirement, SearchLimits};
use super::{Ctx, TraceStep};
use crate::blocks::decompose;
use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub(crate) fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && decompose(g).is_ok_and(|bd| bd.block_count() == 1)
}

/// The cycle itself when `g` is a cycle, any order when it is complete.
fn obvious_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    if g.vertices().all(|v| g.degree(v) == n - 1) {
        return Some(g.vertices().collect());
    }
    if g.vertices().all(|v| g.degree(v) == 2) {
        let start = g.min_vertex()?;
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = g.neighbors(start).next()?;
        while cur != start {
            seq.push(cur);
            let next = g.neighbors(cur).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        return Some(seq);
    }
    None
}

/// A hamiltonian cycle of `b`² whose two edges at `y` are edges of `b` and
/// which has an edge of `b` at `z`; when `y z` is an edge of `b` the three
/// edges are distinct. Every 2-connected graph has one, so failing to find
/// it is reported as [`Error::Defect`].
pub fn fleischner_cycle(b: &Graph, y: Vertex, z: Vertex, limits: &SearchLimits) -> Result<HamCycle> {
    let mut ctx = Ctx::new(limits, 0);
    Ok(ctx.fleischner(b, y, z)?.c)
}

/// A hamiltonian cycle of `b`² with at least four edges of `b`.
pub fn schaar_cycle(b: &Graph, limits: &SearchLimits) -> Result<HamCycle> {
    if b.vertex_count() < 4 {
        return Err(Error::TooSmall);
    }
    if !is_two_connected(b) {
        return Err(Error::NotTwoConnected);
    }
    if let Some(seq) = obvious_cycle(b) {
        return Ok(HamCycle::new(b, &seq));
    }
    limits.check_cap(b)?;
    let c = CycleConstraint::free().with_min_in_g_edges(4);
    find_ham_cycle_constrained(b, &c, limits.budget)?
        .ok_or_else(|| Error::Defect("no cycle with four graph edges in a 2-connected square".into()))
}

impl Ctx<'_> {
    pub(crate) fn fleischner(&mut self, b: &Graph, y: Vertex, z: Vertex) -> Result<Piece> {
        for v in [y, z] {
            if !b.contains(v) {
                return Err(Error::VertexNotFound(v));
            }
        }
        if !is_two_connected(b) {
            return Err(Error::NotTwoConnected);
        }
        self.record(TraceStep {
            theorem_case: "block".into(),
            merged_vertex: None,
            subgraph_sizes: vec![b.vertex_count()],
        });
        if let Some(seq) = obvious_cycle(b) {
            return Ok(Piece::new(b.clone(), &seq));
        }
        self.limits().check_cap(b)?;
        let budget = self.limits().budget;
        let strict = CycleConstraint::free()
            .with(y, Requirement::BothInG)
            .with(z, Requirement::BothInG);
        if let Some(c) = find_ham_cycle_constrained(b, &strict, budget)? {
            return Ok(Piece { g: b.clone(), c });
        }
        let mut loose = CycleConstraint::free()
            .with(y, Requirement::BothInG)
            .with(z, Requirement::AtLeastOneInG);
        if b.has_edge(y, z) {
            loose = loose.forbid_edge(y, z);
        }
        match find_ham_cycle_constrained(b, &loose, budget)? {
            Some(c) => Ok(Piece { g: b.clone(), c }),
            None => Err(Error::Defect(format!(
                "no cycle with both graph edges at {y} and a graph edge at {z} in a 2-connected square"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::Provenance;

    fn g(edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(edges.iter().copied()).unwrap()
    }

    fn check(b: &Graph, y: Vertex, z: Vertex, c: &HamCycle) {
        assert_eq!(c.in_g_degree(y), 2);
        assert!(c.in_g_degree(z) >= 1);
        if b.has_edge(y, z) && c.edge_provenance(y, z) == Some(Provenance::InG) {
            assert_eq!(c.in_g_degree(z), 2);
        }
    }

    #[test]
    fn triangle_and_four_cycle() {
        let lim = SearchLimits::default();
        let tri = g(&[(0, 1), (1, 2), (0, 2)]);
        let c = fleischner_cycle(&tri, 0, 1, &lim).unwrap();
        assert_eq!(c.in_g_edges(), 3);
        let sq = g(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = fleischner_cycle(&sq, 0, 2, &lim).unwrap();
        assert_eq!(c.order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn theta_graph_all_pairs() {
        // Two vertices joined by three paths of length two and three.
        let theta = g(&[(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 5), (5, 2)]);
        let lim = SearchLimits::default();
        for y in 0..6 {
            for z in 0..6 {
                let c = fleischner_cycle(&theta, y, z, &lim).unwrap();
                check(&theta, y, z, &c);
            }
        }
    }

    #[test]
    fn rejects_non_blocks() {
        let lim = SearchLimits::default();
        let path = g(&[(0, 1), (1, 2)]);
        assert_eq!(fleischner_cycle(&path, 0, 1, &lim), Err(Error::NotTwoConnected));
        assert_eq!(schaar_cycle(&path, &lim), Err(Error::TooSmall));
        let sq = g(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(fleischner_cycle(&sq, 0, 9, &lim), Err(Error::VertexNotFound(9)));
    }

    #[test]
    fn schaar_on_k4_and_k23() {
        let lim = SearchLimits::default();
        let k4 = g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(schaar_cycle(&k4, &lim).unwrap().in_g_edges(), 4);
        let k23 = g(&[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(schaar_cycle(&k23, &lim).unwrap().in_g_edges() >= 4);
    }
}
