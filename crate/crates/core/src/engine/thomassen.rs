//! Cycles of squares of graphs whose block graph is a path, with control
//! over the edges at one non-cut vertex of each endblock.

use super::compose::{Piece, Pick};
use super::search::SearchLimits;
use super::{Ctx, TraceStep};
use crate::blocks::{decompose, BlNode, BlShape, BlockDecomposition};
use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A hamiltonian cycle of `g`² where, for `u` in {`u1`, `u2`}, both cycle
/// edges at `u` are edges of G when `u` lies in a cyclic block and exactly
/// one is when it lies in an acyclic block.
///
/// `u1` and `u2` must be non-cut vertices of different endblocks. When `g` is
/// a single block the cycle has both graph edges at `u1` and at least one at
/// `u2`.
pub fn thomassen_path_cycle(
    g: &Graph,
    u1: Vertex,
    u2: Vertex,
    limits: &SearchLimits,
) -> Result<HamCycle> {
    let first = g.max_vertex().map_or(0, |m| m + 1);
    let mut ctx = Ctx::new(limits, first);
    Ok(ctx.thomassen(g, u1, u2)?.c)
}

/// Vertices `0 .. n-1` of a path in the order `p0, p1, p3, p5, .., p4, p2`:
/// each end has exactly one cycle edge in the path.
pub(crate) fn path_square_order(p: &[Vertex]) -> Vec<Vertex> {
    let mut seq = vec![p[0]];
    seq.extend((1..p.len()).step_by(2).map(|i| p[i]));
    seq.extend((2..p.len()).step_by(2).rev().map(|i| p[i]));
    seq
}

/// The smallest non-cut vertex of an endblock not containing `near`.
pub(crate) fn far_anchor(bd: &BlockDecomposition, near: Vertex) -> Option<Vertex> {
    bd.endblocks()
        .into_iter()
        .filter(|&b| !bd.block(b).contains(&near))
        .filter_map(|b| bd.non_cut_vertices(b).next())
        .min()
}

impl Ctx<'_> {
    pub(crate) fn thomassen(&mut self, g: &Graph, u1: Vertex, u2: Vertex) -> Result<Piece> {
        for u in [u1, u2] {
            if !g.contains(u) {
                return Err(Error::VertexNotFound(u));
            }
        }
        let bd = decompose(g)?;
        if bd.shape() != BlShape::Path {
            return Err(Error::BlockGraphNotPath);
        }
        if bd.block_count() == 1 {
            if !bd.is_cyclic(0) {
                return Err(Error::TooSmall);
            }
            return self.fleischner(g, u1, u2);
        }
        let ends = bd.endblocks();
        let find_end = |u: Vertex| {
            ends.iter()
                .copied()
                .find(|&b| bd.block(b).contains(&u) && !bd.is_cut(u))
        };
        let (Some(e1), Some(e2)) = (find_end(u1), find_end(u2)) else {
            return Err(Error::BadAnchors(format!(
                "{u1} and {u2} must be non-cut vertices of endblocks"
            )));
        };
        if e1 == e2 {
            return Err(Error::BadAnchors(format!(
                "{u1} and {u2} lie in the same endblock"
            )));
        }
        let path = bd
            .bl_path(BlNode::Block(e1), BlNode::Block(e2))
            .expect("block graph is connected");
        let mut blocks = Vec::new();
        let mut anchors = vec![u1];
        for node in path {
            match node {
                BlNode::Block(b) => blocks.push(b),
                BlNode::Cut(v) => anchors.push(v),
            }
        }
        anchors.push(u2);
        self.record(TraceStep {
            theorem_case: "block-path".into(),
            merged_vertex: None,
            subgraph_sizes: vec![g.vertex_count(), blocks.len()],
        });

        let k = blocks.len();
        let block_graph = |i: usize| -> Result<Graph> { g.induced(bd.block(blocks[i])) };
        let lead = (0..k).take_while(|&i| !bd.is_cyclic(blocks[i])).count();

        let (mut acc, next) = if lead == k {
            let seq = path_square_order(&anchors);
            (Piece::new(g.clone(), &seq), k)
        } else if lead >= 2 {
            let base = Piece::new(
                g.induced(&anchors[..=lead].iter().copied().collect())?,
                &path_square_order(&anchors[..=lead]),
            );
            // The path end `p_lead` has a single graph edge, to `p_{lead-1}`.
            let b = self.fleischner(&block_graph(lead)?, anchors[lead + 1], anchors[lead])?;
            let glued = self.glue_two(
                &base,
                &b,
                anchors[lead],
                Pick::Exactly(anchors[lead - 1]),
                Pick::Avoid(&[anchors[lead + 1]]),
            )?;
            (glued, lead + 1)
        } else if lead == 1 {
            let b = self.fleischner(&block_graph(1)?, anchors[2], anchors[1])?;
            let glued = self.glue_pendant(&b, anchors[1], u1, Pick::Avoid(&[anchors[2]]))?;
            (glued, 2)
        } else {
            (self.fleischner(&block_graph(0)?, u1, anchors[1])?, 1)
        };

        for i in next..k {
            let x = anchors[i];
            if bd.is_cyclic(blocks[i]) {
                let b = self.fleischner(&block_graph(i)?, anchors[i + 1], x)?;
                acc = self.glue_two(&acc, &b, x, Pick::Avoid(&[u1]), Pick::Avoid(&[anchors[i + 1]]))?;
            } else {
                acc = self.glue_pendant(&acc, x, anchors[i + 1], Pick::Avoid(&[u1]))?;
            }
        }
        debug_assert_eq!(acc.g.vertex_set(), g.vertex_set());
        Ok(Piece::new(g.clone(), acc.c.order()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{block_path, BlockSpec};

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn check(g: &Graph, u1: Vertex, u2: Vertex) -> HamCycle {
        let c = thomassen_path_cycle(g, u1, u2, &lim()).unwrap();
        let c2 = HamCycle::try_new(g, c.order()).unwrap();
        assert_eq!(c, c2);
        let bd = decompose(g).unwrap();
        for u in [u1, u2] {
            let b = bd.blocks_at(u)[0];
            let want = if bd.is_cyclic(b) { 2 } else { 1 };
            assert_eq!(c.in_g_degree(u), want, "anchor {u} in {:?}", c.order());
        }
        c
    }

    #[test]
    fn path_order_alternates() {
        assert_eq!(path_square_order(&[0, 1, 2, 3, 4]), vec![0, 1, 3, 4, 2]);
        let p4 = Graph::from_edges([(0, 1), (1, 2), (2, 3)]).unwrap();
        check(&p4, 0, 3);
        check(&p4, 3, 0);
    }

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        check(&g, 0, 3);
        check(&g, 3, 1);
    }

    #[test]
    fn mixed_block_paths() {
        use BlockSpec::*;
        let specs: Vec<Vec<BlockSpec>> = vec![
            vec![Clique(2), Clique(3)],
            vec![Clique(2), Clique(3), Clique(2)],
            vec![Clique(2), Clique(2), Cycle(4), Clique(2), Clique(4)],
            vec![Clique(4), Clique(2), Clique(2), Cycle(5)],
            vec![Cycle(3), Cycle(3), Cycle(3)],
            vec![Clique(2), Clique(2), Clique(2), Clique(3)],
        ];
        for s in specs {
            let g = block_path(&s).unwrap();
            let bd = decompose(&g).unwrap();
            let u2 = far_anchor(&bd, 0).unwrap();
            check(&g, 0, u2);
            check(&g, u2, 0);
        }
    }

    #[test]
    fn bad_inputs() {
        let claw = Graph::from_edges([(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(thomassen_path_cycle(&claw, 1, 2, &lim()), Err(Error::BlockGraphNotPath));
        let p3 = Graph::from_edges([(0, 1), (1, 2)]).unwrap();
        assert!(matches!(thomassen_path_cycle(&p3, 1, 2, &lim()), Err(Error::BadAnchors(_))));
        assert!(matches!(thomassen_path_cycle(&p3, 2, 2, &lim()), Err(Error::BadAnchors(_))));
    }
}
