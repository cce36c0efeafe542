//! Graphs whose block graph has a single node of degree three or more, a cut
//! vertex `a`. Every component hanging off `a` has a path as block graph, so
//! each gets its own cycle and they are glued at `a` in a fixed order:
//! cyclic branches, then pendant edges, then acyclic non-end branches.

use super::compose::{Piece, ANY};
use super::search::SearchLimits;
use super::thomassen::far_anchor;
use super::Ctx;
use crate::blocks::{decompose, BlNode, BlockDecomposition, BlockKind, EndStatus};
use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A hamiltonian cycle of `g`² with exactly `2 - t` cycle edges of G at `a`,
/// where `t` is the number of acyclic non-end blocks containing `a`.
pub fn branch_point_cycle(g: &Graph, a: Vertex, limits: &SearchLimits) -> Result<HamCycle> {
    let first = g.max_vertex().map_or(0, |m| m + 1);
    let mut ctx = Ctx::new(limits, first);
    Ok(ctx.branch_point(g, a)?.c)
}

/// Checks that `a` is the only block-graph node of degree three or more.
fn check_shape(bd: &BlockDecomposition, a: Vertex) -> Result<()> {
    let high: Vec<BlNode> = bd
        .bl_nodes()
        .into_iter()
        .filter(|&n| bd.bl_degree(n) >= 3)
        .collect();
    if high != [BlNode::Cut(a)] {
        return Err(Error::PreconditionViolated(format!(
            "{a} is not the only block-graph node of degree at least three"
        )));
    }
    let t = bd.t_count(a);
    if t >= 3 {
        return Err(Error::PreconditionViolated(format!(
            "{a} lies in {t} acyclic non-end blocks"
        )));
    }
    Ok(())
}

impl Ctx<'_> {
    /// Cycle of the branch through block `b` at `a` with `a` as one anchor.
    fn branch_cycle(&mut self, g: &Graph, bd: &BlockDecomposition, a: Vertex, b: usize) -> Result<Piece> {
        let h = g.induced(&bd.hanging_vertices(a, b))?;
        let hd = decompose(&h)?;
        if hd.block_count() == 1 {
            return self.fleischner(&h, a, a);
        }
        let far = far_anchor(&hd, a).expect("branch has a far endblock");
        self.thomassen(&h, a, far)
    }

    pub(crate) fn branch_point(&mut self, g: &Graph, a: Vertex) -> Result<Piece> {
        if !g.contains(a) {
            return Err(Error::VertexNotFound(a));
        }
        let bd = decompose(g)?;
        check_shape(&bd, a)?;

        let (mut cyclic, mut pendants, mut bridges) = (Vec::new(), Vec::new(), Vec::new());
        for &b in bd.blocks_at(a) {
            let info = bd.info(b);
            match (info.kind, info.end_status) {
                (BlockKind::Cyclic, _) => cyclic.push(b),
                (BlockKind::Acyclic, EndStatus::EndBlock) => {
                    let leaf = bd.block(b).iter().copied().find(|&v| v != a).unwrap();
                    pendants.push(leaf);
                }
                (BlockKind::Acyclic, EndStatus::NonEndBlock) => bridges.push(b),
            }
        }

        let mut acc = if let Some((&first, rest)) = cyclic.split_first() {
            let mut acc = self.branch_cycle(g, &bd, a, first)?;
            for &b in rest {
                let h = self.branch_cycle(g, &bd, a, b)?;
                acc = self.glue_two(&acc, &h, a, ANY, ANY)?;
            }
            for &u in &pendants {
                acc = self.glue_pendant(&acc, a, u, ANY)?;
            }
            acc
        } else if pendants.len() >= 2 {
            let mut seq = vec![a];
            seq.extend(&pendants);
            let star = Graph::from_edges(pendants.iter().map(|&u| (a, u)))?;
            Piece::new(star, &seq)
        } else {
            // One pendant edge and two acyclic non-end blocks: start from the
            // first bridge branch and hang the pendant on it.
            let h = self.branch_cycle(g, &bd, a, bridges.remove(0))?;
            self.glue_pendant(&h, a, pendants[0], ANY)?
        };
        for b in bridges {
            let h = self.branch_cycle(g, &bd, a, b)?;
            acc = self.glue_two(&acc, &h, a, ANY, ANY)?;
        }
        Ok(Piece::new(g.clone(), acc.c.order()))
    }
}
