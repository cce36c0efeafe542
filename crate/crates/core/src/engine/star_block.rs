//! Graphs whose block graph is a star centered at a cyclic block `Bc`.
//!
//! An acceptable cycle is a hamiltonian cycle `C` of `Bc`² together with an
//! edge `v w` of `C ∩ E(Bc)` for every cut vertex `v` in `Bc`, all of these
//! edges distinct. Each branch hanging at `v` is then glued in by giving up
//! the edge `v w`, so the final cycle keeps every other edge of `C`.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::compose::{Piece, Pick, ANY};
use super::search::{for_each_ham_cycle, CycleConstraint, SearchLimits};
use super::thomassen::far_anchor;
use super::Ctx;
use crate::blocks::{decompose, BlNode, BlockDecomposition};
use crate::cycle::{HamCycle, Provenance};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptableCycle {
    /// Index of the center block in the decomposition of the whole graph.
    pub block: usize,
    /// Hamiltonian cycle of the square of the center block.
    pub cycle: HamCycle,
    /// The designated edge `v w` for each cut vertex `v` of the center.
    pub designated: BTreeMap<Vertex, Vertex>,
}

/// Accepts a cyclic block `bc` such that every other block-graph node has
/// degree at most two. This covers a star centered at `bc`, a single block,
/// and a path with `bc` at one end.
fn check_center(bd: &BlockDecomposition, bc: usize) -> Result<()> {
    if bc >= bd.block_count() {
        return Err(Error::WrongShape(format!("no block with index {bc}")));
    }
    if !bd.is_cyclic(bc) {
        return Err(Error::WrongShape("center block is a single edge".into()));
    }
    let other = bd
        .bl_nodes()
        .into_iter()
        .find(|&n| n != BlNode::Block(bc) && bd.bl_degree(n) > 2);
    if let Some(n) = other {
        return Err(Error::WrongShape(format!(
            "block graph node {n:?} other than the center has degree above two"
        )));
    }
    Ok(())
}

/// Assigns each vertex in `cuts` a distinct cycle edge of G at it, by
/// augmenting paths.
fn assign_edges(c: &HamCycle, cuts: &[Vertex]) -> Option<BTreeMap<Vertex, Vertex>> {
    let options: Vec<Vec<(Vertex, Vertex)>> = cuts
        .iter()
        .map(|&v| {
            let (p, s) = c.neighbors(v).unwrap();
            [p, s]
                .into_iter()
                .filter(|&w| c.edge_provenance(v, w) == Some(Provenance::InG))
                .map(|w| (v.min(w), v.max(w)))
                .collect()
        })
        .collect();
    let mut owner: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    fn augment(
        i: usize,
        options: &[Vec<(Vertex, Vertex)>],
        owner: &mut BTreeMap<(Vertex, Vertex), usize>,
        seen: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        for &e in &options[i] {
            if seen.contains(&e) {
                continue;
            }
            seen.push(e);
            let free = match owner.get(&e) {
                None => true,
                Some(&j) => augment(j, options, owner, seen),
            };
            if free {
                owner.insert(e, i);
                return true;
            }
        }
        false
    }
    for i in 0..cuts.len() {
        if !augment(i, &options, &mut owner, &mut Vec::new()) {
            return None;
        }
    }
    Some(
        owner
            .into_iter()
            .map(|((u, w), i)| {
                let v = cuts[i];
                (v, if u == v { w } else { u })
            })
            .collect(),
    )
}

/// The first acceptable cycle of the center block `bc` in canonical search
/// order, or `None` when the block has none.
pub fn acceptable_cycle(g: &Graph, bc: usize, limits: &SearchLimits) -> Result<Option<AcceptableCycle>> {
    let bd = decompose(g)?;
    check_center(&bd, bc)?;
    let b = g.induced(bd.block(bc))?;
    limits.check_cap(&b)?;
    let cuts: Vec<Vertex> = bd.block(bc).iter().copied().filter(|&v| bd.is_cut(v)).collect();
    let mut found = None;
    for_each_ham_cycle(&b, &CycleConstraint::free(), limits.budget, |c| {
        match assign_edges(&c, &cuts) {
            Some(designated) => {
                found = Some(AcceptableCycle {
                    block: bc,
                    cycle: c,
                    designated,
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    })?;
    Ok(found)
}

/// A hamiltonian cycle of `g`² that contains every edge of the acceptable
/// cycle except the designated ones.
pub fn star_block_cycle(g: &Graph, ac: &AcceptableCycle, limits: &SearchLimits) -> Result<HamCycle> {
    let bd = decompose(g)?;
    check_center(&bd, ac.block)?;
    let b = g.induced(bd.block(ac.block))?;
    let cycle = HamCycle::try_new(&b, ac.cycle.order())
        .map_err(|e| Error::WitnessMismatch(format!("not a cycle of the center block: {e}")))?;
    let cuts: Vec<Vertex> = bd.block(ac.block).iter().copied().filter(|&v| bd.is_cut(v)).collect();
    if ac.designated.keys().copied().collect::<Vec<_>>() != cuts {
        return Err(Error::WitnessMismatch(
            "designated edges must cover exactly the cut vertices of the center".into(),
        ));
    }
    let mut used = std::collections::BTreeSet::new();
    for (&v, &w) in &ac.designated {
        if cycle.edge_provenance(v, w) != Some(Provenance::InG) || !used.insert((v.min(w), v.max(w))) {
            return Err(Error::WitnessMismatch(format!(
                "designated edge {v} {w} is not a distinct cycle edge of the block"
            )));
        }
    }

    let mut ctx = Ctx::new(limits, g.max_vertex().unwrap() + 1);
    let mut acc = Piece { g: b, c: cycle };
    for (&v, &w) in &ac.designated {
        let arm = bd.blocks_at(v).iter().copied().find(|&x| x != ac.block).unwrap();
        let h = g.induced(&bd.hanging_vertices(v, arm))?;
        if h.vertex_count() == 2 {
            let leaf = h.vertices().find(|&u| u != v).unwrap();
            acc = ctx.glue_pendant(&acc, v, leaf, Pick::Exactly(w))?;
            continue;
        }
        let hd = decompose(&h)?;
        let hc = if hd.block_count() == 1 {
            ctx.fleischner(&h, v, v)?
        } else {
            let far = far_anchor(&hd, v).expect("branch has a far endblock");
            ctx.thomassen(&h, v, far)?
        };
        acc = ctx.glue_two(&acc, &hc, v, Pick::Exactly(w), ANY)?;
    }
    HamCycle::try_new(g, acc.c.order())
}
