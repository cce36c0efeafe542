//! Gluing hamiltonian cycles of two squares over a shared vertex.
//!
//! The internal `glue_*` functions work on pieces whose vertex sets meet in
//! exactly the merge vertex. The public `compose_*` functions take two
//! disjoint graphs plus a fresh label, rename both copies of the merge vertex
//! to it, and then glue.

use std::collections::BTreeSet;

use super::{Ctx, TraceStep};
use crate::cycle::{HamCycle, Provenance};
use crate::error::{Error, Result};
use crate::graph::{connect, Graph, Vertex};

/// A graph together with a hamiltonian cycle of its square.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub g: Graph,
    pub c: HamCycle,
}

impl Piece {
    pub fn new(g: Graph, seq: &[Vertex]) -> Self {
        let c = HamCycle::new(&g, seq);
        Piece { g, c }
    }
}

/// How to choose the cycle neighbor of the merge vertex whose edge to it is
/// given up.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Pick<'a> {
    /// Any `InG` neighbor, preferring ones outside the list.
    Avoid(&'a [Vertex]),
    /// This neighbor, which must be joined to the merge vertex by an `InG`
    /// cycle edge.
    Exactly(Vertex),
}

pub(crate) const ANY: Pick<'static> = Pick::Avoid(&[]);

/// Cycle neighbors of `x` joined to it by an edge of G.
pub(crate) fn in_g_neighbors(c: &HamCycle, x: Vertex) -> Vec<Vertex> {
    let Some((p, s)) = c.neighbors(x) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if c.edge_provenance(x, p) == Some(Provenance::InG) {
        out.push(p);
    }
    if s != p && c.edge_provenance(x, s) == Some(Provenance::InG) {
        out.push(s);
    }
    out
}

fn pick(c: &HamCycle, x: Vertex, how: Pick<'_>) -> Result<Vertex> {
    let cands = in_g_neighbors(c, x);
    match how {
        Pick::Exactly(v) if cands.contains(&v) => Ok(v),
        Pick::Exactly(v) => Err(Error::WitnessMismatch(format!(
            "{v} is not joined to {x} by a cycle edge of the graph"
        ))),
        Pick::Avoid(avoid) => cands
            .iter()
            .copied()
            .find(|v| !avoid.contains(v))
            .or(cands.first().copied())
            .ok_or(Error::WitnessLacksInGEdge(x)),
    }
}

fn other_neighbor(c: &HamCycle, x: Vertex, not: Vertex) -> Vertex {
    let (p, s) = c.neighbors(x).expect("vertex on cycle");
    if p == not {
        s
    } else {
        p
    }
}

fn check_shared(g1: &Graph, g2: &Graph, x: Vertex) -> Result<()> {
    let shared: BTreeSet<Vertex> = g1.vertex_set().intersection(&g2.vertex_set()).copied().collect();
    if let Some(&v) = shared.iter().find(|&&v| v != x) {
        return Err(Error::NonDisjointVertexSets(v));
    }
    if !shared.contains(&x) {
        return Err(Error::VertexNotFound(x));
    }
    Ok(())
}

/// Lexicographically first cycle edge joining two G-neighbors of `x`.
pub fn neighbor_edge(g: &Graph, c: &HamCycle, x: Vertex) -> Option<(Vertex, Vertex)> {
    let nb = g.neighbor_set(x)?;
    c.edge_set()
        .into_iter()
        .find(|(u, v)| nb.contains(u) && nb.contains(v))
}

fn step(case: &str, x: Vertex, sizes: &[usize]) -> TraceStep {
    TraceStep {
        theorem_case: case.to_string(),
        merged_vertex: Some(x),
        subgraph_sizes: sizes.to_vec(),
    }
}

impl Ctx<'_> {
    /// Joins two cycles that each have an `InG` edge at the shared vertex
    /// `x`. The edges `a1 x` and `b1 x` are replaced by `a1 b1`, so the new
    /// cycle has `(in_g(x, c1) - 1) + (in_g(x, c2) - 1)` edges of G at `x`.
    pub(crate) fn glue_two(
        &mut self,
        p1: &Piece,
        p2: &Piece,
        x: Vertex,
        pick1: Pick<'_>,
        pick2: Pick<'_>,
    ) -> Result<Piece> {
        check_shared(&p1.g, &p2.g, x)?;
        let a1 = pick(&p1.c, x, pick1)?;
        let b1 = pick(&p2.c, x, pick2)?;
        let a2 = other_neighbor(&p1.c, x, a1);
        let mut seq = p1.c.walk_from(x, a2);
        seq.extend(&p2.c.walk_from(x, b1)[1..]);
        let g = p1.g.union(&p2.g);
        let counts = [p1.c.in_g_degree(x), p2.c.in_g_degree(x)];
        let case = match counts {
            [2, 2] => "glue-cycles:both-type1",
            [2, 1] | [1, 2] => "glue-cycles:type1-type2",
            _ => "glue-cycles:both-type2",
        };
        self.record(step(case, x, &[p1.g.vertex_count(), p2.g.vertex_count()]));
        Ok(Piece::new(g, &seq))
    }

    /// Hangs a new pendant vertex `u` on `x`. Uses an `InG` cycle edge `y x`
    /// when there is one (the edge is replaced by `y u`, `u x`), otherwise a
    /// cycle edge between two G-neighbors of `x`.
    pub(crate) fn glue_pendant(
        &mut self,
        p1: &Piece,
        x: Vertex,
        u: Vertex,
        how: Pick<'_>,
    ) -> Result<Piece> {
        if p1.g.contains(u) {
            return Err(Error::FreshLabelCollision(u));
        }
        if !p1.g.contains(x) {
            return Err(Error::VertexNotFound(x));
        }
        let mut g = p1.g.clone();
        g.add_edge(x, u)?;
        let seq = match pick(&p1.c, x, how) {
            Ok(y) => {
                let z = other_neighbor(&p1.c, x, y);
                let mut seq = p1.c.walk_from(x, z);
                seq.push(u);
                self.record(step("pendant:edge-at-merge", x, &[p1.g.vertex_count(), 2]));
                seq
            }
            Err(Error::WitnessLacksInGEdge(_)) => return self.pendant_on_neighbor_edge(p1, x, u),
            Err(e) => return Err(e),
        };
        Ok(Piece::new(g, &seq))
    }

    /// Hangs `u` on `x` by replacing a cycle edge `y w` between G-neighbors
    /// of `x` with `w u`, `u y`.
    pub(crate) fn pendant_on_neighbor_edge(&mut self, p1: &Piece, x: Vertex, u: Vertex) -> Result<Piece> {
        if p1.g.contains(u) {
            return Err(Error::FreshLabelCollision(u));
        }
        let (y, w) = neighbor_edge(&p1.g, &p1.c, x).ok_or_else(|| {
            Error::WitnessMismatch(format!("no cycle edge between two neighbors of {x}"))
        })?;
        let mut g = p1.g.clone();
        g.add_edge(x, u)?;
        let mut seq = p1.c.walk_from(y, other_neighbor(&p1.c, y, w));
        seq.push(u);
        self.record(step("pendant:neighbor-edge", x, &[p1.g.vertex_count(), 2]));
        Ok(Piece::new(g, &seq))
    }

    /// Joins a cycle with an edge `y w` between G-neighbors of `x` to a cycle
    /// with both edges at `x` in G: `w .. y` (the first cycle minus `y w`)
    /// followed by `a .. b` (the second minus `x`).
    pub(crate) fn glue_neighbor_edge(&mut self, p1: &Piece, p2: &Piece, x: Vertex) -> Result<Piece> {
        check_shared(&p1.g, &p2.g, x)?;
        let (y, w) = neighbor_edge(&p1.g, &p1.c, x).ok_or_else(|| {
            Error::WitnessMismatch(format!("no cycle edge between two neighbors of {x}"))
        })?;
        let ab = in_g_neighbors(&p2.c, x);
        if ab.len() != 2 {
            return Err(Error::WitnessMismatch(format!(
                "second cycle does not use two graph edges at {x}"
            )));
        }
        let mut seq = p1.c.walk_from(w, other_neighbor(&p1.c, w, y));
        seq.extend(&p2.c.walk_from(x, ab[0])[1..]);
        let g = p1.g.union(&p2.g);
        self.record(step(
            "glue-cycles:neighbor-edge",
            x,
            &[p1.g.vertex_count(), p2.g.vertex_count()],
        ));
        Ok(Piece::new(g, &seq))
    }
}

/// Which witness at the merge vertex to use when hanging a pendant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// The cycle has an edge of G at the merge vertex.
    Type12,
    /// The cycle has an edge between two G-neighbors of the merge vertex.
    Type3,
}

fn renamed(g: &Graph, c: &HamCycle, from: Vertex, to: Vertex) -> Result<Piece> {
    let f = |v: Vertex| if v == from { to } else { v };
    let g2 = g.relabel(f);
    let seq: Vec<Vertex> = c.order().iter().map(|&v| f(v)).collect();
    let c2 = HamCycle::try_new(&g2, &seq)
        .map_err(|e| Error::WitnessMismatch(format!("input cycle is not valid: {e}")))?;
    Ok(Piece { g: g2, c: c2 })
}

/// Connects `g1` and `g2` over `x1`, `x2` (renamed to `x`) and glues their
/// cycles; both must use an edge of G at the merge vertex.
pub fn compose_i(
    g1: &Graph,
    x1: Vertex,
    c1: &HamCycle,
    g2: &Graph,
    x2: Vertex,
    c2: &HamCycle,
    x: Vertex,
) -> Result<(Graph, HamCycle)> {
    // `connect` owns the precondition checks and their error kinds.
    connect(g1, x1, g2, x2, x)?;
    let p1 = renamed(g1, c1, x1, x)?;
    let p2 = renamed(g2, c2, x2, x)?;
    if in_g_neighbors(&p1.c, x).is_empty() {
        return Err(Error::WitnessLacksInGEdge(x1));
    }
    if in_g_neighbors(&p2.c, x).is_empty() {
        return Err(Error::WitnessLacksInGEdge(x2));
    }
    let p = Ctx::quiet().glue_two(&p1, &p2, x, ANY, ANY)?;
    Ok((p.g, p.c))
}

/// Hangs the pendant edge `x u` on `g1` at `x1` (renamed to `x`).
pub fn compose_ii(
    g1: &Graph,
    x1: Vertex,
    c1: &HamCycle,
    kind: WitnessKind,
    u: Vertex,
    x: Vertex,
) -> Result<(Graph, HamCycle)> {
    if !g1.contains(x1) {
        return Err(Error::VertexNotFound(x1));
    }
    for label in [x, u] {
        if (g1.contains(label) && label != x1) || u == x {
            return Err(Error::FreshLabelCollision(label));
        }
    }
    if g1.contains(u) {
        return Err(Error::FreshLabelCollision(u));
    }
    let p1 = renamed(g1, c1, x1, x)?;
    let mut ctx = Ctx::quiet();
    let p = match kind {
        WitnessKind::Type12 => {
            if in_g_neighbors(&p1.c, x).is_empty() {
                return Err(Error::WitnessMismatch(format!(
                    "no cycle edge of the graph at {x1}"
                )));
            }
            ctx.glue_pendant(&p1, x, u, ANY)?
        }
        WitnessKind::Type3 => ctx.pendant_on_neighbor_edge(&p1, x, u)?,
    };
    Ok((p.g, p.c))
}

/// Connects `g1` and `g2` where `c1` has an edge between two neighbors of
/// `x1` and `c2` uses two edges of G at `x2`.
pub fn compose_iii(
    g1: &Graph,
    x1: Vertex,
    c1: &HamCycle,
    g2: &Graph,
    x2: Vertex,
    c2: &HamCycle,
    x: Vertex,
) -> Result<(Graph, HamCycle)> {
    connect(g1, x1, g2, x2, x)?;
    let p1 = renamed(g1, c1, x1, x)?;
    let p2 = renamed(g2, c2, x2, x)?;
    let p = Ctx::quiet().glue_neighbor_edge(&p1, &p2, x)?;
    Ok((p.g, p.c))
}
