//! Deciding whether G² is hamiltonian for in-class graphs, and building the
//! cycle.
//!
//! The construction recurses on the branch points (cut vertices whose
//! block-graph degree is at least three). It picks two of them, `a1` and
//! `a2`, joined by a block-graph path with no branch point inside, takes a
//! path-shaped cycle of the blocks `H` along that path, and glues onto it
//! cycles of the two sides `G1` (at `a1`) and `G2` (at `a2`). Every cycle it
//! returns has exactly `2 - t(a)` graph edges at each branch point `a`.

use std::collections::BTreeSet;

use super::compose::{Piece, ANY};
use super::search::{find_ham_cycle_constrained, CycleConstraint, Requirement, SearchLimits};
use super::thomassen::far_anchor;
use super::{Ctx, TraceStep};
use crate::blocks::{decompose, BlNode, BlockDecomposition, ClassCheck, ClassViolation};
use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// How [`decide_and_construct`] reaches its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Build the cycle block by block; out-of-class graphs are not answered.
    Constructive,
    /// Exhaustive search over the whole square, subject to the vertex cap.
    OracleSearch,
}

/// Evidence that G² has no hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `vertex` lies in `t >= 3` acyclic non-end blocks.
    AcyclicNonEndBlocks { vertex: Vertex, t: usize },
    /// Fewer than three vertices.
    TooSmall,
    /// Exhaustive search found no cycle and there is no structural witness.
    OracleExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Hamiltonian(HamCycle),
    NotHamiltonian(Witness),
    OutOfClass(ClassViolation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub decision: Decision,
    pub trace: Vec<TraceStep>,
    pub class: ClassCheck,
}

/// The structural witness with the smallest vertex, if any.
fn heavy_cut_vertex(bd: &BlockDecomposition) -> Option<Witness> {
    bd.cut_vertices()
        .iter()
        .map(|&v| (v, bd.t_count(v)))
        .find(|&(_, t)| t >= 3)
        .map(|(vertex, t)| Witness::AcyclicNonEndBlocks { vertex, t })
}

/// The per-branch-point edge counts every constructed cycle satisfies.
pub fn inner_constraint(bd: &BlockDecomposition) -> CycleConstraint {
    let mut c = CycleConstraint::free();
    for a in bd.branch_cut_vertices() {
        let req = match bd.t_count(a) {
            0 => Requirement::BothInG,
            1 => Requirement::ExactlyOneInG,
            _ => Requirement::NoneInG,
        };
        c.add(a, req);
    }
    c
}

/// Decides hamiltonicity of `g`² and returns the evidence.
///
/// Graphs with a cut vertex in three or more acyclic non-end blocks are
/// rejected in either mode. In [`Mode::Constructive`] an out-of-class graph
/// yields [`Decision::OutOfClass`]; [`Mode::OracleSearch`] answers it anyway
/// when it fits under the cap.
pub fn decide_and_construct(g: &Graph, mode: Mode, limits: &SearchLimits) -> Result<Certificate> {
    if !g.is_connected() || g.is_empty() {
        return Err(Error::DisconnectedInput);
    }
    let too_small = |class| Certificate {
        decision: Decision::NotHamiltonian(Witness::TooSmall),
        trace: Vec::new(),
        class,
    };
    if g.vertex_count() == 1 {
        return Ok(too_small(ClassCheck::InClass));
    }
    let bd = decompose(g)?;
    let class = bd.class_check();
    if g.vertex_count() <= 2 {
        return Ok(too_small(class));
    }
    let heavy = heavy_cut_vertex(&bd);

    if mode == Mode::OracleSearch {
        limits.check_cap(g)?;
        let mut found = None;
        if class.is_in_class() {
            found = find_ham_cycle_constrained(g, &inner_constraint(&bd), limits.budget)?;
        }
        if found.is_none() {
            found = find_ham_cycle_constrained(g, &CycleConstraint::free(), limits.budget)?;
        }
        let decision = match found {
            Some(c) => Decision::Hamiltonian(c),
            None => Decision::NotHamiltonian(heavy.unwrap_or(Witness::OracleExhausted)),
        };
        let trace = vec![TraceStep {
            theorem_case: "oracle".into(),
            merged_vertex: None,
            subgraph_sizes: vec![g.vertex_count()],
        }];
        return Ok(Certificate { decision, trace, class });
    }

    if let Some(w) = heavy {
        return Ok(Certificate {
            decision: Decision::NotHamiltonian(w),
            trace: Vec::new(),
            class,
        });
    }
    if let ClassCheck::OutOfClass(v) = &class {
        return Ok(Certificate {
            decision: Decision::OutOfClass(v.clone()),
            trace: Vec::new(),
            class,
        });
    }
    let mut ctx = Ctx::new(limits, g.max_vertex().unwrap() + 1);
    let piece = ctx.main(g)?;
    let cycle = HamCycle::try_new(g, piece.c.order())?;
    for (a, req) in inner_constraint(&bd).requirements() {
        let want = match req {
            Requirement::BothInG => 2,
            Requirement::ExactlyOneInG => 1,
            _ => 0,
        };
        if cycle.in_g_degree(a) != want {
            return Err(Error::Defect(format!(
                "constructed cycle has {} graph edges at branch point {a}, expected {want}",
                cycle.in_g_degree(a)
            )));
        }
    }
    Ok(Certificate {
        decision: Decision::Hamiltonian(cycle),
        trace: ctx.into_trace(),
        class,
    })
}

/// Picks `(a1, a2)`: `a1` ends a longest block-graph path between branch
/// points, `a2` is a branch point reachable from it without passing another;
/// ties go to the smallest pair.
fn choose_pair(bd: &BlockDecomposition, points: &[Vertex]) -> (Vertex, Vertex) {
    let dist = |a: Vertex, b: Vertex| bd.bl_distance(BlNode::Cut(a), BlNode::Cut(b)).unwrap();
    let max = points
        .iter()
        .flat_map(|&a| points.iter().map(move |&b| (a, b)))
        .map(|(a, b)| dist(a, b))
        .max()
        .unwrap_or(0);
    let ends: BTreeSet<Vertex> = points
        .iter()
        .flat_map(|&a| points.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| dist(a, b) == max)
        .map(|(a, _)| a)
        .collect();
    let point_set: BTreeSet<Vertex> = points.iter().copied().collect();
    for &a1 in &ends {
        for &a2 in points {
            if a2 == a1 {
                continue;
            }
            let path = bd.bl_path(BlNode::Cut(a1), BlNode::Cut(a2)).unwrap();
            let clear = path[1..path.len() - 1]
                .iter()
                .all(|n| !matches!(n, BlNode::Cut(v) if point_set.contains(v)));
            if clear {
                return (a1, a2);
            }
        }
    }
    unreachable!("a tree with two branch points has an adjacent pair")
}

/// Acyclic blocks at `a` in the side `s` that are non-end blocks of the
/// whole graph. `a` itself is a cut vertex there even when it is not one of
/// `s`, so only the far endpoint decides.
fn side_bridges(s: &Graph, sd: &BlockDecomposition, a: Vertex) -> Vec<usize> {
    sd.blocks_at(a)
        .iter()
        .copied()
        .filter(|&b| {
            let blk = sd.block(b);
            !sd.is_cyclic(b) && blk.iter().any(|&w| w != a && s.degree(w) >= 2)
        })
        .collect()
}

impl Ctx<'_> {
    /// Cycle for an in-class graph with no cut vertex in three acyclic
    /// non-end blocks.
    pub(crate) fn main(&mut self, g: &Graph) -> Result<Piece> {
        let bd = decompose(g)?;
        let points = bd.branch_cut_vertices();
        match points.len() {
            0 if bd.block_count() == 1 => {
                let v = g.min_vertex().unwrap();
                self.fleischner(g, v, v)
            }
            0 => {
                let ends = bd.endblocks();
                let u1 = bd.non_cut_vertices(ends[0]).next().unwrap();
                let u2 = far_anchor(&bd, u1).unwrap();
                self.thomassen(g, u1, u2)
            }
            1 => self.branch_point(g, points[0]),
            _ => self.split(g, &bd, &points),
        }
    }

    fn split(&mut self, g: &Graph, bd: &BlockDecomposition, points: &[Vertex]) -> Result<Piece> {
        let (a1, a2) = choose_pair(bd, points);
        let path = bd.bl_path(BlNode::Cut(a1), BlNode::Cut(a2)).unwrap();
        let (BlNode::Block(first), BlNode::Block(last)) = (path[1], path[path.len() - 2]) else {
            unreachable!("block graph alternates")
        };
        let mut h_set = BTreeSet::new();
        for n in &path {
            if let BlNode::Block(b) = n {
                h_set.extend(bd.block(*b).iter().copied());
            }
        }
        let side = |a: Vertex, skip: usize| -> BTreeSet<Vertex> {
            let mut s = BTreeSet::from([a]);
            for &b in bd.blocks_at(a) {
                if b != skip {
                    s.extend(bd.hanging_vertices(a, b));
                }
            }
            s
        };
        let g1 = g.induced(&side(a1, first))?;
        let g2 = g.induced(&side(a2, last))?;
        let h = g.induced(&h_set)?;
        self.record(TraceStep {
            theorem_case: "split-at-branch-points".into(),
            merged_vertex: Some(a1),
            subgraph_sizes: vec![g1.vertex_count(), h.vertex_count(), g2.vertex_count()],
        });
        let h_cyclic = |b: usize| bd.is_cyclic(b);
        let mut acc = self.thomassen(&h, a1, a2)?;
        acc = self.attach_side(acc, &g2, a2, h_cyclic(last))?;
        acc = self.attach_side(acc, &g1, a1, h_cyclic(first))?;
        Ok(Piece::new(g.clone(), acc.c.order()))
    }

    /// Glues the cycle of side `s` (hanging at `a`) onto `acc`, which has a
    /// graph edge at `a`.
    fn attach_side(&mut self, acc: Piece, s: &Graph, a: Vertex, acc_block_cyclic: bool) -> Result<Piece> {
        let sd = decompose(s)?;
        let bridges = side_bridges(s, &sd, a);
        if bridges.len() <= 1 {
            let c = self.anchored(s, a)?;
            return self.glue_two(&acc, &c, a, ANY, ANY);
        }
        if !acc_block_cyclic {
            return Err(Error::Defect(format!(
                "{a} would lie in three acyclic non-end blocks"
            )));
        }
        // Two acyclic non-end blocks at `a` on this side: peel one off with
        // everything behind it, glue the rest first, then the peeled part.
        let peeled = sd.hanging_vertices(a, bridges[0]);
        let mut rest: BTreeSet<Vertex> = s.vertex_set().difference(&peeled).copied().collect();
        rest.insert(a);
        let rest_c = self.anchored(&s.induced(&rest)?, a)?;
        let peeled_c = self.anchored(&s.induced(&peeled)?, a)?;
        let acc = self.glue_two(&acc, &rest_c, a, ANY, ANY)?;
        self.glue_two(&acc, &peeled_c, a, ANY, ANY)
    }

    /// Cycle of `s` with `2 - t(a)` graph edges at `a`, computed with helper
    /// pendants at `a` that make it a branch point, then spliced out.
    fn anchored(&mut self, s: &Graph, a: Vertex) -> Result<Piece> {
        let deg = if s.vertex_count() == 1 {
            0
        } else {
            decompose(s)?.blocks_at(a).len()
        };
        let helpers: Vec<Vertex> = (deg..3).map(|_| self.fresh()).collect();
        let mut big = s.clone();
        for &u in &helpers {
            big.add_edge(a, u)?;
        }
        let piece = self.main(&big)?;
        let mut seq = piece.c.order().to_vec();
        for &u in &helpers {
            let i = seq.iter().position(|&v| v == u).unwrap();
            let n = seq.len();
            let (p, q) = (seq[(i + n - 1) % n], seq[(i + 1) % n]);
            if !(p == a || s.has_edge(p, a)) || !(q == a || s.has_edge(q, a)) {
                return Err(Error::Defect(format!(
                    "helper pendant {u} has cycle neighbors {p}, {q} not next to {a}"
                )));
            }
            seq.remove(i);
        }
        if !helpers.is_empty() {
            self.record(TraceStep {
                theorem_case: "remove-helper-pendants".into(),
                merged_vertex: Some(a),
                subgraph_sizes: vec![s.vertex_count(), helpers.len()],
            });
        }
        if seq.len() < 3 {
            return Err(Error::Defect(format!("side at {a} has fewer than three vertices")));
        }
        Ok(Piece::new(s.clone(), &seq))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{figure1, star_cut, BlockSpec};

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn subdivided_claw_is_rejected_with_center() {
        let s = Graph::from_edges([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        for mode in [Mode::Constructive, Mode::OracleSearch] {
            let cert = decide_and_construct(&s, mode, &lim()).unwrap();
            assert_eq!(
                cert.decision,
                Decision::NotHamiltonian(Witness::AcyclicNonEndBlocks { vertex: 0, t: 3 })
            );
        }
    }

    #[test]
    fn figure1_is_hamiltonian_with_both_edges_at_v1() {
        let cert = decide_and_construct(&figure1(), Mode::Constructive, &lim()).unwrap();
        let Decision::Hamiltonian(c) = cert.decision else {
            panic!("expected a cycle")
        };
        assert_eq!(c.len(), 10);
        assert_eq!(c.in_g_degree(1), 2);
        assert!(!cert.trace.is_empty());
    }

    #[test]
    fn small_inputs() {
        let k2 = Graph::from_edges([(0, 1)]).unwrap();
        let cert = decide_and_construct(&k2, Mode::Constructive, &lim()).unwrap();
        assert_eq!(cert.decision, Decision::NotHamiltonian(Witness::TooSmall));
        let two = Graph::from_edges([(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            decide_and_construct(&two, Mode::Constructive, &lim()),
            Err(Error::DisconnectedInput)
        );
    }

    #[test]
    fn two_branch_points_far_apart() {
        use BlockSpec::*;
        // Center 0 with three legs; the last leg carries another claw-like
        // fan at its end, four block-graph steps away.
        let mut g = star_cut(&[
            vec![Clique(2)],
            vec![Clique(3)],
            vec![Clique(2), Clique(3), Clique(2)],
        ])
        .unwrap();
        let far = g.max_vertex().unwrap();
        assert_eq!(g.degree(far), 1);
        g.add_edge(far, 20).unwrap();
        g.add_edge(far, 21).unwrap();
        g.add_edge(20, 22).unwrap();
        let cert = decide_and_construct(&g, Mode::Constructive, &lim()).unwrap();
        let Decision::Hamiltonian(c) = &cert.decision else {
            panic!("expected a cycle: {:?}", cert.decision)
        };
        HamCycle::try_new(&g, c.order()).unwrap();
    }
}
