//! Independent checks of everything the engine claims.
//!
//! Nothing here calls the constructions: the checks use graph primitives,
//! the block decomposition and the exhaustive search only.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blocks::{decompose, ClassCheck};
use crate::cycle::{HamCycle, Provenance};
use crate::engine::decide::{Certificate, Decision, Witness};
use crate::engine::search::{find_ham_cycle_constrained, CycleConstraint, Requirement, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    NotHamiltonian,
    DistanceViolation,
    ProvenanceMismatch,
    ConstraintViolation,
    DecisionMismatch,
    /// A claimed structure was not found in the graph.
    ClaimNotWitnessed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    fn merge(&mut self, other: VerificationReport) {
        self.violations.extend(other.violations);
        self.ok = self.violations.is_empty();
    }

    fn push(&mut self, kind: ViolationKind, location: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            kind,
            location: location.into(),
            detail: detail.into(),
        });
        self.ok = false;
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{:?} at {}: {}", v.kind, v.location, v.detail)?;
        }
        Ok(())
    }
}

/// Checks that `c` visits every vertex of `g` once, that consecutive
/// vertices are at distance at most two, and that each provenance flag says
/// `InG` exactly when the pair is an edge of `g`.
pub fn verify_ham_cycle_in_square(g: &Graph, c: &HamCycle) -> VerificationReport {
    let mut r = VerificationReport::from_violations(Vec::new());
    let order = c.order();
    let n = order.len();
    if c.provenance().len() != n {
        r.push(
            ViolationKind::ProvenanceMismatch,
            "cycle",
            format!("{n} vertices but {} provenance flags", c.provenance().len()),
        );
    }
    if n < 3 {
        r.push(ViolationKind::NotHamiltonian, "cycle", "fewer than three vertices");
        return r;
    }
    let mut seen = BTreeSet::new();
    for &v in order {
        if !g.contains(v) {
            r.push(ViolationKind::NotHamiltonian, v.to_string(), "not a vertex of the graph");
        } else if !seen.insert(v) {
            r.push(ViolationKind::NotHamiltonian, v.to_string(), "visited twice");
        }
    }
    for v in g.vertices().filter(|v| !seen.contains(v)) {
        r.push(ViolationKind::NotHamiltonian, v.to_string(), "not visited");
    }
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if !g.contains(u) || !g.contains(v) {
            continue;
        }
        let d = g.distance(u, v).ok().flatten();
        if d.is_none_or(|d| d > 2) {
            let shown = d.map_or("unreachable".to_string(), |d| d.to_string());
            r.push(
                ViolationKind::DistanceViolation,
                format!("{u}-{v}"),
                format!("distance {shown} in the graph"),
            );
        }
        if let Some(&p) = c.provenance().get(i) {
            if (p == Provenance::InG) != g.has_edge(u, v) {
                r.push(
                    ViolationKind::ProvenanceMismatch,
                    format!("{u}-{v}"),
                    format!("flagged {p:?}"),
                );
            }
        }
    }
    r
}

/// Graph edges of `g` among the two cycle edges at `v`.
fn in_g_at(g: &Graph, c: &HamCycle, v: Vertex) -> usize {
    match c.neighbors(v) {
        Some((p, s)) => usize::from(g.has_edge(v, p)) + usize::from(g.has_edge(v, s)),
        None => 0,
    }
}

/// Checks every requirement of `cc` against `c`, computing graph edges from
/// `g` rather than from the stored flags.
pub fn verify_edge_conditions(g: &Graph, c: &HamCycle, cc: &CycleConstraint) -> Result<VerificationReport> {
    cc.validate(g)?;
    let mut r = verify_ham_cycle_in_square(g, c);
    for (v, req) in cc.requirements() {
        let k = in_g_at(g, c, v);
        let cycle_edge = |w: Vertex| c.neighbors(v).is_some_and(|(p, s)| p == w || s == w);
        let holds = match req {
            Requirement::BothInG => k == 2,
            Requirement::ExactlyOneInG => k == 1,
            Requirement::NoneInG => k == 0,
            Requirement::AtLeastOneInG => k >= 1,
            Requirement::NeighborEdge => {
                let nb = g.neighbor_set(v).cloned().unwrap_or_default();
                c.edges().any(|(a, b, _)| nb.contains(&a) && nb.contains(&b))
            }
            Requirement::RequiredEdge(w) => cycle_edge(w),
            Requirement::ForbiddenEdge(w) => !cycle_edge(w),
            Requirement::Free => true,
        };
        if !holds {
            r.push(
                ViolationKind::ConstraintViolation,
                v.to_string(),
                format!("{req:?} fails ({k} graph edges at the vertex)"),
            );
        }
    }
    let total = c
        .edges()
        .filter(|&(u, v, _)| g.has_edge(u, v))
        .count();
    if total < cc.min_in_g_edges() {
        r.push(
            ViolationKind::ConstraintViolation,
            "cycle",
            format!("{total} graph edges, fewer than {}", cc.min_in_g_edges()),
        );
    }
    Ok(r)
}

/// Re-checks a decision certificate.
///
/// Cycles are verified and, for in-class graphs, must have `2 - t(a)` graph
/// edges at every branch point `a`. Negative answers are checked against
/// their witness and, when the graph fits under `limits.cap`, against
/// exhaustive search.
pub fn verify_decision(g: &Graph, cert: &Certificate, limits: &SearchLimits) -> VerificationReport {
    let mut r = VerificationReport::from_violations(Vec::new());
    let bd = if g.vertex_count() >= 2 { decompose(g).ok() } else { None };
    let class = bd.as_ref().map_or(ClassCheck::InClass, |bd| bd.class_check());
    if g.vertex_count() >= 3 && cert.class != class {
        r.push(
            ViolationKind::DecisionMismatch,
            "preconditions",
            format!("certificate says {:?}, graph gives {class:?}", cert.class),
        );
    }
    match &cert.decision {
        Decision::Hamiltonian(c) => {
            r.merge(verify_ham_cycle_in_square(g, c));
            if let (Some(bd), true) = (&bd, class.is_in_class()) {
                for a in bd.branch_cut_vertices() {
                    let t = bd.t_count(a);
                    let k = in_g_at(g, c, a);
                    if t <= 2 && k != 2 - t {
                        r.push(
                            ViolationKind::ConstraintViolation,
                            a.to_string(),
                            format!("{k} graph edges at a branch point with t = {t}, expected {}", 2 - t),
                        );
                    }
                }
            }
        }
        Decision::NotHamiltonian(w) => {
            let structural = match *w {
                Witness::TooSmall => {
                    if g.vertex_count() > 2 {
                        r.push(ViolationKind::DecisionMismatch, "witness", "graph has at least three vertices");
                    }
                    true
                }
                Witness::AcyclicNonEndBlocks { vertex, t } => {
                    let real = bd.as_ref().filter(|_| g.contains(vertex)).map(|bd| bd.t_count(vertex));
                    if real != Some(t) || t < 3 {
                        r.push(
                            ViolationKind::DecisionMismatch,
                            vertex.to_string(),
                            format!("claimed t = {t}, actual {real:?}"),
                        );
                    }
                    true
                }
                Witness::OracleExhausted => false,
            };
            if g.vertex_count() >= 3 && g.vertex_count() <= limits.cap {
                match find_ham_cycle_constrained(g, &CycleConstraint::free(), limits.budget) {
                    Ok(Some(c)) => r.push(
                        ViolationKind::DecisionMismatch,
                        "decision",
                        format!("search found a hamiltonian cycle {:?}", c.order()),
                    ),
                    Ok(None) => {}
                    Err(e) if !structural => {
                        r.push(ViolationKind::DecisionMismatch, "decision", format!("search failed: {e}"))
                    }
                    Err(_) => {}
                }
            } else if !structural {
                r.push(
                    ViolationKind::DecisionMismatch,
                    "decision",
                    "graph exceeds the search cap and there is no structural witness",
                );
            }
        }
        Decision::OutOfClass(v) => {
            if class != ClassCheck::OutOfClass(v.clone()) {
                r.push(
                    ViolationKind::DecisionMismatch,
                    "preconditions",
                    format!("claimed violation {v} does not match {class:?}"),
                );
            }
        }
    }
    r
}

/// Outcome of [`check_sk13_claim`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub report: VerificationReport,
    /// Vertex set of the induced subdivided claw that witnesses the claim.
    pub witness: Option<BTreeSet<Vertex>>,
}

/// Every induced subdivided claw `S(K1,3)`, as `(center, [(a_i, b_i)])`,
/// in lexicographic order.
pub fn induced_subdivided_claws(g: &Graph) -> Vec<(Vertex, [(Vertex, Vertex); 3])> {
    let mut out = Vec::new();
    for c in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(c).collect();
        if nb.len() < 3 {
            continue;
        }
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    let a = [nb[i], nb[j], nb[k]];
                    if g.has_edge(a[0], a[1]) || g.has_edge(a[0], a[2]) || g.has_edge(a[1], a[2]) {
                        continue;
                    }
                    let outer = |x: Vertex| -> Vec<Vertex> {
                        g.neighbors(x)
                            .filter(|&b| b != c && !g.has_edge(b, c))
                            .filter(|&b| a.iter().all(|&y| y == x || !g.has_edge(b, y)))
                            .collect()
                    };
                    for &b0 in &outer(a[0]) {
                        for &b1 in &outer(a[1]) {
                            if b1 == b0 || g.has_edge(b0, b1) {
                                continue;
                            }
                            for &b2 in &outer(a[2]) {
                                if b2 == b0 || b2 == b1 || g.has_edge(b0, b2) || g.has_edge(b1, b2) {
                                    continue;
                                }
                                out.push((c, [(a[0], b0), (a[1], b1), (a[2], b2)]));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks that `g` is a counterexample to the converse of the three-edges
/// sufficient condition: `g`² is hamiltonian, yet `g` has an induced
/// `S(K1,3)` of which no block of degree at most two contains three edges.
pub fn check_sk13_claim(g: &Graph, limits: &SearchLimits) -> Result<ClaimReport> {
    limits.check_cap(g)?;
    let mut r = VerificationReport::from_violations(Vec::new());
    let bd = decompose(g)?;
    let mut witness = None;
    for (c, arms) in induced_subdivided_claws(g) {
        let edges = arms.iter().flat_map(|&(a, b)| [(c, a), (a, b)]);
        let mut per_block = vec![0usize; bd.block_count()];
        for (u, v) in edges {
            let blk = bd.block_of_edge(u, v).expect("edge lies in a block");
            if bd.info(blk).degree <= 2 {
                per_block[blk] += 1;
            }
        }
        if per_block.iter().all(|&k| k < 3) {
            let mut set = BTreeSet::from([c]);
            set.extend(arms.iter().flat_map(|&(a, b)| [a, b]));
            witness = Some(set);
            break;
        }
    }
    if witness.is_none() {
        r.push(
            ViolationKind::ClaimNotWitnessed,
            "graph",
            "no induced S(K1,3) avoids three edges in one block of degree at most two",
        );
    }
    match find_ham_cycle_constrained(g, &CycleConstraint::free(), limits.budget) {
        Ok(Some(_)) => {}
        Ok(None) => r.push(ViolationKind::NotHamiltonian, "graph", "square is not hamiltonian"),
        Err(Error::TooSmall) => r.push(ViolationKind::NotHamiltonian, "graph", "fewer than three vertices"),
        Err(e) => return Err(e),
    }
    Ok(ClaimReport { report: r, witness })
}
