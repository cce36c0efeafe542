//! Exact search for hamiltonian cycles of G² under per-vertex side conditions.
//!
//! Two routes share the same contract. Backtracking handles every kind of
//! constraint; a Held–Karp reachability table answers unconstrained queries
//! on up to [`HELD_KARP_MAX`] vertices. Both explore vertices in ascending
//! label order, so results are reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycle::HamCycle;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Vertex, DEFAULT_CAP};

/// Largest graph the bitmask kernel accepts.
pub const MAX_SEARCH_VERTICES: usize = 64;
/// Largest graph answered by the Held–Karp table.
pub const HELD_KARP_MAX: usize = 20;
pub const DEFAULT_BUDGET: u64 = 500_000_000;

/// A side condition attached to one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Requirement {
    /// Both cycle edges at the vertex are edges of G.
    BothInG,
    ExactlyOneInG,
    NoneInG,
    AtLeastOneInG,
    /// Some cycle edge joins two G-neighbors of the vertex.
    NeighborEdge,
    /// The cycle uses the edge from this vertex to the given one.
    RequiredEdge(Vertex),
    ForbiddenEdge(Vertex),
    Free,
}

impl Requirement {
    /// Permitted numbers of `InG` cycle edges at the vertex, as a bit set
    /// over {0, 1, 2}.
    fn allowed_in_g(self) -> u8 {
        match self {
            Requirement::BothInG => 0b100,
            Requirement::ExactlyOneInG => 0b010,
            Requirement::NoneInG => 0b001,
            Requirement::AtLeastOneInG => 0b110,
            _ => 0b111,
        }
    }
}

/// Per-vertex requirements plus an optional global lower bound on the
/// number of cycle edges that are edges of G.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleConstraint {
    requirements: BTreeMap<Vertex, BTreeSet<Requirement>>,
    min_in_g_edges: usize,
}

impl CycleConstraint {
    pub fn free() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Vertex, req: Requirement) -> Self {
        self.add(v, req);
        self
    }

    pub fn add(&mut self, v: Vertex, req: Requirement) {
        self.requirements.entry(v).or_default().insert(req);
    }

    pub fn require_edge(self, u: Vertex, v: Vertex) -> Self {
        self.with(u, Requirement::RequiredEdge(v))
    }

    pub fn forbid_edge(self, u: Vertex, v: Vertex) -> Self {
        self.with(u, Requirement::ForbiddenEdge(v))
    }

    pub fn with_min_in_g_edges(mut self, k: usize) -> Self {
        self.min_in_g_edges = k;
        self
    }

    pub fn min_in_g_edges(&self) -> usize {
        self.min_in_g_edges
    }

    pub fn requirements(&self) -> impl Iterator<Item = (Vertex, Requirement)> + '_ {
        self.requirements
            .iter()
            .flat_map(|(&v, rs)| rs.iter().map(move |&r| (v, r)))
    }

    pub fn is_free(&self) -> bool {
        self.min_in_g_edges == 0 && self.requirements().all(|(_, r)| r == Requirement::Free)
    }

    fn edge_set(&self, pick: fn(Requirement) -> Option<Vertex>) -> BTreeSet<(Vertex, Vertex)> {
        self.requirements()
            .filter_map(|(u, r)| pick(r).map(|v| (u.min(v), u.max(v))))
            .collect()
    }

    pub fn required_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edge_set(|r| match r {
            Requirement::RequiredEdge(v) => Some(v),
            _ => None,
        })
    }

    pub fn forbidden_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edge_set(|r| match r {
            Requirement::ForbiddenEdge(v) => Some(v),
            _ => None,
        })
    }

    /// Checks that every referenced vertex exists and that no edge is both
    /// required and forbidden.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (v, r) in self.requirements() {
            if !g.contains(v) {
                return Err(Error::ConstraintOnMissingVertex(v));
            }
            if let Requirement::RequiredEdge(w) | Requirement::ForbiddenEdge(w) = r {
                if !g.contains(w) {
                    return Err(Error::ConstraintOnMissingVertex(w));
                }
            }
        }
        let req = self.required_edges();
        if let Some(&(u, v)) = self.forbidden_edges().intersection(&req).next() {
            return Err(Error::ConflictingEdgeRequirement(u, v));
        }
        Ok(())
    }
}

/// Which search route to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Held–Karp for unconstrained queries on small graphs, else backtracking.
    Auto,
    Backtrack,
    HeldKarp,
}

/// Vertex cap for the exponential routines and the node-expansion budget for
/// a single search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub cap: usize,
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            cap: DEFAULT_CAP,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchLimits {
    /// Defaults, with the cap overridden by `HAMSQ_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var("HAMSQ_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.cap = cap;
        }
        limits
    }

    pub fn check_cap(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.cap {
            Err(Error::SizeCapExceeded {
                n: g.vertex_count(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Finds a hamiltonian cycle of `g`² meeting every requirement of `c`.
///
/// `Ok(None)` means the search was exhaustive and no such cycle exists;
/// running out of `budget` node expansions is reported as
/// [`Error::BudgetExceeded`] instead.
pub fn find_ham_cycle_constrained(
    g: &Graph,
    c: &CycleConstraint,
    budget: u64,
) -> Result<Option<HamCycle>> {
    find_with_strategy(g, c, budget, Strategy::Auto)
}

pub fn find_with_strategy(
    g: &Graph,
    c: &CycleConstraint,
    budget: u64,
    strategy: Strategy,
) -> Result<Option<HamCycle>> {
    let problem = match Problem::compile(g, c)? {
        Some(p) => p,
        None => return Ok(None),
    };
    let use_dp = match strategy {
        Strategy::Auto => c.is_free() && problem.n <= HELD_KARP_MAX,
        Strategy::Backtrack => false,
        Strategy::HeldKarp => {
            if !c.is_free() || problem.n > HELD_KARP_MAX {
                return Err(Error::PreconditionViolated(
                    "Held-Karp route needs a free constraint and at most 20 vertices".into(),
                ));
            }
            true
        }
    };
    let seq = if use_dp {
        problem.held_karp()
    } else {
        let mut found = None;
        problem.backtrack(budget, &mut |seq: &[usize]| {
            found = Some(seq.to_vec());
            ControlFlow::Break(())
        })?;
        found
    };
    Ok(seq.map(|s| {
        let labels: Vec<Vertex> = s.iter().map(|&i| problem.verts[i]).collect();
        HamCycle::new(g, &labels)
    }))
}

/// Calls `visit` once per hamiltonian cycle of `g`² satisfying `c`, each
/// undirected cycle exactly once, until `visit` breaks. Returns the number
/// of cycles visited.
pub fn for_each_ham_cycle(
    g: &Graph,
    c: &CycleConstraint,
    budget: u64,
    mut visit: impl FnMut(HamCycle) -> ControlFlow<()>,
) -> Result<usize> {
    let problem = match Problem::compile(g, c)? {
        Some(p) => p,
        None => return Ok(0),
    };
    let mut count = 0;
    problem.backtrack(budget, &mut |seq: &[usize]| {
        count += 1;
        let labels: Vec<Vertex> = seq.iter().map(|&i| problem.verts[i]).collect();
        visit(HamCycle::new(g, &labels))
    })?;
    Ok(count)
}

/// Compiled bitmask form of a search instance over indices `0..n`.
struct Problem {
    n: usize,
    verts: Vec<Vertex>,
    g: Vec<u64>,
    sq: Vec<u64>,
    allowed: Vec<u8>,
    req: Vec<u64>,
    neighbor_edge: Vec<usize>,
    min_in_g: usize,
}

impl Problem {
    /// `Ok(None)` when the instance is trivially infeasible.
    fn compile(g: &Graph, c: &CycleConstraint) -> Result<Option<Problem>> {
        c.validate(g)?;
        let n = g.vertex_count();
        if n < 3 {
            return Err(Error::TooSmall);
        }
        if n > MAX_SEARCH_VERTICES {
            return Err(Error::SizeCapExceeded {
                n,
                cap: MAX_SEARCH_VERTICES,
            });
        }
        if !g.is_connected() {
            return Ok(None);
        }
        let verts: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut gm = vec![0u64; n];
        for (u, v) in g.edges() {
            gm[index[&u]] |= 1 << index[&v];
            gm[index[&v]] |= 1 << index[&u];
        }
        let mut sq = vec![0u64; n];
        for v in 0..n {
            let mut m = gm[v];
            for w in bits(gm[v]) {
                m |= gm[w];
            }
            sq[v] = m & !(1 << v);
        }
        let mut allowed = vec![0b111u8; n];
        let mut req = vec![0u64; n];
        let mut neighbor_edge = Vec::new();
        for (v, r) in c.requirements() {
            let i = index[&v];
            allowed[i] &= r.allowed_in_g();
            match r {
                Requirement::RequiredEdge(w) => {
                    let j = index[&w];
                    req[i] |= 1 << j;
                    req[j] |= 1 << i;
                }
                Requirement::ForbiddenEdge(w) => {
                    let j = index[&w];
                    sq[i] &= !(1 << j);
                    sq[j] &= !(1 << i);
                }
                Requirement::NeighborEdge => neighbor_edge.push(i),
                _ => {}
            }
        }
        let infeasible = (0..n).any(|i| {
            allowed[i] == 0 || req[i].count_ones() > 2 || req[i] & !sq[i] != 0
        });
        if infeasible || c.min_in_g_edges > n {
            return Ok(None);
        }
        Ok(Some(Problem {
            n,
            verts,
            g: gm,
            sq,
            allowed,
            req,
            neighbor_edge,
            min_in_g: c.min_in_g_edges,
        }))
    }

    fn in_g(&self, u: usize, v: usize) -> u8 {
        (self.g[u] >> v & 1) as u8
    }

    /// Whether `v` may have cycle neighbors `a` and `b`.
    fn local_ok(&self, v: usize, a: usize, b: usize) -> bool {
        let count = self.in_g(v, a) + self.in_g(v, b);
        self.allowed[v] >> count & 1 == 1 && self.req[v] & !((1 << a) | (1 << b)) == 0
    }

    fn global_ok(&self, seq: &[usize]) -> bool {
        let n = seq.len();
        let pairs = (0..n).map(|i| (seq[i], seq[(i + 1) % n]));
        if self.min_in_g > 0 {
            let count = pairs.clone().filter(|&(u, v)| self.in_g(u, v) == 1).count();
            if count < self.min_in_g {
                return false;
            }
        }
        self.neighbor_edge.iter().all(|&x| {
            pairs
                .clone()
                .any(|(u, v)| self.g[x] >> u & 1 == 1 && self.g[x] >> v & 1 == 1)
        })
    }

    /// Start vertex: the one admitting the fewest neighbor pairs.
    fn pick_start(&self) -> (usize, Vec<(usize, usize)>) {
        let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
        for s in 0..self.n {
            let nb: Vec<usize> = bits(self.sq[s]).collect();
            let mut pairs = Vec::new();
            for (k, &f) in nb.iter().enumerate() {
                for &l in &nb[k + 1..] {
                    if self.local_ok(s, f, l) {
                        pairs.push((f, l));
                    }
                }
            }
            if best.as_ref().is_none_or(|(_, p)| pairs.len() < p.len()) {
                best = Some((s, pairs));
            }
        }
        best.unwrap()
    }

    fn backtrack(
        &self,
        budget: u64,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<()> {
        let (s, pairs) = self.pick_start();
        let mut run = Run {
            p: self,
            budget,
            expansions: 0,
            start: s,
            target: 0,
            path: Vec::with_capacity(self.n),
            full: if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 },
        };
        // Unordered pairs with `f` walked first: each undirected cycle once.
        for (f, l) in pairs {
            run.target = l;
            run.path.clear();
            run.path.push(s);
            run.path.push(f);
            let visited = (1u64 << s) | (1u64 << f);
            if let ControlFlow::Break(()) = run.extend(visited, visit)? {
                return Ok(());
            }
        }
        Ok(())
    }

    /// Held–Karp reachability over subsets containing vertex 0.
    fn held_karp(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let size = 1usize << n;
        let mut reach = vec![0u32; size];
        reach[1] = 1;
        for mask in 1..size {
            if mask & 1 == 0 || reach[mask] == 0 {
                continue;
            }
            for v in bits(reach[mask] as u64) {
                let ext = self.sq[v] & !(mask as u64);
                for w in bits(ext) {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
        let full = size - 1;
        let end = bits(reach[full] as u64).find(|&v| self.sq[v] & 1 == 1)?;
        let mut seq = vec![end];
        let mut mask = full;
        let mut cur = end;
        while mask != 1 {
            let prev_mask = mask & !(1 << cur);
            let prev = bits(reach[prev_mask] as u64 & self.sq[cur])
                .next()
                .expect("reachability table is consistent");
            seq.push(prev);
            mask = prev_mask;
            cur = prev;
        }
        seq.reverse();
        Some(seq)
    }
}

struct Run<'a> {
    p: &'a Problem,
    budget: u64,
    expansions: u64,
    start: usize,
    target: usize,
    path: Vec<usize>,
    full: u64,
}

impl Run<'_> {
    fn extend(
        &mut self,
        visited: u64,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let p = self.p;
        let v = *self.path.last().unwrap();
        let prev = self.path[self.path.len() - 2];
        let l = self.target;
        let remaining = self.full & !visited;

        if remaining == 1 << l {
            if p.sq[v] >> l & 1 == 0 || !p.local_ok(v, prev, l) || !p.local_ok(l, v, self.start)
            {
                return Ok(ControlFlow::Continue(()));
            }
            self.path.push(l);
            let flow = if p.global_ok(&self.path) {
                visit(&self.path)
            } else {
                ControlFlow::Continue(())
            };
            self.path.pop();
            return Ok(flow);
        }

        let mut cand = p.sq[v] & remaining & !(1 << l);
        let in_prev = p.in_g(v, prev);
        let take_g = p.allowed[v] >> (in_prev + 1) & 1 == 1;
        let take_sq = p.allowed[v] >> in_prev & 1 == 1;
        cand &= (if take_g { p.g[v] } else { 0 }) | (if take_sq { !p.g[v] } else { 0 });
        let open_req = p.req[v] & !(1 << prev);
        match open_req.count_ones() {
            0 => {}
            1 => cand &= open_req,
            _ => return Ok(ControlFlow::Continue(())),
        }

        for w in bits(cand) {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            // w's own requirements may only name v or still-unvisited vertices.
            if p.req[w] & visited & !(1 << v) != 0 {
                continue;
            }
            let incoming = p.in_g(w, v);
            if p.allowed[w] & (0b11 << incoming) == 0 {
                continue;
            }
            let vis = visited | 1 << w;
            if !self.feasible(vis, w) {
                continue;
            }
            self.path.push(w);
            let flow = self.extend(vis, visit)?;
            self.path.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Degree and connectivity pruning for the unvisited vertices given the
    /// current path end `end`.
    fn feasible(&self, visited: u64, end: usize) -> bool {
        let p = self.p;
        let rest = self.full & !visited;
        let l = self.target;
        let open = rest | 1 << end;
        for r in bits(rest & !(1 << l)) {
            if (p.sq[r] & open).count_ones() < 2 {
                return false;
            }
        }
        if rest & !(1 << l) != 0 && p.sq[l] & (rest & !(1 << l)) == 0 {
            return false;
        }
        // Every unvisited vertex must be reachable from `end` through
        // unvisited vertices.
        let mut seen = 1u64 << end;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= p.sq[u];
            }
            next &= rest & !seen;
            seen |= next;
            frontier = next;
        }
        seen & rest == rest
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::figure1;

    fn g(edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_free_search() {
        let tri = g(&[(0, 1), (1, 2), (0, 2)]);
        for strategy in [Strategy::Backtrack, Strategy::HeldKarp] {
            let c = find_with_strategy(&tri, &CycleConstraint::free(), 1000, strategy)
                .unwrap()
                .unwrap();
            assert_eq!(c.order(), &[0, 1, 2]);
            assert_eq!(c.in_g_edges(), 3);
        }
    }

    #[test]
    fn subdivided_claw_has_no_cycle() {
        let claw = g(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        for strategy in [Strategy::Backtrack, Strategy::HeldKarp] {
            let r = find_with_strategy(&claw, &CycleConstraint::free(), 1 << 20, strategy);
            assert_eq!(r.unwrap(), None);
        }
    }

    #[test]
    fn figure1_required_edges_force_the_drawn_cycle() {
        let f = figure1();
        let c = CycleConstraint::free()
            .require_edge(1, 2)
            .require_edge(2, 3)
            .require_edge(5, 6)
            .require_edge(9, 10)
            .require_edge(8, 9)
            .require_edge(4, 5);
        let cyc = find_ham_cycle_constrained(&f, &c, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(cyc.order(), &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn incidence_requirements_are_respected() {
        let path = g(&[(0, 1), (1, 2)]);
        let both = CycleConstraint::free().with(0, Requirement::BothInG);
        assert_eq!(find_ham_cycle_constrained(&path, &both, 100).unwrap(), None);
        let one = CycleConstraint::free().with(0, Requirement::ExactlyOneInG);
        let c = find_ham_cycle_constrained(&path, &one, 100).unwrap().unwrap();
        assert_eq!(c.in_g_degree(0), 1);
    }

    #[test]
    fn errors_and_budget() {
        let tri = g(&[(0, 1), (1, 2), (0, 2)]);
        let bad = CycleConstraint::free().with(7, Requirement::BothInG);
        assert_eq!(
            find_ham_cycle_constrained(&tri, &bad, 10),
            Err(Error::ConstraintOnMissingVertex(7))
        );
        let clash = CycleConstraint::free().require_edge(0, 1).forbid_edge(1, 0);
        assert_eq!(
            find_ham_cycle_constrained(&tri, &clash, 10),
            Err(Error::ConflictingEdgeRequirement(0, 1))
        );
        assert_eq!(
            find_ham_cycle_constrained(&g(&[(0, 1)]), &CycleConstraint::free(), 10),
            Err(Error::TooSmall)
        );
        let claw = g(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let c = CycleConstraint::free().with(1, Requirement::Free).with(0, Requirement::NoneInG);
        assert_eq!(
            find_ham_cycle_constrained(&claw, &c, 1),
            Err(Error::BudgetExceeded(1))
        );
    }

    #[test]
    fn enumeration_counts_k4_cycles_once() {
        let k4 = g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let n = for_each_ham_cycle(&k4, &CycleConstraint::free(), 1000, |_| {
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 3);
    }

    #[test]
    fn min_in_g_edges_and_neighbor_edge() {
        let c4 = g(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = CycleConstraint::free().with_min_in_g_edges(4);
        let cyc = find_ham_cycle_constrained(&c4, &c, 1000).unwrap().unwrap();
        assert_eq!(cyc.in_g_edges(), 4);
        let star = g(&[(0, 1), (0, 2), (0, 3)]);
        let ne = CycleConstraint::free().with(0, Requirement::NeighborEdge);
        let cyc = find_ham_cycle_constrained(&star, &ne, 1000).unwrap().unwrap();
        assert!(cyc.edges().any(|(u, v, _)| u != 0 && v != 0));
    }
}
