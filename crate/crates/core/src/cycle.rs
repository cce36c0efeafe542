use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Whether a cycle edge of G² is an edge of G or only a distance-two shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    InG,
    InSquareOnly,
}

/// A hamiltonian cycle of a square, stored in canonical form: it starts at
/// its minimum vertex and continues toward the smaller of that vertex's two
/// cycle neighbors. `provenance[i]` describes the pair
/// `(order[i], order[(i + 1) % n])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HamCycle {
    order: Vec<Vertex>,
    provenance: Vec<Provenance>,
}

/// Rotates and possibly reverses a cyclic sequence into canonical form.
pub fn canonical_order(seq: &[Vertex]) -> Vec<Vertex> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| seq[i]).unwrap();
    let next = seq[(start + 1) % n];
    let prev = seq[(start + n - 1) % n];
    if n < 3 || next <= prev {
        (0..n).map(|k| seq[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| seq[(start + n - k) % n]).collect()
    }
}

impl HamCycle {
    /// Canonicalizes `seq` and records provenance against `g`. Performs no
    /// validation; use [`HamCycle::try_new`] for that.
    pub fn new(g: &Graph, seq: &[Vertex]) -> Self {
        let order = canonical_order(seq);
        let n = order.len();
        let provenance = (0..n)
            .map(|i| {
                if g.has_edge(order[i], order[(i + 1) % n]) {
                    Provenance::InG
                } else {
                    Provenance::InSquareOnly
                }
            })
            .collect();
        HamCycle { order, provenance }
    }

    /// Like [`HamCycle::new`] but rejects sequences that are not hamiltonian
    /// cycles of the square of `g`.
    pub fn try_new(g: &Graph, seq: &[Vertex]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::TooSmall);
        }
        let distinct: BTreeSet<Vertex> = seq.iter().copied().collect();
        if distinct.len() != seq.len() || distinct != g.vertex_set() {
            return Err(Error::Defect(format!(
                "sequence of {} vertices does not cover the {} vertices of the graph exactly once",
                seq.len(),
                g.vertex_count()
            )));
        }
        let n = seq.len();
        for i in 0..n {
            let (u, v) = (seq[i], seq[(i + 1) % n]);
            let close = g.has_edge(u, v) || g.neighbors(u).any(|w| g.has_edge(w, v));
            if !close {
                return Err(Error::Defect(format!(
                    "consecutive vertices {u} and {v} are at distance more than two"
                )));
            }
        }
        Ok(Self::new(g, seq))
    }

    /// Assembles a cycle from stored parts without canonicalizing or checking
    /// anything. Used when reading certificates back for verification.
    pub fn from_parts(order: Vec<Vertex>, provenance: Vec<Provenance>) -> Self {
        HamCycle { order, provenance }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn position(&self, v: Vertex) -> Option<usize> {
        self.order.iter().position(|&u| u == v)
    }

    /// Cycle edges as `(u, v, provenance)` in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Provenance)> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| (self.order[i], self.order[(i + 1) % n], self.provenance[i]))
    }

    /// Undirected edge set, each edge as `(min, max)`.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().map(|(u, v, _)| (u.min(v), u.max(v))).collect()
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges()
            .any(|(a, b, _)| (a == u && b == v) || (a == v && b == u))
    }

    /// The two cycle neighbors of `v` as `(predecessor, successor)` in the
    /// stored orientation.
    pub fn neighbors(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        let n = self.order.len();
        let i = self.position(v)?;
        Some((self.order[(i + n - 1) % n], self.order[(i + 1) % n]))
    }

    /// Provenance of the cycle edge between `u` and `v`, if it is one.
    pub fn edge_provenance(&self, u: Vertex, v: Vertex) -> Option<Provenance> {
        self.edges()
            .find(|&(a, b, _)| (a == u && b == v) || (a == v && b == u))
            .map(|(_, _, p)| p)
    }

    /// Number of cycle edges at `v` whose provenance is `InG` (0, 1 or 2).
    pub fn in_g_degree(&self, v: Vertex) -> usize {
        let n = self.order.len();
        let Some(i) = self.position(v) else { return 0 };
        [self.provenance[(i + n - 1) % n], self.provenance[i]]
            .iter()
            .filter(|&&p| p == Provenance::InG)
            .count()
    }

    /// Number of cycle edges with provenance `InG`.
    pub fn in_g_edges(&self) -> usize {
        self.provenance
            .iter()
            .filter(|&&p| p == Provenance::InG)
            .count()
    }

    /// The vertices in cyclic order starting at `start` and continuing
    /// toward `next`, which must be a cycle neighbor of `start`.
    pub(crate) fn walk_from(&self, start: Vertex, next: Vertex) -> Vec<Vertex> {
        let n = self.order.len();
        let i = self.position(start).expect("start vertex on cycle");
        let forward = self.order[(i + 1) % n] == next;
        debug_assert!(forward || self.order[(i + n - 1) % n] == next);
        (0..n)
            .map(|k| {
                if forward {
                    self.order[(i + k) % n]
                } else {
                    self.order[(i + n - k) % n]
                }
            })
            .collect()
    }
}
