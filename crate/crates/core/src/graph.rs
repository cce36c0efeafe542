//! Simple undirected graphs and the operations every other module builds on:
//! the square, the connection of two graphs over a vertex, distances and
//! induced subgraphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Vertex identifier. Opaque to the algorithms apart from its total order,
/// which drives every deterministic tie-break.
pub type Vertex = u32;

/// Default vertex cap for the exponential routines (isomorphism, exact search).
pub const DEFAULT_CAP: usize = 12;

/// A simple undirected graph with ordered vertex and neighbor sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list. Endpoints are added as vertices;
    /// repeated edges collapse.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                if let Some(s) = self.adj.get_mut(&u) {
                    s.remove(&v);
                }
            }
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Neighborhood of `v`; empty for an absent vertex.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn min_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next().copied()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Smallest label strictly above every vertex of the graph.
    pub fn fresh_vertex(&self) -> Vertex {
        self.max_vertex().map_or(0, |m| m + 1)
    }

    fn require(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexNotFound(v))
        }
    }

    /// Breadth-first distances from `source` to every reachable vertex.
    pub fn bfs_distances(&self, source: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::new();
        if !self.contains(source) {
            return dist;
        }
        dist.insert(source, 0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for w in self.neighbors(u) {
                if !dist.contains_key(&w) {
                    dist.insert(w, du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.require(u)?;
        self.require(v)?;
        Ok(self.bfs_distances(u).get(&v).copied())
    }

    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: BTreeSet<Vertex> = self.bfs_distances(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.min_vertex() {
            None => true,
            Some(v) => self.bfs_distances(v).len() == self.vertex_count(),
        }
    }

    /// The square: same vertices, adjacency at distance one or two.
    pub fn square(&self) -> Graph {
        let mut sq = Graph::with_vertices(self.vertices());
        for (&u, nbrs) in &self.adj {
            for &w in nbrs {
                sq.adj.get_mut(&u).unwrap().insert(w);
                for &z in &self.adj[&w] {
                    if z != u {
                        sq.adj.get_mut(&u).unwrap().insert(z);
                    }
                }
            }
        }
        sq
    }

    /// Subgraph induced by `set`.
    pub fn induced(&self, set: &BTreeSet<Vertex>) -> Result<Graph> {
        for &v in set {
            self.require(v)?;
        }
        let adj = set
            .iter()
            .map(|&v| {
                let nbrs = self.adj[&v].intersection(set).copied().collect();
                (v, nbrs)
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Copy of the graph with every vertex `v` renamed to `f(v)`; `f` must be
    /// injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Graph {
        let adj = self
            .adj
            .iter()
            .map(|(&v, nbrs)| (f(v), nbrs.iter().map(|&w| f(w)).collect()))
            .collect();
        Graph { adj }
    }

    /// Relabels the vertices to `0..n` preserving their order.
    pub fn compact(&self) -> Graph {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        self.relabel(|v| index[&v])
    }

    /// Union of two graphs (vertex sets may overlap).
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for (&v, nbrs) in &other.adj {
            g.adj.entry(v).or_default().extend(nbrs.iter().copied());
        }
        g
    }
}

/// The connection `g1[x1 = x2]g2`: disjoint union with `x1` and `x2`
/// identified into the fresh vertex `x`, which inherits both neighborhoods.
pub fn connect(g1: &Graph, x1: Vertex, g2: &Graph, x2: Vertex, x: Vertex) -> Result<Graph> {
    g1.require(x1)?;
    g2.require(x2)?;
    if let Some(v) = g1.vertices().find(|&v| g2.contains(v)) {
        return Err(Error::NonDisjointVertexSets(v));
    }
    if g1.contains(x) || g2.contains(x) {
        return Err(Error::FreshLabelCollision(x));
    }
    let rename1 = |v: Vertex| if v == x1 { x } else { v };
    let rename2 = |v: Vertex| if v == x2 { x } else { v };
    Ok(g1.relabel(rename1).union(&g2.relabel(rename2)))
}

/// Isomorphism test for graphs up to `cap` vertices.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertex_count() > cap {
            return Err(Error::SizeCapExceeded {
                n: g.vertex_count(),
                cap,
            });
        }
    }
    Ok(isomorphic(g1, g2))
}

/// Uncapped isomorphism test: degree-invariant pruning plus backtracking.
/// Intended for graphs with at most 64 vertices.
pub(crate) fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.vertex_count();
    if n == 0 {
        return true;
    }
    let a = Masks::new(g1);
    let b = Masks::new(g2);
    let inv_a = a.invariants();
    let inv_b = b.invariants();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }

    let order = a.search_order();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    fn extend(
        depth: usize,
        order: &[usize],
        a: &Masks,
        b: &Masks,
        inv_a: &[Vec<usize>],
        inv_b: &[Vec<usize>],
        map: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..b.n {
            if *used >> w & 1 == 1 || inv_a[v] != inv_b[w] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let e1 = a.adj[v] >> u & 1;
                let e2 = b.adj[w] >> map[u] & 1;
                e1 == e2
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if extend(depth + 1, order, a, b, inv_a, inv_b, map, used) {
                return true;
            }
            *used &= !(1 << w);
            map[v] = usize::MAX;
        }
        false
    }
    extend(0, &order, &a, &b, &inv_a, &inv_b, &mut map, &mut used)
}

/// Bitmask adjacency over the compacted vertex indices.
pub(crate) struct Masks {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Self {
        let index: BTreeMap<Vertex, usize> =
            g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![0u64; g.vertex_count()];
        for (u, v) in g.edges() {
            adj[index[&u]] |= 1 << index[&v];
            adj[index[&v]] |= 1 << index[&u];
        }
        Masks {
            n: g.vertex_count(),
            adj,
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Per-vertex invariant: degree, sorted neighbor degrees, triangle count,
    /// then counts of vertices at each BFS distance.
    pub fn invariants(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|v| {
                let mut inv = vec![self.degree(v)];
                let mut nd: Vec<usize> = bits(self.adj[v]).map(|u| self.degree(u)).collect();
                nd.sort_unstable();
                inv.extend(nd);
                let tri: usize = bits(self.adj[v])
                    .map(|u| (self.adj[u] & self.adj[v]).count_ones() as usize)
                    .sum();
                inv.push(usize::MAX);
                inv.push(tri / 2);
                let mut seen = 1u64 << v;
                let mut frontier = 1u64 << v;
                while frontier != 0 {
                    let mut next = 0u64;
                    for u in bits(frontier) {
                        next |= self.adj[u];
                    }
                    next &= !seen;
                    seen |= next;
                    if next != 0 {
                        inv.push(next.count_ones() as usize);
                    }
                    frontier = next;
                }
                inv
            })
            .collect()
    }

    /// Vertex order for backtracking: each component in BFS order from its
    /// highest-degree vertex, so that most vertices have mapped neighbors.
    fn search_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut placed = 0u64;
        while order.len() < self.n {
            let root = (0..self.n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            placed |= 1 << root;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for w in bits(self.adj[u]) {
                    if placed >> w & 1 == 0 {
                        placed |= 1 << w;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
