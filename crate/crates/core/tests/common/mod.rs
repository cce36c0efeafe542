//! Reference checks written from the definitions, without calling the
//! crate's algorithms. Graphs here are small (at most 20 vertices).
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hamsq_core::{Graph, Vertex};

/// Vertex list and adjacency bitmasks of `g` and of `g`², over indices.
pub struct Masks {
    pub verts: Vec<Vertex>,
    pub adj: Vec<u32>,
    pub sq: Vec<u32>,
}

pub fn masks(g: &Graph) -> Masks {
    let verts: Vec<Vertex> = g.vertices().collect();
    assert!(verts.len() <= 20, "reference oracle is for small graphs");
    let idx = |v: Vertex| verts.iter().position(|&w| w == v).unwrap();
    let mut adj = vec![0u32; verts.len()];
    for (u, v) in g.edges() {
        adj[idx(u)] |= 1 << idx(v);
        adj[idx(v)] |= 1 << idx(u);
    }
    let sq = (0..verts.len())
        .map(|i| {
            let mut m = adj[i];
            for j in 0..verts.len() {
                if adj[i] >> j & 1 == 1 {
                    m |= adj[j];
                }
            }
            m & !(1 << i)
        })
        .collect();
    Masks { verts, adj, sq }
}

/// Held–Karp over the square: `reach[mask]` is the set of end vertices of
/// paths that start at vertex 0 and cover exactly `mask`.
pub fn square_hamiltonian(g: &Graph) -> bool {
    let m = masks(g);
    let n = m.verts.len();
    if n < 3 {
        return false;
    }
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in (1..1usize << n).step_by(2) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let mut ext = 0u32;
        for i in 0..n {
            if ends >> i & 1 == 1 {
                ext |= m.sq[i];
            }
        }
        ext &= !(mask as u32);
        for j in 0..n {
            if ext >> j & 1 == 1 {
                reach[mask | 1 << j] |= 1 << j;
            }
        }
    }
    reach[(1 << n) - 1] & m.sq[0] != 0
}

/// Every hamiltonian cycle of the square by brute force over permutations,
/// each undirected cycle once, starting at the smallest vertex.
pub fn all_square_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    let m = masks(g);
    let n = m.verts.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    fn go(m: &Masks, path: &mut Vec<usize>, used: u32, out: &mut Vec<Vec<Vertex>>) {
        let n = m.verts.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            if m.sq[last] & 1 == 1 && path[1] < last {
                out.push(path.iter().map(|&i| m.verts[i]).collect());
            }
            return;
        }
        for j in 1..n {
            if used >> j & 1 == 0 && m.sq[last] >> j & 1 == 1 {
                path.push(j);
                go(m, path, used | 1 << j, out);
                path.pop();
            }
        }
    }
    go(&m, &mut vec![0], 1, &mut out);
    out
}

fn within_two(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.has_edge(u, v) || g.neighbors(u).any(|w| g.has_edge(w, v))
}

/// Checks that `order` is a hamiltonian cycle of `g`².
pub fn check_cycle(g: &Graph, order: &[Vertex]) -> Result<(), String> {
    let n = order.len();
    if n < 3 || n != g.vertex_count() {
        return Err(format!("cycle has {n} vertices, graph {}", g.vertex_count()));
    }
    let set: BTreeSet<Vertex> = order.iter().copied().collect();
    if set.len() != n || set != g.vertices().collect() {
        return Err(format!("{order:?} is not a permutation of the vertices"));
    }
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if !within_two(g, u, v) {
            return Err(format!("{u} and {v} are not within distance two"));
        }
    }
    Ok(())
}

/// Cycle neighbors of `v` in `order`.
pub fn cycle_neighbors(order: &[Vertex], v: Vertex) -> (Vertex, Vertex) {
    let n = order.len();
    let i = order.iter().position(|&w| w == v).expect("vertex on cycle");
    (order[(i + n - 1) % n], order[(i + 1) % n])
}

/// Number of the two cycle edges at `v` that are edges of `g`.
pub fn in_g_at(g: &Graph, order: &[Vertex], v: Vertex) -> usize {
    let (p, s) = cycle_neighbors(order, v);
    usize::from(g.has_edge(v, p)) + usize::from(g.has_edge(v, s))
}

pub fn cycle_edges(order: &[Vertex]) -> BTreeSet<(Vertex, Vertex)> {
    let n = order.len();
    (0..n)
        .map(|i| {
            let (u, v) = (order[i], order[(i + 1) % n]);
            (u.min(v), u.max(v))
        })
        .collect()
}

/// Whether `g` minus the vertices in `removed` and the edge `skip` is
/// connected.
fn connected_without(g: &Graph, removed: &[Vertex], skip: Option<(Vertex, Vertex)>) -> bool {
    let live: Vec<Vertex> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let Some(&start) = live.first() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            let skipped = skip.is_some_and(|(a, b)| (a, b) == (u, w) || (b, a) == (u, w));
            if !removed.contains(&w) && !skipped && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == live.len()
}

pub fn cut_vertices(g: &Graph) -> BTreeSet<Vertex> {
    g.vertices().filter(|&v| !connected_without(g, &[v], None)).collect()
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && connected_without(g, &[], None) && cut_vertices(g).is_empty()
}

pub fn is_bridge(g: &Graph, u: Vertex, v: Vertex) -> bool {
    !connected_without(g, &[], Some((u, v)))
}

/// Number of acyclic non-end blocks at `a`: bridges `a w` where `w` is not
/// a leaf, provided `a` is not a leaf itself.
pub fn t_of(g: &Graph, a: Vertex) -> usize {
    if g.degree(a) < 2 {
        return 0;
    }
    g.neighbors(a)
        .filter(|&w| is_bridge(g, a, w) && g.degree(w) >= 2)
        .count()
}
