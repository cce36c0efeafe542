//! Instance families: the two drawn fixtures, parameterized block
//! structures, and seeded random graphs.
//!
//! Random families use `ChaCha8Rng` seeded from a `u64`, which produces the
//! same stream on every platform.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The drawn counterexample: three triangles sharing `v1`
/// (`v1 v2 v4`, `v1 v5 v7`, `v1 v8 v9`) and pendant edges `v2 v3`,
/// `v5 v6`, `v9 v10`. Vertex `vi` has id `i`.
pub fn figure1() -> Graph {
    Graph::from_edges([
        (1, 2),
        (1, 4),
        (2, 4),
        (2, 3),
        (1, 5),
        (1, 7),
        (5, 7),
        (5, 6),
        (1, 8),
        (1, 9),
        (8, 9),
        (9, 10),
    ])
    .expect("static edge list")
}

/// Labels `v1 .. v10` for [`figure1`].
pub fn figure1_label(v: Vertex) -> String {
    format!("v{v}")
}

/// Vertex ids of the Figure 2 frame.
pub mod figure2_ids {
    pub const LEFT: u32 = 1;
    pub const RIGHT: u32 = 2;
    /// Attachment vertices `c1 .. c5`, top to bottom as drawn.
    pub const ATTACH: [u32; 5] = [3, 4, 5, 6, 7];
}

/// The drawn sharpness family. The central block is `K_{2,5}`: the two side
/// vertices `L = 1` and `R = 2` are both joined to each attachment vertex
/// `c1 .. c5` (ids `3 .. 7`). A clique `K_{n_i}` is attached at `c_i`,
/// sharing that vertex, so it adds `n_i - 1` new vertices numbered from 8 on.
pub fn figure2(sizes: [usize; 5]) -> Result<Graph> {
    use figure2_ids::*;
    if sizes.iter().any(|&s| s < 2) {
        return Err(Error::BadParams("figure2 needs five clique sizes >= 2".into()));
    }
    let mut g = Graph::new();
    for &c in &ATTACH {
        g.add_edge(LEFT, c)?;
        g.add_edge(RIGHT, c)?;
    }
    let mut next = 8;
    for (&c, &size) in ATTACH.iter().zip(&sizes) {
        let mut clique = vec![c];
        for _ in 1..size {
            clique.push(next);
            next += 1;
        }
        add_clique(&mut g, &clique)?;
    }
    Ok(g)
}

fn add_clique(g: &mut Graph, vs: &[Vertex]) -> Result<()> {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.add_edge(u, v)?;
        }
    }
    Ok(())
}

/// Shape of one block in a parameterized family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockSpec {
    /// Complete graph on `n >= 2` vertices (`n = 2` is a single edge).
    Clique(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
}

impl BlockSpec {
    pub fn size(self) -> usize {
        match self {
            BlockSpec::Clique(n) | BlockSpec::Cycle(n) => n,
        }
    }
}

impl FromStr for BlockSpec {
    type Err = Error;

    /// `k<n>` or bare `<n>` for a clique, `c<n>` for a cycle.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadParams(format!("bad block spec {s:?}"));
        let (kind, digits) = match s.chars().next() {
            Some('k' | 'K') => ('k', &s[1..]),
            Some('c' | 'C') => ('c', &s[1..]),
            _ => ('k', s),
        };
        let n: usize = digits.parse().map_err(|_| bad())?;
        match kind {
            'k' if n >= 2 => Ok(BlockSpec::Clique(n)),
            'c' if n >= 3 => Ok(BlockSpec::Cycle(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockSpec::Clique(n) => write!(f, "k{n}"),
            BlockSpec::Cycle(n) => write!(f, "c{n}"),
        }
    }
}

/// Parses a comma-separated list of block specs.
pub fn parse_block_list(s: &str) -> Result<Vec<BlockSpec>> {
    s.split(',').map(str::parse).collect()
}

/// Adds a block on `entry` plus fresh vertices from `*next`; returns the exit
/// vertex (the last for cliques, the antipode for cycles).
fn add_block(g: &mut Graph, spec: BlockSpec, entry: Vertex, next: &mut Vertex) -> Result<Vertex> {
    let mut vs = vec![entry];
    for _ in 1..spec.size() {
        vs.push(*next);
        *next += 1;
    }
    match spec {
        BlockSpec::Clique(_) => {
            add_clique(g, &vs)?;
            Ok(*vs.last().unwrap())
        }
        BlockSpec::Cycle(n) => {
            for i in 0..n {
                g.add_edge(vs[i], vs[(i + 1) % n])?;
            }
            Ok(vs[n / 2])
        }
    }
}

/// A graph whose block graph is a path with the given blocks in order,
/// starting at vertex 0.
pub fn block_path(blocks: &[BlockSpec]) -> Result<Graph> {
    if blocks.is_empty() {
        return Err(Error::BadParams("block path needs at least one block".into()));
    }
    let mut g = Graph::with_vertices([0]);
    let mut next = 1;
    let mut at = 0;
    for &b in blocks {
        at = add_block(&mut g, b, at, &mut next)?;
    }
    Ok(g)
}

/// A center vertex 0 with one block path hanging from it per leg.
pub fn star_cut(legs: &[Vec<BlockSpec>]) -> Result<Graph> {
    if legs.iter().any(Vec::is_empty) || legs.is_empty() {
        return Err(Error::BadParams("every leg needs at least one block".into()));
    }
    let mut g = Graph::with_vertices([0]);
    let mut next = 1;
    for leg in legs {
        let mut at = 0;
        for &b in leg {
            at = add_block(&mut g, b, at, &mut next)?;
        }
    }
    Ok(g)
}

/// Seeded connected graph on `n` vertices: a random recursive tree plus each
/// remaining pair with probability 1/5.
pub fn random_connected(seed: u64, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("random graph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices([0]);
    for v in 1..n as u32 {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v)?;
    }
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !g.has_edge(u, v) && rng.gen_bool(0.2) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A command-line instance family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Figure1,
    Figure2([usize; 5]),
    BlockPath(Vec<BlockSpec>),
    StarCut(Vec<Vec<BlockSpec>>),
    Random { seed: u64, n: usize },
}

impl FromStr for Family {
    type Err = Error;

    /// `figure1`, `figure2:n1,..,n5`, `block-path:k3,2,c5`,
    /// `star-cut:2,2/k3/2` (legs separated by `/`), `random:seed,n`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let bad = |msg: &str| Error::BadParams(format!("{s}: {msg}"));
        match name {
            "figure1" => Ok(Family::Figure1),
            "figure2" => {
                let sizes: Vec<usize> = params
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| bad("sizes must be integers")))
                    .collect::<Result<_>>()?;
                let sizes: [usize; 5] = sizes
                    .try_into()
                    .map_err(|_| bad("expected five clique sizes"))?;
                Ok(Family::Figure2(sizes))
            }
            "block-path" => Ok(Family::BlockPath(parse_block_list(params)?)),
            "star-cut" => Ok(Family::StarCut(
                params.split('/').map(parse_block_list).collect::<Result<_>>()?,
            )),
            "random" => {
                let (seed, n) = params.split_once(',').ok_or_else(|| bad("expected seed,n"))?;
                Ok(Family::Random {
                    seed: seed.trim().parse().map_err(|_| bad("bad seed"))?,
                    n: n.trim().parse().map_err(|_| bad("bad n"))?,
                })
            }
            _ => Err(bad("unknown family")),
        }
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Figure1 => Ok(figure1()),
            Family::Figure2(sizes) => figure2(*sizes),
            Family::BlockPath(blocks) => block_path(blocks),
            Family::StarCut(legs) => star_cut(legs),
            Family::Random { seed, n } => random_connected(*seed, *n),
        }
    }

    /// Graph name written into the edge-list header.
    pub fn name(&self) -> String {
        match self {
            Family::Figure1 => "figure1".into(),
            Family::Figure2(s) => format!("figure2_{}_{}_{}_{}_{}", s[0], s[1], s[2], s[3], s[4]),
            Family::BlockPath(_) => "block_path".into(),
            Family::StarCut(_) => "star_cut".into(),
            Family::Random { seed, n } => format!("random_{seed}_{n}"),
        }
    }

    /// Vertex label used when writing the family out.
    pub fn label(&self, v: Vertex) -> String {
        match self {
            Family::Figure1 => figure1_label(v),
            Family::Figure2(_) => match v {
                figure2_ids::LEFT => "L".into(),
                figure2_ids::RIGHT => "R".into(),
                3..=7 => format!("c{}", v - 2),
                _ => format!("k{v}"),
            },
            _ => v.to_string(),
        }
    }
}

/// Seeded generators for property tests and the acceptance suite.
pub mod random {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A 2-connected graph on `n >= 3` vertices `0..n`: a Hamilton cycle in
    /// shuffled order plus random chords.
    pub fn block(rng: &mut ChaCha8Rng, n: usize, chord_p: f64) -> Graph {
        let mut order: Vec<Vertex> = (0..n as u32).collect();
        order.shuffle(rng);
        let mut g = Graph::new();
        for i in 0..n {
            g.add_edge(order[i], order[(i + 1) % n]).unwrap();
        }
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if !g.has_edge(u, v) && rng.gen_bool(chord_p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Attaches a copy of `block` (vertices `0..k`) to `g` so that block
    /// vertex `root` becomes `at`; other vertices get fresh labels. Returns
    /// the new labels of the block vertices, indexed by block vertex.
    pub fn attach(g: &mut Graph, block: &Graph, root: Vertex, at: Vertex) -> Vec<Vertex> {
        let mut next = g.fresh_vertex().max(at + 1);
        let map: Vec<Vertex> = block
            .vertices()
            .map(|v| {
                if v == root {
                    at
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        g.add_vertex(at);
        for (u, v) in block.edges() {
            g.add_edge(map[u as usize], map[v as usize]).unwrap();
        }
        map
    }

    /// A random block: an edge with probability `p_edge`, otherwise a
    /// 2-connected graph on 3..=max_size vertices.
    pub fn any_block(rng: &mut ChaCha8Rng, max_size: usize, p_edge: f64) -> Graph {
        if max_size < 3 || rng.gen_bool(p_edge) {
            Graph::from_edges([(0, 1)]).unwrap()
        } else {
            let n = rng.gen_range(3..=max_size);
            block(rng, n, 0.3)
        }
    }

    /// Hangs a chain of `len` random blocks from `at`; returns the far
    /// attachment vertex of the last block.
    pub fn chain(
        g: &mut Graph,
        rng: &mut ChaCha8Rng,
        at: Vertex,
        blocks: &[Graph],
    ) -> Vertex {
        let mut cur = at;
        for b in blocks {
            let root = rng.gen_range(0..b.vertex_count() as u32);
            let map = attach(g, b, root, cur);
            let others: Vec<Vertex> = map.iter().copied().filter(|&v| v != cur).collect();
            cur = *others.choose(rng).unwrap();
        }
        cur
    }

    /// Random graph whose block graph is a path, with at most `max_n`
    /// vertices and at least three.
    pub fn block_path(rng: &mut ChaCha8Rng, max_n: usize, max_block: usize) -> Graph {
        loop {
            let mut g = Graph::with_vertices([0]);
            let mut blocks = Vec::new();
            let mut total = 1;
            let k = rng.gen_range(1..=4);
            for _ in 0..k {
                let b = any_block(rng, max_block, 0.4);
                if total + b.vertex_count() - 1 > max_n {
                    break;
                }
                total += b.vertex_count() - 1;
                blocks.push(b);
            }
            chain(&mut g, rng, 0, &blocks);
            if g.vertex_count() >= 3 {
                return g;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::blocks::decompose;

    #[test]
    fn figure1_counts() {
        let g = figure1();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 12);
        let bd = decompose(&g).unwrap();
        assert_eq!(bd.cut_vertices(), &BTreeSet::from([1, 2, 5, 9]));
    }

    #[test]
    fn figure2_frame() {
        let g = figure2([3, 3, 3, 3, 3]).unwrap();
        assert_eq!(g.vertex_count(), 7 + 10);
        assert_eq!(g.edge_count(), 10 + 15);
        assert!(figure2([3, 3, 1, 3, 3]).is_err());
    }

    #[test]
    fn block_path_of_edges_is_a_path() {
        let p = block_path(&parse_block_list("2,2,2").unwrap()).unwrap();
        assert_eq!(p, Graph::from_edges([(0, 1), (1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("figure1".parse::<Family>().unwrap(), Family::Figure1);
        assert_eq!(
            "figure2:2,3,4,5,6".parse::<Family>().unwrap(),
            Family::Figure2([2, 3, 4, 5, 6])
        );
        assert_eq!(
            "star-cut:2,2/k3/c4".parse::<Family>().unwrap(),
            Family::StarCut(vec![
                vec![BlockSpec::Clique(2), BlockSpec::Clique(2)],
                vec![BlockSpec::Clique(3)],
                vec![BlockSpec::Cycle(4)],
            ])
        );
        assert!("random:7".parse::<Family>().is_err());
        assert!("block-path:c2".parse::<Family>().is_err());
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn random_is_deterministic_and_connected() {
        let a = random_connected(7, 9).unwrap();
        let b = random_connected(7, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(a.vertex_count(), 9);
    }

    #[test]
    fn random_block_path_has_path_block_graph() {
        let mut rng = random::rng(3);
        for _ in 0..50 {
            let g = random::block_path(&mut rng, 12, 5);
            assert!(g.vertex_count() <= 12);
            let bd = decompose(&g).unwrap();
            assert_eq!(bd.shape(), crate::blocks::BlShape::Path);
        }
    }
}
