//! Block/cut-vertex decomposition, the block graph Bl(G), and the structural
//! checks the constructions depend on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A node of the block graph: a block (by index) or a cut vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlNode {
    Block(usize),
    Cut(Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    Cyclic,
    Acyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndStatus {
    EndBlock,
    NonEndBlock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockInfo {
    /// Number of cut vertices of G in the block.
    pub degree: usize,
    pub kind: BlockKind,
    pub end_status: EndStatus,
}

/// Blocks, cut vertices and the block graph of a connected graph.
///
/// Blocks are sorted by their sorted vertex lists, so in particular by their
/// minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<BTreeSet<Vertex>>,
    cut_vertices: BTreeSet<Vertex>,
    blocks_of: BTreeMap<Vertex, Vec<usize>>,
}

/// Shape of the block graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlShape {
    /// No node of degree at least three (includes a single block).
    Path,
    StarCenteredAtCutVertex(Vertex),
    StarCenteredAtBlock(usize),
    Other,
}

/// Whether the graph is in the class the construction handles: branch
/// points of Bl(G) are cut vertices, pairwise at block-graph distance >= 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassCheck {
    InClass,
    OutOfClass(ClassViolation),
}

impl ClassCheck {
    pub fn is_in_class(&self) -> bool {
        matches!(self, ClassCheck::InClass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassViolation {
    /// A block node of Bl(G) has degree at least three.
    BlockBranchPoint {
        block: usize,
        vertices: BTreeSet<Vertex>,
        degree: usize,
    },
    /// Two branch cut vertices closer than four in Bl(G).
    CloseBranchPoints { a: Vertex, b: Vertex, distance: usize },
}

impl fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassViolation::BlockBranchPoint {
                vertices, degree, ..
            } => write!(
                f,
                "block {vertices:?} has block-graph degree {degree}; only cut vertices may branch"
            ),
            ClassViolation::CloseBranchPoints { a, b, distance } => write!(
                f,
                "branch points {a} and {b} are at block-graph distance {distance}, below 4"
            ),
        }
    }
}

/// Computes the unique block decomposition of a connected graph.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    if g.vertex_count() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }

    let nbrs: BTreeMap<Vertex, Vec<Vertex>> =
        g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks: Vec<BTreeSet<Vertex>> = Vec::new();

    let root = g.min_vertex().unwrap();
    disc.insert(root, 0);
    low.insert(root, 0);
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
    let mut clock = 1;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if let Some(&w) = nbrs[&v].get(*idx) {
            *idx += 1;
            if let Some(&dw) = disc.get(&w) {
                if Some(w) != parent && dw < disc[&v] {
                    edge_stack.push((v, w));
                    let lv = low.get_mut(&v).unwrap();
                    *lv = (*lv).min(dw);
                }
            } else {
                edge_stack.push((v, w));
                disc.insert(w, clock);
                low.insert(w, clock);
                clock += 1;
                stack.push((w, Some(v), 0));
            }
        } else {
            stack.pop();
            if let Some(p) = parent {
                let lv = low[&v];
                let lp = low.get_mut(&p).unwrap();
                *lp = (*lp).min(lv);
                if lv >= disc[&p] {
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            }
        }
    }

    blocks.sort();
    let mut blocks_of: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            blocks_of.entry(v).or_default().push(i);
        }
    }
    let cut_vertices = blocks_of
        .iter()
        .filter(|(_, bs)| bs.len() >= 2)
        .map(|(&v, _)| v)
        .collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        blocks_of,
    })
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[BTreeSet<Vertex>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &BTreeSet<Vertex> {
        &self.blocks[i]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn cut_vertices(&self) -> &BTreeSet<Vertex> {
        &self.cut_vertices
    }

    pub fn is_cut(&self, v: Vertex) -> bool {
        self.cut_vertices.contains(&v)
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_at(&self, v: Vertex) -> &[usize] {
        self.blocks_of.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Index of the block containing the edge `uv`.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let bu = self.blocks_at(u);
        self.blocks_at(v).iter().copied().find(|b| bu.contains(b))
    }

    pub fn info(&self, i: usize) -> BlockInfo {
        let degree = self.blocks[i]
            .iter()
            .filter(|v| self.cut_vertices.contains(v))
            .count();
        BlockInfo {
            degree,
            kind: if self.blocks[i].len() == 2 {
                BlockKind::Acyclic
            } else {
                BlockKind::Cyclic
            },
            end_status: if degree == 1 {
                EndStatus::EndBlock
            } else {
                EndStatus::NonEndBlock
            },
        }
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.blocks[i].len() > 2
    }

    /// Vertices of block `i` that are not cut vertices of G.
    pub fn non_cut_vertices(&self, i: usize) -> impl Iterator<Item = Vertex> + '_ {
        self.blocks[i]
            .iter()
            .copied()
            .filter(|v| !self.cut_vertices.contains(v))
    }

    pub fn endblocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.info(i).degree == 1)
            .collect()
    }

    /// Number of acyclic non-end blocks containing `v`.
    pub fn t_count(&self, v: Vertex) -> usize {
        self.blocks_at(v)
            .iter()
            .filter(|&&b| {
                let info = self.info(b);
                info.kind == BlockKind::Acyclic && info.end_status == EndStatus::NonEndBlock
            })
            .count()
    }

    pub fn bl_nodes(&self) -> Vec<BlNode> {
        (0..self.blocks.len())
            .map(BlNode::Block)
            .chain(self.cut_vertices.iter().map(|&v| BlNode::Cut(v)))
            .collect()
    }

    pub fn bl_neighbors(&self, node: BlNode) -> Vec<BlNode> {
        match node {
            BlNode::Block(i) => self.blocks[i]
                .iter()
                .filter(|v| self.cut_vertices.contains(v))
                .map(|&v| BlNode::Cut(v))
                .collect(),
            BlNode::Cut(v) => self.blocks_at(v).iter().map(|&b| BlNode::Block(b)).collect(),
        }
    }

    pub fn bl_degree(&self, node: BlNode) -> usize {
        match node {
            BlNode::Block(i) => self.info(i).degree,
            BlNode::Cut(v) => self.blocks_at(v).len(),
        }
    }

    /// Cut vertices whose block-graph degree is at least three.
    pub fn branch_cut_vertices(&self) -> Vec<Vertex> {
        self.cut_vertices
            .iter()
            .copied()
            .filter(|&v| self.blocks_at(v).len() >= 3)
            .collect()
    }

    fn bl_bfs(&self, from: BlNode) -> BTreeMap<BlNode, (usize, Option<BlNode>)> {
        let mut seen = BTreeMap::from([(from, (0, None))]);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = seen[&u].0;
            for w in self.bl_neighbors(u) {
                if !seen.contains_key(&w) {
                    seen.insert(w, (du + 1, Some(u)));
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn bl_distance(&self, a: BlNode, b: BlNode) -> Option<usize> {
        self.bl_bfs(a).get(&b).map(|&(d, _)| d)
    }

    /// The unique block-graph path from `a` to `b`, both included.
    pub fn bl_path(&self, a: BlNode, b: BlNode) -> Option<Vec<BlNode>> {
        let tree = self.bl_bfs(a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = tree.get(&cur)?.1?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Vertex `a` together with the vertices of every block in the component
    /// of Bl(G) − `a` that contains block `via`.
    pub fn hanging_vertices(&self, a: Vertex, via: usize) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::from([a]);
        let mut seen = BTreeSet::from([BlNode::Cut(a), BlNode::Block(via)]);
        let mut queue = VecDeque::from([BlNode::Block(via)]);
        while let Some(node) = queue.pop_front() {
            if let BlNode::Block(i) = node {
                out.extend(self.blocks[i].iter().copied());
            }
            for w in self.bl_neighbors(node) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Maximal block-graph paths whose ends have degree other than two and
    /// whose interior nodes have degree two, in lexicographic order.
    pub fn branches(&self) -> Vec<Vec<BlNode>> {
        let mut found = BTreeSet::new();
        for start in self.bl_nodes() {
            if self.bl_degree(start) == 2 {
                continue;
            }
            for first in self.bl_neighbors(start) {
                let mut path = vec![start, first];
                while self.bl_degree(*path.last().unwrap()) == 2 {
                    let last = *path.last().unwrap();
                    let prev = path[path.len() - 2];
                    let next = self
                        .bl_neighbors(last)
                        .into_iter()
                        .find(|&w| w != prev)
                        .unwrap();
                    path.push(next);
                }
                let mut rev = path.clone();
                rev.reverse();
                found.insert(path.min(rev));
            }
        }
        found.into_iter().collect()
    }

    pub fn shape(&self) -> BlShape {
        let high: Vec<BlNode> = self
            .bl_nodes()
            .into_iter()
            .filter(|&n| self.bl_degree(n) >= 3)
            .collect();
        match high.as_slice() {
            [] => BlShape::Path,
            [BlNode::Cut(v)] => BlShape::StarCenteredAtCutVertex(*v),
            [BlNode::Block(b)] => BlShape::StarCenteredAtBlock(*b),
            _ => BlShape::Other,
        }
    }

    /// The class conditions, reporting the first violation found: a branching
    /// block before a close pair of branch points, then by node order.
    pub fn class_check(&self) -> ClassCheck {
        for i in 0..self.blocks.len() {
            let degree = self.info(i).degree;
            if degree >= 3 {
                return ClassCheck::OutOfClass(ClassViolation::BlockBranchPoint {
                    block: i,
                    vertices: self.blocks[i].clone(),
                    degree,
                });
            }
        }
        let branch = self.branch_cut_vertices();
        for (k, &a) in branch.iter().enumerate() {
            let dist = self.bl_bfs(BlNode::Cut(a));
            for &b in &branch[k + 1..] {
                let d = dist[&BlNode::Cut(b)].0;
                if d < 4 {
                    return ClassCheck::OutOfClass(ClassViolation::CloseBranchPoints {
                        a,
                        b,
                        distance: d,
                    });
                }
            }
        }
        ClassCheck::InClass
    }
}

/// `t_G(a)`: number of acyclic non-end blocks of `g` containing `a`.
pub fn t_count(g: &Graph, a: Vertex) -> Result<usize> {
    if !g.contains(a) {
        return Err(Error::VertexNotFound(a));
    }
    Ok(decompose(g)?.t_count(a))
}

/// Checks the class conditions after the connectivity and size checks.
pub fn check_main_preconditions(g: &Graph) -> Result<ClassCheck> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.vertex_count() < 3 {
        return Err(Error::TooSmall);
    }
    Ok(decompose(g)?.class_check())
}

/// Classifies the shape of Bl(G).
pub fn is_subdivided_star(bd: &BlockDecomposition) -> BlShape {
    bd.shape()
}

/// Branches of Bl(G).
pub fn branches(bd: &BlockDecomposition) -> Vec<Vec<BlNode>> {
    bd.branches()
}
