//! Shared inputs for the benchmarks.

use hamsq_core::generate::{block_path, BlockSpec};
use hamsq_core::Graph;

/// A block path of `len` triangles.
pub fn triangle_chain(len: usize) -> Graph {
    block_path(&vec![BlockSpec::Clique(3); len]).expect("valid block list")
}
