//! Exhaustive lists of small connected graphs, one per isomorphism class.
//!
//! Graphs on `n` vertices come from those on `n - 1` by adding vertex `n - 1`
//! with every non-empty neighbor set. Every connected graph has a vertex
//! whose removal keeps it connected, so nothing is missed. Duplicates are
//! dropped by bucketing on vertex invariants and testing isomorphism within a
//! bucket.

use std::collections::HashMap;

use crate::engine::block_cycle::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{isomorphic, Graph, Masks, Vertex};

/// Largest order accepted; there are 261080 connected graphs on 9 vertices.
pub const MAX_ENUMERATION_ORDER: usize = 9;

type Key = (usize, Vec<Vec<usize>>);

fn key(g: &Graph) -> Key {
    let mut inv = Masks::new(g).invariants();
    inv.sort_unstable();
    (g.edge_count(), inv)
}

/// All connected graphs on vertices `0 .. n`, up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::BadParams(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}"
        )));
    }
    let mut level = vec![Graph::with_vertices([0])];
    for m in 1..n {
        let new = m as Vertex;
        let mut seen: HashMap<Key, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &level {
            for subset in 1u32..(1 << m) {
                let mut g = base.clone();
                for u in 0..m as Vertex {
                    if subset >> u & 1 == 1 {
                        g.add_edge(u, new).expect("distinct endpoints");
                    }
                }
                let bucket = seen.entry(key(&g)).or_default();
                if bucket.iter().any(|&i| isomorphic(&next[i], &g)) {
                    continue;
                }
                bucket.push(next.len());
                next.push(g);
            }
        }
        level = next;
    }
    Ok(level)
}

/// Connected graphs on 1 through `max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

/// 2-connected graphs on `n >= 3` vertices, up to isomorphism.
pub fn two_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(n)?
        .into_iter()
        .filter(is_two_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Connected graphs: 1, 1, 2, 6, 21, 112, 853.
        let want = [1, 1, 2, 6, 21, 112, 853];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).unwrap().len(), w, "n = {}", i + 1);
        }
    }

    #[test]
    fn two_connected_counts() {
        // 2-connected graphs: 1, 3, 10, 56 on 3..6 vertices.
        let want = [1, 3, 10, 56];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(two_connected_graphs(i + 3).unwrap().len(), w);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(MAX_ENUMERATION_ORDER + 1).is_err());
    }
}
