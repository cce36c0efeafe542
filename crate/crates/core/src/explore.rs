//! Search for non-hamiltonian squares among graphs whose block graph is a
//! star centered at a 2-connected block.
//!
//! Centers are all 2-connected graphs up to a given order. Each instance
//! hangs short legs (a pendant edge, a path of two edges, or a triangle) at
//! up to `legs` distinct vertices of the center, so the center's block-graph
//! degree is the number of legs. Every instance is decided by exhaustive
//! search. Findings are data; nothing here asserts a threshold.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::decompose;
use crate::engine::search::{find_ham_cycle_constrained, CycleConstraint, SearchLimits};
use crate::engine::star_block::acceptable_cycle;
use crate::enumerate::two_connected_graphs;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Leg {
    Pendant,
    TwoEdgePath,
    Triangle,
}

impl Leg {
    pub const ALL: [Leg; 3] = [Leg::Pendant, Leg::TwoEdgePath, Leg::Triangle];

    fn extra_vertices(self) -> usize {
        match self {
            Leg::Pendant => 1,
            Leg::TwoEdgePath | Leg::Triangle => 2,
        }
    }

    fn attach(self, g: &mut Graph, at: Vertex) {
        let a = g.fresh_vertex();
        g.add_edge(at, a).unwrap();
        match self {
            Leg::Pendant => {}
            Leg::TwoEdgePath => g.add_edge(a, a + 1).unwrap(),
            Leg::Triangle => {
                g.add_edge(a, a + 1).unwrap();
                g.add_edge(at, a + 1).unwrap();
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub center_order: usize,
    pub center_edges: Vec<(Vertex, Vertex)>,
    /// Leg hung at each attachment vertex of the center.
    pub legs: BTreeMap<Vertex, Leg>,
    pub edges: Vec<(Vertex, Vertex)>,
    /// Whether the center has an acceptable cycle; a non-hamiltonian
    /// instance with one would contradict the construction.
    pub acceptable_cycle: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExploreReport {
    pub instances: usize,
    pub hamiltonian: usize,
    pub non_hamiltonian: usize,
    pub skipped_over_cap: usize,
    pub budget_exceeded: usize,
    /// True when `max_instances` stopped the sweep early.
    pub truncated: bool,
    /// Non-hamiltonian instances by center block-graph degree.
    pub non_hamiltonian_by_degree: BTreeMap<usize, usize>,
    pub findings: Vec<Finding>,
}

/// Enumerates instances with centers of order `3 ..= max_block` and
/// `1 ..= legs` legs, deciding each by search. At most `max_findings`
/// examples are kept; all are counted.
pub fn explore_star_block(
    max_block: usize,
    legs: usize,
    limits: &SearchLimits,
    max_instances: usize,
    max_findings: usize,
) -> Result<ExploreReport> {
    if !(3..=8).contains(&max_block) || legs == 0 {
        return Err(Error::BadParams(
            "need 3 <= max-block <= 8 and at least one leg".into(),
        ));
    }
    let mut report = ExploreReport::default();
    for n in 3..=max_block {
        for center in two_connected_graphs(n)? {
            let verts: Vec<Vertex> = center.vertices().collect();
            for mask in 1u32..(1 << n) {
                let k = mask.count_ones() as usize;
                if k > legs {
                    continue;
                }
                let at: Vec<Vertex> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
                for choice in 0..3usize.pow(k as u32) {
                    if report.instances >= max_instances {
                        report.truncated = true;
                        return Ok(report);
                    }
                    let picks: BTreeMap<Vertex, Leg> = at
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| (v, Leg::ALL[choice / 3usize.pow(i as u32) % 3]))
                        .collect();
                    let size = n + picks.values().map(|l| l.extra_vertices()).sum::<usize>();
                    if size > limits.cap {
                        report.skipped_over_cap += 1;
                        continue;
                    }
                    let mut g = center.clone();
                    for (&v, &leg) in &picks {
                        leg.attach(&mut g, v);
                    }
                    report.instances += 1;
                    match find_ham_cycle_constrained(&g, &CycleConstraint::free(), limits.budget) {
                        Ok(Some(_)) => report.hamiltonian += 1,
                        Ok(None) => {
                            report.non_hamiltonian += 1;
                            *report.non_hamiltonian_by_degree.entry(k).or_default() += 1;
                            if report.findings.len() < max_findings {
                                let bd = decompose(&g)?;
                                let bc = bd.block_of_edge(verts[0], center.neighbors(verts[0]).next().unwrap());
                                let ac = acceptable_cycle(&g, bc.expect("center block"), limits)?;
                                report.findings.push(Finding {
                                    center_order: n,
                                    center_edges: center.edges().collect(),
                                    legs: picks,
                                    edges: g.edges().collect(),
                                    acceptable_cycle: ac.is_some(),
                                });
                            }
                        }
                        Err(Error::BudgetExceeded(_)) => report.budget_exceeded += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_centers_are_always_hamiltonian() {
        // The triangle itself is an acceptable cycle for any legs.
        let r = explore_star_block(3, 3, &SearchLimits::default(), usize::MAX, 10).unwrap();
        assert_eq!(r.instances, 9 + 27 + 27);
        assert!(!r.truncated);
        assert_eq!(r.non_hamiltonian, 0);
    }

    #[test]
    fn k23_with_legs_everywhere_fails() {
        // K_{2,3} with sides 0 and 4: two-edge paths at the sides and
        // pendants at the middle vertices.
        let center = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let mut g = center.clone();
        for (v, leg) in [(0, Leg::TwoEdgePath), (1, Leg::Pendant), (2, Leg::Pendant), (3, Leg::Pendant), (4, Leg::TwoEdgePath)] {
            leg.attach(&mut g, v);
        }
        assert_eq!(g.vertex_count(), 12);
        let found = find_ham_cycle_constrained(&g, &CycleConstraint::free(), u64::MAX).unwrap();
        assert!(found.is_none());
        let bc = decompose(&g).unwrap().block_of_edge(0, 1).unwrap();
        assert!(acceptable_cycle(&g, bc, &SearchLimits::default()).unwrap().is_none());
    }

    #[test]
    fn truncation() {
        let r = explore_star_block(4, 2, &SearchLimits::default(), 5, 0).unwrap();
        assert!(r.truncated);
        assert_eq!(r.instances, 5);
    }
}
