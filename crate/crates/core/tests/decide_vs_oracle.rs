mod common;

use hamsq_core::engine::decide::{decide_and_construct, Decision, Mode};
use hamsq_core::engine::search::{find_ham_cycle_constrained, CycleConstraint, SearchLimits};
use hamsq_core::enumerate::connected_graphs;

#[test]
fn constructive_agrees_with_search_up_to_eight_vertices() {
    let lim = SearchLimits::default();
    for n in 3..=8 {
        for g in connected_graphs(n).unwrap() {
            let cert = decide_and_construct(&g, Mode::Constructive, &lim)
                .unwrap_or_else(|e| panic!("{e} on {:?}", g.edges().collect::<Vec<_>>()));
            let truth = find_ham_cycle_constrained(&g, &CycleConstraint::free(), u64::MAX)
                .unwrap()
                .is_some();
            match cert.decision {
                Decision::Hamiltonian(_) => assert!(truth),
                Decision::NotHamiltonian(_) => assert!(!truth, "{:?}", g.edges().collect::<Vec<_>>()),
                Decision::OutOfClass(_) => {}
            }
        }
    }
}

#[test]
fn every_nine_vertex_graph_with_a_heavy_cut_vertex_is_refused() {
    // Only a handful of in-class graphs on nine vertices have t >= 3; check
    // every one of them rather than a sample.
    use hamsq_core::{decompose, Witness};
    let lim = SearchLimits::default();
    let mut seen = 0;
    for g in connected_graphs(9).unwrap() {
        if !g.vertices().any(|a| common::t_of(&g, a) >= 3) || !decompose(&g).unwrap().class_check().is_in_class() {
            continue;
        }
        seen += 1;
        assert!(!common::square_hamiltonian(&g));
        let cert = decide_and_construct(&g, Mode::Constructive, &lim).unwrap();
        match cert.decision {
            Decision::NotHamiltonian(Witness::AcyclicNonEndBlocks { vertex, t }) => {
                assert_eq!(common::t_of(&g, vertex), t);
            }
            d => panic!("{d:?}"),
        }
    }
    assert_eq!(seen, 16);
}
