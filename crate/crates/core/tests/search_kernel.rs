//! The constrained search against brute force over all permutations.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use hamsq_core::engine::search::{find_with_strategy, for_each_ham_cycle, CycleConstraint, Requirement, Strategy};
use hamsq_core::generate::random;
use hamsq_core::cycle::canonical_order;
use hamsq_core::{Graph, Vertex};

use common::{all_square_cycles, check_cycle, cycle_edges, cycle_neighbors};

fn holds(g: &Graph, order: &[Vertex], v: Vertex, r: Requirement) -> bool {
    let (p, s) = cycle_neighbors(order, v);
    let k = usize::from(g.has_edge(v, p)) + usize::from(g.has_edge(v, s));
    let edges = cycle_edges(order);
    let key = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    match r {
        Requirement::BothInG => k == 2,
        Requirement::ExactlyOneInG => k == 1,
        Requirement::NoneInG => k == 0,
        Requirement::AtLeastOneInG => k >= 1,
        Requirement::NeighborEdge => edges.iter().any(|&(a, b)| g.has_edge(v, a) && g.has_edge(v, b)),
        Requirement::RequiredEdge(w) => edges.contains(&key(v, w)),
        Requirement::ForbiddenEdge(w) => !edges.contains(&key(v, w)),
        Requirement::Free => true,
    }
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(3..=8u32);
    let mut g = Graph::with_vertices([0]);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).unwrap();
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn random_constraint(rng: &mut ChaCha8Rng, g: &Graph) -> (CycleConstraint, Vec<(Vertex, Requirement)>) {
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut c = CycleConstraint::free();
    let mut reqs = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        let v = *verts.choose(rng).unwrap();
        let w = *verts.choose(rng).unwrap();
        let r = match rng.gen_range(0..8) {
            0 => Requirement::BothInG,
            1 => Requirement::ExactlyOneInG,
            2 => Requirement::NoneInG,
            3 => Requirement::AtLeastOneInG,
            4 => Requirement::NeighborEdge,
            5 if w != v => Requirement::RequiredEdge(w),
            6 if w != v => Requirement::ForbiddenEdge(w),
            _ => Requirement::Free,
        };
        c.add(v, r);
        reqs.push((v, r));
    }
    if rng.gen_bool(0.3) {
        let k = rng.gen_range(0..=g.vertex_count());
        c = c.with_min_in_g_edges(k);
    }
    (c, reqs)
}

#[test]
fn counts_match_brute_force() {
    let mut rng = random::rng(41);
    let mut nonzero = 0;
    for _ in 0..600 {
        let g = random_graph(&mut rng);
        let (c, reqs) = random_constraint(&mut rng, &g);
        if c.validate(&g).is_err() {
            continue;
        }
        let expected: BTreeSet<Vec<Vertex>> = all_square_cycles(&g)
            .into_iter()
            .filter(|o| reqs.iter().all(|&(v, r)| holds(&g, o, v, r)))
            .filter(|o| cycle_edges(o).iter().filter(|&&(a, b)| g.has_edge(a, b)).count() >= c.min_in_g_edges())
            .map(|o| canonical_order(&o))
            .collect();

        let mut got = BTreeSet::new();
        let count = for_each_ham_cycle(&g, &c, u64::MAX, |cyc| {
            got.insert(cyc.order().to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, got.len(), "a cycle was visited twice on {:?}", g.edges().collect::<Vec<_>>());
        assert_eq!(got, expected, "{:?} under {reqs:?}", g.edges().collect::<Vec<_>>());

        let found = find_with_strategy(&g, &c, u64::MAX, Strategy::Backtrack).unwrap();
        assert_eq!(found.is_some(), !expected.is_empty());
        if let Some(cyc) = found {
            check_cycle(&g, cyc.order()).unwrap();
            assert!(expected.contains(cyc.order()));
        }
        nonzero += usize::from(!expected.is_empty());
    }
    assert!(nonzero > 100, "too few satisfiable instances: {nonzero}");
}

#[test]
fn held_karp_and_backtracking_agree() {
    let mut rng = random::rng(42);
    for _ in 0..400 {
        let g = random_graph(&mut rng);
        let truth = common::square_hamiltonian(&g);
        let free = CycleConstraint::free();
        for s in [Strategy::HeldKarp, Strategy::Backtrack, Strategy::Auto] {
            let found = find_with_strategy(&g, &free, u64::MAX, s).unwrap();
            assert_eq!(found.is_some(), truth, "{s:?} on {:?}", g.edges().collect::<Vec<_>>());
            if let Some(cyc) = found {
                check_cycle(&g, cyc.order()).unwrap();
            }
        }
    }
}

#[test]
fn budget_is_reported_not_swallowed() {
    let g = random::block_path(&mut random::rng(3), 14, 5);
    let c = CycleConstraint::free().with(g.vertices().next().unwrap(), Requirement::AtLeastOneInG);
    let r = find_with_strategy(&g, &c, 1, Strategy::Backtrack);
    assert!(matches!(r, Err(hamsq_core::Error::BudgetExceeded(_))), "{r:?}");
}
