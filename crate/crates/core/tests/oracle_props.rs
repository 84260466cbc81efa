use std::collections::BTreeSet;

use proptest::prelude::*;
use proxi_core::cdt::build_cdt;
use proxi_core::gabriel::delaunay_constraints;
use proxi_core::oracle::{
    classical_graph, oracle_cbeta, oracle_cgg, oracle_crng, verify_constraint_hierarchy, verify_hierarchy, Region,
};
use proxi_core::{gabriel_constraints, generate, mst, BetaParam, Edge, PlaneGraph, Validation};

fn points_only(n: usize, seed: u64) -> PlaneGraph {
    generate::random_plane_graph(n, seed, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracles_reduce_to_classical_graphs(n in 2usize..=20, seed in any::<u64>()) {
        let g = points_only(n, seed);
        prop_assert_eq!(oracle_cgg(&g), classical_graph(g.points(), Region::Diametral));
        prop_assert_eq!(oracle_crng(&g), classical_graph(g.points(), Region::Lune));
        let b = BetaParam::new(3, 2).unwrap();
        prop_assert_eq!(oracle_cbeta(&g, b), classical_graph(g.points(), Region::Beta(b)));
    }

    #[test]
    fn graph_hierarchy(n in 2usize..=25, seed in any::<u64>()) {
        let f = generate::random_forest(n, seed);
        let r = verify_hierarchy(&f).unwrap();
        prop_assert!(r.holds(), "{:?}", r.violation);
        prop_assert_eq!(r.levels.len(), 8);
    }

    #[test]
    fn constraint_hierarchy(n in 2usize..=12, seed in any::<u64>()) {
        let f = generate::random_forest(n, seed);
        let r = verify_constraint_hierarchy(&f).unwrap();
        prop_assert!(r.holds(), "{:?}", r.violation);
    }

    #[test]
    fn hierarchy_without_cycles_check(n in 3usize..=20, seed in any::<u64>()) {
        let g = generate::random_plane_graph(n, seed, 2 * n);
        prop_assert!(verify_hierarchy(&g).unwrap().holds());
        prop_assert!(verify_constraint_hierarchy(&g).unwrap().holds());
    }

    #[test]
    fn oracle_graphs_monotone_in_beta(n in 3usize..=15, seed in any::<u64>()) {
        let g = generate::random_plane_graph(n, seed, n);
        let mut prev: Option<BTreeSet<Edge>> = None;
        for (a, d) in [(2, 1), (7, 4), (3, 2), (5, 4), (1, 1)] {
            let s = oracle_cbeta(&g, BetaParam::new(a, d).unwrap());
            if let Some(p) = &prev {
                prop_assert!(p.is_subset(&s));
            }
            prev = Some(s);
        }
    }
}

#[test]
fn empty_input_is_the_classical_chain() {
    let g = points_only(18, 5);
    let r = verify_hierarchy(&g).unwrap();
    assert!(r.holds());
    let m: BTreeSet<Edge> = mst(&g.evg()).unwrap().edge_set().into_iter().collect();
    assert!(m.is_subset(&oracle_crng(&g)));
    let dt: BTreeSet<Edge> = build_cdt(&g).unwrap().edges().iter().map(|e| e.edge).collect();
    assert!(oracle_cgg(&g).is_subset(&dt));
    let c = verify_constraint_hierarchy(&g).unwrap();
    assert!(c.holds());
    assert!(c.levels.iter().all(|(_, k)| *k == 0));
}

#[test]
fn single_edge_is_trivially_nested() {
    let g = generate::graph(&[(0, 0), (3, 1)], &[(0, 1)]).unwrap();
    assert!(verify_hierarchy(&g).unwrap().holds());
    assert!(verify_constraint_hierarchy(&g).unwrap().holds());
}

#[test]
fn figure6_separates_gabriel_from_delaunay() {
    let g = generate::figure6();
    let t = build_cdt(&g).unwrap();
    let uv = Edge::new(0, 1);
    assert!(gabriel_constraints(&g).unwrap().contains(uv));
    assert!(!delaunay_constraints(&t, &g).unwrap().contains(&uv));
    assert!(verify_constraint_hierarchy(&g).unwrap().holds());
}

#[test]
fn validation_tiers_agree_on_valid_input() {
    let g = generate::random_forest(30, 2);
    let pts = g.points().to_vec();
    let e: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let s = PlaneGraph::with_scale(pts, 1, e, Validation::Structural).unwrap();
    assert_eq!(s, g);
}
