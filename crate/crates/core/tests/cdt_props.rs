use std::collections::HashSet;

use proptest::prelude::*;
use proxi_core::cdt::build_cdt;
use proxi_core::generate;
use proxi_core::mst::{cmst_of_cdt, mst, mst_of_cdt};
use proxi_core::{Edge, PlaneGraph};

fn forest(max_n: usize) -> impl Strategy<Value = PlaneGraph> {
    (3usize..=max_n, any::<u64>()).prop_map(|(n, s)| generate::random_forest(n, s))
}

fn euler_counts_hold(g: &PlaneGraph) {
    let t = build_cdt(g).unwrap();
    let n = g.n();
    let h = t.hull_edge_count();
    assert_eq!(t.triangles().len(), 2 * n - h - 2);
    assert_eq!(t.edges().len(), 3 * n - h - 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn unconstrained_edges_are_locally_delaunay(f in forest(60)) {
        let t = build_cdt(&f).unwrap();
        for te in t.edges() {
            if te.constrained {
                prop_assert!(f.contains_edge(te.edge));
            } else {
                prop_assert!(t.is_locally_delaunay(te.edge).unwrap());
            }
        }
        for e in f.edges() {
            prop_assert!(t.edge(*e).is_some_and(|te| te.constrained));
        }
        euler_counts_hold(&f);
    }

    #[test]
    fn graphs_triangulate_too(n in 3usize..60, seed in any::<u64>()) {
        let g = generate::random_plane_graph(n, seed, 3 * n);
        let t = build_cdt(&g).unwrap();
        let set: HashSet<Edge> = t.edges().iter().map(|e| e.edge).collect();
        prop_assert!(g.edges().iter().all(|e| set.contains(e)));
        euler_counts_hold(&g);
    }

    #[test]
    fn euclidean_mst_is_read_off_the_triangulation(f in forest(30)) {
        let t = build_cdt(&f).unwrap();
        let oracle = mst(&f.evg()).unwrap();
        let fast = mst_of_cdt(&t).unwrap();
        prop_assert_eq!(fast.edge_set(), oracle.edge_set());
        for e in oracle.edges() {
            prop_assert!(t.contains_edge(e.edge));
        }
    }

    #[test]
    fn constrained_mst_is_read_off_the_triangulation(f in forest(25)) {
        let t = build_cdt(&f).unwrap();
        prop_assert_eq!(cmst_of_cdt(&t).unwrap().edge_set(), mst(&f.cvg()).unwrap().edge_set());
    }

    #[test]
    fn forests_stay_in_their_cmst(f in forest(40)) {
        let c = proxi_core::cmst(&f).unwrap();
        for e in f.edges() {
            prop_assert!(c.contains(*e));
        }
    }
}

#[test]
fn figure2_triangulation_is_the_triangle() {
    let t = build_cdt(&generate::figure2()).unwrap();
    assert_eq!(t.triangles().len(), 1);
    assert_eq!(t.edges().len(), 3);
}

#[test]
fn large_instance() {
    let f = generate::random_forest(20_000, 11);
    let t = build_cdt(&f).unwrap();
    let h = t.hull_edge_count();
    assert_eq!(t.edges().len(), 3 * f.n() - h - 3);
    assert_eq!(t.edges().iter().filter(|e| e.constrained).count(), f.edges().len());
}
