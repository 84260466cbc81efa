//! Inputs shared by the criterion benches in `benches/`.

use proxi_core::cmst::cmst_trees;
use proxi_core::{build_cdt, generate, PlaneGraph, SpanningTree, Triangulation};

/// Sizes used by the scaling groups.
pub const SIZES: [usize; 3] = [1_000, 10_000, 50_000];

pub const SEED: u64 = 1;

pub fn forest(n: usize) -> PlaneGraph {
    generate::random_forest(n, SEED)
}

pub fn plane_graph(n: usize) -> PlaneGraph {
    generate::random_plane_graph(n, SEED, n)
}

/// A forest with its triangulation and both spanning trees, so that the
/// extraction can be timed on its own.
pub struct CmstInput {
    pub forest: PlaneGraph,
    pub t_prime: SpanningTree,
    pub cmst: SpanningTree,
}

pub fn cmst_input(n: usize) -> CmstInput {
    let forest = forest(n);
    let t = build_cdt(&forest).expect("generated forests triangulate");
    let (t_prime, cmst) = cmst_trees(&t).expect("triangulations are connected");
    CmstInput { forest, t_prime, cmst }
}

pub fn triangulated(g: PlaneGraph) -> (PlaneGraph, Triangulation) {
    let t = build_cdt(&g).expect("generated graphs triangulate");
    (g, t)
}
