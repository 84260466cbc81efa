//! Minimum constraint sets for edge-constrained proximity graphs.
//!
//! Given a plane straight-line graph `I = (V, E)`, the crate finds the
//! smallest subset `S ⊆ E` such that the proximity graph of `V` constrained
//! by `S` still contains all of `E`. Supported graphs are the constrained
//! minimum spanning tree (for forests), the constrained Gabriel graph and
//! constrained β-skeletons for `1 ≤ β ≤ 2`.
//!
//! All predicates are exact. Coordinates are integers, possibly scaled from
//! rationals, and the input must be in general position.
//!
//! ```
//! use proxi_core::{cmst_constraints_fast, generate, Edge};
//!
//! let f = generate::figure3();
//! let s = cmst_constraints_fast(&f).unwrap();
//! assert_eq!(s.edges().iter().copied().collect::<Vec<_>>(), vec![Edge::new(1, 2)]);
//! ```

mod exact;

pub mod beta;
pub mod cdt;
pub mod cmst;
pub mod constraints;
pub mod error;
pub mod gabriel;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod link_cut;
pub mod mst;
pub mod oracle;

pub use beta::{beta_constraints, build_elimination_forest, constrained_beta_skeleton, EliminationForest};
pub use cdt::{build_cdt, Triangulation};
pub use cmst::{cmst_constraints_fast, cmst_constraints_reference, verify_containment};
pub use constraints::{ConstraintSet, Family};
pub use error::{Error, Result, Violation};
pub use gabriel::{constrained_gabriel_graph, gabriel_constraints, is_locally_gabriel};
pub use geometry::{BetaParam, Orientation, Point, Segment};
pub use graph::{Edge, PlaneGraph, Validation, VertexId};
pub use link_cut::DynamicTree;
pub use mst::{cmst, mst, SpanningTree};

/// Minimum constraint set for `family`, computed with the fast algorithm.
pub fn min_constraints(i: &PlaneGraph, family: Family) -> Result<ConstraintSet> {
    match family {
        Family::Cmst => cmst_constraints_fast(i),
        Family::Gabriel => gabriel_constraints(i),
        Family::Beta(b) => beta_constraints(i, b),
    }
}
