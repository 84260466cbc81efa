//! Minimum constraint sets for constrained Gabriel graphs.
//!
//! An input edge needs to be forced exactly when one of the (at most two)
//! triangle apexes next to it in the CDT sits in its open diametral disk.

use std::collections::BTreeSet;

use crate::cdt::{build_cdt, Triangulation};
use crate::constraints::{ConstraintSet, Family};
use crate::error::Result;
use crate::geometry::in_diametral_circle;
use crate::graph::{Edge, PlaneGraph, VertexId};

/// An apex of `edge` lying inside its diametral disk. `side` is 0 for the
/// triangle left of `edge.u -> edge.v`, 1 for the right one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalGabrielWitness {
    pub edge: Edge,
    pub vertex: VertexId,
    pub side: usize,
}

pub fn local_gabriel_witness(t: &Triangulation, e: Edge) -> Result<Option<LocalGabrielWitness>> {
    let apexes = t.apexes(e)?;
    let pts = t.points();
    for (side, apex) in apexes.into_iter().enumerate() {
        if let Some(p) = apex {
            if in_diametral_circle(pts[e.u], pts[e.v], pts[p]) {
                return Ok(Some(LocalGabrielWitness { edge: e, vertex: p, side }));
            }
        }
    }
    Ok(None)
}

pub fn is_locally_gabriel(t: &Triangulation, e: Edge) -> Result<bool> {
    Ok(local_gabriel_witness(t, e)?.is_none())
}

/// Input edges that are not locally Delaunay in `t`.
pub fn delaunay_constraints(t: &Triangulation, i: &PlaneGraph) -> Result<BTreeSet<Edge>> {
    let mut s = BTreeSet::new();
    for &e in i.edges() {
        if !t.is_locally_delaunay(e)? {
            s.insert(e);
        }
    }
    Ok(s)
}

/// Gabriel constraints on a prebuilt triangulation of `i`.
pub fn gabriel_constraints_in(t: &Triangulation, i: &PlaneGraph) -> Result<ConstraintSet> {
    let mut s = BTreeSet::new();
    for &e in i.edges() {
        if !is_locally_gabriel(t, e)? {
            s.insert(e);
        }
    }
    Ok(ConstraintSet::new(Family::Gabriel, s))
}

/// Same result, starting from the non-locally-Delaunay input edges, which
/// are never locally Gabriel, and testing only the rest.
pub fn gabriel_constraints_seeded(t: &Triangulation, i: &PlaneGraph) -> Result<ConstraintSet> {
    let mut s = delaunay_constraints(t, i)?;
    for &e in i.edges() {
        if !s.contains(&e) && !is_locally_gabriel(t, e)? {
            s.insert(e);
        }
    }
    Ok(ConstraintSet::new(Family::Gabriel, s))
}

pub fn gabriel_constraints(i: &PlaneGraph) -> Result<ConstraintSet> {
    let t = build_cdt(i)?;
    gabriel_constraints_in(&t, i)
}

/// The constrained Gabriel graph of `i`: the input edges plus every
/// unconstrained triangulation edge with no apex in its diametral disk.
pub fn constrained_gabriel_graph(t: &Triangulation, i: &PlaneGraph) -> Result<BTreeSet<Edge>> {
    let mut out = BTreeSet::new();
    for te in t.edges() {
        if i.contains_edge(te.edge) || is_locally_gabriel(t, te.edge)? {
            out.insert(te.edge);
        }
    }
    Ok(out)
}
