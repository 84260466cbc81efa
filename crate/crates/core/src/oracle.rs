//! Brute-force constructions straight from the definitions.
//!
//! Nothing here uses the triangulation (except to build the top of the
//! hierarchy chain); everything is polynomial but slow, and meant for small
//! instances.

use std::collections::BTreeSet;
use std::fmt;

use crate::beta::beta_constraints;
use crate::cdt::build_cdt;
use crate::cmst::cmst_constraints_fast;
use crate::constraints::{ConstraintSet, Family};
use crate::error::{Error, Result};
use crate::gabriel::{delaunay_constraints, gabriel_constraints};
use crate::geometry::{
    in_beta_neighbourhood, in_diametral_circle, in_lune, orient2d, segment_distance_sq, segments_properly_intersect,
    squared_distance, BetaParam, Orientation, Point, Segment,
};
use crate::graph::{segment_visible, Edge, EdgeWeight, PlaneGraph, VertexId, WeightedEdge, WeightedGraph};
use crate::mst::mst;

/// Largest input edge count [`oracle_min_constraints`] accepts.
pub const ORACLE_EDGE_LIMIT: usize = 16;

/// The β values the hierarchy checks run over.
pub const HIERARCHY_BETAS: [(i64, i64); 4] = [(1, 1), (5, 4), (3, 2), (2, 1)];

/// Open region attached to a segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Diametral,
    Lune,
    Beta(BetaParam),
}

impl Region {
    pub fn contains(&self, u: Point, v: Point, p: Point) -> bool {
        match self {
            Region::Diametral => in_diametral_circle(u, v, p),
            Region::Lune => in_lune(u, v, p),
            Region::Beta(b) => in_beta_neighbourhood(u, v, p, *b),
        }
    }
}

/// Which input edges block each vertex pair, as a bitmask over edge indices.
#[derive(Clone, Debug)]
pub struct Blockers {
    n: usize,
    masks: Vec<u32>,
    /// A third vertex lies on the open segment.
    pierced: Vec<bool>,
}

impl Blockers {
    /// Panics if there are more than 32 edges.
    pub fn new(points: &[Point], edges: &[Edge]) -> Self {
        assert!(edges.len() <= 32, "at most 32 edges");
        let n = points.len();
        let mut masks = vec![0u32; n * n];
        let mut pierced = vec![false; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let s = Segment::new(points[a], points[b]);
                let mut m = 0u32;
                for (k, e) in edges.iter().enumerate() {
                    if *e != Edge::new(a, b) && segments_properly_intersect(&s, &Segment::new(points[e.u], points[e.v]))
                    {
                        m |= 1 << k;
                    }
                }
                let hit = (0..n).any(|w| {
                    w != a
                        && w != b
                        && orient2d(points[a], points[b], points[w]) == Orientation::Collinear
                        && points[a].x.min(points[b].x) <= points[w].x
                        && points[w].x <= points[a].x.max(points[b].x)
                        && points[a].y.min(points[b].y) <= points[w].y
                        && points[w].y <= points[a].y.max(points[b].y)
                });
                for (i, j) in [(a, b), (b, a)] {
                    masks[i * n + j] = m;
                    pierced[i * n + j] = hit;
                }
            }
        }
        Blockers { n, masks, pierced }
    }

    /// Whether `a` and `b` see each other when only the edges in `subset`
    /// are obstacles.
    pub fn visible(&self, a: VertexId, b: VertexId, subset: u32) -> bool {
        a != b && !self.pierced[a * self.n + b] && self.masks[a * self.n + b] & subset == 0
    }
}

fn full_mask(m: usize) -> u32 {
    if m == 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

/// Vertices inside the region of `u v` that see both endpoints, with respect
/// to the edges of `g`.
pub fn eliminators(g: &PlaneGraph, e: Edge, region: Region) -> Vec<VertexId> {
    let pts = g.points();
    (0..g.n())
        .filter(|&w| {
            w != e.u
                && w != e.v
                && region.contains(pts[e.u], pts[e.v], pts[w])
                && g.visible(w, e.u)
                && g.visible(w, e.v)
        })
        .collect()
}

/// The eliminator nearest to the segment, ties broken by id.
pub fn closest_eliminator(g: &PlaneGraph, e: Edge, region: Region) -> Option<VertexId> {
    let pts = g.points();
    eliminators(g, e, region).into_iter().min_by(|&a, &b| {
        segment_distance_sq(pts[a], pts[e.u], pts[e.v])
            .cmp(&segment_distance_sq(pts[b], pts[e.u], pts[e.v]))
            .then(a.cmp(&b))
    })
}

/// Input edges plus every visible pair that no vertex eliminates.
pub fn oracle_graph(g: &PlaneGraph, region: Region) -> BTreeSet<Edge> {
    let mut out: BTreeSet<Edge> = g.edges().iter().copied().collect();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let e = Edge::new(u, v);
            if !out.contains(&e) && g.visible(u, v) && eliminators(g, e, region).is_empty() {
                out.insert(e);
            }
        }
    }
    out
}

pub fn oracle_cgg(i: &PlaneGraph) -> BTreeSet<Edge> {
    oracle_graph(i, Region::Diametral)
}

pub fn oracle_crng(i: &PlaneGraph) -> BTreeSet<Edge> {
    oracle_graph(i, Region::Lune)
}

pub fn oracle_cbeta(i: &PlaneGraph, beta: BetaParam) -> BTreeSet<Edge> {
    oracle_graph(i, Region::Beta(beta))
}

/// The unconstrained proximity graph of a point set: pairs with an empty region.
pub fn classical_graph(points: &[Point], region: Region) -> BTreeSet<Edge> {
    let n = points.len();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if (0..n).all(|w| w == u || w == v || !region.contains(points[u], points[v], points[w])) {
                out.insert(Edge::new(u, v));
            }
        }
    }
    out
}

/// `I ⊆ CG(V, S)` tested straight from the definition of elimination,
/// with visibility taken with respect to `S` only.
pub fn contains_input(i: &PlaneGraph, s: &BTreeSet<Edge>, region: Region) -> bool {
    let pts = i.points();
    let obstacles: Vec<Edge> = s.iter().copied().collect();
    let sees = |a, b| segment_visible(pts, &obstacles, a, b);
    i.edges().iter().all(|e| {
        s.contains(e)
            || (0..i.n()).all(|w| {
                w == e.u || w == e.v || !region.contains(pts[e.u], pts[e.v], pts[w]) || !(sees(w, e.u) && sees(w, e.v))
            })
    })
}

/// For each input edge, the vertices in its region.
fn region_candidates(i: &PlaneGraph, region: Region) -> Vec<Vec<VertexId>> {
    let pts = i.points();
    i.edges()
        .iter()
        .map(|e| (0..i.n()).filter(|&w| w != e.u && w != e.v && region.contains(pts[e.u], pts[e.v], pts[w])).collect())
        .collect()
}

fn region_check(i: &PlaneGraph, blockers: &Blockers, cands: &[Vec<VertexId>], subset: u32) -> bool {
    i.edges().iter().enumerate().all(|(k, e)| {
        subset & (1 << k) != 0
            || cands[k].iter().all(|&w| !(blockers.visible(w, e.u, subset) && blockers.visible(w, e.v, subset)))
    })
}

/// The CMST of `(V, S)` contains every input edge, with `S` given as a mask.
fn cmst_check(i: &PlaneGraph, blockers: &Blockers, subset: u32) -> Result<bool> {
    let pts = i.points();
    let edges = i.edges();
    let mut list = Vec::new();
    for u in 0..i.n() {
        for v in u + 1..i.n() {
            let e = Edge::new(u, v);
            let forced = i.edge_index(e).is_some_and(|k| subset & (1 << k) != 0);
            if forced {
                list.push(WeightedEdge { edge: e, weight: EdgeWeight::Zero });
            } else if blockers.visible(u, v, subset) {
                list.push(WeightedEdge { edge: e, weight: EdgeWeight::Euclidean(squared_distance(pts[u], pts[v])) });
            }
        }
    }
    let tree = mst(&WeightedGraph::new(i.n(), list))?;
    Ok(edges.iter().all(|e| tree.contains(*e)))
}

/// Smallest valid constraint set, with the number of valid sets of that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// The lexicographically least minimum set (by sorted input indices).
    pub set: ConstraintSet,
    pub minimum_count: usize,
}

/// Exhaustive search over subsets of the input edges by increasing size.
pub fn oracle_min_constraints(i: &PlaneGraph, family: Family) -> Result<OracleResult> {
    let m = i.edges().len();
    if m > ORACLE_EDGE_LIMIT {
        return Err(Error::OracleLimit { edges: m, limit: ORACLE_EDGE_LIMIT });
    }
    if family == Family::Cmst && !i.is_forest() {
        return Err(Error::NotAForest);
    }
    let blockers = Blockers::new(i.points(), i.edges());
    let region = match family {
        Family::Cmst => None,
        Family::Gabriel => Some(Region::Diametral),
        Family::Beta(b) => Some(Region::Beta(b)),
    };
    let cands = region.map(|r| region_candidates(i, r));
    let valid = |subset: u32| -> Result<bool> {
        match &cands {
            None => cmst_check(i, &blockers, subset),
            Some(c) => Ok(region_check(i, &blockers, c, subset)),
        }
    };
    for k in 0..=m {
        let mut first = None;
        let mut count = 0;
        for subset in combinations(m, k) {
            if valid(subset)? {
                first.get_or_insert(subset);
                count += 1;
            }
        }
        if let Some(best) = first {
            if region.is_some() && count != 1 {
                return Err(Error::Internal(format!("{count} distinct minimum {family} constraint sets")));
            }
            let edges = (0..m).filter(|b| best & (1 << b) != 0).map(|b| i.edges()[b]);
            return Ok(OracleResult { set: ConstraintSet::new(family, edges), minimum_count: count });
        }
    }
    debug_assert!(valid(full_mask(m)).unwrap_or(true));
    Err(Error::Internal("no constraint set works, not even all input edges".into()))
}

/// All `k`-subsets of `0..m` as bitmasks, in lexicographic order of their
/// sorted index lists.
fn combinations(m: usize, k: usize) -> impl Iterator<Item = u32> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > m;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u32, |acc, &b| acc | 1 << b);
        // Advance to the next combination.
        let mut pos = k;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            if idx[pos] < m - k + pos {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

/// First failed inclusion in a chain of graphs or sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyViolation {
    pub smaller: String,
    pub larger: String,
    pub edge: Edge,
}

impl fmt::Display for HierarchyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {} of {} is missing from {}", self.edge, self.smaller, self.larger)
    }
}

/// The chain that was checked, smallest first, with each member's size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyReport {
    pub levels: Vec<(String, usize)>,
    pub violation: Option<HierarchyViolation>,
}

impl HierarchyReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

fn check_chain(chain: Vec<(String, BTreeSet<Edge>)>) -> HierarchyReport {
    let mut violation = None;
    for w in chain.windows(2) {
        if let Some(e) = w[0].1.difference(&w[1].1).next() {
            violation = Some(HierarchyViolation { smaller: w[0].0.clone(), larger: w[1].0.clone(), edge: *e });
            break;
        }
    }
    HierarchyReport { levels: chain.into_iter().map(|(n, s)| (n, s.len())).collect(), violation }
}

fn betas() -> Vec<BetaParam> {
    HIERARCHY_BETAS.iter().map(|&(n, d)| BetaParam::new(n, d).expect("valid beta")).collect()
}

/// Checks CMST ⊆ CRNG ⊆ CGβ (β from 2 down to 1) ⊆ CGG ⊆ CDT, all built by
/// brute force except the CDT. The CMST level is present only for forests.
pub fn verify_hierarchy(i: &PlaneGraph) -> Result<HierarchyReport> {
    let mut chain = Vec::new();
    if i.is_forest() {
        chain.push(("CMST".to_string(), mst(&i.cvg())?.edge_set().into_iter().collect()));
    }
    chain.push(("CRNG".to_string(), oracle_crng(i)));
    for b in betas().into_iter().rev() {
        chain.push((format!("CG(beta={b})"), oracle_cbeta(i, b)));
    }
    chain.push(("CGG".to_string(), oracle_cgg(i)));
    let t = build_cdt(i)?;
    chain.push(("CDT".to_string(), t.edges().iter().map(|e| e.edge).collect()));
    Ok(check_chain(chain))
}

/// Checks the constraint sets nest the other way:
/// S_CMST ⊇ S_CRNG ⊇ S_CGβ ⊇ S_CGG ⊇ S_CDT, with each set from its fast
/// algorithm and S_CDT the input edges that are not locally Delaunay.
pub fn verify_constraint_hierarchy(i: &PlaneGraph) -> Result<HierarchyReport> {
    let t = build_cdt(i)?;
    let mut chain = vec![("S_CDT".to_string(), delaunay_constraints(&t, i)?)];
    chain.push(("S_CGG".to_string(), gabriel_constraints(i)?.edges().clone()));
    for b in betas() {
        chain.push((format!("S_CG(beta={b})"), beta_constraints(i, b)?.edges().clone()));
    }
    chain.push(("S_CRNG".to_string(), beta_constraints(i, BetaParam::RNG)?.edges().clone()));
    if i.is_forest() {
        chain.push(("S_CMST".to_string(), cmst_constraints_fast(i)?.edges().clone()));
    }
    Ok(check_chain(chain))
}
