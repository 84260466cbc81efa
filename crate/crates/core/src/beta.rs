//! Minimum constraint sets for constrained β-skeletons, `1 <= β <= 2`.
//!
//! From every vertex `p` and every triangle at `p`, an elimination path walks
//! away from `p` across triangulation edges whose β-neighbourhood contains
//! `p`. Paths are merged into a forest whose nodes are (edge, side of
//! arrival) pairs. Contracting away the nodes of non-input edges leaves each
//! path hanging at its first input edge; exactly those edges with a hanging
//! path are constraints.

use std::collections::{BTreeSet, HashSet};

use crate::cdt::{build_cdt, Triangulation};
use crate::constraints::{ConstraintSet, Family};
use crate::error::{Error, Result};
use crate::geometry::{in_beta_neighbourhood, orient2d, BetaParam, Orientation};
use crate::graph::{Edge, PlaneGraph, VertexId};

/// `2 * edge id + side`, where `side` indexes the triangle of the edge that
/// the path arrives from.
pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Termination {
    /// `p` is not in the neighbourhood of the first edge; the path is empty.
    LeftNeighbourhood,
    /// The last edge is not locally Delaunay.
    HitNonLocallyDelaunay,
    /// No edge of the next triangle continues the path, or there is no next
    /// triangle.
    NoContinuation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationPath {
    pub origin: VertexId,
    pub nodes: Vec<NodeId>,
    pub edges: Vec<Edge>,
    pub termination: Termination,
}

/// Extent of one path inside the forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathRecord {
    pub origin: VertexId,
    pub start: NodeId,
    pub end: NodeId,
    pub len: usize,
    pub termination: Termination,
}

/// A vertex hanging at a forest node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub origin: VertexId,
    pub node: NodeId,
    /// Index into [`EliminationForest::paths`].
    pub path: usize,
}

#[derive(Clone, Debug)]
pub struct EliminationForest {
    edges: Vec<Edge>,
    present: Vec<bool>,
    parent: Vec<Option<NodeId>>,
    leaves: Vec<Leaf>,
    paths: Vec<PathRecord>,
    touches: usize,
    contracted: bool,
}

impl EliminationForest {
    pub fn node_edge(&self, n: NodeId) -> Edge {
        self.edges[n / 2]
    }

    pub fn node_side(&self, n: NodeId) -> usize {
        n % 2
    }

    pub fn contains(&self, n: NodeId) -> bool {
        self.present.get(n).copied().unwrap_or(false)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.present.len()).filter(|&n| self.present[n])
    }

    pub fn node_count(&self) -> usize {
        self.present.iter().filter(|&&b| b).count()
    }

    pub fn parent(&self, n: NodeId) -> Option<NodeId> {
        self.parent[n]
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn leaves_at(&self, n: NodeId) -> impl Iterator<Item = &Leaf> + '_ {
        self.leaves.iter().filter(move |l| l.node == n)
    }

    /// Non-empty paths, in construction order.
    pub fn paths(&self) -> &[PathRecord] {
        &self.paths
    }

    /// Node visits made while building the forest.
    pub fn touches(&self) -> usize {
        self.touches
    }

    pub fn is_contracted(&self) -> bool {
        self.contracted
    }

    /// Nodes of path `i` from its first to its last edge. Only meaningful
    /// before contraction.
    pub fn path_nodes(&self, i: usize) -> Vec<NodeId> {
        let r = self.paths[i];
        let mut out = vec![r.start];
        let mut n = r.start;
        while n != r.end {
            n = self.parent[n].expect("path end is an ancestor of its start");
            out.push(n);
        }
        out
    }
}

fn slot(t: &Triangulation, edge_id: usize, tri: usize) -> usize {
    let sides = t.edges()[edge_id].triangles;
    if sides[0] == Some(tri) {
        0
    } else {
        debug_assert_eq!(sides[1], Some(tri));
        1
    }
}

/// Walks the path of `p` starting at the edge of `tri` opposite `p`,
/// calling `visit` on each node in order.
fn walk(
    t: &Triangulation,
    p: VertexId,
    tri: usize,
    beta: BetaParam,
    mut visit: impl FnMut(NodeId) -> Result<()>,
) -> Result<Termination> {
    let pts = t.points();
    let pp = pts[p];
    let [a, b, c] = t.triangles()[tri];
    let first = match p {
        _ if p == a => Edge::new(b, c),
        _ if p == b => Edge::new(a, c),
        _ if p == c => Edge::new(a, b),
        _ => return Err(Error::Internal(format!("vertex {p} is not on triangle {tri}"))),
    };
    let mut eid = t.edge_id(first).ok_or(Error::MissingEdge(first))?;
    let mut side = slot(t, eid, tri);
    if !in_beta_neighbourhood(pts[first.u], pts[first.v], pp, beta) {
        return Ok(Termination::LeftNeighbourhood);
    }
    loop {
        visit(2 * eid + side)?;
        let te = &t.edges()[eid];
        if !t.locally_delaunay_at(te) {
            return Ok(Termination::HitNonLocallyDelaunay);
        }
        let Some(far) = te.triangles[1 - side] else {
            return Ok(Termination::NoContinuation);
        };
        let apex = t.apex(far, te.edge);
        let candidates = [Edge::new(te.edge.u, apex), Edge::new(te.edge.v, apex)];
        let hits: Vec<Edge> =
            candidates.into_iter().filter(|e| in_beta_neighbourhood(pts[e.u], pts[e.v], pp, beta)).collect();
        let next = match hits.as_slice() {
            [] => return Ok(Termination::NoContinuation),
            [e] => *e,
            _ => return Err(Error::Internal(format!("path of vertex {p} splits in the triangle beyond {}", te.edge))),
        };
        // The far triangle must lie between p and the next edge.
        let other = te.edge.other(next.other(apex));
        let o_tri = orient2d(pts[next.u], pts[next.v], pts[other]);
        let o_p = orient2d(pts[next.u], pts[next.v], pp);
        if o_p == Orientation::Collinear || o_p != o_tri {
            return Ok(Termination::NoContinuation);
        }
        eid = t.edge_id(next).ok_or(Error::MissingEdge(next))?;
        side = slot(t, eid, far);
    }
}

/// The elimination path of `p` through triangle `tri`, which must contain `p`.
pub fn elimination_path(t: &Triangulation, p: VertexId, tri: usize, beta: BetaParam) -> Result<EliminationPath> {
    let mut nodes = Vec::new();
    let termination = walk(t, p, tri, beta, |n| {
        nodes.push(n);
        Ok(())
    })?;
    let edges = nodes.iter().map(|&n| t.edges()[n / 2].edge).collect();
    Ok(EliminationPath { origin: p, nodes, edges, termination })
}

/// Merges the paths of every (vertex, incident triangle) pair.
pub fn build_elimination_forest(t: &Triangulation, beta: BetaParam) -> Result<EliminationForest> {
    let m = t.edges().len();
    let mut present = vec![false; 2 * m];
    let mut parent: Vec<Option<NodeId>> = vec![None; 2 * m];
    let mut paths = Vec::new();
    let mut leaves = Vec::new();
    let mut touches = 0;
    for (tri, verts) in t.triangles().iter().enumerate() {
        for &p in verts {
            let mut prev: Option<NodeId> = None;
            let mut start = None;
            let mut len = 0;
            let termination = walk(t, p, tri, beta, |n| {
                touches += 1;
                present[n] = true;
                match prev {
                    Some(q) => match parent[q] {
                        Some(old) if old != n => {
                            return Err(Error::Internal(format!(
                                "elimination paths split at edge {}",
                                t.edges()[q / 2].edge
                            )))
                        }
                        _ => parent[q] = Some(n),
                    },
                    None => start = Some(n),
                }
                prev = Some(n);
                len += 1;
                Ok(())
            })?;
            if let (Some(start), Some(end)) = (start, prev) {
                leaves.push(Leaf { origin: p, node: start, path: paths.len() });
                paths.push(PathRecord { origin: p, start, end, len, termination });
            }
        }
    }
    Ok(EliminationForest {
        edges: t.edges().iter().map(|e| e.edge).collect(),
        present,
        parent,
        leaves,
        paths,
        touches,
        contracted: false,
    })
}

/// Nearest ancestor-or-self of every node satisfying `keep`, and depths.
fn nearest_kept(f: &EliminationForest, keep: &[bool]) -> (Vec<Option<NodeId>>, Vec<usize>) {
    let k = f.present.len();
    let mut near: Vec<Option<Option<NodeId>>> = vec![None; k];
    let mut depth = vec![0usize; k];
    let mut stack = Vec::new();
    for n in f.nodes() {
        if near[n].is_some() {
            continue;
        }
        let mut x = n;
        // Climb until a resolved node or a root.
        while near[x].is_none() {
            stack.push(x);
            match f.parent[x] {
                Some(p) => x = p,
                None => break,
            }
        }
        let (mut above, mut d) = match near[x] {
            Some(v) => (v, depth[x] + 1),
            None => (None, 0),
        };
        while let Some(y) = stack.pop() {
            if near[y].is_none() {
                let own = if keep[y] { Some(y) } else { above };
                near[y] = Some(own);
                depth[y] = d;
                above = own;
                d += 1;
            }
        }
    }
    (near.into_iter().map(Option::flatten).collect(), depth)
}

/// Contracts every node whose edge is not in `e_set`. Each leaf moves to the
/// first surviving node of its path, or disappears if none survives.
pub fn contract_forest(f: &EliminationForest, e_set: &HashSet<Edge>) -> EliminationForest {
    let keep: Vec<bool> = (0..f.present.len()).map(|n| f.present[n] && e_set.contains(&f.node_edge(n))).collect();
    let (near, depth) = nearest_kept(f, &keep);
    let mut parent = vec![None; f.present.len()];
    for n in f.nodes() {
        if keep[n] {
            parent[n] = f.parent[n].and_then(|p| near[p]);
        }
    }
    let mut leaves = Vec::new();
    for leaf in &f.leaves {
        let r = f.paths[leaf.path];
        if let Some(k) = near[r.start] {
            // Depth grows away from the roots; the path climbs from `start` to `end`.
            if depth[k] >= depth[r.end] {
                leaves.push(Leaf { node: k, ..*leaf });
            }
        }
    }
    EliminationForest {
        edges: f.edges.clone(),
        present: keep,
        parent,
        leaves,
        paths: f.paths.clone(),
        touches: f.touches,
        contracted: true,
    }
}

/// β-skeleton constraints on a prebuilt triangulation of `i`.
pub fn beta_constraints_in(t: &Triangulation, i: &PlaneGraph, beta: BetaParam) -> Result<ConstraintSet> {
    let forest = build_elimination_forest(t, beta)?;
    let e_set: HashSet<Edge> = i.edges().iter().copied().collect();
    let c = contract_forest(&forest, &e_set);
    let s: BTreeSet<Edge> = c.leaves.iter().map(|l| c.node_edge(l.node)).collect();
    Ok(ConstraintSet::new(Family::Beta(beta), s))
}

pub fn beta_constraints(i: &PlaneGraph, beta: BetaParam) -> Result<ConstraintSet> {
    let t = build_cdt(i)?;
    beta_constraints_in(&t, i, beta)
}

/// The constrained β-skeleton of `i`: input edges plus the triangulation
/// edges that no vertex eliminates. An edge is eliminated when it lies on
/// some path no later than that path's first input edge.
pub fn constrained_beta_skeleton(t: &Triangulation, i: &PlaneGraph, forest: &EliminationForest) -> BTreeSet<Edge> {
    let mut eliminated = HashSet::new();
    for k in 0..forest.paths.len() {
        for n in forest.path_nodes(k) {
            let e = forest.node_edge(n);
            eliminated.insert(e);
            if i.contains_edge(e) {
                break;
            }
        }
    }
    t.edges().iter().map(|te| te.edge).filter(|e| i.contains_edge(*e) || !eliminated.contains(e)).collect()
}
