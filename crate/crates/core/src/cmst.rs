//! Minimum constraint sets for constrained minimum spanning trees.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::cdt::{build_cdt, Triangulation};
use crate::constraints::{ConstraintSet, Family};
use crate::error::{Error, Result};
use crate::geometry::{compare_edges, squared_distance};
use crate::graph::{Edge, PlaneGraph, VertexId};
use crate::link_cut::{DynamicTree, LinkCutError};
use crate::mst::{cmst, cmst_of_cdt, mst, mst_of_cdt, SpanningTree};

fn require_forest(f: &PlaneGraph) -> Result<()> {
    if f.is_forest() {
        Ok(())
    } else {
        Err(Error::NotAForest)
    }
}

/// Straightforward version working on the full visibility graphs: for every
/// Euclidean MST edge `e'` outside the CMST, every input edge on the CMST
/// path between its endpoints that is heavier than `e'` becomes a constraint.
pub fn cmst_constraints_reference(f: &PlaneGraph) -> Result<ConstraintSet> {
    require_forest(f)?;
    let t_prime = mst(&f.evg())?;
    let c = mst(&f.cvg())?;
    let pts = f.points();
    let mut s = BTreeSet::new();
    for e in t_prime.edges() {
        let e1 = e.edge;
        if c.contains(e1) {
            continue;
        }
        for e in c.path(e1.u, e1.v) {
            if f.contains_edge(e) && compare_edges(pts, e, e1) == Ordering::Greater {
                s.insert(e);
            }
        }
    }
    Ok(ConstraintSet::new(Family::Cmst, s))
}

/// Result of the dynamic-tree extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmstExtraction {
    pub constraints: ConstraintSet,
    /// Tree edges that were zeroed but are not input edges; they are dropped
    /// from the result.
    pub zeroed_outside_input: Vec<Edge>,
}

/// The Euclidean MST and the constrained MST, both read off the triangulation.
pub fn cmst_trees(t: &Triangulation) -> Result<(SpanningTree, SpanningTree)> {
    Ok((mst_of_cdt(t)?, cmst_of_cdt(t)?))
}

fn internal(e: LinkCutError) -> Error {
    Error::Internal(format!("dynamic tree: {e}"))
}

/// Vertices in breadth-first order of `tree`, roots first.
fn tree_order(tree: &SpanningTree) -> Vec<VertexId> {
    let n = tree.n();
    let mut start = vec![0usize; n + 1];
    for v in 0..n {
        if let Some(p) = tree.parent(v) {
            start[p + 1] += 1;
        }
    }
    for v in 0..n {
        start[v + 1] += start[v];
    }
    let mut fill = start.clone();
    let mut children = vec![0; start[n]];
    for v in 0..n {
        if let Some(p) = tree.parent(v) {
            children[fill[p]] = v;
            fill[p] += 1;
        }
    }
    let mut order: Vec<VertexId> = (0..n).filter(|&v| tree.parent(v).is_none()).collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        order.extend_from_slice(&children[start[v]..start[v + 1]]);
    }
    order
}

/// Dynamic-tree extraction given both trees.
///
/// Edge costs are 1-based ranks under [`compare_edges`], so the exact
/// lexicographic tie-break carries over to the cost comparisons. Vertices
/// are relabelled in breadth-first order of the constrained tree, which keeps
/// the dynamic tree's memory accesses local.
pub fn extract_cmst_constraints(f: &PlaneGraph, t_prime: &SpanningTree, cmst: &SpanningTree) -> Result<CmstExtraction> {
    let pts = f.points();
    let n = f.n();
    let order = tree_order(cmst);
    let mut label = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }

    // Tree edge of vertex v is tagged v; the k-th non-tree Euclidean edge n + k.
    let extra: Vec<Edge> = t_prime.edges().iter().map(|e| e.edge).filter(|e| !cmst.contains(*e)).collect();
    // Sorting (squared length, u, v) keys is the order of `compare_edges`.
    let key = |e: Edge| (squared_distance(pts[e.u], pts[e.v]), e.u, e.v);
    let mut tagged: Vec<((u128, VertexId, VertexId), usize)> = (0..n)
        .filter_map(|v| cmst.parent(v).map(|p| (key(Edge::new(v, p)), v)))
        .chain(extra.iter().enumerate().map(|(k, e)| (key(*e), n + k)))
        .collect();
    tagged.sort_unstable();
    let mut rank = vec![0i64; n + extra.len()];
    for (i, &(_, tag)) in tagged.iter().enumerate() {
        rank[tag] = i as i64 + 1;
    }

    let mut dt = DynamicTree::<i64>::new(n);
    for (i, &v) in order.iter().enumerate() {
        if let Some(p) = cmst.parent(v) {
            dt.link(i, label[p], rank[v]).map_err(internal)?;
        }
    }

    // The zeroed set is a union over the non-tree edges, so their order is
    // free; following the labels keeps consecutive queries close in the tree.
    let mut queue: Vec<usize> = (0..extra.len()).collect();
    queue.sort_unstable_by_key(|&k| label[extra[k].u].min(label[extra[k].v]));
    let mut zeroed = Vec::new();
    for k in queue {
        let e1 = extra[k];
        let w = rank[n + k];
        let (a, b) = (label[e1.u], label[e1.v]);
        let u = dt
            .lca(a, b)
            .map_err(internal)?
            .ok_or_else(|| Error::Internal(format!("endpoints of {e1} lie in different trees")))?;
        let p = dt.parent(u).map_err(internal)?;
        let y = match p {
            Some(_) => Some(dt.cut(u).map_err(internal)?),
            None => None,
        };
        for side in [a, b] {
            // After the cut only the lca is a root.
            if side == u {
                continue;
            }
            loop {
                let v = dt.maxcost(side).map_err(internal)?;
                let x = dt.cost(v).map_err(internal)?;
                if w >= x {
                    break;
                }
                dt.update_edge(v, -x).map_err(internal)?;
                let pv = dt.parent(v).map_err(internal)?.expect("non-root has a parent");
                zeroed.push(Edge::new(order[v], order[pv]));
            }
        }
        if let (Some(p), Some(y)) = (p, y) {
            dt.link(u, p, y).map_err(internal)?;
        }
    }
    zeroed.sort_unstable();
    zeroed.dedup();
    let (inside, outside): (Vec<Edge>, Vec<Edge>) = zeroed.into_iter().partition(|e| f.contains_edge(*e));
    Ok(CmstExtraction { constraints: ConstraintSet::new(Family::Cmst, inside), zeroed_outside_input: outside })
}

pub fn cmst_extraction(f: &PlaneGraph) -> Result<CmstExtraction> {
    require_forest(f)?;
    let t = build_cdt(f)?;
    let (t_prime, c) = cmst_trees(&t)?;
    extract_cmst_constraints(f, &t_prime, &c)
}

/// O(n log n) version on the triangulation with a dynamic tree.
pub fn cmst_constraints_fast(f: &PlaneGraph) -> Result<ConstraintSet> {
    Ok(cmst_extraction(f)?.constraints)
}

/// Whether `f` is contained in the CMST of `(V, s)`.
pub fn verify_containment(f: &PlaneGraph, s: &ConstraintSet) -> Result<bool> {
    let sub = f.subgraph(s.edges().iter().copied())?;
    let tree = cmst(&sub)?;
    Ok(f.edges().iter().all(|e| tree.contains(*e)))
}
