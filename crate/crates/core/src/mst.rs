//! Kruskal minimum spanning trees under the exact total edge order.

use std::collections::HashSet;

use crate::cdt::{build_cdt, Triangulation, WeightMode};
use crate::error::{Error, Result};
use crate::graph::{Edge, PlaneGraph, VertexId, WeightedEdge, WeightedGraph};

/// Disjoint sets with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// A spanning tree, rooted at vertex 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanningTree {
    parent: Vec<Option<VertexId>>,
    depth: Vec<usize>,
    edges: Vec<WeightedEdge>,
    total: f64,
}

impl SpanningTree {
    fn from_edges(n: usize, edges: Vec<WeightedEdge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.edge.u].push(e.edge.v);
            adj[e.edge.v].push(e.edge.u);
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        if n > 0 {
            seen[0] = true;
            stack.push(0);
        }
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    stack.push(y);
                }
            }
        }
        let total = edges.iter().map(|e| e.weight.length()).sum();
        SpanningTree { parent, depth, edges, total }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    /// Edges in the order Kruskal accepted them.
    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    /// Sum of Euclidean lengths, constraints counting zero.
    pub fn total_weight(&self) -> f64 {
        self.total
    }

    pub fn edge_set(&self) -> HashSet<Edge> {
        self.edges.iter().map(|e| e.edge).collect()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.parent[e.u] == Some(e.v) || self.parent[e.v] == Some(e.u)
    }

    /// Tree edges on the path between `a` and `b`.
    pub fn path(&self, mut a: VertexId, mut b: VertexId) -> Vec<Edge> {
        let mut front = Vec::new();
        let mut back = Vec::new();
        while self.depth[a] > self.depth[b] {
            let p = self.parent[a].unwrap();
            front.push(Edge::new(a, p));
            a = p;
        }
        while self.depth[b] > self.depth[a] {
            let p = self.parent[b].unwrap();
            back.push(Edge::new(b, p));
            b = p;
        }
        while a != b {
            let (pa, pb) = (self.parent[a].unwrap(), self.parent[b].unwrap());
            front.push(Edge::new(a, pa));
            back.push(Edge::new(b, pb));
            a = pa;
            b = pb;
        }
        back.reverse();
        front.extend(back);
        front
    }
}

pub fn mst(g: &WeightedGraph) -> Result<SpanningTree> {
    let mut order: Vec<WeightedEdge> = g.edges().to_vec();
    order.sort_unstable_by_key(|e| e.key());
    let n = g.n();
    let mut uf = UnionFind::new(n);
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    for e in order {
        if uf.union(e.edge.u, e.edge.v) {
            chosen.push(e);
        }
    }
    if chosen.len() + 1 < n {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree::from_edges(n, chosen))
}

/// Euclidean MST computed on the triangulation's edges.
pub fn mst_of_cdt(t: &Triangulation) -> Result<SpanningTree> {
    mst(&t.edge_weight_view(WeightMode::Euclidean))
}

/// The constrained MST: input edges weigh zero.
pub fn cmst_of_cdt(t: &Triangulation) -> Result<SpanningTree> {
    mst(&t.edge_weight_view(WeightMode::ZeroOnConstraints))
}

pub fn cmst(f: &PlaneGraph) -> Result<SpanningTree> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    cmst_of_cdt(&build_cdt(f)?)
}
