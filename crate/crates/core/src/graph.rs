//! Plane input graphs and their visibility graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    check_general_position, orient2d, segments_properly_intersect, squared_distance, Orientation, Point, Segment,
    COORD_LIMIT,
};
use crate::mst::UnionFind;

pub type VertexId = usize;

/// An undirected edge, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// How much of the input is checked when a [`PlaneGraph`] is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Structure, pairwise planarity (O(m^2)) and general position (O(n^4)).
    Full,
    /// Structure only. Geometric degeneracies are left to the triangulation,
    /// which rejects every one it depends on.
    Structural,
}

/// A straight-line plane graph on integer points.
///
/// Points carry an implicit common denominator `scale`: vertex `i` sits at
/// `points[i] / scale`.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    points: Vec<Point>,
    scale: i64,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.scale == other.scale && self.edges == other.edges
    }
}

impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Integer coordinates, fully validated.
    pub fn new(points: Vec<Point>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::with_scale(points, 1, edges, Validation::Full)
    }

    pub fn with_scale(
        points: Vec<Point>,
        scale: i64,
        edges: Vec<(VertexId, VertexId)>,
        validation: Validation,
    ) -> Result<Self> {
        if scale < 1 {
            return Err(Error::InvalidGraph(format!("scale must be positive, got {scale}")));
        }
        for (i, p) in points.iter().enumerate() {
            if p.x.abs() > COORD_LIMIT || p.y.abs() > COORD_LIMIT {
                return Err(Error::CoordinateRange(i));
            }
        }
        let mut seen = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert(*p, i) {
                return Err(Error::InvalidGraph(format!("vertices {j} and {i} coincide")));
            }
        }
        let n = points.len();
        let mut list = Vec::with_capacity(edges.len());
        let mut index = HashMap::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} references a vertex outside 0..{n}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let e = Edge::new(a, b);
            if index.insert(e, list.len()).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge {e}")));
            }
            list.push(e);
        }
        let g = PlaneGraph { points, scale, edges: list, index };
        if validation == Validation::Full {
            g.check_planar()?;
            check_general_position(&g.points).map_err(Error::GeneralPosition)?;
        }
        Ok(g)
    }

    /// Builds a graph from exact rational coordinates.
    pub fn from_rationals(
        coords: &[(BigRational, BigRational)],
        edges: Vec<(VertexId, VertexId)>,
        validation: Validation,
    ) -> Result<Self> {
        let mut lcm = BigInt::one();
        for (x, y) in coords {
            lcm = lcm.lcm(x.denom()).lcm(y.denom());
        }
        let scale = lcm.to_i64().filter(|s| *s <= COORD_LIMIT).ok_or(Error::CoordinateRange(0))?;
        let mut points = Vec::with_capacity(coords.len());
        for (i, (x, y)) in coords.iter().enumerate() {
            let sx = (x * &lcm).to_integer();
            let sy = (y * &lcm).to_integer();
            let fits = |v: &BigInt| v.abs() <= BigInt::from(COORD_LIMIT);
            if !fits(&sx) || !fits(&sy) {
                return Err(Error::CoordinateRange(i));
            }
            points.push(Point::new(sx.to_i64().unwrap(), sy.to_i64().unwrap()));
        }
        Self::with_scale(points, scale, edges, validation)
    }

    /// Same vertices, a different edge set.
    pub fn with_edges(&self, edges: Vec<(VertexId, VertexId)>, validation: Validation) -> Result<Self> {
        Self::with_scale(self.points.clone(), self.scale, edges, validation)
    }

    /// The graph `(V, s)` for a subset `s` of this graph's edges.
    pub fn subgraph<I: IntoIterator<Item = Edge>>(&self, s: I) -> Result<Self> {
        let mut edges = Vec::new();
        for e in s {
            if !self.contains_edge(e) {
                return Err(Error::InvalidGraph(format!("{e} is not an input edge")));
            }
            edges.push((e.u, e.v));
        }
        Self::with_scale(self.points.clone(), self.scale, edges, Validation::Structural)
    }

    fn check_planar(&self) -> Result<()> {
        for (i, e) in self.edges.iter().enumerate() {
            let s = self.segment(*e);
            for f in &self.edges[i + 1..] {
                if segments_properly_intersect(&s, &self.segment(*f)) {
                    return Err(Error::NonPlanar(*e, *f));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: VertexId) -> Point {
        self.points[v]
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.index.contains_key(&e)
    }

    pub fn segment(&self, e: Edge) -> Segment {
        Segment::new(self.points[e.u], self.points[e.v])
    }

    /// Exact input coordinates of vertex `v`.
    pub fn coordinates(&self, v: VertexId) -> (BigRational, BigRational) {
        let s = BigInt::from(self.scale);
        let p = self.points[v];
        (BigRational::new(BigInt::from(p.x), s.clone()), BigRational::new(BigInt::from(p.y), s))
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n());
        self.edges.iter().all(|e| uf.union(e.u, e.v))
    }

    /// Whether `u` and `v` see each other with respect to the edges.
    pub fn visible(&self, u: VertexId, v: VertexId) -> bool {
        if self.contains_edge(Edge::new(u, v)) {
            return true;
        }
        segment_visible(&self.points, &self.edges, u, v)
    }

    /// All mutually visible pairs, sorted.
    pub fn visibility_graph(&self) -> Vec<Edge> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.visible(u, v) {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    /// Visibility graph with Euclidean weights.
    pub fn evg(&self) -> WeightedGraph {
        self.weighted_visibility(|_| false)
    }

    /// Visibility graph with the input edges weighted zero.
    pub fn cvg(&self) -> WeightedGraph {
        self.weighted_visibility(|e| self.contains_edge(e))
    }

    fn weighted_visibility(&self, zero: impl Fn(Edge) -> bool) -> WeightedGraph {
        let edges = self
            .visibility_graph()
            .into_iter()
            .map(|e| {
                let weight = if zero(e) {
                    EdgeWeight::Zero
                } else {
                    EdgeWeight::Euclidean(squared_distance(self.points[e.u], self.points[e.v]))
                };
                WeightedEdge { edge: e, weight }
            })
            .collect();
        WeightedGraph::new(self.n(), edges)
    }
}

/// True iff segment `uv` crosses no edge of `obstacles` and passes through no
/// other point. Edges incident to `u` or `v` block only by overlap.
pub fn segment_visible(points: &[Point], obstacles: &[Edge], u: VertexId, v: VertexId) -> bool {
    let s = Segment::new(points[u], points[v]);
    for e in obstacles {
        if *e == Edge::new(u, v) {
            continue;
        }
        if segments_properly_intersect(&s, &Segment::new(points[e.u], points[e.v])) {
            return false;
        }
    }
    let (a, b) = (points[u], points[v]);
    for (w, &p) in points.iter().enumerate() {
        if w != u
            && w != v
            && orient2d(a, b, p) == Orientation::Collinear
            && a.x.min(b.x) <= p.x
            && p.x <= a.x.max(b.x)
            && a.y.min(b.y) <= p.y
            && p.y <= a.y.max(b.y)
        {
            return false;
        }
    }
    true
}

/// Edge weight: zero for constraints, else the exact squared length.
///
/// `Zero` orders before every `Euclidean` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeWeight {
    Zero,
    Euclidean(u128),
}

impl EdgeWeight {
    pub fn length(&self) -> f64 {
        match self {
            EdgeWeight::Zero => 0.0,
            EdgeWeight::Euclidean(sq) => (*sq as f64).sqrt(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub edge: Edge,
    pub weight: EdgeWeight,
}

impl WeightedEdge {
    /// The key Kruskal sorts by: weight, then endpoint ids.
    pub fn key(&self) -> (EdgeWeight, VertexId, VertexId) {
        (self.weight, self.edge.u, self.edge.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<WeightedEdge>,
}

impl WeightedGraph {
    /// Panics if an edge repeats or leaves `0..n`.
    pub fn new(n: usize, edges: Vec<WeightedEdge>) -> Self {
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            assert!(e.edge.v < n && e.edge.u != e.edge.v, "bad edge {}", e.edge);
            assert!(seen.insert(e.edge), "duplicate edge {}", e.edge);
        }
        WeightedGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn edge_set(&self) -> HashSet<Edge> {
        self.edges.iter().map(|e| e.edge).collect()
    }
}
