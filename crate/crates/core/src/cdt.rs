//! Constrained Delaunay triangulation.
//!
//! Points are inserted in Hilbert order with Bowyer-Watson; the hull is
//! closed off by ghost triangles sharing a vertex at infinity. Constraint
//! edges are then inserted one by one: the triangles they cross are removed
//! and the two resulting pseudo-polygons are retriangulated.
//!
//! Every exact zero met along the way (three collinear points, four
//! cocircular points) is reported as a general-position violation.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result, Violation};
use crate::geometry::{incircle_sign, orient2d, squared_distance, Orientation, Point};
use crate::graph::{Edge, EdgeWeight, PlaneGraph, VertexId, WeightedEdge, WeightedGraph};

pub type TriangleId = usize;

/// An edge of the triangulation.
///
/// `triangles[0]` lies to the left of `edge.u -> edge.v`, `triangles[1]` to
/// the right; `None` marks the outside of the convex hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriEdge {
    pub edge: Edge,
    pub constrained: bool,
    pub triangles: [Option<TriangleId>; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Euclidean,
    ZeroOnConstraints,
}

/// A triangulation in canonical form: counter-clockwise triangles starting
/// at their smallest vertex, sorted; edges sorted.
#[derive(Clone, Debug)]
pub struct Triangulation {
    points: Vec<Point>,
    triangles: Vec<[VertexId; 3]>,
    neighbors: Vec<[Option<TriangleId>; 3]>,
    edges: Vec<TriEdge>,
    lookup: HashMap<Edge, usize>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.triangles == other.triangles && self.edges == other.edges
    }
}

impl Triangulation {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn triangles(&self) -> &[[VertexId; 3]] {
        &self.triangles
    }

    /// `neighbors(t)[i]` is across the edge opposite vertex `i`.
    pub fn neighbors(&self, t: TriangleId) -> [Option<TriangleId>; 3] {
        self.neighbors[t]
    }

    pub fn edges(&self) -> &[TriEdge] {
        &self.edges
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.lookup.get(&e).copied()
    }

    pub fn edge(&self, e: Edge) -> Option<&TriEdge> {
        self.edge_id(e).map(|i| &self.edges[i])
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.lookup.contains_key(&e)
    }

    /// Vertex of triangle `t` not on `e`.
    pub fn apex(&self, t: TriangleId, e: Edge) -> VertexId {
        let tri = self.triangles[t];
        *tri.iter().find(|&&x| x != e.u && x != e.v).expect("edge of triangle")
    }

    /// Apexes of the triangles on the left and right of `e`.
    pub fn apexes(&self, e: Edge) -> Result<[Option<VertexId>; 2]> {
        let te = self.edge(e).ok_or(Error::MissingEdge(e))?;
        Ok(te.triangles.map(|t| t.map(|t| self.apex(t, e))))
    }

    pub fn hull_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.triangles.iter().any(Option::is_none)).count()
    }

    /// Hull edges count as locally Delaunay.
    pub fn is_locally_delaunay(&self, e: Edge) -> Result<bool> {
        let te = self.edge(e).ok_or(Error::MissingEdge(e))?;
        Ok(self.locally_delaunay_at(te))
    }

    pub(crate) fn locally_delaunay_at(&self, te: &TriEdge) -> bool {
        match te.triangles {
            [Some(l), Some(r)] => {
                let [a, b, c] = self.triangles[l].map(|v| self.points[v]);
                let d = self.points[self.apex(r, te.edge)];
                incircle_sign(a, b, c, d) != Ordering::Greater
            }
            _ => true,
        }
    }

    pub fn edge_weight_view(&self, mode: WeightMode) -> WeightedGraph {
        let edges = self
            .edges
            .iter()
            .map(|te| {
                let weight = if mode == WeightMode::ZeroOnConstraints && te.constrained {
                    EdgeWeight::Zero
                } else {
                    EdgeWeight::Euclidean(squared_distance(self.points[te.edge.u], self.points[te.edge.v]))
                };
                WeightedEdge { edge: te.edge, weight }
            })
            .collect();
        WeightedGraph::new(self.points.len(), edges)
    }
}

pub fn build_cdt(g: &PlaneGraph) -> Result<Triangulation> {
    let pts = g.points();
    let n = pts.len();
    if n < 3 {
        let edges: Vec<TriEdge> = if n == 2 {
            vec![TriEdge {
                edge: Edge::new(0, 1),
                constrained: g.contains_edge(Edge::new(0, 1)),
                triangles: [None, None],
            }]
        } else {
            Vec::new()
        };
        let lookup = edges.iter().enumerate().map(|(i, e)| (e.edge, i)).collect();
        return Ok(Triangulation { points: pts.to_vec(), triangles: Vec::new(), neighbors: Vec::new(), edges, lookup });
    }
    if n >= GHOST as usize {
        return Err(Error::InvalidGraph(format!("too many vertices: {n}")));
    }
    let mut b = Builder::new(pts);
    let order = hilbert_order(pts);
    b.init(order[0], order[1], order[2])?;
    for &p in &order[3..] {
        b.insert(p)?;
    }
    for e in g.edges() {
        b.insert_constraint(e.u as u32, e.v as u32)?;
    }
    b.finish()
}

const GHOST: u32 = u32::MAX;
const NONE: u32 = u32::MAX;

struct Builder<'a> {
    pts: &'a [Point],
    verts: Vec<[u32; 3]>,
    nbrs: Vec<[u32; 3]>,
    alive: Vec<bool>,
    free: Vec<u32>,
    /// Some live triangle incident to each vertex.
    vtri: Vec<u32>,
    last: u32,
    stamp: Vec<u32>,
    in_cavity: Vec<bool>,
    epoch: u32,
    turn: usize,
    constrained: HashSet<Edge>,
}

fn collinear(a: u32, b: u32, c: u32) -> Error {
    let mut v = [a as usize, b as usize, c as usize];
    v.sort_unstable();
    Error::GeneralPosition(Violation::Collinear(v))
}

fn cocircular(a: u32, b: u32, c: u32, d: u32) -> Error {
    let mut v = [a as usize, b as usize, c as usize, d as usize];
    v.sort_unstable();
    Error::GeneralPosition(Violation::Cocircular(v))
}

impl<'a> Builder<'a> {
    fn new(pts: &'a [Point]) -> Self {
        let cap = 2 * pts.len() + 8;
        Builder {
            pts,
            verts: Vec::with_capacity(cap),
            nbrs: Vec::with_capacity(cap),
            alive: Vec::with_capacity(cap),
            free: Vec::new(),
            vtri: vec![NONE; pts.len()],
            last: NONE,
            stamp: Vec::with_capacity(cap),
            in_cavity: Vec::with_capacity(cap),
            epoch: 0,
            turn: 0,
            constrained: HashSet::new(),
        }
    }

    fn pt(&self, v: u32) -> Point {
        self.pts[v as usize]
    }

    /// +1 if `p` is left of `a -> b`, -1 if right.
    fn side(&self, a: u32, b: u32, p: u32) -> Result<i8> {
        match orient2d(self.pt(a), self.pt(b), self.pt(p)) {
            Orientation::CounterClockwise => Ok(1),
            Orientation::Clockwise => Ok(-1),
            Orientation::Collinear => Err(collinear(a, b, p)),
        }
    }

    fn is_ghost(&self, t: u32) -> bool {
        self.verts[t as usize].contains(&GHOST)
    }

    fn alloc(&mut self, v: [u32; 3]) -> u32 {
        if let Some(t) = self.free.pop() {
            let i = t as usize;
            self.verts[i] = v;
            self.nbrs[i] = [NONE; 3];
            self.alive[i] = true;
            t
        } else {
            self.verts.push(v);
            self.nbrs.push([NONE; 3]);
            self.alive.push(true);
            self.stamp.push(0);
            self.in_cavity.push(false);
            (self.verts.len() - 1) as u32
        }
    }

    fn kill(&mut self, t: u32) {
        self.alive[t as usize] = false;
        self.free.push(t);
    }

    /// Whether `p` lies in the open circumdisk of `t`; for a ghost triangle,
    /// in the open outer half-plane of its finite edge.
    fn conflict(&self, t: u32, p: u32) -> Result<bool> {
        let v = self.verts[t as usize];
        if let Some(k) = v.iter().position(|&x| x == GHOST) {
            let a = v[(k + 1) % 3];
            let b = v[(k + 2) % 3];
            return Ok(self.side(a, b, p)? > 0);
        }
        match incircle_sign(self.pt(v[0]), self.pt(v[1]), self.pt(v[2]), self.pt(p)) {
            Ordering::Greater => Ok(true),
            Ordering::Less => Ok(false),
            Ordering::Equal => Err(cocircular(v[0], v[1], v[2], p)),
        }
    }

    /// Sets neighbor links for freshly created triangles. Edges on
    /// `boundary` attach to the given outside triangle; the rest must pair up
    /// among the new triangles.
    fn stitch(&mut self, new: &[u32], boundary: &HashMap<(u32, u32), u32>) -> Result<()> {
        let mut open: HashMap<(u32, u32), (u32, usize)> = HashMap::with_capacity(new.len() * 2);
        for &t in new {
            let v = self.verts[t as usize];
            for i in 0..3 {
                let e = (v[(i + 1) % 3], v[(i + 2) % 3]);
                if let Some(&nb) = boundary.get(&e) {
                    self.nbrs[t as usize][i] = nb;
                    let w = self.verts[nb as usize];
                    let j = (0..3)
                        .find(|&j| w[(j + 1) % 3] == e.1 && w[(j + 2) % 3] == e.0)
                        .ok_or_else(|| Error::Internal("outside triangle lost its edge".into()))?;
                    self.nbrs[nb as usize][j] = t;
                } else if let Some((t2, j)) = open.remove(&(e.1, e.0)) {
                    self.nbrs[t as usize][i] = t2;
                    self.nbrs[t2 as usize][j] = t;
                } else {
                    open.insert(e, (t, i));
                }
            }
            for &x in &v {
                if x != GHOST {
                    self.vtri[x as usize] = t;
                }
            }
        }
        if !open.is_empty() {
            return Err(Error::Internal("unmatched edges after retriangulation".into()));
        }
        Ok(())
    }

    fn init(&mut self, a: u32, b: u32, c: u32) -> Result<()> {
        let (b, c) = if self.side(a, b, c)? > 0 { (b, c) } else { (c, b) };
        let t = self.alloc([a, b, c]);
        let g1 = self.alloc([b, a, GHOST]);
        let g2 = self.alloc([c, b, GHOST]);
        let g3 = self.alloc([a, c, GHOST]);
        self.stitch(&[t, g1, g2, g3], &HashMap::new())?;
        self.last = t;
        Ok(())
    }

    fn locate(&mut self, p: u32) -> Result<u32> {
        let mut t = self.last;
        let limit = 4 * self.verts.len() + 64;
        for _ in 0..limit {
            if self.is_ghost(t) {
                return Ok(t);
            }
            let v = self.verts[t as usize];
            self.turn = self.turn.wrapping_add(1);
            let start = self.turn % 3;
            let mut next = None;
            for k in 0..3 {
                let i = (start + k) % 3;
                if self.side(v[(i + 1) % 3], v[(i + 2) % 3], p)? < 0 {
                    next = Some(self.nbrs[t as usize][i]);
                    break;
                }
            }
            match next {
                Some(nt) => t = nt,
                None => return Ok(t),
            }
        }
        Err(Error::Internal("point location did not terminate".into()))
    }

    fn insert(&mut self, p: u32) -> Result<()> {
        let t0 = self.locate(p)?;
        self.epoch += 1;
        let epoch = self.epoch;
        self.stamp[t0 as usize] = epoch;
        self.in_cavity[t0 as usize] = true;
        let mut cavity = vec![t0];
        let mut rim = Vec::new();
        let mut k = 0;
        while k < cavity.len() {
            let t = cavity[k];
            k += 1;
            let v = self.verts[t as usize];
            for i in 0..3 {
                let nb = self.nbrs[t as usize][i];
                let inside = if self.stamp[nb as usize] == epoch {
                    self.in_cavity[nb as usize]
                } else {
                    let c = self.conflict(nb, p)?;
                    self.stamp[nb as usize] = epoch;
                    self.in_cavity[nb as usize] = c;
                    if c {
                        cavity.push(nb);
                    }
                    c
                };
                if !inside {
                    rim.push(((v[(i + 1) % 3], v[(i + 2) % 3]), nb));
                }
            }
        }
        for &t in &cavity {
            self.kill(t);
        }
        let new: Vec<u32> = rim.iter().map(|&((a, b), _)| self.alloc([a, b, p])).collect();
        let boundary: HashMap<(u32, u32), u32> = rim.into_iter().collect();
        self.stitch(&new, &boundary)?;
        self.last = *new
            .iter()
            .find(|&&t| !self.is_ghost(t))
            .ok_or_else(|| Error::Internal("insertion produced no finite triangle".into()))?;
        Ok(())
    }

    fn insert_constraint(&mut self, a: u32, b: u32) -> Result<()> {
        let key = Edge::new(a as usize, b as usize);
        // Find the triangle around `a` whose opposite edge the segment crosses.
        let start = self.vtri[a as usize];
        let mut t = start;
        let (t0, mut r, mut l) = loop {
            let v = self.verts[t as usize];
            let i = v.iter().position(|&x| x == a).expect("vertex of its triangle");
            let x = v[(i + 1) % 3];
            let y = v[(i + 2) % 3];
            if x == b || y == b {
                self.constrained.insert(key);
                return Ok(());
            }
            if x != GHOST && y != GHOST && self.side(a, b, x)? < 0 && self.side(a, b, y)? > 0 {
                break (t, x, y);
            }
            t = self.nbrs[t as usize][(i + 1) % 3];
            if t == start {
                return Err(Error::Internal(format!("no triangle at {a} faces {b}")));
            }
        };
        let crossing = |s: &Self, r: u32, l: u32| -> Result<()> {
            let e = Edge::new(r as usize, l as usize);
            if s.constrained.contains(&e) {
                Err(Error::NonPlanar(key, e))
            } else {
                Ok(())
            }
        };
        crossing(self, r, l)?;
        let mut removed = vec![t0];
        let mut right = vec![r];
        let mut left = vec![l];
        let mut cur = t0;
        loop {
            let v = self.verts[cur as usize];
            let j = (0..3).find(|&j| v[j] != r && v[j] != l).expect("triangle has a third vertex");
            let nt = self.nbrs[cur as usize][j];
            if self.is_ghost(nt) {
                return Err(Error::Internal(format!("constraint {key} left the hull")));
            }
            removed.push(nt);
            let w = self.verts[nt as usize];
            let z = *w.iter().find(|&&z| z != r && z != l).expect("triangle has a third vertex");
            if z == b {
                break;
            }
            if self.side(a, b, z)? > 0 {
                left.push(z);
                l = z;
            } else {
                right.push(z);
                r = z;
            }
            crossing(self, r, l)?;
            cur = nt;
        }
        self.constrained.insert(key);

        let mut boundary = HashMap::new();
        for &t in &removed {
            let v = self.verts[t as usize];
            for i in 0..3 {
                let nb = self.nbrs[t as usize][i];
                if !removed.contains(&nb) {
                    boundary.insert((v[(i + 1) % 3], v[(i + 2) % 3]), nb);
                }
            }
        }
        for &t in &removed {
            self.kill(t);
        }
        let mut tris = Vec::with_capacity(removed.len());
        self.fill_pseudo_polygon(a, b, &left, &mut tris)?;
        right.reverse();
        self.fill_pseudo_polygon(b, a, &right, &mut tris)?;
        let new: Vec<u32> = tris.into_iter().map(|v| self.alloc(v)).collect();
        self.stitch(&new, &boundary)?;
        self.last = new[0];
        Ok(())
    }

    /// Triangulates the polygon bounded by `a -> b` and the chain running
    /// from next to `a` round to next to `b`, all on the left of `a -> b`.
    fn fill_pseudo_polygon(&self, a: u32, b: u32, chain: &[u32], out: &mut Vec<[u32; 3]>) -> Result<()> {
        let mut stack = vec![(a, b, 0usize, chain.len())];
        while let Some((a, b, lo, hi)) = stack.pop() {
            if lo == hi {
                continue;
            }
            let mut ci = lo;
            for k in lo + 1..hi {
                let c = chain[ci];
                match incircle_sign(self.pt(a), self.pt(b), self.pt(c), self.pt(chain[k])) {
                    Ordering::Greater => ci = k,
                    Ordering::Less => {}
                    Ordering::Equal => return Err(cocircular(a, b, c, chain[k])),
                }
            }
            let c = chain[ci];
            if self.side(a, b, c)? < 0 {
                return Err(Error::Internal("retriangulation inverted a triangle".into()));
            }
            out.push([a, b, c]);
            stack.push((a, c, lo, ci));
            stack.push((c, b, ci + 1, hi));
        }
        Ok(())
    }

    fn finish(self) -> Result<Triangulation> {
        let mut old_ids: Vec<u32> =
            (0..self.verts.len() as u32).filter(|&t| self.alive[t as usize] && !self.is_ghost(t)).collect();
        let canon = |v: [u32; 3]| -> [VertexId; 3] {
            let k = (0..3).min_by_key(|&k| v[k]).unwrap();
            [v[k], v[(k + 1) % 3], v[(k + 2) % 3]].map(|x| x as usize)
        };
        old_ids.sort_by_key(|&t| canon(self.verts[t as usize]));
        let mut new_id = vec![usize::MAX; self.verts.len()];
        for (i, &t) in old_ids.iter().enumerate() {
            new_id[t as usize] = i;
        }
        let triangles: Vec<[VertexId; 3]> = old_ids.iter().map(|&t| canon(self.verts[t as usize])).collect();
        let mut neighbors = Vec::with_capacity(triangles.len());
        for (i, &t) in old_ids.iter().enumerate() {
            let v = self.verts[t as usize];
            let mut nb = [None; 3];
            for (k, &vk) in v.iter().enumerate() {
                // Position of vertex v[k] in the canonical rotation.
                let pos = triangles[i].iter().position(|&x| x == vk as usize).unwrap();
                let o = self.nbrs[t as usize][k];
                nb[pos] = if self.is_ghost(o) { None } else { Some(new_id[o as usize]) };
            }
            neighbors.push(nb);
        }
        let mut sides: HashMap<Edge, [Option<TriangleId>; 2]> = HashMap::new();
        for (i, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                let (p, q) = (tri[(k + 1) % 3], tri[(k + 2) % 3]);
                let slot = sides.entry(Edge::new(p, q)).or_insert([None, None]);
                slot[usize::from(p > q)] = Some(i);
            }
        }
        let mut edges: Vec<TriEdge> = sides
            .into_iter()
            .map(|(edge, triangles)| TriEdge { edge, constrained: self.constrained.contains(&edge), triangles })
            .collect();
        edges.sort_by_key(|e| e.edge);
        let lookup: HashMap<Edge, usize> = edges.iter().enumerate().map(|(i, e)| (e.edge, i)).collect();
        for e in &self.constrained {
            if !lookup.contains_key(e) {
                return Err(Error::Internal(format!("constraint {e} missing from output")));
            }
        }
        let t = Triangulation { points: self.pts.to_vec(), triangles, neighbors, edges, lookup };
        for te in &t.edges {
            if te.constrained {
                continue;
            }
            if let [Some(l), Some(r)] = te.triangles {
                let [a, b, c] = t.triangles[l];
                let d = t.apex(r, te.edge);
                let pt = |v: usize| t.points[v];
                match incircle_sign(pt(a), pt(b), pt(c), pt(d)) {
                    Ordering::Less => {}
                    Ordering::Equal => {
                        return Err(cocircular(a as u32, b as u32, c as u32, d as u32));
                    }
                    Ordering::Greater => {
                        return Err(Error::Internal(format!("edge {} is not locally Delaunay", te.edge)));
                    }
                }
            }
        }
        Ok(t)
    }
}

fn hilbert_index(mut x: u32, mut y: u32, side: u32) -> u64 {
    let mut d = 0u64;
    let mut s = side / 2;
    while s > 0 {
        let rx = u32::from(x & s > 0);
        let ry = u32::from(y & s > 0);
        d += (s as u64) * (s as u64) * u64::from((3 * rx) ^ ry);
        if ry == 0 {
            if rx == 1 {
                x = side - 1 - x;
                y = side - 1 - y;
            }
            std::mem::swap(&mut x, &mut y);
        }
        s /= 2;
    }
    d
}

fn hilbert_order(pts: &[Point]) -> Vec<u32> {
    const SIDE: u32 = 1 << 16;
    let minx = pts.iter().map(|p| p.x).min().unwrap_or(0) as i128;
    let miny = pts.iter().map(|p| p.y).min().unwrap_or(0) as i128;
    let maxx = pts.iter().map(|p| p.x).max().unwrap_or(0) as i128;
    let maxy = pts.iter().map(|p| p.y).max().unwrap_or(0) as i128;
    let span = (maxx - minx).max(maxy - miny).max(1);
    let cell = |v: i128, lo: i128| ((v - lo) * (SIDE as i128 - 1) / span) as u32;
    let mut keyed: Vec<(u64, u32)> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| (hilbert_index(cell(p.x as i128, minx), cell(p.y as i128, miny), SIDE), i as u32))
        .collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, i)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Validation;

    fn graph(pts: &[(i64, i64)], edges: &[(usize, usize)]) -> PlaneGraph {
        PlaneGraph::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect(), edges.to_vec()).unwrap()
    }

    fn edge_list(t: &Triangulation) -> Vec<(usize, usize, bool)> {
        t.edges().iter().map(|e| (e.edge.u, e.edge.v, e.constrained)).collect()
    }

    #[test]
    fn four_points_pick_delaunay_diagonal() {
        let g = graph(&[(0, 0), (10, 1), (11, 9), (1, 10)], &[]);
        let t = build_cdt(&g).unwrap();
        assert!(t.contains_edge(Edge::new(0, 2)) ^ t.contains_edge(Edge::new(1, 3)));
        assert_eq!(t.triangles().len(), 2);
        for te in t.edges() {
            assert!(t.is_locally_delaunay(te.edge).unwrap());
        }
        let flipped = graph(&[(0, 0), (10, 1), (11, 9), (1, 10)], &[(0, 2)]);
        let ft = build_cdt(&flipped).unwrap();
        let diag = if t.contains_edge(Edge::new(0, 2)) { (1, 3) } else { (0, 2) };
        let forced = graph(&[(0, 0), (10, 1), (11, 9), (1, 10)], &[diag]);
        let c = build_cdt(&forced).unwrap();
        assert!(c.contains_edge(Edge::new(diag.0, diag.1)));
        assert!(!c.is_locally_delaunay(Edge::new(diag.0, diag.1)).unwrap());
        assert!(ft.edge(Edge::new(0, 2)).unwrap().constrained);
    }

    #[test]
    fn triangulation_input_is_reproduced() {
        let pts = [(0, 0), (10, 1), (11, 9), (1, 10), (5, 4)];
        let all = graph(&pts, &[]);
        let t = build_cdt(&all).unwrap();
        let edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.edge.u, e.edge.v)).collect();
        let again = build_cdt(&graph(&pts, &edges)).unwrap();
        assert_eq!(again.triangles(), t.triangles());
        assert!(again.edges().iter().all(|e| e.constrained));
    }

    #[test]
    fn small_inputs() {
        let t = build_cdt(&graph(&[], &[])).unwrap();
        assert!(t.edges().is_empty());
        let t = build_cdt(&graph(&[(0, 0)], &[])).unwrap();
        assert!(t.edges().is_empty());
        let t = build_cdt(&graph(&[(0, 0), (3, 1)], &[(0, 1)])).unwrap();
        assert_eq!(edge_list(&t), vec![(0, 1, true)]);
        assert!(t.is_locally_delaunay(Edge::new(0, 1)).unwrap());
        let t = build_cdt(&graph(&[(0, 0), (4, 1), (2, 5)], &[])).unwrap();
        assert_eq!(t.triangles(), &[[0, 1, 2]]);
        assert_eq!(t.hull_edge_count(), 3);
        assert_eq!(t.apexes(Edge::new(0, 1)).unwrap(), [Some(2), None]);
    }

    #[test]
    fn constraint_crossing_many_triangles() {
        // A long horizontal constraint through a fan of points above and below.
        let mut pts = vec![(0, 0), (1000, 7)];
        for i in 1..10 {
            pts.push((100 * i + (i * i) % 17, 40 + (i * i * 7) % 31));
            pts.push((100 * i + 30, -50 - (i * i) % 37));
        }
        let g = graph(&pts, &[(0, 1)]);
        let t = build_cdt(&g).unwrap();
        assert!(t.edge(Edge::new(0, 1)).unwrap().constrained);
        let n = pts.len();
        let h = t.hull_edge_count();
        assert_eq!(t.triangles().len(), 2 * n - h - 2);
        assert_eq!(t.edges().len(), 3 * n - h - 3);
        for te in t.edges() {
            assert!(te.constrained || t.is_locally_delaunay(te.edge).unwrap());
        }
        // Neighbor links are mutual.
        for (i, nb) in (0..t.triangles().len()).map(|i| (i, t.neighbors(i))) {
            for j in nb.into_iter().flatten() {
                assert!(t.neighbors(j).contains(&Some(i)));
            }
        }
    }

    #[test]
    fn degeneracies_are_reported() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>();
        let g =
            PlaneGraph::with_scale(pts(&[(0, 0), (1, 1), (2, 2), (0, 3)]), 1, vec![], Validation::Structural).unwrap();
        assert!(matches!(build_cdt(&g), Err(Error::GeneralPosition(Violation::Collinear(_)))));
        let g =
            PlaneGraph::with_scale(pts(&[(1, 0), (0, 1), (-1, 0), (0, -1), (5, 5)]), 1, vec![], Validation::Structural)
                .unwrap();
        assert!(matches!(build_cdt(&g), Err(Error::GeneralPosition(Violation::Cocircular(_)))));
        let g = PlaneGraph::with_scale(
            pts(&[(0, 0), (4, 4), (0, 4), (4, 1), (9, -3)]),
            1,
            vec![(0, 1), (2, 3)],
            Validation::Structural,
        )
        .unwrap();
        assert!(matches!(build_cdt(&g), Err(Error::NonPlanar(_, _))));
    }

    #[test]
    fn weight_views() {
        let g = graph(&[(0, 0), (4, 1), (2, 5)], &[(0, 1)]);
        let t = build_cdt(&g).unwrap();
        let e = t.edge_weight_view(WeightMode::Euclidean);
        assert!(e.edges().iter().all(|w| matches!(w.weight, EdgeWeight::Euclidean(_))));
        let z = t.edge_weight_view(WeightMode::ZeroOnConstraints);
        assert_eq!(z.edges()[0].weight, EdgeWeight::Zero);
        let free = build_cdt(&graph(&[(0, 0), (4, 1), (2, 5)], &[])).unwrap();
        assert_eq!(free.edge_weight_view(WeightMode::Euclidean), free.edge_weight_view(WeightMode::ZeroOnConstraints));
    }

    #[test]
    fn hilbert_curve_is_a_bijection() {
        let mut seen = HashSet::new();
        for x in 0..8 {
            for y in 0..8 {
                assert!(seen.insert(hilbert_index(x, y, 8)));
            }
        }
        assert_eq!(*seen.iter().max().unwrap(), 63);
    }
}
