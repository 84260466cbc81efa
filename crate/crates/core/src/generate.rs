//! Seeded instance generators and the fixed fixtures used in tests.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::geometry::{check_general_position, orient2d, segments_properly_intersect, Orientation, Point, Segment};
use crate::graph::{Edge, PlaneGraph, Validation, VertexId};
use crate::io::parse_rational;
use crate::mst::UnionFind;

/// Side of the square random coordinates are drawn from.
pub const COORD_SPAN: i64 = 1 << 26;

/// Above this size the general-position check is skipped (it is quartic).
pub const GENERAL_POSITION_CHECK_MAX: usize = 64;

/// Below this size edges are drawn greedily from all vertex pairs; above it,
/// from a sweep triangulation.
const GREEDY_MAX: usize = 256;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct random points. For small `n` they are also in general
/// position (resampled until they are).
pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Point> {
    loop {
        let mut seen = HashSet::with_capacity(n);
        let mut pts = Vec::with_capacity(n);
        while pts.len() < n {
            let p = Point::new(rng.gen_range(0..COORD_SPAN), rng.gen_range(0..COORD_SPAN));
            if seen.insert(p) {
                pts.push(p);
            }
        }
        if n > GENERAL_POSITION_CHECK_MAX || check_general_position(&pts).is_ok() {
            return pts;
        }
    }
}

/// Edges of a triangulation built by sweeping the points left to right and
/// joining each new point to every hull vertex it sees. Cheap and far from
/// Delaunay.
pub fn sweep_triangulation(points: &[Point]) -> Vec<Edge> {
    let mut order: Vec<VertexId> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);
    let mut edges = Vec::new();
    if order.len() < 2 {
        return edges;
    }
    // Upper and lower hull chains, both running left to right.
    let mut upper = vec![order[0], order[1]];
    let mut lower = vec![order[0], order[1]];
    edges.push(Edge::new(order[0], order[1]));
    for &p in &order[2..] {
        let pp = points[p];
        // The previous point is the rightmost so far and ends both chains.
        edges.push(Edge::new(*upper.last().unwrap(), p));
        while upper.len() >= 2 {
            let (a, b) = (upper[upper.len() - 2], upper[upper.len() - 1]);
            if orient2d(points[a], points[b], pp) == Orientation::CounterClockwise {
                upper.pop();
                edges.push(Edge::new(a, p));
            } else {
                break;
            }
        }
        upper.push(p);
        while lower.len() >= 2 {
            let (a, b) = (lower[lower.len() - 2], lower[lower.len() - 1]);
            if orient2d(points[a], points[b], pp) == Orientation::Clockwise {
                lower.pop();
                edges.push(Edge::new(a, p));
            } else {
                break;
            }
        }
        lower.push(p);
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Shuffled candidate edges that are pairwise non-crossing as a whole set.
fn candidate_edges<R: Rng>(rng: &mut R, points: &[Point]) -> Vec<Edge> {
    let n = points.len();
    if n <= GREEDY_MAX {
        let mut pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))).collect();
        pairs.shuffle(rng);
        pairs
    } else {
        let mut e = sweep_triangulation(points);
        e.shuffle(rng);
        e
    }
}

fn crosses_any(points: &[Point], chosen: &[Edge], e: Edge) -> bool {
    let s = Segment::new(points[e.u], points[e.v]);
    chosen.iter().any(|c| segments_properly_intersect(&s, &Segment::new(points[c.u], points[c.v])))
}

/// Picks edges from the candidates, skipping crossings (small inputs only;
/// sweep candidates never cross), cycles when `forest`, and each survivor
/// with probability `keep`.
fn pick<R: Rng>(rng: &mut R, points: &[Point], forest: bool, keep: f64, max_edges: usize) -> Vec<(usize, usize)> {
    let n = points.len();
    let cands = candidate_edges(rng, points);
    let check_crossing = n <= GREEDY_MAX;
    let mut uf = UnionFind::new(n);
    let mut chosen = Vec::new();
    for e in cands {
        if chosen.len() >= max_edges {
            break;
        }
        if check_crossing && crosses_any(points, &chosen, e) {
            continue;
        }
        if forest && uf.find(e.u) == uf.find(e.v) {
            continue;
        }
        if !rng.gen_bool(keep) {
            continue;
        }
        if forest {
            uf.union(e.u, e.v);
        }
        chosen.push(e);
    }
    chosen.into_iter().map(|e| (e.u, e.v)).collect()
}

fn validation(n: usize) -> Validation {
    if n <= GENERAL_POSITION_CHECK_MAX {
        Validation::Full
    } else {
        Validation::Structural
    }
}

/// A random plane forest on `n` points.
pub fn random_forest(n: usize, seed: u64) -> PlaneGraph {
    let mut r = rng(seed);
    let pts = random_points(&mut r, n);
    let edges = pick(&mut r, &pts, true, 0.8, usize::MAX);
    PlaneGraph::with_scale(pts, 1, edges, validation(n)).expect("generated forest is valid")
}

/// A random plane graph on `n` points with at most `max_edges` edges.
pub fn random_plane_graph(n: usize, seed: u64, max_edges: usize) -> PlaneGraph {
    let mut r = rng(seed);
    let pts = random_points(&mut r, n);
    let edges = pick(&mut r, &pts, false, 0.5, max_edges);
    PlaneGraph::with_scale(pts, 1, edges, validation(n)).expect("generated graph is valid")
}

fn rational(s: &str) -> BigRational {
    parse_rational(s).expect("fixture coordinate")
}

fn from_decimal(coords: &[(&str, &str)], edges: Vec<(usize, usize)>) -> PlaneGraph {
    let c: Vec<(BigRational, BigRational)> = coords.iter().map(|(x, y)| (rational(x), rational(y))).collect();
    PlaneGraph::from_rationals(&c, edges, Validation::Full).expect("fixture is valid")
}

/// A three-vertex path whose two edges both have to be forced for the CMST.
pub fn figure2() -> PlaneGraph {
    from_decimal(&[("0", "0"), ("0.5", "2"), ("1", "0")], vec![(0, 1), (1, 2)])
}

/// A four-vertex path where only the middle edge has to be forced: it
/// crosses the short segment between the two ends.
pub fn figure3() -> PlaneGraph {
    from_decimal(&[("0", "0"), ("0.2", "1.2"), ("0.9", "-1.1"), ("1", "0")], vec![(0, 1), (1, 2), (2, 3)])
}

/// A zigzag path between two slightly curved rows, far apart. Every path
/// edge is much longer than the row spacing, so all `n - 1` of them must be
/// forced.
pub fn zigzag(n: usize) -> PlaneGraph {
    let mut pts = Vec::with_capacity(n);
    for k in 0..n as i64 {
        let i = k / 2;
        // Curving the rows keeps the points in general position.
        if k % 2 == 0 {
            pts.push(Point::new(20 * i, 1000 + i * i));
        } else {
            pts.push(Point::new(20 * i + 10, -(i * i) - 3 * i));
        }
    }
    let edges = (1..n).map(|k| (k - 1, k)).collect();
    let v = if n <= GENERAL_POSITION_CHECK_MAX { Validation::Full } else { Validation::Structural };
    PlaneGraph::with_scale(pts, 1, edges, v).expect("zigzag is valid")
}

/// A single input edge `uv` whose CDT apex below sits inside its diametral
/// disk but outside the circumcircle of the triangle above.
pub fn figure6() -> PlaneGraph {
    PlaneGraph::new(vec![Point::new(0, 0), Point::new(4, 0), Point::new(2, -1), Point::new(2, 5)], vec![(0, 1)])
        .expect("fixture is valid")
}

/// Converts an integer into an exact rational, for callers building
/// coordinates by hand.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Builds a plane graph from integer coordinates, for tests.
pub fn graph(points: &[(i64, i64)], edges: &[(usize, usize)]) -> Result<PlaneGraph> {
    PlaneGraph::new(points.iter().map(|&(x, y)| Point::new(x, y)).collect(), edges.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_forest(30, 7), random_forest(30, 7));
        assert_ne!(random_forest(30, 7), random_forest(30, 8));
        assert!(random_forest(30, 7).is_forest());
        assert!(random_plane_graph(20, 3, 15).edges().len() <= 15);
    }

    #[test]
    fn sweep_is_a_triangulation() {
        let mut r = rng(5);
        let pts = random_points(&mut r, 50);
        let e = sweep_triangulation(&pts);
        // A triangulation of n points with h hull vertices has 3n - 3 - h edges.
        let g = PlaneGraph::with_scale(pts, 1, e.iter().map(|e| (e.u, e.v)).collect(), Validation::Full).unwrap();
        let t = crate::cdt::build_cdt(&g).unwrap();
        assert_eq!(t.edges().len(), g.edges().len());
    }

    #[test]
    fn large_forest() {
        let f = random_forest(2000, 1);
        assert!(f.is_forest());
        assert!(f.edges().len() > 1000);
    }

    #[test]
    fn fixtures_build() {
        assert_eq!(figure2().scale(), 2);
        assert_eq!(figure3().scale(), 10);
        for n in 2..30 {
            assert_eq!(zigzag(n).edges().len(), n - 1);
        }
        assert_eq!(figure6().n(), 4);
    }
}
