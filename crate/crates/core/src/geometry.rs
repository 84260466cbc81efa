//! Exact geometric predicates on integer points.
//!
//! Input coordinates are rationals; a [`crate::PlaneGraph`] scales them by a
//! common denominator so that every point handled here is integral. All
//! predicates below are invariant under that scaling.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Violation};
use crate::exact::{exact_sign, Scalar};
use crate::graph::Edge;

/// Largest admissible absolute value of a scaled coordinate.
///
/// Keeps squared distances inside `u128`/`i128`.
pub const COORD_LIMIT: i64 = 1 << 61;

/// A point with integer (scaled) coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

/// A closed straight segment between two points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }
}

/// The β of a lune-based β-skeleton, an exact rational in `[1, 2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BetaParam {
    num: i64,
    den: i64,
}

impl BetaParam {
    pub const GABRIEL: BetaParam = BetaParam { num: 1, den: 1 };
    pub const RNG: BetaParam = BetaParam { num: 2, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::BetaOutOfRange(format!("{num}/{den}")));
        }
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        // 1 <= num/den <= 2 with den > 0
        if num < den || num / 2 > den || (num / 2 == den && num % 2 != 0) {
            return Err(Error::BetaOutOfRange(format!("{num}/{den}")));
        }
        Ok(BetaParam { num, den })
    }

    pub fn from_rational(r: &BigRational) -> Result<Self, Error> {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => BetaParam::new(n, d),
            _ => Err(Error::BetaOutOfRange(r.to_string())),
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl Ord for BetaParam {
    fn cmp(&self, o: &Self) -> Ordering {
        // Both denominators are positive and reduced; the products fit in i128.
        (self.num as i128 * o.den as i128).cmp(&(o.num as i128 * self.den as i128))
    }
}

impl PartialOrd for BetaParam {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl FromStr for BetaParam {
    type Err = Error;

    /// Accepts `p/q` or a decimal such as `1.25`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let r = crate::io::parse_rational(s).map_err(|_| Error::BetaOutOfRange(s.to_string()))?;
        BetaParam::from_rational(&r)
    }
}

impl fmt::Display for BetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn orient_det<T: Scalar>(a: &Point, b: &Point, c: &Point) -> T {
    let (ax, ay) = (T::int(a.x), T::int(a.y));
    (T::int(b.x) - ax.clone()) * (T::int(c.y) - ay.clone()) - (T::int(b.y) - ay) * (T::int(c.x) - ax)
}

fn incircle_det<T: Scalar>(a: &Point, b: &Point, c: &Point, d: &Point) -> T {
    let (dx, dy) = (T::int(d.x), T::int(d.y));
    let adx = T::int(a.x) - dx.clone();
    let ady = T::int(a.y) - dy.clone();
    let bdx = T::int(b.x) - dx.clone();
    let bdy = T::int(b.y) - dy.clone();
    let cdx = T::int(c.x) - dx;
    let cdy = T::int(c.y) - dy;
    let alift = adx.clone() * adx.clone() + ady.clone() * ady.clone();
    let blift = bdx.clone() * bdx.clone() + bdy.clone() * bdy.clone();
    let clift = cdx.clone() * cdx.clone() + cdy.clone() * cdy.clone();
    alift * (bdx.clone() * cdy.clone() - cdx.clone() * bdy.clone())
        + blift * (cdx * ady.clone() - adx.clone() * cdy)
        + clift * (adx * bdy - bdx * ady)
}

fn dot_det<T: Scalar>(u: &Point, v: &Point, p: &Point) -> T {
    let (px, py) = (T::int(p.x), T::int(p.y));
    (T::int(u.x) - px.clone()) * (T::int(v.x) - px) + (T::int(u.y) - py.clone()) * (T::int(v.y) - py)
}

/// `|p - c|^2 - r^2` where `c` is `u` and `r = |uv|`.
fn lune_det<T: Scalar>(u: &Point, v: &Point, p: &Point) -> T {
    let d = |a: &Point, b: &Point| {
        let dx = T::int(a.x) - T::int(b.x);
        let dy = T::int(a.y) - T::int(b.y);
        dx.clone() * dx + dy.clone() * dy
    };
    d(u, p) - d(u, v)
}

/// Scaled test for the β-disk centred at `(1 - β/2) u + (β/2) v`.
fn beta_det<T: Scalar>(u: &Point, v: &Point, p: &Point, num: i64, den: i64) -> T {
    let two_den = T::int(2) * T::int(den);
    let wu = two_den.clone() - T::int(num);
    let wv = T::int(num);
    let cx = two_den.clone() * T::int(p.x) - wu.clone() * T::int(u.x) - wv.clone() * T::int(v.x);
    let cy = two_den * T::int(p.y) - wu * T::int(u.y) - wv * T::int(v.y);
    let ex = T::int(u.x) - T::int(v.x);
    let ey = T::int(u.y) - T::int(v.y);
    let n2 = T::int(num) * T::int(num);
    cx.clone() * cx + cy.clone() * cy - n2 * (ex.clone() * ex + ey.clone() * ey)
}

pub fn orient2d(a: Point, b: Point, c: Point) -> Orientation {
    match exact_sign!(orient_det(&a, &b, &c)) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Raw sign of the incircle determinant; positive iff `d` is inside the
/// circle through the counter-clockwise triangle `abc`.
pub(crate) fn incircle_sign(a: Point, b: Point, c: Point, d: Point) -> Ordering {
    exact_sign!(incircle_det(&a, &b, &c, &d))
}

/// Whether `d` lies strictly inside the circle through `a`, `b`, `c`.
///
/// The result does not depend on the winding of `abc`. Fails if `abc` is
/// degenerate.
pub fn in_circumcircle(a: Point, b: Point, c: Point, d: Point) -> Result<bool, Error> {
    let s = incircle_sign(a, b, c, d);
    match orient2d(a, b, c) {
        Orientation::CounterClockwise => Ok(s == Ordering::Greater),
        Orientation::Clockwise => Ok(s == Ordering::Less),
        Orientation::Collinear => Err(Error::DegenerateTriangle(a, b, c)),
    }
}

/// Whether the angle at `p` in `upv` is strictly obtuse.
pub fn in_diametral_circle(u: Point, v: Point, p: Point) -> bool {
    exact_sign!(dot_det(&u, &v, &p)) == Ordering::Less
}

pub fn in_lune(u: Point, v: Point, p: Point) -> bool {
    exact_sign!(lune_det(&u, &v, &p)) == Ordering::Less && exact_sign!(lune_det(&v, &u, &p)) == Ordering::Less
}

pub fn in_beta_neighbourhood(u: Point, v: Point, p: Point, beta: BetaParam) -> bool {
    let (n, d) = (beta.num, beta.den);
    exact_sign!(beta_det(&u, &v, &p, n, d)) == Ordering::Less
        && exact_sign!(beta_det(&v, &u, &p, n, d)) == Ordering::Less
}

/// Whether `p` lies on the closed segment `ab`, given that it is collinear with it.
fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

/// Whether the two segments meet anywhere other than at a common endpoint.
///
/// A point of one segment touching the interior of the other counts, as does
/// collinear overlap.
pub fn segments_properly_intersect(s1: &Segment, s2: &Segment) -> bool {
    use Orientation::Collinear;
    let o1 = orient2d(s1.a, s1.b, s2.a);
    let o2 = orient2d(s1.a, s1.b, s2.b);
    let o3 = orient2d(s2.a, s2.b, s1.a);
    let o4 = orient2d(s2.a, s2.b, s1.b);
    let shared = |p: Point| (p == s1.a || p == s1.b) && (p == s2.a || p == s2.b);

    if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
        return o1 != o2 && o3 != o4;
    }
    // A zero-length segment is a point; it meets the other segment if it lies on it.
    if s1.a == s1.b || s2.a == s2.b {
        let (p, s, o) = if s1.a == s1.b { (s1.a, s2, o3) } else { (s2.a, s1, o1) };
        return o == Collinear && within_box(s.a, s.b, p) && !shared(p);
    }
    if o1 == Collinear && o2 == Collinear {
        // All four points on one line: compare along the dominant axis.
        let key = |p: Point| {
            if s1.a.x != s1.b.x {
                p.x
            } else {
                p.y
            }
        };
        let (lo1, hi1) = (key(s1.a).min(key(s1.b)), key(s1.a).max(key(s1.b)));
        let (lo2, hi2) = (key(s2.a).min(key(s2.b)), key(s2.a).max(key(s2.b)));
        let lo = lo1.max(lo2);
        let hi = hi1.min(hi2);
        if lo > hi {
            return false;
        }
        if lo < hi {
            return true;
        }
        // Single common point.
        let p = [s1.a, s1.b, s2.a, s2.b].into_iter().find(|&p| key(p) == lo).expect("endpoint attains the bound");
        return !shared(p);
    }
    // Not all collinear: at most one common point, necessarily an endpoint.
    let candidates = [(o1, s2.a, s1), (o2, s2.b, s1), (o3, s1.a, s2), (o4, s1.b, s2)];
    candidates.iter().any(|&(o, p, s)| o == Collinear && within_box(s.a, s.b, p) && !shared(p))
}

/// Scans for the lexicographically first collinear triple, then for the
/// first cocircular quadruple.
///
/// O(n^4); intended for small inputs.
pub fn check_general_position(points: &[Point]) -> Result<(), Violation> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d(points[i], points[j], points[k]) == Orientation::Collinear {
                    return Err(Violation::Collinear([i, j, k]));
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if incircle_sign(points[i], points[j], points[k], points[l]) == Ordering::Equal {
                        return Err(Violation::Cocircular([i, j, k, l]));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Squared Euclidean distance. Exact for coordinates within [`COORD_LIMIT`].
pub fn squared_distance(a: Point, b: Point) -> u128 {
    let dx = (a.x as i128 - b.x as i128).unsigned_abs();
    let dy = (a.y as i128 - b.y as i128).unsigned_abs();
    dx * dx + dy * dy
}

/// Total order on edges: squared length, then `(min id, max id)`.
pub fn compare_edges(points: &[Point], e1: Edge, e2: Edge) -> Ordering {
    let l1 = squared_distance(points[e1.u], points[e1.v]);
    let l2 = squared_distance(points[e2.u], points[e2.v]);
    l1.cmp(&l2).then_with(|| (e1.u, e1.v).cmp(&(e2.u, e2.v)))
}

/// Squared distance from `p` to the closed segment `uv`, exactly.
pub fn segment_distance_sq(p: Point, u: Point, v: Point) -> BigRational {
    let r = |x: i64| BigRational::from_integer(BigInt::from(x));
    let (px, py, ux, uy, vx, vy) = (r(p.x), r(p.y), r(u.x), r(u.y), r(v.x), r(v.y));
    let ex = &vx - &ux;
    let ey = &vy - &uy;
    let len2 = &ex * &ex + &ey * &ey;
    let mut t = if len2.is_zero() { BigRational::zero() } else { ((&px - &ux) * &ex + (&py - &uy) * &ey) / len2 };
    if t < BigRational::zero() {
        t = BigRational::zero();
    } else if t > BigRational::one() {
        t = BigRational::one();
    }
    let qx = ux + &t * ex;
    let qy = uy + t * ey;
    let dx = px - qx;
    let dy = py - qy;
    &dx * &dx + &dy * &dy
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orient2d(p(0, 0), p(1, 0), p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orient2d(p(0, 0), p(1, 1), p(2, 2)), Orientation::Collinear);
        assert_eq!(orient2d(p(0, 0), p(0, 1), p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orientation_is_exact_near_limits() {
        let m = COORD_LIMIT;
        assert_eq!(orient2d(p(-m, -m), p(m, m), p(m - 1, m - 1)), Orientation::Collinear);
        assert_eq!(orient2d(p(-m, -m), p(m, m), p(m - 1, m)), Orientation::CounterClockwise);
        assert_eq!(orient2d(p(-m, -m), p(m, m), p(m, m - 1)), Orientation::Clockwise);
    }

    #[test]
    fn circumcircle_examples() {
        assert!(in_circumcircle(p(0, 0), p(2, 0), p(0, 2), p(1, 1)).unwrap());
        assert!(!in_circumcircle(p(0, 0), p(2, 0), p(0, 2), p(2, 2)).unwrap());
        assert!(!in_circumcircle(p(0, 0), p(4, 0), p(2, 3), p(10, 10)).unwrap());
        // Winding does not matter.
        assert!(in_circumcircle(p(0, 2), p(2, 0), p(0, 0), p(1, 1)).unwrap());
        assert!(in_circumcircle(p(0, 0), p(1, 1), p(2, 2), p(5, 0)).is_err());
    }

    #[test]
    fn region_examples() {
        // Coordinates doubled so that 0.5 and 1.8 become integers.
        assert!(in_diametral_circle(p(0, 0), p(4, 0), p(2, 1)));
        assert!(!in_diametral_circle(p(0, 0), p(4, 0), p(0, 2)));
        assert!(!in_diametral_circle(p(0, 0), p(4, 0), p(6, 0)));

        assert!(in_lune(p(0, 0), p(2, 0), p(1, 0)));
        assert!(!in_lune(p(0, 0), p(2, 0), p(0, 2)));
        assert!(!in_lune(p(0, 0), p(10, 0), p(5, 9)));
    }

    #[test]
    fn beta_examples() {
        // u=(0,0), v=(2,0), p=(1,1.05) scaled by 100. Both disk distances are
        // sqrt(1.3525) < 1.5, so p is inside.
        let b = BetaParam::new(3, 2).unwrap();
        assert!(in_beta_neighbourhood(p(0, 0), p(200, 0), p(100, 105), b));
        // Just outside the upper tip: the disks meet at height sqrt(2) ~ 1.4142.
        assert!(!in_beta_neighbourhood(p(0, 0), p(20000, 0), p(10000, 14143), b));
        assert!(in_beta_neighbourhood(p(0, 0), p(20000, 0), p(10000, 14142), b));
        assert!(in_beta_neighbourhood(p(0, 0), p(4, 0), p(2, 1), BetaParam::GABRIEL));
        assert!(!in_beta_neighbourhood(p(0, 0), p(2, 0), p(0, 2), BetaParam::RNG));
    }

    #[test]
    fn beta_order_is_numeric() {
        let b = |n, d| BetaParam::new(n, d).unwrap();
        assert!(b(5, 4) < b(3, 2));
        assert!(BetaParam::GABRIEL < b(5, 4));
        assert!(b(3, 2) < BetaParam::RNG);
        assert_eq!(b(6, 4), b(3, 2));
    }

    #[test]
    fn beta_parsing() {
        assert_eq!("1.5".parse::<BetaParam>().unwrap(), BetaParam::new(3, 2).unwrap());
        assert_eq!("6/4".parse::<BetaParam>().unwrap().to_string(), "3/2");
        assert_eq!("2".parse::<BetaParam>().unwrap(), BetaParam::RNG);
        assert!("2.01".parse::<BetaParam>().is_err());
        assert!("0.99".parse::<BetaParam>().is_err());
        assert!("5/2".parse::<BetaParam>().is_err());
        assert!(BetaParam::new(1, 0).is_err());
        assert_eq!(BetaParam::new(-4, -2).unwrap(), BetaParam::RNG);
    }

    #[test]
    fn segment_examples() {
        let s = |a: (i64, i64), b: (i64, i64)| Segment::new(p(a.0, a.1), p(b.0, b.1));
        assert!(segments_properly_intersect(&s((0, 0), (2, 2)), &s((0, 2), (2, 0))));
        assert!(!segments_properly_intersect(&s((0, 0), (1, 0)), &s((1, 0), (2, 1))));
        assert!(!segments_properly_intersect(&s((0, 0), (1, 0)), &s((0, 1), (1, 1))));
        // T-junction.
        assert!(segments_properly_intersect(&s((0, 0), (2, 0)), &s((1, 0), (1, 3))));
        // Collinear overlap, collinear touch, collinear disjoint.
        assert!(segments_properly_intersect(&s((0, 0), (2, 0)), &s((1, 0), (3, 0))));
        assert!(!segments_properly_intersect(&s((0, 0), (2, 0)), &s((2, 0), (3, 0))));
        assert!(!segments_properly_intersect(&s((0, 0), (1, 0)), &s((2, 0), (3, 0))));
        // Same segment.
        assert!(segments_properly_intersect(&s((0, 0), (1, 1)), &s((1, 1), (0, 0))));
        // Endpoint on the supporting line but outside the segment.
        assert!(!segments_properly_intersect(&s((0, 0), (1, 0)), &s((2, 0), (2, 5))));
        // Vertical collinear overlap.
        assert!(segments_properly_intersect(&s((0, 0), (0, 2)), &s((0, 1), (0, 5))));
    }

    #[test]
    fn general_position_examples() {
        assert_eq!(check_general_position(&[p(0, 0), p(1, 0), p(0, 1)]), Ok(()));
        assert_eq!(check_general_position(&[p(0, 0), p(1, 1), p(2, 2)]), Err(Violation::Collinear([0, 1, 2])));
        assert_eq!(
            check_general_position(&[p(1, 0), p(0, 1), p(-1, 0), p(0, -1)]),
            Err(Violation::Cocircular([0, 1, 2, 3]))
        );
    }

    #[test]
    fn edge_order_examples() {
        let pts = [p(0, 0), p(2, 0), p(0, 2), p(0, 4), p(1, 2)];
        // len^2 4 vs len^2 5
        assert_eq!(compare_edges(&pts, Edge::new(0, 1), Edge::new(0, 4)), Ordering::Less);
        // equal length 2 on (0,2) and (2,3) ... and (0,1)
        assert_eq!(compare_edges(&pts, Edge::new(0, 2), Edge::new(2, 3)), Ordering::Less);
        assert_eq!(compare_edges(&pts, Edge::new(1, 0), Edge::new(0, 1)), Ordering::Equal);
    }

    #[test]
    fn segment_distance() {
        let d = segment_distance_sq(p(1, 1), p(0, 0), p(2, 0));
        assert_eq!(d, BigRational::one());
        let d = segment_distance_sq(p(5, 0), p(0, 0), p(2, 0));
        assert_eq!(d, BigRational::from_integer(9.into()));
        let d = segment_distance_sq(p(0, 1), p(0, 0), p(1, 1));
        assert_eq!(d, BigRational::new(1.into(), 2.into()));
    }
}
