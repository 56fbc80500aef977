//! Exact planar primitives: points, convex polygons, orientation-preserving
//! rigid motions, orientation predicates and convex clipping.
//!
//! The half-plane convention everywhere: a directed line a→b keeps its closed
//! LEFT side. Open-set semantics are the caller's business (components are
//! open; callers clip closed and discard zero-area results).

use crate::field::{cos_sin_for_field, FieldError, Quad};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("polygon needs at least one vertex")]
    Empty,
    #[error("vertex chain is not convex/CCW")]
    NotConvex,
}

/// Exact planar point; both coordinates live in one field.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Quad,
    pub y: Quad,
}

impl Point {
    pub fn new(x: Quad, y: Quad) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Quad::from_int(x), Quad::from_int(y))
    }

    pub fn scale(&self, s: &Quad) -> Point {
        Point::new(s * &self.x, s * &self.y)
    }

    pub fn cross(&self, other: &Point) -> Quad {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> Quad {
        &self.x * &other.x + &self.y * &other.y
    }

    /// Point reflection through `c`: 2c − self.
    pub fn reflect_through(&self, c: &Point) -> Point {
        Point::new(Quad::from_int(2) * &c.x - &self.x, Quad::from_int(2) * &c.y - &self.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let h = Quad::ratio(1, 2);
        Point::new(&h * &(&self.x + &other.x), &h * &(&self.y + &other.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of cross(b−a, c−a): +1 CCW, 0 collinear, −1 CW. The single predicate
/// underlying every region test in the system.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    (b - a).cross(&(c - a)).sign()
}

/// Where a point sits relative to a convex region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// How degenerate a vertex chain is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolygonKind {
    Polygon,
    Segment,
    Point,
}

/// Convex polygon as a CCW vertex chain. May degenerate to a segment or a
/// single point; `kind()` reports which. Empty intersections are represented
/// by `None` at the call sites, never by an empty vertex list.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    verts: Vec<Point>,
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.verts)
    }
}

impl ConvexPolygon {
    /// Build from a CCW chain; collapses duplicate/collinear vertices.
    pub fn new(verts: Vec<Point>) -> Result<Self, GeomError> {
        if verts.is_empty() {
            return Err(GeomError::Empty);
        }
        let cleaned = clean_chain(verts);
        let p = ConvexPolygon { verts: cleaned };
        if p.verts.len() >= 3 {
            let n = p.verts.len();
            for i in 0..n {
                if orient(&p.verts[i], &p.verts[(i + 1) % n], &p.verts[(i + 2) % n]) < 0 {
                    return Err(GeomError::NotConvex);
                }
            }
        }
        Ok(p)
    }

    /// Trusted constructor for chains produced by clipping (already convex).
    fn from_clip(verts: Vec<Point>) -> Option<Self> {
        let cleaned = clean_chain(verts);
        if cleaned.is_empty() {
            None
        } else {
            Some(ConvexPolygon { verts: cleaned })
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn kind(&self) -> PolygonKind {
        match self.verts.len() {
            1 => PolygonKind::Point,
            2 => PolygonKind::Segment,
            _ => {
                if self.area2().is_zero() {
                    PolygonKind::Segment
                } else {
                    PolygonKind::Polygon
                }
            }
        }
    }

    /// Twice the signed area (exact shoelace).
    pub fn area2(&self) -> Quad {
        let n = self.verts.len();
        let mut s = Quad::zero();
        for i in 0..n {
            s = s + self.verts[i].cross(&self.verts[(i + 1) % n]);
        }
        s
    }

    pub fn barycenter(&self) -> Point {
        let n = self.verts.len() as i64;
        let mut sx = Quad::zero();
        let mut sy = Quad::zero();
        for v in &self.verts {
            sx = sx + &v.x;
            sy = sy + &v.y;
        }
        let inv = Quad::ratio(1, n);
        Point::new(&sx * &inv, &sy * &inv)
    }

    /// Exact point classification against every edge.
    pub fn contains(&self, p: &Point) -> Location {
        match self.verts.len() {
            1 => {
                if &self.verts[0] == p {
                    Location::Boundary
                } else {
                    Location::Exterior
                }
            }
            2 => {
                if on_segment(&self.verts[0], &self.verts[1], p) {
                    Location::Boundary
                } else {
                    Location::Exterior
                }
            }
            n => {
                let mut boundary = false;
                for i in 0..n {
                    match orient(&self.verts[i], &self.verts[(i + 1) % n], p) {
                        -1 => return Location::Exterior,
                        0 => boundary = true,
                        _ => {}
                    }
                }
                if boundary {
                    Location::Boundary
                } else {
                    Location::Interior
                }
            }
        }
    }

    /// Clip by the closed left side of the directed line a→b.
    /// Returns None when the intersection is empty.
    pub fn clip(&self, a: &Point, b: &Point) -> Option<ConvexPolygon> {
        let dir = b - a;
        let n = self.verts.len();
        if n == 1 {
            return if dir.cross(&(&self.verts[0] - a)).sign() >= 0 {
                Some(self.clone())
            } else {
                None
            };
        }
        let side: Vec<i8> = self.verts.iter().map(|p| dir.cross(&(p - a)).sign()).collect();
        if n == 2 {
            return clip_segment(&self.verts[0], &self.verts[1], side[0], side[1], a, b);
        }
        let mut out: Vec<Point> = Vec::with_capacity(n + 2);
        for i in 0..n {
            let j = (i + 1) % n;
            if side[i] >= 0 {
                out.push(self.verts[i].clone());
            }
            if side[i] * side[j] < 0 {
                out.push(line_edge_intersection(a, b, &self.verts[i], &self.verts[j]));
            }
        }
        ConvexPolygon::from_clip(out)
    }

    /// Intersection with another convex polygon (clip by all its edges).
    pub fn intersect(&self, other: &ConvexPolygon) -> Option<ConvexPolygon> {
        let n = other.verts.len();
        if n < 3 {
            // degenerate clip region: intersect the other way around
            return other.intersect_degenerate(self);
        }
        let mut cur = self.clone();
        for i in 0..n {
            cur = cur.clip(&other.verts[i], &other.verts[(i + 1) % n])?;
        }
        Some(cur)
    }

    fn intersect_degenerate(&self, big: &ConvexPolygon) -> Option<ConvexPolygon> {
        match self.verts.len() {
            1 => match big.contains(&self.verts[0]) {
                Location::Exterior => None,
                _ => Some(self.clone()),
            },
            _ => {
                // segment ∩ polygon
                let mut seg = self.clone();
                let n = big.verts.len();
                for i in 0..n {
                    seg = seg.clip(&big.verts[i], &big.verts[(i + 1) % n])?;
                }
                Some(seg)
            }
        }
    }

    /// Vertex list rotated so it starts at the lexicographically smallest
    /// vertex; used for order-insensitive equality in tests and dedup keys.
    pub fn canonical(&self) -> ConvexPolygon {
        let n = self.verts.len();
        let mut best = 0;
        for i in 1..n {
            let (bx, by) = (&self.verts[best].x, &self.verts[best].y);
            let (ix, iy) = (&self.verts[i].x, &self.verts[i].y);
            let less = match ix.partial_cmp(bx) {
                Some(std::cmp::Ordering::Less) => true,
                Some(std::cmp::Ordering::Equal) => {
                    matches!(iy.partial_cmp(by), Some(std::cmp::Ordering::Less))
                }
                _ => false,
            };
            if less {
                best = i;
            }
        }
        let mut verts = Vec::with_capacity(n);
        for i in 0..n {
            verts.push(self.verts[(best + i) % n].clone());
        }
        ConvexPolygon { verts }
    }

    pub fn same_region(&self, other: &ConvexPolygon) -> bool {
        self.canonical() == other.canonical()
    }

    /// Axis-aligned bounding box corners (min, max).
    pub fn bbox(&self) -> (Point, Point) {
        let mut min = self.verts[0].clone();
        let mut max = self.verts[0].clone();
        for v in &self.verts[1..] {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }
}

fn clean_chain(verts: Vec<Point>) -> Vec<Point> {
    // drop consecutive duplicates
    let mut dedup: Vec<Point> = Vec::with_capacity(verts.len());
    for v in verts {
        if dedup.last() != Some(&v) {
            dedup.push(v);
        }
    }
    while dedup.len() > 1 && dedup.first() == dedup.last() {
        dedup.pop();
    }
    if dedup.len() < 3 {
        return dedup;
    }
    // drop collinear middle vertices
    let n = dedup.len();
    let mut keep: Vec<Point> = Vec::with_capacity(n);
    for i in 0..n {
        let prev = &dedup[(i + n - 1) % n];
        let next = &dedup[(i + 1) % n];
        if orient(prev, &dedup[i], next) != 0 {
            keep.push(dedup[i].clone());
        }
    }
    if keep.len() >= 3 {
        keep
    } else {
        // fully collinear chain: keep the two extreme points
        let mut pts = dedup;
        pts.sort_by(|p, q| {
            p.x.partial_cmp(&q.x)
                .unwrap()
                .then(p.y.partial_cmp(&q.y).unwrap())
        });
        let first = pts.first().unwrap().clone();
        let last = pts.last().unwrap().clone();
        if first == last {
            vec![first]
        } else {
            vec![first, last]
        }
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let d = b - a;
    let t = (p - a).dot(&d);
    t.sign() >= 0 && (&d.dot(&d) - &t).sign() >= 0
}

fn clip_segment(
    p: &Point,
    q: &Point,
    sp: i8,
    sq: i8,
    a: &Point,
    b: &Point,
) -> Option<ConvexPolygon> {
    match (sp >= 0, sq >= 0) {
        (true, true) => ConvexPolygon::from_clip(vec![p.clone(), q.clone()]),
        (false, false) => None,
        (true, false) => {
            let x = line_edge_intersection(a, b, p, q);
            ConvexPolygon::from_clip(vec![p.clone(), x])
        }
        (false, true) => {
            let x = line_edge_intersection(a, b, p, q);
            ConvexPolygon::from_clip(vec![x, q.clone()])
        }
    }
}

/// Intersection of line a→b with the edge p→q (must cross strictly).
fn line_edge_intersection(a: &Point, b: &Point, p: &Point, q: &Point) -> Point {
    let dir = b - a;
    let num = dir.cross(&(a - p));
    let den = dir.cross(&(q - p));
    let t = num / den;
    Point::new(&p.x + &(&t * &(&q.x - &p.x)), &p.y + &(&t * &(&q.y - &p.y)))
}

/// Orientation-preserving rigid motion x ↦ M x + t with M an exact rotation.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    /// [[c, -s], [s, c]]
    pub m: [[Quad; 2]; 2],
    pub t: Point,
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Iso[{:?} {:?}; t={:?}]", self.m[0], self.m[1], self.t)
    }
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            m: [
                [Quad::from_int(1), Quad::from_int(0)],
                [Quad::from_int(0), Quad::from_int(1)],
            ],
            t: Point::from_ints(0, 0),
        }
    }

    pub fn translation(t: Point) -> Self {
        Isometry { m: Isometry::identity().m, t }
    }

    /// Rotation by `deg` degrees about `center`; the angle must be exactly
    /// representable in the field of radicand `d`.
    pub fn rotation_deg(deg: i32, center: &Point, d: u8) -> Result<Self, GeomError> {
        let (c, s) = cos_sin_for_field(deg, d)?;
        Ok(Self::from_cos_sin(c, s, center))
    }

    pub fn from_cos_sin(c: Quad, s: Quad, center: &Point) -> Self {
        let m = [[c.clone(), -s.clone()], [s.clone(), c.clone()]];
        let rx = &m[0][0] * &center.x + &m[0][1] * &center.y;
        let ry = &m[1][0] * &center.x + &m[1][1] * &center.y;
        Isometry {
            m,
            t: Point::new(&center.x - &rx, &center.y - &ry),
        }
    }

    /// Point reflection through v (rotation by 180°).
    pub fn point_reflection(v: &Point) -> Self {
        Isometry {
            m: [
                [Quad::from_int(-1), Quad::from_int(0)],
                [Quad::from_int(0), Quad::from_int(-1)],
            ],
            t: Point::new(Quad::from_int(2) * &v.x, Quad::from_int(2) * &v.y),
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &(&self.m[0][0] * &p.x) + &(&self.m[0][1] * &p.y) + &self.t.x,
            &(&self.m[1][0] * &p.x) + &(&self.m[1][1] * &p.y) + &self.t.y,
        )
    }

    pub fn apply_poly(&self, poly: &ConvexPolygon) -> ConvexPolygon {
        // orientation-preserving, so the chain stays CCW
        ConvexPolygon {
            verts: poly.vertices().iter().map(|p| self.apply(p)).collect(),
        }
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let a = &self.m;
        let b = &other.m;
        let m = [
            [
                &(&a[0][0] * &b[0][0]) + &(&a[0][1] * &b[1][0]),
                &(&a[0][0] * &b[0][1]) + &(&a[0][1] * &b[1][1]),
            ],
            [
                &(&a[1][0] * &b[0][0]) + &(&a[1][1] * &b[1][0]),
                &(&a[1][0] * &b[0][1]) + &(&a[1][1] * &b[1][1]),
            ],
        ];
        Isometry { m, t: self.apply(&other.t) }
    }

    pub fn inverse(&self) -> Isometry {
        // rotation matrix: inverse = transpose
        let m = [
            [self.m[0][0].clone(), self.m[1][0].clone()],
            [self.m[0][1].clone(), self.m[1][1].clone()],
        ];
        let tx = -(&(&m[0][0] * &self.t.x) + &(&m[0][1] * &self.t.y));
        let ty = -(&(&m[1][0] * &self.t.x) + &(&m[1][1] * &self.t.y));
        Isometry { m, t: Point::new(tx, ty) }
    }

    /// Fixed point, when the rotation part is not the identity.
    pub fn fixed_point(&self) -> Option<Point> {
        // solve (I - M) x = t
        let a11 = Quad::one() - &self.m[0][0];
        let a12 = -self.m[0][1].clone();
        let a21 = -self.m[1][0].clone();
        let a22 = Quad::one() - &self.m[1][1];
        let det = &(&a11 * &a22) - &(&a12 * &a21);
        if det.sign() == 0 {
            return None;
        }
        let x = &(&(&self.t.x * &a22) - &(&a12 * &self.t.y)) / &det;
        let y = &(&(&a11 * &self.t.y) - &(&a21 * &self.t.x)) / &det;
        Some(Point::new(x, y))
    }

    /// Rotation angle in degrees (0..360), exact for field angles.
    pub fn rotation_deg_value(&self) -> i32 {
        let c = self.m[0][0].to_f64();
        let s = self.m[1][0].to_f64();
        let deg = s.atan2(c).to_degrees().round() as i32;
        deg.rem_euclid(360)
    }

    pub fn is_identity(&self) -> bool {
        self.m[0][0] == Quad::one()
            && self.m[0][1].is_zero()
            && self.m[1][0].is_zero()
            && self.m[1][1] == Quad::one()
            && self.t.x.is_zero()
            && self.t.y.is_zero()
    }
}

/// Direct similarity x ↦ r·R(x − p) + q (rotation R, ratio r > 0).
#[derive(Clone, Debug)]
pub struct Similarity {
    pub ratio: Quad,
    pub rot: [[Quad; 2]; 2],
    pub src: Point,
    pub dst: Point,
}

impl Similarity {
    pub fn homothety(center: &Point, ratio: Quad) -> Self {
        Similarity {
            ratio,
            rot: Isometry::identity().m,
            src: center.clone(),
            dst: center.clone(),
        }
    }

    pub fn new_rotated(deg: i32, d: u8, ratio: Quad, src: &Point, dst: &Point) -> Result<Self, GeomError> {
        let (c, s) = cos_sin_for_field(deg, d)?;
        Ok(Similarity {
            ratio,
            rot: [[c.clone(), -s.clone()], [s, c]],
            src: src.clone(),
            dst: dst.clone(),
        })
    }

    pub fn apply(&self, p: &Point) -> Point {
        let dx = &p.x - &self.src.x;
        let dy = &p.y - &self.src.y;
        let rx = &(&self.rot[0][0] * &dx) + &(&self.rot[0][1] * &dy);
        let ry = &(&self.rot[1][0] * &dx) + &(&self.rot[1][1] * &dy);
        Point::new(&self.dst.x + &(&self.ratio * &rx), &self.dst.y + &(&self.ratio * &ry))
    }

    pub fn apply_poly(&self, poly: &ConvexPolygon) -> ConvexPolygon {
        ConvexPolygon {
            verts: poly.vertices().iter().map(|p| self.apply(p)).collect(),
        }
    }

    pub fn apply_pts(&self, pts: &[Point]) -> Vec<Point> {
        pts.iter().map(|p| self.apply(p)).collect()
    }

    pub fn fixed_point(&self) -> Option<Point> {
        // solve x = r R (x - src) + dst
        let a11 = Quad::one() - &(&self.ratio * &self.rot[0][0]);
        let a12 = -(&self.ratio * &self.rot[0][1]);
        let a21 = -(&self.ratio * &self.rot[1][0]);
        let a22 = Quad::one() - &(&self.ratio * &self.rot[1][1]);
        let rx = &(&self.rot[0][0] * &self.src.x) + &(&self.rot[0][1] * &self.src.y);
        let ry = &(&self.rot[1][0] * &self.src.x) + &(&self.rot[1][1] * &self.src.y);
        let bx = &self.dst.x - &(&self.ratio * &rx);
        let by = &self.dst.y - &(&self.ratio * &ry);
        let det = &(&a11 * &a22) - &(&a12 * &a21);
        if det.sign() == 0 {
            return None;
        }
        Some(Point::new(
            &(&(&bx * &a22) - &(&a12 * &by)) / &det,
            &(&(&a11 * &by) - &(&a21 * &bx)) / &det,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap()
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, 1)), 1);
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(2, 0)), 0);
        let h = Quad::sqrt_coeff(1, 2, 2);
        let c = Point::new(h.clone(), -h);
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &c), -1);
    }

    #[test]
    fn clip_examples() {
        let sq = unit_square();
        // x <= 1/2: left side of the upward line x = 1/2
        let a = Point::new(Quad::ratio(1, 2), Quad::from_int(-1));
        let b = Point::new(Quad::ratio(1, 2), Quad::from_int(2));
        let r = sq.clip(&a, &b).unwrap();
        assert_eq!(r.area2(), Quad::one());
        assert_eq!(r.vertices().len(), 4);
        assert!(r.vertices().contains(&pt(0, 0)));

        // x <= -1: empty
        let a = Point::new(Quad::from_int(-1), Quad::from_int(-1));
        let b = Point::new(Quad::from_int(-1), Quad::from_int(2));
        assert!(sq.clip(&a, &b).is_none());

        // x + y <= 1: triangle
        let r = sq.clip(&pt(1, 0), &pt(0, 1)).unwrap();
        assert_eq!(r.vertices().len(), 3);
        assert_eq!(r.area2(), Quad::one());
    }

    #[test]
    fn clip_idempotent() {
        let sq = unit_square();
        let a = pt(1, 0);
        let b = pt(0, 1);
        let once = sq.clip(&a, &b).unwrap();
        let twice = once.clip(&a, &b).unwrap();
        assert!(once.same_region(&twice));
    }

    #[test]
    fn contains_examples() {
        let sq = unit_square();
        let half = Quad::ratio(1, 2);
        assert_eq!(sq.contains(&Point::new(half.clone(), half.clone())), Location::Interior);
        assert_eq!(sq.contains(&Point::new(Quad::one(), half)), Location::Boundary);
        assert_eq!(sq.contains(&pt(2, 0)), Location::Exterior);
    }

    #[test]
    fn apply_examples() {
        // point reflection through (1,1) of (1/2, 3/2) = (3/2, 1/2)
        let refl = Isometry::point_reflection(&pt(1, 1));
        let p = Point::new(Quad::ratio(1, 2), Quad::ratio(3, 2));
        assert_eq!(refl.apply(&p), Point::new(Quad::ratio(3, 2), Quad::ratio(1, 2)));

        // rotation by 90° about origin of (1,0) = (0,1)
        let rot = Isometry::rotation_deg(90, &pt(0, 0), 1).unwrap();
        assert_eq!(rot.apply(&pt(1, 0)), pt(0, 1));

        // rotation by 30° about origin of (1,0) = (√3/2, 1/2)
        let rot = Isometry::rotation_deg(30, &pt(0, 0), 3).unwrap();
        assert_eq!(
            rot.apply(&pt(1, 0)),
            Point::new(Quad::sqrt_coeff(1, 2, 3), Quad::ratio(1, 2))
        );

        // non-representable angle errors out
        assert!(Isometry::rotation_deg(30, &pt(0, 0), 2).is_err());
    }

    #[test]
    fn isometry_roundtrip_and_composition() {
        let rot = Isometry::rotation_deg(45, &pt(2, 1), 2).unwrap();
        let sq = unit_square();
        let img = rot.apply_poly(&sq);
        assert_eq!(img.area2(), sq.area2());
        let back = rot.inverse().apply_poly(&img);
        assert!(back.same_region(&sq));

        let r2 = Isometry::rotation_deg(90, &pt(0, 0), 2).unwrap();
        let comp = rot.compose(&r2);
        let p = Point::new(Quad::ratio(7, 3), Quad::ratio(-1, 5));
        assert_eq!(comp.apply(&p), rot.apply(&r2.apply(&p)));
    }

    #[test]
    fn area_invariant_under_clip_and_apply() {
        let sq = unit_square();
        let clipped = sq.clip(&pt(1, 0), &pt(0, 1)).unwrap();
        assert!(clipped.area2() <= sq.area2());
        let rot = Isometry::rotation_deg(135, &pt(3, -2), 2).unwrap();
        assert_eq!(rot.apply_poly(&clipped).area2(), clipped.area2());
    }

    #[test]
    fn degenerate_polygons() {
        let seg = ConvexPolygon::new(vec![pt(0, 0), pt(2, 0)]).unwrap();
        assert_eq!(seg.kind(), PolygonKind::Segment);
        assert_eq!(seg.contains(&pt(1, 0)), Location::Boundary);
        assert_eq!(seg.contains(&pt(3, 0)), Location::Exterior);
        let p = ConvexPolygon::new(vec![pt(5, 5)]).unwrap();
        assert_eq!(p.kind(), PolygonKind::Point);
    }

    #[test]
    fn fixed_point_of_rotation() {
        let c = Point::new(Quad::sqrt_coeff(1, 1, 2), Quad::from_int(0));
        let rot = Isometry::rotation_deg(90, &c, 2).unwrap();
        assert_eq!(rot.fixed_point().unwrap(), c);
        assert_eq!(rot.rotation_deg_value(), 90);
    }
}
