//! The outer billiard map: table construction, tangency classification,
//! forward/backward step, orbit iteration with exact periodicity detection,
//! and the folded (derived) map on the fundamental tangency cone of regular
//! tables.

use crate::field::{cos_sin_deg_sqrt2, cos_sin_deg_sqrt3, Quad};
use crate::geom::{orient, ConvexPolygon, Isometry, Location, Point};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BilliardError {
    #[error("point lies inside or on the table")]
    NotOutside,
    #[error("point is not in the fundamental cone")]
    NotInCone,
    #[error("folded step undefined (hit a zone boundary)")]
    FoldUndefined,
}

/// Which table to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableSpec {
    Square,
    TriangleLattice,
    HexagonLattice,
    Octagon,
    Dodecagon,
}

impl TableSpec {
    pub fn parse(s: &str) -> Option<TableSpec> {
        Some(match s {
            "square" => TableSpec::Square,
            "triangle" | "triangle_lattice" => TableSpec::TriangleLattice,
            "hexagon" | "hexagon_lattice" => TableSpec::HexagonLattice,
            "octagon" => TableSpec::Octagon,
            "dodecagon" => TableSpec::Dodecagon,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableKind {
    Regular,
    LatticeAffine,
}

/// The polygon the billiard acts around: CCW vertices, all coordinates in
/// the field of radicand `field_d`.
#[derive(Debug, Clone)]
pub struct BilliardTable {
    pub spec: TableSpec,
    pub kind: TableKind,
    pub field_d: u8,
    verts: Vec<Point>,
    poly: ConvexPolygon,
}

/// Result of a tangency query for an exterior point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tangency {
    /// The unique vertex with all other vertices strictly left of the ray.
    Vertex(usize),
    /// On a side extension: the map is undefined here.
    UndefinedOnRay,
}

/// Symbolic itinerary: the reflection vertex at each step.
pub type Itinerary = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// The orbit hit an undefined ray after k defined steps.
    Finite(usize),
    /// First exact return to the start after p steps.
    Periodic(usize),
    /// No decision within the budget.
    BudgetExceeded(usize),
}

#[derive(Debug, Clone)]
pub struct OrbitResult {
    pub outcome: Outcome,
    pub itinerary: Itinerary,
    /// Trajectory including the start point (when retention was requested).
    pub points: Option<Vec<Point>>,
}

impl BilliardTable {
    pub fn make(spec: TableSpec) -> BilliardTable {
        let (verts, d, kind) = match spec {
            TableSpec::Square => (
                vec![
                    Point::from_ints(0, 0),
                    Point::from_ints(1, 0),
                    Point::from_ints(1, 1),
                    Point::from_ints(0, 1),
                ],
                1,
                TableKind::LatticeAffine,
            ),
            TableSpec::TriangleLattice => (
                vec![
                    Point::from_ints(0, 0),
                    Point::from_ints(1, 0),
                    Point::from_ints(0, 1),
                ],
                1,
                TableKind::LatticeAffine,
            ),
            TableSpec::HexagonLattice => (
                vec![
                    Point::from_ints(0, 0),
                    Point::from_ints(1, 0),
                    Point::from_ints(2, 1),
                    Point::from_ints(2, 2),
                    Point::from_ints(1, 2),
                    Point::from_ints(0, 1),
                ],
                1,
                TableKind::LatticeAffine,
            ),
            TableSpec::Octagon => {
                let verts = (0..8)
                    .map(|k| {
                        let (c, s) = cos_sin_deg_sqrt2(45 * k);
                        Point::new(c, s)
                    })
                    .collect();
                (verts, 2, TableKind::Regular)
            }
            TableSpec::Dodecagon => {
                let verts = (0..12)
                    .map(|k| {
                        let (c, s) = cos_sin_deg_sqrt3(30 * k);
                        Point::new(c, s)
                    })
                    .collect();
                (verts, 3, TableKind::Regular)
            }
        };
        let poly = ConvexPolygon::new(verts.clone()).expect("table is convex");
        BilliardTable { spec, kind, field_d: d, verts, poly }
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.verts[i % self.verts.len()]
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.poly
    }

    /// Centroid; for regular tables this is the circumcenter.
    pub fn center(&self) -> Point {
        self.poly.barycenter()
    }

    /// The working "right tangent" convention: returns the unique i such
    /// that every other vertex is strictly left of the ray x→A_i, or
    /// UndefinedOnRay when x sits on a side extension.
    pub fn tangent_vertex(&self, x: &Point) -> Result<Tangency, BilliardError> {
        let n = self.n();
        for i in 0..n {
            // adjacent-vertex constraints decide; zero on either means the
            // candidate ray grazes an edge line
            let prev = &self.verts[(i + n - 1) % n];
            let next = &self.verts[(i + 1) % n];
            let a = &self.verts[i];
            let c_next = (a - x).cross(&(next - a)).sign();
            let c_prev = (a - x).cross(&(prev - a)).sign();
            if c_next > 0 && c_prev > 0 {
                return Ok(Tangency::Vertex(i));
            }
            if (c_next == 0 && c_prev > 0) || (c_prev == 0 && c_next > 0) {
                // on a cone boundary ray; confirm all the rest are >= 0
                let mut all_nonneg = true;
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    if orient(x, a, &self.verts[j]) < 0 {
                        all_nonneg = false;
                        break;
                    }
                }
                if all_nonneg {
                    return Ok(Tangency::UndefinedOnRay);
                }
            }
        }
        // no candidate: the point is inside or on the table
        Err(BilliardError::NotOutside)
    }

    /// Forward step T(x) = 2·A_i − x.
    pub fn step(&self, x: &Point) -> Result<Option<Point>, BilliardError> {
        match self.tangent_vertex(x)? {
            Tangency::Vertex(i) => Ok(Some(x.reflect_through(&self.verts[i]))),
            Tangency::UndefinedOnRay => Ok(None),
        }
    }

    /// Mirrored predicate: the unique i with all other vertices strictly
    /// RIGHT of the ray; exact inverse of `step` where both are defined.
    pub fn tangent_vertex_back(&self, x: &Point) -> Result<Tangency, BilliardError> {
        let n = self.n();
        for i in 0..n {
            let prev = &self.verts[(i + n - 1) % n];
            let next = &self.verts[(i + 1) % n];
            let a = &self.verts[i];
            let c_next = (a - x).cross(&(next - a)).sign();
            let c_prev = (a - x).cross(&(prev - a)).sign();
            if c_next < 0 && c_prev < 0 {
                return Ok(Tangency::Vertex(i));
            }
            if (c_next == 0 && c_prev < 0) || (c_prev == 0 && c_next < 0) {
                let mut all_nonpos = true;
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    if orient(x, a, &self.verts[j]) > 0 {
                        all_nonpos = false;
                        break;
                    }
                }
                if all_nonpos {
                    return Ok(Tangency::UndefinedOnRay);
                }
            }
        }
        Err(BilliardError::NotOutside)
    }

    pub fn step_back(&self, x: &Point) -> Result<Option<Point>, BilliardError> {
        match self.tangent_vertex_back(x)? {
            Tangency::Vertex(i) => Ok(Some(x.reflect_through(&self.verts[i]))),
            Tangency::UndefinedOnRay => Ok(None),
        }
    }

    /// Iterate the map, detecting exact periodicity or a finite orbit.
    pub fn orbit(&self, x: &Point, budget: usize) -> Result<OrbitResult, BilliardError> {
        self.orbit_impl(x, budget, false)
    }

    pub fn orbit_with_points(&self, x: &Point, budget: usize) -> Result<OrbitResult, BilliardError> {
        self.orbit_impl(x, budget, true)
    }

    fn orbit_impl(&self, x0: &Point, budget: usize, keep: bool) -> Result<OrbitResult, BilliardError> {
        if self.poly.contains(x0) != Location::Exterior {
            return Err(BilliardError::NotOutside);
        }
        let mut itinerary = Vec::new();
        let mut pts = if keep { Some(vec![x0.clone()]) } else { None };
        let mut x = x0.clone();
        for k in 0..budget {
            match self.tangent_vertex(&x)? {
                Tangency::UndefinedOnRay => {
                    return Ok(OrbitResult { outcome: Outcome::Finite(k), itinerary, points: pts });
                }
                Tangency::Vertex(i) => {
                    itinerary.push(i);
                    x = x.reflect_through(&self.verts[i]);
                    if let Some(v) = pts.as_mut() {
                        v.push(x.clone());
                    }
                    if &x == x0 {
                        return Ok(OrbitResult {
                            outcome: Outcome::Periodic(k + 1),
                            itinerary,
                            points: pts,
                        });
                    }
                }
            }
        }
        Ok(OrbitResult { outcome: Outcome::BudgetExceeded(budget), itinerary, points: pts })
    }

    /// The two directed lines bounding the tangency cone D_i (keep-left).
    /// D_i = { x : both constraints strictly positive }.
    pub fn cone_halfplanes(&self, i: usize) -> [(Point, Point); 2] {
        let n = self.n();
        let a = &self.verts[i];
        let next = &self.verts[(i + 1) % n];
        let prev = &self.verts[(i + n - 1) % n];
        // cross(A−x, w) > 0  ⇔  x strictly left of the directed line
        // through A with direction w
        [
            (a.clone(), a + &(next - a)),
            (a.clone(), a + &(prev - a)),
        ]
    }

    /// Membership in the open cone D_i.
    pub fn in_cone(&self, i: usize, x: &Point) -> bool {
        let n = self.n();
        let a = &self.verts[i];
        let next = &self.verts[(i + 1) % n];
        let prev = &self.verts[(i + n - 1) % n];
        (a - x).cross(&(next - a)).sign() > 0 && (a - x).cross(&(prev - a)).sign() > 0
    }
}

/// The folded (derived) map on the fundamental tangency cone D_{A_1} of a
/// regular n-gon: T̂(x) = R^{−m}(2A_1 − x) with m the unique sector count
/// bringing the image back into the cone. Zone m rotates by 180° − m·(360/n)°
/// about a center on the cone axis at distance tan(m·π/n) from the apex.
#[derive(Debug, Clone)]
pub struct FoldedSector {
    pub table: BilliardTable,
    /// apex = A_1
    pub apex: Point,
    /// unit vector along the cone bisector (pointing away from the table)
    pub axis: Point,
    /// unit vector perpendicular to the axis (left of it)
    pub axis_perp: Point,
    zone_regions: Vec<ConvexPolygon>,
    zone_maps: Vec<Isometry>,
    zone_centers: Vec<Point>,
}

/// A single folded step: which zone acted and where the point went.
#[derive(Debug, Clone)]
pub struct FoldStep {
    /// zone index m ∈ 1..=n−1 (the sector advance)
    pub zone: usize,
    pub point: Point,
}

impl FoldedSector {
    /// `extent` bounds the truncated cone polygon used for zone clipping;
    /// everything of interest must fit inside.
    pub fn new(table: BilliardTable, extent: i64) -> FoldedSector {
        assert_eq!(table.kind, TableKind::Regular);
        let n = table.n();
        let apex = table.vertex(1).clone();
        let step_deg = (360 / n) as i32;
        // cone bisector: the apex direction rotated by −90°; the apex is on
        // the unit circle so this is already a unit vector
        let axis = Point::new(apex.y.clone(), -apex.x.clone());
        let axis_perp = Point::new(apex.x.clone(), apex.y.clone());

        let cone = Self::cone_polygon(&table, extent);
        let mut zone_regions = Vec::new();
        let mut zone_maps = Vec::new();
        let mut zone_centers = Vec::new();
        // zones with a rotation: m = 1 .. n/2 − 1 (m = n/2 is the far-field
        // translation regime, outside the first invariant region)
        for m in 1..n / 2 {
            // zone m = cone ∩ (2A1 − R^m(cone))
            let rot = Isometry::rotation_deg(step_deg * m as i32, &table.center(), table.field_d)
                .expect("sector angle representable");
            let img = rot.apply_poly(&cone);
            let refl = Isometry::point_reflection(&apex);
            let img = refl.apply_poly(&img);
            let region = cone
                .intersect(&img)
                .filter(|r| r.area2().sign() > 0)
                .expect("zone region nonempty");
            let angle = 180 - step_deg * m as i32;
            let tan = tan_sector_multiple(n, m);
            let center = &apex + &axis.scale(&tan);
            let map = Isometry::rotation_deg(angle, &center, table.field_d).expect("zone angle");
            zone_regions.push(region);
            zone_maps.push(map);
            zone_centers.push(center);
        }
        FoldedSector { table, apex, axis, axis_perp, zone_regions, zone_maps, zone_centers }
    }

    fn cone_polygon(table: &BilliardTable, extent: i64) -> ConvexPolygon {
        let a1 = table.vertex(1);
        let a0 = table.vertex(0);
        let a2 = table.vertex(2);
        let d1 = a0 - a1; // lower boundary direction
        let d2 = a1 - a2; // upper boundary direction
        let e = Quad::from_int(extent);
        let p1 = a1 + &d1.scale(&e);
        let p2 = &p1 + &d2.scale(&e);
        let p3 = a1 + &d2.scale(&e);
        ConvexPolygon::new(vec![a1.clone(), p1, p2, p3]).expect("cone truncation convex")
    }

    pub fn zone_count(&self) -> usize {
        self.zone_regions.len()
    }

    /// Zone regions (indexed from 0 = nearest the apex; zone i advances
    /// i+1 sectors and rotates by 180 − (i+1)·(360/n) degrees).
    pub fn zone_region(&self, i: usize) -> &ConvexPolygon {
        &self.zone_regions[i]
    }

    pub fn zone_map(&self, i: usize) -> &Isometry {
        &self.zone_maps[i]
    }

    pub fn zone_center(&self, i: usize) -> &Point {
        &self.zone_centers[i]
    }

    pub fn zone_angle_deg(&self, i: usize) -> i32 {
        180 - ((360 / self.table.n()) as i32) * (i as i32 + 1)
    }

    /// Strict membership in the open fundamental cone.
    pub fn in_cone(&self, x: &Point) -> bool {
        self.table.in_cone(1, x)
    }

    /// Index of the open zone containing x, if any.
    pub fn zone_of(&self, x: &Point) -> Option<usize> {
        if !self.in_cone(x) {
            return None;
        }
        for (i, z) in self.zone_regions.iter().enumerate() {
            if z.contains(x) == Location::Interior {
                return Some(i);
            }
        }
        None
    }

    /// One folded step. Error if x is outside the cone or on a zone
    /// boundary (the undefined set).
    pub fn fold_step(&self, x: &Point) -> Result<FoldStep, BilliardError> {
        match self.zone_of(x) {
            Some(i) => Ok(FoldStep { zone: i + 1, point: self.zone_maps[i].apply(x) }),
            None => {
                if self.in_cone(x) {
                    Err(BilliardError::FoldUndefined)
                } else {
                    Err(BilliardError::NotInCone)
                }
            }
        }
    }

    /// Folded orbit until exact return; records the zone word (1-based).
    pub fn fold_orbit(&self, x0: &Point, budget: usize) -> (Outcome, Vec<usize>) {
        let mut x = x0.clone();
        let mut word = Vec::new();
        for k in 0..budget {
            match self.fold_step(&x) {
                Err(_) => return (Outcome::Finite(k), word),
                Ok(st) => {
                    word.push(st.zone);
                    x = st.point;
                    if &x == x0 {
                        return (Outcome::Periodic(k + 1), word);
                    }
                }
            }
        }
        (Outcome::BudgetExceeded(budget), word)
    }

    /// Exact folded period (None when finite or budget-limited).
    pub fn fold_period(&self, x0: &Point, budget: usize) -> Option<usize> {
        match self.fold_orbit(x0, budget).0 {
            Outcome::Periodic(p) => Some(p),
            _ => None,
        }
    }

    /// Folded component: maximal open convex region sharing x's folded
    /// itinerary. Requires x strictly periodic. The seed may be a rotation
    /// center, so the pullback continues until the composed isometry closes
    /// to the identity (one period times the rotation order).
    pub fn fold_component(&self, x0: &Point, budget: usize) -> Option<(ConvexPolygon, usize, Vec<usize>)> {
        let (outcome, word) = self.fold_orbit(x0, budget);
        let p = match outcome {
            Outcome::Periodic(p) => p,
            _ => return None,
        };
        let b = Quad::from_int(8);
        let poly = ConvexPolygon::new(vec![
            Point::new(&x0.x - &b, &x0.y - &b),
            Point::new(&x0.x + &b, &x0.y - &b),
            Point::new(&x0.x + &b, &x0.y + &b),
            Point::new(&x0.x - &b, &x0.y + &b),
        ])
        .unwrap();
        let mut cur = poly;
        let mut m = Isometry::identity();
        for _round in 0..24 {
            for &z in &word {
                let region = &self.zone_regions[z - 1];
                let mi = m.inverse();
                let pulled = mi.apply_poly(region);
                cur = cur.intersect(&pulled)?;
                m = self.zone_maps[z - 1].compose(&m);
            }
            if m.is_identity() {
                return Some((cur, p, word));
            }
        }
        None
    }

    /// Axis coordinates (t, s) of a point: t along the cone bisector from
    /// the apex, s across it.
    pub fn axis_coords(&self, p: &Point) -> (Quad, Quad) {
        let d = p - &self.apex;
        (d.dot(&self.axis), d.dot(&self.axis_perp))
    }

    pub fn point_at(&self, t: &Quad, s: &Quad) -> Point {
        &(&self.apex + &self.axis.scale(t)) + &self.axis_perp.scale(s)
    }
}

/// tan(m·180°/n) exactly, for the tables in use (n = 4, 8, 12; m < n/2).
fn tan_sector_multiple(n: usize, m: usize) -> Quad {
    match (n, m) {
        (4, 1) => Quad::from_int(1),
        (8, 1) => Quad::with_sqrt(-1, 1, 1, 1, 2), // tan 22.5° = √2 − 1
        (8, 2) => Quad::from_int(1),
        (8, 3) => Quad::with_sqrt(1, 1, 1, 1, 2), // tan 67.5° = √2 + 1
        (12, 1) => Quad::with_sqrt(2, 1, -1, 1, 3), // tan 15° = 2 − √3
        (12, 2) => Quad::sqrt_coeff(1, 3, 3),       // tan 30° = √3/3
        (12, 3) => Quad::from_int(1),
        (12, 4) => Quad::sqrt_coeff(1, 1, 3), // tan 60° = √3
        (12, 5) => Quad::with_sqrt(2, 1, 1, 1, 3), // tan 75° = 2 + √3
        _ => panic!("unsupported sector angle ({n}, {m})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::new(Quad::ratio(xn, xd), Quad::ratio(yn, yd))
    }

    #[test]
    fn make_table_examples() {
        let sq = BilliardTable::make(TableSpec::Square);
        assert_eq!(sq.vertices()[0], Point::from_ints(0, 0));
        assert_eq!(sq.vertices()[2], Point::from_ints(1, 1));

        let oct = BilliardTable::make(TableSpec::Octagon);
        assert!(oct.vertices().contains(&Point::from_ints(1, 0)));
        let h = Quad::sqrt_coeff(1, 2, 2);
        assert!(oct.vertices().contains(&Point::new(h.clone(), h)));

        let dod = BilliardTable::make(TableSpec::Dodecagon);
        assert!(dod
            .vertices()
            .contains(&Point::new(Quad::sqrt_coeff(1, 2, 3), Quad::ratio(1, 2))));

        // regular tables: equal exact squared distance to the centroid
        for t in [&oct, &dod] {
            let c = t.center();
            let d0 = (&t.vertices()[0] - &c).dot(&(&t.vertices()[0] - &c));
            for v in t.vertices() {
                assert_eq!((v - &c).dot(&(v - &c)), d0);
            }
        }
    }

    #[test]
    fn tangent_examples() {
        let sq = BilliardTable::make(TableSpec::Square);
        // (1/2, 3/2) → vertex (0,1) = index 3
        assert_eq!(sq.tangent_vertex(&qp(1, 2, 3, 2)).unwrap(), Tangency::Vertex(3));
        // (2,0): on the forward extension of the bottom side; under the fixed
        // all-left predicate this is a regular point of D_{(1,1)}
        assert_eq!(sq.tangent_vertex(&Point::from_ints(2, 0)).unwrap(), Tangency::Vertex(2));
        // (0,2): on the backward extension of the left side — undefined
        assert_eq!(
            sq.tangent_vertex(&Point::from_ints(0, 2)).unwrap(),
            Tangency::UndefinedOnRay
        );
        // inside → error
        assert!(sq.tangent_vertex(&qp(1, 2, 1, 2)).is_err());

        let oct = BilliardTable::make(TableSpec::Octagon);
        // (3,0) → vertex (0,1) = index 2 (orient against (√2/2,√2/2) is 3−2√2 > 0)
        assert_eq!(oct.tangent_vertex(&Point::from_ints(3, 0)).unwrap(), Tangency::Vertex(2));
        assert_eq!(
            oct.step(&Point::from_ints(3, 0)).unwrap().unwrap(),
            Point::from_ints(-3, 2)
        );
    }

    #[test]
    fn step_and_inverse() {
        let sq = BilliardTable::make(TableSpec::Square);
        let x = qp(1, 2, 3, 2);
        let y = sq.step(&x).unwrap().unwrap();
        assert_eq!(y, qp(-1, 2, 1, 2));
        assert_eq!(sq.step_back(&y).unwrap().unwrap(), x);
        // and the other composition
        let z = sq.step_back(&x).unwrap().unwrap();
        assert_eq!(sq.step(&z).unwrap().unwrap(), x);
    }

    #[test]
    fn orbit_examples() {
        let sq = BilliardTable::make(TableSpec::Square);
        let r = sq.orbit(&qp(1, 2, 3, 2), 100).unwrap();
        assert_eq!(r.outcome, Outcome::Periodic(4));
        assert_eq!(r.itinerary, vec![3, 0, 1, 2]); // (0,1),(0,0),(1,0),(1,1)

        // (2,0) is finite: its image (0,2) lies on an undefined ray
        let r = sq.orbit(&Point::from_ints(2, 0), 10).unwrap();
        assert_eq!(r.outcome, Outcome::Finite(1));

        // (3/2,5/2) sits in cell (1,2): Manhattan ring 3, period 12
        let r = sq.orbit(&qp(3, 2, 5, 2), 100).unwrap();
        assert_eq!(r.outcome, Outcome::Periodic(12));

        // (3/2,3/2) sits in cell (1,1): ring 2, period 8
        let r = sq.orbit(&qp(3, 2, 3, 2), 100).unwrap();
        assert_eq!(r.outcome, Outcome::Periodic(8));
    }

    #[test]
    fn folded_sector_zones() {
        let oct = FoldedSector::new(BilliardTable::make(TableSpec::Octagon), 8);
        assert_eq!(oct.zone_count(), 3);
        assert_eq!(oct.zone_angle_deg(0), 135);
        assert_eq!(oct.zone_angle_deg(1), 90);
        assert_eq!(oct.zone_angle_deg(2), 45);
        // rotation centers: U, V, W on the axis
        assert_eq!(oct.zone_center(0), &Point::new(Quad::from_int(1), Quad::with_sqrt(-1, 1, 1, 1, 2)));
        assert_eq!(oct.zone_center(1), &Point::new(Quad::sqrt_coeff(1, 1, 2), Quad::from_int(0)));
        assert_eq!(
            oct.zone_center(2),
            &Point::new(Quad::with_sqrt(1, 1, 1, 1, 2), Quad::from_int(-1))
        );

        let dod = FoldedSector::new(BilliardTable::make(TableSpec::Dodecagon), 10);
        assert_eq!(dod.zone_count(), 5);
        for (i, deg) in [150, 120, 90, 60, 30].iter().enumerate() {
            assert_eq!(dod.zone_angle_deg(i), *deg);
            assert_eq!(dod.zone_map(i).rotation_deg_value(), *deg as i32);
        }
    }

    #[test]
    fn folded_step_consistency() {
        // folding: the folded image equals R^{-m} T(x) and V is fixed
        let sys = FoldedSector::new(BilliardTable::make(TableSpec::Octagon), 8);
        let v = Point::new(Quad::sqrt_coeff(1, 1, 2), Quad::from_int(0));
        let st = sys.fold_step(&v).unwrap();
        assert_eq!(st.zone, 2);
        assert_eq!(st.point, v);
        // a fixed point of the folded map unfolds to a true period-4 orbit
        let table = BilliardTable::make(TableSpec::Octagon);
        let r = table.orbit(&v, 10).unwrap();
        assert_eq!(r.outcome, Outcome::Periodic(4));
    }

    #[test]
    fn folded_orbit_table_one_anchors() {
        let sys = FoldedSector::new(BilliardTable::make(TableSpec::Octagon), 8);
        // point V: route "v" (zone 2), folded period 1
        let v = sys.zone_center(1).clone();
        let (out, word) = sys.fold_orbit(&v, 10);
        assert_eq!(out, Outcome::Periodic(1));
        assert_eq!(word, vec![2]);
        // point U: fixed point of u
        let u = sys.zone_center(0).clone();
        let (out, word) = sys.fold_orbit(&u, 10);
        assert_eq!(out, Outcome::Periodic(1));
        assert_eq!(word, vec![1]);
    }
}
