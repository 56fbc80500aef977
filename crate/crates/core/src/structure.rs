//! Higher-order structure extraction: periodic components via the unfolding
//! scheme, first-return partitions of subdomains, invariant figures, lattice
//! censuses and plane-classification scans.

use crate::billiard::{BilliardError, BilliardTable, FoldedSector, Outcome, Tangency};
use crate::field::Quad;
use crate::geom::{ConvexPolygon, Isometry, Location, Point};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("point is not periodic: {0:?}")]
    NotPeriodic(Outcome),
    #[error(transparent)]
    Billiard(#[from] BilliardError),
    #[error("empty intersection")]
    EmptyIntersection,
    #[error("return partition left unresolved pieces at budget {0}")]
    Unresolved(usize),
    #[error("base polygon is not star-shaped from its first vertex")]
    BadBase,
}

/// A periodic component: maximal open convex region sharing one itinerary.
#[derive(Debug, Clone)]
pub struct Component {
    pub region: ConvexPolygon,
    /// Common (even) period of the component's points.
    pub period: usize,
    pub itinerary: Vec<usize>,
    /// True when the symmetry center is the exceptional point of odd period
    /// period/2.
    pub center_special: bool,
}

/// Compute the periodic component of `x` by intersecting the pullbacks of
/// the tangency cones along the orbit (the unfolding scheme).
pub fn component_of(
    table: &BilliardTable,
    x: &Point,
    budget: usize,
) -> Result<Component, StructureError> {
    let orbit = table.orbit(x, budget)?;
    let p = match orbit.outcome {
        Outcome::Periodic(p) => p,
        other => return Err(StructureError::NotPeriodic(other)),
    };
    let region = pullback_region(table, x, &orbit.itinerary)?;

    // the seed itself may be the odd-period symmetry center; the component's
    // period and full region come from a generic interior point
    let center = region.barycenter();
    let generic = generic_interior_point(&region, &center);
    let (region, period, itinerary, center_special) = if generic == *x {
        (region, p, orbit.itinerary, false)
    } else {
        let gorbit = table.orbit(&generic, budget.max(2 * p + 2))?;
        match gorbit.outcome {
            Outcome::Periodic(gp) => {
                let full_region = if gp == p {
                    region
                } else {
                    pullback_region(table, &generic, &gorbit.itinerary)?
                };
                let center_orbit = table.orbit(&center, budget.max(2 * p + 2))?;
                let special = matches!(center_orbit.outcome, Outcome::Periodic(cp)
                    if cp * 2 == gp && cp % 2 == 1);
                (full_region, gp, gorbit.itinerary, special)
            }
            _ => (region, p, orbit.itinerary, false),
        }
    };
    Ok(Component { region, period, itinerary, center_special })
}

fn pullback_region(
    table: &BilliardTable,
    x: &Point,
    itinerary: &[usize],
) -> Result<ConvexPolygon, StructureError> {
    let b = Quad::from_int(64);
    let mut cur = ConvexPolygon::new(vec![
        Point::new(&x.x - &b, &x.y - &b),
        Point::new(&x.x + &b, &x.y - &b),
        Point::new(&x.x + &b, &x.y + &b),
        Point::new(&x.x - &b, &x.y + &b),
    ])
    .expect("box");
    let mut m = Isometry::identity();
    for &v in itinerary {
        let mi = m.inverse();
        for (a, b) in table.cone_halfplanes(v) {
            let pa = mi.apply(&a);
            let pb = mi.apply(&b);
            cur = cur.clip(&pa, &pb).ok_or(StructureError::EmptyIntersection)?;
        }
        m = Isometry::point_reflection(table.vertex(v)).compose(&m);
    }
    Ok(cur)
}

fn generic_interior_point(region: &ConvexPolygon, center: &Point) -> Point {
    if region.vertices().len() < 3 {
        return center.clone();
    }
    // a point off-center but interior: midpoint of center and an edge midpoint
    let e = region.vertices()[0].midpoint(&region.vertices()[1]);
    center.midpoint(&e)
}

/// ∩_{k=0..m−1} rot^k(zone): the maximal subset invariant under `rot`
/// (which must satisfy rot^m = id).
pub fn invariant_figure(
    base_zone: &ConvexPolygon,
    rot: &Isometry,
    order: usize,
) -> Result<ConvexPolygon, StructureError> {
    let mut cur = base_zone.clone();
    let mut img = base_zone.clone();
    for _ in 1..order {
        img = rot.apply_poly(&img);
        cur = cur.intersect(&img).ok_or(StructureError::EmptyIntersection)?;
    }
    Ok(cur)
}

/// A union of convex cells with a simple-polygon outline; the base domain of
/// a first-return computation. Star-shaped domains are triangulated from
/// their first vertex.
#[derive(Debug, Clone)]
pub struct StarDomain {
    pub outline: Vec<Point>,
    pub cells: Vec<ConvexPolygon>,
}

impl StarDomain {
    /// Fan-triangulate a (possibly non-convex) simple polygon star-shaped
    /// from its first vertex. Exactness is checked by an area identity.
    pub fn new(outline: Vec<Point>) -> Result<StarDomain, StructureError> {
        let n = outline.len();
        let mut cells = Vec::new();
        let mut total = Quad::zero();
        for i in 1..n - 1 {
            let tri = ConvexPolygon::new(vec![
                outline[0].clone(),
                outline[i].clone(),
                outline[i + 1].clone(),
            ])
            .map_err(|_| StructureError::BadBase)?;
            if tri.area2().sign() <= 0 {
                return Err(StructureError::BadBase);
            }
            total = total + tri.area2();
            cells.push(tri);
        }
        // shoelace of the outline must match the fan area exactly
        let mut sh = Quad::zero();
        for i in 0..n {
            sh = sh + outline[i].cross(&outline[(i + 1) % n]);
        }
        if sh != total {
            return Err(StructureError::BadBase);
        }
        Ok(StarDomain { outline, cells })
    }

    pub fn convex(poly: ConvexPolygon) -> StarDomain {
        StarDomain { outline: poly.vertices().to_vec(), cells: vec![poly] }
    }

    pub fn area2(&self) -> Quad {
        let mut s = Quad::zero();
        for c in &self.cells {
            s = s + c.area2();
        }
        s
    }

    /// Closed membership.
    pub fn contains_point(&self, p: &Point) -> bool {
        self.cells.iter().any(|c| c.contains(p) != Location::Exterior)
    }

    /// Strict interior membership (exact: inside the closed union but not on
    /// the outline).
    pub fn contains_point_strict(&self, p: &Point) -> bool {
        if !self.contains_point(p) {
            return false;
        }
        let n = self.outline.len();
        for i in 0..n {
            let a = &self.outline[i];
            let b = &self.outline[(i + 1) % n];
            if crate::geom::orient(a, b, p) == 0 {
                let d = b - a;
                let t = (p - a).dot(&d);
                if t.sign() >= 0 && (&d.dot(&d) - &t).sign() >= 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Does the convex polygon lie entirely inside the closed union?
    /// (Vertices inside + no proper edge crossings; valid because the union
    /// is simply connected.)
    pub fn contains_poly(&self, poly: &ConvexPolygon) -> bool {
        for v in poly.vertices() {
            if !self.contains_point(v) {
                return false;
            }
        }
        !self.boundary_crosses(poly)
    }

    /// Is the convex polygon disjoint from the union (except boundary
    /// touching)?
    pub fn disjoint_poly(&self, poly: &ConvexPolygon) -> bool {
        for cell in &self.cells {
            if let Some(r) = poly.intersect(cell) {
                if r.area2().sign() > 0 {
                    return false;
                }
            }
        }
        true
    }

    fn boundary_crosses(&self, poly: &ConvexPolygon) -> bool {
        let m = self.outline.len();
        let verts = poly.vertices();
        let n = verts.len();
        for i in 0..n {
            let p1 = &verts[i];
            let p2 = &verts[(i + 1) % n];
            for j in 0..m {
                let q1 = &self.outline[j];
                let q2 = &self.outline[(j + 1) % m];
                if segments_cross(p1, p2, q1, q2) {
                    return true;
                }
            }
        }
        false
    }

    /// Split a convex polygon into (parts inside, parts outside).
    pub fn split_poly(&self, poly: &ConvexPolygon) -> (Vec<ConvexPolygon>, Vec<ConvexPolygon>) {
        let mut inside = Vec::new();
        for cell in &self.cells {
            if let Some(r) = poly.intersect(cell) {
                if r.area2().sign() > 0 {
                    inside.push(r);
                }
            }
        }
        let mut outside = vec![poly.clone()];
        for cell in &self.cells {
            let mut next = Vec::new();
            for piece in outside {
                subtract_convex(&piece, cell, &mut next);
            }
            outside = next;
        }
        (inside, outside)
    }
}

/// Proper crossing of open segments (shared endpoints/collinear overlap do
/// not count; those cannot move a vertex-inside polygon outside a simply
/// connected union).
fn segments_cross(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let o1 = crate::geom::orient(p1, p2, q1);
    let o2 = crate::geom::orient(p1, p2, q2);
    let o3 = crate::geom::orient(q1, q2, p1);
    let o4 = crate::geom::orient(q1, q2, p2);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// poly ∖ cell decomposed into convex parts, pushed onto `out`.
fn subtract_convex(poly: &ConvexPolygon, cell: &ConvexPolygon, out: &mut Vec<ConvexPolygon>) {
    let verts = cell.vertices();
    let n = verts.len();
    if n < 3 {
        out.push(poly.clone());
        return;
    }
    let mut rest = Some(poly.clone());
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let Some(cur) = rest else { break };
        // the part strictly right of edge a→b is outside the cell
        if let Some(right) = cur.clip(b, a) {
            if right.area2().sign() > 0 {
                out.push(right);
            }
        }
        rest = cur.clip(a, b);
    }
    // whatever survived all clips lies inside the cell: dropped
}

/// One maximal cell of a first-return partition. Cells are simple polygons;
/// almost all are convex, but cells resting on a concave stretch of the
/// domain boundary can be genuinely non-convex, so the boundary is kept as
/// an explicit outline over a convex-fragment decomposition.
#[derive(Debug, Clone)]
pub struct ReturnPiece {
    /// simple-polygon boundary, CCW, collinear vertices removed
    pub outline: Vec<Point>,
    /// convex decomposition of the cell
    pub fragments: Vec<ConvexPolygon>,
    pub return_time: usize,
    /// Composed isometry over `return_time` steps.
    pub motion: Isometry,
    pub side_count: usize,
    /// Zone word along the journey (1-based zone indices).
    pub word: Vec<usize>,
}

impl ReturnPiece {
    pub fn area2(&self) -> Quad {
        let mut s = Quad::zero();
        for f in &self.fragments {
            s = s + f.area2();
        }
        s
    }

    pub fn is_convex(&self) -> bool {
        let n = self.outline.len();
        (0..n).all(|i| {
            crate::geom::orient(
                &self.outline[i],
                &self.outline[(i + 1) % n],
                &self.outline[(i + 2) % n],
            ) >= 0
        })
    }

    /// Outline rotated to start at the lexicographically smallest vertex.
    pub fn canonical_outline(&self) -> Vec<Point> {
        canonical_loop(&self.outline)
    }
}

fn canonical_loop(pts: &[Point]) -> Vec<Point> {
    let n = pts.len();
    let mut best = 0;
    for i in 1..n {
        let less = match pts[i].x.partial_cmp(&pts[best].x) {
            Some(std::cmp::Ordering::Less) => true,
            Some(std::cmp::Ordering::Equal) => {
                matches!(pts[i].y.partial_cmp(&pts[best].y), Some(std::cmp::Ordering::Less))
            }
            _ => false,
        };
        if less {
            best = i;
        }
    }
    (0..n).map(|i| pts[(best + i) % n].clone()).collect()
}

/// A piece whose journey exceeded the budget.
#[derive(Debug, Clone)]
pub struct UnresolvedPiece {
    pub region: ConvexPolygon,
    pub steps: usize,
}

#[derive(Debug, Clone)]
pub struct ReturnPartition {
    pub pieces: Vec<ReturnPiece>,
    pub unresolved: Vec<UnresolvedPiece>,
}

impl ReturnPartition {
    pub fn times(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.return_time).collect()
    }

    pub fn side_counts(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.side_count).collect()
    }

    pub fn total_area2(&self) -> Quad {
        let mut s = Quad::zero();
        for p in &self.pieces {
            s = s + p.area2();
        }
        s
    }
}

/// Symbolic piece propagation: the first-return partition of `base` under
/// the folded map. Pieces are split lazily against zone boundaries, retired
/// when their image returns into the base, and merged into maximal cells at
/// the end.
pub fn return_partition(
    sys: &FoldedSector,
    base: &StarDomain,
    budget: usize,
) -> ReturnPartition {
    struct Work {
        poly: ConvexPolygon,
        iso: Isometry,
        steps: usize,
        word: Vec<usize>,
    }
    let mut work: Vec<Work> = base
        .cells
        .iter()
        .map(|c| Work { poly: c.clone(), iso: Isometry::identity(), steps: 0, word: Vec::new() })
        .collect();
    let mut done: Vec<(ConvexPolygon, Isometry, usize, Vec<usize>)> = Vec::new();
    let mut unresolved: Vec<UnresolvedPiece> = Vec::new();

    while let Some(w) = work.pop() {
        if w.steps >= budget {
            unresolved.push(UnresolvedPiece {
                region: w.iso.inverse().apply_poly(&w.poly),
                steps: w.steps,
            });
            continue;
        }
        for zi in 0..sys.zone_count() {
            let Some(part) = w.poly.intersect(sys.zone_region(zi)) else { continue };
            if part.area2().sign() <= 0 {
                continue;
            }
            let map = sys.zone_map(zi);
            let img = map.apply_poly(&part);
            let iso2 = map.compose(&w.iso);
            let mut word2 = w.word.clone();
            word2.push(zi + 1);
            if base.contains_poly(&img) {
                done.push((img, iso2, w.steps + 1, word2));
            } else if base.disjoint_poly(&img) {
                work.push(Work { poly: img, iso: iso2, steps: w.steps + 1, word: word2 });
            } else {
                let (ins, outs) = base.split_poly(&img);
                for r in ins {
                    done.push((r, iso2.clone(), w.steps + 1, word2.clone()));
                }
                for r in outs {
                    work.push(Work {
                        poly: r,
                        iso: iso2.clone(),
                        steps: w.steps + 1,
                        word: word2.clone(),
                    });
                }
            }
        }
    }

    // group retired fragments by (time, word); fragments of one group that
    // touch along an edge belong to one arrangement cell (the cuts inside a
    // group come from the artificial fan/zone splitting), so merge each
    // connected group into one maximal piece
    let mut groups: HashMap<(usize, Vec<usize>), Vec<(ConvexPolygon, Isometry)>> = HashMap::new();
    for (img, iso, steps, word) in done {
        // store the piece in DOMAIN coordinates (preimage of the landing)
        let region = iso.inverse().apply_poly(&img);
        groups.entry((steps, word)).or_default().push((region, iso));
    }
    let mut pieces: Vec<ReturnPiece> = Vec::new();
    for ((steps, word), mut frags) in groups {
        frags.sort_by(|a, b| poly_sort_key(&a.0).partial_cmp(&poly_sort_key(&b.0)).unwrap());
        let motion = frags[0].1.clone();
        let regions: Vec<ConvexPolygon> = frags.into_iter().map(|f| f.0).collect();
        for group in connected_groups(regions) {
            let outline = trace_outline(&group).unwrap_or_else(|| {
                // decomposition did not form a simple region; keep the hull
                // of the fragments (areas no longer match, so this path is
                // effectively an assertion that never fires on valid input)
                let mut pts = Vec::new();
                for g in &group {
                    pts.extend(g.vertices().iter().cloned());
                }
                convex_hull(pts)
            });
            let side_count = outline.len();
            pieces.push(ReturnPiece {
                outline,
                fragments: group,
                return_time: steps,
                motion: motion.clone(),
                side_count,
                word: word.clone(),
            });
        }
    }
    pieces.sort_by(|a, b| {
        a.return_time
            .cmp(&b.return_time)
            .then_with(|| {
                poly_sort_key(&a.fragments[0])
                    .partial_cmp(&poly_sort_key(&b.fragments[0]))
                    .unwrap()
            })
    });
    unresolved.sort_by(|a, b| poly_sort_key(&a.region).partial_cmp(&poly_sort_key(&b.region)).unwrap());
    ReturnPartition { pieces, unresolved }
}

fn poly_sort_key(p: &ConvexPolygon) -> (f64, f64) {
    let c = p.barycenter();
    (c.x.to_f64(), c.y.to_f64())
}

/// Overlap of positive length between segments a–b and c–d (collinear case).
fn edges_overlap(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if crate::geom::orient(a, b, c) != 0 || crate::geom::orient(a, b, d) != 0 {
        return false;
    }
    let dir = b - a;
    let len2 = dir.dot(&dir);
    let tc = (c - a).dot(&dir);
    let td = (d - a).dot(&dir);
    let (lo, hi) = if tc < td { (tc, td) } else { (td, tc) };
    // intersection of [0, len2] and [lo, hi] has positive length
    let lo = if lo.sign() > 0 { lo } else { Quad::zero() };
    let hi = if (&hi - &len2).sign() < 0 { hi } else { len2 };
    (&hi - &lo).sign() > 0
}

fn polys_adjacent(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    let pv = p.vertices();
    let qv = q.vertices();
    for i in 0..pv.len() {
        let (a, b) = (&pv[i], &pv[(i + 1) % pv.len()]);
        for j in 0..qv.len() {
            let (c, d) = (&qv[j], &qv[(j + 1) % qv.len()]);
            if edges_overlap(a, b, c, d) {
                return true;
            }
        }
    }
    false
}

fn connected_groups(regions: Vec<ConvexPolygon>) -> Vec<Vec<ConvexPolygon>> {
    let n = regions.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if polys_adjacent(&regions[i], &regions[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<ConvexPolygon>> = HashMap::new();
    for (i, r) in regions.into_iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(r);
    }
    let mut out: Vec<Vec<ConvexPolygon>> = groups.into_values().collect();
    out.sort_by(|a, b| poly_sort_key(&a[0]).partial_cmp(&poly_sort_key(&b[0])).unwrap());
    out
}

/// Boundary of a simply-connected union of convex fragments as a simple CCW
/// polygon: split all edges at foreign vertices, cancel opposite sub-edges,
/// chain the rest. Verified by the exact area identity.
pub fn trace_outline(fragments: &[ConvexPolygon]) -> Option<Vec<Point>> {
    if fragments.len() == 1 {
        return Some(fragments[0].vertices().to_vec());
    }
    // collect all vertices for splitting
    let mut all_pts: Vec<Point> = Vec::new();
    for f in fragments {
        for v in f.vertices() {
            if !all_pts.contains(v) {
                all_pts.push(v.clone());
            }
        }
    }
    let mut edges: Vec<(Point, Point)> = Vec::new();
    for f in fragments {
        let verts = f.vertices();
        let n = verts.len();
        for i in 0..n {
            let a = &verts[i];
            let b = &verts[(i + 1) % n];
            let dir = b - a;
            let len2 = dir.dot(&dir);
            // vertices strictly inside the segment
            let mut cuts: Vec<(Quad, Point)> = all_pts
                .iter()
                .filter(|p| {
                    *p != a
                        && *p != b
                        && crate::geom::orient(a, b, p) == 0
                        && {
                            let t = (*p - a).dot(&dir);
                            t.sign() > 0 && (&len2 - &t).sign() > 0
                        }
                })
                .map(|p| ((p - a).dot(&dir), p.clone()))
                .collect();
            cuts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
            let mut prev = a.clone();
            for (_, p) in cuts {
                edges.push((prev, p.clone()));
                prev = p;
            }
            edges.push((prev, b.clone()));
        }
    }
    // cancel opposite pairs
    let key = |p: &Point| format!("{};{}", p.x, p.y);
    let mut counter: HashMap<(String, String), Vec<(Point, Point)>> = HashMap::new();
    for (a, b) in edges {
        let ka = key(&a);
        let kb = key(&b);
        if let Some(v) = counter.get_mut(&(kb.clone(), ka.clone())) {
            v.pop();
            if v.is_empty() {
                counter.remove(&(kb, ka));
            }
            continue;
        }
        counter.entry((ka, kb)).or_default().push((a, b));
    }
    let boundary: Vec<(Point, Point)> = counter.into_values().flatten().collect();
    if boundary.is_empty() {
        return None;
    }
    // chain
    let mut succ: HashMap<String, Vec<(Point, Point)>> = HashMap::new();
    for (a, b) in &boundary {
        succ.entry(key(a)).or_default().push((a.clone(), b.clone()));
    }
    let start = boundary[0].0.clone();
    let mut loop_pts = vec![start.clone()];
    let mut cur = start.clone();
    for _ in 0..boundary.len() {
        let nexts = succ.get_mut(&key(&cur))?;
        let (_, b) = nexts.pop()?;
        cur = b.clone();
        if cur == start {
            break;
        }
        loop_pts.push(b);
    }
    if cur != start || loop_pts.len() < 3 {
        return None;
    }
    // drop collinear intermediates
    let n = loop_pts.len();
    let mut outline: Vec<Point> = Vec::new();
    for i in 0..n {
        let prev = &loop_pts[(i + n - 1) % n];
        let next = &loop_pts[(i + 1) % n];
        if crate::geom::orient(prev, &loop_pts[i], next) != 0 {
            outline.push(loop_pts[i].clone());
        }
    }
    // exactness: the outline's shoelace area must equal the fragment total
    let mut sh = Quad::zero();
    for i in 0..outline.len() {
        sh = sh + outline[i].cross(&outline[(i + 1) % outline.len()]);
    }
    let mut total = Quad::zero();
    for f in fragments {
        total = total + f.area2();
    }
    if sh != total {
        return None;
    }
    Some(outline)
}

/// Monotone-chain hull with exact comparisons.
pub fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|p, q| {
        p.x.partial_cmp(&q.x).unwrap().then(p.y.partial_cmp(&q.y).unwrap())
    });
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && crate::geom::orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && crate::geom::orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// ---------------------------------------------------------------------------
// lattice censuses
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CellShape {
    Square,
    Hexagon,
    Triangle,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitInfo {
    pub shape: CellShape,
    /// number of components in this T-orbit
    pub count: usize,
    /// common point period of the components
    pub period: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub level: usize,
    pub orbits: Vec<OrbitInfo>,
}

/// Enumerate the components of the given ring/level of a lattice table.
pub fn lattice_census(
    table: &BilliardTable,
    level: usize,
) -> Result<CensusRecord, StructureError> {
    use crate::billiard::TableSpec;
    match table.spec {
        // hexagon table: ring-ℓ hexagons have period 6ℓ, the triangles
        // between rings ℓ−1 and ℓ have period 6(2ℓ−1)
        TableSpec::Square => square_census(table, level),
        TableSpec::HexagonLattice => polygon_census(table, level, 6 * level, 6 * (2 * level - 1)),
        // triangle table: hexagons at period 12ℓ−6, triangles at 12ℓ
        TableSpec::TriangleLattice => polygon_census(table, level, 12 * level - 6, 12 * level),
        _ => Err(StructureError::BadBase),
    }
}

fn square_census(table: &BilliardTable, d: usize) -> Result<CensusRecord, StructureError> {
    // ring d: the necklace of 4d unit cells at Manhattan distance d
    let seed = Point::new(
        Quad::ratio(2 * d as i64 + 1, 2),
        Quad::ratio(1, 2),
    );
    let comp = component_of(table, &seed, 64 * d.max(1))?;
    if comp.period != 4 * d {
        return Err(StructureError::NotPeriodic(Outcome::Periodic(comp.period)));
    }
    let orbit_len = orbit_of_region(table, &comp).len();
    Ok(CensusRecord {
        level: d,
        orbits: vec![OrbitInfo { shape: CellShape::Square, count: orbit_len, period: comp.period }],
    })
}

/// Propagate a component region along T; returns the distinct regions.
fn orbit_of_region(table: &BilliardTable, comp: &Component) -> Vec<ConvexPolygon> {
    let mut regions = vec![comp.region.clone()];
    let mut keys = vec![region_key(&comp.region)];
    let mut cur = comp.region.clone();
    let mut pt = comp.region.barycenter();
    loop {
        let v = match table.tangent_vertex(&pt) {
            Ok(Tangency::Vertex(v)) => v,
            _ => break,
        };
        let refl = Isometry::point_reflection(table.vertex(v));
        cur = refl.apply_poly(&cur);
        pt = refl.apply(&pt);
        let k = region_key(&cur);
        if keys.contains(&k) {
            break;
        }
        keys.push(k);
        regions.push(cur.clone());
    }
    regions
}

fn region_key(p: &ConvexPolygon) -> String {
    let c = p.canonical();
    let mut s = String::new();
    for v in c.vertices() {
        s.push_str(&format!("{};{}|", v.x, v.y));
    }
    s
}

fn polygon_census(
    table: &BilliardTable,
    level: usize,
    hex_period: usize,
    tri_period: usize,
) -> Result<CensusRecord, StructureError> {
    let comps_h = enumerate_components_with_period(table, level, hex_period);
    let comps_t = if tri_period == hex_period {
        comps_h.clone()
    } else {
        enumerate_components_with_period(table, level, tri_period)
    };
    let hexes: Vec<&Component> =
        comps_h.iter().filter(|c| c.region.vertices().len() == 6).collect();
    let tris: Vec<&Component> =
        comps_t.iter().filter(|c| c.region.vertices().len() == 3).collect();
    let mut orbits = Vec::new();
    for o in group_into_orbits(table, &hexes) {
        orbits.push(OrbitInfo { shape: CellShape::Hexagon, count: o.len(), period: hex_period });
    }
    for o in group_into_orbits(table, &tris) {
        orbits.push(OrbitInfo { shape: CellShape::Triangle, count: o.len(), period: tri_period });
    }
    Ok(CensusRecord { level, orbits })
}

/// Scan an annulus of sample points, returning deduplicated components with
/// the requested exact period.
fn enumerate_components_with_period(
    table: &BilliardTable,
    level: usize,
    period: usize,
) -> Vec<Component> {
    let reach = 2 * level as i64 + 4;
    let budget = 4 * period + 8;
    // sample on a half-integer grid: every component of these tables has
    // diameter ≥ 1/2 so this cannot miss one
    let coords: Vec<i64> = (-2 * reach..=2 * reach).collect();
    let samples: Vec<Point> = coords
        .iter()
        .flat_map(|&i| {
            coords.iter().map(move |&j| {
                Point::new(Quad::ratio(2 * i + 1, 4), Quad::ratio(2 * j + 1, 4))
            })
        })
        .collect();
    let found: Vec<Component> = samples
        .par_iter()
        .filter_map(|p| {
            let orbit = table.orbit(p, budget).ok()?;
            match orbit.outcome {
                Outcome::Periodic(q) if q == period || 2 * q == period => {
                    component_of(table, p, budget).ok().filter(|c| c.period == period)
                }
                _ => None,
            }
        })
        .collect();
    let mut seen: HashMap<String, Component> = HashMap::new();
    for c in found {
        seen.entry(region_key(&c.region)).or_insert(c);
    }
    let mut out: Vec<Component> = seen.into_values().collect();
    out.sort_by(|a, b| {
        poly_sort_key(&a.region).partial_cmp(&poly_sort_key(&b.region)).unwrap()
    });
    out
}

fn group_into_orbits(table: &BilliardTable, comps: &[&Component]) -> Vec<Vec<ConvexPolygon>> {
    let mut remaining: HashMap<String, ConvexPolygon> = comps
        .iter()
        .map(|c| (region_key(&c.region), c.region.clone()))
        .collect();
    let mut orbits = Vec::new();
    let order: Vec<String> = {
        let mut keys: Vec<(String, (f64, f64))> = remaining
            .iter()
            .map(|(k, r)| (k.clone(), poly_sort_key(r)))
            .collect();
        keys.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        keys.into_iter().map(|(k, _)| k).collect()
    };
    for key in order {
        let Some(region) = remaining.remove(&key) else { continue };
        let comp = Component { region, period: 0, itinerary: vec![], center_special: false };
        let orbit = orbit_of_region(table, &comp);
        for r in &orbit {
            remaining.remove(&region_key(r));
        }
        orbits.push(orbit);
    }
    orbits
}

// ---------------------------------------------------------------------------
// plane classification scans
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CellLabel {
    Finite(usize),
    Periodic(usize),
    Budget,
    TableInterior,
    TableStraddle,
}

#[derive(Debug, Clone)]
pub struct ScanGrid {
    pub window: (Point, Point),
    pub width: usize,
    pub height: usize,
    /// row-major, top row first
    pub labels: Vec<CellLabel>,
}

/// Classify the exact center of every cell of a w×h grid over the window.
/// Deterministic for any worker count: cells are indexed, work is embarrassingly
/// parallel, and the output vector is ordered by index.
pub fn scan_classify(
    table: &BilliardTable,
    window: (Point, Point),
    width: usize,
    height: usize,
    budget: usize,
) -> ScanGrid {
    let (lo, hi) = &window;
    let dx = &(&hi.x - &lo.x) / &Quad::from_int(width as i64);
    let dy = &(&hi.y - &lo.y) / &Quad::from_int(height as i64);
    let idx: Vec<usize> = (0..width * height).collect();
    let labels: Vec<CellLabel> = idx
        .par_iter()
        .map(|&k| {
            let i = k % width;
            let j = k / width; // 0 = top row
            let cx = &lo.x + &(&dx * &Quad::ratio(2 * i as i64 + 1, 2));
            let cy = &hi.y - &(&dy * &Quad::ratio(2 * j as i64 + 1, 2));
            let center = Point::new(cx.clone(), cy.clone());
            // cell rectangle corners for the straddle test
            let x0 = &lo.x + &(&dx * &Quad::from_int(i as i64));
            let x1 = &x0 + &dx;
            let y1 = &hi.y - &(&dy * &Quad::from_int(j as i64));
            let y0 = &y1 - &dy;
            let cell = ConvexPolygon::new(vec![
                Point::new(x0.clone(), y0.clone()),
                Point::new(x1.clone(), y0.clone()),
                Point::new(x1.clone(), y1.clone()),
                Point::new(x0.clone(), y1.clone()),
            ])
            .expect("cell");
            match table.polygon().contains(&center) {
                Location::Interior | Location::Boundary => return CellLabel::TableInterior,
                Location::Exterior => {}
            }
            if let Some(r) = cell.intersect(table.polygon()) {
                if r.area2().sign() > 0 {
                    return CellLabel::TableStraddle;
                }
            }
            match table.orbit(&center, budget) {
                Err(_) => CellLabel::TableInterior,
                Ok(res) => match res.outcome {
                    Outcome::Finite(k) => CellLabel::Finite(k),
                    Outcome::Periodic(p) => CellLabel::Periodic(p),
                    Outcome::BudgetExceeded(_) => CellLabel::Budget,
                },
            }
        })
        .collect();
    ScanGrid { window, width, height, labels }
}

impl ScanGrid {
    /// Binary PGM (P5), one byte per cell. The mapping is stable so output
    /// is byte-identical across worker counts.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        for l in &self.labels {
            let v: u8 = match l {
                CellLabel::TableInterior => 0,
                CellLabel::TableStraddle => 32,
                CellLabel::Finite(_) => 255,
                CellLabel::Budget => 128,
                CellLabel::Periodic(p) => 64 + ((p * 13) % 128) as u8,
            };
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiard::TableSpec;

    fn qp(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::new(Quad::ratio(xn, xd), Quad::ratio(yn, yd))
    }

    #[test]
    fn component_of_square_cells() {
        let sq = BilliardTable::make(TableSpec::Square);
        // (1/2, 3/2) → open unit cell (0,1)×(1,2), period 4
        let c = component_of(&sq, &qp(1, 2, 3, 2), 100).unwrap();
        assert_eq!(c.period, 4);
        let cell = ConvexPolygon::new(vec![
            Point::from_ints(0, 1),
            Point::from_ints(1, 1),
            Point::from_ints(1, 2),
            Point::from_ints(0, 2),
        ])
        .unwrap();
        assert!(c.region.same_region(&cell));

        // (3/2, 3/2) → open unit cell (1,2)×(1,2), period 8
        let c = component_of(&sq, &qp(3, 2, 3, 2), 100).unwrap();
        assert_eq!(c.period, 8);
        let cell = ConvexPolygon::new(vec![
            Point::from_ints(1, 1),
            Point::from_ints(2, 1),
            Point::from_ints(2, 2),
            Point::from_ints(1, 2),
        ])
        .unwrap();
        assert!(c.region.same_region(&cell));
    }

    #[test]
    fn component_t_stable() {
        // applying the composed period-p motion maps the region onto itself
        let sq = BilliardTable::make(TableSpec::Square);
        let c = component_of(&sq, &qp(3, 2, 3, 2), 100).unwrap();
        let mut m = Isometry::identity();
        for &v in &c.itinerary {
            m = Isometry::point_reflection(sq.vertex(v)).compose(&m);
        }
        let img = m.apply_poly(&c.region);
        assert!(img.same_region(&c.region));
    }

    #[test]
    fn odd_center_detable() {
        // triangle-table level-1 hexagon has an odd special center
        let tri = BilliardTable::make(TableSpec::TriangleLattice);
        let c = component_of(&tri, &qp(3, 2, 1, 2), 200).unwrap();
        assert_eq!(c.region.vertices().len(), 6);
        assert_eq!(c.period, 6);
        assert!(c.center_special);
        // the center itself has odd period 3
        let center = c.region.barycenter();
        let r = tri.orbit(&center, 50).unwrap();
        assert_eq!(r.outcome, Outcome::Periodic(3));
    }

    #[test]
    fn invariant_figure_square_self() {
        let sq = ConvexPolygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ])
        .unwrap();
        let rot = Isometry::rotation_deg(90, &qp(1, 2, 1, 2), 1).unwrap();
        let fig = invariant_figure(&sq, &rot, 4).unwrap();
        assert!(fig.same_region(&sq));
    }

    #[test]
    fn square_census_small_rings() {
        let sq = BilliardTable::make(TableSpec::Square);
        for d in 1..=3 {
            let rec = lattice_census(&sq, d).unwrap();
            assert_eq!(rec.orbits.len(), 1);
            assert_eq!(rec.orbits[0].count, 4 * d);
            assert_eq!(rec.orbits[0].period, 4 * d);
        }
    }

    #[test]
    fn trivial_return_partition() {
        // an invariant component returns in exactly its set-period
        let sys = FoldedSector::new(BilliardTable::make(TableSpec::Octagon), 8);
        let v = sys.zone_center(1).clone();
        let (comp, _, _) = sys.fold_component(&v, 16).unwrap();
        let base = StarDomain::convex(comp.clone());
        let part = return_partition(&sys, &base, 100);
        assert!(part.unresolved.is_empty());
        assert_eq!(part.pieces.len(), 1);
        assert_eq!(part.pieces[0].return_time, 1);
        assert_eq!(part.total_area2(), comp.area2());
    }

    #[test]
    fn scan_single_cell() {
        let sq = BilliardTable::make(TableSpec::Square);
        let g = scan_classify(
            &sq,
            (Point::from_ints(1, 1), Point::from_ints(2, 2)),
            1,
            1,
            100,
        );
        assert_eq!(g.labels.len(), 1);
        assert_eq!(g.labels[0], CellLabel::Periodic(8));
    }
}
