//! The dodecagon analysis: the rocket domain and its five zones, zone
//! invariant figures, the contraction family (λ = 7−4√3), the rocket
//! return tables, the scaling conjugacies, and the period-growth witness.

use crate::billiard::{BilliardTable, FoldedSector, TableSpec};
use crate::field::Quad;
use crate::geom::{orient, ConvexPolygon, Point, Similarity};
use crate::structure::{invariant_figure, return_partition, ReturnPartition, StarDomain};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DodecagonError {
    #[error("rocket system validation failed: {0}")]
    Validation(String),
    #[error("return partition of {0:?} left unresolved pieces")]
    Unresolved(RocketDomain),
    #[error("period growth witness failed: {0}")]
    Witness(String),
}

fn fail(check: &str) -> DodecagonError {
    DodecagonError::Validation(check.to_string())
}

/// The named first-return domains of Глава 5 and the appendix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RocketDomain {
    /// A_мал = Γ_λ(A)
    SmallRocket,
    /// Γ_λ(A_мал), the "маленькая-маленькая" rocket (appendix Table 5)
    SmallSmallRocket,
    /// A_ср, resting on the stable zone-3 figure
    MiddleRocket,
    /// A_мал.ср = Γ_λ(A_ср)
    SmallMiddleRocket,
    /// the airplane over invariant figure 1
    BigAirplane,
    /// Γ_λ(airplane)
    SmallAirplane,
    /// the zone-0 piece itself
    Zone0,
    /// Γ_ср(zone 0)
    MiddleZone0,
}

impl RocketDomain {
    pub fn all() -> [RocketDomain; 8] {
        [
            RocketDomain::SmallRocket,
            RocketDomain::SmallSmallRocket,
            RocketDomain::MiddleRocket,
            RocketDomain::SmallMiddleRocket,
            RocketDomain::BigAirplane,
            RocketDomain::SmallAirplane,
            RocketDomain::Zone0,
            RocketDomain::MiddleZone0,
        ]
    }

    pub fn label(&self) -> &'static str {
        match self {
            RocketDomain::SmallRocket => "small rocket",
            RocketDomain::SmallSmallRocket => "small-small rocket",
            RocketDomain::MiddleRocket => "middle rocket",
            RocketDomain::SmallMiddleRocket => "small middle rocket",
            RocketDomain::BigAirplane => "big airplane",
            RocketDomain::SmallAirplane => "small airplane",
            RocketDomain::Zone0 => "zone 0",
            RocketDomain::MiddleZone0 => "middle zone 0",
        }
    }

    pub fn parse(s: &str) -> Option<RocketDomain> {
        Some(match s {
            "small-rocket" | "a-mal" => RocketDomain::SmallRocket,
            "small-small-rocket" | "a-mal-mal" => RocketDomain::SmallSmallRocket,
            "middle-rocket" | "a-sr" => RocketDomain::MiddleRocket,
            "small-middle-rocket" | "a-mal-sr" => RocketDomain::SmallMiddleRocket,
            "big-airplane" => RocketDomain::BigAirplane,
            "small-airplane" => RocketDomain::SmallAirplane,
            "zone0" => RocketDomain::Zone0,
            "middle-zone0" => RocketDomain::MiddleZone0,
            _ => return None,
        })
    }
}

/// Expected return-time and side-count rows for every printed table
/// (column i pairs sides[i] with times[i]).
pub fn printed_table(which: RocketDomain) -> (&'static [usize], &'static [usize]) {
    match which {
        RocketDomain::SmallRocket => (
            &[4, 3, 3, 4, 3, 6, 4, 4, 4, 3],
            &[2, 3, 11, 20, 35, 37, 63, 185, 269, 479],
        ),
        RocketDomain::SmallSmallRocket => (
            &[4, 3, 3, 4, 6, 3, 4, 4, 4, 3],
            &[70, 105, 499, 754, 961, 1179, 1423, 5009, 7533, 13843],
        ),
        RocketDomain::MiddleRocket => (&[3, 4, 4, 4, 4, 3, 4, 4], &[1, 1, 1, 1, 10, 25, 27, 53]),
        RocketDomain::SmallMiddleRocket => (
            &[4, 3, 4, 4, 4, 4, 3, 4],
            &[20, 35, 37, 63, 318, 525, 743, 987],
        ),
        RocketDomain::BigAirplane => (
            &[3, 3, 4, 3, 6, 4, 4, 4, 3],
            &[1, 9, 18, 33, 35, 61, 183, 267, 477],
        ),
        RocketDomain::SmallAirplane => (
            &[3, 3, 4, 6, 3, 4, 4, 4, 3],
            &[35, 429, 684, 891, 1109, 1353, 4939, 7463, 13773],
        ),
        RocketDomain::Zone0 => (
            &[4, 3, 4, 3, 6, 4, 4, 4, 3],
            &[1, 10, 19, 34, 36, 62, 184, 268, 478],
        ),
        RocketDomain::MiddleZone0 => (
            &[3, 4, 4, 3, 5, 5, 4, 4, 4, 3],
            &[18, 20, 24, 35, 37, 48, 63, 196, 280, 490],
        ),
    }
}

/// Simulation budget: twice the largest expected return time.
pub fn domain_budget(which: RocketDomain) -> usize {
    2 * printed_table(which).1.iter().copied().max().unwrap()
}

/// The rocket system of Глава 5.
#[derive(Debug, Clone)]
pub struct RocketSystem {
    pub sector: FoldedSector,
    /// rocket outline [O, F180, F150, F120, F90, F60]
    pub rocket: StarDomain,
    /// convex zones 0..3 (triangle + three kites)
    pub zones: [ConvexPolygon; 4],
    /// the non-convex fifth zone
    pub zone4: StarDomain,
    /// λ = 7 − 4√3
    pub lambda: Quad,
    /// 2√3 − 3, the middle-rocket ratio
    pub middle_ratio: Quad,
    /// airplane outline [O, h−, h0, h+]
    pub airplane: Vec<Point>,
    /// apex of the X rocket: the reflex arc vertex of A_ср, at axis
    /// distance 3−√3
    pub x_apex: Point,
}

pub fn build_rocket_system() -> Result<RocketSystem, DodecagonError> {
    let table = BilliardTable::make(TableSpec::Dodecagon);
    let sector = FoldedSector::new(table, 10);
    if sector.zone_count() != 5 {
        return Err(fail("zone count = 5"));
    }
    for (i, deg) in [150, 120, 90, 60, 30].iter().enumerate() {
        if sector.zone_angle_deg(i) != *deg
            || sector.zone_map(i).rotation_deg_value() != *deg as i32
        {
            return Err(fail("zone rotations (150, 120, 90, 60, 30) CCW"));
        }
    }
    let apex = sector.apex.clone();
    let c5 = sector.zone_center(4).clone();

    // the rocket rests on the invariant unit dodecagon at the far zone
    // center: its far boundary is that dodecagon's near arc
    let arc: Vec<Point> = [180, 150, 120, 90, 60]
        .iter()
        .map(|&deg| {
            let (c, s) = crate::field::cos_sin_deg_sqrt3(deg);
            Point::new(&c5.x + &c, &c5.y + &s)
        })
        .collect();
    let mut outline = vec![apex.clone()];
    outline.extend(arc.iter().cloned());
    let rocket = StarDomain::new(outline).map_err(|_| fail("rocket star-shaped from apex"))?;

    // convex zones 0..3 are the folded-sector zone regions
    let zones: [ConvexPolygon; 4] = [
        sector.zone_region(0).clone(),
        sector.zone_region(1).clone(),
        sector.zone_region(2).clone(),
        sector.zone_region(3).clone(),
    ];
    if zones[0].vertices().len() != 3 {
        return Err(fail("zone 0 is a triangle"));
    }
    // isoceles apex triangle (two sides of equal exact length)
    {
        let v = zones[0].vertices();
        if !v.contains(&apex) {
            return Err(fail("zone 0 at apex"));
        }
        let mut sides = Vec::new();
        for i in 0..3 {
            let d = &v[(i + 1) % 3] - &v[i];
            sides.push(d.dot(&d));
        }
        let isoceles =
            sides[0] == sides[1] || sides[1] == sides[2] || sides[2] == sides[0];
        if !isoceles {
            return Err(fail("zone 0 isoceles"));
        }
    }
    for z in &zones[1..] {
        if z.vertices().len() != 4 {
            return Err(fail("zones 1–3 are quadrilaterals"));
        }
    }
    // kite check: two pairs of equal adjacent sides
    for z in &zones[1..] {
        let v = z.vertices();
        let side2 = |i: usize| {
            let d = &v[(i + 1) % 4] - &v[i];
            d.dot(&d)
        };
        let kite = (side2(0) == side2(1) && side2(2) == side2(3))
            || (side2(1) == side2(2) && side2(3) == side2(0));
        if !kite {
            return Err(fail("zones 1–3 are kites"));
        }
    }

    // fifth zone: rocket ∖ zones = the arc-hugging pentagon [R, F150..F60]
    let z4_region = sector.zone_region(3);
    // R = the zone-3/zone-4 cut endpoint on the upper ray: the vertex of
    // zone 3 with the largest positive cross-axis coordinate
    let r_pt = z4_region
        .vertices()
        .iter()
        .max_by(|a, b| {
            let (_, sa) = sector.axis_coords(a);
            let (_, sb) = sector.axis_coords(b);
            sa.partial_cmp(&sb).unwrap()
        })
        .unwrap()
        .clone();
    let zone4_outline = vec![r_pt.clone(), arc[1].clone(), arc[2].clone(), arc[3].clone(), arc[4].clone()];
    let zone4 = StarDomain::new(zone4_outline).map_err(|_| fail("zone 4 star-shaped"))?;
    // non-convexity: some corner turns right
    {
        let o = &zone4.outline;
        let n = o.len();
        let mut reflex = false;
        for i in 0..n {
            if orient(&o[(i + n - 1) % n], &o[i], &o[(i + 1) % n]) < 0 {
                reflex = true;
            }
        }
        if !reflex {
            return Err(fail("zone 4 non-convex"));
        }
    }
    // the five pieces tile the rocket
    let mut total = zone4.area2();
    for z in &zones {
        total = total + z.area2();
    }
    if total != rocket.area2() {
        return Err(fail("zones tile the rocket (area identity)"));
    }
    // and their images do too
    let mut img_total = Quad::zero();
    for (i, z) in zones.iter().enumerate() {
        let img = sector.zone_map(i).apply_poly(z);
        if !rocket.contains_poly(&img) {
            return Err(fail("zone image stays inside the rocket"));
        }
        img_total = img_total + img.area2();
    }
    for cell in &zone4.cells {
        let img = sector.zone_map(4).apply_poly(cell);
        if !rocket.contains_poly(&img) {
            return Err(fail("zone-4 image stays inside the rocket"));
        }
        img_total = img_total + img.area2();
    }
    if img_total != rocket.area2() {
        return Err(fail("zone images tile the rocket"));
    }

    let lambda = Quad::with_sqrt(7, 1, -4, 1, 3);
    // λ = (2−√3)² and (7−4√3)(7+4√3) = 1
    let silver = Quad::with_sqrt(2, 1, -1, 1, 3);
    if &silver * &silver != lambda {
        return Err(fail("λ = (2−√3)²"));
    }
    if lambda.approx(3) != "0.072" {
        return Err(fail("λ ≈ 0.072"));
    }
    let middle_ratio = Quad::with_sqrt(-3, 1, 2, 1, 3); // 2√3 − 3
    // the middle rocket rests on the zone-3 invariant figure: the homothety
    // with that ratio carries the far dodecagon onto it
    let gamma_sr = Similarity::homothety(&apex, middle_ratio.clone());
    let c4 = sector.zone_center(3).clone();
    if gamma_sr.apply(&c5) != c4 {
        return Err(fail("Γ_ср maps the far center to the zone-3 center"));
    }

    // airplane: the dart from the apex over the three near vertices of the
    // zone-1 invariant hexagon
    let fig1 = invariant_figure(&zones[1], sector.zone_map(1), 3)
        .map_err(|_| fail("zone-1 invariant figure"))?;
    let mut hv: Vec<(Quad, Quad, Point)> = fig1
        .vertices()
        .iter()
        .map(|p| {
            let (t, s) = sector.axis_coords(p);
            (t, s, p.clone())
        })
        .collect();
    hv.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.partial_cmp(&b.1).unwrap()));
    let near3 = &hv[..3];
    let lower = near3.iter().find(|(_, s, _)| s.sign() < 0).ok_or_else(|| fail("airplane lower"))?;
    let mid = near3.iter().find(|(_, s, _)| s.sign() == 0).ok_or_else(|| fail("airplane mid"))?;
    let upper = near3.iter().find(|(_, s, _)| s.sign() > 0).ok_or_else(|| fail("airplane upper"))?;
    let airplane = vec![apex.clone(), lower.2.clone(), mid.2.clone(), upper.2.clone()];
    StarDomain::new(airplane.clone()).map_err(|_| fail("airplane star-shaped"))?;

    // the X apex: the reflex arc vertex of A_ср = Γ_ср(F120), on the axis
    // at distance 3−√3
    let x_apex = gamma_sr.apply(&arc[2]);
    let (t, s) = sector.axis_coords(&x_apex);
    if s.sign() != 0 || t != Quad::with_sqrt(3, 1, -1, 1, 3) {
        return Err(fail("X apex at axis distance 3−√3"));
    }

    Ok(RocketSystem {
        sector,
        rocket,
        zones,
        zone4,
        lambda,
        middle_ratio,
        airplane,
        x_apex,
    })
}

impl RocketSystem {
    pub fn apex(&self) -> &Point {
        &self.sector.apex
    }

    /// Γ_λ: the contraction at the apex with ratio λ.
    pub fn gamma_lambda(&self) -> Similarity {
        Similarity::homothety(self.apex(), self.lambda.clone())
    }

    /// Γ_ср: the contraction at the apex with ratio 2√3−3.
    pub fn gamma_middle(&self) -> Similarity {
        Similarity::homothety(self.apex(), self.middle_ratio.clone())
    }

    /// Γ_X: A_ср → X (rotation by 90°, ratio λ, apex ↦ the arc notch).
    pub fn gamma_x(&self) -> Similarity {
        Similarity::new_rotated(90, 3, self.lambda.clone(), self.apex(), &self.x_apex)
            .expect("30-degree multiples representable")
    }

    fn scaled_outline(&self, outline: &[Point], ratio: &Quad) -> Vec<Point> {
        let g = Similarity::homothety(self.apex(), ratio.clone());
        outline.iter().map(|p| g.apply(p)).collect()
    }

    /// Build the named return domain.
    pub fn domain(&self, which: RocketDomain) -> StarDomain {
        let rocket = &self.rocket.outline;
        let lam = &self.lambda;
        let sr = &self.middle_ratio;
        let outline = match which {
            RocketDomain::SmallRocket => self.scaled_outline(rocket, lam),
            RocketDomain::SmallSmallRocket => {
                let l2 = lam * lam;
                self.scaled_outline(rocket, &l2)
            }
            RocketDomain::MiddleRocket => self.scaled_outline(rocket, sr),
            RocketDomain::SmallMiddleRocket => {
                let r = lam * sr;
                self.scaled_outline(rocket, &r)
            }
            RocketDomain::BigAirplane => self.airplane.clone(),
            RocketDomain::SmallAirplane => self.scaled_outline(&self.airplane, lam),
            RocketDomain::Zone0 => {
                return StarDomain::convex(self.zones[0].clone());
            }
            RocketDomain::MiddleZone0 => {
                let g = self.gamma_middle();
                return StarDomain::convex(g.apply_poly(&self.zones[0]));
            }
        };
        StarDomain::new(outline).expect("scaled domain star-shaped")
    }

    /// The X rocket: Γ_X(A_ср).
    pub fn x_domain(&self) -> StarDomain {
        let gx = self.gamma_x();
        let asr = self.domain(RocketDomain::MiddleRocket);
        StarDomain::new(gx.apply_pts(&asr.outline)).expect("X star-shaped")
    }

    /// First-return partition of the named domain at the documented budget.
    pub fn rocket_return_table(&self, which: RocketDomain) -> Result<ReturnPartition, DodecagonError> {
        let base = self.domain(which);
        let part = return_partition(&self.sector, &base, domain_budget(which));
        if !part.unresolved.is_empty() {
            return Err(DodecagonError::Unresolved(which));
        }
        Ok(part)
    }

    /// The four zone invariant figures (orders 12, 3, 4, 6).
    pub fn zone_invariant_figures(&self) -> Result<[ConvexPolygon; 4], DodecagonError> {
        let orders = [12usize, 3, 4, 6];
        let mut out = Vec::new();
        for i in 0..4 {
            let fig = invariant_figure(&self.zones[i], self.sector.zone_map(i), orders[i])
                .map_err(|_| fail("zone invariant figure nonempty"))?;
            out.push(fig);
        }
        let figs: [ConvexPolygon; 4] = out.try_into().unwrap();
        // shapes: two regular dodecagons, a 90/150 equilateral hexagon, a
        // 150/120 equilateral octagon
        check_regular_ngon(&figs[0], 12, self.sector.zone_center(0)).map_err(DodecagonError::Validation)?;
        check_regular_ngon(&figs[3], 12, self.sector.zone_center(3)).map_err(DodecagonError::Validation)?;
        check_equilateral_angles(&figs[1], 6, &[90, 150]).map_err(DodecagonError::Validation)?;
        check_equilateral_angles(&figs[2], 8, &[150, 120]).map_err(DodecagonError::Validation)?;
        Ok(figs)
    }

    /// First return of the folded map into `domain` (strict interior), with
    /// the step count. None when a boundary is hit or the budget runs out.
    pub fn first_return(
        &self,
        domain: &StarDomain,
        x: &Point,
        budget: usize,
    ) -> Option<(usize, Point)> {
        let mut cur = x.clone();
        for k in 1..=budget {
            cur = self.sector.fold_step(&cur).ok()?.point;
            if domain.contains_point_strict(&cur) {
                return Some((k, cur));
            }
        }
        None
    }

    /// Deterministic pseudo-random exact samples strictly inside a domain.
    pub fn sample_points(&self, domain: &StarDomain, count: usize, seed: u64) -> Vec<Point> {
        let outline_poly = ConvexPolygon::new(crate::structure::convex_hull(domain.outline.clone()))
            .expect("hull");
        let (lo, hi) = outline_poly.bbox();
        let dx = &hi.x - &lo.x;
        let dy = &hi.y - &lo.y;
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % 4096
        };
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let fx = Quad::ratio(next() as i64, 4096);
            let fy = Quad::ratio(next() as i64, 4096);
            let p = Point::new(&lo.x + &(&dx * &fx), &lo.y + &(&dy * &fy));
            if domain.contains_point_strict(&p) {
                out.push(p);
            }
        }
        out
    }

    /// T_мал.ср Γ x = Γ T_ср x, pointwise and at the partition level.
    pub fn verify_scaling_conjugacy(&self, samples: usize) -> Result<ConjugacyReport, DodecagonError> {
        let gamma = self.gamma_lambda();
        self.verify_conjugacy_with(
            &gamma,
            RocketDomain::MiddleRocket,
            RocketDomain::SmallMiddleRocket,
            samples,
        )
    }

    /// Гипотеза 1: Γ_X T_ср p = T_X Γ_X p, with X's return times matching
    /// the small-middle-rocket table.
    pub fn verify_hypothesis1(&self, samples: usize) -> Result<ConjugacyReport, DodecagonError> {
        let gx = self.gamma_x();
        let src = self.domain(RocketDomain::MiddleRocket);
        let dst = self.x_domain();
        let mut report = self.pointwise_conjugacy(&gx, &src, &dst, samples);
        // X's partition must reproduce the printed small-middle table
        let x_part = return_partition(&self.sector, &dst, domain_budget(RocketDomain::SmallMiddleRocket));
        let (sides, times) = printed_table(RocketDomain::SmallMiddleRocket);
        let got = table_rows(&x_part);
        report.partition_match = x_part.unresolved.is_empty()
            && got == (sides.to_vec(), times.to_vec());
        report.matched = report.matched && report.partition_match;
        Ok(report)
    }

    fn verify_conjugacy_with(
        &self,
        gamma: &Similarity,
        src: RocketDomain,
        dst: RocketDomain,
        samples: usize,
    ) -> Result<ConjugacyReport, DodecagonError> {
        let src_dom = self.domain(src);
        let dst_dom = self.domain(dst);
        let mut report = self.pointwise_conjugacy(gamma, &src_dom, &dst_dom, samples);
        // piece-level: Γ images of the source pieces are exactly the
        // destination pieces (vertex match up to ordering)
        let ps = self.rocket_return_table(src)?;
        let pd = self.rocket_return_table(dst)?;
        let mut all_match = ps.pieces.len() == pd.pieces.len();
        if all_match {
            for piece in &ps.pieces {
                let img: Vec<Point> = piece.outline.iter().map(|p| gamma.apply(p)).collect();
                let img_poly = ReturnPieceOutline(img);
                if !pd
                    .pieces
                    .iter()
                    .any(|q| ReturnPieceOutline(q.outline.clone()).same_loop(&img_poly))
                {
                    all_match = false;
                    break;
                }
            }
        }
        report.partition_match = all_match;
        report.matched = report.matched && all_match;
        Ok(report)
    }

    fn pointwise_conjugacy(
        &self,
        gamma: &Similarity,
        src: &StarDomain,
        dst: &StarDomain,
        samples: usize,
    ) -> ConjugacyReport {
        let pts = self.sample_points(src, samples, 0x5eed);
        let budget = 4000;
        let mut checked = 0;
        let mut excluded = 0;
        let mut defects = 0;
        for p in &pts {
            let Some((_, tp)) = self.first_return(src, p, budget) else {
                excluded += 1;
                continue;
            };
            let gp = gamma.apply(p);
            if !dst.contains_point_strict(&gp) {
                excluded += 1;
                continue;
            }
            let Some((_, tgp)) = self.first_return(dst, &gp, budget) else {
                excluded += 1;
                continue;
            };
            checked += 1;
            if gamma.apply(&tp) != tgp {
                defects += 1;
            }
        }
        ConjugacyReport {
            samples: checked,
            excluded,
            defects,
            matched: defects == 0 && checked > 0,
            partition_match: true,
        }
    }

    /// The period-growth witness: C₀, C₁, C₂ are the three largest
    /// components adjacent to X (the zone figures of the congruent small
    /// rocket at the X apex); C_{n+3} = Γ_X(C_n). Periods are measured in
    /// middle-rocket returns (T_ср) by exact simulation.
    pub fn period_growth_witness(&self, n_max: usize) -> Result<Vec<WitnessComponent>, DodecagonError> {
        let gx = self.gamma_x();
        let asr = self.domain(RocketDomain::MiddleRocket);
        // seeds on the X axis at cross-coordinates λ·tan(60°,45°,30°)
        let t = Quad::with_sqrt(3, 1, -1, 1, 3); // 3 − √3
        let seeds_s = [
            &self.lambda * &Quad::sqrt_coeff(1, 1, 3), // λ·√3: the dodecagon C₀
            self.lambda.clone(),                       // λ: the octagon C₁
            &self.lambda * &Quad::sqrt_coeff(1, 3, 3), // λ/√3: the hexagon C₂
        ];
        let mut comps: Vec<WitnessComponent> = Vec::new();
        for (i, s) in seeds_s.iter().enumerate() {
            let seed = self.sector.point_at(&t, s);
            let (region, _, _) = self
                .sector
                .fold_component(&seed, 4096)
                .ok_or_else(|| DodecagonError::Witness(format!("seed C{i} not periodic")))?;
            comps.push(WitnessComponent { region, tsr_period: 0, fold_period: 0 });
        }
        // expected decreasing sizes C₀ > C₁ > C₂
        if !(comps[0].region.area2() > comps[1].region.area2()
            && comps[1].region.area2() > comps[2].region.area2())
        {
            return Err(DodecagonError::Witness("C₀, C₁, C₂ must decrease in size".into()));
        }
        for n in 3..=n_max {
            let region = gx.apply_poly(&comps[n - 3].region);
            comps.push(WitnessComponent { region, tsr_period: 0, fold_period: 0 });
        }
        // measure periods by exact simulation from the barycenter
        for (i, c) in comps.iter_mut().enumerate() {
            let b = c.region.barycenter();
            let (fold_p, tsr_p) = self
                .tsr_period(&asr, &b, 4_000_000)
                .ok_or_else(|| DodecagonError::Witness(format!("C{i} period not found")))?;
            c.fold_period = fold_p;
            c.tsr_period = tsr_p;
        }
        for n in 0..comps.len().saturating_sub(3) {
            if comps[n + 3].tsr_period < 2 * comps[n].tsr_period {
                return Err(DodecagonError::Witness(format!(
                    "per(C{}) = {} < 2·per(C{}) = {}",
                    n + 3,
                    comps[n + 3].tsr_period,
                    n,
                    2 * comps[n].tsr_period
                )));
            }
        }
        Ok(comps)
    }

    /// Folded period of x together with the number of strict entries into
    /// `domain` along one cycle (the T_ср period when x ∈ domain).
    fn tsr_period(&self, domain: &StarDomain, x: &Point, budget: usize) -> Option<(usize, usize)> {
        let mut cur = x.clone();
        let mut entries = 0usize;
        for k in 1..=budget {
            cur = self.sector.fold_step(&cur).ok()?.point;
            if domain.contains_point_strict(&cur) {
                entries += 1;
            }
            if &cur == x {
                return Some((k, entries));
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct WitnessComponent {
    pub region: ConvexPolygon,
    /// period in middle-rocket returns
    pub tsr_period: usize,
    pub fold_period: usize,
}

/// Closed polygon loop compared up to starting vertex.
struct ReturnPieceOutline(Vec<Point>);

impl ReturnPieceOutline {
    fn same_loop(&self, other: &ReturnPieceOutline) -> bool {
        let a = &self.0;
        let b = &other.0;
        if a.len() != b.len() {
            return false;
        }
        let n = a.len();
        (0..n).any(|s| (0..n).all(|i| a[i] == b[(i + s) % n]))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyReport {
    pub samples: usize,
    pub excluded: usize,
    pub defects: usize,
    pub matched: bool,
    pub partition_match: bool,
}

/// (sides row, times row) ordered as the paper prints them: ascending
/// return time, ties by side count.
pub fn table_rows(part: &ReturnPartition) -> (Vec<usize>, Vec<usize>) {
    let mut pairs: Vec<(usize, usize)> = part
        .pieces
        .iter()
        .map(|p| (p.return_time, p.side_count))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    (pairs.iter().map(|p| p.1).collect(), pairs.iter().map(|p| p.0).collect())
}

fn check_regular_ngon(poly: &ConvexPolygon, n: usize, center: &Point) -> Result<(), String> {
    let v = poly.vertices();
    if v.len() != n {
        return Err(format!("expected {n}-gon, got {}", v.len()));
    }
    let r0 = (&v[0] - center).dot(&(&v[0] - center));
    for p in v {
        if (p - center).dot(&(p - center)) != r0 {
            return Err("not equidistant from center".into());
        }
    }
    let s0 = (&v[1] - &v[0]).dot(&(&v[1] - &v[0]));
    for i in 0..n {
        let d = &v[(i + 1) % n] - &v[i];
        if d.dot(&d) != s0 {
            return Err("not equilateral".into());
        }
    }
    Ok(())
}

fn check_equilateral_angles(poly: &ConvexPolygon, n: usize, degs: &[i32]) -> Result<(), String> {
    let v = poly.vertices();
    if v.len() != n {
        return Err(format!("expected {n}-gon, got {}", v.len()));
    }
    let s0 = (&v[1] - &v[0]).dot(&(&v[1] - &v[0]));
    for i in 0..n {
        let d = &v[(i + 1) % n] - &v[i];
        if d.dot(&d) != s0 {
            return Err("not equilateral".into());
        }
    }
    // interior angle at vertex i: s0·cosθ = dot(i→prev, i→next)
    for i in 0..n {
        let to_prev = &v[(i + n - 1) % n] - &v[i];
        let to_next = &v[(i + 1) % n] - &v[i];
        let dot = to_prev.dot(&to_next);
        let matches = degs.iter().any(|deg| {
            let (c, _) = crate::field::cos_sin_for_field(*deg, 3).expect("angle");
            dot == &c * &s0
        });
        if !matches {
            return Err("unexpected interior angle".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_validates() {
        let sys = build_rocket_system().unwrap();
        assert_eq!(sys.sector.zone_count(), 5);
        assert_eq!(sys.lambda.approx(3), "0.072");
        // rocket corners: apex + five unit-dodecagon vertices
        assert_eq!(sys.rocket.outline.len(), 6);
        // rocket area2 = 1 + 2√3
        assert_eq!(sys.rocket.area2(), Quad::with_sqrt(1, 1, 2, 1, 3));
    }

    #[test]
    fn figures_have_printed_shapes() {
        let sys = build_rocket_system().unwrap();
        let figs = sys.zone_invariant_figures().unwrap();
        assert_eq!(figs[0].vertices().len(), 12);
        assert_eq!(figs[1].vertices().len(), 6);
        assert_eq!(figs[2].vertices().len(), 8);
        assert_eq!(figs[3].vertices().len(), 12);
    }

    #[test]
    fn middle_rocket_table() {
        let sys = build_rocket_system().unwrap();
        let part = sys.rocket_return_table(RocketDomain::MiddleRocket).unwrap();
        let (sides, times) = printed_table(RocketDomain::MiddleRocket);
        assert_eq!(table_rows(&part), (sides.to_vec(), times.to_vec()));
    }

    #[test]
    fn zone0_table() {
        let sys = build_rocket_system().unwrap();
        let part = sys.rocket_return_table(RocketDomain::Zone0).unwrap();
        let (sides, times) = printed_table(RocketDomain::Zone0);
        assert_eq!(table_rows(&part), (sides.to_vec(), times.to_vec()));
    }
}
