use billiards::billiard::{BilliardTable, TableSpec, Tangency};
use billiards::geom::{Isometry, Point};
use billiards::structure::component_of;

fn main() {
    let table = BilliardTable::make(TableSpec::HexagonLattice);
    let p = Point::from_ints(5, 5);
    let c = component_of(&table, &p, 1000).unwrap();
    println!("component period {} verts {}", c.period, c.region.vertices().len());
    let mut region = c.region.clone();
    let mut pt = region.barycenter();
    for step in 0..13 {
        let b = region.barycenter();
        println!(
            "  step {step}: barycenter ({}, {}), first vertex ({}, {})",
            b.x, b.y,
            region.vertices()[0].x, region.vertices()[0].y
        );
        let v = match table.tangent_vertex(&pt).unwrap() {
            Tangency::Vertex(v) => v,
            _ => break,
        };
        let refl = Isometry::point_reflection(table.vertex(v));
        region = refl.apply_poly(&region);
        pt = refl.apply(&pt);
    }
}
