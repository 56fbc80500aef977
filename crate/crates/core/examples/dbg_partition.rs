use billiards::billiard::{BilliardTable, FoldedSector, TableSpec};
use billiards::structure::{return_partition, StarDomain};

fn main() {
    let sys = FoldedSector::new(BilliardTable::make(TableSpec::Octagon), 8);
    let v = sys.zone_center(1).clone();
    let (comp, p, word) = sys.fold_component(&v, 16).unwrap();
    println!("component period {p} word {word:?} verts {}", comp.vertices().len());
    for vt in comp.vertices() {
        println!("   {:?}  ({:.4},{:.4})", vt, vt.x.to_f64(), vt.y.to_f64());
    }
    let base = StarDomain::convex(comp.clone());
    let part = return_partition(&sys, &base, 100);
    println!("pieces: {}", part.pieces.len());
    for pc in &part.pieces {
        println!(
            "  time {} sides {} word {:?} area2 {:.6} verts {:?}",
            pc.return_time,
            pc.side_count,
            pc.word,
            pc.area2().to_f64(),
            pc.outline.iter().iter().map(|q| (q.x.to_f64(), q.y.to_f64())).collect::<Vec<_>>()
        );
    }
}
