use billiards::billiard::{BilliardTable, TableSpec};
use billiards::structure::lattice_census;
use std::time::Instant;

fn main() {
    for spec in [TableSpec::HexagonLattice, TableSpec::TriangleLattice] {
        let table = BilliardTable::make(spec);
        for level in 1..=3 {
            let t0 = Instant::now();
            match lattice_census(&table, level) {
                Ok(rec) => {
                    println!("{spec:?} level {level} ({:.2?}):", t0.elapsed());
                    for o in &rec.orbits {
                        println!("   {:?} x{} period {}", o.shape, o.count, o.period);
                    }
                }
                Err(e) => println!("{spec:?} level {level}: ERROR {e:?}"),
            }
        }
    }
}
