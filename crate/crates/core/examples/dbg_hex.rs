use billiards::billiard::{BilliardTable, Outcome, TableSpec};
use billiards::field::Quad;
use billiards::geom::Point;
use billiards::structure::component_of;

fn main() {
    let table = BilliardTable::make(TableSpec::HexagonLattice);
    // probe candidate centers: (1,1) + 6*level*dir and nearby structures
    let probes: Vec<(i64, i64)> = vec![
        (7, 7), (7, 1), (1, 7),          // level-1 centers (period 9 odd)
        (13, 13), (13, 7), (7, 13),      // level-2 candidates
        (19, 19), (19, 13), (13, 19),    // level-3?
        (7, 4), (4, 7), (10, 7), (7, 10), (10, 10), (4, 4),
        (9, 9), (11, 11), (5, 5), (3, 3), (15, 15), (17, 17),
    ];
    for (x, y) in probes {
        let p = Point::from_ints(x, y);
        let r = match table.orbit(&p, 100000) {
            Ok(r) => r,
            Err(_) => { println!("({x},{y}): inside/error"); continue; }
        };
        match r.outcome {
            Outcome::Periodic(q) => {
                match component_of(&table, &p, 100000) {
                    Ok(c) => {
                        // set-orbit length = period / rotation order; get both
                        println!(
                            "({x},{y}): center-period {q}, comp period {}, verts {}, special {}",
                            c.period, c.region.vertices().len(), c.center_special
                        );
                    }
                    Err(e) => println!("({x},{y}): period {q} comp err {e:?}"),
                }
            }
            other => println!("({x},{y}): {other:?}"),
        }
    }
    // sample interior points of suspected level-2 hexagons
    for (x, y) in [(25, 27), (27, 25), (25, 25)] {
        let p = Point::new(Quad::ratio(x, 2), Quad::ratio(y, 2));
        if let Ok(r) = table.orbit(&p, 100000) {
            println!("({x}/2,{y}/2): {:?}", r.outcome);
        }
    }
}
