use billiards::dodecagon::{build_rocket_system, printed_table, table_rows, RocketDomain};
use std::time::Instant;

fn main() {
    let sys = build_rocket_system().unwrap();
    let which: Vec<RocketDomain> = std::env::args()
        .skip(1)
        .filter_map(|s| RocketDomain::parse(&s))
        .collect();
    let list = if which.is_empty() {
        vec![
            RocketDomain::SmallRocket,
            RocketDomain::MiddleRocket,
            RocketDomain::SmallMiddleRocket,
            RocketDomain::BigAirplane,
            RocketDomain::Zone0,
            RocketDomain::MiddleZone0,
        ]
    } else {
        which
    };
    for w in list {
        let t0 = Instant::now();
        match sys.rocket_return_table(w) {
            Ok(part) => {
                let (sides, times) = table_rows(&part);
                let (psides, ptimes) = printed_table(w);
                let ok = sides == psides && times == ptimes;
                println!(
                    "{:?}: {} pieces, match={} ({:.2?})",
                    w,
                    part.pieces.len(),
                    ok,
                    t0.elapsed()
                );
                if !ok {
                    println!("   got  sides {:?} times {:?}", sides, times);
                    println!("   want sides {:?} times {:?}", psides, ptimes);
                }
            }
            Err(e) => println!("{w:?}: ERROR {e:?} ({:.2?})", t0.elapsed()),
        }
    }
}
