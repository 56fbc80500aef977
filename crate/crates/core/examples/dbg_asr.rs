use billiards::dodecagon::{build_rocket_system, RocketDomain};
use billiards::structure::{return_partition, StarDomain};

fn main() {
    let sys = build_rocket_system().unwrap();
    let base = sys.domain(RocketDomain::MiddleRocket);
    let part = return_partition(&sys.sector, &base, 120);
    println!("pieces: {} unresolved {}", part.pieces.len(), part.unresolved.len());
    for pc in &part.pieces {
        println!(
            "  time {} sides {} word {:?} area2 {:.8}",
            pc.return_time, pc.side_count, pc.word, pc.area2().to_f64()
        );
        if pc.return_time == 1 {
            for q in pc.outline.iter() {
                println!("      ({:.5},{:.5})", q.x.to_f64(), q.y.to_f64());
            }
        }
    }
    let _ = StarDomain::convex;
}
