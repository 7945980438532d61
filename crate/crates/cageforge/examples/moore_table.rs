//! Tabulates, for every supported field order up to a bound, the order of
//! the constructed (q+k)-regular girth-5 graph next to the Moore bound
//! n(k', 5) = k'² + 1 — the smallest conceivable order for that degree.

use cageforge::certify::moore_bound;
use cageforge::families::FamilyId;

fn main() {
    println!("{:>4} {:>6} {:>7} {:>7} {:>7}  family", "q", "degree", "order", "moore", "excess");
    for q in 3..=61 {
        let Ok(family) = FamilyId::classify(q) else { continue };
        let degree = q + family.piece_degree();
        let order = family.base_order();
        let bound = moore_bound(degree, 5).unwrap();
        println!(
            "{q:>4} {degree:>6} {order:>7} {bound:>7} {:>7}  {family}",
            order as i64 - bound as i64
        );
    }

    // the Moore bound itself, for context
    println!();
    for (degree, girth) in [(3, 5), (7, 5), (57, 5), (3, 6), (7, 6)] {
        println!("moore_bound({degree}, {girth}) = {}", moore_bound(degree, girth).unwrap());
    }
}
