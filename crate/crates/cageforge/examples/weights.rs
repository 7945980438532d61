//! Shows the edge-weight bookkeeping that makes the amalgam 5-cycle-free:
//! each piece edge {a, b} has weight min(±(a−b) mod q), and the point-side
//! pieces must not share a weight with the line-side pieces.

use cageforge::amalgam::{edge_weight, weight_set};
use cageforge::families::{
    pieces_for, predicted_line_weights_6n1, predicted_point_weights_6n1,
};

fn main() {
    // weights are circular distances in Z_q
    let q = 13;
    for (a, b) in [(1, 4), (10, 1), (0, 6), (0, 7)] {
        println!("q={q}: weight({a}, {b}) = {}", edge_weight(q, a, b).unwrap());
    }
    println!();

    // per-piece weight classes for the q = 13 construction
    let pieces = pieces_for(13).unwrap();
    for piece in [&pieces.h1, &pieces.h2, &pieces.g1, &pieces.g2] {
        println!("q=13 {}: weights {}", piece.role, weight_set(piece));
    }
    let point = pieces.point_weights();
    let line = pieces.line_weights();
    println!("point side {point} \u{2229} line side {line} = {:?}", point.intersection(&line));
    assert!(point.is_disjoint(&line));
    println!();

    // the infinite families have closed-form weight splits; the generated
    // pieces are checked against them at construction time
    for n in [5, 6, 10] {
        let q = 6 * n + 1;
        let pieces = match pieces_for(q) {
            Ok(pieces) => pieces,
            Err(_) => continue, // q not prime
        };
        assert_eq!(pieces.point_weights().classes(), &predicted_point_weights_6n1(n));
        assert_eq!(pieces.line_weights().classes(), &predicted_line_weights_6n1(n));
        println!(
            "q={q} (n={n}): point {} | line {}",
            pieces.point_weights(),
            pieces.line_weights()
        );
    }
}
