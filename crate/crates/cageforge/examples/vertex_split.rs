//! The girth-preserving vertex split: pick two independent edges whose
//! endpoints have pairwise disjoint neighborhoods, delete them, and join a
//! new vertex to all four endpoints. The G1 piece of the q = 23
//! construction is exactly such a split of its H1 piece — this example
//! performs it by hand, then shows a near-miss pair the operation rejects.

use cageforge::amalgam::{vertex_split, weight_set, AmalgamError, Piece, PieceRole};
use cageforge::families::pieces_for;

fn main() {
    let pieces = pieces_for(23).unwrap();
    let h1 = &pieces.h1.graph;
    println!(
        "q=23 H1: {} vertices, {} edges, girth {}",
        h1.order(),
        h1.size(),
        h1.girth()
    );

    // the split used by the construction: edges (1, 12) and (6, 17)
    let split = vertex_split(h1, (1, 12), (6, 17), 0).expect("eligible pair");
    println!(
        "split at (1,12), (6,17) with new label 0: {} vertices, girth {}",
        split.order(),
        split.girth()
    );
    assert_eq!(split, pieces.g1.graph, "this is precisely the G1 piece");
    assert_eq!(split.degree(0), 4);
    println!("new vertex 0 has degree 4, all others stay cubic");

    // the split changes the weight inventory: the two cut edges lose their
    // weights, the four new spokes contribute theirs
    println!("H1 weights: {}", weight_set(&pieces.h1));
    println!("G1 weights: {}", weight_set(&Piece::new(PieceRole::G1, split)));

    // a tempting alternative pair fails the eligibility check: endpoints
    // 12 and 16 share the neighbor 14, which would close a 4-cycle
    // through the new vertex
    match vertex_split(h1, (1, 12), (5, 16), 0) {
        Err(AmalgamError::SplitNeighborhoodsMeet { u, v, common }) => {
            println!("pair (1,12), (5,16) rejected: endpoints {u} and {v} share neighbor {common}");
        }
        other => panic!("expected a neighborhood clash, got {other:?}"),
    }

    // non-independent edges are rejected even earlier
    match vertex_split(h1, (1, 12), (1, 2), 0) {
        Err(err) => println!("pair (1,12), (1,2) rejected: {err}"),
        Ok(_) => panic!("shared endpoint must be rejected"),
    }
}
