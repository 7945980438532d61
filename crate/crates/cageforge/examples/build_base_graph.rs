//! Builds the incidence graph B_q of the elliptic semiplane of prime order
//! q and checks its structural invariants: 2q² vertices, q-regularity,
//! bipartiteness, girth 6, and closure under coordinate translation.

use cageforge::semiplane::{build_levi, VertexKind};

fn main() {
    let q = 13;
    let levi = build_levi(q).expect("13 is prime");
    let graph = levi.graph();

    println!("B_{q}: {} vertices, {} edges", graph.n(), graph.m());
    assert_eq!(graph.n(), 2 * (q * q) as usize);
    assert_eq!(graph.m(), (q * q * q) as usize);
    assert!(graph.is_regular(q as usize));
    println!("regular of degree {q}: yes");

    let (left, right) = graph.bipartition().expect("incidence graphs are bipartite");
    println!("bipartite halves: {} points / {} lines", left.len(), right.len());

    println!("girth: {}", graph.girth());

    // points (i, y) and lines [m, b] form q blocks of q vertices each
    let p0 = levi.block_ids(VertexKind::Point, 0);
    let l3 = levi.block_ids(VertexKind::Line, 3);
    println!("block P_0 ids: {p0:?}, block L_3 ids: {l3:?}");

    // incidence is y ≡ m·i + b (mod q); spot-check one flag
    let point = levi.point_id(2, 7);
    let line = levi.line_id(5, 10); // 5·2 + 10 = 20 ≡ 7 (mod 13)
    assert!(graph.has_edge(point, line));
    println!(
        "incidence check: {} on {} \u{2713}",
        levi.tag_of(point),
        levi.tag_of(line)
    );

    // the whole edge set is invariant under (i, y) ↦ (i, y+c), [m, b] ↦ [m, b+c]
    assert!(levi.translation_closed());
    println!("translation-closed: yes");
}
