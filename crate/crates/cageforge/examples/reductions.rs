//! Trims the base incidence graph B_13: removes the matched sets S from
//! block P_0 and T ⊆ S from block L_0, then drops the u trailing block
//! pairs, and accounts for every lost degree.

use cageforge::reductions::{reduce, ReductionSpec};
use cageforge::semiplane::build_levi;

fn main() {
    let q = 13;
    let levi = build_levi(q).expect("13 is prime");

    // the matched reduction used by the q = 13 construction
    let spec = ReductionSpec::new([0], [0], 0);
    let reduced = reduce(&levi, &spec).expect("spec fits q = 13");
    println!(
        "q={q} S={{0}} T={{0}} u=0:  {} vertices ({} expected), degrees {:?}",
        reduced.graph.n(),
        spec.expected_order(q),
        reduced.graph.degree_profile()
    );
    // 24 vertices lost a neighbor (the removed point (0,0) had 13 line
    // neighbors, the removed line [0,0] had 13 point neighbors, and they
    // were incident to each other)
    assert_eq!(reduced.graph.degree_profile(), [(12, 24), (13, 312)].into());

    // dropping block pairs shrinks the graph by 2q vertices per step and
    // lowers both degree classes by one
    for u in [1, 2, 12] {
        let spec = ReductionSpec::new([0], [0], u);
        let reduced = reduce(&levi, &spec).expect("u < q");
        println!(
            "q={q} S={{0}} T={{0}} u={u}: {} vertices, degrees {:?}",
            reduced.graph.n(),
            reduced.graph.degree_profile()
        );
    }

    // vertex identities survive the compaction
    let spec = ReductionSpec::new([0], [0], 2);
    let reduced = reduce(&levi, &spec).expect("u < q");
    let id = reduced.id_of(levi.tag_of(levi.point_id(4, 9))).expect("block 4 survives u = 2");
    println!("point (4, 9) is vertex {id} after compaction, tag {}", reduced.tag_of(id));
}
