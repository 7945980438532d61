//! Runs the full pipeline for the four hand-crafted field orders
//! q = 11, 13, 17, 19 and certifies each result: build B_q, reduce by the
//! family's matched sets, amalgamate the pieces, then recompute order,
//! degrees and girth from scratch.

use cageforge::amalgam::amalgamate;
use cageforge::certify::{certify, Claim};
use cageforge::families::plan_for;
use cageforge::reductions::reduce;
use cageforge::semiplane::build_levi;

fn main() {
    for q in [11, 13, 17, 19] {
        let plan = plan_for(q, 0).expect("supported order");
        let levi = build_levi(q).expect("prime");
        let reduced = reduce(&levi, &plan.spec).expect("family spec fits");
        let amalgam = amalgamate(&reduced, &plan).expect("plan passes its checks");

        let claim = Claim::regular(amalgam.degree, 5, plan.expected_order());
        let cert = certify(&amalgam.graph, Some(claim));
        assert!(cert.all_pass());
        println!(
            "q={q:>2}: {}-regular, n={}, girth {}, Moore bound {}, excess {}",
            amalgam.degree,
            cert.order,
            cert.girth,
            cert.moore_bound.unwrap(),
            cert.excess.unwrap()
        );
    }

    // dropping block pairs trades degree for order; u = q−1 degenerates to
    // the H-pieces alone
    println!();
    for u in [1, 2, 10] {
        let q = 11;
        let plan = plan_for(q, u).expect("u < q");
        let levi = build_levi(q).expect("prime");
        let reduced = reduce(&levi, &plan.spec).expect("family spec fits");
        let amalgam = amalgamate(&reduced, &plan).expect("plan passes its checks");
        let cert = certify(&amalgam.graph, Some(Claim::regular(amalgam.degree, 5, plan.expected_order())));
        assert!(cert.all_pass());
        println!(
            "q={q} u={u:>2}: {}-regular, n={}, girth {}",
            amalgam.degree, cert.order, cert.girth
        );
    }
}
