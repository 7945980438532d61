//! The two infinite families: for every prime q = 6n+1 (n ≥ 5) and
//! q = 6n+5 (n ≥ 3), matched deletion of S = T = {0} plus generated cubic
//! pieces yields a (q+3)-regular graph of girth 5 on 2q² − 2q − 2
//! vertices. This example builds and certifies the first few primes of
//! each shape.

use cageforge::amalgam::amalgamate;
use cageforge::certify::{certify, Claim};
use cageforge::families::{pieces_for, plan_for, FamilyError};
use cageforge::reductions::reduce;
use cageforge::semiplane::build_levi;

fn main() {
    for q in [23, 29, 31, 37] {
        let pieces = pieces_for(q).expect("prime of the right shape");
        println!(
            "q={q} ({}): piece degrees {}, point weights {}, line weights {}",
            pieces.family,
            pieces.k,
            pieces.point_weights(),
            pieces.line_weights()
        );

        let plan = plan_for(q, 0).unwrap();
        let levi = build_levi(q).unwrap();
        let reduced = reduce(&levi, &plan.spec).unwrap();
        let amalgam = amalgamate(&reduced, &plan).unwrap();
        let cert = certify(&amalgam.graph, Some(Claim::regular(q + 3, 5, plan.expected_order())));
        assert!(cert.all_pass());
        println!(
            "      \u{21b3} {}-regular, n={}, girth {}, excess {}",
            amalgam.degree,
            cert.order,
            cert.girth,
            cert.excess.unwrap()
        );
    }

    // orders outside both families are refused with a reason
    for q in [25, 35, 41_u32] {
        match pieces_for(q) {
            Err(FamilyError::PrimePower { q, p, e }) => {
                println!("q={q}: no construction ({p}^{e} is a prime power, not a prime)")
            }
            Err(err) => println!("q={q}: no construction ({err})"),
            Ok(pieces) => println!("q={q}: supported, {}", pieces.family),
        }
    }
}
