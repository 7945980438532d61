//! Ready-made piece sets for every supported prime q, and the dispatch
//! that turns them into amalgamation plans.
//!
//! Coverage: hand-crafted pieces for q = 11, 13, 17, 19 (transcribed edge
//! lists, locked by checksum tests), and two generated families covering
//! every prime q ≥ 23 — q = 6n+1 with n ≥ 5 and q = 6n+5 with n ≥ 3. The
//! generated H-pieces are cubic circulant-like graphs on 1..=q−1 assembled
//! from three edge groups; the G-pieces are vertex splits of them with new
//! vertex 0. Each generator also knows its weight sets in closed form and
//! asserts that the generated edges reproduce them, so a transcription slip
//! in either representation cannot survive construction.
//!
//! q ∈ {2, 3, 5, 7} have no known girth-5 amalgam of this shape and are
//! rejected, as are composite orders (prime powers included: the semiplane
//! machinery here is prime-field only).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::amalgam::{
    check_plan, vertex_split, AmalgamPlan, LabeledGraph, Piece, PieceRole, WeightSet,
};
use crate::reductions::ReductionSpec;
use crate::semiplane::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("q = {q} has no girth-5 amalgam here; supported orders are 11, 13, 17, 19 and every prime >= 23")]
    NoConstruction { q: u32 },
    #[error("q = {q} = {p}^{e} is a prime power, not a prime; only prime fields are implemented")]
    PrimePower { q: u32, p: u32, e: u32 },
    #[error("q = {q} is composite; only prime orders are supported")]
    Composite { q: u32 },
    #[error("u = {u} out of range for q = {q}; at most q−1 block pairs can be removed")]
    BlocksOutOfRange { u: u32, q: u32 },
    #[error("generated plan failed its own validation:\n{report}")]
    PlanCheck { report: crate::amalgam::PlanReport },
    #[error(transparent)]
    Amalgam(#[from] crate::amalgam::AmalgamError),
}

/// Which construction covers a given prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    Small11,
    Small13,
    Small17,
    Small19,
    /// q = 6n+1, n ≥ 5.
    General6n1 { n: u32 },
    /// q = 6n+5, n ≥ 3.
    General6n5 { n: u32 },
}

impl FamilyId {
    /// Classifies a prime order, rejecting everything without a
    /// construction.
    pub fn classify(q: u32) -> Result<FamilyId, FamilyError> {
        match q {
            11 => return Ok(FamilyId::Small11),
            13 => return Ok(FamilyId::Small13),
            17 => return Ok(FamilyId::Small17),
            19 => return Ok(FamilyId::Small19),
            2 | 3 | 5 | 7 => return Err(FamilyError::NoConstruction { q }),
            _ => {}
        }
        if !is_prime(q) {
            if let Some((p, e)) = prime_power(q) {
                return Err(FamilyError::PrimePower { q, p, e });
            }
            return Err(FamilyError::Composite { q });
        }
        // every prime >= 23 is 6n+1 (n >= 4, and 25 is not prime so n >= 5)
        // or 6n+5 (n >= 3)
        match q % 6 {
            1 => Ok(FamilyId::General6n1 { n: q / 6 }),
            5 => Ok(FamilyId::General6n5 { n: (q - 5) / 6 }),
            _ => unreachable!("primes above 3 are ±1 mod 6"),
        }
    }

    pub fn q(&self) -> u32 {
        match *self {
            FamilyId::Small11 => 11,
            FamilyId::Small13 => 13,
            FamilyId::Small17 => 17,
            FamilyId::Small19 => 19,
            FamilyId::General6n1 { n } => 6 * n + 1,
            FamilyId::General6n5 { n } => 6 * n + 5,
        }
    }

    /// The piece degree k; the amalgam is (q+k−u)-regular.
    pub fn piece_degree(&self) -> u32 {
        match self {
            FamilyId::Small11 => 2,
            _ => 3,
        }
    }

    /// S and T of the family's reduction.
    pub fn matched_sets(&self) -> (BTreeSet<u32>, BTreeSet<u32>) {
        match self {
            FamilyId::Small11 => ([0, 1, 2, 4, 6, 8].into(), BTreeSet::new()),
            FamilyId::Small17 => ([7, 10, 12].into(), [7, 10, 12].into()),
            _ => ([0].into(), [0].into()),
        }
    }

    /// Order of the u = 0 amalgam: 2q² − |S| − |T|.
    pub fn base_order(&self) -> usize {
        let q = self.q() as usize;
        let (s, t) = self.matched_sets();
        2 * q * q - s.len() - t.len()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Small11 => write!(f, "q=11 special"),
            FamilyId::Small13 => write!(f, "q=13 special"),
            FamilyId::Small17 => write!(f, "q=17 special"),
            FamilyId::Small19 => write!(f, "q=19 special"),
            FamilyId::General6n1 { n } => write!(f, "q=6n+1 (n={n})"),
            FamilyId::General6n5 { n } => write!(f, "q=6n+5 (n={n})"),
        }
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
        p += 1;
    }
    None
}

/// The four pieces of a family together with its reduction data.
#[derive(Debug, Clone)]
pub struct FamilyPieces {
    pub family: FamilyId,
    pub q: u32,
    pub k: u32,
    pub s: BTreeSet<u32>,
    pub t: BTreeSet<u32>,
    pub h1: Piece,
    pub h2: Piece,
    pub g1: Piece,
    pub g2: Piece,
}

impl FamilyPieces {
    pub fn point_weights(&self) -> WeightSet {
        WeightSet::of(&self.h1.graph).union(&WeightSet::of(&self.g1.graph))
    }

    pub fn line_weights(&self) -> WeightSet {
        WeightSet::of(&self.h2.graph).union(&WeightSet::of(&self.g2.graph))
    }
}

/// Pieces for any supported prime.
pub fn pieces_for(q: u32) -> Result<FamilyPieces, FamilyError> {
    match FamilyId::classify(q)? {
        FamilyId::General6n1 { n } => pieces_6n1(n),
        FamilyId::General6n5 { n } => pieces_6n5(n),
        _ => pieces_small(q),
    }
}

/// Plan for q with u removed block pairs; the generated plan is
/// re-validated through `check_plan` before it is returned.
pub fn plan_for(q: u32, u: u32) -> Result<AmalgamPlan, FamilyError> {
    let pieces = pieces_for(q)?;
    if u >= q {
        return Err(FamilyError::BlocksOutOfRange { u, q });
    }
    let plan = AmalgamPlan {
        q,
        spec: ReductionSpec { s: pieces.s.clone(), t: pieces.t.clone(), u },
        k: pieces.k,
        h1: pieces.h1,
        h2: pieces.h2,
        g1: pieces.g1,
        g2: pieces.g2,
    };
    let report = check_plan(&plan);
    if !report.passed() {
        return Err(FamilyError::PlanCheck { report });
    }
    Ok(plan)
}

// ---------------------------------------------------------------------------
// generated family q = 6n+1, n >= 5
// ---------------------------------------------------------------------------

/// Point-side weights of the 6n+1 family in closed form.
pub fn predicted_point_weights_6n1(n: u32) -> BTreeSet<u32> {
    if n % 2 == 1 {
        [1, 2, (3 * n).div_ceil(2), 3 * n - 2, 3 * n - 1, 3 * n].into()
    } else {
        [1, 2, 3 * n / 2, (3 * n + 2) / 2, 3 * n - 2, 3 * n - 1, 3 * n].into()
    }
}

/// Line-side weights of the 6n+1 family. The n = 5 case has its own split
/// pair and hence an extra weight class 5.
pub fn predicted_line_weights_6n1(n: u32) -> BTreeSet<u32> {
    if n == 5 {
        [3, 4, 5, 7, 9, 11, 12].into()
    } else {
        [3, 4, 3 * n - 7, 3 * n - 6, 3 * n - 4, 3 * n - 3].into()
    }
}

/// Cubic pieces for prime q = 6n+1, n ≥ 5, on the split Z_q − {0} =
/// W1 ∪ W2 with W1 = 1..=3n, W2 = 3n+1..=6n.
///
/// H1 = short-step circulant edges on W1 and W2 plus the shift-3n perfect
/// matching between them; H2 = the same shape with steps 3, 4 and shift
/// 3n+4 (wrapping inside each half). G1 splits H1 at the edges (1, 3n) and
/// (⌊(3n+1)/2⌋, 3n + ⌊(3n+1)/2⌋); G2 splits H2 at (3, 3n+7) and (4, 3n+8)
/// — except for n = 5, where those two edges are too close and (3, 22),
/// (5, 24) are used instead.
pub fn pieces_6n1(n: u32) -> Result<FamilyPieces, FamilyError> {
    let q = 6 * n + 1;
    if n < 5 || !is_prime(q) {
        return Err(FamilyError::NoConstruction { q });
    }
    let mut h1 = Vec::new();
    h1.extend((1..3 * n).map(|i| (i, i + 1)));
    h1.push((3 * n, 1));
    h1.extend((3 * n + 1..6 * n - 1).map(|i| (i, i + 2)));
    h1.push((6 * n - 1, 3 * n + 1));
    h1.push((6 * n, 3 * n + 2));
    h1.extend((1..=3 * n).map(|i| (i, 3 * n + i)));

    let mut h2 = Vec::new();
    h2.extend((1..3 * n - 2).map(|i| (i, i + 3)));
    h2.extend([(3 * n - 2, 1), (3 * n - 1, 2), (3 * n, 3)]);
    h2.extend((3 * n + 1..6 * n - 3).map(|i| (i, i + 4)));
    h2.extend([
        (6 * n - 3, 3 * n + 1),
        (6 * n - 2, 3 * n + 2),
        (6 * n - 1, 3 * n + 3),
        (6 * n, 3 * n + 4),
    ]);
    h2.extend((1..3 * n - 3).map(|i| (i, 3 * n + 4 + i)));
    h2.extend([
        (3 * n - 3, 3 * n + 1),
        (3 * n - 2, 3 * n + 2),
        (3 * n - 1, 3 * n + 3),
        (3 * n, 3 * n + 4),
    ]);

    let h1 = LabeledGraph::new(q, 1..q, &h1)?;
    let h2 = LabeledGraph::new(q, 1..q, &h2)?;
    let half = (3 * n).div_ceil(2);
    let g1 = vertex_split(&h1, (1, 3 * n), (half, 3 * n + half), 0)?;
    let g2 = if n == 5 {
        vertex_split(&h2, (3, 22), (5, 24), 0)?
    } else {
        vertex_split(&h2, (3, 3 * n + 7), (4, 3 * n + 8), 0)?
    };

    let pieces = FamilyPieces {
        family: FamilyId::General6n1 { n },
        q,
        k: 3,
        s: [0].into(),
        t: [0].into(),
        h1: Piece::new(PieceRole::H1, h1),
        h2: Piece::new(PieceRole::H2, h2),
        g1: Piece::new(PieceRole::G1, g1),
        g2: Piece::new(PieceRole::G2, g2),
    };
    assert_eq!(
        pieces.point_weights().classes(),
        &predicted_point_weights_6n1(n),
        "6n+1 point weights drifted from the closed form at n={n}"
    );
    assert_eq!(
        pieces.line_weights().classes(),
        &predicted_line_weights_6n1(n),
        "6n+1 line weights drifted from the closed form at n={n}"
    );
    Ok(pieces)
}

// ---------------------------------------------------------------------------
// generated family q = 6n+5, n >= 3
// ---------------------------------------------------------------------------

/// Point-side weights of the 6n+5 family in closed form. n = 3 has its own
/// split pair.
pub fn predicted_point_weights_6n5(n: u32) -> BTreeSet<u32> {
    if n == 3 {
        [1, 2, 6, 9, 10, 11].into()
    } else if n % 2 == 1 {
        [1, 2, (3 * n).div_ceil(2), (3 * n + 5) / 2, 3 * n, 3 * n + 1, 3 * n + 2].into()
    } else {
        [1, 2, 3 * n / 2, (3 * n + 6) / 2, 3 * n, 3 * n + 1, 3 * n + 2].into()
    }
}

/// Line-side weights of the 6n+5 family.
pub fn predicted_line_weights_6n5(n: u32) -> BTreeSet<u32> {
    [3, 4, 3 * n - 5, 3 * n - 4, 3 * n - 2, 3 * n - 1].into()
}

/// Cubic pieces for prime q = 6n+5, n ≥ 3, on W1 = 1..=3n+2 and
/// W2 = 3n+3..=6n+4. Same construction pattern as the 6n+1 family with the
/// group boundaries shifted: H1 uses steps 1, 2 and the shift-(3n+2)
/// matching; H2 uses steps 3, 4 and shift 3n+6. G1 splits H1 at
/// (1, 3n+3) and (⌊(3n+1)/2⌋, 3n+2+⌊(3n+1)/2⌋) — for n = 3 that generic
/// pair collides (the endpoints share a neighbor), so (1, 12), (6, 17) is
/// used. G2 splits H2 at (3, 3n+9) and (4, 3n+10).
pub fn pieces_6n5(n: u32) -> Result<FamilyPieces, FamilyError> {
    let q = 6 * n + 5;
    if n < 3 || !is_prime(q) {
        return Err(FamilyError::NoConstruction { q });
    }
    let mut h1 = Vec::new();
    h1.extend((1..3 * n + 2).map(|i| (i, i + 1)));
    h1.push((3 * n + 2, 1));
    h1.extend((3 * n + 3..6 * n + 3).map(|i| (i, i + 2)));
    h1.push((6 * n + 3, 3 * n + 3));
    h1.push((6 * n + 4, 3 * n + 4));
    h1.extend((1..=3 * n + 2).map(|i| (i, 3 * n + i + 2)));

    let mut h2 = Vec::new();
    h2.extend((1..3 * n).map(|i| (i, i + 3)));
    h2.extend([(3 * n, 1), (3 * n + 1, 2), (3 * n + 2, 3)]);
    h2.extend((3 * n + 3..6 * n + 1).map(|i| (i, i + 4)));
    h2.extend([
        (6 * n + 1, 3 * n + 3),
        (6 * n + 2, 3 * n + 4),
        (6 * n + 3, 3 * n + 5),
        (6 * n + 4, 3 * n + 6),
    ]);
    h2.extend((1..3 * n - 1).map(|i| (i, 3 * n + i + 6)));
    h2.extend([
        (3 * n - 1, 3 * n + 3),
        (3 * n, 3 * n + 4),
        (3 * n + 1, 3 * n + 5),
        (3 * n + 2, 3 * n + 6),
    ]);

    let h1 = LabeledGraph::new(q, 1..q, &h1)?;
    let h2 = LabeledGraph::new(q, 1..q, &h2)?;
    let g1 = if n == 3 {
        vertex_split(&h1, (1, 12), (6, 17), 0)?
    } else {
        let half = (3 * n).div_ceil(2);
        vertex_split(&h1, (1, 3 * n + 3), (half, 3 * n + 2 + half), 0)?
    };
    let g2 = vertex_split(&h2, (3, 3 * n + 9), (4, 3 * n + 10), 0)?;

    let pieces = FamilyPieces {
        family: FamilyId::General6n5 { n },
        q,
        k: 3,
        s: [0].into(),
        t: [0].into(),
        h1: Piece::new(PieceRole::H1, h1),
        h2: Piece::new(PieceRole::H2, h2),
        g1: Piece::new(PieceRole::G1, g1),
        g2: Piece::new(PieceRole::G2, g2),
    };
    assert_eq!(
        pieces.point_weights().classes(),
        &predicted_point_weights_6n5(n),
        "6n+5 point weights drifted from the closed form at n={n}"
    );
    assert_eq!(
        pieces.line_weights().classes(),
        &predicted_line_weights_6n5(n),
        "6n+5 line weights drifted from the closed form at n={n}"
    );
    Ok(pieces)
}

// ---------------------------------------------------------------------------
// hand-crafted small cases
// ---------------------------------------------------------------------------

// q = 13: cubic H-pieces on Z_13 − {0} drawn as a 12-cycle plus six
// chords; G-pieces are vertex splits with new vertex 0.
const Q13_H1_CYCLE: [u32; 12] = [1, 4, 8, 12, 3, 7, 11, 2, 5, 6, 9, 10];
const Q13_H1_CHORDS: [(u32, u32); 6] = [(1, 5), (2, 12), (3, 6), (4, 7), (8, 9), (10, 11)];
const Q13_H2_CYCLE: [u32; 12] = [1, 8, 2, 9, 3, 10, 12, 4, 6, 11, 5, 7];
const Q13_H2_CHORDS: [(u32, u32); 6] = [(1, 6), (2, 4), (3, 11), (5, 12), (7, 9), (8, 10)];
const Q13_G1_SPLIT: [(u32, u32); 2] = [(1, 10), (3, 12)];
const Q13_G2_SPLIT: [(u32, u32); 2] = [(2, 8), (5, 11)];

// q = 19: same shape, 18-cycles plus nine chords.
const Q19_H1_CYCLE: [u32; 18] = [1, 2, 3, 12, 14, 16, 9, 7, 8, 18, 11, 13, 4, 5, 6, 15, 17, 10];
const Q19_H1_CHORDS: [(u32, u32); 9] =
    [(1, 8), (2, 11), (3, 4), (5, 14), (6, 9), (7, 17), (10, 12), (13, 15), (16, 18)];
const Q19_H2_CYCLE: [u32; 18] = [1, 5, 10, 4, 17, 13, 8, 12, 16, 11, 15, 9, 14, 18, 3, 7, 2, 6];
const Q19_H2_CHORDS: [(u32, u32); 9] =
    [(1, 15), (2, 13), (3, 17), (4, 9), (5, 16), (6, 12), (7, 11), (8, 14), (10, 18)];
const Q19_G1_SPLIT: [(u32, u32); 2] = [(1, 10), (9, 16)];
const Q19_G2_SPLIT: [(u32, u32); 2] = [(8, 13), (11, 15)];

// q = 11 departs from the pattern: k = 2, S has six elements and T is
// empty, H1 is a bare 5-cycle on the survivors of P_0 and H2 = G2.
const Q11_H1_CYCLE: [u32; 5] = [3, 5, 10, 7, 9];
const Q11_G1_CYCLE: [u32; 11] = [0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9];
const Q11_H2_CHORDS: [(u32, u32); 3] = [(0, 4), (2, 6), (1, 8)];

// q = 17: S = T = {7, 10, 12}, cubic H-pieces on 14 labels; both G-pieces
// are bespoke (3,4)-graphs, not splits.
const Q17_H1_CYCLE: [u32; 14] = [0, 16, 15, 2, 1, 13, 14, 11, 8, 5, 4, 9, 6, 3];
const Q17_H1_CHORDS: [(u32, u32); 7] =
    [(0, 13), (15, 11), (1, 5), (14, 9), (8, 3), (4, 16), (6, 2)];
const Q17_H2_CYCLE: [u32; 14] = [0, 2, 4, 14, 3, 9, 16, 6, 13, 5, 11, 1, 8, 15];
const Q17_H2_CHORDS: [(u32, u32); 7] =
    [(0, 9), (4, 6), (3, 5), (16, 1), (13, 15), (11, 2), (8, 14)];
const Q17_G1_CYCLE: [u32; 17] = [0, 1, 15, 16, 13, 12, 11, 10, 9, 4, 3, 8, 5, 6, 7, 2, 14];
const Q17_G1_CHORDS: [(u32, u32); 10] = [
    (0, 12), (1, 6), (2, 16), (3, 15), (4, 7), (5, 10), (7, 11), (8, 12), (9, 13), (10, 14),
];
const Q17_G2_EDGES: [(u32, u32); 27] = [
    (0, 2), (1, 12), (2, 12), (12, 5), (5, 3), (3, 14), (14, 4), (4, 6), (6, 8),
    (8, 10), (10, 1), (1, 7), (7, 16), (16, 9), (9, 11), (11, 13), (13, 15), (15, 0),
    (0, 10), (2, 9), (3, 10), (4, 11), (5, 13), (6, 12), (7, 14), (7, 15), (8, 16),
];

fn cycle_plus_chords(
    q: u32,
    labels: impl IntoIterator<Item = u32>,
    cycle: &[u32],
    chords: &[(u32, u32)],
) -> Result<LabeledGraph, FamilyError> {
    let mut edges: Vec<(u32, u32)> =
        (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect();
    edges.extend_from_slice(chords);
    Ok(LabeledGraph::new(q, labels, &edges)?)
}

/// Hand-crafted pieces for q ∈ {11, 13, 17, 19}.
pub fn pieces_small(q: u32) -> Result<FamilyPieces, FamilyError> {
    let family = FamilyId::classify(q)?;
    let (s, t) = family.matched_sets();
    let (h1, h2, g1, g2) = match family {
        FamilyId::Small13 => {
            let h1 = cycle_plus_chords(13, 1..13, &Q13_H1_CYCLE, &Q13_H1_CHORDS)?;
            let h2 = cycle_plus_chords(13, 1..13, &Q13_H2_CYCLE, &Q13_H2_CHORDS)?;
            let g1 = vertex_split(&h1, Q13_G1_SPLIT[0], Q13_G1_SPLIT[1], 0)?;
            let g2 = vertex_split(&h2, Q13_G2_SPLIT[0], Q13_G2_SPLIT[1], 0)?;
            (h1, h2, g1, g2)
        }
        FamilyId::Small19 => {
            let h1 = cycle_plus_chords(19, 1..19, &Q19_H1_CYCLE, &Q19_H1_CHORDS)?;
            let h2 = cycle_plus_chords(19, 1..19, &Q19_H2_CYCLE, &Q19_H2_CHORDS)?;
            let g1 = vertex_split(&h1, Q19_G1_SPLIT[0], Q19_G1_SPLIT[1], 0)?;
            let g2 = vertex_split(&h2, Q19_G2_SPLIT[0], Q19_G2_SPLIT[1], 0)?;
            (h1, h2, g1, g2)
        }
        FamilyId::Small11 => {
            let survivors = (0..11).filter(|v| !s.contains(v));
            let h1 = cycle_plus_chords(11, survivors, &Q11_H1_CYCLE, &[])?;
            let g1 = cycle_plus_chords(11, 0..11, &Q11_G1_CYCLE, &[])?;
            let cycle: Vec<u32> = (0..11).collect();
            let h2 = cycle_plus_chords(11, 0..11, &cycle, &Q11_H2_CHORDS)?;
            (h1, h2.clone(), g1, h2)
        }
        FamilyId::Small17 => {
            let survivors: Vec<u32> = (0..17).filter(|v| !s.contains(v)).collect();
            let h1 = cycle_plus_chords(17, survivors.iter().copied(), &Q17_H1_CYCLE, &Q17_H1_CHORDS)?;
            let h2 = cycle_plus_chords(17, survivors.iter().copied(), &Q17_H2_CYCLE, &Q17_H2_CHORDS)?;
            let g1 = cycle_plus_chords(17, 0..17, &Q17_G1_CYCLE, &Q17_G1_CHORDS)?;
            let g2 = LabeledGraph::new(17, 0..17, &Q17_G2_EDGES)?;
            (h1, h2, g1, g2)
        }
        FamilyId::General6n1 { .. } | FamilyId::General6n5 { .. } => {
            return Err(FamilyError::NoConstruction { q })
        }
    };
    Ok(FamilyPieces {
        family,
        q,
        k: family.piece_degree(),
        s,
        t,
        h1: Piece::new(PieceRole::H1, h1),
        h2: Piece::new(PieceRole::H2, h2),
        g1: Piece::new(PieceRole::G1, g1),
        g2: Piece::new(PieceRole::G2, g2),
    })
}
