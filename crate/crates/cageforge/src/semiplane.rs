//! The bipartite incidence graph B_q of an elliptic semiplane of prime
//! order q: points (i, y) and lines [m, b] with i, y, m, b in Z_q, where
//! (i, y) lies on [m, b] exactly when y ≡ m·i + b (mod q).
//!
//! B_q has 2q² vertices, is q-regular and bipartite, and for q ≥ 3 has
//! girth 6. Its vertices fall into point blocks P_0..P_{q-1} (fixed first
//! coordinate) and line blocks L_0..L_{q-1}; the edges between any P_i and
//! L_j form a perfect matching. Two of those matchings are "straight":
//! (0, y) meets exactly the lines [i, y], and [0, b] meets exactly the
//! points (j, b). Everything downstream leans on this block structure, so
//! `build_levi` re-derives and checks it on every construction.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Default exclusive upper bound on q. B_q has 2q² vertices and q³ edges;
/// 255 is the largest prime below this bound (~130k vertices, ~16.5M
/// edges). The CLI can raise it via the `CAGEFORGE_MAX_Q` environment
/// variable; library users call [`build_levi_capped`].
pub const DEFAULT_Q_CAP: u32 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemiplaneError {
    #[error("q = {q} is not prime")]
    NotPrime { q: u32 },
    #[error("q = {q} is too small: the construction needs q >= 3 (B_2 degenerates to an 8-cycle)")]
    TooSmall { q: u32 },
    #[error("q = {q} exceeds the size cap {cap} (B_q would have {} vertices); raise the cap explicitly to proceed", 2 * (*q as u64) * (*q as u64))]
    TooLarge { q: u32, cap: u32 },
    #[error("coordinate {value} out of range for Z_{q}")]
    CoordinateOutOfRange { value: u32, q: u32 },
    #[error("structural self-check failed: {detail}")]
    SelfCheck { detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Point,
    Line,
}

/// Semantic identity of a vertex: the point (first, second) or the line
/// [first, second]. Blocks are indexed by `first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexTag {
    pub kind: VertexKind,
    pub first: u32,
    pub second: u32,
}

impl VertexTag {
    pub fn point(i: u32, y: u32) -> VertexTag {
        VertexTag { kind: VertexKind::Point, first: i, second: y }
    }

    pub fn line(m: u32, b: u32) -> VertexTag {
        VertexTag { kind: VertexKind::Line, first: m, second: b }
    }
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VertexKind::Point => write!(f, "({}, {})", self.first, self.second),
            VertexKind::Line => write!(f, "[{}, {}]", self.first, self.second),
        }
    }
}

/// Deterministic trial-division primality test (intended range: q < 2^16).
pub fn is_prime(x: u32) -> bool {
    if x < 2 {
        return false;
    }
    if x.is_multiple_of(2) {
        return x == 2;
    }
    let mut d = 3u32;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Does point (i, y) lie on line [m, b] in the semiplane of order q?
/// All four coordinates must lie in Z_q.
pub fn incident(q: u32, point: (u32, u32), line: (u32, u32)) -> Result<bool, SemiplaneError> {
    for value in [point.0, point.1, line.0, line.1] {
        if value >= q {
            return Err(SemiplaneError::CoordinateOutOfRange { value, q });
        }
    }
    let (i, y) = point;
    let (m, b) = line;
    Ok((m as u64 * i as u64 + b as u64) % q as u64 == y as u64)
}

/// The incidence graph B_q together with the id scheme that makes blocks
/// addressable: point (i, y) is vertex i·q + y, line [m, b] is vertex
/// q² + m·q + b.
#[derive(Debug, Clone)]
pub struct LeviGraph {
    q: u32,
    graph: Graph,
}

impl LeviGraph {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn point_id(&self, i: u32, y: u32) -> u32 {
        i * self.q + y
    }

    pub fn line_id(&self, m: u32, b: u32) -> u32 {
        self.q * self.q + m * self.q + b
    }

    pub fn id_of(&self, tag: VertexTag) -> u32 {
        match tag.kind {
            VertexKind::Point => self.point_id(tag.first, tag.second),
            VertexKind::Line => self.line_id(tag.first, tag.second),
        }
    }

    pub fn tag_of(&self, id: u32) -> VertexTag {
        let q = self.q;
        if id < q * q {
            VertexTag::point(id / q, id % q)
        } else {
            let r = id - q * q;
            VertexTag::line(r / q, r % q)
        }
    }

    /// Vertex ids of block P_i (points) or L_i (lines); always q consecutive
    /// ids under the id scheme.
    pub fn block_ids(&self, kind: VertexKind, first: u32) -> std::ops::Range<u32> {
        let base = match kind {
            VertexKind::Point => first * self.q,
            VertexKind::Line => self.q * self.q + first * self.q,
        };
        base..base + self.q
    }

    /// Re-derives the block structure from the edge set and checks it:
    /// order 2q², q-regularity, bipartition exactly points vs. lines,
    /// a perfect matching between every P_i and L_j, and straightness of
    /// the two 0-blocks. Girth and the translation property are separate
    /// (`Graph::girth`, `translation_closed`) because they cost far more
    /// than O(edges).
    pub fn self_check(&self) -> Result<(), SemiplaneError> {
        let q = self.q as usize;
        let fail = |detail: String| Err(SemiplaneError::SelfCheck { detail });
        if self.graph.n() != 2 * q * q {
            return fail(format!("order {} != 2q² = {}", self.graph.n(), 2 * q * q));
        }
        if !self.graph.is_regular(q) {
            return fail(format!("degree profile {:?} is not {q}-regular", self.graph.degree_profile()));
        }
        match self.graph.bipartition() {
            None => return fail("graph is not bipartite".into()),
            Some((points, _lines)) => {
                if points != (0..(q * q) as u32).collect::<Vec<_>>() {
                    return fail("bipartition sides are not points vs. lines".into());
                }
            }
        }
        // Between P_i and L_j every point must meet exactly one line, and
        // dually; with q edges per pair that is a perfect matching.
        let mut seen = vec![0u32; self.q as usize];
        for i in 0..self.q {
            for id in self.block_ids(VertexKind::Point, i) {
                seen.fill(0);
                for &w in self.graph.neighbors(id) {
                    let tag = self.tag_of(w);
                    if tag.kind != VertexKind::Line {
                        return fail(format!("point {} adjacent to a point", self.tag_of(id)));
                    }
                    seen[tag.first as usize] += 1;
                }
                if let Some(j) = seen.iter().position(|&c| c != 1) {
                    return fail(format!(
                        "point {} meets {} lines of block L_{j}, expected exactly 1",
                        self.tag_of(id),
                        seen[j]
                    ));
                }
            }
        }
        // Straightness: (0, y) meets [i, y] for every i; [0, b] meets (j, b).
        for y in 0..self.q {
            for &w in self.graph.neighbors(self.point_id(0, y)) {
                if self.tag_of(w).second != y {
                    return fail(format!("P_0 not straight: (0, {y}) meets {}", self.tag_of(w)));
                }
            }
            for &w in self.graph.neighbors(self.line_id(0, y)) {
                if self.tag_of(w).second != y {
                    return fail(format!("L_0 not straight: [0, {y}] meets {}", self.tag_of(w)));
                }
            }
        }
        Ok(())
    }

    /// The translation property: (x, y) on [m, b] implies (x, y+a) on
    /// [m, b+a] for every shift a. Checked literally over all edges and
    /// shifts — O(q · edges), meant for test-sized q.
    pub fn translation_closed(&self) -> bool {
        self.graph.edges().all(|(p, l)| {
            let (pt, lt) = (self.tag_of(p), self.tag_of(l));
            (1..self.q).all(|a| {
                self.graph.has_edge(
                    self.point_id(pt.first, (pt.second + a) % self.q),
                    self.line_id(lt.first, (lt.second + a) % self.q),
                )
            })
        })
    }
}

/// Builds B_q for prime 3 ≤ q < [`DEFAULT_Q_CAP`] and runs the structural
/// self-check.
pub fn build_levi(q: u32) -> Result<LeviGraph, SemiplaneError> {
    build_levi_capped(q, DEFAULT_Q_CAP)
}

/// As [`build_levi`] with an explicit exclusive cap on q.
pub fn build_levi_capped(q: u32, cap: u32) -> Result<LeviGraph, SemiplaneError> {
    if q < 3 {
        return Err(SemiplaneError::TooSmall { q });
    }
    if !is_prime(q) {
        return Err(SemiplaneError::NotPrime { q });
    }
    if q >= cap {
        return Err(SemiplaneError::TooLarge { q, cap });
    }
    let n = 2 * (q as usize) * (q as usize);
    let mut edges = Vec::with_capacity((q as usize).pow(3));
    let qq = q * q;
    for m in 0..q {
        for b in 0..q {
            let line = qq + m * q + b;
            for i in 0..q {
                let y = (m as u64 * i as u64 + b as u64) % q as u64;
                edges.push((i * q + y as u32, line));
            }
        }
    }
    let graph = Graph::new(n, &edges).expect("incidence edges are in range and loop-free");
    let levi = LeviGraph { q, graph };
    levi.self_check()?;
    Ok(levi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..60).filter(|&x| is_prime(x)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(65521)); // largest prime below 2^16
        assert!(!is_prime(65535));
    }

    #[test]
    fn incidence_formula() {
        assert!(incident(5, (2, 4), (1, 2)).unwrap()); // 4 = 1·2 + 2
        assert!(!incident(5, (2, 3), (1, 2)).unwrap());
        assert!(incident(5, (0, 2), (4, 2)).unwrap()); // straight L-side
        assert_eq!(
            incident(5, (5, 0), (0, 0)),
            Err(SemiplaneError::CoordinateOutOfRange { value: 5, q: 5 })
        );
    }

    #[test]
    fn rejected_orders() {
        assert!(matches!(build_levi(2), Err(SemiplaneError::TooSmall { q: 2 })));
        assert!(matches!(build_levi(4), Err(SemiplaneError::NotPrime { q: 4 })));
        assert!(matches!(build_levi(9), Err(SemiplaneError::NotPrime { q: 9 })));
        assert!(matches!(build_levi(257), Err(SemiplaneError::TooLarge { q: 257, cap: 256 })));
        assert!(matches!(build_levi_capped(11, 10), Err(SemiplaneError::TooLarge { q: 11, cap: 10 })));
        assert!(build_levi_capped(11, 12).is_ok());
    }

    #[test]
    fn b3_exactly() {
        let levi = build_levi(3).unwrap();
        assert_eq!(levi.graph().n(), 18);
        assert_eq!(levi.graph().m(), 27);
        assert_eq!(levi.graph().girth(), Girth::Finite(6));
        assert!(levi.translation_closed());
    }

    #[test]
    fn id_scheme_round_trips() {
        let levi = build_levi(7).unwrap();
        for id in 0..levi.graph().n() as u32 {
            assert_eq!(levi.id_of(levi.tag_of(id)), id);
        }
        assert_eq!(levi.tag_of(0), VertexTag::point(0, 0));
        assert_eq!(levi.tag_of(49), VertexTag::line(0, 0));
        assert_eq!(levi.block_ids(VertexKind::Line, 2).collect::<Vec<_>>().len(), 7);
    }

    #[test]
    fn girth_six_and_translation_for_small_primes() {
        for q in [3u32, 5, 7] {
            let levi = build_levi(q).unwrap();
            assert_eq!(levi.graph().girth(), Girth::Finite(6), "B_{q}");
            assert!(levi.translation_closed(), "B_{q}");
        }
    }

    #[test]
    fn blocks_partition_the_vertices() {
        let levi = build_levi(5).unwrap();
        let mut all: Vec<u32> = Vec::new();
        for kind in [VertexKind::Point, VertexKind::Line] {
            for i in 0..5 {
                all.extend(levi.block_ids(kind, i));
            }
        }
        assert_eq!(all, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn tags_render_like_coordinates() {
        assert_eq!(VertexTag::point(2, 3).to_string(), "(2, 3)");
        assert_eq!(VertexTag::line(0, 4).to_string(), "[0, 4]");
    }
}
