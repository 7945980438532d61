//! Shrinking B_q before amalgamation: delete matched vertex sets from the
//! two straight blocks and, optionally, whole block pairs from the tail.
//!
//! Given T ⊆ S ⊆ Z_q and 0 ≤ u ≤ q−1, the reduction removes the points
//! (0, s) for s ∈ S, the lines [0, t] for t ∈ T, and the u block pairs
//! P_{q−u}..P_{q−1}, L_{q−u}..L_{q−1}. What survives has order
//! 2(q² − qu) − |S| − |T| and every degree is q−u or q−u−1, with the
//! deficient vertices exactly characterized (see
//! [`ReducedGraph::check_degrees`]). `reduce` recomputes all of this from
//! the edge set rather than trusting the formulas.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::semiplane::{LeviGraph, VertexKind, VertexTag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("T must be a subset of S; {value} is in T but not in S")]
    TNotInS { value: u32 },
    #[error("{which} contains {value}, which is outside Z_{q}")]
    ValueOutOfRange { which: char, value: u32, q: u32 },
    #[error("u = {u} out of range; at most q−1 = {} block pairs can be removed", q - 1)]
    BlocksOutOfRange { u: u32, q: u32 },
    #[error("degree characterization violated: {detail}")]
    DegreeCharacterization { detail: String },
}

/// What to remove: the matched sets S (points of P_0) and T (lines of L_0),
/// and the number u of trailing block pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSpec {
    pub s: BTreeSet<u32>,
    pub t: BTreeSet<u32>,
    pub u: u32,
}

impl ReductionSpec {
    pub fn new(
        s: impl IntoIterator<Item = u32>,
        t: impl IntoIterator<Item = u32>,
        u: u32,
    ) -> ReductionSpec {
        ReductionSpec { s: s.into_iter().collect(), t: t.into_iter().collect(), u }
    }

    /// The trivial reduction (remove nothing).
    pub fn identity() -> ReductionSpec {
        ReductionSpec::new([], [], 0)
    }

    pub fn validate(&self, q: u32) -> Result<(), ReductionError> {
        if let Some(&value) = self.s.iter().find(|&&v| v >= q) {
            return Err(ReductionError::ValueOutOfRange { which: 'S', value, q });
        }
        if let Some(&value) = self.t.iter().find(|&&v| v >= q) {
            return Err(ReductionError::ValueOutOfRange { which: 'T', value, q });
        }
        if let Some(&value) = self.t.difference(&self.s).next() {
            return Err(ReductionError::TNotInS { value });
        }
        if self.u >= q {
            return Err(ReductionError::BlocksOutOfRange { u: self.u, q });
        }
        Ok(())
    }

    pub fn expected_order(&self, q: u32) -> usize {
        2 * (q as usize) * (q as usize - self.u as usize) - self.s.len() - self.t.len()
    }
}

/// The trimmed graph with compacted vertex ids. Every new id keeps its
/// semantic tag, and `old_to_new` maps ids of the parent B_q.
#[derive(Debug, Clone)]
pub struct ReducedGraph {
    pub q: u32,
    pub spec: ReductionSpec,
    pub graph: Graph,
    tags: Vec<VertexTag>,
    old_to_new: Vec<Option<u32>>,
}

impl ReducedGraph {
    pub fn tag_of(&self, id: u32) -> VertexTag {
        self.tags[id as usize]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    /// New id of a surviving vertex of the parent graph.
    pub fn old_to_new(&self, old_id: u32) -> Option<u32> {
        self.old_to_new[old_id as usize]
    }

    /// Look up a vertex by tag. Compaction preserves the id-scheme order,
    /// so the tags vector is sorted and binary search applies.
    pub fn id_of(&self, tag: VertexTag) -> Option<u32> {
        self.tags.binary_search(&tag).ok().map(|i| i as u32)
    }

    /// Checks the exact deficiency characterization: all degrees are q−u or
    /// q−u−1, and the degree-(q−u−1) vertices are precisely
    ///
    /// * points (i, t) for surviving i ≠ 0 and t ∈ T,
    /// * lines [j, s] for surviving j ≠ 0 and s ∈ S,
    /// * lines [0, s] for s ∈ S − T.
    pub fn check_degrees(&self) -> Result<(), ReductionError> {
        let full = (self.q - self.spec.u) as usize;
        let spec = &self.spec;
        for (id, tag) in self.tags.iter().enumerate() {
            let expect_deficient = match tag.kind {
                VertexKind::Point => tag.first != 0 && spec.t.contains(&tag.second),
                VertexKind::Line => {
                    if tag.first != 0 {
                        spec.s.contains(&tag.second)
                    } else {
                        spec.s.contains(&tag.second) && !spec.t.contains(&tag.second)
                    }
                }
            };
            let expected = full - usize::from(expect_deficient);
            let actual = self.graph.degree(id as u32);
            if actual != expected {
                return Err(ReductionError::DegreeCharacterization {
                    detail: format!("vertex {tag} has degree {actual}, characterization says {expected}"),
                });
            }
        }
        Ok(())
    }
}

/// Applies a reduction to B_q. Validates the spec, rebuilds the graph with
/// compacted ids, and asserts the order formula and the degree
/// characterization on the result.
pub fn reduce(base: &LeviGraph, spec: &ReductionSpec) -> Result<ReducedGraph, ReductionError> {
    let q = base.q();
    spec.validate(q)?;
    let survives = |tag: VertexTag| -> bool {
        if tag.first >= q - spec.u {
            return false;
        }
        match tag.kind {
            VertexKind::Point => !(tag.first == 0 && spec.s.contains(&tag.second)),
            VertexKind::Line => !(tag.first == 0 && spec.t.contains(&tag.second)),
        }
    };
    let parent_n = base.graph().n() as u32;
    let mut old_to_new = vec![None; parent_n as usize];
    let mut tags = Vec::new();
    for old in 0..parent_n {
        let tag = base.tag_of(old);
        if survives(tag) {
            old_to_new[old as usize] = Some(tags.len() as u32);
            tags.push(tag);
        }
    }
    let edges: Vec<(u32, u32)> = base
        .graph()
        .edges()
        .filter_map(|(a, b)| Some((old_to_new[a as usize]?, old_to_new[b as usize]?)))
        .collect();
    let graph = Graph::new(tags.len(), &edges).expect("compacted ids are in range");
    let reduced = ReducedGraph { q, spec: spec.clone(), graph, tags, old_to_new };
    assert_eq!(
        reduced.graph.n(),
        spec.expected_order(q),
        "order formula violated for q={q}, spec={spec:?}"
    );
    reduced.check_degrees()?;
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiplane::build_levi;
    use std::collections::BTreeMap;

    #[test]
    fn spec_validation() {
        let bad = ReductionSpec::new([0], [0, 1], 0);
        assert_eq!(bad.validate(13), Err(ReductionError::TNotInS { value: 1 }));
        let out = ReductionSpec::new([13], [], 0);
        assert_eq!(out.validate(13), Err(ReductionError::ValueOutOfRange { which: 'S', value: 13, q: 13 }));
        let blocks = ReductionSpec::new([], [], 13);
        assert_eq!(blocks.validate(13), Err(ReductionError::BlocksOutOfRange { u: 13, q: 13 }));
        assert!(ReductionSpec::new([0], [0], 12).validate(13).is_ok());
    }

    #[test]
    fn identity_reduction_is_edge_identical() {
        let base = build_levi(5).unwrap();
        let reduced = reduce(&base, &ReductionSpec::identity()).unwrap();
        assert_eq!(reduced.graph.n(), base.graph().n());
        // compaction is the identity map here
        for old in 0..base.graph().n() as u32 {
            assert_eq!(reduced.old_to_new(old), Some(old));
        }
        let base_edges: Vec<_> = base.graph().edges().collect();
        let reduced_edges: Vec<_> = reduced.graph.edges().collect();
        assert_eq!(base_edges, reduced_edges);
    }

    #[test]
    fn q13_matched_pair_removal() {
        let base = build_levi(13).unwrap();
        let reduced = reduce(&base, &ReductionSpec::new([0], [0], 0)).unwrap();
        assert_eq!(reduced.graph.n(), 336);
        // 24 deficient vertices: points (i,0) and lines [j,0] for i,j = 1..12.
        assert_eq!(reduced.graph.degree_profile(), BTreeMap::from([(12, 24), (13, 312)]));
    }

    #[test]
    fn q13_keep_only_straight_blocks() {
        let base = build_levi(13).unwrap();
        let reduced = reduce(&base, &ReductionSpec::new([], [], 12)).unwrap();
        assert_eq!(reduced.graph.n(), 26);
        assert!(reduced.graph.is_regular(1));
    }

    #[test]
    fn q11_asymmetric_sets() {
        let base = build_levi(11).unwrap();
        let spec = ReductionSpec::new([0, 1, 2, 4, 6, 8], [], 0);
        let reduced = reduce(&base, &spec).unwrap();
        assert_eq!(reduced.graph.n(), 236);
        // deficient: [j, s] for j=1..10, s in S (60) plus [0, s] for s in S (6)
        assert_eq!(reduced.graph.degree_profile(), BTreeMap::from([(10, 66), (11, 170)]));
    }

    #[test]
    fn tags_and_lookup_survive_compaction() {
        let base = build_levi(7).unwrap();
        let spec = ReductionSpec::new([1, 3], [3], 2);
        let reduced = reduce(&base, &spec).unwrap();
        assert_eq!(reduced.graph.n(), spec.expected_order(7));
        for id in 0..reduced.graph.n() as u32 {
            let tag = reduced.tag_of(id);
            assert_eq!(reduced.id_of(tag), Some(id));
            assert!(tag.first < 5);
        }
        assert_eq!(reduced.id_of(VertexTag::point(0, 1)), None);
        assert_eq!(reduced.id_of(VertexTag::line(0, 3)), None);
        assert_eq!(reduced.id_of(VertexTag::line(5, 0)), None);
        // surviving straight-block vertices keep tag order
        assert_eq!(reduced.tag_of(0), VertexTag::point(0, 0));
        assert_eq!(reduced.tag_of(1), VertexTag::point(0, 2));
    }

    #[test]
    fn order_formula_across_specs() {
        let base = build_levi(7).unwrap();
        for u in 0..7 {
            for s_size in 0..4u32 {
                let s: Vec<u32> = (0..s_size).collect();
                let t: Vec<u32> = (0..s_size / 2).collect();
                let spec = ReductionSpec::new(s, t, u);
                let reduced = reduce(&base, &spec).unwrap();
                assert_eq!(reduced.graph.n(), spec.expected_order(7));
            }
        }
    }
}
