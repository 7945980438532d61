//! Gluing piece graphs into the surviving blocks of a reduced B_q.
//!
//! A piece is a small graph on labels drawn from Z_q. Four of them make a
//! plan: H1 goes inside the straight point block P_0, H2 inside the straight
//! line block L_0, and copies of G1 / G2 inside every other surviving point
//! / line block. Each piece edge {a, b} has a weight — the circular distance
//! min(±(b−a) mod q) — and as long as the point-side weights never meet the
//! line-side weights, no 3- or 4-cycle can close through the base graph, so
//! the amalgam keeps girth ≥ 5 while the degree rises from q−u to q+k−u.
//!
//! [`check_plan`] validates every hypothesis of that argument and reports
//! findings instead of failing fast; [`amalgamate`] refuses to run on a plan
//! that does not pass. [`vertex_split`] is the girth-preserving operation
//! the ready-made families use to derive G-pieces from H-pieces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Girth, Graph};
use crate::reductions::{ReducedGraph, ReductionSpec};
use crate::semiplane::{VertexKind, VertexTag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AmalgamError {
    #[error("weight of ({a}, {a}) is undefined: endpoints must differ")]
    WeightOfLoop { a: u32 },
    #[error("label {label} is outside Z_{q}")]
    LabelOutOfRange { label: u32, q: u32 },
    #[error("edge ({a}, {b}) uses a label that is not a vertex of the graph")]
    EdgeOffLabel { a: u32, b: u32 },
    #[error("split edge ({a}, {b}) is not present")]
    SplitEdgeMissing { a: u32, b: u32 },
    #[error("split edges share endpoint {v}; they must be independent")]
    SplitEdgesShareEndpoint { v: u32 },
    #[error("split endpoints {u} and {v} have common neighbor {common}; a 4-cycle would appear")]
    SplitNeighborhoodsMeet { u: u32, v: u32, common: u32 },
    #[error("split label {label} is already a vertex")]
    SplitLabelExists { label: u32 },
    #[error("graph has girth {girth}, below the split precondition of 5")]
    SplitGirthTooSmall { girth: usize },
    #[error("plan does not match the reduced graph: {detail}")]
    PlanMismatch { detail: String },
    #[error("plan rejected:\n{report}")]
    PlanRejected { report: PlanReport },
    #[error("piece edge ({a}, {b}) of {role} has no landing vertices in block {block}")]
    MissingBlockVertex { role: PieceRole, a: u32, b: u32, block: u32 },
}

/// Which slot of a plan a piece fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceRole {
    H1,
    H2,
    G1,
    G2,
}

impl fmt::Display for PieceRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PieceRole::H1 => "H1",
            PieceRole::H2 => "H2",
            PieceRole::G1 => "G1",
            PieceRole::G2 => "G2",
        };
        write!(f, "{name}")
    }
}

/// A small graph whose vertices are labels in Z_q (not necessarily all of
/// Z_q, and not necessarily contiguous). Deterministic iteration order
/// throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    q: u32,
    adj: BTreeMap<u32, BTreeSet<u32>>,
}

impl LabeledGraph {
    pub fn new(
        q: u32,
        labels: impl IntoIterator<Item = u32>,
        edges: &[(u32, u32)],
    ) -> Result<LabeledGraph, AmalgamError> {
        let mut adj: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
        for label in labels {
            if label >= q {
                return Err(AmalgamError::LabelOutOfRange { label, q });
            }
            adj.entry(label).or_default();
        }
        for &(a, b) in edges {
            if a == b {
                return Err(AmalgamError::WeightOfLoop { a });
            }
            if !adj.contains_key(&a) || !adj.contains_key(&b) {
                return Err(AmalgamError::EdgeOffLabel { a, b });
            }
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        Ok(LabeledGraph { q, adj })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.adj.keys().copied()
    }

    pub fn label_set(&self) -> BTreeSet<u32> {
        self.adj.keys().copied().collect()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn neighbors(&self, label: u32) -> Option<&BTreeSet<u32>> {
        self.adj.get(&label)
    }

    pub fn degree(&self, label: u32) -> usize {
        self.adj.get(&label).map_or(0, |n| n.len())
    }

    /// Edges `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().flat_map(|(&a, nbrs)| {
            nbrs.iter().copied().filter(move |&b| a < b).map(move |b| (a, b))
        })
    }

    /// Labels of a given degree, ascending.
    pub fn labels_of_degree(&self, d: usize) -> Vec<u32> {
        self.adj.iter().filter(|(_, n)| n.len() == d).map(|(&l, _)| l).collect()
    }

    /// Dense-id copy plus the dense-to-label mapping, for algorithms that
    /// want contiguous ids.
    pub fn to_graph(&self) -> (Graph, Vec<u32>) {
        let labels: Vec<u32> = self.labels().collect();
        let index: BTreeMap<u32, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as u32)).collect();
        let edges: Vec<(u32, u32)> =
            self.edges().map(|(a, b)| (index[&a], index[&b])).collect();
        (Graph::new(labels.len(), &edges).expect("dense ids in range"), labels)
    }

    pub fn girth(&self) -> Girth {
        self.to_graph().0.girth()
    }
}

/// A role-tagged labeled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub role: PieceRole,
    pub graph: LabeledGraph,
}

impl Piece {
    pub fn new(role: PieceRole, graph: LabeledGraph) -> Piece {
        Piece { role, graph }
    }
}

/// Circular distance of two distinct labels in Z_q: the canonical weight
/// w = min((b−a) mod q, (a−b) mod q), so 1 ≤ w ≤ (q−1)/2 for odd q.
pub fn edge_weight(q: u32, a: u32, b: u32) -> Result<u32, AmalgamError> {
    if a == b {
        return Err(AmalgamError::WeightOfLoop { a });
    }
    for label in [a, b] {
        if label >= q {
            return Err(AmalgamError::LabelOutOfRange { label, q });
        }
    }
    let d = (b as i64 - a as i64).rem_euclid(q as i64) as u32;
    Ok(d.min(q - d))
}

/// The set of weights occurring on the edges of a labeled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    q: u32,
    classes: BTreeSet<u32>,
}

impl WeightSet {
    pub fn of(graph: &LabeledGraph) -> WeightSet {
        let classes = graph
            .edges()
            .map(|(a, b)| edge_weight(graph.q(), a, b).expect("graph edges have distinct in-range labels"))
            .collect();
        WeightSet { q: graph.q(), classes }
    }

    pub fn from_classes(q: u32, classes: impl IntoIterator<Item = u32>) -> WeightSet {
        WeightSet { q, classes: classes.into_iter().collect() }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn classes(&self) -> &BTreeSet<u32> {
        &self.classes
    }

    pub fn union(&self, other: &WeightSet) -> WeightSet {
        WeightSet { q: self.q, classes: self.classes.union(&other.classes).copied().collect() }
    }

    pub fn intersection(&self, other: &WeightSet) -> BTreeSet<u32> {
        self.classes.intersection(&other.classes).copied().collect()
    }

    pub fn is_disjoint(&self, other: &WeightSet) -> bool {
        self.classes.is_disjoint(&other.classes)
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// Convenience wrapper: the weight set of a piece.
pub fn weight_set(piece: &Piece) -> WeightSet {
    WeightSet::of(&piece.graph)
}

/// Removes two independent edges whose four endpoints have pairwise
/// disjoint neighborhoods, and joins a new vertex to all four endpoints.
/// On a graph of girth ≥ 5 the result again has girth ≥ 5: the new vertex
/// has no two neighbors at distance < 3 in the stripped graph.
pub fn vertex_split(
    g: &LabeledGraph,
    e1: (u32, u32),
    e2: (u32, u32),
    new_label: u32,
) -> Result<LabeledGraph, AmalgamError> {
    for (a, b) in [e1, e2] {
        if !g.has_edge(a, b) {
            return Err(AmalgamError::SplitEdgeMissing { a, b });
        }
    }
    let ends = [e1.0, e1.1, e2.0, e2.1];
    for (i, &x) in ends.iter().enumerate() {
        for &y in &ends[i + 1..] {
            if x == y {
                return Err(AmalgamError::SplitEdgesShareEndpoint { v: x });
            }
        }
    }
    for (i, &x) in ends.iter().enumerate() {
        for &y in &ends[i + 1..] {
            let (nx, ny) = (g.neighbors(x).unwrap(), g.neighbors(y).unwrap());
            if let Some(&common) = nx.intersection(ny).next() {
                return Err(AmalgamError::SplitNeighborhoodsMeet { u: x, v: y, common });
            }
        }
    }
    if g.neighbors(new_label).is_some() {
        return Err(AmalgamError::SplitLabelExists { label: new_label });
    }
    if new_label >= g.q() {
        return Err(AmalgamError::LabelOutOfRange { label: new_label, q: g.q() });
    }
    if let Girth::Finite(girth) = g.girth() {
        if girth < 5 {
            return Err(AmalgamError::SplitGirthTooSmall { girth });
        }
    }
    let mut labels: Vec<u32> = g.labels().collect();
    labels.push(new_label);
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .filter(|&(a, b)| (a, b) != norm(e1) && (a, b) != norm(e2))
        .collect();
    edges.extend(ends.iter().map(|&v| (new_label, v)));
    let result = LabeledGraph::new(g.q(), labels, &edges)?;
    assert!(
        result.girth().is_at_least(5),
        "vertex split broke girth 5; eligibility checks are wrong"
    );
    Ok(result)
}

fn norm((a, b): (u32, u32)) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// A complete amalgamation plan: the reduction plus the four pieces and
/// their common piece degree k.
#[derive(Debug, Clone)]
pub struct AmalgamPlan {
    pub q: u32,
    pub spec: ReductionSpec,
    pub k: u32,
    pub h1: Piece,
    pub h2: Piece,
    pub g1: Piece,
    pub g2: Piece,
}

impl AmalgamPlan {
    pub fn pieces(&self) -> [&Piece; 4] {
        [&self.h1, &self.h2, &self.g1, &self.g2]
    }

    /// Final degree q + k − u.
    pub fn expected_degree(&self) -> u32 {
        self.q + self.k - self.spec.u
    }

    /// Amalgamation adds no vertices, so the order is the reduced order.
    pub fn expected_order(&self) -> usize {
        self.spec.expected_order(self.q)
    }

    /// Point-side weights: H1 ∪ G1.
    pub fn point_weights(&self) -> WeightSet {
        WeightSet::of(&self.h1.graph).union(&WeightSet::of(&self.g1.graph))
    }

    /// Line-side weights: H2 ∪ G2.
    pub fn line_weights(&self) -> WeightSet {
        WeightSet::of(&self.h2.graph).union(&WeightSet::of(&self.g2.graph))
    }
}

/// One finding of [`check_plan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Structured diagnostics for a plan; collects every finding instead of
/// stopping at the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanReport {
    pub checks: Vec<PlanCheck>,
}

impl PlanReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PlanCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for PlanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.pass { "ok  " } else { "FAIL" };
            writeln!(f, "  [{status}] {}: {}", check.name, check.detail)?;
        }
        Ok(())
    }
}

/// Validates every hypothesis the girth argument needs. Never fails:
/// returns one finding per check so a bad plan can be diagnosed in full.
///
/// Checks: the reduction spec itself; label coverage (H1 on Z_q − S, H2 on
/// Z_q − T, G1/G2 on all of Z_q); degree contracts (H1 k-regular; H2
/// k-regular when |S| = |T|, otherwise degree k+1 exactly on S − T; G1
/// k-regular when T = ∅, otherwise degree k+1 exactly on T; G2 degree k+1
/// exactly on S); girth ≥ 5 for each piece; and disjointness of the point-
/// and line-side weight sets.
pub fn check_plan(plan: &AmalgamPlan) -> PlanReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(PlanCheck { name: name.to_string(), pass, detail });
    };
    let q = plan.q;
    let spec = &plan.spec;

    match spec.validate(q) {
        Ok(()) => push(
            "reduction-spec",
            true,
            format!("T ⊆ S ⊆ Z_{q}, |S|={}, |T|={}, u={}", spec.s.len(), spec.t.len(), spec.u),
        ),
        Err(e) => push("reduction-spec", false, e.to_string()),
    }

    let zq: BTreeSet<u32> = (0..q).collect();
    let expected_labels: [(&Piece, BTreeSet<u32>); 4] = [
        (&plan.h1, zq.difference(&spec.s).copied().collect()),
        (&plan.h2, zq.difference(&spec.t).copied().collect()),
        (&plan.g1, zq.clone()),
        (&plan.g2, zq.clone()),
    ];
    for (piece, expected) in &expected_labels {
        let actual = piece.graph.label_set();
        let name = format!("{}-labels", piece.role).to_lowercase();
        if actual == *expected {
            push(&name, true, format!("{} labels as required", actual.len()));
        } else {
            let missing: Vec<u32> = expected.difference(&actual).copied().collect();
            let extra: Vec<u32> = actual.difference(expected).copied().collect();
            push(&name, false, format!("missing {missing:?}, unexpected {extra:?}"));
        }
    }

    let k = plan.k as usize;
    let heavy_expected: [(&Piece, BTreeSet<u32>); 4] = [
        (&plan.h1, BTreeSet::new()),
        (&plan.h2, spec.s.difference(&spec.t).copied().collect()),
        (&plan.g1, spec.t.clone()),
        (&plan.g2, spec.s.clone()),
    ];
    for (piece, heavy) in &heavy_expected {
        let name = format!("{}-degrees", piece.role).to_lowercase();
        let actual_heavy: BTreeSet<u32> = piece.graph.labels_of_degree(k + 1).into_iter().collect();
        let all_in_range = piece.graph.labels().all(|l| {
            let d = piece.graph.degree(l);
            d == k || d == k + 1
        });
        if !all_in_range {
            push(&name, false, format!("degrees outside {{{k}, {}}}: profile {:?}", k + 1, profile(&piece.graph)));
        } else if actual_heavy != *heavy {
            push(
                &name,
                false,
                format!("degree-{} labels {actual_heavy:?}, required {heavy:?}", k + 1),
            );
        } else if heavy.is_empty() {
            push(&name, true, format!("{k}-regular"));
        } else {
            push(&name, true, format!("({k}, {})-regular, heavy exactly on {heavy:?}", k + 1));
        }
    }

    for piece in plan.pieces() {
        let name = format!("{}-girth", piece.role).to_lowercase();
        let girth = piece.graph.girth();
        push(&name, girth.is_at_least(5), format!("girth {girth}"));
    }

    let (pw, lw) = (plan.point_weights(), plan.line_weights());
    let overlap = pw.intersection(&lw);
    push(
        "weight-disjointness",
        overlap.is_empty(),
        if overlap.is_empty() {
            format!("P_w = {pw}, L_w = {lw}")
        } else {
            format!("P_w = {pw} and L_w = {lw} share {overlap:?}")
        },
    );

    PlanReport { checks }
}

fn profile(g: &LabeledGraph) -> BTreeMap<usize, usize> {
    let mut p = BTreeMap::new();
    for l in g.labels() {
        *p.entry(g.degree(l)).or_insert(0) += 1;
    }
    p
}

/// The finished construction. `girth_is_exactly_five` records whether a
/// five-cycle witness was detected syntactically (see [`sharp_five`]); when
/// false the construction still guarantees girth ≥ 5.
#[derive(Debug, Clone)]
pub struct Amalgam {
    pub q: u32,
    pub spec: ReductionSpec,
    pub graph: Graph,
    tags: Vec<VertexTag>,
    pub degree: u32,
    pub girth_is_exactly_five: bool,
}

impl Amalgam {
    pub fn tag_of(&self, id: u32) -> VertexTag {
        self.tags[id as usize]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }
}

/// Glues the plan's pieces into the reduced graph: H1 into P_0, H2 into
/// L_0, and a copy of G1 / G2 into every other surviving point / line
/// block (none when u = q−1, which degenerates to the H-only amalgam).
///
/// Runs [`check_plan`] first and rejects failing plans. Asserts the cheap
/// postconditions on the result — exact order, exact edge count (which
/// pins the block partition discipline) and (q+k−u)-regularity. The girth
/// postcondition is left to certification so that very large builds can
/// skip it deliberately.
pub fn amalgamate(reduced: &ReducedGraph, plan: &AmalgamPlan) -> Result<Amalgam, AmalgamError> {
    if reduced.q != plan.q || reduced.spec != plan.spec {
        return Err(AmalgamError::PlanMismatch {
            detail: format!(
                "reduced graph is q={} {:?}, plan is q={} {:?}",
                reduced.q, reduced.spec, plan.q, plan.spec
            ),
        });
    }
    let report = check_plan(plan);
    if !report.passed() {
        return Err(AmalgamError::PlanRejected { report });
    }

    let q = plan.q;
    let u = plan.spec.u;
    let mut edges: Vec<(u32, u32)> = reduced.graph.edges().collect();
    let base_size = edges.len();
    let mut add_block_edges = |piece: &Piece, kind: VertexKind, block: u32| -> Result<usize, AmalgamError> {
        let mut added = 0;
        for (a, b) in piece.graph.edges() {
            let find = |second: u32| {
                reduced.id_of(VertexTag { kind, first: block, second }).ok_or(
                    AmalgamError::MissingBlockVertex { role: piece.role, a, b, block },
                )
            };
            edges.push((find(a)?, find(b)?));
            added += 1;
        }
        Ok(added)
    };

    let mut added = 0;
    added += add_block_edges(&plan.h1, VertexKind::Point, 0)?;
    added += add_block_edges(&plan.h2, VertexKind::Line, 0)?;
    for block in 1..q - u {
        added += add_block_edges(&plan.g1, VertexKind::Point, block)?;
        added += add_block_edges(&plan.g2, VertexKind::Line, block)?;
    }

    let graph = Graph::new(reduced.graph.n(), &edges).expect("block lookups stay in range");
    assert_eq!(graph.n(), plan.expected_order(), "amalgam order formula violated");
    assert_eq!(
        graph.m(),
        base_size + added,
        "piece edges collided with base edges; block partition discipline violated"
    );
    let degree = plan.expected_degree();
    assert!(
        graph.is_regular(degree as usize),
        "amalgam degree profile {:?} is not {degree}-regular",
        graph.degree_profile()
    );

    Ok(Amalgam {
        q,
        spec: plan.spec.clone(),
        graph,
        tags: reduced.tags().to_vec(),
        degree,
        girth_is_exactly_five: sharp_five(plan),
    })
}

/// Sound syntactic detection of a 5-cycle in the amalgam.
///
/// Route one: an amalgamated piece of girth exactly 5 embeds its own
/// 5-cycle (G-pieces only participate when u ≤ q−2). Route two: an H1 edge
/// {i, i+t} of weight t yields the 5-cycle
/// (0,i)·(0,i+t)·[1,i]·(t,i+t)·[0,i+t] whenever block P_t survives, i.e.
/// u < q−t; dually an H2 edge {i, i+t} yields one through point (0,i)
/// whenever u < q−t and i survived P_0 (i ∉ S), or mirrored with u < t and
/// i+t ∉ S. Detection may miss exotic 5-cycles, so a `false` only means
/// "not proven equal to 5", never "greater than 5".
fn sharp_five(plan: &AmalgamPlan) -> bool {
    let q = plan.q;
    let u = plan.spec.u;
    let mut in_play: Vec<&Piece> = vec![&plan.h1, &plan.h2];
    if u <= q - 2 {
        in_play.push(&plan.g1);
        in_play.push(&plan.g2);
    }
    if in_play.iter().any(|p| p.graph.girth() == Girth::Finite(5)) {
        return true;
    }
    for (a, b) in plan.h1.graph.edges() {
        let t = edge_weight(q, a, b).expect("piece edge");
        if u < q - t {
            return true;
        }
    }
    for (a, b) in plan.h2.graph.edges() {
        let t = edge_weight(q, a, b).expect("piece edge");
        for (lo, hi) in [(a, b), (b, a)] {
            if (lo + t) % q == hi % q
                && ((u < q - t && !plan.spec.s.contains(&lo))
                    || (u < t && !plan.spec.s.contains(&hi)))
            {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(q: u32, labels: &[u32]) -> LabeledGraph {
        let edges: Vec<(u32, u32)> =
            (0..labels.len()).map(|i| (labels[i], labels[(i + 1) % labels.len()])).collect();
        LabeledGraph::new(q, labels.iter().copied(), &edges).unwrap()
    }

    #[test]
    fn weights_are_canonical() {
        assert_eq!(edge_weight(13, 1, 4).unwrap(), 3);
        assert_eq!(edge_weight(13, 10, 1).unwrap(), 4);
        assert_eq!(edge_weight(13, 1, 10).unwrap(), 4);
        assert_eq!(edge_weight(11, 1, 8).unwrap(), 4);
        assert_eq!(edge_weight(13, 5, 5), Err(AmalgamError::WeightOfLoop { a: 5 }));
        assert_eq!(edge_weight(13, 0, 13), Err(AmalgamError::LabelOutOfRange { label: 13, q: 13 }));
        // maximum weight for odd q is (q-1)/2
        assert_eq!(edge_weight(13, 0, 6).unwrap(), 6);
        assert_eq!(edge_weight(13, 0, 7).unwrap(), 6);
    }

    #[test]
    fn weight_sets_and_disjointness() {
        let a = WeightSet::from_classes(13, [1, 3, 4]);
        let b = WeightSet::from_classes(13, [2, 5, 6]);
        assert!(a.is_disjoint(&b));
        assert_eq!(a.union(&b).classes().len(), 6);
        assert_eq!(a.to_string(), "{1,3,4}");
        let c = WeightSet::from_classes(13, [4, 5]);
        assert_eq!(a.intersection(&c), BTreeSet::from([4]));
    }

    #[test]
    fn labeled_graph_basics() {
        let g = cycle_graph(11, &[0, 2, 4, 6, 8]);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(8, 0));
        assert_eq!(g.girth(), Girth::Finite(5));
        assert_eq!(
            LabeledGraph::new(5, [0, 1], &[(0, 2)]),
            Err(AmalgamError::EdgeOffLabel { a: 0, b: 2 })
        );
        assert!(matches!(
            LabeledGraph::new(5, [7], &[]),
            Err(AmalgamError::LabelOutOfRange { label: 7, q: 5 })
        ));
    }

    #[test]
    fn split_on_a_long_cycle() {
        // C9 on labels 1..=9 in Z_10; edges (1,2) and (5,6) sit three steps
        // apart on both arcs, so all four endpoint neighborhoods are
        // pairwise disjoint.
        let g = cycle_graph(10, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let split = vertex_split(&g, (1, 2), (5, 6), 0).unwrap();
        assert_eq!(split.order(), 10);
        assert_eq!(split.degree(0), 4);
        assert!(!split.has_edge(1, 2));
        assert!(split.has_edge(0, 1) && split.has_edge(0, 2));
        assert!(split.girth().is_at_least(5));
    }

    #[test]
    fn split_rejections() {
        let g = cycle_graph(10, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(
            vertex_split(&g, (1, 3), (5, 6), 0),
            Err(AmalgamError::SplitEdgeMissing { a: 1, b: 3 })
        );
        assert_eq!(
            vertex_split(&g, (1, 2), (2, 3), 0),
            Err(AmalgamError::SplitEdgesShareEndpoint { v: 2 })
        );
        // edges two steps apart: endpoints 3 and 5 share neighbor 4
        assert_eq!(
            vertex_split(&g, (2, 3), (5, 6), 0),
            Err(AmalgamError::SplitNeighborhoodsMeet { u: 3, v: 5, common: 4 })
        );
        assert_eq!(
            vertex_split(&g, (1, 2), (5, 6), 9),
            Err(AmalgamError::SplitLabelExists { label: 9 })
        );
        // a 4-cycle with a tail: the pair (4,5), (8,9) passes every
        // disjointness check but the graph's own girth is too small
        let tail: Vec<(u32, u32)> =
            vec![(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)];
        let small = LabeledGraph::new(11, 1..=9, &tail).unwrap();
        assert_eq!(
            vertex_split(&small, (4, 5), (8, 9), 0),
            Err(AmalgamError::SplitGirthTooSmall { girth: 4 })
        );
    }

    // A hand-sized end-to-end amalgam check lives in the families tests,
    // where real plans exist; here we exercise the failure paths.

    #[test]
    fn amalgamate_rejects_mismatched_plan() {
        use crate::reductions::{reduce, ReductionSpec};
        use crate::semiplane::build_levi;
        let base = build_levi(5).unwrap();
        let reduced = reduce(&base, &ReductionSpec::identity()).unwrap();
        let tiny = LabeledGraph::new(5, 0..5, &[]).unwrap();
        let plan = AmalgamPlan {
            q: 5,
            spec: ReductionSpec::new([0], [0], 0),
            k: 0,
            h1: Piece::new(PieceRole::H1, tiny.clone()),
            h2: Piece::new(PieceRole::H2, tiny.clone()),
            g1: Piece::new(PieceRole::G1, tiny.clone()),
            g2: Piece::new(PieceRole::G2, tiny),
        };
        assert!(matches!(
            amalgamate(&reduced, &plan),
            Err(AmalgamError::PlanMismatch { .. })
        ));
    }

    #[test]
    fn check_plan_reports_each_failure() {
        // Deliberately broken plan: H1 missing label coverage and weights
        // overlapping.
        let q = 13;
        let h = cycle_graph(q, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let g = cycle_graph(q, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let plan = AmalgamPlan {
            q,
            spec: ReductionSpec::new([0], [0], 0),
            k: 2,
            h1: Piece::new(PieceRole::H1, h.clone()),
            h2: Piece::new(PieceRole::H2, h),
            g1: Piece::new(PieceRole::G1, g.clone()),
            g2: Piece::new(PieceRole::G2, g),
        };
        let report = check_plan(&plan);
        assert!(!report.passed());
        let failing: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        // same weight class 1 on both sides
        assert!(failing.contains(&"weight-disjointness"));
        // G2 should have heavy labels S = {0}, but the 13-cycle is 2-regular
        assert!(failing.contains(&"g2-degrees"));
        // pieces are cycles of length > 4, so girth passes
        assert!(report.checks.iter().any(|c| c.name == "h1-girth" && c.pass));
        // report renders one line per check
        assert_eq!(format!("{report}").lines().count(), report.checks.len());
    }
}
