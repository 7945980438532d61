//! Plain undirected graphs and the cycle-structure queries everything else
//! is built on: exact girth, exhaustive short-cycle counts, degree profiles
//! and bipartiteness.
//!
//! The girth computation and the cycle enumeration are deliberately
//! independent algorithms (pruned BFS vs. depth-limited DFS) so that each can
//! serve as an oracle for the other in tests.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} in edge ({a}, {b}) is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, a: u32, b: u32, n: usize },
    #[error("self-loop ({v}, {v}) is not a valid edge")]
    SelfLoop { v: u32 },
}

/// Result of a girth computation. `Finite(l)` is the length of a shortest
/// cycle; forests get the distinct `Acyclic` value rather than a sentinel
/// number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when the graph has no cycle shorter than `l` (an acyclic graph
    /// satisfies every lower bound).
    pub fn is_at_least(self, l: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= l,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// An undirected simple graph on vertices `0..n`, stored as sorted adjacency
/// lists. Construction validates ranges, rejects self-loops and deduplicates
/// repeated edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, a, b, n });
                }
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut m = 0;
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        (a as usize) < self.n() && self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// All edges as `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            let a = a as u32;
            row.iter().copied().filter(move |&b| a < b).map(move |b| (a, b))
        })
    }

    /// Histogram degree -> number of vertices of that degree.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for row in &self.adj {
            *profile.entry(row.len()).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|row| row.len() == k)
    }

    /// Every degree lies in `{k1, k2}`. A k-regular graph counts as
    /// (k, k2)-biregular for any k2.
    pub fn is_biregular(&self, k1: usize, k2: usize) -> bool {
        self.adj.iter().all(|row| row.len() == k1 || row.len() == k2)
    }

    /// Exact girth via BFS from every vertex, pruned against the best cycle
    /// found so far and parallelized over source vertices. The result is the
    /// minimum over sources, hence independent of scheduling.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        if n == 0 || self.m == 0 {
            return Girth::Acyclic;
        }
        let best = AtomicUsize::new(usize::MAX);
        (0..n as u32).into_par_iter().for_each_init(
            || BfsScratch::new(n),
            |scratch, s| {
                if best.load(Ordering::Relaxed) > 3 {
                    self.girth_from(s, scratch, &best);
                }
            },
        );
        match best.load(Ordering::Relaxed) {
            usize::MAX => Girth::Acyclic,
            g => Girth::Finite(g),
        }
    }

    /// One pruned BFS. Scanning a vertex at depth d can only contribute
    /// cycle candidates of length >= 2d+1 that have not been seen from a
    /// shallower scan, so levels with 2d+1 >= best are skipped.
    fn girth_from(&self, s: u32, scratch: &mut BfsScratch, best: &AtomicUsize) {
        let BfsScratch { dist, parent, mark, frontier, next, epoch } = scratch;
        *epoch += 1;
        frontier.clear();
        frontier.push(s);
        mark[s as usize] = *epoch;
        dist[s as usize] = 0;
        parent[s as usize] = s;
        let mut d = 0usize;
        while !frontier.is_empty() {
            if 2 * d + 1 >= best.load(Ordering::Relaxed) {
                return;
            }
            next.clear();
            for &v in frontier.iter() {
                for &w in &self.adj[v as usize] {
                    let wi = w as usize;
                    if mark[wi] != *epoch {
                        mark[wi] = *epoch;
                        dist[wi] = d as u32 + 1;
                        parent[wi] = v;
                        next.push(w);
                    } else if parent[v as usize] != w {
                        let cand = d + dist[wi] as usize + 1;
                        best.fetch_min(cand, Ordering::Relaxed);
                    }
                }
            }
            std::mem::swap(frontier, next);
            d += 1;
        }
    }

    /// Exhaustive counts of cycles of each length `3..=max_len`, every cycle
    /// counted exactly once. Independent of `girth`: depth-limited DFS with
    /// canonical-start deduplication (smallest vertex is the root, and of the
    /// two traversal directions the one whose second vertex is smaller than
    /// its last is kept). Exponential in `max_len`; intended for small
    /// graphs and small bounds. Lengths with zero cycles are omitted; a
    /// bound below 3 yields an empty map.
    pub fn short_cycle_counts(&self, max_len: usize) -> BTreeMap<usize, u64> {
        let mut counts = BTreeMap::new();
        if max_len < 3 {
            return counts;
        }
        let mut in_path = vec![false; self.n()];
        let mut path = Vec::with_capacity(max_len);
        for root in 0..self.n() as u32 {
            path.push(root);
            in_path[root as usize] = true;
            self.cycle_dfs(root, max_len, &mut path, &mut in_path, &mut counts);
            path.pop();
            in_path[root as usize] = false;
        }
        counts
    }

    fn cycle_dfs(
        &self,
        root: u32,
        max_len: usize,
        path: &mut Vec<u32>,
        in_path: &mut [bool],
        counts: &mut BTreeMap<usize, u64>,
    ) {
        let v = *path.last().unwrap();
        for &w in &self.adj[v as usize] {
            if w == root {
                if path.len() >= 3 && path[1] < v {
                    *counts.entry(path.len()).or_insert(0) += 1;
                }
            } else if w > root && !in_path[w as usize] && path.len() < max_len {
                path.push(w);
                in_path[w as usize] = true;
                self.cycle_dfs(root, max_len, path, in_path, counts);
                path.pop();
                in_path[w as usize] = false;
            }
        }
    }

    /// Two-coloring by BFS per component. Deterministic: components are
    /// visited in order of their lowest vertex id, which always lands on
    /// side one. Returns `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        const UNSET: u8 = u8::MAX;
        let n = self.n();
        let mut color = vec![UNSET; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            if color[s] != UNSET {
                continue;
            }
            color[s] = 0;
            queue.push_back(s as u32);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v as usize] {
                    let wi = w as usize;
                    if color[wi] == UNSET {
                        color[wi] = 1 - color[v as usize];
                        queue.push_back(w);
                    } else if color[wi] == color[v as usize] {
                        return None;
                    }
                }
            }
        }
        let mut sides = (Vec::new(), Vec::new());
        for (v, &c) in color.iter().enumerate() {
            if c == 0 {
                sides.0.push(v as u32);
            } else {
                sides.1.push(v as u32);
            }
        }
        Some(sides)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// Reusable per-thread buffers for the girth BFS; `mark`/`epoch` avoid
/// clearing the distance array between sources.
struct BfsScratch {
    dist: Vec<u32>,
    parent: Vec<u32>,
    mark: Vec<u32>,
    frontier: Vec<u32>,
    next: Vec<u32>,
    epoch: u32,
}

impl BfsScratch {
    fn new(n: usize) -> BfsScratch {
        BfsScratch {
            dist: vec![0; n],
            parent: vec![0; n],
            mark: vec![0; n],
            frontier: Vec::new(),
            next: Vec::new(),
            epoch: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::new(n as usize, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
        edges.extend((0..5).map(|i| (i, i + 5)));
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn construction_dedups_and_counts() {
        let g = Graph::new(5, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn construction_errors_name_the_offender() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, a: 0, b: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop { v: 1 }));
    }

    #[test]
    fn girth_of_standard_graphs() {
        assert_eq!(complete(4).girth(), Girth::Finite(3));
        assert_eq!(cycle(6).girth(), Girth::Finite(6));
        assert_eq!(petersen().girth(), Girth::Finite(5));
        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), Girth::Acyclic);
        assert_eq!(Graph::new(0, &[]).unwrap().girth(), Girth::Acyclic);
        assert_eq!(Graph::new(7, &[]).unwrap().girth(), Girth::Acyclic);
    }

    #[test]
    fn girth_display_and_bounds() {
        assert_eq!(Girth::Finite(5).to_string(), "5");
        assert_eq!(Girth::Acyclic.to_string(), "acyclic");
        assert!(Girth::Acyclic.is_at_least(100));
        assert!(Girth::Finite(5).is_at_least(5));
        assert!(!Girth::Finite(4).is_at_least(5));
    }

    #[test]
    fn short_cycle_counts_on_k4() {
        // K4: four triangles, three quadrilaterals.
        let counts = complete(4).short_cycle_counts(4);
        assert_eq!(counts, BTreeMap::from([(3, 4), (4, 3)]));
    }

    #[test]
    fn short_cycle_counts_below_girth_is_empty() {
        assert!(cycle(6).short_cycle_counts(5).is_empty());
        assert_eq!(cycle(6).short_cycle_counts(6), BTreeMap::from([(6, 1)]));
        assert!(complete(4).short_cycle_counts(2).is_empty());
    }

    #[test]
    fn petersen_has_twelve_pentagons() {
        let counts = petersen().short_cycle_counts(5);
        assert_eq!(counts, BTreeMap::from([(5, 12)]));
    }

    #[test]
    fn oracle_and_girth_agree_on_fixtures() {
        for g in [complete(4), complete(5), cycle(5), cycle(9), petersen()] {
            let girth = g.girth().finite().unwrap();
            let smallest = *g.short_cycle_counts(girth).keys().next().unwrap();
            assert_eq!(girth, smallest);
        }
    }

    #[test]
    fn bipartition_is_deterministic_per_component() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let (one, two) = g.bipartition().unwrap();
        assert_eq!(one, vec![0, 2]);
        assert_eq!(two, vec![1, 3]);
        assert_eq!(cycle(6).bipartition().unwrap().0, vec![0, 2, 4]);
        assert!(cycle(5).bipartition().is_none());
        assert!(!petersen().is_bipartite());
    }

    #[test]
    fn degree_profile_and_regularity() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degree_profile(), BTreeMap::from([(1, 3), (3, 1)]));
        assert!(g.is_biregular(1, 3));
        assert!(!g.is_regular(1));
        assert!(petersen().is_regular(3));
        assert!(petersen().is_biregular(3, 7));
    }

    /// Random graph strategy: vertex count and an edge subset of the
    /// complete graph.
    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..max_n).prop_flat_map(|n| {
            let all: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|a| (a + 1..n as u32).map(move |b| (a, b)))
                .collect();
            proptest::sample::subsequence(all.clone(), 0..=all.len())
                .prop_map(move |edges| Graph::new(n, &edges).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn degree_sum_is_twice_edge_count(g in arb_graph(12)) {
            let sum: usize = g.degree_profile().iter().map(|(d, c)| d * c).sum();
            prop_assert_eq!(sum, 2 * g.m());
        }

        #[test]
        fn girth_agrees_with_cycle_oracle(g in arb_graph(10)) {
            let oracle = g.short_cycle_counts(g.n().max(3));
            match g.girth() {
                Girth::Acyclic => prop_assert!(oracle.is_empty()),
                Girth::Finite(girth) => {
                    prop_assert_eq!(*oracle.keys().next().unwrap(), girth)
                }
            }
        }

        #[test]
        fn girth_is_relabeling_invariant(g in arb_graph(10), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut perm: Vec<u32> = (0..g.n() as u32).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<_> = g
                .edges()
                .map(|(a, b)| (perm[a as usize], perm[b as usize]))
                .collect();
            let h = Graph::new(g.n(), &edges).unwrap();
            prop_assert_eq!(g.girth(), h.girth());
        }

        #[test]
        fn adding_an_edge_never_increases_girth(g in arb_graph(10), a in 0u32..10, b in 0u32..10) {
            let (a, b) = (a % g.n() as u32, b % g.n() as u32);
            prop_assume!(a != b);
            let mut edges: Vec<_> = g.edges().collect();
            edges.push((a, b));
            let h = Graph::new(g.n(), &edges).unwrap();
            match (g.girth(), h.girth()) {
                (Girth::Finite(before), Girth::Finite(after)) => prop_assert!(after <= before),
                (Girth::Finite(_), Girth::Acyclic) => prop_assert!(false, "edge removal?"),
                (Girth::Acyclic, _) => {}
            }
        }
    }
}
