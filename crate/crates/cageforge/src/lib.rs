//! Builds k-regular girth-5 graphs that sit close to the Moore bound, and
//! certifies every claim about them by direct computation.
//!
//! The pipeline: the incidence graph of an elliptic semiplane of prime order
//! q ([`semiplane`]) is trimmed by removing matched point/line sets and
//! whole-block pairs ([`reductions`]), then small "piece" graphs with
//! pairwise disjoint Cayley weight sets are glued into the surviving blocks
//! ([`amalgam`]). Ready-made piece sets for q = 11, 13, 17, 19 and the two
//! infinite prime families q ≡ 1, 5 (mod 6) live in [`families`]. Nothing is
//! trusted: [`certify`] recomputes order, degrees, girth and Moore excess
//! from the final edge set.
//!
//! The `examples/` directory is the front door — each example is runnable
//! with `cargo run --example <name>`:
//!
//! * `build_base_graph` — the semiplane incidence graph B_q and its
//!   structural invariants.
//! * `reductions` — removing matched vertex sets and blocks; degree
//!   accounting.
//! * `weights` — edge weight classes of the piece graphs and the
//!   disjointness that kills short cycles.
//! * `vertex_split` — the girth-preserving split operation, including a
//!   pair it must reject.
//! * `small_families` — certified constructions for q = 11, 13, 17, 19.
//! * `general_families` — the q ≡ 1, 5 (mod 6) constructions at larger q.
//! * `export_roundtrip` — graph6 and edge-list serialization round trips.
//! * `moore_table` — order vs. Moore bound for every supported q.
//!
//! The same functionality is scriptable through the thin `cageforge` binary
//! (`build`, `verify`, `weights`, `table` subcommands).

pub mod amalgam;
pub mod certify;
pub mod cli;
pub mod families;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod semiplane;

pub use amalgam::{amalgamate, check_plan, edge_weight, vertex_split, Amalgam, AmalgamPlan, Piece};
pub use certify::{certify, moore_bound, Certificate, Claim};
pub use families::{pieces_for, plan_for, FamilyId};
pub use graph::{Girth, Graph};
pub use reductions::{reduce, ReducedGraph, ReductionSpec};
pub use semiplane::{build_levi, is_prime, LeviGraph, VertexKind, VertexTag};
