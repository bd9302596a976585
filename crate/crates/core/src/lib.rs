//! A laboratory for balanced 2-colorings of uniform hypergraphs.
//!
//! A 2-coloring of the vertices of an n-uniform hypergraph is *k-balanced on
//! an edge* when the edge carries at least k vertices of each color. The crate
//! centers on the question "does a hypergraph admit a coloring that is
//! k-balanced on every edge?" and on how many edges a hypergraph needs before
//! the answer can turn negative. It provides:
//!
//! * [`hypergraph`] — validated hypergraph values, intersection statistics,
//!   generators for standard families, and text/JSON serialization;
//! * [`ordering`] — random vertex numerations (rankings induced by i.i.d.
//!   uniform weights), the first-k/last-k edge machinery, bad-pair and dense
//!   edge detection, and the coloring a numeration induces;
//! * [`exact`] — exhaustive and numeration-based deciders plus a minimal
//!   counterexample search;
//! * [`randomized`] — random colorers with trial statistics, the union-bound
//!   failure estimate, edge pruning for almost-balanced colorings, and a
//!   local-lemma style degree condition check;
//! * [`analytics`] — closed-form probabilities, threshold/bound reports in
//!   log2 space, and numeric audits of the inequality chains behind the
//!   bounds, evaluated with 256-bit arithmetic;
//! * [`montecarlo`] — counter-keyed Monte Carlo estimates for the analytic
//!   quantities and a sigma-based comparison verdict.
//!
//! All randomness is derived from explicit `(seed, stream)` pairs via
//! [`rng::stream`]; every function of a seed is deterministic and independent
//! of thread count.

pub mod analytics;
pub mod exact;
pub mod hypergraph;
pub mod montecarlo;
pub mod ordering;
pub mod randomized;
pub mod rng;

pub use hypergraph::{Family, Hypergraph, IntersectionProfile};
pub use ordering::{Coloring, Numeration, VertexWeights};
