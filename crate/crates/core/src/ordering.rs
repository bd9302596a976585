//! Vertex numerations, the first-k/last-k edge machinery, and the colorings
//! numerations induce.
//!
//! A *numeration* ranks the vertices 1..v. Random numerations are produced by
//! drawing an i.i.d. uniform weight per vertex and ranking by weight (ties,
//! which have probability zero in the continuous model but can occur on the
//! dyadic grid, broken toward the lower vertex index). For an edge A and a
//! balance parameter k, `F(A)` is the set of the k earliest-ranked vertices
//! of A and `L(A)` the k latest-ranked.
//!
//! Two ordered edges `(f, s)` form a *bad pair* when `L(f) ∩ F(s)` is
//! non-empty: some shared vertex sits late in f but early in s. When a
//! numeration has no bad pairs, coloring the first k vertices of every edge
//! with color 1 and the rest with color 2 gives every edge at least k
//! vertices of each color; [`find_bad_pairs`] and
//! [`coloring_from_numeration`] are the two halves of that argument, and
//! [`verify_coloring`] checks the outcome independently.
//!
//! An edge is *dense* for a threshold parameter p when its k-th smallest and
//! k-th largest weights are within `(1-p)/2` of each other — its weight
//! spread is too narrow for the ranking argument to have slack. Dense edges
//! are what the analytic side of the crate prices; [`dense_edges`] finds
//! them exactly.

use crate::hypergraph::Hypergraph;
use crate::rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Parameter and shape failures in the ordering operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("balance parameter k must be at least 1")]
    ZeroK,
    #[error("edge {edge} has {size} vertices, need at least 2k = {min}")]
    EdgeTooSmall { edge: usize, size: usize, min: usize },
    #[error("expected {expected} weights, found {found}")]
    WeightCountMismatch { expected: usize, found: usize },
    #[error("expected {expected} colors, found {found}")]
    ColoringLengthMismatch { expected: usize, found: usize },
    #[error("edge index {edge} out of range ({edge_count} edges)")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
}

/// One i.i.d. uniform weight per vertex, with the seed that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeights {
    weights: Vec<f64>,
    seed: u64,
}

impl VertexWeights {
    /// Weights from the counter-keyed stream `(seed, stream)`; one draw from
    /// the open interval (0, 1) per vertex.
    pub fn sample(vertex_count: usize, seed: u64, stream: u64) -> Self {
        let mut rng_stream = rng::stream(seed, stream);
        let weights = (0..vertex_count)
            .map(|_| rng::open01(&mut rng_stream))
            .collect();
        Self { weights, seed }
    }

    /// Wraps externally chosen weights (tests, replays). The recorded seed is
    /// not meaningful in this case and is stored as 0.
    pub fn from_values(weights: Vec<f64>) -> Self {
        Self { weights, seed: 0 }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn values(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// A ranking of the vertices: a bijection between vertices and ranks 1..=v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeration {
    /// Vertex -> rank, 1-based.
    ranks: Vec<usize>,
    /// Position (0-based, position p holds the vertex of rank p+1) -> vertex.
    order: Vec<usize>,
}

impl Numeration {
    /// Ranks vertices by ascending weight, ties toward the lower index.
    pub fn from_weights(weights: &VertexWeights) -> Self {
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by(|&a, &b| {
            weights.weights[a]
                .partial_cmp(&weights.weights[b])
                .expect("vertex weights are never NaN")
                .then(a.cmp(&b))
        });
        Self::from_order(order)
    }

    /// Builds the numeration whose rank-(p+1) vertex is `order[p]`.
    ///
    /// `order` must be a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut ranks = vec![0usize; order.len()];
        for (position, &vertex) in order.iter().enumerate() {
            ranks[vertex] = position + 1;
        }
        debug_assert!(ranks.iter().all(|&r| r >= 1), "order must be a permutation");
        Self { ranks, order }
    }

    pub fn vertex_count(&self) -> usize {
        self.ranks.len()
    }

    /// 1-based rank of `vertex`.
    pub fn rank(&self, vertex: usize) -> usize {
        self.ranks[vertex]
    }

    /// The vertex holding 1-based rank `rank`.
    pub fn vertex_with_rank(&self, rank: usize) -> usize {
        self.order[rank - 1]
    }

    /// Vertices in rank order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The k earliest-ranked vertices of `edge`, sorted by vertex index.
    pub fn first_k(&self, edge: &[usize], k: usize) -> Vec<usize> {
        self.extreme_k(edge, k, false)
    }

    /// The k latest-ranked vertices of `edge`, sorted by vertex index.
    pub fn last_k(&self, edge: &[usize], k: usize) -> Vec<usize> {
        self.extreme_k(edge, k, true)
    }

    fn extreme_k(&self, edge: &[usize], k: usize, latest: bool) -> Vec<usize> {
        let mut by_rank: Vec<usize> = edge.to_vec();
        by_rank.sort_by_key(|&v| self.ranks[v]);
        let mut picked: Vec<usize> = if latest {
            by_rank[edge.len() - k..].to_vec()
        } else {
            by_rank[..k].to_vec()
        };
        picked.sort_unstable();
        picked
    }
}

/// Samples weights for `vertex_count` vertices from `(seed, stream 0)` and
/// ranks them.
pub fn sample_numeration(vertex_count: usize, seed: u64) -> (VertexWeights, Numeration) {
    sample_numeration_stream(vertex_count, seed, 0)
}

/// As [`sample_numeration`], but on an explicit stream index, so per-trial
/// numerations are independent of how trials are grouped.
pub fn sample_numeration_stream(
    vertex_count: usize,
    seed: u64,
    stream: u64,
) -> (VertexWeights, Numeration) {
    let weights = VertexWeights::sample(vertex_count, seed, stream);
    let numeration = Numeration::from_weights(&weights);
    (weights, numeration)
}

/// The numeration that ranks all color-1 vertices (by index) before all
/// color-2 vertices (by index). A balanced coloring always turns into a
/// numeration without bad pairs this way.
pub fn numeration_from_coloring(coloring: &Coloring) -> Numeration {
    let mut order: Vec<usize> = Vec::with_capacity(coloring.len());
    order.extend((0..coloring.len()).filter(|&v| coloring.color(v) == Color::One));
    order.extend((0..coloring.len()).filter(|&v| coloring.color(v) == Color::Two));
    Numeration::from_order(order)
}

fn check_k(k: usize) -> Result<(), OrderingError> {
    if k == 0 {
        return Err(OrderingError::ZeroK);
    }
    Ok(())
}

pub(crate) fn check_edge_sizes(h: &Hypergraph, k: usize) -> Result<(), OrderingError> {
    check_k(k)?;
    for (edge, vertices) in h.edges().iter().enumerate() {
        if vertices.len() < 2 * k {
            return Err(OrderingError::EdgeTooSmall {
                edge,
                size: vertices.len(),
                min: 2 * k,
            });
        }
    }
    Ok(())
}

fn check_weights(h: &Hypergraph, weights: &VertexWeights) -> Result<(), OrderingError> {
    if weights.len() != h.vertex_count() {
        return Err(OrderingError::WeightCountMismatch {
            expected: h.vertex_count(),
            found: weights.len(),
        });
    }
    Ok(())
}

/// The k-th smallest and k-th largest weights on one edge, with the witness
/// vertex sets.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeExtremes {
    /// Weight of the edge's k-th earliest vertex.
    pub f_value: f64,
    /// Weight of the edge's k-th latest vertex.
    pub l_value: f64,
    /// The k earliest vertices, sorted by vertex index.
    pub first_k: Vec<usize>,
    /// The k latest vertices, sorted by vertex index.
    pub last_k: Vec<usize>,
}

/// Extreme weights of edge `edge` under `weights`. Requires the edge to have
/// at least 2k vertices, so the two witness sets are disjoint.
pub fn edge_extremes(
    h: &Hypergraph,
    weights: &VertexWeights,
    edge: usize,
    k: usize,
) -> Result<EdgeExtremes, OrderingError> {
    check_k(k)?;
    check_weights(h, weights)?;
    if edge >= h.edge_count() {
        return Err(OrderingError::EdgeOutOfRange {
            edge,
            edge_count: h.edge_count(),
        });
    }
    let vertices = h.edge(edge);
    if vertices.len() < 2 * k {
        return Err(OrderingError::EdgeTooSmall {
            edge,
            size: vertices.len(),
            min: 2 * k,
        });
    }
    let mut by_weight: Vec<usize> = vertices.to_vec();
    by_weight.sort_by(|&a, &b| {
        weights.weights[a]
            .partial_cmp(&weights.weights[b])
            .expect("vertex weights are never NaN")
            .then(a.cmp(&b))
    });
    let mut first_k = by_weight[..k].to_vec();
    let mut last_k = by_weight[by_weight.len() - k..].to_vec();
    let f_value = weights.weights[by_weight[k - 1]];
    let l_value = weights.weights[by_weight[by_weight.len() - k]];
    first_k.sort_unstable();
    last_k.sort_unstable();
    Ok(EdgeExtremes {
        f_value,
        l_value,
        first_k,
        last_k,
    })
}

/// An ordered edge pair `(f, s)` with a shared vertex ranked among the last k
/// of f and the first k of s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPair {
    pub f: usize,
    pub s: usize,
    /// The shared vertex in `L(f) ∩ F(s)`.
    pub witness: usize,
}

fn extreme_sets_per_edge(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let firsts = h
        .edges()
        .iter()
        .map(|e| numeration.first_k(e, k))
        .collect();
    let lasts = h.edges().iter().map(|e| numeration.last_k(e, k)).collect();
    (firsts, lasts)
}

/// Incidence of the first-k/last-k sets: for each vertex, which edges carry
/// it late (`in_last`) and which early (`in_first`).
fn extreme_incidence(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (firsts, lasts) = extreme_sets_per_edge(h, numeration, k);
    let mut in_first: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    let mut in_last: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    for (edge, set) in firsts.iter().enumerate() {
        for &v in set {
            in_first[v].push(edge);
        }
    }
    for (edge, set) in lasts.iter().enumerate() {
        for &v in set {
            in_last[v].push(edge);
        }
    }
    (in_first, in_last)
}

/// Every bad pair with every witness, sorted by `(f, s, witness)`.
///
/// For distinct edges f and s, a witness is any vertex of `L(f) ∩ F(s)`; an
/// edge is never paired with itself (its own first-k and last-k sets are
/// disjoint because edges have at least 2k vertices).
pub fn find_bad_pairs(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> Result<Vec<BadPair>, OrderingError> {
    check_edge_sizes(h, k)?;
    let (in_first, in_last) = extreme_incidence(h, numeration, k);
    let mut pairs = Vec::new();
    for v in 0..h.vertex_count() {
        for &f in &in_last[v] {
            for &s in &in_first[v] {
                debug_assert_ne!(f, s, "first-k and last-k of one edge are disjoint");
                pairs.push(BadPair { f, s, witness: v });
            }
        }
    }
    pairs.sort_unstable_by_key(|p| (p.f, p.s, p.witness));
    Ok(pairs)
}

/// Number of distinct ordered edge pairs `(f, s)` with at least one witness.
pub fn count_bad_pairs(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> Result<usize, OrderingError> {
    let mut pairs: Vec<(usize, usize)> = find_bad_pairs(h, numeration, k)?
        .into_iter()
        .map(|p| (p.f, p.s))
        .collect();
    pairs.dedup();
    Ok(pairs.len())
}

/// Whether any bad pair exists; early-exits without materializing the list.
pub fn has_bad_pair(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> Result<bool, OrderingError> {
    check_edge_sizes(h, k)?;
    let (in_first, in_last) = extreme_incidence(h, numeration, k);
    Ok((0..h.vertex_count()).any(|v| !in_last[v].is_empty() && !in_first[v].is_empty()))
}

/// An ordered pair of edges sharing exactly one vertex, with every vertex of
/// `f` ranked no later than every vertex of `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedChain {
    pub f: usize,
    pub s: usize,
}

/// All ordered 2-chains under `numeration`, sorted by `(f, s)`.
///
/// Since ranks are distinct, "every vertex of f no later than every vertex of
/// s" forces the shared vertex to be both the latest of f and the earliest
/// of s.
pub fn find_ordered_2chains(h: &Hypergraph, numeration: &Numeration) -> Vec<OrderedChain> {
    let spans: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .map(|e| {
            let mut min = usize::MAX;
            let mut max = 0;
            for &v in e {
                let r = numeration.rank(v);
                min = min.min(r);
                max = max.max(r);
            }
            (min, max)
        })
        .collect();
    let mut chains = Vec::new();
    for f in 0..h.edge_count() {
        for s in 0..h.edge_count() {
            if f != s
                && spans[f].1 <= spans[s].0
                && h.intersection_size(f, s) == 1
            {
                chains.push(OrderedChain { f, s });
            }
        }
    }
    chains
}

/// Balance parameter k plus the density parameter p; an edge is dense when
/// its extreme-weight spread `l - f` is at most `threshold() = (1-p)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityParams {
    pub k: usize,
    pub p: f64,
}

impl DensityParams {
    pub fn threshold(&self) -> f64 {
        (1.0 - self.p) / 2.0
    }
}

/// Named presets for the density parameter p as a function of (n, k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityPreset {
    /// `p = 2k ln n / n` — the general-k setting.
    Base,
    /// `p = ln n / n` — the k = 1 specialization.
    K1,
    /// `p = ln(n^{2k} ln n) / n` — the setting for almost-balanced spans.
    Eps,
}

impl DensityPreset {
    /// The preset's p value for edge size n. Requires n ≥ 2 (the `Eps`
    /// preset takes an iterated logarithm).
    pub fn p(&self, n: usize, k: usize) -> f64 {
        assert!(n >= 2, "density presets need edge size at least 2");
        let nf = n as f64;
        match self {
            DensityPreset::Base => 2.0 * k as f64 * nf.ln() / nf,
            DensityPreset::K1 => nf.ln() / nf,
            DensityPreset::Eps => (2.0 * k as f64 * nf.ln() + nf.ln().ln()) / nf,
        }
    }
}

/// Indices of the dense edges under `weights`, in edge order.
///
/// A non-positive threshold (p ≥ 1) returns the empty set: in the continuous
/// weight model no edge can have zero spread.
pub fn dense_edges(
    h: &Hypergraph,
    weights: &VertexWeights,
    params: &DensityParams,
) -> Result<Vec<usize>, OrderingError> {
    check_edge_sizes(h, params.k)?;
    check_weights(h, weights)?;
    let threshold = params.threshold();
    if threshold <= 0.0 {
        return Ok(Vec::new());
    }
    let mut dense = Vec::new();
    for edge in 0..h.edge_count() {
        let extremes = edge_extremes(h, weights, edge, params.k)?;
        if extremes.l_value - extremes.f_value <= threshold {
            dense.push(edge);
        }
    }
    Ok(dense)
}

/// A 2-coloring of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    One,
    Two,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    /// Parses a string of `1`s and `2`s, one character per vertex.
    pub fn parse(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| match c {
                '1' => Some(Color::One),
                '2' => Some(Color::Two),
                _ => None,
            })
            .collect::<Option<Vec<Color>>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, vertex: usize) -> Color {
        self.colors[vertex]
    }

    /// Renders one character per vertex: `1` or `2`.
    pub fn to_digits(&self) -> String {
        self.colors
            .iter()
            .map(|c| match c {
                Color::One => '1',
                Color::Two => '2',
            })
            .collect()
    }

    /// `(color-1 count, color-2 count)` on the given vertex set.
    pub fn counts_on(&self, vertices: &[usize]) -> (usize, usize) {
        let ones = vertices
            .iter()
            .filter(|&&v| self.colors[v] == Color::One)
            .count();
        (ones, vertices.len() - ones)
    }
}

/// Colors the union of the first-k sets of all edges with color 1 and every
/// other vertex with color 2.
pub fn coloring_from_numeration(
    h: &Hypergraph,
    numeration: &Numeration,
    k: usize,
) -> Result<Coloring, OrderingError> {
    check_edge_sizes(h, k)?;
    let mut colors = vec![Color::Two; h.vertex_count()];
    for edge in h.edges() {
        for v in numeration.first_k(edge, k) {
            colors[v] = Color::One;
        }
    }
    Ok(Coloring::new(colors))
}

/// An edge with fewer than k vertices of one of the colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub edge: usize,
    pub color_one: usize,
    pub color_two: usize,
}

/// Every edge on which `coloring` is not k-balanced, in edge order. An empty
/// result means the coloring is balanced on the whole hypergraph.
pub fn verify_coloring(
    h: &Hypergraph,
    coloring: &Coloring,
    k: usize,
) -> Result<Vec<Violation>, OrderingError> {
    check_k(k)?;
    if coloring.len() != h.vertex_count() {
        return Err(OrderingError::ColoringLengthMismatch {
            expected: h.vertex_count(),
            found: coloring.len(),
        });
    }
    let mut violations = Vec::new();
    for (edge, vertices) in h.edges().iter().enumerate() {
        let (color_one, color_two) = coloring.counts_on(vertices);
        if color_one < k || color_two < k {
            violations.push(Violation {
                edge,
                color_one,
                color_two,
            });
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{generate, Family};
    use proptest::prelude::*;

    fn graph(v: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::build(v, edges).unwrap()
    }

    #[test]
    fn ranks_follow_ascending_weights() {
        let w = VertexWeights::from_values(vec![0.9, 0.1, 0.5]);
        let num = Numeration::from_weights(&w);
        assert_eq!(num.rank(0), 3);
        assert_eq!(num.rank(1), 1);
        assert_eq!(num.rank(2), 2);
        assert_eq!(num.order(), &[1, 2, 0]);
    }

    #[test]
    fn rank_ties_break_toward_the_lower_vertex_index() {
        let w = VertexWeights::from_values(vec![0.5, 0.5, 0.1]);
        let num = Numeration::from_weights(&w);
        assert_eq!(num.rank(2), 1);
        assert_eq!(num.rank(0), 2);
        assert_eq!(num.rank(1), 3);
    }

    #[test]
    fn sampling_is_deterministic_per_seed_and_stream() {
        let (w1, n1) = sample_numeration_stream(12, 5, 3);
        let (w2, n2) = sample_numeration_stream(12, 5, 3);
        assert_eq!(w1, w2);
        assert_eq!(n1, n2);
        let (w3, _) = sample_numeration_stream(12, 5, 4);
        assert_ne!(w1.values(), w3.values());
        let mut sorted_ranks: Vec<usize> = (0..12).map(|v| n1.rank(v)).collect();
        sorted_ranks.sort_unstable();
        assert_eq!(sorted_ranks, (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn edge_extremes_on_explicit_weights() {
        let h = graph(4, vec![vec![0, 1, 2, 3]]);
        let w = VertexWeights::from_values(vec![0.1, 0.2, 0.3, 0.4]);
        let e = edge_extremes(&h, &w, 0, 2).unwrap();
        assert_eq!(e.f_value, 0.2);
        assert_eq!(e.l_value, 0.3);
        assert_eq!(e.first_k, vec![0, 1]);
        assert_eq!(e.last_k, vec![2, 3]);
    }

    #[test]
    fn edge_extremes_needs_room_for_both_witness_sets() {
        let h = graph(4, vec![vec![0, 1, 2, 3]]);
        let w = VertexWeights::from_values(vec![0.1, 0.2, 0.3, 0.4]);
        assert_eq!(
            edge_extremes(&h, &w, 0, 3).unwrap_err(),
            OrderingError::EdgeTooSmall { edge: 0, size: 4, min: 6 }
        );
    }

    #[test]
    fn shared_vertex_late_in_one_edge_and_early_in_the_other_is_a_bad_pair() {
        let h = graph(7, vec![vec![0, 1, 2, 3], vec![3, 4, 5, 6]]);
        let num = Numeration::from_order((0..7).collect());
        let pairs = find_bad_pairs(&h, &num, 2).unwrap();
        assert_eq!(pairs, vec![BadPair { f: 0, s: 1, witness: 3 }]);
        assert_eq!(count_bad_pairs(&h, &num, 2).unwrap(), 1);
        assert!(has_bad_pair(&h, &num, 2).unwrap());
    }

    #[test]
    fn reversing_the_order_swaps_the_roles_but_keeps_the_pair_bad() {
        let h = graph(7, vec![vec![0, 1, 2, 3], vec![3, 4, 5, 6]]);
        let num = Numeration::from_order((0..7).rev().collect());
        // Vertex 3 is now early in edge 0 and late in edge 1 — the mirror
        // image of the identity order's bad pair.
        let pairs = find_bad_pairs(&h, &num, 2).unwrap();
        assert_eq!(pairs, vec![BadPair { f: 1, s: 0, witness: 3 }]);
    }

    #[test]
    fn sharing_the_vertex_early_in_both_edges_is_clean() {
        let h = graph(7, vec![vec![0, 1, 2, 3], vec![3, 4, 5, 6]]);
        // Rank vertex 3 first: it is then early in both edges, so neither
        // ordered pair has a late-to-early witness.
        let num = Numeration::from_order(vec![3, 0, 1, 4, 2, 5, 6]);
        assert!(find_bad_pairs(&h, &num, 2).unwrap().is_empty());
        assert!(!has_bad_pair(&h, &num, 2).unwrap());
    }

    #[test]
    fn every_witness_is_listed_and_sorted() {
        // Edges share {2, 3}; under the identity order both shared vertices
        // lie in L(f) = {2, 3} and F(s) = {2, 3}.
        let h = graph(6, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5]]);
        let num = Numeration::from_order((0..6).collect());
        let pairs = find_bad_pairs(&h, &num, 2).unwrap();
        assert_eq!(
            pairs,
            vec![
                BadPair { f: 0, s: 1, witness: 2 },
                BadPair { f: 0, s: 1, witness: 3 },
            ]
        );
        assert_eq!(count_bad_pairs(&h, &num, 2).unwrap(), 1);
    }

    #[test]
    fn ordered_chains_need_unit_intersection_and_full_separation() {
        let h = graph(5, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        let num = Numeration::from_order((0..5).collect());
        assert_eq!(
            find_ordered_2chains(&h, &num),
            vec![OrderedChain { f: 0, s: 1 }]
        );
        // Sharing two vertices disqualifies the pair outright.
        let h2 = graph(4, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        let num2 = Numeration::from_order((0..4).collect());
        assert!(find_ordered_2chains(&h2, &num2).is_empty());
    }

    #[test]
    fn density_threshold_classifies_edges_by_weight_spread() {
        let h = graph(4, vec![vec![0, 1], vec![2, 3]]);
        let w = VertexWeights::from_values(vec![0.40, 0.45, 0.1, 0.9]);
        let params = DensityParams { k: 1, p: 0.0 };
        assert_eq!(params.threshold(), 0.5);
        // Edge 0 spreads 0.05 <= 0.5; edge 1 spreads 0.8 > 0.5.
        assert_eq!(dense_edges(&h, &w, &params).unwrap(), vec![0]);
    }

    #[test]
    fn non_positive_threshold_means_no_dense_edges() {
        let h = graph(2, vec![vec![0, 1]]);
        let w = VertexWeights::from_values(vec![0.3, 0.3]);
        let params = DensityParams { k: 1, p: 1.0 };
        assert_eq!(dense_edges(&h, &w, &params).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn density_presets_match_their_formulas() {
        let n = 30usize;
        let nf = 30f64;
        assert_eq!(DensityPreset::Base.p(n, 2), 4.0 * nf.ln() / nf);
        assert_eq!(DensityPreset::K1.p(n, 2), nf.ln() / nf);
        let eps = DensityPreset::Eps.p(n, 2);
        assert!((eps - (4.0 * nf.ln() + nf.ln().ln()) / nf).abs() < 1e-15);
        // The almost-balanced preset exceeds the base preset by ln ln n / n.
        assert!(eps > DensityPreset::Base.p(n, 2));
    }

    #[test]
    fn numeration_coloring_takes_first_k_of_every_edge() {
        let h = generate(&Family::Fano).unwrap();
        let num = Numeration::from_order((0..7).collect());
        let coloring = coloring_from_numeration(&h, &num, 1).unwrap();
        assert_eq!(coloring.to_digits(), "1112222");
        let violations = verify_coloring(&h, &coloring, 1).unwrap();
        // The all-early line {0,1,2} ends up entirely color 1.
        assert_eq!(
            violations,
            vec![Violation { edge: 0, color_one: 3, color_two: 0 }]
        );
    }

    #[test]
    fn verify_coloring_checks_both_color_counts() {
        let h = graph(4, vec![vec![0, 1, 2, 3]]);
        let balanced = Coloring::parse("1122").unwrap();
        assert!(verify_coloring(&h, &balanced, 2).unwrap().is_empty());
        let lopsided = Coloring::parse("1112").unwrap();
        assert_eq!(
            verify_coloring(&h, &lopsided, 2).unwrap(),
            vec![Violation { edge: 0, color_one: 3, color_two: 1 }]
        );
        assert!(matches!(
            verify_coloring(&h, &Coloring::parse("11").unwrap(), 2),
            Err(OrderingError::ColoringLengthMismatch { .. })
        ));
    }

    #[test]
    fn coloring_digits_round_trip() {
        let c = Coloring::parse("1221").unwrap();
        assert_eq!(c.to_digits(), "1221");
        assert_eq!(Coloring::parse("102"), None);
    }

    #[test]
    fn balanced_coloring_reordered_as_ones_first_has_no_bad_pairs() {
        let h = graph(4, vec![vec![0, 1, 2, 3]]);
        let coloring = Coloring::parse("1212").unwrap();
        let num = numeration_from_coloring(&coloring);
        assert_eq!(num.order(), &[0, 2, 1, 3]);
        assert!(find_bad_pairs(&h, &num, 2).unwrap().is_empty());
    }

    proptest! {
        /// On any instance, a numeration with no bad pairs induces a
        /// balanced coloring: the two halves of the ranking argument agree.
        #[test]
        fn numerations_without_bad_pairs_induce_balanced_colorings(
            seed in 0u64..500,
            gen_seed in 0u64..20,
            k in 1usize..3,
        ) {
            let n = 2 * k + 1;
            let h = generate(&Family::Random { v: 10, n, m: 6, seed: gen_seed }).unwrap();
            let (_, num) = sample_numeration(10, seed);
            if find_bad_pairs(&h, &num, k).unwrap().is_empty() {
                let coloring = coloring_from_numeration(&h, &num, k).unwrap();
                prop_assert!(verify_coloring(&h, &coloring, k).unwrap().is_empty());
            }
        }
    }
}
