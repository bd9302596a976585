//! Ground-truth deciders and a minimal-counterexample search, all exhaustive.
//!
//! Two independent deciders answer "does this hypergraph admit a 2-coloring
//! with at least k vertices of each color on every edge?":
//!
//! * [`decide_bk_exhaustive`] walks every coloring directly (Gray-code order,
//!   incremental per-edge counters), and is the final arbiter.
//! * [`decide_bk_numeration`] walks every vertex permutation and asks whether
//!   one is free of bad pairs. Its agreement with the exhaustive decider on
//!   every instance is the testable form of the ranking criterion.
//!
//! [`min_non_bk_search`] finds the smallest number of n-vertex edges a
//! hypergraph must have before balanced 2-colorings become impossible, at toy
//! parameters, by enumerating edge lists in a vertex-introduction normal form
//! (first edge fixed to `{0..n-1}`, later edges introduce new vertices in
//! consecutive order) and testing each candidate exhaustively.

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::ordering::{self, Color, Coloring, Numeration, OrderingError};
use serde::Serialize;
use thiserror::Error;

/// Default vertex limit for the coloring-enumeration decider.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 24;
/// Default vertex limit for the permutation-enumeration decider.
pub const NUMERATION_VERTEX_LIMIT: usize = 10;
/// Default node budget for [`min_non_bk_search`].
pub const SEARCH_NODE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("{vertex_count} vertices exceed the enumeration limit of {limit}")]
    VertexLimit { vertex_count: usize, limit: usize },
    #[error("edge size {n} must be at least max(2k, 2) = {min}")]
    EdgeSizeTooSmall { n: usize, min: usize },
    #[error("vertex budget v_max = {v_max} cannot hold one edge of size {n}")]
    VertexBudgetTooSmall { v_max: usize, n: usize },
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// True iff some 2-coloring puts at least k vertices of each color on every
/// edge. Enumerates colorings under the default vertex limit.
pub fn decide_bk_exhaustive(h: &Hypergraph, k: usize) -> Result<bool, ExactError> {
    Ok(find_balanced_coloring_with_limit(h, k, EXHAUSTIVE_VERTEX_LIMIT)?.is_some())
}

/// As [`decide_bk_exhaustive`] with an explicit vertex limit.
pub fn decide_bk_exhaustive_with_limit(
    h: &Hypergraph,
    k: usize,
    limit: usize,
) -> Result<bool, ExactError> {
    Ok(find_balanced_coloring_with_limit(h, k, limit)?.is_some())
}

/// The first balanced coloring in enumeration order, if any.
pub fn find_balanced_coloring(h: &Hypergraph, k: usize) -> Result<Option<Coloring>, ExactError> {
    find_balanced_coloring_with_limit(h, k, EXHAUSTIVE_VERTEX_LIMIT)
}

/// Walks colorings in Gray-code order with incremental per-edge color
/// counters, fixing vertex 0's color by the swap symmetry of the two colors.
pub fn find_balanced_coloring_with_limit(
    h: &Hypergraph,
    k: usize,
    limit: usize,
) -> Result<Option<Coloring>, ExactError> {
    if k == 0 {
        return Err(OrderingError::ZeroK.into());
    }
    let v = h.vertex_count();
    if v > limit {
        return Err(ExactError::VertexLimit {
            vertex_count: v,
            limit,
        });
    }
    if h.edge_count() == 0 {
        return Ok(Some(Coloring::new(vec![Color::Two; v])));
    }
    // An edge with fewer than 2k vertices can never carry k of each color.
    if h.edges().iter().any(|e| e.len() < 2 * k) {
        return Ok(None);
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (edge, vertices) in h.edges().iter().enumerate() {
        for &u in vertices {
            incident[u].push(edge);
        }
    }
    let sizes: Vec<usize> = h.edges().iter().map(|e| e.len()).collect();

    // colors[u] = true means color 1. Vertex 0 is pinned to color 1; the
    // Gray counter walks the remaining v-1 vertices.
    let mut colors = vec![false; v];
    colors[0] = true;
    let mut ones: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| e.iter().filter(|&&u| colors[u]).count())
        .collect();
    let violated = |ones: usize, size: usize| ones < k || size - ones < k;
    let mut violations = (0..h.edge_count())
        .filter(|&e| violated(ones[e], sizes[e]))
        .count();

    let as_coloring = |colors: &[bool]| {
        Coloring::new(
            colors
                .iter()
                .map(|&one| if one { Color::One } else { Color::Two })
                .collect(),
        )
    };

    if violations == 0 {
        return Ok(Some(as_coloring(&colors)));
    }
    let steps: u64 = 1u64 << (v - 1);
    for g in 1..steps {
        let flip = g.trailing_zeros() as usize + 1;
        colors[flip] = !colors[flip];
        let delta: isize = if colors[flip] { 1 } else { -1 };
        for &e in &incident[flip] {
            let before = violated(ones[e], sizes[e]);
            ones[e] = (ones[e] as isize + delta) as usize;
            let after = violated(ones[e], sizes[e]);
            match (before, after) {
                (true, false) => violations -= 1,
                (false, true) => violations += 1,
                _ => {}
            }
        }
        if violations == 0 {
            return Ok(Some(as_coloring(&colors)));
        }
    }
    Ok(None)
}

/// True iff some vertex permutation has no bad pairs. Under the ranking
/// criterion this agrees with [`decide_bk_exhaustive`] whenever every edge
/// has at least 2k vertices.
pub fn decide_bk_numeration(h: &Hypergraph, k: usize) -> Result<bool, ExactError> {
    Ok(find_clean_numeration_with_limit(h, k, NUMERATION_VERTEX_LIMIT)?.is_some())
}

/// As [`decide_bk_numeration`] with an explicit vertex limit.
pub fn decide_bk_numeration_with_limit(
    h: &Hypergraph,
    k: usize,
    limit: usize,
) -> Result<bool, ExactError> {
    Ok(find_clean_numeration_with_limit(h, k, limit)?.is_some())
}

/// The first bad-pair-free numeration in enumeration order, if any.
pub fn find_clean_numeration(h: &Hypergraph, k: usize) -> Result<Option<Numeration>, ExactError> {
    find_clean_numeration_with_limit(h, k, NUMERATION_VERTEX_LIMIT)
}

/// Enumerates permutations with Heap's algorithm; each one is screened with
/// a single ranked pass that accumulates "appears early somewhere" and
/// "appears late somewhere" vertex masks, whose intersection is non-empty
/// exactly when a bad pair exists.
pub fn find_clean_numeration_with_limit(
    h: &Hypergraph,
    k: usize,
    limit: usize,
) -> Result<Option<Numeration>, ExactError> {
    ordering::check_edge_sizes(h, k)?;
    let v = h.vertex_count();
    // The per-permutation screen packs vertices into a 64-bit mask.
    if v > limit || v > 63 {
        return Err(ExactError::VertexLimit {
            vertex_count: v,
            limit: limit.min(63),
        });
    }
    if h.edge_count() == 0 || v == 0 {
        return Ok(Some(Numeration::from_order((0..v).collect())));
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (edge, vertices) in h.edges().iter().enumerate() {
        for &u in vertices {
            incident[u].push(edge);
        }
    }
    let sizes: Vec<usize> = h.edges().iter().map(|e| e.len()).collect();

    let mut seen = vec![0usize; h.edge_count()];
    let mut order_is_clean = |order: &[usize]| -> bool {
        seen.iter_mut().for_each(|s| *s = 0);
        let mut early_mask: u64 = 0;
        let mut late_mask: u64 = 0;
        for &u in order {
            for &e in &incident[u] {
                seen[e] += 1;
                if seen[e] <= k {
                    early_mask |= 1 << u;
                }
                if seen[e] > sizes[e] - k {
                    late_mask |= 1 << u;
                }
            }
        }
        // A vertex early in one edge and late in another witnesses a bad
        // pair; within a single edge the two roles are disjoint (size >= 2k).
        early_mask & late_mask == 0
    };

    // Heap's algorithm, iterative form.
    let mut order: Vec<usize> = (0..v).collect();
    if order_is_clean(&order) {
        return Ok(Some(Numeration::from_order(order)));
    }
    let mut c = vec![0usize; v];
    let mut i = 0;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            if order_is_clean(&order) {
                return Ok(Some(Numeration::from_order(order)));
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(None)
}

/// Outcome of the minimal-counterexample search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub v_max: usize,
    pub m_max: usize,
    /// Smallest edge count admitting a counterexample, if one was found.
    pub min_edges: Option<usize>,
    /// The first counterexample in enumeration order, if one was found.
    pub witness: Option<Hypergraph>,
    /// Complete candidate hypergraphs handed to the exhaustive decider.
    pub examined: u64,
    /// Enumeration-tree nodes visited (budget is charged per node).
    pub nodes: u64,
    /// False iff the node budget ran out before the space was covered.
    pub complete: bool,
}

#[derive(Serialize)]
struct SearchResultRepr<'a> {
    n: usize,
    k: usize,
    v_max: usize,
    m_max: usize,
    min_edges: Option<usize>,
    witness_hg: Option<String>,
    examined: u64,
    nodes: u64,
    complete: bool,
    verdict: &'a str,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        let verdict = if self.min_edges.is_some() {
            "counterexample found"
        } else if self.complete {
            "space exhausted, every candidate balanced-colorable"
        } else {
            "budget exceeded, partial"
        };
        let repr = SearchResultRepr {
            n: self.n,
            k: self.k,
            v_max: self.v_max,
            m_max: self.m_max,
            min_edges: self.min_edges,
            witness_hg: self.witness.as_ref().map(crate::hypergraph::to_hg),
            examined: self.examined,
            nodes: self.nodes,
            complete: self.complete,
            verdict,
        };
        serde_json::to_string(&repr).expect("search result serializes")
    }
}

struct SearchState {
    n: usize,
    k: usize,
    v_max: usize,
    budget: u64,
    nodes: u64,
    examined: u64,
    truncated: bool,
    witness: Option<Hypergraph>,
}

/// Minimum edge count of an n-uniform hypergraph on at most `v_max` vertices
/// that no 2-coloring balances to k per color, searched up to `m_max` edges,
/// with the default node budget.
pub fn min_non_bk_search(
    n: usize,
    k: usize,
    v_max: usize,
    m_max: usize,
) -> Result<SearchResult, ExactError> {
    min_non_bk_search_with_budget(n, k, v_max, m_max, SEARCH_NODE_BUDGET)
}

/// As [`min_non_bk_search`] with an explicit node budget. A budget overrun
/// is reported through `complete = false`, never as an error.
///
/// Candidates are enumerated in a normal form every isomorphism class hits:
/// the first edge is `{0..n-1}`, edges are lexicographically increasing, and
/// each edge's previously unseen vertices continue the consecutive run of
/// used vertices. Edge counts are tried in increasing order, so the first
/// counterexample found has minimal edge count.
pub fn min_non_bk_search_with_budget(
    n: usize,
    k: usize,
    v_max: usize,
    m_max: usize,
    budget: u64,
) -> Result<SearchResult, ExactError> {
    if k == 0 {
        return Err(OrderingError::ZeroK.into());
    }
    if n < (2 * k).max(2) {
        return Err(ExactError::EdgeSizeTooSmall {
            n,
            min: (2 * k).max(2),
        });
    }
    if v_max < n {
        return Err(ExactError::VertexBudgetTooSmall { v_max, n });
    }
    if v_max > EXHAUSTIVE_VERTEX_LIMIT {
        return Err(ExactError::VertexLimit {
            vertex_count: v_max,
            limit: EXHAUSTIVE_VERTEX_LIMIT,
        });
    }

    let mut state = SearchState {
        n,
        k,
        v_max,
        budget,
        nodes: 0,
        examined: 0,
        truncated: false,
        witness: None,
    };
    let mut min_edges = None;
    for m_target in 1..=m_max {
        let mut edges = vec![(0..n).collect::<Vec<usize>>()];
        extend(&mut state, &mut edges, n, m_target)?;
        if state.witness.is_some() {
            min_edges = Some(m_target);
            break;
        }
        if state.truncated {
            break;
        }
    }
    Ok(SearchResult {
        n,
        k,
        v_max,
        m_max,
        min_edges,
        witness: state.witness.take(),
        examined: state.examined,
        nodes: state.nodes,
        complete: !state.truncated,
    })
}

/// Depth-first extension of a canonical edge list up to `m_target` edges.
fn extend(
    state: &mut SearchState,
    edges: &mut Vec<Vec<usize>>,
    used: usize,
    m_target: usize,
) -> Result<(), ExactError> {
    if state.truncated || state.witness.is_some() {
        return Ok(());
    }
    state.nodes += 1;
    if state.nodes > state.budget {
        state.truncated = true;
        return Ok(());
    }
    if edges.len() == m_target {
        state.examined += 1;
        let h = Hypergraph::build(used, edges.clone())?;
        if !decide_bk_exhaustive(&h, state.k)? {
            state.witness = Some(h);
        }
        return Ok(());
    }
    let last = edges.last().cloned().expect("first edge is preset");
    for (candidate, new_vertices) in candidate_edges(state.n, used, state.v_max) {
        if candidate <= last {
            continue;
        }
        edges.push(candidate);
        extend(state, edges, used + new_vertices, m_target)?;
        edges.pop();
        if state.truncated || state.witness.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

/// All size-n edges over the used vertices plus a consecutive run of new
/// ones, in lexicographic order, each with its count of new vertices.
fn candidate_edges(n: usize, used: usize, v_max: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let max_new = n.min(v_max.saturating_sub(used));
    for new_vertices in 0..=max_new {
        let old_part = n - new_vertices;
        if old_part > used {
            continue;
        }
        let mut chosen = (0..old_part).collect::<Vec<usize>>();
        loop {
            let mut edge = chosen.clone();
            edge.extend(used..used + new_vertices);
            out.push((edge, new_vertices));
            if !next_subset(&mut chosen, used) {
                break;
            }
        }
    }
    out.sort();
    out
}

/// Advances a sorted subset of `{0..ground-1}` to its lexicographic
/// successor of the same size; false when `chosen` was the last one.
fn next_subset(chosen: &mut [usize], ground: usize) -> bool {
    let t = chosen.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if chosen[i] < ground - (t - i) {
            chosen[i] += 1;
            for j in i + 1..t {
                chosen[j] = chosen[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{generate, Family};

    fn graph(v: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
        Hypergraph::build(v, edges).unwrap()
    }

    #[test]
    fn single_edge_of_size_two_k_is_colorable_both_ways() {
        let h = graph(4, vec![vec![0, 1, 2, 3]]);
        assert!(decide_bk_exhaustive(&h, 2).unwrap());
        assert!(decide_bk_numeration(&h, 2).unwrap());
        let witness = find_balanced_coloring(&h, 2).unwrap().unwrap();
        assert!(ordering::verify_coloring(&h, &witness, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn triangle_defeats_both_deciders_but_two_edges_do_not() {
        let triangle = graph(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(!decide_bk_exhaustive(&triangle, 1).unwrap());
        assert!(!decide_bk_numeration(&triangle, 1).unwrap());
        for drop in 0..3 {
            let kept: Vec<Vec<usize>> = (0..3)
                .filter(|&e| e != drop)
                .map(|e| triangle.edge(e).to_vec())
                .collect();
            let h = graph(3, kept);
            assert!(decide_bk_exhaustive(&h, 1).unwrap());
            assert!(decide_bk_numeration(&h, 1).unwrap());
        }
    }

    #[test]
    fn seven_line_plane_is_not_one_balanced_colorable() {
        let h = generate(&Family::Fano).unwrap();
        assert!(!decide_bk_exhaustive(&h, 1).unwrap());
        assert!(!decide_bk_numeration(&h, 1).unwrap());
    }

    #[test]
    fn edgeless_and_too_small_edges_resolve_without_enumeration() {
        let empty = graph(3, vec![]);
        assert!(decide_bk_exhaustive(&empty, 2).unwrap());
        let thin = graph(3, vec![vec![0, 1, 2]]);
        assert!(!decide_bk_exhaustive(&thin, 2).unwrap());
    }

    #[test]
    fn vertex_limits_are_enforced() {
        let h = graph(30, vec![vec![0, 1]]);
        assert_eq!(
            decide_bk_exhaustive(&h, 1).unwrap_err(),
            ExactError::VertexLimit { vertex_count: 30, limit: 24 }
        );
        let h2 = graph(12, vec![vec![0, 1]]);
        assert!(matches!(
            decide_bk_numeration(&h2, 1).unwrap_err(),
            ExactError::VertexLimit { vertex_count: 12, limit: 10 }
        ));
        assert!(decide_bk_numeration_with_limit(&h2, 1, 12).unwrap());
    }

    #[test]
    fn clean_numeration_witness_induces_a_balanced_coloring() {
        let h = graph(6, vec![vec![0, 1, 2, 3], vec![1, 2, 4, 5], vec![0, 3, 4, 5]]);
        let num = find_clean_numeration(&h, 2).unwrap().unwrap();
        assert!(ordering::find_bad_pairs(&h, &num, 2).unwrap().is_empty());
        let coloring = ordering::coloring_from_numeration(&h, &num, 2).unwrap();
        assert!(ordering::verify_coloring(&h, &coloring, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn search_recovers_the_triangle_as_the_smallest_odd_cycle() {
        let result = min_non_bk_search(2, 1, 3, 3).unwrap();
        assert_eq!(result.min_edges, Some(3));
        assert!(result.complete);
        let witness = result.witness.unwrap();
        assert_eq!(witness.edge_count(), 3);
        assert_eq!(
            witness.edges(),
            &[vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert!(!decide_bk_exhaustive(&witness, 1).unwrap());
    }

    #[test]
    fn search_exhausts_when_the_edge_budget_is_too_small() {
        let result = min_non_bk_search(2, 1, 4, 2).unwrap();
        assert_eq!(result.min_edges, None);
        assert!(result.witness.is_none());
        assert!(result.complete);
        assert!(result.examined > 0);
        let json = result.to_json();
        assert!(json.contains("\"min_edges\":null"));
        assert!(json.contains("space exhausted"));
    }

    #[test]
    fn search_reports_budget_overruns_as_incomplete() {
        let result = min_non_bk_search_with_budget(2, 1, 4, 3, 5).unwrap();
        assert!(!result.complete);
        assert_eq!(result.min_edges, None);
    }

    #[test]
    fn search_witness_json_embeds_the_edge_list() {
        let result = min_non_bk_search(2, 1, 3, 3).unwrap();
        let json = result.to_json();
        assert!(json.contains("counterexample found"));
        assert!(json.contains("v 3"));
        assert!(json.contains("e 0 1"));
    }

    #[test]
    fn deciders_agree_on_all_two_uniform_graphs_on_four_vertices() {
        // All 2-uniform edge sets over 4 vertices: 6 possible edges.
        let all_edges: Vec<Vec<usize>> = vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ];
        for mask in 1u32..(1 << 6) {
            let edges: Vec<Vec<usize>> = (0..6)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| all_edges[i].clone())
                .collect();
            let h = graph(4, edges);
            let by_coloring = decide_bk_exhaustive(&h, 1).unwrap();
            let by_numeration = decide_bk_numeration(&h, 1).unwrap();
            assert_eq!(by_coloring, by_numeration, "mask {mask}");
        }
    }
}
