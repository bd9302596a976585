//! Validated hypergraphs and their intersection statistics.
//!
//! A [`Hypergraph`] is a vertex count `v` together with a list of edges, each
//! edge a non-empty subset of `{0, .., v-1}`. Edges are stored with their
//! vertices sorted strictly increasing (set semantics); the edge *list* keeps
//! insertion order, and two edges that are equal as sets are rejected at
//! construction. When every edge has the same size n the hypergraph is
//! n-uniform and [`Hypergraph::uniformity`] reports `Some(n)`.
//!
//! [`IntersectionProfile`] tabulates `|e_i ∩ e_j|` over all unordered edge
//! pairs. From it come the three structural predicates used throughout the
//! crate: simplicity (all pairwise intersections have size ≤ 1), the minimum
//! overlap property (every intersecting pair shares at least h vertices), and
//! the intersection degree (the largest number of other edges any single edge
//! intersects).

mod generate;
mod io;

pub use generate::{generate, Family, GenerateError};
pub use io::{from_hg, from_json, to_hg, to_json, FormatError};

use thiserror::Error;

/// Validation failures in [`Hypergraph::build`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    /// An edge at `position` in the input list had no vertices.
    #[error("edge {position} is empty")]
    EmptyEdge { position: usize },
    /// An edge referenced a vertex outside `0..vertex_count`.
    #[error("edge {position} contains vertex {vertex}, but the vertex count is {vertex_count}")]
    VertexOutOfRange {
        position: usize,
        vertex: usize,
        vertex_count: usize,
    },
    /// Two input edges were equal as vertex sets.
    #[error("edges {first} and {second} are the same vertex set")]
    DuplicateEdge { first: usize, second: usize },
}

/// A finite hypergraph with validated, set-normalized edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    uniformity: Option<usize>,
}

impl Hypergraph {
    /// Validates `raw_edges` against `vertex_count` and builds the hypergraph.
    ///
    /// Each raw edge is treated as a set: vertices are sorted and repeated
    /// vertices within one edge are collapsed. An edge that is empty, an edge
    /// referencing a vertex `>= vertex_count`, or two edges equal as sets are
    /// construction errors (duplicates report both list positions).
    pub fn build(
        vertex_count: usize,
        raw_edges: Vec<Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(raw_edges.len());
        for (position, raw) in raw_edges.into_iter().enumerate() {
            if raw.is_empty() {
                return Err(HypergraphError::EmptyEdge { position });
            }
            if let Some(&vertex) = raw.iter().find(|&&w| w >= vertex_count) {
                return Err(HypergraphError::VertexOutOfRange {
                    position,
                    vertex,
                    vertex_count,
                });
            }
            let mut edge = raw;
            edge.sort_unstable();
            edge.dedup();
            if let Some(first) = edges.iter().position(|e| *e == edge) {
                return Err(HypergraphError::DuplicateEdge {
                    first,
                    second: position,
                });
            }
            edges.push(edge);
        }
        let uniformity = match edges.first() {
            Some(first) if edges.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Ok(Self {
            vertex_count,
            edges,
            uniformity,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, each sorted strictly increasing, in insertion order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// `Some(n)` when the hypergraph is non-empty and every edge has size n.
    pub fn uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    /// A copy that keeps only the edges whose indices are in `keep`
    /// (in the order given), on the same vertex set.
    pub fn restrict_to_edges(&self, keep: &[usize]) -> Self {
        let edges: Vec<Vec<usize>> = keep.iter().map(|&i| self.edges[i].clone()).collect();
        let uniformity = match edges.first() {
            Some(first) if edges.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Self {
            vertex_count: self.vertex_count,
            edges,
            uniformity,
        }
    }

    /// Size of the intersection of edges `i` and `j`.
    pub fn intersection_size(&self, i: usize, j: usize) -> usize {
        sorted_intersection_size(&self.edges[i], &self.edges[j])
    }

    /// Tabulates all pairwise intersection sizes.
    pub fn intersection_profile(&self) -> IntersectionProfile {
        let m = self.edges.len();
        let mut sizes = Vec::with_capacity(m.saturating_sub(1) * m / 2);
        for i in 0..m {
            for j in (i + 1)..m {
                sizes.push(sorted_intersection_size(&self.edges[i], &self.edges[j]) as u32);
            }
        }
        IntersectionProfile { m, sizes }
    }
}

fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Pairwise intersection sizes of a hypergraph's edges.
///
/// Stores the upper triangle of the symmetric `|e_i ∩ e_j|` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile {
    m: usize,
    sizes: Vec<u32>,
}

impl IntersectionProfile {
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// `|e_i ∩ e_j|` for distinct edge indices, in either order.
    pub fn pair_size(&self, i: usize, j: usize) -> usize {
        assert!(i != j && i < self.m && j < self.m, "need two distinct edge indices");
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        // Row r of the upper triangle holds m-1-r entries; row lo starts
        // after rows 0..lo.
        let row_start = lo * (self.m - 1) - lo * (lo.saturating_sub(1)) / 2;
        self.sizes[row_start + hi - lo - 1] as usize
    }

    /// Iterates `(i, j, |e_i ∩ e_j|)` over all unordered pairs with i < j.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.m;
        (0..m)
            .flat_map(move |i| ((i + 1)..m).map(move |j| (i, j)))
            .zip(self.sizes.iter())
            .map(|((i, j), &s)| (i, j, s as usize))
    }

    /// Largest pairwise intersection size (0 for fewer than two edges).
    pub fn max_intersection(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0) as usize
    }

    /// Every pair of distinct edges shares at most one vertex.
    pub fn is_simple(&self) -> bool {
        self.sizes.iter().all(|&s| s <= 1)
    }

    /// Every pair of distinct edges is either disjoint or shares at least
    /// `h` vertices.
    pub fn all_overlaps_at_least(&self, h: usize) -> bool {
        self.sizes.iter().all(|&s| s == 0 || s as usize >= h)
    }

    /// Intersection degree: the maximum over edges of the number of *other*
    /// edges meeting it in at least one vertex.
    pub fn intersection_degree(&self) -> usize {
        let mut degree = vec![0usize; self.m];
        for (i, j, s) in self.pairs() {
            if s > 0 {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
        degree.into_iter().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_normalizes_edges_to_sorted_sets() {
        let h = Hypergraph::build(4, vec![vec![2, 0, 1], vec![3, 1, 1]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![1, 3]]);
        assert_eq!(h.uniformity(), None);
    }

    #[test]
    fn build_rejects_empty_edge() {
        let err = Hypergraph::build(3, vec![vec![0], vec![]]).unwrap_err();
        assert_eq!(err, HypergraphError::EmptyEdge { position: 1 });
    }

    #[test]
    fn build_rejects_out_of_range_vertex() {
        let err = Hypergraph::build(3, vec![vec![0, 3]]).unwrap_err();
        assert_eq!(
            err,
            HypergraphError::VertexOutOfRange {
                position: 0,
                vertex: 3,
                vertex_count: 3
            }
        );
    }

    #[test]
    fn build_rejects_duplicate_edge_sets_with_both_positions() {
        let err = Hypergraph::build(4, vec![vec![0, 1], vec![1, 0]]).unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateEdge { first: 0, second: 1 });
    }

    #[test]
    fn uniformity_is_recorded_only_for_uniform_edge_sizes() {
        let h = Hypergraph::build(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(h.uniformity(), Some(2));
        let h = Hypergraph::build(4, vec![]).unwrap();
        assert_eq!(h.uniformity(), None);
    }

    #[test]
    fn triangle_profile_has_degree_two_and_unit_overlaps() {
        let h = Hypergraph::build(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let profile = h.intersection_profile();
        assert_eq!(profile.max_intersection(), 1);
        assert_eq!(profile.intersection_degree(), 2);
        assert!(profile.is_simple());
        assert_eq!(profile.pair_size(2, 0), 1);
    }

    #[test]
    fn profile_pair_size_matches_direct_intersection() {
        let h = Hypergraph::build(
            6,
            vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![0, 4], vec![1, 5]],
        )
        .unwrap();
        let profile = h.intersection_profile();
        for i in 0..h.edge_count() {
            for j in 0..h.edge_count() {
                if i != j {
                    assert_eq!(profile.pair_size(i, j), h.intersection_size(i, j));
                }
            }
        }
        assert_eq!(profile.max_intersection(), 2);
        assert!(!profile.is_simple());
        assert!(!profile.all_overlaps_at_least(2));
    }

    #[test]
    fn overlap_threshold_holds_when_intersections_are_disjoint_or_large() {
        let h = Hypergraph::build(
            6,
            vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![0, 1, 4, 5]],
        )
        .unwrap();
        let profile = h.intersection_profile();
        assert!(profile.all_overlaps_at_least(2));
        assert!(!profile.all_overlaps_at_least(3));
    }

    #[test]
    fn restrict_keeps_selected_edges_in_order() {
        let h = Hypergraph::build(5, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let sub = h.restrict_to_edges(&[3, 1]);
        assert_eq!(sub.edges(), &[vec![3, 4], vec![1, 2]]);
        assert_eq!(sub.vertex_count(), 5);
        assert_eq!(sub.uniformity(), Some(2));
    }
}
