//! Generators for standard hypergraph families.

use super::{Hypergraph, HypergraphError};
use crate::rng;
use rand::Rng;
use thiserror::Error;

/// Upper limit on the edge count any generator will materialize.
pub const MAX_GENERATED_EDGES: usize = 1 << 21;

/// A hypergraph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The 7-point, 7-line projective plane of order 2: 3-uniform, every pair
    /// of lines meets in exactly one point.
    Fano,
    /// All `C(v, n)` n-subsets of `v` vertices, in lexicographic order.
    Complete { v: usize, n: usize },
    /// `m` distinct uniformly random n-subsets of `v` vertices, drawn from the
    /// counter-keyed stream of `seed` and listed in draw order.
    Random { v: usize, n: usize, m: usize, seed: u64 },
    /// A 2-uniform cycle `0-1, 1-2, .., (L-1)-0` of odd length `L >= 3`.
    OddCycle { length: usize },
}

/// Parameter failures in [`generate`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("edge size {n} exceeds vertex count {v}")]
    EdgeLargerThanVertexSet { v: usize, n: usize },
    #[error("edge size must be at least 1")]
    ZeroEdgeSize,
    #[error("requested {m} distinct edges but only {available} n-subsets exist")]
    TooManyEdges { m: usize, available: usize },
    #[error("edge count {count} exceeds the generation limit {limit}")]
    EdgeLimit { count: usize, limit: usize },
    #[error("cycle length {length} must be odd and at least 3")]
    BadCycleLength { length: usize },
    #[error("random edge sampling exhausted its attempt budget")]
    SamplingBudget,
}

/// Builds one member of `family`. Deterministic for identical parameters.
pub fn generate(family: &Family) -> Result<Hypergraph, GenerateError> {
    let built = match family {
        Family::Fano => Hypergraph::build(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        ),
        Family::Complete { v, n } => return complete(*v, *n),
        Family::Random { v, n, m, seed } => return random(*v, *n, *m, *seed),
        Family::OddCycle { length } => return odd_cycle(*length),
    };
    Ok(expect_valid(built))
}

fn expect_valid(h: Result<Hypergraph, HypergraphError>) -> Hypergraph {
    h.expect("generated edges are valid by construction")
}

/// `C(v, n)` clamped to `usize::MAX` on overflow.
fn binomial_saturating(v: usize, n: usize) -> usize {
    if n > v {
        return 0;
    }
    let n = n.min(v - n);
    let mut acc: u128 = 1;
    for i in 0..n {
        acc = acc.saturating_mul((v - i) as u128) / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

fn check_subset_params(v: usize, n: usize) -> Result<(), GenerateError> {
    if n == 0 {
        return Err(GenerateError::ZeroEdgeSize);
    }
    if n > v {
        return Err(GenerateError::EdgeLargerThanVertexSet { v, n });
    }
    Ok(())
}

fn complete(v: usize, n: usize) -> Result<Hypergraph, GenerateError> {
    check_subset_params(v, n)?;
    let count = binomial_saturating(v, n);
    if count > MAX_GENERATED_EDGES {
        return Err(GenerateError::EdgeLimit {
            count,
            limit: MAX_GENERATED_EDGES,
        });
    }
    let mut edges = Vec::with_capacity(count);
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        edges.push(current.clone());
        // Advance to the next n-subset in lexicographic order.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(expect_valid(Hypergraph::build(v, edges)));
            }
            i -= 1;
            if current[i] != i + v - n {
                break;
            }
        }
        current[i] += 1;
        for j in (i + 1)..n {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn random(v: usize, n: usize, m: usize, seed: u64) -> Result<Hypergraph, GenerateError> {
    check_subset_params(v, n)?;
    let available = binomial_saturating(v, n);
    if m > available {
        return Err(GenerateError::TooManyEdges { m, available });
    }
    if m > MAX_GENERATED_EDGES {
        return Err(GenerateError::EdgeLimit {
            count: m,
            limit: MAX_GENERATED_EDGES,
        });
    }
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    // Each rejection-sampling attempt gets its own stream, so the edge list
    // depends only on (v, n, m, seed), not on how attempts interleave.
    let budget = 1_000 + 200 * m as u64;
    for attempt in 0..budget {
        if edges.len() == m {
            break;
        }
        let mut rng_stream = rng::stream(seed, attempt);
        let edge = sample_subset(v, n, &mut rng_stream);
        if !edges.contains(&edge) {
            edges.push(edge);
        }
    }
    if edges.len() < m {
        return Err(GenerateError::SamplingBudget);
    }
    Ok(expect_valid(Hypergraph::build(v, edges)))
}

/// Uniform n-subset of `0..v`, sorted. Floyd's algorithm: n insertions, no
/// O(v) scratch.
fn sample_subset<R: Rng>(v: usize, n: usize, rng: &mut R) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    for j in (v - n)..v {
        let t = rng.random_range(0..=j);
        if chosen.contains(&t) {
            chosen.push(j);
        } else {
            chosen.push(t);
        }
    }
    chosen.sort_unstable();
    chosen
}

fn odd_cycle(length: usize) -> Result<Hypergraph, GenerateError> {
    if length < 3 || length % 2 == 0 {
        return Err(GenerateError::BadCycleLength { length });
    }
    let edges = (0..length).map(|i| vec![i, (i + 1) % length]).collect();
    Ok(expect_valid(Hypergraph::build(length, edges)))
}
