//! Closed-form probabilities for random vertex weightings.
//!
//! Under a weighting by i.i.d. Uniform(0,1) values, three per-edge /
//! per-pair events drive the randomized colorer's failure analysis:
//!
//! * the `k`-th largest weight on an edge falling below a threshold
//!   ([`order_stat_cdf`]),
//! * an edge being *dense* — the gap between its `k`-th largest and `k`-th
//!   smallest weight at most `(1-p)/2` ([`p_dense_exact`]),
//! * an ordered pair of edges sharing `h` vertices forming a bad pair,
//!   union-bounded over the shared vertex and rank split
//!   ([`p_badpair_upper`]).
//!
//! All sums are evaluated exactly (up to 256-bit rounding) in [`Real`]
//! arithmetic; an independent continued-fraction evaluation of the
//! regularized incomplete beta function serves as a cross-check route for
//! the order-statistic CDF.

use super::real::Real;
use crate::ordering::DensityPreset;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors for the probability formulas.
#[derive(Debug, Error, PartialEq)]
pub enum FormulaError {
    #[error("balance requirement k must be at least 1")]
    ZeroBalance,
    #[error("edge size {n} cannot hold {k} vertices of each color on both ends")]
    EdgeTooSmall { n: usize, k: usize },
    #[error("tilt parameter {p} outside [0, 1)")]
    TiltOutOfRange { p: f64 },
    #[error("threshold {t} is not a number")]
    ThresholdNotFinite { t: f64 },
    #[error("overlap must be at least 1")]
    ZeroOverlap,
}

/// One named sub-term of a probability report.
#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub name: String,
    pub value: f64,
    pub value_log2: f64,
}

/// An analytic probability with its named sub-terms.
#[derive(Debug, Clone, Serialize)]
pub struct ProbReport {
    /// What probability this is, e.g. `"dense_edge"`.
    pub quantity: String,
    pub value: f64,
    /// Base-2 logarithm of the value; finite even when `value` underflows.
    pub value_log2: f64,
    pub components: Vec<Component>,
    /// `"closed-form"` or `"quadrature"`.
    pub method: &'static str,
}

impl ProbReport {
    fn from_real(quantity: &str, value: &Real, components: Vec<(String, Real)>) -> Self {
        ProbReport {
            quantity: quantity.to_string(),
            value: value.to_f64(),
            value_log2: value.log2_f64(),
            components: components
                .into_iter()
                .map(|(name, v)| Component {
                    name,
                    value: v.to_f64(),
                    value_log2: v.log2_f64(),
                })
                .collect(),
            method: "closed-form",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

// ---------------------------------------------------------------------------
// Integer combinatorics.
// ---------------------------------------------------------------------------

/// `n!` as an exact integer.
pub(crate) fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// `C(n, k)` as an exact integer (zero when `k > n`).
pub(crate) fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub(crate) fn binom_real(n: usize, k: usize) -> Real {
    Real::from_biguint(&binom(n, k))
}

/// `Σ_{j<k} C(n, j)` — the number of ways an edge can give one color fewer
/// than `k` vertices on one side of a uniform random coloring.
pub(crate) fn binomial_tail_below(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::zero();
    for j in 0..k {
        acc += binom(n, j);
    }
    acc
}

pub(crate) fn ln_real(n: usize) -> Real {
    Real::from_u64(n as u64).ln()
}

/// The tilt parameter of a density preset, at full precision.
pub(crate) fn preset_p_real(preset: DensityPreset, n: usize, k: usize) -> Real {
    let nn = Real::from_u64(n as u64);
    match preset {
        DensityPreset::K1 => ln_real(n) / nn,
        DensityPreset::Base => {
            Real::from_u64(2 * k as u64) * ln_real(n) / nn
        }
        DensityPreset::Eps => {
            (Real::from_u64(2 * k as u64) * ln_real(n) + ln_real(n).ln()) / nn
        }
    }
}

// ---------------------------------------------------------------------------
// Order-statistic CDF.
// ---------------------------------------------------------------------------

/// CDF of the `k`-th largest of `n` i.i.d. Uniform(0,1) values at `t`,
/// via the integration-by-parts finite sum.
pub(crate) fn order_stat_cdf_real(n: usize, k: usize, t: &Real) -> Real {
    if t <= &Real::zero() {
        return Real::zero();
    }
    if t >= &Real::one() {
        return Real::one();
    }
    let one_minus = Real::one() - t;
    let mut coeff = Real::one();
    let mut acc = Real::zero();
    for j in 0..k {
        if j > 0 {
            coeff = coeff * Real::from_u64((k - j) as u64)
                / Real::from_u64((n - k + j) as u64);
        }
        let term = t.powi(n - k + 1 + j) * one_minus.powi(k - 1 - j)
            / Real::from_u64((n - k + 1 + j) as u64);
        acc = acc + coeff.clone() * term;
    }
    Real::from_u64(n as u64) * binom_real(n - 1, k - 1) * acc
}

/// Probability that the `k`-th largest of `n` i.i.d. Uniform(0,1) weights
/// is at most `t`.
pub fn order_stat_cdf(n: usize, k: usize, t: f64) -> Result<f64, FormulaError> {
    if k < 1 {
        return Err(FormulaError::ZeroBalance);
    }
    if n < k {
        return Err(FormulaError::EdgeTooSmall { n, k });
    }
    if t.is_nan() {
        return Err(FormulaError::ThresholdNotFinite { t });
    }
    Ok(order_stat_cdf_real(n, k, &Real::from_f64(t)).to_f64())
}

/// Same CDF through the regularized incomplete beta function
/// `I_t(n-k+1, k)`, evaluated by a Lentz-style continued fraction.
/// Independent of the finite-sum route; used as a cross-check.
pub fn order_stat_cdf_crosscheck(n: usize, k: usize, t: f64) -> Result<f64, FormulaError> {
    if k < 1 {
        return Err(FormulaError::ZeroBalance);
    }
    if n < k {
        return Err(FormulaError::EdgeTooSmall { n, k });
    }
    if t.is_nan() {
        return Err(FormulaError::ThresholdNotFinite { t });
    }
    Ok(incomplete_beta_reg(n - k + 1, k, &Real::from_f64(t)).to_f64())
}

/// Regularized incomplete beta `I_x(a, b)` for integer parameters.
pub(crate) fn incomplete_beta_reg(a: usize, b: usize, x: &Real) -> Real {
    if x <= &Real::zero() {
        return Real::zero();
    }
    if x >= &Real::one() {
        return Real::one();
    }
    // Use the symmetric tail where the continued fraction converges fast.
    let pivot = Real::from_u64((a + 1) as u64)
        / Real::from_u64((a + b + 2) as u64);
    if x > &pivot {
        return Real::one() - incomplete_beta_reg(b, a, &(Real::one() - x));
    }
    // front = x^a (1-x)^b / (a·B(a, b)) = x^a (1-x)^b · C(a+b-1, a)
    let front = x.powi(a) * (Real::one() - x).powi(b) * binom_real(a + b - 1, a);
    front * beta_continued_fraction(a, b, x) / Real::from_u64(a as u64)
}

fn beta_continued_fraction(a: usize, b: usize, x: &Real) -> Real {
    let tiny = Real::pow2(-1000);
    let eps = Real::pow2(-240);
    let a_r = Real::from_u64(a as u64);
    let b_r = Real::from_u64(b as u64);
    let qab = &a_r + &b_r;
    let qap = &a_r + &Real::one();
    let qam = &a_r - &Real::one();
    let mut c = Real::one();
    let mut d = Real::one() - &qab * x / &qap;
    if d.abs() < tiny {
        d = tiny.clone();
    }
    d = d.recip();
    let mut h = d.clone();
    for m in 1..=10_000usize {
        let m_r = Real::from_u64(m as u64);
        let m2 = Real::from_u64(2 * m as u64);
        // Even step.
        let aa = &m_r * (&b_r - &m_r) * x / ((&qam + &m2) * (&a_r + &m2));
        d = Real::one() + &aa * &d;
        if d.abs() < tiny {
            d = tiny.clone();
        }
        c = Real::one() + &aa / &c;
        if c.abs() < tiny {
            c = tiny.clone();
        }
        d = d.recip();
        h = h * &d * &c;
        // Odd step.
        let aa = -((&a_r + &m_r) * (&qab + &m_r) * x)
            / ((&a_r + &m2) * (&qap + &m2));
        d = Real::one() + &aa * &d;
        if d.abs() < tiny {
            d = tiny.clone();
        }
        c = Real::one() + &aa / &c;
        if c.abs() < tiny {
            c = tiny.clone();
        }
        d = d.recip();
        let delta = &d * &c;
        h = h * &delta;
        if (delta - Real::one()).abs() < eps {
            break;
        }
    }
    h
}

// ---------------------------------------------------------------------------
// Dense edges.
// ---------------------------------------------------------------------------

/// The two disjoint ways an edge ends up dense at threshold `d = (1-p)/2`:
/// its `k`-th largest weight already at most `d` (low tail), or above `d`
/// but within `d` of the `k`-th smallest (gap tail).
pub(crate) fn dense_components_real(n: usize, k: usize, p: &Real) -> (Real, Real) {
    let d = (Real::one() - p) / Real::from_u64(2);
    if d <= Real::zero() {
        return (Real::zero(), Real::zero());
    }
    let low = order_stat_cdf_real(n, k, &d);
    let one_minus_d = Real::one() - &d;
    let mut sum = Real::zero();
    for i in 0..k {
        let fac = factorial(k - 1) * factorial(i);
        let ratio = Real::from_biguint(&fac) / Real::from_biguint(&factorial(i + k));
        let term = binom_real(n - k, i) * ratio * d.powi(n - k - i) * one_minus_d.powi(i + k);
        sum = sum + term;
    }
    let gap = Real::from_u64(n as u64) * binom_real(n - 1, k - 1) * sum;
    (low, gap)
}

/// Exact probability that an `n`-vertex edge is dense: the gap between its
/// `k`-th largest and `k`-th smallest weight is at most `(1-p)/2`.
pub fn p_dense_exact(n: usize, k: usize, p: f64) -> Result<ProbReport, FormulaError> {
    if k < 1 {
        return Err(FormulaError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(FormulaError::EdgeTooSmall { n, k });
    }
    if !(0.0..1.0).contains(&p) {
        return Err(FormulaError::TiltOutOfRange { p });
    }
    let (low, gap) = dense_components_real(n, k, &Real::from_f64(p));
    let total = &low + &gap;
    Ok(ProbReport::from_real(
        "dense_edge",
        &total,
        vec![("low_tail".to_string(), low), ("gap_tail".to_string(), gap)],
    ))
}

// ---------------------------------------------------------------------------
// Bad pairs through a shared vertex window.
// ---------------------------------------------------------------------------

/// Cache of `∫_{lo}^{hi} x^a (1-x)^{s-a} dx` across `a`, for fixed exponent
/// sum `s`. One anchor value is computed from the binomial tail of the
/// incomplete beta integral; neighbors follow by the integration-by-parts
/// recurrence, which costs O(1) per step.
pub(crate) struct WindowIntegrals {
    s: usize,
    lo: Real,
    hi: Real,
    cache: BTreeMap<usize, Real>,
}

impl WindowIntegrals {
    pub(crate) fn new(s: usize, lo: Real, hi: Real) -> Self {
        WindowIntegrals {
            s,
            lo,
            hi,
            cache: BTreeMap::new(),
        }
    }

    /// `hi^c (1-hi)^{s+1-c} - lo^c (1-lo)^{s+1-c}`, the boundary term of the
    /// integration-by-parts step at power `c`.
    fn boundary(&self, c: usize) -> Real {
        let at = |x: &Real| x.powi(c) * (Real::one() - x).powi(self.s + 1 - c);
        at(&self.hi) - at(&self.lo)
    }

    /// Anchor evaluation: `G(a) = [T(hi) - T(lo)] / ((s+1)·C(s, a))` where
    /// `T(x) = Σ_{j=a+1}^{s+1} C(s+1, j) x^j (1-x)^{s+1-j}`.
    fn anchor(&self, a: usize) -> Real {
        let tail = |x: &Real| {
            if x.is_zero() || x >= &Real::one() {
                // T(0) = 0; T(1) = 1.
                return if x.is_zero() { Real::zero() } else { Real::one() };
            }
            let one_minus = Real::one() - x;
            let ratio = x / &one_minus;
            let mut term = binom_real(self.s + 1, a + 1)
                * x.powi(a + 1)
                * one_minus.powi(self.s - a);
            let mut acc = term.clone();
            for j in a + 1..self.s + 1 {
                let step = Real::from_u64((self.s + 1 - j) as u64) * &ratio
                    / Real::from_u64((j + 1) as u64);
                term = term * &step;
                acc = acc + &term;
                if step < Real::one() && &term < &(&acc * Real::pow2(-280)) {
                    break;
                }
            }
            acc
        };
        (tail(&self.hi) - tail(&self.lo))
            / (Real::from_u64((self.s + 1) as u64) * binom_real(self.s, a))
    }

    pub(crate) fn value(&mut self, a: usize) -> Real {
        assert!(a <= self.s, "exponent beyond the fixed sum");
        if let Some(v) = self.cache.get(&a) {
            return v.clone();
        }
        let below = self.cache.range(..a).next_back().map(|(&b, v)| (b, v.clone()));
        let above = self.cache.range(a + 1..).next().map(|(&b, v)| (b, v.clone()));
        let (mut at, mut g) = match (below, above) {
            (Some((b, v)), Some((c, _))) if a - b <= c - a => (b, v),
            (_, Some((c, v))) => (c, v),
            (Some((b, v)), None) => (b, v),
            (None, None) => {
                let v = self.anchor(a);
                self.cache.insert(a, v.clone());
                return v;
            }
        };
        while at < a {
            // G(at+1) = ((at+1)·G(at) - Δ(at+1)) / (s - at)
            g = (Real::from_u64((at + 1) as u64) * g - self.boundary(at + 1))
                / Real::from_u64((self.s - at) as u64);
            at += 1;
            self.cache.insert(at, g.clone());
        }
        while at > a {
            // G(at-1) = (Δ(at) + (s - at + 1)·G(at)) / at
            g = (self.boundary(at) + Real::from_u64((self.s - at + 1) as u64) * g)
                / Real::from_u64(at as u64);
            at -= 1;
            self.cache.insert(at, g.clone());
        }
        g
    }
}

/// Per-ordered-pair bad-pair bound at full precision: two edges sharing
/// exactly `h` vertices, weights tilted by `p`. Zero when `h ≥ 2k` (the
/// shared block cannot sit in the last `k` ranks of one edge and the first
/// `k` of the other simultaneously).
pub(crate) fn badpair_upper_real(n: usize, k: usize, h: usize, p: &Real) -> Real {
    if h >= 2 * k {
        return Real::zero();
    }
    let lo = (Real::one() - p) / Real::from_u64(2);
    let hi = (Real::one() + p) / Real::from_u64(2);
    let s = 2 * n - h - 1;
    let mut integrals = WindowIntegrals::new(s, lo, hi);
    let mut total = Real::zero();
    let t_min = h.saturating_sub(k);
    let t_max = (k - 1).min(h - 1);
    for t in t_min..=t_max {
        let mut split = Real::zero();
        for i in 0..=(k - h + t) {
            for j in 0..=(k - 1 - t) {
                let a = n - h - i + t + j;
                let term = binom_real(n - h, i) * binom_real(n - h, j) * integrals.value(a);
                split = split + term;
            }
        }
        total = total + binom_real(h - 1, t) * split;
    }
    Real::from_u64(h as u64) * total
}

/// Upper bound on the probability that a fixed ordered pair of edges
/// sharing exactly `h` vertices forms a bad pair under a `p`-tilted random
/// weighting, union-bounded over the shared witness vertex and the split of
/// the shared block between the two edges' rank windows.
pub fn p_badpair_upper(n: usize, k: usize, h: usize, p: f64) -> Result<ProbReport, FormulaError> {
    if k < 1 {
        return Err(FormulaError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(FormulaError::EdgeTooSmall { n, k });
    }
    if h < 1 {
        return Err(FormulaError::ZeroOverlap);
    }
    if !(0.0..1.0).contains(&p) {
        return Err(FormulaError::TiltOutOfRange { p });
    }
    if h >= 2 * k {
        return Ok(ProbReport::from_real("bad_pair", &Real::zero(), vec![]));
    }
    let p_real = Real::from_f64(p);
    let value = badpair_upper_real(n, k, h, &p_real);
    // Per-split components, recomputed per t for the report.
    let mut components = Vec::new();
    let lo = (Real::one() - &p_real) / Real::from_u64(2);
    let hi = (Real::one() + &p_real) / Real::from_u64(2);
    let s = 2 * n - h - 1;
    let mut integrals = WindowIntegrals::new(s, lo, hi);
    for t in h.saturating_sub(k)..=(k - 1).min(h - 1) {
        let mut split = Real::zero();
        for i in 0..=(k - h + t) {
            for j in 0..=(k - 1 - t) {
                let a = n - h - i + t + j;
                split = split + binom_real(n - h, i) * binom_real(n - h, j) * integrals.value(a);
            }
        }
        let contribution = Real::from_u64(h as u64) * binom_real(h - 1, t) * split;
        components.push((format!("split_t{t}"), contribution));
    }
    Ok(ProbReport::from_real("bad_pair", &value, components))
}

// ---------------------------------------------------------------------------
// Closed-form rates and thresholds used by the audits and bound reports.
// ---------------------------------------------------------------------------

pub(crate) fn e_pow(n: u64) -> Real {
    Real::from_u64(n).exp()
}

/// `√(n / (k ln n))`.
fn sqrt_n_over_klnn(n: usize, k: usize) -> Real {
    (Real::from_u64(n as u64) / (Real::from_u64(k as u64) * ln_real(n))).sqrt()
}

/// Edge budget under which a random tilted weighting succeeds with positive
/// probability: `(12/e^26)·√(n/(k ln n))·2^{n-1}/C(n-1, k-1)`.
pub(crate) fn random_order_edge_budget(n: usize, k: usize) -> Real {
    Real::from_u64(12) / e_pow(26) * sqrt_n_over_klnn(n, k) * Real::pow2(n as i64 - 1)
        / binom_real(n - 1, k - 1)
}

/// Edge budget for families whose edges pairwise share at least `h`
/// vertices: the pair rate improves, so the budget divides by the square
/// root of the pair-count weight instead of the full binomial.
pub(crate) fn random_order_edge_budget_overlap(n: usize, k: usize, h: usize) -> Real {
    let weight = Real::pow2((h - k) as i64)
        * Real::from_u64((h - k + 1) as u64)
        * binom_real(n - 1, k - 1)
        * binom_real(n - 1, 2 * k - 1 - h);
    Real::from_u64(12) / e_pow(26) * sqrt_n_over_klnn(n, k) * Real::pow2(n as i64 - 1)
        / weight.sqrt()
}

/// Scale whose integer part minus one is the largest intersection degree
/// the dependency-graph argument tolerates:
/// `(5/(3e^26))·√(n/(k ln n))·2^{n-1}/C(n-1, k-1)`.
pub(crate) fn dependency_scale(n: usize, k: usize) -> Real {
    Real::from_u64(5) / (Real::from_u64(3) * e_pow(26))
        * sqrt_n_over_klnn(n, k)
        * Real::pow2(n as i64 - 1)
        / binom_real(n - 1, k - 1)
}

/// Closed-form per-pair bad-pair rate at the base tilt `p = 2k ln n / n`:
/// `3e^30·C(n-1,k-1)²·2^{2-2n}·(2k ln n / n)`.
pub(crate) fn pair_rate_base_closed(n: usize, k: usize) -> Real {
    let c = binom_real(n - 1, k - 1);
    Real::from_u64(3) * e_pow(30) * &c * &c * Real::pow2(2 - 2 * n as i64)
        * preset_p_real(DensityPreset::Base, n, k)
}

/// Closed-form per-pair rate at the almost-coloring tilt
/// `p = ln(n^{2k} ln n)/n`: `3e^35·C²·2^{2-2n}·p`.
pub(crate) fn pair_rate_eps_closed(n: usize, k: usize) -> Real {
    let c = binom_real(n - 1, k - 1);
    Real::from_u64(3) * e_pow(35) * &c * &c * Real::pow2(2 - 2 * n as i64)
        * preset_p_real(DensityPreset::Eps, n, k)
}

/// Intermediate pair rate with the dependency factors explicit:
/// `e^30·(1-α)^{-2}·(1-γ)^{-1}·C²·p·2^{2-2n}`, where `α = k/(n-3k)` and
/// `γ = 4k/(n-k)`. Requires `n > 5k` so both factors are positive.
pub(crate) fn pair_rate_factor_closed(n: usize, k: usize, p: &Real) -> Real {
    assert!(n > 5 * k, "dependency factors need n > 5k");
    let alpha = Real::from_u64(k as u64) / Real::from_u64((n - 3 * k) as u64);
    let gamma = Real::from_u64(4 * k as u64) / Real::from_u64((n - k) as u64);
    let one_minus_alpha = Real::one() - alpha;
    let r = (one_minus_alpha.clone() * one_minus_alpha).recip()
        * (Real::one() - gamma).recip();
    let c = binom_real(n - 1, k - 1);
    e_pow(30) * r * &c * &c * p * Real::pow2(2 - 2 * n as i64)
}

/// Closed-form per-pair rate for pairs sharing at least `h` vertices
/// (`k < h < 2k`), at the base tilt:
/// `6e^30·2^{2-2n}·(h-k+1)·C(n-1,2k-1-h)·C(n-1,k-1)·2^{h-k}·(k ln n / n)`.
pub(crate) fn overlap_pair_rate_closed(n: usize, k: usize, h: usize) -> Real {
    Real::from_u64(6) * e_pow(30) * Real::pow2(2 - 2 * n as i64)
        * Real::from_u64((h - k + 1) as u64)
        * binom_real(n - 1, 2 * k - 1 - h)
        * binom_real(n - 1, k - 1)
        * Real::pow2((h - k) as i64)
        * Real::from_u64(k as u64) * ln_real(n) / Real::from_u64(n as u64)
}
