//! Catalog of edge-count thresholds for balanced colorability.
//!
//! Each row of a [`BoundReport`] is one published threshold: below a
//! *floor*, every `n`-uniform hypergraph (of the row's family) admits the
//! relevant balanced coloring; a *ceiling* is an upper bound on the minimum
//! counterexample size. Rows carry the validity conditions of the theorem
//! they come from as named boolean flags, and rows whose statement hides an
//! unspecified constant are marked `shape_only` — their value is computed
//! with a user-supplied stand-in (default `1.0`) recorded next to them.
//!
//! Values are evaluated in 256-bit arithmetic and reported both directly
//! and as base-2 logarithms, since at large `n` the interesting thresholds
//! overflow `f64` long before they stop being comparable.

use super::formulas::{
    self, binom_real, binomial_tail_below, dependency_scale, e_pow, ln_real,
    random_order_edge_budget, random_order_edge_budget_overlap,
};
use super::real::Real;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors for threshold reports.
#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("balance requirement k must be at least 1")]
    ZeroBalance,
    #[error("edge size {n} cannot hold {k} vertices of each color on both ends")]
    EdgeTooSmall { n: usize, k: usize },
    #[error("overlap {h} outside the meaningful range k < h < 2k for k = {k}")]
    OverlapOutOfRange { h: usize, k: usize },
    #[error("edge-loss fraction {eps} outside (0, 1)")]
    EpsOutOfRange { eps: f64 },
}

/// Named constants standing in for the unspecified factors of shape-only
/// rows. Unset names default to `1.0`.
///
/// Recognized names: `plain_ceiling_slack`, `balanced_ceiling_slack`,
/// `balanced_tail_c`, `almost_tail_c`, `overlap_power_c`, `window_r`,
/// `window_s`.
#[derive(Debug, Clone, Default)]
pub struct UserConstants(BTreeMap<String, f64>);

impl UserConstants {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> f64 {
        self.0.get(name).copied().unwrap_or(1.0)
    }
}

/// One validity condition of a threshold row.
#[derive(Debug, Clone, Serialize)]
pub struct Flag {
    pub name: String,
    pub holds: bool,
}

/// One threshold with its provenance-independent metadata.
#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub name: String,
    /// `"floor"`, `"ceiling"`, or `"threshold"`.
    pub kind: &'static str,
    pub value: f64,
    pub value_log2: f64,
    /// True when the published statement contains an unspecified constant;
    /// the value then uses the recorded stand-in.
    pub shape_only: bool,
    pub constant_name: Option<String>,
    pub constant_value: Option<f64>,
    pub flags: Vec<Flag>,
}

impl BoundRow {
    /// All validity flags hold (vacuously true for an unconditioned row).
    pub fn valid(&self) -> bool {
        self.flags
            .iter()
            .filter(|f| f.name != "exceeds_one")
            .all(|f| f.holds)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|f| f.name == name).map(|f| f.holds)
    }
}

/// The full threshold catalog for one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub h: Option<usize>,
    pub eps: Option<f64>,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn row(&self, name: &str) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "name,kind,value,value_log2,shape_only,constant_name,constant_value,flags\n",
        );
        for r in &self.rows {
            let flags = r
                .flags
                .iter()
                .map(|f| format!("{}={}", f.name, f.holds))
                .collect::<Vec<_>>()
                .join(";");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.name,
                r.kind,
                r.value,
                r.value_log2,
                r.shape_only,
                r.constant_name.as_deref().unwrap_or(""),
                r.constant_value.map(|v| v.to_string()).unwrap_or_default(),
                flags
            ));
        }
        out
    }
}

struct RowBuilder {
    rows: Vec<BoundRow>,
}

impl RowBuilder {
    fn push(
        &mut self,
        name: &str,
        kind: &'static str,
        value: Real,
        constant: Option<(&str, f64)>,
        mut flags: Vec<(String, bool)>,
    ) {
        if kind == "floor" {
            flags.push(("exceeds_one".to_string(), value > Real::one()));
        }
        self.rows.push(BoundRow {
            name: name.to_string(),
            kind,
            value: value.to_f64(),
            value_log2: value.log2_f64(),
            shape_only: constant.is_some(),
            constant_name: constant.map(|(n, _)| n.to_string()),
            constant_value: constant.map(|(_, v)| v),
            flags: flags
                .into_iter()
                .map(|(name, holds)| Flag { name, holds })
                .collect(),
        });
    }
}

fn sqrt_cap_holds(n: usize, k: usize) -> bool {
    // k ≤ √(n / ln n)  ⟺  k² ln n ≤ n
    Real::from_u64((k * k) as u64) * ln_real(n) <= Real::from_u64(n as u64)
}

fn gap_dominates(n: usize, k: usize, strict: bool) -> bool {
    // 2k²(n-k) vs (n-2k)², exactly in integers.
    let lhs = 2 * (k as i128) * (k as i128) * (n as i128 - k as i128);
    let rhs = (n as i128 - 2 * k as i128).pow(2);
    if strict {
        lhs < rhs
    } else {
        lhs <= rhs
    }
}

fn gap_dominates_shifted(n: usize, k: usize) -> bool {
    // 2k²(n-k-1) < (n-2k-1)²
    let lhs = 2 * (k as i128) * (k as i128) * (n as i128 - k as i128 - 1);
    let rhs = (n as i128 - 2 * k as i128 - 1).pow(2);
    lhs < rhs
}

/// Evaluates the threshold catalog at `(n, k)`, with the overlap family
/// included when `h` is given (`k < h < 2k`) and the almost-coloring family
/// when `eps` is given.
pub fn bounds_report(
    n: usize,
    k: usize,
    h: Option<usize>,
    eps: Option<f64>,
    constants: &UserConstants,
) -> Result<BoundReport, BoundsError> {
    if k < 1 {
        return Err(BoundsError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(BoundsError::EdgeTooSmall { n, k });
    }
    if let Some(h) = h {
        if h <= k || h >= 2 * k {
            return Err(BoundsError::OverlapOutOfRange { h, k });
        }
    }
    if let Some(eps) = eps {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(BoundsError::EpsOutOfRange { eps });
        }
    }

    let mut b = RowBuilder { rows: Vec::new() };
    let n_r = Real::from_u64(n as u64);
    let ln_n = ln_real(n);
    let sigma = Real::from_biguint(&binomial_tail_below(n, k));
    let c_main = binom_real(n - 1, k - 1);
    let e = e_pow(1);
    let ln2 = Real::from_u64(2).ln();
    let region = |min_k: usize| {
        vec![
            ("edge_size_at_least_30".to_string(), n >= 30),
            (
                format!("balance_at_least_{min_k}"),
                k >= min_k,
            ),
            ("balance_within_sqrt_cap".to_string(), sqrt_cap_holds(n, k)),
        ]
    };

    // Classical unbalanced thresholds (one vertex of each color suffices).
    b.push("plain_halving_floor", "floor", Real::pow2(n as i64 - 1), None, vec![]);
    let plain_slack = constants.get("plain_ceiling_slack");
    b.push(
        "plain_halving_ceiling",
        "ceiling",
        &e * &ln2 / Real::from_u64(4)
            * &n_r
            * &n_r
            * Real::pow2(n as i64)
            * Real::from_f64(plain_slack),
        Some(("plain_ceiling_slack", plain_slack)),
        vec![],
    );
    b.push(
        "reorder_floor",
        "floor",
        Real::from_f64(0.1) * Real::pow2(n as i64) * (&n_r / &ln_n).sqrt(),
        None,
        vec![],
    );

    // Balanced thresholds.
    b.push(
        "balanced_naive_floor",
        "floor",
        Real::pow2(n as i64 - 1) / &sigma,
        None,
        vec![],
    );
    let balanced_slack = constants.get("balanced_ceiling_slack");
    b.push(
        "balanced_ceiling",
        "ceiling",
        &e * &ln2 / Real::from_u64(4)
            * &n_r
            * &n_r
            * Real::pow2(n as i64)
            / &sigma
            * Real::from_f64(balanced_slack),
        Some(("balanced_ceiling_slack", balanced_slack)),
        vec![],
    );
    let tail_c = constants.get("balanced_tail_c");
    b.push(
        "balanced_tail_floor",
        "floor",
        Real::from_f64(tail_c)
            * (&n_r / &ln_n).sqrt()
            * Real::from_ratio(-(k as i64), 2).exp()
            / Real::from_u64((2 * k - 1) as u64).sqrt()
            * Real::pow2(n as i64 - k as i64)
            / binom_real(n, k - 1),
        Some(("balanced_tail_c", tail_c)),
        vec![],
    );
    b.push(
        "balanced_quartic_floor",
        "floor",
        Real::from_f64(0.19) * n_r.sqrt().sqrt() * Real::pow2(n as i64 - 1) / &c_main,
        None,
        vec![],
    );
    b.push(
        "balanced_sqrt_floor",
        "floor",
        random_order_edge_budget(n, k),
        None,
        region(2),
    );

    // Almost-coloring thresholds: a vanishing fraction of edges may be
    // dropped before the balanced coloring must exist.
    if let Some(eps) = eps {
        let eps_r = Real::from_f64(eps);
        let trivial_hi = &sigma * Real::pow2(1 - n as i64);
        let almost_c = constants.get("almost_tail_c");
        b.push(
            "almost_naive_floor",
            "floor",
            Real::from_f64(almost_c)
                * &eps_r
                * (&n_r / &ln_n)
                * Real::pow2(2 * n as i64)
                / (&sigma * &sigma)
                * Real::pow2(-2 * k as i64)
                * Real::from_i64(-(k as i64)).exp()
                / Real::from_u64((2 * k - 1) as u64),
            Some(("almost_tail_c", almost_c)),
            vec![(
                "below_trivial_threshold".to_string(),
                eps_r < trivial_hi,
            )],
        );
        b.push(
            "almost_sqrt_floor",
            "floor",
            Real::from_f64(0.0361) * &eps_r * n_r.sqrt() * Real::pow2(2 * n as i64 - 2)
                / (&c_main * &c_main),
            None,
            vec![
                ("edge_size_at_least_14".to_string(), n >= 14),
                ("balance_at_least_2".to_string(), k >= 2),
                (
                    "gap_dominates_balance".to_string(),
                    gap_dominates(n, k, false),
                ),
            ],
        );
        let window = epsilon_window(n, k, constants.get("window_r"), constants.get("window_s"))?;
        let log_arg = Real::from_u64(2 * k as u64) * &ln_n + ln_n.ln();
        let mut flags = region(2);
        flags.push(("window_feasible".to_string(), window.feasible));
        flags.push((
            "eps_in_window".to_string(),
            eps > window.lo && eps < window.hi,
        ));
        b.push(
            "almost_window_floor",
            "floor",
            Real::pow2(2 * n as i64 - 2) / (Real::from_u64(3) * e_pow(35))
                / (&c_main * &c_main)
                * (&n_r / log_arg)
                * &eps_r
                / Real::from_u64(2),
            None,
            flags,
        );
    }

    // Overlap thresholds: families whose intersecting edges share at least
    // h vertices.
    if let Some(h) = h {
        let overlap_c = constants.get("overlap_power_c");
        let power_base =
            Real::from_u64(3 * n as u64) / (Real::from_u64(2 * h as u64) * &ln_n);
        b.push(
            "overlap_power_floor",
            "floor",
            Real::from_f64(overlap_c)
                * (power_base.ln() * Real::from_u64(h as u64) / Real::from_u64(3)).exp()
                * Real::pow2(n as i64 - 1)
                / binom_real(n, k - 1),
            Some(("overlap_power_c", overlap_c)),
            vec![],
        );
        let pair_weight = Real::pow2((h - k) as i64)
            * Real::from_u64((h - k + 1) as u64)
            * &c_main
            * binom_real(n - 1, 2 * k - 1 - h);
        b.push(
            "overlap_quartic_floor",
            "floor",
            Real::from_f64(0.19) * n_r.sqrt().sqrt() * Real::pow2(n as i64 - 1)
                / pair_weight.sqrt(),
            None,
            vec![(
                "gap_dominates_balance".to_string(),
                gap_dominates(n, k, true),
            )],
        );
        b.push(
            "overlap_sqrt_floor",
            "floor",
            random_order_edge_budget_overlap(n, k, h),
            None,
            region(3),
        );
    }

    // Simple-family thresholds: edges pairwise share at most one vertex.
    let c_sparse = binom_real(n - 2, k - 1);
    b.push(
        "sparse_quartic_floor",
        "floor",
        Real::from_f64(0.19).powi(2) / (Real::from_u64(8) * &e)
            * Real::pow2(2 * n as i64 - 2)
            / ((&n_r - Real::one()) * (&n_r - Real::one()).sqrt() * &c_sparse * &c_sparse),
        None,
        vec![(
            "gap_dominates_balance_sparse".to_string(),
            gap_dominates_shifted(n, k),
        )],
    );
    if n >= 3 {
        b.push(
            "sparse_sqrt_floor",
            "floor",
            Real::from_u64(25) / (Real::from_u64(18) * e_pow(52))
                * Real::pow2(2 * (n as i64 - 1))
                / (Real::from_u64(k as u64)
                    * (&n_r - Real::one())
                    * ln_real(n - 1)
                    * &c_sparse
                    * &c_sparse),
            None,
            region(2),
        );
    }

    // Scale of the largest per-edge intersection count the local argument
    // tolerates; the usable cap is this value minus one.
    let scale = dependency_scale(n, k);
    let mut flags = region(2);
    flags.push((
        "supports_positive_degree".to_string(),
        scale > Real::one(),
    ));
    b.push("degree_cap_scale", "threshold", scale, None, flags);

    Ok(BoundReport {
        n,
        k,
        h,
        eps,
        rows: b.rows,
    })
}

/// The edge-loss window in which the almost-coloring question is
/// non-trivial, with the stricter ceiling under which the plain balanced
/// floor stays the best known.
#[derive(Debug, Clone, Serialize)]
pub struct EpsilonWindow {
    pub n: usize,
    pub k: usize,
    /// Below this, losing edges cannot help: `R·Σ·2^{1-n}/n²`.
    pub lo: f64,
    /// At or above `Σ·2^{1-n}` every hypergraph colors trivially.
    pub hi: f64,
    /// Under `S·Σ·2^{1-n}/√n` the plain floor is still the best bound.
    pub remark_hi: f64,
    pub lo_log2: f64,
    pub hi_log2: f64,
    pub remark_hi_log2: f64,
    /// log2 of the window's lower comparison scale `I = R·Σ·2^{-n-1}/n²`.
    pub i_log2: f64,
    /// log2 of the dense-edge comparison scale `J = (2e^30/9)/(2^n n ln n)`.
    pub j_log2: f64,
    /// Whether `I ≥ J`, i.e. the window bound applies at this `n`.
    pub feasible: bool,
}

/// Computes the meaningful edge-loss window at `(n, k)` with stand-ins
/// `r_const` and `s_const` for the unspecified window constants.
pub fn epsilon_window(
    n: usize,
    k: usize,
    r_const: f64,
    s_const: f64,
) -> Result<EpsilonWindow, BoundsError> {
    if k < 1 {
        return Err(BoundsError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(BoundsError::EdgeTooSmall { n, k });
    }
    let sigma = Real::from_biguint(&formulas::binomial_tail_below(n, k));
    let n_r = Real::from_u64(n as u64);
    let hi = &sigma * Real::pow2(1 - n as i64);
    let lo = Real::from_f64(r_const) * &hi / (&n_r * &n_r);
    let remark_hi = Real::from_f64(s_const) * &hi / n_r.sqrt();
    let i = Real::from_f64(r_const) * &sigma * Real::pow2(-(n as i64) - 1) / (&n_r * &n_r);
    let j = Real::from_u64(2) * e_pow(30) / Real::from_u64(9)
        / (Real::pow2(n as i64) * &n_r * ln_real(n));
    Ok(EpsilonWindow {
        n,
        k,
        lo: lo.to_f64(),
        hi: hi.to_f64(),
        remark_hi: remark_hi.to_f64(),
        lo_log2: lo.log2_f64(),
        hi_log2: hi.log2_f64(),
        remark_hi_log2: remark_hi.log2_f64(),
        i_log2: i.log2_f64(),
        j_log2: j.log2_f64(),
        feasible: i >= j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_floor_value_is_a_power_of_two() {
        let report = bounds_report(5, 1, None, None, &UserConstants::new()).unwrap();
        let row = report.row("plain_halving_floor").unwrap();
        assert_eq!(row.value, 16.0);
        assert_eq!(row.value_log2, 4.0);
    }

    #[test]
    fn main_floor_is_valid_but_vacuous_at_the_region_corner() {
        let report = bounds_report(30, 2, None, None, &UserConstants::new()).unwrap();
        let row = report.row("balanced_sqrt_floor").unwrap();
        assert!(row.valid());
        assert_eq!(row.flag("exceeds_one"), Some(false));
        assert!((row.value - 2.3835611841807514e-3).abs() < 1e-12);
    }

    #[test]
    fn main_floor_turns_non_vacuous_away_from_the_region_corner() {
        let report = bounds_report(500, 4, None, None, &UserConstants::new()).unwrap();
        let sqrt_row = report.row("balanced_sqrt_floor").unwrap();
        assert!(sqrt_row.valid());
        assert_eq!(sqrt_row.flag("exceeds_one"), Some(true));
        assert!(sqrt_row.value > 1e130);
        assert!((sqrt_row.value.log2() - sqrt_row.value_log2).abs() < 1e-9);
    }

    #[test]
    fn overlap_rows_require_a_meaningful_overlap() {
        assert_eq!(
            bounds_report(30, 2, Some(4), None, &UserConstants::new()),
            Err(BoundsError::OverlapOutOfRange { h: 4, k: 2 })
        );
        let report = bounds_report(30, 2, Some(3), None, &UserConstants::new()).unwrap();
        let row = report.row("overlap_sqrt_floor").unwrap();
        // Improves on the base floor: the pair weight is below C(n-1,k-1)².
        let base = report.row("balanced_sqrt_floor").unwrap();
        assert!(row.value_log2 > base.value_log2);
    }

    #[test]
    fn shape_only_rows_record_their_stand_in() {
        let constants = UserConstants::new().with("balanced_tail_c", 0.5);
        let report = bounds_report(40, 2, None, None, &constants).unwrap();
        let row = report.row("balanced_tail_floor").unwrap();
        assert!(row.shape_only);
        assert_eq!(row.constant_value, Some(0.5));
        let doubled = bounds_report(
            40,
            2,
            None,
            None,
            &UserConstants::new().with("balanced_tail_c", 1.0),
        )
        .unwrap();
        let full = doubled.row("balanced_tail_floor").unwrap();
        assert!((full.value / row.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn epsilon_window_matches_the_single_color_shortfall_case() {
        let w = epsilon_window(10, 1, 1.0, 1.0).unwrap();
        assert!((w.hi - 2f64.powi(-9)).abs() < 1e-18);
        assert!((w.lo - 2f64.powi(-9) / 100.0).abs() < 1e-20);
        assert!(w.remark_hi > w.lo && w.remark_hi < w.hi);
    }

    #[test]
    fn eps_rows_flag_the_trivial_threshold() {
        let eps_small = 1e-9;
        let report =
            bounds_report(30, 2, None, Some(eps_small), &UserConstants::new()).unwrap();
        let row = report.row("almost_naive_floor").unwrap();
        assert_eq!(row.flag("below_trivial_threshold"), Some(true));
        // Σ·2^{1-n} at (30,2) is 31·2^{-29} ≈ 5.8e-8, so 1e-7 is above it.
        let report =
            bounds_report(30, 2, None, Some(1e-7), &UserConstants::new()).unwrap();
        let row = report.row("almost_naive_floor").unwrap();
        assert_eq!(row.flag("below_trivial_threshold"), Some(false));
    }

    #[test]
    fn report_serializes_to_both_formats() {
        let report = bounds_report(30, 2, Some(3), Some(1e-8), &UserConstants::new()).unwrap();
        let json = report.to_json();
        assert!(json.contains("balanced_sqrt_floor"));
        let csv = report.to_csv();
        assert!(csv.lines().count() > 10);
        assert!(csv.starts_with("name,kind,"));
    }
}
