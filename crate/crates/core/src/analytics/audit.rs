//! Step-by-step audits of the random-ordering failure analysis.
//!
//! The proof that a hypergraph below the edge budget admits a clean
//! numeration walks through a chain of inequalities: per-edge and per-pair
//! probabilities are capped by closed forms, sums are capped by geometric
//! series, and everything is finally summed against `1`. Each step is a
//! concrete inequality between two computable quantities; this module
//! re-evaluates every one of them at a requested parameter point in 256-bit
//! arithmetic and reports, per step, the two sides (as base-2 logs) and
//! whether the step holds.
//!
//! Two kinds of rows deserve care:
//!
//! * *identities* — e.g. the edge budget is engineered so that
//!   `budget²·pair_rate` equals its cap exactly; the audited value uses the
//!   largest integer strictly below the budget, which keeps the inequality
//!   strict but leaves almost no margin. Comparisons therefore allow a
//!   relative slack of `2^-80`, far below any genuine violation.
//! * *vacuous rows* — a ratio over adjacent terms of a one-term sum (k = 1)
//!   compares nothing and holds trivially; these carry an explanatory note.
//!
//! Out-of-region points (n < 30, k = 1, or k above the square-root cap) are
//! still evaluated; the report's region flags say which assumptions the
//! chain's derivation needed. Rows whose factors lose meaning entirely
//! (e.g. `n ≤ 5k`) are reported as not holding, with a note.

use super::bounds::Flag;
use super::formulas::{
    badpair_upper_real, binom_real, dense_components_real, dependency_scale, e_pow,
    factorial, ln_real, overlap_pair_rate_closed, pair_rate_base_closed,
    pair_rate_eps_closed, pair_rate_factor_closed, preset_p_real,
    random_order_edge_budget, random_order_edge_budget_overlap,
};
use super::real::Real;
use crate::ordering::DensityPreset;
use serde::Serialize;
use thiserror::Error;

/// Errors for the audits.
#[derive(Debug, Error, PartialEq)]
pub enum AuditError {
    #[error("balance requirement k must be at least 1")]
    ZeroBalance,
    #[error("edge size {n} cannot hold {k} vertices of each color on both ends")]
    EdgeTooSmall { n: usize, k: usize },
    #[error("overlap {h} outside the meaningful range k < h < 2k for k = {k}")]
    OverlapOutOfRange { h: usize, k: usize },
}

/// The geometric-series and dependency factors of the failure analysis.
#[derive(Debug, Clone, Serialize)]
pub struct FactorSet {
    pub n: usize,
    pub k: usize,
    /// `k/(n-3k)`: adjacent-term ratio cap in the split sums.
    pub alpha: f64,
    /// `4k/(n-k)`: adjacent-term ratio across the shared-block split.
    pub gamma: f64,
    /// `2k/(n-2k)`: adjacent-term ratio in the gap-tail sum.
    pub epsilon_factor: f64,
    /// `(n-2k)²/(2k²(n-k))`: floor for the overlap-monotonicity ratio.
    pub beta: f64,
    /// `(1-alpha)^{-2}·(1-gamma)^{-1}`.
    pub r_factor: f64,
    /// `(1-epsilon_factor)^{-1}`.
    pub t_factor: f64,
    /// True when `n ≤ 3k`, where the ratios above lose their meaning.
    pub degenerate: bool,
}

/// Computes the analysis factors at `(n, k)`.
pub fn factor_audit(n: usize, k: usize) -> Result<FactorSet, AuditError> {
    if k < 1 {
        return Err(AuditError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(AuditError::EdgeTooSmall { n, k });
    }
    let nf = n as f64;
    let kf = k as f64;
    let alpha = kf / (nf - 3.0 * kf);
    let gamma = 4.0 * kf / (nf - kf);
    let epsilon_factor = 2.0 * kf / (nf - 2.0 * kf);
    let beta = (nf - 2.0 * kf).powi(2) / (2.0 * kf * kf * (nf - kf));
    Ok(FactorSet {
        n,
        k,
        alpha,
        gamma,
        epsilon_factor,
        beta,
        r_factor: (1.0 - alpha).powi(-2) * (1.0 - gamma).powi(-1),
        t_factor: (1.0 - epsilon_factor).powi(-1),
        degenerate: n <= 3 * k,
    })
}

/// One audited inequality: `lhs ≤ rhs`.
#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub name: String,
    pub lhs_log2: f64,
    pub rhs_log2: f64,
    pub holds: bool,
    pub note: Option<String>,
}

impl AuditRow {
    fn check(name: &str, lhs: &Real, rhs: &Real) -> Self {
        AuditRow {
            name: name.to_string(),
            lhs_log2: lhs.log2_f64(),
            rhs_log2: rhs.log2_f64(),
            holds: lhs.le_with_slack(rhs, -80),
            note: None,
        }
    }

    fn vacuous(name: &str, note: &str) -> Self {
        AuditRow {
            name: name.to_string(),
            lhs_log2: f64::NAN,
            rhs_log2: f64::NAN,
            holds: true,
            note: Some(note.to_string()),
        }
    }

    fn inapplicable(name: &str, note: &str) -> Self {
        AuditRow {
            name: name.to_string(),
            lhs_log2: f64::NAN,
            rhs_log2: f64::NAN,
            holds: false,
            note: Some(note.to_string()),
        }
    }
}

/// Every audited step at one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub k: usize,
    pub h: Option<usize>,
    pub region: Vec<Flag>,
    /// log2 of the audited edge count (largest integer below the budget).
    pub edge_count_log2: f64,
    pub overlap_edge_count_log2: Option<f64>,
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn row(&self, name: &str) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,lhs_log2,rhs_log2,holds,note\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.name,
                r.lhs_log2,
                r.rhs_log2,
                r.holds,
                r.note.as_deref().unwrap_or("")
            ));
        }
        out
    }
}

/// Largest integer strictly below `x`, as a 256-bit value.
fn strict_floor(x: &Real) -> Real {
    let f = x.floor();
    if &f == x {
        f - Real::one()
    } else {
        f
    }
}

/// Closed-form cap on the low-tail dense component at the base tilt:
/// `e^13·C(n-1,k-1)·2^{-n}·(nk/(n-k+1))·n^{-2k}`.
fn dense_low_closed(n: usize, k: usize) -> Real {
    e_pow(13)
        * binom_real(n - 1, k - 1)
        * Real::pow2(-(n as i64))
        * (Real::from_u64((n * k) as u64) / Real::from_u64((n - k + 1) as u64))
        * Real::from_u64(n as u64).powi(2 * k).recip()
}

/// Closed-form cap on the gap-tail dense component at the base tilt:
/// `e^26·T·C(n-1,k-1)·2^{-n}·n^k·((k-1)!/(2k-1)!)·n^{-2k}`. Needs `n > 2k`.
fn dense_gap_closed(n: usize, k: usize, t_factor: &Real) -> Real {
    e_pow(26)
        * t_factor
        * binom_real(n - 1, k - 1)
        * Real::pow2(-(n as i64))
        * Real::from_u64(n as u64).powi(k)
        * Real::from_biguint(&factorial(k - 1))
        / Real::from_biguint(&factorial(2 * k - 1))
        * Real::from_u64(n as u64).powi(2 * k).recip()
}

fn max_badpair_over_overlap(n: usize, k: usize, h_from: usize, p: &Real) -> Real {
    let mut max = Real::zero();
    for h in h_from..=(2 * k - 1) {
        let v = badpair_upper_real(n, k, h, p);
        max = max.max(&v);
    }
    max
}

/// Audits every inequality step of the failure analysis at `(n, k)`, and
/// additionally the overlap-family steps when `h` is given.
pub fn inequality_audit(
    n: usize,
    k: usize,
    h: Option<usize>,
) -> Result<AuditReport, AuditError> {
    if k < 1 {
        return Err(AuditError::ZeroBalance);
    }
    if n < 2 * k {
        return Err(AuditError::EdgeTooSmall { n, k });
    }
    if let Some(h) = h {
        if h <= k || h >= 2 * k {
            return Err(AuditError::OverlapOutOfRange { h, k });
        }
    }

    let region = vec![
        Flag {
            name: "edge_size_at_least_30".to_string(),
            holds: n >= 30,
        },
        Flag {
            name: "balance_at_least_2".to_string(),
            holds: k >= 2,
        },
        Flag {
            name: "balance_within_sqrt_cap".to_string(),
            holds: Real::from_u64((k * k) as u64) * ln_real(n) <= Real::from_u64(n as u64),
        },
    ];

    let n_r = Real::from_u64(n as u64);
    let k_r = Real::from_u64(k as u64);
    let one = Real::one();
    let p1 = preset_p_real(DensityPreset::Base, n, k);
    let p2 = preset_p_real(DensityPreset::Eps, n, k);
    let d1 = (&one - &p1) / Real::from_u64(2);
    let (low1, gap1) = dense_components_real(n, k, &p1);
    let (low2, gap2) = dense_components_real(n, k, &p2);
    let dense1 = &low1 + &gap1;
    let budget = random_order_edge_budget(n, k);
    let m = strict_floor(&budget);
    let c_main = binom_real(n - 1, k - 1);
    let inv_45e13 = (Real::from_u64(45) * e_pow(13)).recip();
    let fail_pairs_cap = Real::from_u64(864) / e_pow(22);
    let rate_base = pair_rate_base_closed(n, k);

    let mut rows = Vec::new();

    // Tilt cap: the exponential the chain repeatedly absorbs.
    rows.push(AuditRow::check(
        "weight_tilt_cap",
        &(Real::from_u64(2) * &p1 * &k_r / (&one - &p1)).exp(),
        &e_pow(13),
    ));

    // Low tail capped by its top term.
    rows.push(AuditRow::check(
        "low_tail_top_term_cap",
        &low1,
        &(&n_r * &c_main * &k_r * d1.powi(n - k + 1) * (&one - &d1).powi(k - 1)
            / Real::from_u64((n - k + 1) as u64)),
    ));

    // Budget times the top term collapses to an explicit expression.
    let s1 = Real::from_u64(6) / e_pow(26)
        * (&n_r / (&k_r * ln_real(n))).sqrt()
        * (&n_r * &k_r / Real::from_u64((n - k + 1) as u64))
        * n_r.powi(2 * k).recip()
        * (Real::from_u64(2) * &p1 * Real::from_u64((k - 1) as u64) / (&one - &p1)).exp();
    rows.push(AuditRow::check("low_tail_budget_cap", &s1, &inv_45e13));

    rows.push(AuditRow::check(
        "low_tail_mass_cap",
        &(&m * &low1),
        &inv_45e13,
    ));

    rows.push(AuditRow::check(
        "low_tail_closed_cap",
        &low1,
        &dense_low_closed(n, k),
    ));

    // Gap-tail term ratios against the geometric factor.
    let t_factor_ok = n > 2 * k;
    let eps_f = if t_factor_ok {
        Some(Real::from_u64(2 * k as u64) / Real::from_u64((n - 2 * k) as u64))
    } else {
        None
    };
    let t_factor = eps_f.as_ref().map(|e| (&one - e).recip());
    if k == 1 {
        rows.push(AuditRow::vacuous(
            "gap_ratio_cap",
            "single-term sum has no adjacent ratios",
        ));
    } else if let Some(eps_f) = &eps_f {
        let mut max_ratio = Real::zero();
        for i in 0..k - 1 {
            let ratio = Real::from_u64((i + k + 1) as u64) * (&one - &p1)
                / (Real::from_u64((n - k - i) as u64) * (&one + &p1));
            max_ratio = max_ratio.max(&ratio);
        }
        rows.push(AuditRow::check("gap_ratio_cap", &max_ratio, eps_f));
    } else {
        rows.push(AuditRow::inapplicable(
            "gap_ratio_cap",
            "geometric factor needs n > 2k",
        ));
    }

    match &t_factor {
        Some(t) => {
            rows.push(AuditRow::check(
                "gap_tail_closed_cap",
                &gap1,
                &dense_gap_closed(n, k, t),
            ));
            rows.push(AuditRow::check(
                "gap_mass_cap",
                &(&m * &gap1),
                &(Real::from_ratio(3, 5) * t),
            ));
            rows.push(AuditRow::check(
                "dense_mass_cap",
                &(&m * &dense1),
                &(&inv_45e13 + Real::from_ratio(3, 5) * t),
            ));
        }
        None => {
            for name in ["gap_tail_closed_cap", "gap_mass_cap", "dense_mass_cap"] {
                rows.push(AuditRow::inapplicable(name, "geometric factor needs n > 2k"));
            }
        }
    }

    rows.push(AuditRow::check(
        "dense_mass_final_cap",
        &(&m * &dense1),
        &(&inv_45e13 + Real::from_ratio(4, 5)),
    ));

    // Factor caps.
    let factors_ok = n > 3 * k;
    let split_ok = n > 5 * k;
    if factors_ok {
        let alpha = &k_r / Real::from_u64((n - 3 * k) as u64);
        let gamma = Real::from_u64(4 * k as u64) / Real::from_u64((n - k) as u64);
        rows.push(AuditRow::check("alpha_cap", &alpha, &Real::from_ratio(3, 20)));
        rows.push(AuditRow::check("gamma_cap", &gamma, &Real::from_ratio(1, 2)));
        if split_ok {
            let r_factor = ((&one - &alpha) * (&one - &alpha)).recip() * (&one - &gamma).recip();
            rows.push(AuditRow::check("r_cap", &r_factor, &Real::from_u64(3)));
        } else {
            rows.push(AuditRow::inapplicable("r_cap", "factor needs n > 5k"));
        }
    } else {
        rows.push(AuditRow::inapplicable("alpha_cap", "factor needs n > 3k"));
        rows.push(AuditRow::inapplicable("gamma_cap", "factor needs n > 3k"));
        rows.push(AuditRow::inapplicable("r_cap", "factor needs n > 5k"));
    }
    match (&eps_f, &t_factor) {
        (Some(eps_f), Some(t)) => {
            rows.push(AuditRow::check("epsilon_cap", eps_f, &Real::from_ratio(1, 4)));
            rows.push(AuditRow::check("t_cap", t, &Real::from_ratio(4, 3)));
        }
        _ => {
            rows.push(AuditRow::inapplicable("epsilon_cap", "factor needs n > 2k"));
            rows.push(AuditRow::inapplicable("t_cap", "factor needs n > 2k"));
        }
    }
    let beta_ok = t_factor_ok;
    let beta = if beta_ok {
        Some(
            Real::from_u64(((n - 2 * k) * (n - 2 * k)) as u64)
                / (Real::from_u64(2 * k as u64) * &k_r * Real::from_u64((n - k) as u64)),
        )
    } else {
        None
    };
    match &beta {
        Some(beta) => rows.push(AuditRow::check("beta_above_one", &one, beta)),
        None => rows.push(AuditRow::inapplicable("beta_above_one", "factor needs n > 2k")),
    }

    // Ratio floors behind the pair-rate simplification.
    if k == 1 {
        rows.push(AuditRow::vacuous(
            "pair_overlap_ratio_floor",
            "no overlap range to compare at k = 1",
        ));
        rows.push(AuditRow::vacuous(
            "pair_order_ratio_floor",
            "single-term sum has no adjacent ratios",
        ));
    } else {
        match &beta {
            Some(beta) => {
                let mut min_ratio: Option<Real> = None;
                for t in 0..=k - 1 {
                    for x in 1..=k - 1 {
                        let h_val = t + x;
                        let ratio = Real::from_u64(((n - h_val) * (n - h_val)) as u64)
                            * Real::from_u64(x as u64)
                            / (Real::from_u64(2 * (h_val + 1) as u64)
                                * Real::from_u64((k - x) as u64)
                                * Real::from_u64((n - k - x + 1) as u64));
                        min_ratio = Some(match min_ratio {
                            None => ratio,
                            Some(prev) => prev.min(&ratio),
                        });
                    }
                }
                rows.push(AuditRow::check(
                    "pair_overlap_ratio_floor",
                    beta,
                    &min_ratio.expect("k ≥ 2 yields at least one ratio"),
                ));
            }
            None => rows.push(AuditRow::inapplicable(
                "pair_overlap_ratio_floor",
                "factor needs n > 2k",
            )),
        }
        let mut min_ratio: Option<Real> = None;
        for t in 0..=k - 2 {
            let ratio = Real::from_u64((t + 1) as u64)
                * Real::from_u64(((n - t - 1) * (n - t - 1)) as u64)
                / (Real::from_u64(2 * (t + 2) as u64)
                    * Real::from_u64((k - 1 - t) as u64)
                    * Real::from_u64((n - t - k) as u64));
            min_ratio = Some(match min_ratio {
                None => ratio,
                Some(prev) => prev.min(&ratio),
            });
        }
        let inv_gamma = Real::from_u64((n - k) as u64) / Real::from_u64(4 * k as u64);
        rows.push(AuditRow::check(
            "pair_order_ratio_floor",
            &inv_gamma,
            &min_ratio.expect("k ≥ 2 yields at least one ratio"),
        ));
    }

    // Exact pair bound against its factored closed form, then the relax to
    // the final rate.
    if split_ok {
        let max_pair = max_badpair_over_overlap(n, k, 1, &p1);
        let factored = pair_rate_factor_closed(n, k, &p1);
        rows.push(AuditRow::check("pair_window_cap", &max_pair, &factored));
        rows.push(AuditRow::check("pair_rate_relax_cap", &factored, &rate_base));
    } else {
        rows.push(AuditRow::inapplicable("pair_window_cap", "factors need n > 5k"));
        rows.push(AuditRow::inapplicable("pair_rate_relax_cap", "factors need n > 5k"));
    }

    rows.push(AuditRow::check(
        "pair_union_cap",
        &(&m * &m * &rate_base),
        &fail_pairs_cap,
    ));
    rows.push(AuditRow::check(
        "fail_constants_cap",
        &(&fail_pairs_cap + &inv_45e13 + Real::from_ratio(4, 5)),
        &one,
    ));
    rows.push(AuditRow::check(
        "fail_total_cap",
        &(&m * &m * &rate_base + &m * &dense1),
        &one,
    ));

    // The almost-coloring tilt's auxiliary caps.
    rows.push(AuditRow::check(
        "window_tilt_pow_cap",
        &(&one + &p2).powi(2 * k),
        &e_pow(5),
    ));
    rows.push(AuditRow::check(
        "window_tilt_ratio_cap",
        &((&one + &p2) / (&one - &p2)).powi(k),
        &e_pow(15),
    ));
    let ln_n = ln_real(n);
    rows.push(AuditRow::check(
        "window_low_tail_cap",
        &low2,
        &(e_pow(15) / (n_r.powi(k) * Real::pow2(n as i64) * &ln_n)),
    ));
    rows.push(AuditRow::check(
        "window_gap_tail_cap",
        &gap2,
        &(Real::from_u64(2) * e_pow(30) / Real::from_u64(9)
            / (Real::pow2(n as i64) * &n_r * &ln_n)),
    ));
    rows.push(AuditRow::check(
        "window_pair_rate_cap",
        &max_badpair_over_overlap(n, k, 1, &p2),
        &pair_rate_eps_closed(n, k),
    ));

    // Dependency-degree terms: the budget scale substituted for the degree.
    let b_scale = dependency_scale(n, k);
    rows.push(AuditRow::check(
        "dependency_pair_term_cap",
        &(Real::from_u64(4) * &b_scale * &b_scale * &rate_base),
        &(Real::from_u64(200) / (Real::from_u64(3) * e_pow(22))),
    ));
    rows.push(AuditRow::check(
        "dependency_low_term_cap",
        &(Real::from_u64(2) * &b_scale * dense_low_closed(n, k)),
        &(Real::from_u64(162) * e_pow(13)).recip(),
    ));
    match &t_factor {
        Some(t) => rows.push(AuditRow::check(
            "dependency_gap_term_cap",
            &(Real::from_u64(2) * &b_scale * dense_gap_closed(n, k, t)),
            &Real::from_ratio(2, 9),
        )),
        None => rows.push(AuditRow::inapplicable(
            "dependency_gap_term_cap",
            "geometric factor needs n > 2k",
        )),
    }
    rows.push(AuditRow::check(
        "dependency_constants_cap",
        &(Real::from_u64(200) / (Real::from_u64(3) * e_pow(22))
            + (Real::from_u64(162) * e_pow(13)).recip()
            + Real::from_ratio(2, 9)),
        &Real::from_ratio(1, 4),
    ));

    // Overlap-family steps.
    let mut overlap_log2 = None;
    if let Some(h) = h {
        let overlap_budget = random_order_edge_budget_overlap(n, k, h);
        let m_h = strict_floor(&overlap_budget);
        overlap_log2 = Some(m_h.log2_f64());
        let overlap_rate = overlap_pair_rate_closed(n, k, h);
        rows.push(AuditRow::check(
            "overlap_pair_rate_cap",
            &max_badpair_over_overlap(n, k, h, &p1),
            &overlap_rate,
        ));
        rows.push(AuditRow::check(
            "overlap_pair_union_cap",
            &(&m_h * &m_h * &overlap_rate),
            &fail_pairs_cap,
        ));
        rows.push(AuditRow::check(
            "overlap_dense_mass_cap",
            &(&m_h * &dense1),
            &(&inv_45e13 + Real::from_ratio(4, 5)),
        ));
        rows.push(AuditRow::check(
            "overlap_total_cap",
            &(&m_h * &m_h * &overlap_rate + &m_h * &dense1),
            &one,
        ));
    }

    Ok(AuditReport {
        n,
        k,
        h,
        region,
        edge_count_log2: m.log2_f64(),
        overlap_edge_count_log2: overlap_log2,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_at_the_region_corner() {
        let f = factor_audit(30, 2).unwrap();
        assert!((f.alpha - 1.0 / 12.0).abs() < 1e-15);
        assert!((f.gamma - 2.0 / 7.0).abs() < 1e-15);
        assert!((f.epsilon_factor - 2.0 / 13.0).abs() < 1e-15);
        assert!((f.beta - 676.0 / 224.0).abs() < 1e-12);
        assert!(!f.degenerate);
        assert!(f.r_factor <= 3.0 && f.t_factor <= 4.0 / 3.0);
    }

    #[test]
    fn degenerate_factors_are_flagged() {
        let f = factor_audit(6, 2).unwrap();
        assert!(f.degenerate);
        assert_eq!(factor_audit(3, 2), Err(AuditError::EdgeTooSmall { n: 3, k: 2 }));
    }

    #[test]
    fn every_step_holds_at_the_region_corner() {
        let report = inequality_audit(30, 2, None).unwrap();
        assert!(report.region.iter().all(|f| f.holds));
        for row in &report.rows {
            assert!(row.holds, "step {} failed: {:?}", row.name, row);
        }
        // The edge budget is below one here, so the audited count is zero.
        assert_eq!(report.edge_count_log2, f64::NEG_INFINITY);
    }

    #[test]
    fn every_step_holds_where_the_budget_is_huge() {
        let report = inequality_audit(100, 2, Some(3)).unwrap();
        assert!(report.all_hold());
        assert!(report.edge_count_log2 > 50.0);
        assert!(report.overlap_edge_count_log2.unwrap() > report.edge_count_log2);
        // The union step sits within a whisker of its cap by construction.
        let union = report.row("pair_union_cap").unwrap();
        assert!(union.rhs_log2 - union.lhs_log2 < 1e-9);
        assert!(union.holds);
    }

    #[test]
    fn out_of_region_points_still_report() {
        let report = inequality_audit(8, 2, None).unwrap();
        assert!(report.region.iter().any(|f| !f.holds));
        // n ≤ 5k: the factored pair rate does not exist.
        let row = report.row("pair_window_cap").unwrap();
        assert!(!row.holds);
        assert!(row.note.is_some());
    }

    #[test]
    fn overlap_rows_require_a_meaningful_overlap() {
        assert_eq!(
            inequality_audit(30, 2, Some(2)),
            Err(AuditError::OverlapOutOfRange { h: 2, k: 2 })
        );
        let report = inequality_audit(30, 2, Some(3)).unwrap();
        assert!(report.all_hold());
        assert!(report.row("overlap_pair_rate_cap").is_some());
    }

    #[test]
    fn reports_serialize() {
        let report = inequality_audit(30, 2, Some(3)).unwrap();
        assert!(report.to_json().contains("pair_union_cap"));
        assert!(report.to_csv().lines().count() > 30);
    }
}
