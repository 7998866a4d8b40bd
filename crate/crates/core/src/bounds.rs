//! The inequality and threshold checks over computed multiplicities, plus
//! the epsilon-table aggregation across a corpus.
//!
//! Interval semantics: every estimate carries [value - u, value + u]. A
//! check passes only when the inequality holds at the unfavorable
//! endpoints, fails only when it is violated at the favorable endpoints,
//! and is otherwise indeterminate -- never a silent pass. All comparisons
//! are exact rational comparisons.

use num::{BigRational, One, Signed, Zero};

use crate::hk::{HKFunction, KnownValue, MultiplicityEstimate};
use crate::rational::{factorial, pow_u64, rat_u64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Indeterminate,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Indeterminate => "indeterminate",
            CheckStatus::NotApplicable => "not-applicable",
        }
    }
}

/// One check row of a ring report: identifier, verdict, exact central
/// slack, and an optional note.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub id: String,
    pub status: CheckStatus,
    pub slack: Option<BigRational>,
    pub note: Option<String>,
}

impl CheckOutcome {
    fn new(id: &str, status: CheckStatus) -> Self {
        CheckOutcome {
            id: id.to_string(),
            status,
            slack: None,
            note: None,
        }
    }

    fn with_slack(mut self, slack: BigRational) -> Self {
        self.slack = Some(slack);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Certified `a <= b` over intervals.
fn interval_le(a: &MultiplicityEstimate, b_lo: &BigRational, b_hi: &BigRational) -> CheckStatus {
    if a.hi() <= *b_lo {
        CheckStatus::Pass
    } else if a.lo() > *b_hi {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    }
}

fn combine(a: CheckStatus, b: CheckStatus) -> CheckStatus {
    use CheckStatus::*;
    match (a, b) {
        (Fail, _) | (_, Fail) => Fail,
        (Pass, Pass) => Pass,
        _ => Indeterminate,
    }
}

/// lambda(R/m^[q]) >= q^d for every sample; the slack is the smallest gap.
pub fn check_lambda_floor(function: &HKFunction, d: usize) -> CheckOutcome {
    let mut min_slack: Option<BigRational> = None;
    for s in &function.samples {
        let slack = rat_u64(s.colength) - pow_u64(s.q, d);
        if min_slack.as_ref().is_none_or(|m| slack < *m) {
            min_slack = Some(slack);
        }
    }
    let slack = min_slack.unwrap_or_else(BigRational::zero);
    let status = if slack >= BigRational::zero() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    CheckOutcome::new("lambda_floor", status).with_slack(slack)
}

/// Equality lambda = q^d at any sample must coincide with regularity and
/// must then hold at every sample.
pub fn check_regularity_consistency(
    function: &HKFunction,
    d: usize,
    regular: bool,
) -> CheckOutcome {
    let eq: Vec<bool> = function
        .samples
        .iter()
        .map(|s| rat_u64(s.colength) == pow_u64(s.q, d))
        .collect();
    let any = eq.iter().any(|&b| b);
    let all = eq.iter().all(|&b| b);
    let ok = (any == regular) && (!any || all);
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    CheckOutcome::new("regularity_consistency", status)
        .with_note(if regular { "regular: all samples exact" } else { "nonregular: all samples strict" })
}

/// max(1, e/d!) <= e_HK <= e, certified at interval level.
pub fn check_sandwich(
    e_hk: &MultiplicityEstimate,
    e_r: &MultiplicityEstimate,
    d: usize,
) -> CheckOutcome {
    let dfact = factorial(d);
    let one = BigRational::one();
    let floor_lo = (e_r.lo() / dfact.clone()).max(one.clone());
    let floor_hi = (e_r.hi() / dfact.clone()).max(one.clone());
    // lower: floor <= e_hk
    let lower = if floor_hi <= e_hk.lo() {
        CheckStatus::Pass
    } else if floor_lo > e_hk.hi() {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    };
    // upper: e_hk <= e
    let upper = interval_le(e_hk, &e_r.lo(), &e_r.hi());
    let floor_central = (e_r.value.clone() / dfact).max(one);
    let slack_lower = e_hk.value.clone() - floor_central;
    let slack_upper = e_r.value.clone() - e_hk.value.clone();
    CheckOutcome::new("sandwich", combine(lower, upper))
        .with_slack(slack_lower.min(slack_upper))
}

/// Strict lower bound for nonregular rings:
/// e_HK > 1 + max(1/(p^d d!), 1/(p^d e)).
pub fn check_lower_bound_theorem(
    e_hk: &MultiplicityEstimate,
    e_r: &MultiplicityEstimate,
    d: usize,
    p: u32,
) -> CheckOutcome {
    let id = "nonregular_lower_bound";
    let pd = pow_u64(u64::from(p), d);
    let a = (pd.clone() * factorial(d)).recip();
    if e_r.lo() <= BigRational::zero() {
        return CheckOutcome::new(id, CheckStatus::Indeterminate)
            .with_note("multiplicity interval touches zero");
    }
    let one = BigRational::one();
    let thr_hi = one.clone() + a.clone().max((pd.clone() * e_r.lo()).recip());
    let thr_lo = one.clone() + a.clone().max((pd.clone() * e_r.hi()).recip());
    let status = if e_hk.lo() > thr_hi {
        CheckStatus::Pass
    } else if e_hk.hi() <= thr_lo {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    };
    let thr_central = one + a.max((pd * e_r.value.clone()).recip());
    CheckOutcome::new(id, status).with_slack(e_hk.value.clone() - thr_central)
}

/// The colength-gap inequality behind the lower bound:
/// e_HK * (lambda(R/m^[p]) - p^d) <= p^d * e(R) * (e_HK - 1).
pub fn check_colength_gap(
    e_hk: &MultiplicityEstimate,
    e_r: &MultiplicityEstimate,
    d: usize,
    p: u32,
    lambda_p: u64,
) -> CheckOutcome {
    let id = "colength_gap_bound";
    let pd = pow_u64(u64::from(p), d);
    let gap = rat_u64(lambda_p) - pd.clone();
    // LHS = e_hk * gap with gap >= 0
    let lhs_lo = e_hk.lo() * gap.clone();
    let lhs_hi = e_hk.hi() * gap.clone();
    // RHS over interval corners
    let mut rhs_corners: Vec<BigRational> = Vec::with_capacity(4);
    for e in [e_r.lo(), e_r.hi()] {
        for h in [e_hk.lo(), e_hk.hi()] {
            rhs_corners.push(pd.clone() * e.clone() * (h - BigRational::one()));
        }
    }
    let rhs_lo = rhs_corners.iter().cloned().min().unwrap();
    let rhs_hi = rhs_corners.iter().cloned().max().unwrap();
    let status = if lhs_hi <= rhs_lo {
        CheckStatus::Pass
    } else if lhs_lo > rhs_hi {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    };
    let slack = pd * e_r.value.clone() * (e_hk.value.clone() - BigRational::one())
        - e_hk.value.clone() * gap;
    CheckOutcome::new(id, status).with_slack(slack)
}

/// Advisory: e_HK <= 1 + max(1/d!, 1/e) implies Cohen-Macaulay and
/// F-rational (threshold inclusive). A ring declared non-CM while certified
/// below the threshold is a corpus inconsistency.
pub fn check_cm_threshold(
    e_hk: &MultiplicityEstimate,
    e_r: &MultiplicityEstimate,
    d: usize,
    declared_cohen_macaulay: Option<bool>,
) -> CheckOutcome {
    let id = "cm_f_rational_advisory";
    if e_r.lo() <= BigRational::zero() {
        return CheckOutcome::new(id, CheckStatus::NotApplicable)
            .with_note("multiplicity interval touches zero; no claim");
    }
    let one = BigRational::one();
    let a = factorial(d).recip();
    let thr_lo = one.clone() + a.clone().max(e_r.hi().recip());
    let thr_hi = one.clone() + a.clone().max(e_r.lo().recip());
    let thr_central = one + a.max(e_r.value.clone().recip());
    let slack = thr_central - e_hk.value.clone();
    if e_hk.hi() <= thr_lo {
        // certified below the threshold
        if declared_cohen_macaulay == Some(false) {
            return CheckOutcome::new(id, CheckStatus::Fail)
                .with_slack(slack)
                .with_note("corpus inconsistency: declared non-Cohen-Macaulay below the CM threshold");
        }
        CheckOutcome::new(id, CheckStatus::Pass)
            .with_slack(slack)
            .with_note("Cohen-Macaulay and F-rational implied")
    } else if e_hk.lo() > thr_hi {
        CheckOutcome::new(id, CheckStatus::NotApplicable)
            .with_slack(slack)
            .with_note("above threshold; no claim")
    } else {
        CheckOutcome::new(id, CheckStatus::NotApplicable)
            .with_slack(slack)
            .with_note("interval straddles threshold; no claim")
    }
}

/// Strict ratio bound e_HK > e/d! for rings with e > d!.
///
/// Only meaningful in dimension >= 2: in dimension one e(I) = e_HK(I) for
/// parameter-like ideals and the strict form fails, so d < 2 reports
/// not-applicable.
pub fn check_trivial_bound(
    e_hk: &MultiplicityEstimate,
    e_r: &MultiplicityEstimate,
    d: usize,
) -> CheckOutcome {
    let id = "trivial_bound";
    if d < 2 {
        return CheckOutcome::new(id, CheckStatus::NotApplicable)
            .with_note("not applicable: requires dimension >= 2");
    }
    let dfact = factorial(d);
    if e_r.lo() <= dfact {
        return CheckOutcome::new(id, CheckStatus::NotApplicable)
            .with_note("not applicable: e(R) <= d!");
    }
    let ratio_lo = e_r.lo() / dfact.clone();
    let ratio_hi = e_r.hi() / dfact.clone();
    let status = if e_hk.lo() > ratio_hi {
        CheckStatus::Pass
    } else if e_hk.hi() <= ratio_lo {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    };
    let slack = e_hk.value.clone() - e_r.value.clone() / dfact;
    CheckOutcome::new(id, status).with_slack(slack)
}

/// Agreement between the computed estimate and a declared reference value:
/// the reference must lie inside the estimate's interval.
pub fn check_known_value(e_hk: &MultiplicityEstimate, known: &KnownValue) -> CheckOutcome {
    let diff = (e_hk.value.clone() - known.value.clone()).abs();
    let status = if diff <= e_hk.uncertainty {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    CheckOutcome::new("known_value_agreement", status)
        .with_slack(diff)
        .with_note(known.provenance.clone())
}

/// The statistic f_I = lambda(R/I) e_HK(R) - e_HK(I), with the combined
/// interval half-width.
#[derive(Debug, Clone, PartialEq)]
pub struct FStatistic {
    pub label: String,
    pub ideal_colength: u64,
    pub value: BigRational,
    pub uncertainty: BigRational,
}

pub fn f_statistic(
    label: &str,
    ideal_colength: u64,
    ring_e_hk: &MultiplicityEstimate,
    ideal_e_hk: &MultiplicityEstimate,
) -> FStatistic {
    let lam = rat_u64(ideal_colength);
    FStatistic {
        label: label.to_string(),
        ideal_colength,
        value: lam.clone() * ring_e_hk.value.clone() - ideal_e_hk.value.clone(),
        uncertainty: lam * ring_e_hk.uncertainty.clone() + ideal_e_hk.uncertainty.clone(),
    }
}

/// For J contained in I one has f_I <= f_J; certified at interval level.
pub fn check_f_monotonicity(outer: &FStatistic, inner: &FStatistic) -> CheckOutcome {
    let id = format!("f_monotonicity:{}<={}", outer.label, inner.label);
    let outer_hi = outer.value.clone() + outer.uncertainty.clone();
    let outer_lo = outer.value.clone() - outer.uncertainty.clone();
    let inner_hi = inner.value.clone() + inner.uncertainty.clone();
    let inner_lo = inner.value.clone() - inner.uncertainty.clone();
    let status = if outer_hi <= inner_lo {
        CheckStatus::Pass
    } else if outer_lo > inner_hi {
        CheckStatus::Fail
    } else {
        CheckStatus::Indeterminate
    };
    CheckOutcome {
        id,
        status,
        slack: Some(inner.value.clone() - outer.value.clone()),
        note: None,
    }
}

/// Per-ring input to the epsilon table: only nonregular rings contribute.
#[derive(Debug, Clone)]
pub struct EpsilonEntry {
    pub ring_name: String,
    pub d: usize,
    pub p: u32,
    pub e_hk: MultiplicityEstimate,
    pub e_r: BigRational,
}

/// One (d, p) cell: the corpus minimum of e_HK - 1, the strongest
/// theorem-derived bound valid across the cell, and the reference value
/// where one is known.
#[derive(Debug, Clone)]
pub struct EpsilonCell {
    pub d: usize,
    pub p: u32,
    pub corpus_min: BigRational,
    pub min_uncertainty: BigRational,
    pub minimizing_ring: String,
    pub theorem_bound: BigRational,
    pub bound_satisfied: bool,
    pub reference: Option<BigRational>,
    pub within_tolerance: Option<bool>,
    pub note: Option<String>,
}

/// Reference minima for small dimensions; dimension 4 and higher is
/// deliberately absent (out of desk-scale reach).
pub fn epsilon_reference(d: usize) -> Option<BigRational> {
    match d {
        1 => Some(BigRational::one()),
        2 => Some(BigRational::new(1.into(), 2.into())),
        3 => Some(BigRational::new(1.into(), 3.into())),
        _ => None,
    }
}

/// Tolerance for comparing a cell minimum against its reference value:
/// exact in dimensions 1 and 2, 1/20 in dimension 3 where the reference is
/// externally sourced.
pub fn epsilon_tolerance(d: usize) -> BigRational {
    if d <= 2 {
        BigRational::zero()
    } else {
        BigRational::new(1.into(), 20.into())
    }
}

/// Aggregates nonregular corpus results into (d, p) cells.
pub fn epsilon_table(entries: &[EpsilonEntry]) -> Vec<EpsilonCell> {
    let mut keys: Vec<(usize, u32)> = entries.iter().map(|e| (e.d, e.p)).collect();
    keys.sort();
    keys.dedup();
    let mut cells = Vec::with_capacity(keys.len());
    for (d, p) in keys {
        let members: Vec<&EpsilonEntry> = entries
            .iter()
            .filter(|e| e.d == d && e.p == p)
            .collect();
        let one = BigRational::one();
        let min_entry = members
            .iter()
            .min_by(|a, b| {
                (a.e_hk.value.clone(), &a.ring_name).cmp(&(b.e_hk.value.clone(), &b.ring_name))
            })
            .unwrap();
        let corpus_min = min_entry.e_hk.value.clone() - one;
        let pd = pow_u64(u64::from(p), d);
        let theorem_bound = members
            .iter()
            .map(|e| {
                (pd.clone() * factorial(d))
                    .recip()
                    .max((pd.clone() * e.e_r.clone()).recip())
            })
            .min()
            .unwrap();
        let bound_satisfied = corpus_min > theorem_bound;
        let reference = epsilon_reference(d);
        let tolerance = epsilon_tolerance(d);
        let within_tolerance = reference
            .as_ref()
            .map(|r| (corpus_min.clone() - r.clone()).abs() <= tolerance);
        let note = reference.as_ref().map(|r| {
            format!(
                "corpus minimum vs reference {}: gap {}, tolerance {}",
                crate::rational::rat_to_string(r),
                crate::rational::rat_to_string(&(corpus_min.clone() - r.clone()).abs()),
                crate::rational::rat_to_string(&tolerance),
            )
        });
        cells.push(EpsilonCell {
            d,
            p,
            corpus_min,
            min_uncertainty: min_entry.e_hk.uncertainty.clone(),
            minimizing_ring: min_entry.ring_name.clone(),
            theorem_bound,
            bound_satisfied,
            reference,
            within_tolerance,
            note,
        });
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hk::EstimateMethod;
    use crate::rational::{rat, rat_int};

    fn exact(v: BigRational) -> MultiplicityEstimate {
        MultiplicityEstimate::exact(v, EstimateMethod::Richardson)
    }

    fn approx(v: BigRational, u: BigRational) -> MultiplicityEstimate {
        MultiplicityEstimate {
            value: v,
            method: EstimateMethod::Richardson,
            uncertainty: u,
            samples_used: 2,
        }
    }

    #[test]
    fn sandwich_cases() {
        // (3, 4, 2): 2 <= 3 <= 4
        let c = check_sandwich(&exact(rat_int(3)), &exact(rat_int(4)), 2);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(1)));

        // regular: zero slack
        let c = check_sandwich(&exact(rat_int(1)), &exact(rat_int(1)), 2);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(0)));

        // the quadric cone: max(1, 1) <= 3/2 <= 2
        let c = check_sandwich(&exact(rat(3, 2)), &exact(rat_int(2)), 2);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat(1, 2)));

        // straddling interval is indeterminate, not a silent pass
        let c = check_sandwich(&approx(rat_int(2), rat(1, 3)), &exact(rat_int(2)), 1);
        assert_eq!(c.status, CheckStatus::Indeterminate);

        // certain violation fails
        let c = check_sandwich(&exact(rat_int(5)), &exact(rat_int(4)), 2);
        assert_eq!(c.status, CheckStatus::Fail);
    }

    #[test]
    fn lower_bound_theorem_cases() {
        // quadric cone: threshold 1 + 1/18, slack 4/9
        let c = check_lower_bound_theorem(&exact(rat(3, 2)), &exact(rat_int(2)), 2, 3);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat(4, 9)));

        // the boundary case fails the strict inequality
        let boundary = rat_int(1) + rat(1, 18);
        let c = check_lower_bound_theorem(&exact(boundary), &exact(rat_int(2)), 2, 3);
        assert_eq!(c.status, CheckStatus::Fail);

        // one-dimensional node: e_HK = 2 against 1 + max(1/3, 1/6)
        let c = check_lower_bound_theorem(&exact(rat_int(2)), &exact(rat_int(2)), 1, 3);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat(2, 3)));
    }

    #[test]
    fn cm_threshold_cases() {
        // the quadric cone sits exactly on the inclusive boundary
        let c = check_cm_threshold(&exact(rat(3, 2)), &exact(rat_int(2)), 2, Some(true));
        assert_eq!(c.status, CheckStatus::Pass);

        // regular ring: 1 <= anything
        let c = check_cm_threshold(&exact(rat_int(1)), &exact(rat_int(1)), 3, Some(true));
        assert_eq!(c.status, CheckStatus::Pass);

        // above threshold: no claim either way
        let c = check_cm_threshold(&exact(rat_int(2)), &exact(rat_int(2)), 2, Some(false));
        assert_eq!(c.status, CheckStatus::NotApplicable);

        // declared non-CM while certified below the threshold: inconsistency
        let c = check_cm_threshold(&exact(rat(3, 2)), &exact(rat_int(2)), 2, Some(false));
        assert_eq!(c.status, CheckStatus::Fail);
    }

    #[test]
    fn trivial_bound_cases() {
        // e = 4, d = 2, e_HK = 3: 3 > 2
        let c = check_trivial_bound(&exact(rat_int(3)), &exact(rat_int(4)), 2);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(1)));

        // e <= d! is not applicable
        let c = check_trivial_bound(&exact(rat(3, 2)), &exact(rat_int(2)), 2);
        assert_eq!(c.status, CheckStatus::NotApplicable);

        // a hypothetical violation is reported as a failure
        let c = check_trivial_bound(&exact(rat(7, 2)), &exact(rat_int(7)), 2);
        assert_eq!(c.status, CheckStatus::Fail);

        // dimension one is excluded
        let c = check_trivial_bound(&exact(rat_int(2)), &exact(rat_int(2)), 1);
        assert_eq!(c.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn colength_gap_cases() {
        // quadric cone: 3/2 * (13 - 9) = 6 <= 9 * 2 * 1/2 = 9
        let c = check_colength_gap(&exact(rat(3, 2)), &exact(rat_int(2)), 2, 3, 13);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(3)));

        // double line over F_2: equality, still a pass for <=
        let c = check_colength_gap(&exact(rat_int(2)), &exact(rat_int(2)), 1, 2, 4);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(0)));
    }

    #[test]
    fn f_statistics_and_monotonicity() {
        // regular plane: f_m = 1*1 - 1 = 0, f_{m^2} = 3*1 - 3 = 0
        let one = exact(rat_int(1));
        let f_m = f_statistic("m", 1, &one, &exact(rat_int(1)));
        assert_eq!(f_m.value, rat_int(0));
        let f_m2 = f_statistic("m^2", 3, &one, &exact(rat_int(3)));
        assert_eq!(f_m2.value, rat_int(0));
        let c = check_f_monotonicity(&f_m, &f_m2);
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(c.slack, Some(rat_int(0)));

        // quadric cone: f_m = 0, f_{m^[3]} = 13*(3/2) - 27/2 = 6
        let ring = exact(rat(3, 2));
        let f_m = f_statistic("m", 1, &ring, &exact(rat(3, 2)));
        assert_eq!(f_m.value, rat_int(0));
        let f_frob = f_statistic("m^[3]", 13, &ring, &exact(rat(27, 2)));
        assert_eq!(f_frob.value, rat_int(6));
        assert_eq!(check_f_monotonicity(&f_m, &f_frob).status, CheckStatus::Pass);
    }

    #[test]
    fn known_value_agreement() {
        let known = KnownValue {
            value: rat(3, 2),
            provenance: "classification of small dimension-2 multiplicities".to_string(),
        };
        let c = check_known_value(&exact(rat(3, 2)), &known);
        assert_eq!(c.status, CheckStatus::Pass);
        let c = check_known_value(&approx(rat(14, 9), rat(1, 100)), &known);
        assert_eq!(c.status, CheckStatus::Fail);
    }

    #[test]
    fn epsilon_table_minima() {
        let entries = vec![
            EpsilonEntry {
                ring_name: "node-p3".to_string(),
                d: 1,
                p: 3,
                e_hk: exact(rat_int(2)),
                e_r: rat_int(2),
            },
            EpsilonEntry {
                ring_name: "cusp-p3".to_string(),
                d: 1,
                p: 3,
                e_hk: exact(rat_int(3)),
                e_r: rat_int(3),
            },
            EpsilonEntry {
                ring_name: "a1-p3".to_string(),
                d: 2,
                p: 3,
                e_hk: exact(rat(3, 2)),
                e_r: rat_int(2),
            },
        ];
        let table = epsilon_table(&entries);
        assert_eq!(table.len(), 2);
        assert_eq!(table[0].corpus_min, rat_int(1));
        assert_eq!(table[0].minimizing_ring, "node-p3");
        assert_eq!(table[0].within_tolerance, Some(true));
        assert!(table[0].bound_satisfied);
        assert_eq!(table[1].corpus_min, rat(1, 2));
        assert_eq!(table[1].within_tolerance, Some(true));
        // the cell bound is the weakest member bound: max(1/18, 1/18) = 1/18
        assert_eq!(table[1].theorem_bound, rat(1, 18));
    }
}
