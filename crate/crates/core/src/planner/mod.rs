//! Chooses a construction recipe for a point (c1^2, chi_h) and scans regions.

mod arith;
mod families;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::blocks::sporadic_lookup;
use crate::error::{Error, Result};
use crate::fpgroup::DEFAULT_BUDGET;
use crate::invariants::{char_from_c_chi, in_geography_cone, is_exception, CharNumbers};
use crate::surgery::{evaluate_with_budget, Pi1Status, Recipe};

pub use arith::{arith_decompose, Decomposition};
pub use families::{
    b_g, chain, chain_with_t2, crossed_gluing, even_recipe, odd_seeds, p_block_recipe, plan_p_block, plan_sig_minus_3,
    plan_signature_minus_one, plan_signature_zero, s_block_recipe, seeded, surgered_product, wedge_extend, x13_recipe,
    x35_recipe, y_manifold, Seed,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanStatus {
    Realized,
    Sporadic,
    Exception,
    OutOfRegion,
    Unplannable,
}

impl PlanStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            PlanStatus::Realized => "realized",
            PlanStatus::Sporadic => "sporadic",
            PlanStatus::Exception => "exception",
            PlanStatus::OutOfRegion => "out_of_region",
            PlanStatus::Unplannable => "unplannable",
        }
    }

    pub fn has_recipe(&self) -> bool {
        matches!(self, PlanStatus::Realized | PlanStatus::Sporadic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanResult {
    pub c: i64,
    pub chi: i64,
    pub status: PlanStatus,
    /// Which construction was used.
    pub branch: String,
    pub decomposition: Option<Decomposition>,
    pub expected: CharNumbers,
    pub recipe: Option<Recipe>,
}

impl PlanResult {
    fn bare(c: i64, chi: i64, status: PlanStatus, branch: &str) -> Self {
        PlanResult {
            c,
            chi,
            status,
            branch: branch.into(),
            decomposition: None,
            expected: char_from_c_chi(c, chi),
            recipe: None,
        }
    }
}

/// Recipe for even c in the cone.
pub fn plan_even(c: i64, chi: i64) -> Result<PlanResult> {
    if c % 2 != 0 || !in_geography_cone(c, chi) {
        return Err(Error::Precondition(format!("({c}, {chi}) is not an even point of the cone")));
    }
    let dec = arith_decompose(c / 2, chi)?;
    let expected = char_from_c_chi(c, chi);
    let (e, sigma) = dec.char_numbers();
    assert_eq!(CharNumbers::new(e, sigma), expected, "block counts disagree with ({c}, {chi})");
    let branch = if dec.is_blockless() {
        "elliptic E'(k)"
    } else if dec.k == 0 {
        "chain with two surgeries"
    } else {
        "chain summed with E(k)"
    };
    Ok(PlanResult {
        c,
        chi,
        status: PlanStatus::Realized,
        branch: branch.into(),
        decomposition: Some(dec),
        expected,
        recipe: Some(even_recipe(&dec)),
    })
}

/// Plans any integer pair; the status says whether and how it is realized.
pub fn plan(c: i64, chi: i64) -> PlanResult {
    if !in_geography_cone(c, chi) {
        return PlanResult::bare(c, chi, PlanStatus::OutOfRegion, "outside the cone");
    }
    if is_exception(c, chi) {
        return PlanResult::bare(c, chi, PlanStatus::Exception, "not covered");
    }
    if c % 2 == 0 {
        return plan_even(c, chi).expect("even point of the cone");
    }
    if let Some(block) = sporadic_lookup(c, chi) {
        let mut r = PlanResult::bare(c, chi, PlanStatus::Sporadic, &format!("sporadic {}", block.name));
        r.recipe = Some(Recipe::base(&block.name));
        return r;
    }
    if c == 8 * chi - 3 && c >= 21 {
        let k = u32::try_from(chi - 1).expect("chi fits in u32");
        let mut r = PlanResult::bare(c, chi, PlanStatus::Realized, &format!("signature -3 family k={k}"));
        r.recipe = Some(plan_sig_minus_3(k).expect("k >= 2"));
        return r;
    }
    let windows = [(1, 17), (7, 11), (21, 5)];
    for (seed, (lo, gap)) in odd_seeds().iter().zip(windows) {
        if lo <= c && c <= 8 * chi - gap {
            let (c_even, chi_even) = (c - seed.c, chi - seed.chi);
            let (recipe, dec) = seeded(seed, c_even, chi_even).expect("window keeps the even part in the cone");
            let mut r = PlanResult::bare(
                c,
                chi,
                PlanStatus::Realized,
                &format!("({c_even}, {chi_even}) summed with {}", seed.name),
            );
            r.decomposition = Some(dec);
            r.recipe = Some(recipe);
            return r;
        }
    }
    PlanResult::bare(c, chi, PlanStatus::Unplannable, "no construction applies")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub plan: PlanResult,
    pub evaluated: Option<CharNumbers>,
    pub char_match: bool,
    pub pi1_status: Pi1Status,
    pub error: Option<String>,
}

impl CoverageRow {
    pub fn c(&self) -> i64 {
        self.plan.c
    }

    pub fn chi(&self) -> i64 {
        self.plan.chi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub chi_max: i64,
    /// Sorted by (chi, c).
    pub rows: Vec<CoverageRow>,
    pub totals: BTreeMap<String, usize>,
    pub exceptions: Vec<(i64, i64)>,
    pub char_mismatches: Vec<(i64, i64)>,
    pub unplannable: Vec<(i64, i64)>,
}

/// Plans and evaluates one point.
pub fn scan_row(c: i64, chi: i64, budget: usize) -> CoverageRow {
    let plan = plan(c, chi);
    let (evaluated, pi1_status, error) = match &plan.recipe {
        None => (None, Pi1Status::Unknown, None),
        Some(r) => match evaluate_with_budget(r, budget) {
            Ok(st) => (Some(st.char), st.pi1_status(), None),
            Err(e) => (None, Pi1Status::Unknown, Some(e.to_string())),
        },
    };
    let char_match = evaluated.is_some_and(|ch| ch == plan.expected);
    CoverageRow { plan, evaluated, char_match, pi1_status, error }
}

/// Every cone point with 1 <= chi <= chi_max.
pub fn cone_points(chi_max: i64) -> Vec<(i64, i64)> {
    (1..=chi_max).flat_map(|chi| (0..=8 * chi - 2).map(move |c| (c, chi))).collect()
}

pub fn scan(chi_max: i64) -> Result<CoverageReport> {
    scan_with(chi_max, DEFAULT_BUDGET, 1)
}

/// Scan using `jobs` worker threads. Row order does not depend on `jobs`.
pub fn scan_with(chi_max: i64, budget: usize, jobs: usize) -> Result<CoverageReport> {
    if chi_max < 1 {
        return Err(Error::Precondition(format!("chi_max = {chi_max} must be at least 1")));
    }
    let points = cone_points(chi_max);
    let jobs = jobs.max(1);
    let mut rows: Vec<CoverageRow> = if jobs == 1 {
        points.iter().map(|&(c, chi)| scan_row(c, chi, budget)).collect()
    } else {
        let next = AtomicUsize::new(0);
        let worker = || {
            let mut out = Vec::new();
            loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(c, chi)) = points.get(i) else { break out };
                out.push(scan_row(c, chi, budget));
            }
        };
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|_| s.spawn(worker)).collect();
            handles.into_iter().flat_map(|h| h.join().expect("scan worker panicked")).collect()
        })
    };
    rows.sort_by_key(|r| (r.chi(), r.c()));

    let mut totals = BTreeMap::new();
    for r in &rows {
        *totals.entry(r.plan.status.as_str().to_string()).or_insert(0) += 1;
    }
    let pick = |f: &dyn Fn(&CoverageRow) -> bool| rows.iter().filter(|r| f(r)).map(|r| (r.c(), r.chi())).collect();
    let exceptions = pick(&|r| r.plan.status == PlanStatus::Exception);
    let char_mismatches = pick(&|r| r.plan.status.has_recipe() && !r.char_match);
    let unplannable = pick(&|r| r.plan.status == PlanStatus::Unplannable);
    Ok(CoverageReport { chi_max, rows, totals, exceptions, char_mismatches, unplannable })
}
