//! Coefficient-by-coefficient comparison of catalog series with oracles.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, build, CatalogError, Params, TheoremId, Variant};
use crate::oracle::{
    count_colored_thm11, count_colored_thm13, count_fixed_by_hook, count_fixed_by_part, count_hooks_of_size,
    count_restricted_thm12, fixed_by_hook_witnesses, HookQuery, OracleError,
};
use crate::partition::Family;
use crate::series::LaurentSeries;

/// One series checked against its oracle below `q^order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdentityCase {
    pub theorem: TheoremId,
    pub params: Params,
    pub order: usize,
    pub variant: Option<Variant>,
}

impl IdentityCase {
    pub fn new(theorem: TheoremId, params: Params, order: usize, variant: Option<Variant>) -> Self {
        let variant = theorem.fixed_variant().or(if theorem.has_variants() { variant } else { None });
        IdentityCase { theorem, params, order, variant }
    }

    pub fn family(&self) -> Family {
        self.theorem.family()
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.theorem)?;
        if let Some(m) = self.params.m {
            write!(f, " m={m}")?;
        }
        if let Some(k) = self.params.k {
            write!(f, " k={k}")?;
        }
        if let Some(h) = self.params.h {
            write!(f, " h={h}")?;
        }
        write!(f, " N={}", self.order)?;
        if let Some(v) = self.variant {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First exponent where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub coefficient: i64,
    pub oracle: i64,
    pub against: &'static str,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}: series {} vs {} {}", self.exponent, self.coefficient, self.against, self.oracle)
    }
}

#[derive(Clone, Debug, Serialize)]
/// `status` is `Fail` exactly when `first_mismatch` is set. Builder errors
/// other than mismatches (overflow, a non-terminating sum) are reported as
/// skipped with a note starting `builder error:`.
pub struct VerifyReport {
    pub case: IdentityCase,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    /// Skip reason or builder error.
    pub note: Option<String>,
    /// Coefficients against the first oracle, one per exponent.
    #[serde(skip)]
    pub rows: Vec<CoefficientRow>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_builder_error(&self) -> bool {
        self.note.as_deref().is_some_and(|n| n.starts_with("builder error"))
    }
}

type OracleFn = Box<dyn Fn(usize) -> Result<u64, OracleError>>;

/// The brute-force counts a theorem's coefficients must equal, keyed by name.
fn oracles(case: &IdentityCase) -> Vec<(&'static str, OracleFn)> {
    let Params { m, k, h } = case.params;
    let (m, k, h) = (m.unwrap_or(1), k.unwrap_or(1), h.unwrap_or(0));
    let fam = case.family();
    let by_part: OracleFn = Box::new(move |n| count_fixed_by_part(HookQuery::new(n, m, h, k), fam));
    let by_hook: OracleFn = Box::new(move |n| count_fixed_by_hook(HookQuery::new(n, m, h, k), fam));
    match case.theorem {
        TheoremId::FixedByPartM1
        | TheoremId::MFixedByPart
        | TheoremId::OddBySize
        | TheoremId::DistinctBySize
        | TheoremId::DistinctBySizeVariantB => vec![("fixed-by-part", by_part)],
        TheoremId::FixedByHookM1
        | TheoremId::MFixedByHook
        | TheoremId::OddByHook
        | TheoremId::DistinctByHook
        | TheoremId::OddDistinctByHook => vec![("fixed-by-hook", by_hook)],
        TheoremId::OddDistinctTotal => {
            vec![("hooks", Box::new(move |n| Ok(count_hooks_of_size(n, k, None, Family::OddDistinct))))]
        }
        TheoremId::T14HooksOfSizeK => vec![("hooks", Box::new(move |n| Ok(count_hooks_of_size(n, k, Some(m), Family::All))))],
        TheoremId::T11ClosedForm => vec![
            ("colored-t11", Box::new(move |n| Ok(count_colored_thm11(n, m)))),
            ("fixed-by-hook summed over k", Box::new(move |n| Ok(fixed_by_hook_witnesses(n, m, 0, None, Family::All)?.len() as u64))),
        ],
        TheoremId::T12ClosedForm => vec![
            ("fixed-by-part", Box::new(move |n| count_fixed_by_part(HookQuery::new(n, m, h, m), Family::All))),
            ("restricted-t12", Box::new(move |n| Ok(count_restricted_thm12(n, m, h)))),
        ],
        TheoremId::T13Shifted => vec![("colored-t13", Box::new(move |n| Ok(count_colored_thm13(n as i64, m, k))))],
    }
}

/// One exponent of a case: the series coefficient and the primary oracle count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub n: i64,
    pub coefficient: i64,
    pub oracle: i64,
}

impl CoefficientRow {
    pub fn agrees(&self) -> bool {
        self.coefficient == self.oracle
    }
}

/// Pairs the coefficients of `series` with `oracle` on `0..order`. Negative
/// exponents come first, each against an implicit count of zero.
pub fn coefficient_rows(
    series: &LaurentSeries,
    order: usize,
    oracle: impl Fn(usize) -> Result<u64, OracleError>,
) -> Result<Vec<CoefficientRow>, OracleError> {
    let mut rows: Vec<CoefficientRow> =
        series.negative_terms().into_iter().map(|(n, coefficient)| CoefficientRow { n, coefficient, oracle: 0 }).collect();
    for n in 0..order {
        let coefficient = series.coeff(n as i64).unwrap_or(0);
        rows.push(CoefficientRow { n: n as i64, coefficient, oracle: oracle(n)? as i64 });
    }
    Ok(rows)
}

/// First disagreement of `series` with `oracle` below `q^order`.
pub fn compare(
    series: &LaurentSeries,
    order: usize,
    against: &'static str,
    oracle: impl Fn(usize) -> Result<u64, OracleError>,
) -> Result<Option<Mismatch>, OracleError> {
    Ok(first_mismatch(&coefficient_rows(series, order, oracle)?, against))
}

fn first_mismatch(rows: &[CoefficientRow], against: &'static str) -> Option<Mismatch> {
    rows.iter()
        .find(|r| !r.agrees())
        .map(|r| Mismatch { exponent: r.n, coefficient: r.coefficient, oracle: r.oracle, against })
}

fn skipped(case: IdentityCase, reason: String, start: Instant) -> VerifyReport {
    VerifyReport {
        case,
        status: Status::Skipped,
        first_mismatch: None,
        note: Some(reason),
        rows: Vec::new(),
        elapsed: start.elapsed(),
    }
}

/// Builds the case's series and checks it against every bound oracle. For
/// [`TheoremId::T13Shifted`] the weight-shift identity is checked as well.
pub fn run_case(case: IdentityCase) -> VerifyReport {
    let start = Instant::now();
    let series = match build(case.theorem, case.params, case.order, case.variant) {
        Ok(s) => s,
        Err(CatalogError::Precondition(r)) => return skipped(case, r, start),
        Err(e) => return skipped(case, format!("builder error: {e}"), start),
    };
    if series.order() < case.order as i64 {
        return skipped(case, format!("builder error: series known only below q^{}", series.order()), start);
    }
    let mut rows = Vec::new();
    let mut mismatch = None;
    let mut note = None;
    for (i, (name, oracle)) in oracles(&case).into_iter().enumerate() {
        let these = match coefficient_rows(&series, case.order, oracle) {
            Ok(r) => r,
            Err(e) => return skipped(case, e.to_string(), start),
        };
        if mismatch.is_none() {
            mismatch = first_mismatch(&these, name);
        }
        if i == 0 {
            rows = these;
        }
    }
    if mismatch.is_none() && case.theorem == TheoremId::T13Shifted {
        let Params { m, k, h } = case.params;
        match catalog::t13_shift_identity_check(m.unwrap_or(1), k.unwrap_or(1), h.unwrap_or(0), case.order) {
            Ok(None) => {}
            Ok(Some(mm)) => {
                mismatch = Some(mm);
                note = Some("weight-shift identity".to_string());
            }
            Err(e) => return skipped(case, format!("builder error: {e}"), start),
        }
    }
    let status = if mismatch.is_some() { Status::Fail } else { Status::Pass };
    VerifyReport { case, status, first_mismatch: mismatch, note, rows, elapsed: start.elapsed() }
}

/// Runs every case, in parallel on `jobs` threads (all cores when `None`), and
/// returns the reports sorted by case.
pub fn run_cases(cases: &[IdentityCase], jobs: Option<usize>) -> Vec<VerifyReport> {
    let work = || {
        let mut out: Vec<VerifyReport> = cases.par_iter().map(|c| run_case(*c)).collect();
        out.sort_by(|a, b| a.case.cmp(&b.case));
        out
    };
    match jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

/// Parameter grid for [`Grid::cases`].
///
/// `k: None` means `max(1, m)..=8`; an explicit list is used as given, so
/// `k < m` cases of part-size theorems show up as skipped. `h: None` means
/// `-3..=k-1` (or `-3..=m-1` for the part-size-`m` closed form).
#[derive(Clone, Debug)]
pub struct Grid {
    pub theorems: Vec<TheoremId>,
    pub m: Vec<usize>,
    pub k: Option<Vec<usize>>,
    pub h: Option<Vec<i64>>,
    pub order: usize,
    pub variants: Vec<Variant>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            theorems: TheoremId::ALL.to_vec(),
            m: (1..=4).collect(),
            k: None,
            h: None,
            order: 30,
            variants: vec![Variant::Rederived],
        }
    }
}

impl Grid {
    fn hs(&self, top: i64) -> Vec<i64> {
        match &self.h {
            Some(r) => r.clone(),
            None => (-3..=top).collect(),
        }
    }

    pub fn cases(&self) -> Vec<IdentityCase> {
        let mut out = Vec::new();
        for &t in &self.theorems {
            let variants: Vec<Option<Variant>> = if t.has_variants() {
                self.variants.iter().copied().map(Some).collect()
            } else {
                vec![None]
            };
            let ms: Vec<Option<usize>> = if t.uses_m() { self.m.iter().copied().map(Some).collect() } else { vec![None] };
            for &m in &ms {
                let ks: Vec<Option<usize>> = if t.uses_k() {
                    match &self.k {
                        Some(ks) => ks.iter().copied().map(Some).collect(),
                        None => (m.unwrap_or(1).max(1)..=8).map(Some).collect(),
                    }
                } else {
                    vec![None]
                };
                for &k in &ks {
                    let hs: Vec<Option<i64>> = if !t.uses_h() {
                        vec![None]
                    } else if t == TheoremId::T12ClosedForm {
                        self.hs(m.unwrap_or(1) as i64 - 1).into_iter().map(Some).collect()
                    } else {
                        self.hs(k.unwrap_or(1) as i64 - 1).into_iter().map(Some).collect()
                    };
                    for &h in &hs {
                        for &v in &variants {
                            out.push(IdentityCase::new(t, Params::new(m, k, h), self.order, v));
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}
