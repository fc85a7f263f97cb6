//! Generating functions for fixed hooks, one builder per identity.
//!
//! Every builder returns a [`LaurentSeries`] exact below `q^order` whose
//! coefficient at `q^n` is meant to equal a brute-force count from
//! [`crate::oracle`]. Formulas are transcribed as printed, including their
//! summation bounds. Where the printed form disagrees with enumeration a
//! [`Variant::Rederived`] form is provided next to the [`Variant::Stated`] one;
//! neither is silently substituted for the other.
//!
//! Conventions shared by all builders:
//! - `1/(q;q)_n` is the zero series for `n < 0`;
//! - a Gaussian binomial with lower index outside `0..=top` is zero;
//! - a Gaussian binomial whose top is not an integer contributes nothing
//!   (the term is dropped and the builder records nothing else about it);
//! - `C(x, 2)` means `x(x-1)/2` for every integer `x`.
//!
//! Infinite sums stop at the first index past which the exponent of the
//! explicit monomial is at least `order` and strictly increasing. All other
//! factors are power series with nonnegative valuation, so no later summand can
//! reach below the truncation. The monomial exponents are linear or convex
//! quadratic in the index, which the loop checks as it goes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{count_colored_thm13, count_fixed_by_part, thm13_shifted_weight, HookQuery};
use crate::partition::Family;
use crate::series::{gauss_binomial, inverse_q_factorial, pochhammer, LaurentSeries, PochSpec, SeriesError, Sign};
use crate::verify::Mismatch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("summation did not reach the truncation order {order} within {steps} terms")]
    NonTerminating { order: i64, steps: i64 },
    #[error("negative-exponent term {coeff} q^{exp} survived in the final series")]
    UncancelledPole { exp: i64, coeff: i64 },
}

pub type Result<T> = std::result::Result<T, CatalogError>;

type Series = LaurentSeries;

/// Which reading of a formula to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// The formula exactly as displayed.
    Stated,
    /// A corrected form re-derived from the same diagram decomposition.
    Rederived,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Stated => "stated",
            Variant::Rederived => "rederived",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "stated" | "verbatim" | "a" => Ok(Variant::Stated),
            "rederived" | "corrected" | "b" => Ok(Variant::Rederived),
            _ => Err(CatalogError::Precondition(format!("unknown variant '{s}'"))),
        }
    }
}

/// One tag per generating function in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T11ClosedForm,
    T12ClosedForm,
    T13Shifted,
    T14HooksOfSizeK,
    FixedByPartM1,
    MFixedByPart,
    OddBySize,
    DistinctBySize,
    DistinctBySizeVariantB,
    FixedByHookM1,
    MFixedByHook,
    OddByHook,
    DistinctByHook,
    OddDistinctByHook,
    OddDistinctTotal,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::T11ClosedForm,
        TheoremId::T12ClosedForm,
        TheoremId::T13Shifted,
        TheoremId::T14HooksOfSizeK,
        TheoremId::FixedByPartM1,
        TheoremId::MFixedByPart,
        TheoremId::OddBySize,
        TheoremId::DistinctBySize,
        TheoremId::DistinctBySizeVariantB,
        TheoremId::FixedByHookM1,
        TheoremId::MFixedByHook,
        TheoremId::OddByHook,
        TheoremId::DistinctByHook,
        TheoremId::OddDistinctByHook,
        TheoremId::OddDistinctTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T11ClosedForm => "T11",
            TheoremId::T12ClosedForm => "T12",
            TheoremId::T13Shifted => "T13",
            TheoremId::T14HooksOfSizeK => "T14",
            TheoremId::FixedByPartM1 => "FixedByPart",
            TheoremId::MFixedByPart => "MFixedByPart",
            TheoremId::OddBySize => "OddBySize",
            TheoremId::DistinctBySize => "DistinctBySize",
            TheoremId::DistinctBySizeVariantB => "DistinctBySizeB",
            TheoremId::FixedByHookM1 => "FixedByHook",
            TheoremId::MFixedByHook => "MFixedByHook",
            TheoremId::OddByHook => "OddByHook",
            TheoremId::DistinctByHook => "DistinctByHook",
            TheoremId::OddDistinctByHook => "OddDistinctByHook",
            TheoremId::OddDistinctTotal => "OddDistinctTotal",
        }
    }

    /// Partition family the coefficients count.
    pub fn family(self) -> Family {
        match self {
            TheoremId::OddBySize | TheoremId::OddByHook => Family::Odd,
            TheoremId::DistinctBySize | TheoremId::DistinctBySizeVariantB | TheoremId::DistinctByHook => {
                Family::Distinct
            }
            TheoremId::OddDistinctByHook | TheoremId::OddDistinctTotal => Family::OddDistinct,
            _ => Family::All,
        }
    }

    pub fn uses_m(self) -> bool {
        !matches!(self, TheoremId::FixedByPartM1 | TheoremId::FixedByHookM1 | TheoremId::OddDistinctTotal)
    }

    pub fn uses_k(self) -> bool {
        !matches!(self, TheoremId::T11ClosedForm | TheoremId::T12ClosedForm)
    }

    pub fn uses_h(self) -> bool {
        !matches!(self, TheoremId::T11ClosedForm | TheoremId::T14HooksOfSizeK | TheoremId::OddDistinctTotal)
    }

    /// Counts indexed by part size need `k >= m`.
    pub fn by_part_size(self) -> bool {
        matches!(
            self,
            TheoremId::T13Shifted
                | TheoremId::FixedByPartM1
                | TheoremId::MFixedByPart
                | TheoremId::OddBySize
                | TheoremId::DistinctBySize
                | TheoremId::DistinctBySizeVariantB
        )
    }

    /// Theorems built in both a stated and a rederived reading through a
    /// `Variant` argument. The two `DistinctBySize` readings have their own tags.
    pub fn has_variants(self) -> bool {
        matches!(self, TheoremId::OddBySize | TheoremId::OddDistinctByHook | TheoremId::OddDistinctTotal)
    }

    /// The variant a tag builds when it does not take one.
    pub fn fixed_variant(self) -> Option<Variant> {
        match self {
            TheoremId::DistinctBySize => Some(Variant::Stated),
            TheoremId::DistinctBySizeVariantB => Some(Variant::Rederived),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        let id = match key.as_str() {
            "t11" | "t11closedform" | "colorpartition" => TheoremId::T11ClosedForm,
            "t12" | "t12closedform" => TheoremId::T12ClosedForm,
            "t13" | "t13shifted" => TheoremId::T13Shifted,
            "t14" | "t14hooksofsizek" => TheoremId::T14HooksOfSizeK,
            "fixedbypart" | "fixedbypartm1" => TheoremId::FixedByPartM1,
            "mfixedbypart" => TheoremId::MFixedByPart,
            "oddbysize" | "oddbypart" => TheoremId::OddBySize,
            "distinctbysize" | "distinctbypart" => TheoremId::DistinctBySize,
            "distinctbysizeb" | "distinctbysizevariantb" => TheoremId::DistinctBySizeVariantB,
            "fixedbyhook" | "fixedbyhookm1" => TheoremId::FixedByHookM1,
            "mfixedbyhook" => TheoremId::MFixedByHook,
            "oddbyhook" => TheoremId::OddByHook,
            "distinctbyhook" => TheoremId::DistinctByHook,
            "odddistinctbyhook" => TheoremId::OddDistinctByHook,
            "odddistincttotal" => TheoremId::OddDistinctTotal,
            _ => return Err(CatalogError::Precondition(format!("unknown theorem '{s}'"))),
        };
        Ok(id)
    }
}

/// Parameters of one builder invocation; unused ones are ignored.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub h: Option<i64>,
}

impl Params {
    pub fn new(m: Option<usize>, k: Option<usize>, h: Option<i64>) -> Self {
        Params { m, k, h }
    }

    fn m(&self) -> Result<usize> {
        self.m.ok_or_else(|| CatalogError::Precondition("missing parameter m".into()))
    }

    fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| CatalogError::Precondition("missing parameter k".into()))
    }

    fn h(&self) -> Result<i64> {
        self.h.ok_or_else(|| CatalogError::Precondition("missing parameter h".into()))
    }
}

/// Builds the series for `theorem`. `variant` is consulted only for tags with
/// [`TheoremId::has_variants`]; `None` selects the rederived form there.
pub fn build(theorem: TheoremId, params: Params, order: usize, variant: Option<Variant>) -> Result<Series> {
    if order == 0 {
        // nothing is known below q^0, but the preconditions still apply
        return Ok(build(theorem, params, 1, variant)?.truncate(0)?);
    }
    let v = variant.unwrap_or(Variant::Rederived);
    match theorem {
        TheoremId::T11ClosedForm => gf_t11_closed_form(params.m()?, order),
        TheoremId::T12ClosedForm => gf_t12_closed_form(params.m()?, params.h()?, order),
        TheoremId::T13Shifted => gf_t13_shifted(params.m()?, params.k()?, params.h()?, order),
        TheoremId::T14HooksOfSizeK => gf_t14_hooks_of_size_k(params.m()?, params.k()?, order),
        TheoremId::FixedByPartM1 => gf_fixed_by_part_m1(params.k()?, params.h()?, order),
        TheoremId::MFixedByPart => gf_mfixed_by_part(params.m()?, params.k()?, params.h()?, order),
        TheoremId::OddBySize => gf_odd_by_part(params.m()?, params.k()?, params.h()?, order, v),
        TheoremId::DistinctBySize => {
            gf_distinct_by_part(params.m()?, params.k()?, params.h()?, order, Variant::Stated)
        }
        TheoremId::DistinctBySizeVariantB => {
            gf_distinct_by_part(params.m()?, params.k()?, params.h()?, order, Variant::Rederived)
        }
        TheoremId::FixedByHookM1 => gf_fixed_by_hook_m1(params.k()?, params.h()?, order),
        TheoremId::MFixedByHook => gf_mfixed_by_hook(params.m()?, params.k()?, params.h()?, order),
        TheoremId::OddByHook => gf_odd_by_hook(params.m()?, params.k()?, params.h()?, order),
        TheoremId::DistinctByHook => gf_distinct_by_hook(params.m()?, params.k()?, params.h()?, order),
        TheoremId::OddDistinctByHook => gf_odd_distinct_by_hook(params.m()?, params.k()?, params.h()?, order, v),
        TheoremId::OddDistinctTotal => gf_odd_distinct_total(params.k()?, order, v),
    }
}

// ---------------------------------------------------------------------------
// helpers

fn c2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `(q^step; q^step)_n` inverted, zero for `n < 0`.
fn inv_fac(n: i64, step: i64, order: i64) -> Result<Series> {
    Ok(inverse_q_factorial(n, step, order)?)
}

/// `(a; q^step)_count` for `a = ±q^base`.
fn poch(sign: Sign, base: i64, step: i64, count: i64, order: i64) -> Result<Series> {
    debug_assert!(count >= 0);
    Ok(pochhammer(PochSpec::finite(sign, base, step, count.max(0) as u64), order)?)
}

fn inv_poch(sign: Sign, base: i64, step: i64, count: i64, order: i64) -> Result<Series> {
    Ok(poch(sign, base, step, count, order)?.reciprocal()?)
}

fn inv_poch_inf(base: i64, order: i64) -> Result<Series> {
    Ok(pochhammer(PochSpec::infinite(Sign::Plus, base, 1), order)?.reciprocal()?)
}

/// Gaussian binomial with a possibly half-integer top given as `twice_top / 2`.
fn binom_half(twice_top: i64, bottom: i64, step: i64, order: i64) -> Result<Option<Series>> {
    if twice_top.rem_euclid(2) != 0 {
        return Ok(None);
    }
    Ok(Some(gauss_binomial(twice_top / 2, bottom, step, order)?))
}

fn binom(top: i64, bottom: i64, step: i64, order: i64) -> Result<Series> {
    Ok(gauss_binomial(top, bottom, step, order)?)
}

fn product(factors: Vec<Series>, order: i64) -> Result<Series> {
    Ok(Series::product(factors, order)?.truncate(order)?)
}

/// `q^exp * factor`, where `factor` is built below `q^{order - exp}` and has
/// nonnegative valuation.
fn term(exp: i64, order: i64, factor: impl FnOnce(i64) -> Result<Series>) -> Result<Series> {
    if exp >= order {
        return Ok(Series::zero(order));
    }
    let work = order - exp;
    Ok(factor(work)?.truncate(work)?.shift(exp))
}

/// Sums `term(i)` for `i = start, start+1, ...`, stopping once `lead(i)` is at
/// least `order` and `lead(i+1) > lead(i)`.
fn sum_from(
    order: i64,
    start: i64,
    lead: impl Fn(i64) -> i64,
    mut summand: impl FnMut(i64) -> Result<Series>,
) -> Result<Series> {
    let limit = 4 * order.max(0) + 1024;
    let mut acc = Series::zero(order);
    let mut i = start;
    loop {
        let e = lead(i);
        if e >= order {
            if lead(i + 1) > e {
                return Ok(acc);
            }
        } else {
            acc = acc.checked_add(&summand(i)?)?;
        }
        i += 1;
        if i - start > limit {
            return Err(CatalogError::NonTerminating { order, steps: limit });
        }
    }
}

fn sum_range(order: i64, range: impl IntoIterator<Item = i64>, mut summand: impl FnMut(i64) -> Result<Series>) -> Result<Series> {
    let mut acc = Series::zero(order);
    for i in range {
        acc = acc.checked_add(&summand(i)?)?;
    }
    Ok(acc)
}

fn need_part_at_least_column(m: usize, k: usize) -> Result<()> {
    if m == 0 {
        return Err(CatalogError::Precondition("column m must be at least 1".into()));
    }
    if k < m {
        return Err(CatalogError::Precondition(format!("part size k = {k} must be at least m = {m}")));
    }
    Ok(())
}

fn need_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(CatalogError::Precondition(format!("{name} must be at least 1")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// fixed hooks by part size

/// `h`-fixed first-column hooks on a part of size `k`:
/// `sum_{s>=0} q^{s(k+1)+k(k-h)} / (q;q)_{s+k-h-1} [s+k-1, k-1]`.
///
/// For `h >= k` the summands with `s+k-h-1 < 0` vanish and the rest are kept.
pub fn gf_fixed_by_part_m1(k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("k", k)?;
    let (k, n) = (k as i64, order as i64);
    let start = (h - k + 1).max(0);
    sum_from(n, start, |s| s * (k + 1) + k * (k - h), |s| {
        term(s * (k + 1) + k * (k - h), n, |w| {
            product(vec![inv_fac(s + k - h - 1, 1, w)?, binom(s + k - 1, k - 1, 1, w)?], w)
        })
    })
}

/// The first displayed form, indexed by the row `s` of the hook:
/// `sum_{s>=k-h} q^{(k+1)(s-1)+h+1} / (q;q)_{s-1} [s+h-1, k-1]`.
pub fn gf_fixed_by_part_m1_row_form(k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("k", k)?;
    let (k, n) = (k as i64, order as i64);
    let lead = |s: i64| (k + 1) * (s - 1) + h + 1;
    sum_from(n, (k - h).max(1), lead, |s| {
        term(lead(s), n, |w| product(vec![inv_fac(s - 1, 1, w)?, binom(s + h - 1, k - 1, 1, w)?], w))
    })
}

/// `h`-fixed hooks in column `m` on a part of size `k >= m`:
/// `sum_{s>=0} q^{s(k+m)+k(k-h-m+1)} / ((q;q)_{s+k-h-m} (q;q)_{m-1}) [s+k-m, k-m]`.
pub fn gf_mfixed_by_part(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_part_at_least_column(m, k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let lead = |s: i64| s * (k + m) + k * (k - h - m + 1);
    sum_from(n, (m + h - k).max(0), lead, |s| {
        term(lead(s), n, |w| {
            product(
                vec![inv_fac(s + k - h - m, 1, w)?, inv_fac(m - 1, 1, w)?, binom(s + k - m, k - m, 1, w)?],
                w,
            )
        })
    })
}

/// Row-indexed form:
/// `sum_{s>=k-h-m+1} q^{s(k+m)+m(h-k+m-1)} / ((q;q)_{s-1} (q;q)_{m-1}) [s+h-1, k-m]`.
pub fn gf_mfixed_by_part_row_form(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_part_at_least_column(m, k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let lead = |s: i64| s * (k + m) + m * (h - k + m - 1);
    sum_from(n, (k - h - m + 1).max(1), lead, |s| {
        term(lead(s), n, |w| {
            product(vec![inv_fac(s - 1, 1, w)?, inv_fac(m - 1, 1, w)?, binom(s + h - 1, k - m, 1, w)?], w)
        })
    })
}

/// Odd partitions, `h`-fixed hook in column `m` on a part of size `k`.
///
/// Stated (odd `m`):
/// `sum_{s>=k-h-m+1} q^{s(k+m)+m(m+h-k-1)} / ((q^2;q^2)_{s-1} (q;q^2)_{(m-1)/2}) [s+h-k+(k-m)/2, s+h-k]_{q^2}`
/// and (even `m`) exponent `s(k+m+1)+m(h-k+m)+h-k+1`, `(q;q^2)_{m/2}` and
/// top `s+h-k+(k-m-1)/2`.
///
/// Rederived: the binomial counts the `r = s+h-k+m-1` rows below the hook that
/// still reach column `m`, i.e. `[r+(k-m)/2, r]_{q^2}` (odd `m`) or
/// `[r+(k-m-1)/2, r]_{q^2}` (even `m`), and for even `m` each of those rows
/// weighs at least `m+1`, giving exponent `s(k+m+1)+(m+1)(h-k+m-1)`.
pub fn gf_odd_by_part(m: usize, k: usize, h: i64, order: usize, variant: Variant) -> Result<Series> {
    need_part_at_least_column(m, k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let odd_m = m % 2 == 1;
    let lead = |s: i64| match (odd_m, variant) {
        (true, _) => s * (k + m) + m * (m + h - k - 1),
        (false, Variant::Stated) => s * (k + m + 1) + m * (h - k + m) + h - k + 1,
        (false, Variant::Rederived) => s * (k + m + 1) + (m + 1) * (h - k + m - 1),
    };
    let small_parts = if odd_m { (m - 1) / 2 } else { m / 2 };
    sum_from(n, (k - h - m + 1).max(1), lead, |s| {
        let rows = match variant {
            Variant::Stated => s + h - k,
            Variant::Rederived => s + h - k + m - 1,
        };
        let twice_top = 2 * rows + if odd_m { k - m } else { k - m - 1 };
        term(lead(s), n, |w| {
            let Some(b) = binom_half(twice_top, rows, 2, w)? else {
                return Ok(Series::zero(w));
            };
            product(vec![inv_fac(s - 1, 2, w)?, inv_poch(Sign::Plus, 1, 2, small_parts, w)?, b], w)
        })
    })
}

/// Distinct partitions, `h`-fixed hook in column `m` on a part of size `k`:
/// `sum_{s=0}^{k-m} q^{s(k+m)+k(k-h-m+1)+C(s+k-m+1-h,2)+C(s,2)} (-q;q)_{m-1} / (q;q)_D [k-m, s]`
/// with `D = k-h-1` as stated, or the `s`-dependent `D = s+k-m-h` of the
/// reindexed derivation.
pub fn gf_distinct_by_part(m: usize, k: usize, h: i64, order: usize, variant: Variant) -> Result<Series> {
    need_part_at_least_column(m, k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    sum_range(n, 0..=k - m, |s| {
        let e = s * (k + m) + k * (k - h - m + 1) + c2(s + k - m + 1 - h) + c2(s);
        let d = match variant {
            Variant::Stated => k - h - 1,
            Variant::Rederived => s + k - m - h,
        };
        term(e, n, |w| {
            product(vec![poch(Sign::Minus, 1, 1, m - 1, w)?, inv_fac(d, 1, w)?, binom(k - m, s, 1, w)?], w)
        })
    })
}

// ---------------------------------------------------------------------------
// fixed hooks by hook size

/// `sum_{l=1}^{k} q^{k+l(k-h-1)} / (q;q)_{k-h-1} [k-1, l-1]`; zero for `h >= k`.
pub fn gf_fixed_by_hook_m1(k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("k", k)?;
    let (k, n) = (k as i64, order as i64);
    sum_range(n, 1..=k, |l| {
        term(k + l * (k - h - 1), n, |w| product(vec![inv_fac(k - h - 1, 1, w)?, binom(k - 1, l - 1, 1, w)?], w))
    })
}

/// `sum_{l=1}^{k} q^{(m-1)(2k-h-l)+k+l(k-h-1)} / ((q;q)_{k-h-1} (q;q)_{m-1}) [k-1, l-1]`.
pub fn gf_mfixed_by_hook(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    sum_range(n, 1..=k, |l| {
        let e = (m - 1) * (2 * k - h - l) + k + l * (k - h - 1);
        term(e, n, |w| {
            product(vec![inv_fac(k - h - 1, 1, w)?, inv_fac(m - 1, 1, w)?, binom(k - 1, l - 1, 1, w)?], w)
        })
    })
}

/// Odd partitions by hook size; the arm `l` runs over values of the parity of `m`.
pub fn gf_odd_by_hook(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let odd_m = m % 2 == 1;
    sum_range(n, (1..=k).filter(|l| l % 2 == m % 2), |l| {
        let base = k + l * (k - h - 1) + (m - 1) * (2 * k - h - l);
        let (e, small_parts, top) = if odd_m {
            (base, (m - 1) / 2, k - l + (l - 1) / 2)
        } else {
            (base + (k - l), m / 2, k - l + (l - 2) / 2)
        };
        term(e, n, |w| {
            product(
                vec![inv_fac(k - h - 1, 2, w)?, inv_poch(Sign::Plus, 1, 2, small_parts, w)?, binom(top, k - l, 2, w)?],
                w,
            )
        })
    })
}

/// Distinct partitions by hook size:
/// `sum_{l=ceil((k+1)/2)}^{k} q^{k+l(k-h-1)+(m-1)(2k-h-l)+C(k-h,2)+C(k-l,2)} (-q;q)_{m-1} / (q;q)_{k-h-1} [l-1, k-l]`.
pub fn gf_distinct_by_hook(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    sum_range(n, ceil_div(k + 1, 2)..=k, |l| {
        let e = k + l * (k - h - 1) + (m - 1) * (2 * k - h - l) + c2(k - h) + c2(k - l);
        term(e, n, |w| {
            product(vec![poch(Sign::Minus, 1, 1, m - 1, w)?, inv_fac(k - h - 1, 1, w)?, binom(l - 1, k - l, 1, w)?], w)
        })
    })
}

/// Odd distinct partitions by hook size.
///
/// For odd `m` the printed binomial top `k-l+(3l-2k)/2` is a half-integer for
/// every odd `l`, so the stated form is the zero series there. The rederived
/// form reads the top as `k-l+floor((3l-2k)/2)`. Even `m` is the same in both.
pub fn gf_odd_distinct_by_hook(m: usize, k: usize, h: i64, order: usize, variant: Variant) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let odd_m = m % 2 == 1;
    let first = if odd_m { ceil_div(2 * k - 1, 3) } else { ceil_div(2 * k, 3) };
    sum_range(n, (first..=k).filter(|l| l % 2 == m % 2), |l| {
        let base = (m - 1) * (2 * k - h - l) + k + l * (k - h - 1) + 2 * c2(k - h) + 2 * c2(k - l);
        let (e, pairs, twice_top) = if odd_m {
            let t = match variant {
                Variant::Stated => 2 * (k - l) + 3 * l - 2 * k,
                Variant::Rederived => 2 * (k - l + (3 * l - 2 * k).div_euclid(2)),
            };
            (base, (m - 1) / 2, t)
        } else {
            (base + k - l, m / 2, 2 * (k - l) + 3 * l - 2 * k - 2)
        };
        term(e, n, |w| {
            let Some(b) = binom_half(twice_top, k - l, 2, w)? else {
                return Ok(Series::zero(w));
            };
            product(vec![poch(Sign::Minus, 1, 2, pairs, w)?, inv_fac(k - h - 1, 2, w)?, b], w)
        })
    })
}

/// Hooks of length `k` in all odd distinct partitions.
///
/// Stated:
/// `(-q;q^2)_inf q^k [ sum_{l odd} q^{2C(k-l,2)} [k-l+(3l-2k)/2, k-l]_{q^2} sum_t q^{2t(k-l+1)} / (-q^{2t+1};q^2)_{(l-1)/2}
///  + sum_{l even} q^{2C(k-l,2)+k-l} [k-l+(3l-2k-2)/2, k-l]_{q^2} sum_t q^{2t(k-l+1)} / (-q^{2t+1};q^2)_{l/2} ]`.
///
/// Rederived from summing [`gf_odd_distinct_by_hook`] (rederived) over `m` and
/// `h`: odd `l` uses top `k-l+floor((3l-2k)/2)` and `(-q^{2t+1};q^2)_{(l+1)/2}`;
/// even `l` comes from `m = 2t+2` and reads
/// `sum_t q^{(2t+1)(k-l+1)} / (-q^{2t+3};q^2)_{l/2}`.
/// Each inner sum stops once its monomial exponent reaches the order, valid
/// because `k-l+1 >= 1`.
pub fn gf_odd_distinct_total(k: usize, order: usize, variant: Variant) -> Result<Series> {
    need_positive("k", k)?;
    let (k, n) = (k as i64, order as i64);
    let bracket = |w: i64| -> Result<Series> {
        let odd_first = ceil_div(2 * k - 1, 3);
        let even_first = ceil_div(2 * k, 3);
        let ls = (1..=k).filter(|&l| if l % 2 == 1 { l >= odd_first } else { l >= even_first });
        sum_range(w, ls, |l| {
            let odd_l = l % 2 == 1;
            let twice_top = match (odd_l, variant) {
                (true, Variant::Stated) => 2 * (k - l) + 3 * l - 2 * k,
                (true, Variant::Rederived) => 2 * (k - l + (3 * l - 2 * k).div_euclid(2)),
                (false, _) => 2 * (k - l) + 3 * l - 2 * k - 2,
            };
            let pre = 2 * c2(k - l) + if odd_l { 0 } else { k - l };
            let gap = k - l + 1;
            // inner sum: (lead offset, first base, pochhammer length)
            let (offset, base0, len) = match (odd_l, variant) {
                (true, Variant::Stated) => (0, 1, (l - 1) / 2),
                (true, Variant::Rederived) => (0, 1, (l + 1) / 2),
                (false, Variant::Stated) => (0, 1, l / 2),
                (false, Variant::Rederived) => (gap, 3, l / 2),
            };
            term(pre, w, |w2| {
                let Some(b) = binom_half(twice_top, k - l, 2, w2)? else {
                    return Ok(Series::zero(w2));
                };
                let lead = |t: i64| 2 * t * gap + offset;
                let inner = sum_from(w2, 0, lead, |t| {
                    term(lead(t), w2, |w3| inv_poch(Sign::Minus, 2 * t + base0, 2, len, w3))
                })?;
                product(vec![b, inner], w2)
            })
        })
    };
    term(k, n, |w| {
        let odd_parts = pochhammer(PochSpec::infinite(Sign::Minus, 1, 2), w)?;
        product(vec![odd_parts, bracket(w)?], w)
    })
}

// ---------------------------------------------------------------------------
// closed forms behind the combinatorial identities

/// Hooks of size `k` in column `m` over all partitions:
/// `q^{km} / (q^k;q)_inf * sum_{l=1}^{k} q^{-(l-1)(m-1)} (q^m;q)_{l-1} / ((q;q)_{l-1} (q;q)_{k-l})`.
///
/// Individual summands carry negative powers of `q`; they are kept in Laurent
/// form and the cancellation is checked on the result.
pub fn gf_t14_hooks_of_size_k(m: usize, k: usize, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let pole = (k - 1) * (m - 1);
    // the q^{km} prefactor may sit at or above the order while the summands
    // reach down to q^{-pole}, so the skip test uses km - pole
    if k * m - pole >= n {
        return Ok(Series::zero(n));
    }
    let w = n - k * m;
    let sum = sum_range(w, 1..=k, |l| {
        term(-(l - 1) * (m - 1), w, |w2| {
            product(vec![poch(Sign::Plus, m, 1, l - 1, w2)?, inv_fac(l - 1, 1, w2)?, inv_fac(k - l, 1, w2)?], w2)
        })
    })?;
    let prefactor = inv_poch_inf(k, w + pole)?;
    let out = prefactor.checked_mul(&sum)?.truncate(w)?.shift(k * m);
    if let Some((exp, coeff)) = out.negative_terms().first().copied() {
        return Err(CatalogError::UncancelledPole { exp, coeff });
    }
    Ok(out)
}

/// Partitions with a 0-fixed hook in column `m`:
/// `1/((q;q)_{m-1} (q;q)_inf) sum_{l>=1} q^{l(l+m-1)} (q^l;q)_{2m-1}`.
pub fn gf_t11_closed_form(m: usize, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    let (m, n) = (m as i64, order as i64);
    let lead = |l: i64| l * (l + m - 1);
    let sum = sum_from(n, 1, lead, |l| term(lead(l), n, |w| poch(Sign::Plus, l, 1, 2 * m - 1, w)))?;
    product(vec![inv_fac(m - 1, 1, n)?, inv_poch_inf(1, n)?, sum], n)
}

/// Fixed hooks in column `m` on a part of size `m`:
/// `q^{mh+m} / (q;q)_{m-1} * (1/(q^{2m};q)_inf - sum_{s=0}^{-h-1} q^{2ms} / (q;q)_s)`.
pub fn gf_t12_closed_form(m: usize, h: i64, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    let (m, n) = (m as i64, order as i64);
    term(m * h + m, n, |w| {
        let correction = sum_range(w, 0..-h, |s| term(2 * m * s, w, |w2| inv_fac(s, 1, w2)))?;
        let bracket = inv_poch_inf(2 * m, w)?.checked_sub(&correction)?;
        product(vec![inv_fac(m - 1, 1, w)?, bracket], w)
    })
}

/// The series claimed to count the colored partitions of the part-size
/// identity: `1/(q;q)_{m-1} sum_{s>=0} q^{s(k+m)+C(k-m+1,2)} / (q;q)_{s+k-h-m} [s+k-m, k-m]`.
///
/// Multiplying by `q^{k(k-h-m+1)-C(k-m+1,2)}` recovers [`gf_mfixed_by_part`].
pub fn gf_t13_shifted(m: usize, k: usize, h: i64, order: usize) -> Result<Series> {
    need_part_at_least_column(m, k)?;
    let (m, k, n) = (m as i64, k as i64, order as i64);
    let tri = c2(k - m + 1);
    let lead = |s: i64| s * (k + m) + tri;
    let sum = sum_from(n, (m + h - k).max(0), lead, |s| {
        term(lead(s), n, |w| product(vec![inv_fac(s + k - h - m, 1, w)?, binom(s + k - m, k - m, 1, w)?], w))
    })?;
    product(vec![inv_fac(m - 1, 1, n)?, sum], n)
}

/// Checks `count_fixed_by_part(n, m, h, k) = count_colored_thm13(n + C(k-m+1,2) - k(k-h-m+1))`
/// for every `n < order`, both sides by enumeration.
pub fn t13_shift_identity_check(m: usize, k: usize, h: i64, order: usize) -> Result<Option<Mismatch>> {
    need_part_at_least_column(m, k)?;
    for n in 0..order {
        let lhs = count_fixed_by_part(HookQuery::new(n, m, h, k), Family::All)
            .map_err(|e| CatalogError::Precondition(e.to_string()))?;
        let rhs = count_colored_thm13(thm13_shifted_weight(n, m, k, h), m, k);
        if lhs != rhs {
            return Ok(Some(Mismatch {
                exponent: n as i64,
                coefficient: lhs as i64,
                oracle: rhs as i64,
                against: "colored-t13 at shifted weight",
            }));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// aggregations over h and m

/// Lower bound on every exponent of the by-hook summands at `(m, k, h)`, for
/// all four families: `k + (k-h-1) + (m-1)(k-h)`.
fn by_hook_floor(m: i64, k: i64, h: i64) -> i64 {
    k + (k - h - 1) + (m - 1) * (k - h)
}

/// `sum_{h <= k-1} gf_mfixed_by_hook(m, k, h)`, the `h` window taken from `order`.
pub fn sum_mfixed_by_hook_over_h(m: usize, k: usize, order: usize) -> Result<Series> {
    need_positive("m", m)?;
    need_positive("k", k)?;
    let (mi, ki, n) = (m as i64, k as i64, order as i64);
    let hs = (0..).map(|d| ki - 1 - d).take_while(|&h| by_hook_floor(mi, ki, h) < n);
    sum_range(n, hs, |h| gf_mfixed_by_hook(m, k, h, order))
}

/// `sum_{m >= 1, h <= k-1}` of the by-hook builder for `family`.
///
/// `Family::All` uses [`gf_mfixed_by_hook`]; odd distinct uses the given variant.
pub fn sum_by_hook_over_m_h(family: Family, k: usize, order: usize, variant: Variant) -> Result<Series> {
    need_positive("k", k)?;
    let (ki, n) = (k as i64, order as i64);
    let mut acc = Series::zero(n);
    for m in (1..).take_while(|&m| by_hook_floor(m, ki, ki - 1) < n) {
        let hs = (0..).map(|d| ki - 1 - d).take_while(|&h| by_hook_floor(m, ki, h) < n);
        for h in hs {
            let mu = m as usize;
            let s = match family {
                Family::All => gf_mfixed_by_hook(mu, k, h, order)?,
                Family::Odd => gf_odd_by_hook(mu, k, h, order)?,
                Family::Distinct => gf_distinct_by_hook(mu, k, h, order)?,
                Family::OddDistinct => gf_odd_distinct_by_hook(mu, k, h, order, variant)?,
            };
            acc = acc.checked_add(&s)?;
        }
    }
    Ok(acc)
}
