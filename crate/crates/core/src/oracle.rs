//! Brute-force counts over explicit enumeration.
//!
//! Nothing in this module touches [`crate::series`]: each count walks the
//! partitions (or two-colored partitions) of the requested weight and tests
//! the defining condition cell by cell. The generating functions in
//! [`crate::catalog`] are checked against these.
//!
//! Occurrence counts are pairs `(lambda, i)`. Within one column the hooks are
//! strictly decreasing in `i` while `i + h` is strictly increasing, so a
//! partition contributes at most one `h`-fixed hook per column and pair counts
//! coincide with partition counts for a fixed `(m, h)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{enumerate, Family, Partition, Partitions, TwoColoredPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("part size k = {k} is smaller than the column m = {m}")]
    PartBelowColumn { k: usize, m: usize },
    #[error("column index must be at least 1")]
    ZeroColumn,
    #[error("hook size must be at least 1")]
    ZeroHook,
}

/// Column `m`, fixedness offset `h`, part or hook size `k`, weight `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookQuery {
    pub m: usize,
    pub h: i64,
    pub k: usize,
    pub n: usize,
}

impl HookQuery {
    pub fn new(n: usize, m: usize, h: i64, k: usize) -> Self {
        HookQuery { m, h, k, n }
    }
}

/// One witnessing row: partition `partition` has an `h`-fixed hook at `(row, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedHookWitness {
    pub partition: Partition,
    pub row: usize,
    pub hook: usize,
}

fn fixed_rows<'a>(
    n: usize,
    m: usize,
    h: i64,
    family: Family,
    keep: impl Fn(&Partition, usize, usize) -> bool + 'a,
) -> impl Iterator<Item = FixedHookWitness> + 'a {
    Partitions::new(n).filter(move |p| family.contains(p)).flat_map(move |p| {
        let rows: Vec<(usize, usize)> = p
            .fixed_hook_rows(m, h)
            .map(|i| (i, (i as i64 + h) as usize))
            .filter(|&(i, hook)| keep(&p, i, hook))
            .collect();
        rows.into_iter().map(move |(row, hook)| FixedHookWitness { partition: p.clone(), row, hook })
    })
}

/// Pairs `(lambda, i)` with `lambda_i = k` and `h_{i,m} = i + h`.
pub fn fixed_by_part_witnesses(q: HookQuery, family: Family) -> Result<Vec<FixedHookWitness>, OracleError> {
    if q.m == 0 {
        return Err(OracleError::ZeroColumn);
    }
    if q.k < q.m {
        return Err(OracleError::PartBelowColumn { k: q.k, m: q.m });
    }
    Ok(fixed_rows(q.n, q.m, q.h, family, move |p, i, _| p.part(i) == q.k).collect())
}

pub fn count_fixed_by_part(q: HookQuery, family: Family) -> Result<u64, OracleError> {
    Ok(fixed_by_part_witnesses(q, family)?.len() as u64)
}

/// Pairs `(lambda, i)` with `lambda_i >= m`, `h_{i,m} = k` and `i = k - h`.
///
/// `k = None` sums over every hook size.
pub fn fixed_by_hook_witnesses(
    n: usize,
    m: usize,
    h: i64,
    k: Option<usize>,
    family: Family,
) -> Result<Vec<FixedHookWitness>, OracleError> {
    if m == 0 {
        return Err(OracleError::ZeroColumn);
    }
    if k == Some(0) {
        return Err(OracleError::ZeroHook);
    }
    Ok(fixed_rows(n, m, h, family, move |_, _, hook| k.is_none_or(|k| k == hook)).collect())
}

pub fn count_fixed_by_hook(q: HookQuery, family: Family) -> Result<u64, OracleError> {
    Ok(fixed_by_hook_witnesses(q.n, q.m, q.h, Some(q.k), family)?.len() as u64)
}

/// Cells of hook length `k` in column `m` (or in every column when `m` is
/// `None`), summed over the partitions of `n` in `family`.
pub fn count_hooks_of_size(n: usize, k: usize, m: Option<usize>, family: Family) -> u64 {
    enumerate(n, family)
        .iter()
        .map(|p| match m {
            Some(m) => p.column_hooks(m).into_iter().filter(|&x| x == k).count() as u64,
            None => p.hooks().filter(|&x| x == k).count() as u64,
        })
        .sum()
}

/// A two-colored partition together with the part size `L` it qualifies for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredWitness {
    pub colored: TwoColoredPartition,
    pub part_size: usize,
}

fn qualifies_t11(first: &Partition, l: usize, m: usize) -> bool {
    first.multiplicity(l) == l + m - 1 && (l + 1..=l + 2 * m - 2).all(|s| first.multiplicity(s) == 0)
}

/// Two-colored partitions of `n` (second color on sizes `1..m-1`) in which some
/// part size `L` occurs exactly `L + m - 1` times in the first color while
/// `L+1, ..., L+2m-2` do not occur there. One witness per qualifying `L`.
pub fn colored_thm11_witnesses(n: usize, m: usize) -> Vec<ColoredWitness> {
    if m == 0 {
        return Vec::new();
    }
    TwoColoredPartition::enumerate(n, m - 1)
        .into_iter()
        .flat_map(|c| {
            let sizes: Vec<usize> = (1..=c.first.weight()).filter(|&l| qualifies_t11(&c.first, l, m)).collect();
            sizes.into_iter().map(move |l| ColoredWitness { colored: c.clone(), part_size: l })
        })
        .collect()
}

/// Counts by splitting the weight between the colors instead of materialising
/// every colored partition.
pub fn count_colored_thm11(n: usize, m: usize) -> u64 {
    if m == 0 {
        return 0;
    }
    let second = second_color_counts(n, m - 1);
    (0..=n)
        .map(|a| {
            let firsts: u64 = Partitions::new(a)
                .map(|p| (1..=a).filter(|&l| qualifies_t11(&p, l, m)).count() as u64)
                .sum();
            firsts * second[n - a]
        })
        .sum()
}

fn second_color_counts(n: usize, cap: usize) -> Vec<u64> {
    (0..=n).map(|w| Partitions::with_max_part(w, cap).count() as u64).collect()
}

/// Partitions of `n - m*h` in which `m` is a part exactly once, no part lies in
/// `m+1..=2m-1`, and at least `-h` parts are `>= 2m`.
pub fn count_restricted_thm12(n: usize, m: usize, h: i64) -> u64 {
    let w = n as i64 - m as i64 * h;
    if w < 0 || m == 0 {
        return 0;
    }
    Partitions::new(w as usize)
        .filter(|p| {
            p.multiplicity(m) == 1
                && p.parts().iter().all(|&x| !(m + 1..2 * m).contains(&x))
                && p.parts().iter().filter(|&&x| x >= 2 * m).count() as i64 >= -h
        })
        .count() as u64
}

/// Weight at which the colored side of the part-size-`k` identity is read:
/// `n + C(k-m+1, 2) - k(k-h-m+1)`.
pub fn thm13_shifted_weight(n: usize, m: usize, k: usize, h: i64) -> i64 {
    let (n, m, k) = (n as i64, m as i64, k as i64);
    let t = k - m + 1;
    n + t * (t - 1) / 2 - k * (k - h - m + 1)
}

/// Two-colored partitions of `weight` (second color on `1..m-1`) whose first
/// color avoids `k-m+1..=k+m-1` and contains every size `1..=k-m` at least once.
///
/// The condition does not involve `h`; it enters only through the caller's
/// [`thm13_shifted_weight`].
pub fn count_colored_thm13(weight: i64, m: usize, k: usize) -> u64 {
    if weight < 0 || m == 0 || k < m {
        return 0;
    }
    let n = weight as usize;
    let second = second_color_counts(n, m - 1);
    (0..=n)
        .map(|a| {
            let firsts = Partitions::new(a)
                .filter(|p| {
                    p.parts().iter().all(|&x| !(k + 1 - m..=k + m - 1).contains(&x))
                        && (1..=k - m).all(|s| p.multiplicity(s) > 0)
                })
                .count() as u64;
            firsts * second[n - a]
        })
        .sum()
}
