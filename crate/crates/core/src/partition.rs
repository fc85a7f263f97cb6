//! Integer partitions, Young-diagram statistics and enumeration.
//!
//! Rows and columns are 1-based, matching the usual `(i, j)` cell convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cell ({row}, {col}) is not in the diagram of {partition}")]
    CellOutOfDiagram { row: usize, col: usize, partition: String },
    #[error("unknown partition family '{0}'")]
    UnknownFamily(String),
}

/// A partition of `n`: weakly decreasing positive parts, with its conjugate cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    conjugate: Vec<usize>,
}

impl Partition {
    /// Zero parts are dropped; the remaining parts must be weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), conjugate: Vec::new() }
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let conjugate = conjugate_parts(&parts);
        Partition { parts, conjugate }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Column lengths, i.e. the parts of the conjugate partition.
    pub fn conjugate_parts(&self) -> &[usize] {
        &self.conjugate
    }

    pub fn conjugate(&self) -> Partition {
        Partition { parts: self.conjugate.clone(), conjugate: self.parts.clone() }
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `lambda_i` (1-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based), i.e. `lambda'_j`.
    pub fn column_len(&self, j: usize) -> usize {
        j.checked_sub(1).and_then(|j| self.conjugate.get(j)).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// `h_{i,j} = lambda_i + lambda'_j - i - j + 1`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize, PartitionError> {
        if !self.contains_cell(i, j) {
            return Err(PartitionError::CellOutOfDiagram { row: i, col: j, partition: self.to_string() });
        }
        Ok(self.part(i) + self.column_len(j) + 1 - i - j)
    }

    /// `(h_{1,m}, ..., h_{t,m})` with `t = lambda'_m`; strictly decreasing.
    pub fn column_hooks(&self, m: usize) -> Vec<usize> {
        let t = self.column_len(m);
        (1..=t).map(|i| self.part(i) + t + 1 - i - m).collect()
    }

    /// Rows `i` of column `m` whose hook equals `i + h`.
    pub fn fixed_hook_rows(&self, m: usize, h: i64) -> impl Iterator<Item = usize> + '_ {
        let t = self.column_len(m);
        (1..=t).filter(move |&i| (self.part(i) + t + 1 - i - m) as i64 == i as i64 + h)
    }

    /// Every hook length of the diagram, row by row.
    pub fn hooks(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().enumerate().flat_map(move |(r, &p)| {
            let i = r + 1;
            (1..=p).map(move |j| p + self.column_len(j) + 1 - i - j)
        })
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Exponent notation, e.g. `(2^4, 1^2)`.
    pub fn to_exponent_string(&self) -> String {
        let runs = runs(&self.parts)
            .map(|(p, c)| if c == 1 { p.to_string() } else { format!("{p}^{c}") })
            .collect::<Vec<_>>();
        format!("({})", runs.join(", "))
    }
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().take_while(|&&p| p >= j).count()).collect()
}

fn runs(parts: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let mut i = 0;
    std::iter::from_fn(move || {
        let p = *parts.get(i)?;
        let c = parts[i..].iter().take_while(|&&x| x == p).count();
        i += c;
        Some((p, c))
    })
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Enumeration filter on partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    All,
    Odd,
    Distinct,
    OddDistinct,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::All, Family::Odd, Family::Distinct, Family::OddDistinct];

    pub fn contains(self, p: &Partition) -> bool {
        match self {
            Family::All => true,
            Family::Odd => p.is_odd(),
            Family::Distinct => p.is_distinct(),
            Family::OddDistinct => p.is_odd() && p.is_distinct(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Odd => "odd",
            Family::Distinct => "distinct",
            Family::OddDistinct => "odd-distinct",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "all" => Ok(Family::All),
            "odd" => Ok(Family::Odd),
            "distinct" => Ok(Family::Distinct),
            "odd-distinct" | "odddistinct" => Ok(Family::OddDistinct),
            _ => Err(PartitionError::UnknownFamily(s.to_string())),
        }
    }
}

/// Partitions of `n` with parts at most `max_part`, in reverse-lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self::with_max_part(n, n)
    }

    pub fn with_max_part(n: usize, max_part: usize) -> Self {
        if n == 0 {
            return Partitions { current: Some(Vec::new()) };
        }
        if max_part == 0 {
            return Partitions { current: None };
        }
        Partitions { current: Some(greedy(n, max_part)) }
    }
}

fn greedy(mut n: usize, cap: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(n / cap + 1);
    while n > 0 {
        let p = n.min(cap);
        v.push(p);
        n -= p;
    }
    v
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // successor: strip trailing ones, decrement the last part > 1 and
        // refill greedily with parts no larger than it
        let ones = cur.iter().rev().take_while(|&&p| p == 1).count();
        let head = cur.len() - ones;
        if head > 0 {
            let mut next = cur[..head - 1].to_vec();
            let x = cur[head - 1] - 1;
            next.extend(greedy(x + 1 + ones, x));
            self.current = Some(next);
        }
        Some(Partition::from_sorted(cur))
    }
}

/// All partitions of `n` in `family`, reverse-lexicographic.
pub fn enumerate(n: usize, family: Family) -> Vec<Partition> {
    Partitions::new(n).filter(|p| family.contains(p)).collect()
}

/// A partition whose parts of size `1..m-1` may carry a second color.
///
/// `first` is an ordinary partition; `second` holds the second-color parts,
/// all of size at most `m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColoredPartition {
    pub first: Partition,
    pub second: Partition,
}

impl TwoColoredPartition {
    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }

    /// All two-colored partitions of `n` whose second color uses sizes `1..=cap`.
    pub fn enumerate(n: usize, cap: usize) -> Vec<TwoColoredPartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let seconds: Vec<Partition> = Partitions::with_max_part(n - a, cap).collect();
            for first in Partitions::new(a) {
                for second in &seconds {
                    out.push(TwoColoredPartition { first: first.clone(), second: second.clone() });
                }
            }
        }
        out
    }
}

impl fmt::Display for TwoColoredPartition {
    /// Exponent notation with second-color parts primed, e.g. `(2'^3, 1', 1^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sizes: Vec<usize> = self.first.parts().iter().chain(self.second.parts()).copied().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes.dedup();
        let mut items = Vec::new();
        for s in sizes {
            for (count, mark) in [(self.second.multiplicity(s), "'"), (self.first.multiplicity(s), "")] {
                match count {
                    0 => {}
                    1 => items.push(format!("{s}{mark}")),
                    c => items.push(format!("{s}{mark}^{c}")),
                }
            }
        }
        write!(f, "({})", items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn figure_one_hooks() {
        let l = p(&[4, 4, 3, 1]);
        assert_eq!(l.hook_length(1, 1).unwrap(), 7);
        assert_eq!(l.hook_length(2, 3).unwrap(), 3);
        assert_eq!(l.hook_length(4, 1).unwrap(), 1);
        let rows: Vec<Vec<usize>> = (1..=4).map(|i| (1..=l.part(i)).map(|j| l.hook_length(i, j).unwrap()).collect()).collect();
        assert_eq!(rows, vec![vec![7, 5, 4, 2], vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]]);
    }

    #[test]
    fn hook_outside_diagram() {
        let l = p(&[4, 4, 3, 1]);
        assert!(matches!(l.hook_length(3, 4), Err(PartitionError::CellOutOfDiagram { .. })));
        assert!(l.hook_length(0, 1).is_err());
        assert!(Partition::empty().hook_length(1, 1).is_err());
    }

    #[test]
    fn column_hook_examples() {
        let l = p(&[4, 4, 3, 1]);
        assert_eq!(l.column_hooks(2), vec![5, 4, 2]);
        assert_eq!(l.column_hooks(1), vec![7, 6, 4, 1]);
        assert!(Partition::empty().column_hooks(3).is_empty());
        assert!(l.column_hooks(5).is_empty());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 4, 3, 1]).conjugate(), p(&[4, 3, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn zero_parts_are_stripped() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 0, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(0, Family::All), vec![Partition::empty()]);
        assert_eq!(enumerate(10, Family::All).len(), 42);
        assert_eq!(enumerate(5, Family::Distinct), vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
        assert_eq!(enumerate(6, Family::OddDistinct), vec![p(&[5, 1])]);
    }

    #[test]
    fn enumeration_is_reverse_lexicographic() {
        let all = enumerate(7, Family::All);
        assert_eq!(all.first().unwrap(), &p(&[7]));
        assert_eq!(all.last().unwrap(), &p(&[1; 7]));
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
    }

    #[test]
    fn restricted_enumeration() {
        let v: Vec<_> = Partitions::with_max_part(5, 2).collect();
        assert_eq!(v, vec![p(&[2, 2, 1]), p(&[2, 1, 1, 1]), p(&[1; 5])]);
        assert_eq!(Partitions::with_max_part(3, 0).count(), 0);
        assert_eq!(Partitions::with_max_part(0, 0).count(), 1);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("odd-distinct".parse::<Family>().unwrap(), Family::OddDistinct);
        assert_eq!("Distinct".parse::<Family>().unwrap(), Family::Distinct);
        assert!("even".parse::<Family>().is_err());
    }

    #[test]
    fn colored_display_matches_table_notation() {
        let c = TwoColoredPartition { first: p(&[1, 1, 1]), second: p(&[2, 2, 2, 1]) };
        assert_eq!(c.to_string(), "(2'^3, 1', 1^3)");
        let c = TwoColoredPartition { first: p(&[2, 2, 2, 2, 1]), second: p(&[1]) };
        assert_eq!(c.to_string(), "(2^4, 1', 1)");
        assert_eq!(c.weight(), 10);
    }

    #[test]
    fn colored_enumeration_counts() {
        // generating function 1 / ((q;q)_inf (1 - q)) at q^3: 1 + 2 + 3 + 3 = 1+1+2+3 partial sums of p
        assert_eq!(TwoColoredPartition::enumerate(3, 1).len(), 1 + 1 + 2 + 3);
        assert_eq!(TwoColoredPartition::enumerate(4, 0).len(), 5);
    }

    #[test]
    fn exponent_notation() {
        assert_eq!(p(&[2, 2, 2, 2, 1, 1]).to_exponent_string(), "(2^4, 1^2)");
        assert_eq!(p(&[7, 1, 1, 1]).to_exponent_string(), "(7, 1^3)");
    }
}
