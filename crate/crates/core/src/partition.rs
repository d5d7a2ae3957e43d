//! Integer partitions and the handful of diagram operations the modification
//! rules are built from.
//!
//! Conventions: rows are indexed from 1 in documentation, from 0 in code.
//! The transpose is written `λ†`; `λ†₁` is the length of the first column.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering compares the parts lexicographically, which is what
/// the sorted listings in this crate use after grouping by size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, dropping trailing zeros.
    ///
    /// Fails if the parts increase anywhere or a zero is followed by a
    /// positive entry.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    /// Builds the partition whose column lengths are `columns`.
    pub fn from_columns(columns: &[usize]) -> Result<Self, Error> {
        Ok(Partition::new(columns.to_vec())?.transpose())
    }

    /// The column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row, `λ₁`.
    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    /// Length of the `j`-th column (0-based), i.e. `λ†_{j+1}`.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }

    pub fn transpose(&self) -> Partition {
        let cols = (0..self.first_row()).map(|j| self.column_len(j)).collect();
        Partition { parts: cols }
    }

    /// Number of boxes on the main diagonal.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Frobenius coordinates `(a₁..a_r | b₁..b_r)`, arm and leg lengths of
    /// the diagonal boxes with the box itself counted in both.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let r = self.rank();
        let t = self.transpose();
        let a = (0..r).map(|i| self.parts[i] - i).collect();
        let b = (0..r).map(|i| t.parts[i] - i).collect();
        (a, b)
    }

    /// Inverse of [`Partition::frobenius`].
    pub fn from_frobenius(a: &[usize], b: &[usize]) -> Result<Self, Error> {
        let bad = || Error::InvalidFrobenius(a.to_vec(), b.to_vec());
        if a.len() != b.len()
            || a.iter().chain(b).any(|&x| x == 0)
            || a.windows(2).any(|w| w[0] <= w[1])
            || b.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(bad());
        }
        let r = a.len();
        let rows = b.first().copied().unwrap_or(0);
        let mut parts = vec![0usize; rows];
        for (i, part) in parts.iter_mut().enumerate() {
            if i < r {
                *part = a[i] + i;
            } else {
                // Below the diagonal block: row i meets column j iff b_j + j > i.
                *part = (0..r).filter(|&j| b[j] + j > i).count();
            }
        }
        Partition::new(parts).map_err(|_| bad())
    }

    /// Hook length of the box in row `i`, column `j` (both 0-based).
    pub fn hook(&self, i: usize, j: usize) -> Option<usize> {
        if self.part(i) <= j {
            return None;
        }
        Some(self.parts[i] - j + self.column_len(j) - i - 1)
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Appends `count` rows of the given length below the last row.
    pub fn with_rows(&self, length: usize, count: usize) -> Result<Partition, Error> {
        let mut parts = self.parts.clone();
        parts.extend(core::iter::repeat_n(length, count));
        Partition::new(parts)
    }

    /// Removes the border strip of `strip_len` boxes that starts at the first
    /// box of the final row, returning the remaining partition and the number
    /// of columns the strip occupies.
    ///
    /// Such a strip exists exactly when some first-column box has hook length
    /// `strip_len`. Removing it is the same as removing that hook and sliding
    /// every row below it one step up and one step left.
    pub fn remove_border_strip(&self, strip_len: usize) -> Option<(Partition, usize)> {
        assert!(strip_len >= 1, "border strips have at least one box");
        let l = self.len();
        // First-column hook of row r is λ_r + (ℓ - r - 1) with r 0-based.
        let r = (0..l).find(|&r| self.parts[r] + l - r - 1 == strip_len)?;
        let mut parts = self.parts[..r].to_vec();
        parts.extend(self.parts[r + 1..].iter().map(|&p| p - 1));
        let rest = Partition::from_unsorted(parts);
        debug_assert_eq!(rest.size() + strip_len, self.size());
        Some((rest, self.parts[r]))
    }

    /// Number of boxes in the first two columns, `λ†₁ + λ†₂`.
    pub fn first_two_columns(&self) -> usize {
        self.column_len(0) + self.column_len(1)
    }

    /// Replaces the first column length `λ†₁` by `m - λ†₁`.
    pub fn sigma_conjugate(&self, m: usize) -> Result<Partition, Error> {
        if self.first_two_columns() > m {
            return Err(Error::Inadmissible {
                group: crate::Group::O(m),
                label: self.to_text(),
            });
        }
        let mut cols = self.transpose().parts;
        let first = m - self.column_len(0);
        if cols.is_empty() {
            cols.push(first);
        } else {
            cols[0] = first;
        }
        Partition::from_columns(&cols)
    }

    /// The member of `{λ, λ^σ}` whose first column has at most `⌊m/2⌋` boxes.
    pub fn bar(&self, m: usize) -> Result<Partition, Error> {
        let conjugate = self.sigma_conjugate(m)?;
        if self.column_len(0) <= m / 2 {
            Ok(self.clone())
        } else {
            Ok(conjugate)
        }
    }

    /// Comma-separated parts, `"0"` for the empty partition.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        write!(s, "{self}").unwrap();
        s
    }

    /// Partitions of `n` in lexicographically increasing order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out.reverse();
        out
    }

    /// Every partition with `|λ| ≤ max_size`, sorted by size and then
    /// lexicographically.
    pub fn all_up_to(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::all_of_size).collect()
    }
}

// Emits partitions of `n` with parts ≤ `max` in lexicographically decreasing
// order.
fn fill_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        fill_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(String::from(s)))?;
        if parts.contains(&0) {
            return Err(Error::Parse(String::from(s)));
        }
        Partition::new(parts).map_err(|_| Error::Parse(String::from(s)))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::from(&parts[..])
    }
}

/// A pair `(λ, λ′)` labelling a rational representation of `GL(n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub plus: Partition,
    pub minus: Partition,
}

impl PartitionPair {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        PartitionPair { plus, minus }
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.plus, self.minus)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_text(),
                inner: inner.to_text(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
