//! Permutations in one-line notation and the 321-pattern predicates.
//!
//! Positions and values are 1-indexed at every public boundary: `w.at(1)` is
//! the first entry, and a [`ValuePair`] holds values, never positions.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation `w` of `{1..n}`, `n >= 1`, stored in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// An unordered pair of values `{low < high}`. Tiles are named by these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValuePair {
    pub low: usize,
    pub high: usize,
}

impl ValuePair {
    /// Builds the pair from two distinct values in either order.
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            ValuePair { low: a, high: b }
        } else {
            ValuePair { low: b, high: a }
        }
    }
}

impl fmt::Display for ValuePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.low, self.high)
    }
}

impl Permutation {
    /// Validates one-line notation. Fails unless `entries` is a bijection on `1..=len`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotABijection);
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotABijection);
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    /// The longest element `n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            entries: (1..=n).rev().collect(),
        }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: permutations have at least one entry.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `w(i)`, 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    /// `w · s_k`: swaps the entries at positions `k` and `k + 1`.
    pub fn times_generator(&self, k: usize) -> Permutation {
        let mut entries = self.entries.clone();
        entries.swap(k - 1, k);
        Permutation { entries }
    }

    /// Positions `k` with `w(k) > w(k+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// All `{x < y}` such that `y` appears before `x`, sorted.
    pub fn inversion_pairs(&self) -> Vec<ValuePair> {
        let mut pairs = Vec::new();
        for (i, &a) in self.entries.iter().enumerate() {
            for &b in &self.entries[i + 1..] {
                if a > b {
                    pairs.push(ValuePair { low: b, high: a });
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    pub fn inversion_count(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| self.entries[i + 1..].iter().filter(|&&b| b < a).count())
            .sum()
    }

    /// No proper prefix of the one-line notation is `{1..r}`.
    ///
    /// `n = 1` is vacuously fully supported.
    pub fn is_fully_supported(&self) -> bool {
        let n = self.len();
        let mut max = 0;
        for (r, &v) in self.entries.iter().enumerate().take(n - 1) {
            max = max.max(v);
            if max == r + 1 {
                return false;
            }
        }
        true
    }

    /// Values larger than everything to their left, ascending.
    pub fn lr_maxima(&self) -> Vec<usize> {
        self.collect_marked(&self.lr_max_mask())
    }

    /// Values smaller than everything to their left, ascending.
    pub fn lr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for &v in &self.entries {
            if v < min {
                min = v;
                out.push(v);
            }
        }
        out.sort_unstable();
        out
    }

    /// Values larger than everything to their right, ascending.
    pub fn rl_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0;
        for &v in self.entries.iter().rev() {
            if v > max {
                max = v;
                out.push(v);
            }
        }
        out.sort_unstable();
        out
    }

    /// Values smaller than everything to their right, ascending.
    pub fn rl_minima(&self) -> Vec<usize> {
        self.collect_marked(&self.rl_min_mask())
    }

    /// `mask[i]` is set when the entry at 0-based position `i` is a LR-max.
    pub(crate) fn lr_max_mask(&self) -> Vec<bool> {
        let mut max = 0;
        self.entries
            .iter()
            .map(|&v| {
                let hit = v > max;
                max = max.max(v);
                hit
            })
            .collect()
    }

    pub(crate) fn rl_min_mask(&self) -> Vec<bool> {
        let mut min = usize::MAX;
        let mut mask: Vec<bool> = self
            .entries
            .iter()
            .rev()
            .map(|&v| {
                let hit = v < min;
                min = min.min(v);
                hit
            })
            .collect();
        mask.reverse();
        mask
    }

    fn collect_marked(&self, mask: &[bool]) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .entries
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&v, _)| v)
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether the entries at positions `i < j` extend to a decreasing triple
    /// with some third position.
    pub fn together_in_321(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.len();
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::BadPositions { i, j, n });
        }
        let (a, b) = (self.at(i), self.at(j));
        if a < b {
            return Ok(false);
        }
        let e = &self.entries;
        // third entry before, between, or after the pair
        let before = e[..i - 1].iter().any(|&v| v > a);
        let between = e[i..j - 1].iter().any(|&v| b < v && v < a);
        let after = e[j..].iter().any(|&v| v < b);
        Ok(before || between || after)
    }

    /// Value-level form of [`Permutation::together_in_321`].
    pub fn values_together_in_321(&self, x: usize, y: usize) -> bool {
        let inv = self.inverse();
        let (p, q) = (inv.at(x), inv.at(y));
        let (i, j) = if p < q { (p, q) } else { (q, p) };
        self.together_in_321(i, j).unwrap_or(false)
    }

    /// No entry has both a larger entry before it and a smaller one after it.
    pub fn is_321_avoiding(&self) -> bool {
        let lr = self.lr_max_mask();
        let rl = self.rl_min_mask();
        // an entry that is neither a LR-max nor a RL-min is the middle of a 321
        lr.iter().zip(&rl).all(|(&a, &b)| a || b)
    }

    /// Every 321 occurrence, reported as value triples `[x, y, z]` with `x < y < z`, sorted.
    pub fn occurrences_321(&self) -> Vec<[usize; 3]> {
        let e = &self.entries;
        let mut out = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] < e[j] {
                    continue;
                }
                for h in j + 1..e.len() {
                    if e[j] > e[h] {
                        out.push([e[h], e[j], e[i]]);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Down-up alternating: `w(1) > w(2) < w(3) > w(4) < ...`.
    pub fn is_alternating(&self) -> bool {
        self.len() >= 2
            && self.entries.windows(2).enumerate().all(|(k, p)| {
                if k % 2 == 0 {
                    p[0] > p[1]
                } else {
                    p[0] < p[1]
                }
            })
    }

    /// Lexicographic iterator over all of `S_n`.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

/// Iterator returned by [`Permutation::all`].
#[derive(Clone, Debug)]
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut e = current.entries.clone();
        if let Some(pivot) = (0..e.len().saturating_sub(1))
            .rev()
            .find(|&i| e[i] < e[i + 1])
        {
            let succ = (pivot + 1..e.len())
                .rev()
                .find(|&j| e[j] > e[pivot])
                .unwrap();
            e.swap(pivot, succ);
            e[pivot + 1..].reverse();
            self.next = Some(Permutation { entries: e });
        }
        Some(current)
    }
}

/// Compact digits (`34251`) when `n <= 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.entries.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Accepts `34251` (only for `n <= 9`) or `3,4,2,5,1` (any `n`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::NotABijection))
                .collect::<Result<Vec<_>>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::NotABijection);
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or(Error::NotABijection)
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.entries
    }
}

impl Permutation {
    /// Same as the `Display` output, as an owned string.
    pub fn to_compact_string(&self) -> String {
        alloc::format!("{self}")
    }
}
