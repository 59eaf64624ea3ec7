//! Reduced words and their commutation classes.
//!
//! Words act by right multiplication on the identity, and the generator
//! `s_k` swaps the entries at positions `k` and `k + 1`. Two letters commute
//! when their indices differ by at least two. A commutation class is stored
//! by its lexicographically least member.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::Limits;

/// A sequence of generator indices `a_1 ... a_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The identity of `S_n` multiplied on the right by each letter in turn.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        let mut entries: Vec<usize> = (1..=n).collect();
        for &a in &self.letters {
            if a == 0 || a >= n {
                return Err(Error::LetterOutOfRange { letter: a, n });
            }
            entries.swap(a - 1, a);
        }
        Ok(Permutation::from_entries_unchecked(entries))
    }

    /// Whether the word evaluates in `S_n` to a permutation with exactly `len` inversions.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.evaluate(n)
            .map(|w| w.inversion_count() == self.len())
            .unwrap_or(false)
    }

    pub fn reversed(&self) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord { letters }
    }
}

impl From<Vec<usize>> for ReducedWord {
    fn from(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

fn blocks(a: usize, b: usize) -> bool {
    a.abs_diff(b) <= 1
}

/// A commutation class of reduced words, named by its lexicographically least word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommutationClass {
    canonical: ReducedWord,
}

impl CommutationClass {
    /// The class containing `word`.
    pub fn of(word: &ReducedWord) -> Self {
        CommutationClass {
            canonical: canonical_form(word),
        }
    }

    /// Wraps a word already known to be in lexicographic normal form.
    pub(crate) fn from_canonical(canonical: ReducedWord) -> Self {
        debug_assert!(is_lex_normal(canonical.letters()));
        CommutationClass { canonical }
    }

    pub fn canonical(&self) -> &ReducedWord {
        &self.canonical
    }

    /// Generators that begin some word of the class, ascending.
    pub fn initial_letters(&self) -> Vec<usize> {
        let w = self.canonical.letters();
        let mut out: Vec<usize> = (0..w.len())
            .filter(|&p| w[..p].iter().all(|&b| !blocks(b, w[p])))
            .map(|p| w[p])
            .collect();
        out.sort_unstable();
        out
    }

    /// Generators that end some word of the class, ascending.
    pub fn final_letters(&self) -> Vec<usize> {
        let w = self.canonical.letters();
        let mut out: Vec<usize> = (0..w.len())
            .filter(|&p| w[p + 1..].iter().all(|&b| !blocks(b, w[p])))
            .map(|p| w[p])
            .collect();
        out.sort_unstable();
        out
    }

    /// The class of reversed words, a class of the inverse permutation.
    pub fn reversed(&self) -> CommutationClass {
        CommutationClass::of(&self.canonical.reversed())
    }

    /// Number of words in the class: linear extensions of its heap.
    pub fn word_count(&self) -> u128 {
        let w = self.canonical.letters();
        assert!(w.len() <= 128, "word too long for bitmask counting");
        // preds[p]: earlier positions that do not commute with p
        let preds: Vec<u128> = (0..w.len())
            .map(|p| {
                (0..p)
                    .filter(|&q| blocks(w[q], w[p]))
                    .fold(0u128, |m, q| m | (1 << q))
            })
            .collect();
        let mut memo = BTreeMap::new();
        count_extensions(0, &preds, &mut memo)
    }
}

fn count_extensions(used: u128, preds: &[u128], memo: &mut BTreeMap<u128, u128>) -> u128 {
    let l = preds.len();
    if used.count_ones() as usize == l {
        return 1;
    }
    if let Some(&c) = memo.get(&used) {
        return c;
    }
    let total = (0..l)
        .filter(|&p| used & (1 << p) == 0 && preds[p] & !used == 0)
        .map(|p| count_extensions(used | (1 << p), preds, memo))
        .sum();
    memo.insert(used, total);
    total
}

impl fmt::Display for CommutationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Lexicographic normal form: repeatedly emit the smallest letter with no
/// earlier remaining letter within distance one.
pub fn canonical_form(word: &ReducedWord) -> ReducedWord {
    let mut rest: Vec<usize> = word.letters.clone();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let pick = (0..rest.len())
            .filter(|&p| rest[..p].iter().all(|&b| !blocks(b, rest[p])))
            .min_by_key(|&p| rest[p])
            .unwrap();
        out.push(rest.remove(pick));
    }
    ReducedWord { letters: out }
}

/// Whether `letters` is the least word of its commutation class.
///
/// A word fails exactly when some letter could slide left past a larger
/// letter it commutes with.
pub fn is_lex_normal(letters: &[usize]) -> bool {
    (0..letters.len()).all(|j| can_append(&letters[..j], letters[j]))
}

/// Whether appending `a` to a lex-normal `prefix` keeps it lex-normal.
pub(crate) fn can_append(prefix: &[usize], a: usize) -> bool {
    for &b in prefix.iter().rev() {
        if blocks(a, b) {
            return true;
        }
        if b > a {
            return false;
        }
    }
    true
}

/// Every reduced word of `w`, sorted lexicographically.
pub fn reduced_words(w: &Permutation, limits: &Limits) -> Result<Vec<ReducedWord>> {
    let mut out = Vec::new();
    let mut suffix = Vec::with_capacity(w.inversion_count());
    let mut entries = w.entries().to_vec();
    peel_words(&mut entries, &mut suffix, &mut out, limits.max_words)?;
    out.sort_unstable();
    Ok(out)
}

fn peel_words(
    entries: &mut [usize],
    suffix: &mut Vec<usize>,
    out: &mut Vec<ReducedWord>,
    cap: usize,
) -> Result<()> {
    let mut any = false;
    for k in 1..entries.len() {
        if entries[k - 1] > entries[k] {
            any = true;
            entries.swap(k - 1, k);
            suffix.push(k);
            peel_words(entries, suffix, out, cap)?;
            suffix.pop();
            entries.swap(k - 1, k);
        }
    }
    if !any {
        if out.len() == cap {
            return Err(Error::SizeLimitExceeded {
                what: "reduced words",
                limit: cap,
            });
        }
        let mut letters = suffix.clone();
        letters.reverse();
        out.push(ReducedWord { letters });
    }
    Ok(())
}

/// Partitions words of one permutation of `S_n` into commutation classes, sorted by canonical word.
pub fn commutation_classes(words: &[ReducedWord], n: usize) -> Result<Vec<CommutationClass>> {
    let mut owner: Option<Permutation> = None;
    let mut classes = Vec::new();
    for word in words {
        let w = word.evaluate(n)?;
        match &owner {
            Some(o) if *o != w => return Err(Error::MixedPermutations),
            Some(_) => {}
            None => owner = Some(w),
        }
        classes.push(CommutationClass::of(word));
    }
    classes.sort_unstable();
    classes.dedup();
    Ok(classes)
}
