//! Permutations of `S_{2m}` with the maximum `m` forced right-perimeter tiles.
//!
//! These are exactly the down-up alternating 321-avoiding permutations whose
//! odd-position and even-position subsequences both increase. Restricted to
//! fully supported ones they are counted by `C_{m-1}`, through the map
//! [`phi`] from the alternating 321-avoiding permutations of `S_{2m-2}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forced::predicted_forced_right;
use crate::perm::Permutation;
use crate::Limits;

/// A permutation of `S_{2m}` carrying `m` forced right-perimeter tiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalWitness {
    pub w: Permutation,
    pub m: usize,
    pub forced_right_count: usize,
}

impl OptimalWitness {
    pub fn new(w: Permutation) -> Option<Self> {
        if !is_max_forced_right(&w) {
            return None;
        }
        let forced_right_count = predicted_forced_right(&w).len();
        let m = w.len() / 2;
        debug_assert_eq!(forced_right_count, m);
        Some(OptimalWitness {
            w,
            m,
            forced_right_count,
        })
    }
}

/// `w(2k-1) > w(2k)` for every `k`, with both interleaved subsequences increasing.
pub fn is_max_forced_right(w: &Permutation) -> bool {
    let e = w.entries();
    if !e.len().is_multiple_of(2) {
        return false;
    }
    e.chunks(2).all(|p| p[0] > p[1]) && e.windows(3).all(|t| t[0] < t[2])
}

/// Alternating 321-avoiding permutations of even size; the interleaved
/// subsequences of such a permutation always increase.
fn is_avoiding_alternating(v: &Permutation) -> bool {
    v.len().is_multiple_of(2) && v.is_alternating() && v.is_321_avoiding()
}

/// Sends an alternating 321-avoiding `v` in `S_{2m-2}` to a fully supported
/// alternating 321-avoiding permutation of `S_{2m}`.
///
/// Odd positions below `2m - 1` take `v(i) + 1`, even positions above 2 take
/// `v(i - 2) + 1`, position 2 takes 1 and position `2m - 1` takes `2m`.
pub fn phi(v: &Permutation) -> Result<Permutation> {
    if !is_avoiding_alternating(v) {
        return Err(Error::DomainViolation(
            "phi needs an alternating 321-avoiding permutation of even size",
        ));
    }
    let m = v.len() / 2 + 1;
    let size = 2 * m;
    let w: Vec<usize> = (1..=size)
        .map(|i| match i {
            2 => 1,
            i if i == size - 1 => size,
            i if i % 2 == 1 => v.at(i) + 1,
            i => v.at(i - 2) + 1,
        })
        .collect();
    let w = Permutation::from_entries_unchecked(w);
    debug_assert!(
        w.is_fully_supported(),
        "phi({v}) = {w} is not fully supported"
    );
    debug_assert!(w.is_alternating(), "phi({v}) = {w} is not alternating");
    debug_assert!(w.is_321_avoiding(), "phi({v}) = {w} contains 321");
    Ok(w)
}

/// Inverse of [`phi`]: `v(i) = w(i) - 1` at odd `i`, `w(i + 2) - 1` at even `i`.
pub fn phi_inverse(w: &Permutation) -> Result<Permutation> {
    if w.len() < 4 || !w.is_fully_supported() || !is_avoiding_alternating(w) {
        return Err(Error::DomainViolation(
            "phi_inverse needs a fully supported alternating 321-avoiding permutation of size >= 4",
        ));
    }
    let v: Vec<usize> = (1..=w.len() - 2)
        .map(|i| {
            if i % 2 == 1 {
                w.at(i) - 1
            } else {
                w.at(i + 2) - 1
            }
        })
        .collect();
    Permutation::new(v)
}

/// All alternating 321-avoiding permutations of `S_{2m}`, lexicographically.
pub fn enumerate_321_avoiding_alternating(m: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    enumerate(m, false, limits)
}

/// All fully supported alternating 321-avoiding permutations of `S_{2m}`, lexicographically.
///
/// For `m = 1` this is `{21}`.
pub fn enumerate_max_forced(m: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    enumerate(m, true, limits)
}

fn enumerate(m: usize, fully_supported: bool, limits: &Limits) -> Result<Vec<Permutation>> {
    if m == 0 {
        return Err(Error::DomainViolation("m must be at least 1"));
    }
    let mut search = AlternatingSearch {
        size: 2 * m,
        fully_supported,
        used: alloc::vec![false; 2 * m + 1],
        prefix: Vec::with_capacity(2 * m),
        out: Vec::new(),
        cap: limits.max_permutations,
    };
    search.run()?;
    Ok(search.out)
}

struct AlternatingSearch {
    size: usize,
    fully_supported: bool,
    used: Vec<bool>,
    prefix: Vec<usize>,
    out: Vec<Permutation>,
    cap: usize,
}

impl AlternatingSearch {
    fn run(&mut self) -> Result<()> {
        let i = self.prefix.len();
        if i == self.size {
            if self.out.len() == self.cap {
                return Err(Error::SizeLimitExceeded {
                    what: "permutations",
                    limit: self.cap,
                });
            }
            self.out
                .push(Permutation::from_entries_unchecked(self.prefix.clone()));
            return Ok(());
        }
        // 0-based i: even i opens a descent, odd i closes it
        let lower = if i >= 2 { self.prefix[i - 2] + 1 } else { 1 };
        let upper = if i % 2 == 1 {
            self.prefix[i - 1] - 1
        } else {
            self.size
        };
        for v in lower..=upper {
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.prefix.push(v);
            let r = if self.pinches() { Ok(()) } else { self.run() };
            self.prefix.pop();
            self.used[v] = false;
            r?;
        }
        Ok(())
    }

    fn pinches(&self) -> bool {
        let r = self.prefix.len();
        self.fully_supported && r < self.size && self.prefix.iter().max() == Some(&r)
    }
}

/// `C_k = binom(2k, k) / (k + 1)`.
///
/// # Panics
///
/// If `C_k` does not fit in a `u128` (`k > 69`).
pub fn catalan(k: u32) -> u128 {
    let mut c: u128 = 1;
    for j in 1..=k as u128 {
        // C_j = C_{j-1} * 2(2j-1) / (j+1); divide out the common factor first
        let g = gcd(c, j + 1);
        c = (c / g)
            .checked_mul(2 * (2 * j - 1) / ((j + 1) / g))
            .expect("Catalan number overflows u128");
    }
    c
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn names(ws: &[Permutation]) -> Vec<String> {
        ws.iter().map(|w| w.to_compact_string()).collect()
    }

    #[test]
    fn max_forced_examples() {
        assert!(is_max_forced_right(&p("315264")));
        assert!(!is_max_forced_right(&p("325164")));
        assert!(!is_max_forced_right(&p("3412")));
        assert!(!is_max_forced_right(&p("213")));
        assert!(is_max_forced_right(&p("21")));
    }

    #[test]
    fn phi_rows_m4() {
        let rows = [
            ("214365", "31527486"),
            ("215364", "31627485"),
            ("314265", "41527386"),
            ("315264", "41627385"),
            ("415263", "51627384"),
        ];
        for (v, w) in rows {
            assert_eq!(phi(&p(v)).unwrap(), p(w));
            assert_eq!(phi_inverse(&p(w)).unwrap(), p(v));
        }
        assert_eq!(phi(&p("21")).unwrap(), p("3142"));
    }

    #[test]
    fn phi_domain() {
        assert!(matches!(phi(&p("3412")), Err(Error::DomainViolation(_))));
        assert!(matches!(phi(&p("321")), Err(Error::DomainViolation(_))));
        assert!(matches!(phi(&p("1")), Err(Error::DomainViolation(_))));
        assert!(matches!(
            phi_inverse(&p("21")),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            phi_inverse(&p("214365")),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn small_enumerations() {
        let l = Limits::default();
        assert_eq!(
            names(&enumerate_321_avoiding_alternating(1, &l).unwrap()),
            ["21"]
        );
        assert_eq!(
            names(&enumerate_321_avoiding_alternating(3, &l).unwrap()),
            ["214365", "215364", "314265", "315264", "415263"]
        );
        assert_eq!(enumerate_321_avoiding_alternating(4, &l).unwrap().len(), 14);
        assert_eq!(names(&enumerate_max_forced(1, &l).unwrap()), ["21"]);
        assert_eq!(names(&enumerate_max_forced(2, &l).unwrap()), ["3142"]);
        assert_eq!(
            names(&enumerate_max_forced(4, &l).unwrap()),
            ["31527486", "31627485", "41527386", "41627385", "51627384"]
        );
        assert!(enumerate_max_forced(0, &l).is_err());
    }

    #[test]
    fn enumeration_cap() {
        let l = Limits {
            max_permutations: 4,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_321_avoiding_alternating(3, &l),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), 1);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(5), 42);
        let first: Vec<u128> = (0..10).map(catalan).collect();
        assert_eq!(first, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn witness() {
        let wt = OptimalWitness::new(p("315264")).unwrap();
        assert_eq!((wt.m, wt.forced_right_count), (3, 3));
        assert!(OptimalWitness::new(p("3412")).is_none());
    }
}
