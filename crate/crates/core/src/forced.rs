//! Forced and α-forced perimeter tiles.
//!
//! [`forced_tiles`] enumerates every tiling and intersects the geometrically
//! detected perimeter sets. The `predicted_*` functions give the same sets
//! from 321-pattern conditions without enumerating anything, each in two
//! equivalent forms (pattern form and LR/RL-extremum form) that are checked
//! against each other in debug builds. [`verify_theorem`] compares the two
//! routes over all of `S_n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::optimal;
use crate::perm::{Permutation, ValuePair};
use crate::tiling::{
    for_each_class, place_word, subhexagons, tilings, transpose_tiling, PerimeterType,
    PolygonEmbedding,
};
use crate::Limits;

/// Exact proportion of tilings, in `[0, 1]`.
pub type Frequency = Ratio<u64>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TypeReport {
    /// Tiles of this type present in every tiling, sorted.
    pub forced: Vec<ValuePair>,
    /// Tiles that are of this type in at least one tiling.
    pub frequencies: BTreeMap<ValuePair, Frequency>,
}

/// Brute-force forcing data for one permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedReport {
    pub owner: Permutation,
    pub tiling_count: usize,
    types: [TypeReport; 4],
}

impl ForcedReport {
    pub fn of_type(&self, ty: PerimeterType) -> &TypeReport {
        &self.types[ty.index()]
    }

    pub fn forced(&self, ty: PerimeterType) -> &[ValuePair] {
        &self.types[ty.index()].forced
    }

    /// Zero for tiles that never show up with this type.
    pub fn frequency(&self, ty: PerimeterType, tile: ValuePair) -> Frequency {
        self.types[ty.index()]
            .frequencies
            .get(&tile)
            .copied()
            .unwrap_or_else(|| Ratio::from_integer(0))
    }
}

/// Enumerates all tilings of `X(w)` and records, per type, how often each tile is a perimeter tile.
pub fn forced_tiles(w: &Permutation, limits: &Limits) -> Result<ForcedReport> {
    let embedding = PolygonEmbedding::new(w)?;
    let n = w.len();
    let mut counts: [BTreeMap<ValuePair, u64>; 4] = Default::default();
    let total = for_each_class(w, limits, |word| {
        let tiles = place_word(n, word).expect("enumerated words are reduced");
        for ty in PerimeterType::ALL {
            for t in embedding.perimeter_tiles(&tiles, ty) {
                *counts[ty.index()].entry(t.label).or_insert(0) += 1;
            }
        }
    })?;
    let types = counts.map(|c| {
        let forced = c
            .iter()
            .filter(|&(_, &k)| k == total as u64)
            .map(|(&t, _)| t)
            .collect();
        let frequencies = c
            .into_iter()
            .map(|(t, k)| (t, Ratio::new(k, total as u64)))
            .collect();
        TypeReport {
            forced,
            frequencies,
        }
    });
    Ok(ForcedReport {
        owner: w.clone(),
        tiling_count: total,
        types,
    })
}

/// Proportion of tilings of `X(w)` in which `tile` is a perimeter tile of type `ty`.
pub fn tile_frequency(
    w: &Permutation,
    tile: ValuePair,
    ty: PerimeterType,
    limits: &Limits,
) -> Result<Frequency> {
    Ok(forced_tiles(w, limits)?.frequency(ty, tile))
}

/// `{x, y}` for each descent `x = w(k) > y = w(k+1)` with `x` a LR-max and `y` a RL-min.
pub fn predicted_forced_right(w: &Permutation) -> Vec<ValuePair> {
    let lr = w.lr_max_mask();
    let rl = w.rl_min_mask();
    let mut out: Vec<ValuePair> = w
        .descents()
        .into_iter()
        .filter(|&k| lr[k - 1] && rl[k])
        .map(|k| ValuePair::new(w.at(k), w.at(k + 1)))
        .collect();
    out.sort_unstable();
    debug_assert_eq!(out, forced_right_by_pattern(w));
    out
}

/// Descents whose two entries are not together in a 321.
pub fn forced_right_by_pattern(w: &Permutation) -> Vec<ValuePair> {
    let mut out: Vec<ValuePair> = w
        .descents()
        .into_iter()
        .filter(|&k| !w.together_in_321(k, k + 1).unwrap())
        .map(|k| ValuePair::new(w.at(k), w.at(k + 1)))
        .collect();
    out.sort_unstable();
    out
}

/// `{k, k+1}` where `k + 1` precedes `k`, `k + 1` is a LR-max and `k` a RL-min.
pub fn predicted_forced_left(w: &Permutation) -> Vec<ValuePair> {
    let inv = w.inverse();
    let lr = w.lr_max_mask();
    let rl = w.rl_min_mask();
    let out: Vec<ValuePair> = (1..w.len())
        .filter(|&k| inv.at(k) > inv.at(k + 1) && lr[inv.at(k + 1) - 1] && rl[inv.at(k) - 1])
        .map(|k| ValuePair::new(k, k + 1))
        .collect();
    debug_assert_eq!(out, forced_left_by_pattern(w));
    out
}

pub fn forced_left_by_pattern(w: &Permutation) -> Vec<ValuePair> {
    let inv = w.inverse();
    (1..w.len())
        .filter(|&k| inv.at(k) > inv.at(k + 1) && !w.values_together_in_321(k, k + 1))
        .map(|k| ValuePair::new(k, k + 1))
        .collect()
}

/// `{1, w(1)}` when the first entry after `w(1)` that undercuts it is 1.
pub fn predicted_forced_top(w: &Permutation) -> Option<ValuePair> {
    let first = w.at(1);
    let out = if first == 1 {
        None
    } else {
        let next_min = w.entries()[1..].iter().copied().find(|&v| v < first);
        (next_min == Some(1)).then(|| ValuePair::new(1, first))
    };
    debug_assert_eq!(out, forced_top_by_pattern(w));
    out
}

pub fn forced_top_by_pattern(w: &Permutation) -> Option<ValuePair> {
    let first = w.at(1);
    (first != 1 && !w.values_together_in_321(first, 1)).then(|| ValuePair::new(1, first))
}

/// `{n, w(n)}` when, reading leftward from `w(n)`, the first entry exceeding it is `n`.
pub fn predicted_forced_bottom(w: &Permutation) -> Option<ValuePair> {
    let n = w.len();
    let last = w.at(n);
    let out = if last == n {
        None
    } else {
        let next_max = w.entries()[..n - 1]
            .iter()
            .rev()
            .copied()
            .find(|&v| v > last);
        (next_max == Some(n)).then(|| ValuePair::new(last, n))
    };
    debug_assert_eq!(out, forced_bottom_by_pattern(w));
    out
}

pub fn forced_bottom_by_pattern(w: &Permutation) -> Option<ValuePair> {
    let n = w.len();
    let last = w.at(n);
    (last != n && !w.values_together_in_321(n, last)).then(|| ValuePair::new(last, n))
}

/// Predicted forced set for any type.
pub fn predicted_forced(w: &Permutation, ty: PerimeterType) -> Vec<ValuePair> {
    match ty {
        PerimeterType::Left => predicted_forced_left(w),
        PerimeterType::Right => predicted_forced_right(w),
        PerimeterType::Top => predicted_forced_top(w).into_iter().collect(),
        PerimeterType::Bottom => predicted_forced_bottom(w).into_iter().collect(),
    }
}

/// Statements checkable by [`verify_theorem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    ForceRight,
    ForceLeft,
    ForceTop,
    ForceBottom,
    RightAtTop,
    Hexagon,
    Tau,
    Labels,
    OptimalChar,
    Catalan,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::ForceRight,
        Theorem::ForceLeft,
        Theorem::ForceTop,
        Theorem::ForceBottom,
        Theorem::RightAtTop,
        Theorem::Hexagon,
        Theorem::Tau,
        Theorem::Labels,
        Theorem::OptimalChar,
        Theorem::Catalan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::ForceRight => "force-right",
            Theorem::ForceLeft => "force-left",
            Theorem::ForceTop => "force-top",
            Theorem::ForceBottom => "force-bottom",
            Theorem::RightAtTop => "right-at-top",
            Theorem::Hexagon => "hexagon",
            Theorem::Tau => "tau",
            Theorem::Labels => "labels",
            Theorem::OptimalChar => "optimal-char",
            Theorem::Catalan => "catalan",
        }
    }

    /// Catalan checks are sized by the half-size `m`; everything else by `n`.
    pub fn sized_by_m(self) -> bool {
        self == Theorem::Catalan
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or(Error::UnknownTheorem)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub permutation: Permutation,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: Theorem,
    /// `n`, or `m` for [`Theorem::sized_by_m`].
    pub size: usize,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `theorem` on every fully supported permutation of `S_size`
/// (or, for Catalan counts, for every `m` up to `size`).
pub fn verify_theorem(theorem: Theorem, size: usize, limits: &Limits) -> Result<VerifyReport> {
    if theorem == Theorem::Catalan {
        return verify_catalan(size, limits);
    }
    if size == 0 {
        return Err(Error::DomainViolation("n must be at least 1"));
    }
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for w in Permutation::all(size).filter(Permutation::is_fully_supported) {
        checked += 1;
        if let Some(detail) = check_permutation(theorem, &w, limits)? {
            counterexamples.push(Counterexample {
                permutation: w,
                detail,
            });
        }
    }
    Ok(VerifyReport {
        theorem,
        size,
        checked,
        counterexamples,
    })
}

fn fmt_pairs(pairs: &[ValuePair]) -> String {
    let parts: Vec<String> = pairs.iter().map(|p| format!("{p}")).collect();
    format!("[{}]", parts.join(","))
}

/// Checks one fully supported permutation. `Ok(None)` means it agrees.
///
/// Not defined for [`Theorem::Catalan`], which is not a per-permutation statement.
pub fn check_permutation(
    theorem: Theorem,
    w: &Permutation,
    limits: &Limits,
) -> Result<Option<String>> {
    let against_brute = |ty: PerimeterType| -> Result<Option<String>> {
        let report = forced_tiles(w, limits)?;
        let brute = report.forced(ty);
        let predicted = predicted_forced(w, ty);
        Ok((brute != predicted.as_slice()).then(|| {
            format!(
                "{ty}: brute force {} vs predicted {}",
                fmt_pairs(brute),
                fmt_pairs(&predicted)
            )
        }))
    };
    match theorem {
        Theorem::ForceRight => against_brute(PerimeterType::Right),
        Theorem::ForceLeft => against_brute(PerimeterType::Left),
        Theorem::ForceTop => against_brute(PerimeterType::Top),
        Theorem::ForceBottom => against_brute(PerimeterType::Bottom),
        Theorem::RightAtTop => check_right_at_top(w, limits),
        Theorem::Hexagon => check_hexagon(w, limits),
        Theorem::Tau => check_tau(w, limits),
        Theorem::Labels => check_labels(w, limits),
        Theorem::OptimalChar => check_optimal_char(w, limits),
        Theorem::Catalan => Err(Error::DomainViolation(
            "catalan is not a per-permutation check",
        )),
    }
}

fn check_right_at_top(w: &Permutation, limits: &Limits) -> Result<Option<String>> {
    let n = w.len();
    if n < 2 {
        return Ok(None);
    }
    let r = forced_tiles(w, limits)?;
    let has = |ty, t: ValuePair| r.forced(ty).contains(&t);
    use PerimeterType::*;
    let implications = [
        (Right, ValuePair::new(w.at(1), w.at(2)), Top),
        (Left, ValuePair::new(1, 2), Top),
        (Right, ValuePair::new(w.at(n - 1), w.at(n)), Bottom),
        (Left, ValuePair::new(n - 1, n), Bottom),
    ];
    for (from, tile, to) in implications {
        if has(from, tile) && !has(to, tile) {
            return Ok(Some(format!("{tile} forced {from} but not forced {to}")));
        }
    }
    Ok(None)
}

fn check_hexagon(w: &Permutation, limits: &Limits) -> Result<Option<String>> {
    let mut seen = BTreeSet::new();
    for t in tilings(w, limits)? {
        seen.extend(subhexagons(&t));
    }
    let occurrences: BTreeSet<[usize; 3]> = w.occurrences_321().into_iter().collect();
    Ok((seen != occurrences)
        .then(|| format!("subhexagons {seen:?} vs 321 occurrences {occurrences:?}")))
}

fn check_tau(w: &Permutation, limits: &Limits) -> Result<Option<String>> {
    let inv = w.inverse();
    let relabel = |p: ValuePair| ValuePair::new(inv.at(p.low), inv.at(p.high));
    let ts = tilings(w, limits)?;
    let mut images = Vec::with_capacity(ts.len());
    for t in &ts {
        let image = transpose_tiling(t);
        if transpose_tiling(&image) != *t {
            return Ok(Some(format!("tau is not an involution on {}", t.class)));
        }
        for (from, to) in [
            (PerimeterType::Right, PerimeterType::Left),
            (PerimeterType::Left, PerimeterType::Right),
        ] {
            let mut moved: Vec<ValuePair> =
                t.perimeter_labels(from).into_iter().map(relabel).collect();
            moved.sort_unstable();
            if moved != image.perimeter_labels(to) {
                return Ok(Some(format!(
                    "{from} tiles of {} do not become {to} tiles",
                    t.class
                )));
            }
        }
        let mut moved: Vec<ValuePair> = t.tiles.iter().map(|x| relabel(x.label)).collect();
        let mut target: Vec<ValuePair> = image.tiles.iter().map(|x| x.label).collect();
        moved.sort_unstable();
        target.sort_unstable();
        if moved != target {
            return Ok(Some(format!(
                "tile labels of {} do not correspond",
                t.class
            )));
        }
        images.push(image.class);
    }
    images.sort_unstable();
    let direct: Vec<_> = tilings(&inv, limits)?
        .into_iter()
        .map(|t| t.class)
        .collect();
    if images != direct {
        return Ok(Some(format!("tau(T(w)) differs from T({inv})")));
    }
    // predicate-level duality between left and right forcing
    let inv_of_inv = |p: ValuePair| ValuePair::new(w.at(p.low), w.at(p.high));
    let mut dual: Vec<ValuePair> = predicted_forced_right(&inv)
        .into_iter()
        .map(inv_of_inv)
        .collect();
    dual.sort_unstable();
    if dual != predicted_forced_left(w) {
        return Ok(Some(format!(
            "forced left {} vs relabeled forced right of inverse {}",
            fmt_pairs(&predicted_forced_left(w)),
            fmt_pairs(&dual)
        )));
    }
    Ok(None)
}

fn check_labels(w: &Permutation, limits: &Limits) -> Result<Option<String>> {
    let expected = w.inversion_pairs();
    let embedding = PolygonEmbedding::new(w)?;
    let area = embedding.twice_area();
    for t in tilings(w, limits)? {
        let mut labels: Vec<ValuePair> = t.tiles.iter().map(|x| x.label).collect();
        labels.sort_unstable();
        if labels != expected {
            return Ok(Some(format!(
                "tiling {} has labels {}",
                t.class,
                fmt_pairs(&labels)
            )));
        }
        let tiled: i64 = t.tiles.iter().map(|x| x.twice_area()).sum();
        if tiled != area {
            return Ok(Some(format!(
                "tiling {} covers area {tiled}/2, polygon has {area}/2",
                t.class
            )));
        }
        for tile in &t.tiles {
            let v = tile.vertices();
            if (0..4).any(|i| (i + 1..4).any(|j| v[i] == v[j])) {
                return Ok(Some(format!("tile {} is degenerate", tile.label)));
            }
        }
    }
    Ok(None)
}

fn check_optimal_char(w: &Permutation, limits: &Limits) -> Result<Option<String>> {
    let n = w.len();
    let claimed = optimal::is_max_forced_right(w);
    let structural = n.is_multiple_of(2) && w.is_alternating() && w.is_321_avoiding();
    if claimed != structural {
        return Ok(Some(format!(
            "display conditions {claimed} vs alternating 321-avoiding {structural}"
        )));
    }
    let brute = forced_tiles(w, limits)?.forced(PerimeterType::Right).len();
    let maximal = n.is_multiple_of(2) && brute == n / 2;
    if claimed != maximal {
        return Ok(Some(format!(
            "display conditions {claimed} but {brute} forced right tiles"
        )));
    }
    if claimed && crate::tiling::tiling_count(w, limits)? != 1 {
        return Ok(Some(String::from(
            "maximally forced but more than one tiling",
        )));
    }
    Ok(None)
}

fn verify_catalan(max_m: usize, limits: &Limits) -> Result<VerifyReport> {
    if max_m == 0 {
        return Err(Error::DomainViolation("m must be at least 1"));
    }
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    let mut fail = |w: Permutation, detail: String| {
        counterexamples.push(Counterexample {
            permutation: w,
            detail,
        })
    };
    for m in 1..=max_m {
        let avoiding = optimal::enumerate_321_avoiding_alternating(m, limits)?;
        let maximal = optimal::enumerate_max_forced(m, limits)?;
        checked += avoiding.len() + maximal.len();
        let witness = Permutation::longest(2 * m);
        if avoiding.len() as u128 != optimal::catalan(m as u32) {
            fail(
                witness.clone(),
                format!(
                    "m={m}: {} avoiding alternating, C_m = {}",
                    avoiding.len(),
                    optimal::catalan(m as u32)
                ),
            );
        }
        if maximal.len() as u128 != optimal::catalan(m as u32 - 1) {
            fail(
                witness.clone(),
                format!(
                    "m={m}: {} maximal, C_(m-1) = {}",
                    maximal.len(),
                    optimal::catalan(m as u32 - 1)
                ),
            );
        }
        if m >= 2 {
            let prev = optimal::enumerate_321_avoiding_alternating(m - 1, limits)?;
            let mut image = prev.iter().map(optimal::phi).collect::<Result<Vec<_>>>()?;
            image.sort_unstable();
            if image != maximal {
                fail(
                    witness.clone(),
                    format!("m={m}: phi image differs from the maximal set"),
                );
            }
            for (v, w) in prev.iter().zip(prev.iter().map(optimal::phi)) {
                let w = w?;
                if optimal::phi_inverse(&w)? != *v {
                    fail(w, format!("phi_inverse(phi({v})) != {v}"));
                }
            }
        }
    }
    Ok(VerifyReport {
        theorem: Theorem::Catalan,
        size: max_m,
        checked,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn vp(a: usize, b: usize) -> ValuePair {
        ValuePair::new(a, b)
    }

    #[test]
    fn forced_34251() {
        let r = forced_tiles(&p("34251"), &Limits::default()).unwrap();
        assert_eq!(r.tiling_count, 3);
        assert_eq!(r.forced(PerimeterType::Right), [vp(1, 5)]);
        assert_eq!(r.forced(PerimeterType::Bottom), [vp(1, 5)]);
        assert!(r.forced(PerimeterType::Left).is_empty());
        assert!(r.forced(PerimeterType::Top).is_empty());
    }

    #[test]
    fn forced_321_and_21() {
        let r = forced_tiles(&p("321"), &Limits::default()).unwrap();
        for ty in PerimeterType::ALL {
            assert!(r.forced(ty).is_empty(), "{ty}");
        }
        let r = forced_tiles(&p("21"), &Limits::default()).unwrap();
        for ty in PerimeterType::ALL {
            assert_eq!(r.forced(ty), [vp(1, 2)]);
        }
    }

    #[test]
    fn predicted_right_examples() {
        assert_eq!(predicted_forced_right(&p("34251")), vec![vp(1, 5)]);
        assert_eq!(
            predicted_forced_right(&p("315264")),
            vec![vp(1, 3), vp(2, 5), vp(4, 6)]
        );
        assert_eq!(predicted_forced_right(&p("3412")), vec![vp(1, 4)]);
    }

    #[test]
    fn predicted_left_examples() {
        assert!(predicted_forced_left(&p("34251")).is_empty());
        assert_eq!(predicted_forced_left(&p("2341")), vec![vp(1, 2)]);
        assert_eq!(predicted_forced_left(&p("21")), vec![vp(1, 2)]);
        let brute = forced_tiles(&p("2341"), &Limits::default()).unwrap();
        assert_eq!(brute.forced(PerimeterType::Left), [vp(1, 2)]);
    }

    #[test]
    fn predicted_top_bottom_examples() {
        assert_eq!(predicted_forced_top(&p("2341")), Some(vp(1, 2)));
        assert_eq!(predicted_forced_top(&p("34251")), None);
        assert_eq!(predicted_forced_top(&p("21")), Some(vp(1, 2)));
        assert_eq!(predicted_forced_bottom(&p("34251")), Some(vp(1, 5)));
        assert_eq!(predicted_forced_bottom(&p("321")), None);
        assert_eq!(predicted_forced_bottom(&p("21")), Some(vp(1, 2)));
        assert_eq!(predicted_forced_top(&p("1")), None);
        assert_eq!(predicted_forced_bottom(&p("1")), None);
    }

    #[test]
    fn frequency_examples() {
        let l = Limits::default();
        assert_eq!(
            tile_frequency(&p("34251"), vp(1, 5), PerimeterType::Right, &l).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            tile_frequency(&p("321"), vp(1, 3), PerimeterType::Top, &l).unwrap(),
            Ratio::new(1, 2)
        );
        assert_eq!(
            tile_frequency(&p("34251"), vp(3, 4), PerimeterType::Left, &l).unwrap(),
            Ratio::from_integer(0)
        );
        assert!(matches!(
            tile_frequency(&p("12"), vp(1, 2), PerimeterType::Left, &l),
            Err(Error::NotFullySupported(_))
        ));
    }

    #[test]
    fn example_2341() {
        let r = forced_tiles(&p("2341"), &Limits::default()).unwrap();
        assert_eq!(r.forced(PerimeterType::Top), [vp(1, 2)]);
        assert!(!r.forced(PerimeterType::Right).contains(&vp(2, 3)));
        let report = verify_theorem(Theorem::RightAtTop, 4, &Limits::default()).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!(
            "force-middle".parse::<Theorem>(),
            Err(Error::UnknownTheorem)
        );
    }

    #[test]
    fn small_theorem_runs() {
        let l = Limits::default();
        for t in Theorem::ALL {
            let size = if t.sized_by_m() { 3 } else { 4 };
            let r = verify_theorem(t, size, &l).unwrap();
            assert!(r.passed(), "{t}: {:?}", r.counterexamples);
            assert!(r.checked > 0);
        }
    }
}
