//! Exhaustive invariants over small symmetric groups, plus a few proptest checks.

use std::collections::BTreeSet;

use elnitsky::forced::{
    forced_bottom_by_pattern, forced_left_by_pattern, forced_right_by_pattern, forced_tiles,
    forced_top_by_pattern, predicted_forced, predicted_forced_bottom, predicted_forced_left,
    predicted_forced_right, predicted_forced_top,
};
use elnitsky::optimal::{
    catalan, enumerate_321_avoiding_alternating, enumerate_max_forced, is_max_forced_right, phi,
    phi_inverse,
};
use elnitsky::tiling::{subhexagons, tiling_count, tilings, PolygonEmbedding};
use elnitsky::{Limits, PerimeterType, Permutation, ValuePair};
use proptest::prelude::*;

fn fully_supported(n: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(n).filter(Permutation::is_fully_supported)
}

fn decreasing_triple_brute(w: &Permutation) -> bool {
    let n = w.len();
    (1..=n)
        .any(|i| (i + 1..=n).any(|j| (j + 1..=n).any(|h| w.at(i) > w.at(j) && w.at(j) > w.at(h))))
}

#[test]
fn extremum_and_pattern_forms_agree() {
    for n in 2..=7 {
        for w in Permutation::all(n) {
            let lr = w.lr_maxima();
            let rl = w.rl_minima();
            for i in 1..n {
                let j = i + 1;
                let pattern = w.at(i) > w.at(j) && !w.together_in_321(i, j).unwrap();
                let extremum = w.at(i) > w.at(j) && lr.contains(&w.at(i)) && rl.contains(&w.at(j));
                assert_eq!(pattern, extremum, "{w} at {i}");
            }
        }
    }
}

#[test]
fn avoidance_and_support_identities() {
    for n in 1..=7 {
        for w in Permutation::all(n) {
            let any_pair = (1..=n).any(|i| (i + 1..=n).any(|j| w.together_in_321(i, j).unwrap()));
            assert_eq!(w.is_321_avoiding(), !any_pair, "{w}");
            assert_eq!(w.is_321_avoiding(), !decreasing_triple_brute(&w), "{w}");
            assert_eq!(
                w.is_fully_supported(),
                w.inverse().is_fully_supported(),
                "{w}"
            );
            assert_eq!(w.inverse().inverse(), w);
        }
    }
}

#[test]
fn inversion_pairs_brute_force() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let inv = w.inverse();
            let brute: Vec<ValuePair> = (1..=n)
                .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
                .filter(|&(x, y)| inv.at(x) > inv.at(y))
                .map(|(x, y)| ValuePair::new(x, y))
                .collect();
            assert_eq!(w.inversion_pairs(), brute);
        }
    }
}

#[test]
fn tiles_cover_the_polygon_with_distinct_labels() {
    let l = Limits::default();
    for n in 1..=6 {
        for w in fully_supported(n) {
            let area = PolygonEmbedding::new(&w).unwrap().twice_area();
            let expected = w.inversion_pairs();
            for t in tilings(&w, &l).unwrap() {
                let mut labels: Vec<ValuePair> = t.tiles.iter().map(|x| x.label).collect();
                labels.sort();
                assert_eq!(labels, expected, "{w} {}", t.class);
                assert_eq!(t.tiles.iter().map(|x| x.twice_area()).sum::<i64>(), area);
                assert_eq!(t.tiles.len(), t.class.canonical().len());
            }
        }
    }
}

#[test]
fn perimeter_shortcuts_match_geometry() {
    let l = Limits::default();
    for n in 1..=6 {
        for w in fully_supported(n) {
            for t in tilings(&w, &l).unwrap() {
                for ty in PerimeterType::ALL {
                    assert_eq!(
                        t.perimeter_labels(ty),
                        t.combinatorial_perimeter(ty),
                        "{w} {} {ty}",
                        t.class
                    );
                }
            }
        }
    }
}

#[test]
fn subhexagons_are_321_occurrences() {
    let l = Limits::default();
    for n in 1..=6 {
        for w in fully_supported(n) {
            let mut seen = BTreeSet::new();
            for t in tilings(&w, &l).unwrap() {
                seen.extend(subhexagons(&t));
            }
            let expected: BTreeSet<[usize; 3]> = w.occurrences_321().into_iter().collect();
            assert_eq!(seen, expected, "{w}");
        }
    }
}

#[test]
fn avoiding_permutations_have_one_tiling() {
    let l = Limits::default();
    for n in 1..=7 {
        for w in fully_supported(n).filter(Permutation::is_321_avoiding) {
            assert_eq!(tiling_count(&w, &l).unwrap(), 1, "{w}");
        }
    }
}

#[test]
fn brute_force_matches_predictions_through_five() {
    let l = Limits::default();
    for n in 1..=5 {
        for w in fully_supported(n) {
            let r = forced_tiles(&w, &l).unwrap();
            for ty in PerimeterType::ALL {
                assert_eq!(
                    r.forced(ty),
                    predicted_forced(&w, ty).as_slice(),
                    "{w} {ty}"
                );
                for (tile, f) in &r.of_type(ty).frequencies {
                    assert!(w.inversion_pairs().contains(tile));
                    assert_eq!(*f == 1.into(), r.forced(ty).contains(tile));
                    assert!(*f > 0.into());
                }
                for tile in r.forced(ty) {
                    match ty {
                        PerimeterType::Top => assert_eq!(*tile, ValuePair::new(1, w.at(1))),
                        PerimeterType::Bottom => assert_eq!(*tile, ValuePair::new(n, w.at(n))),
                        _ => {}
                    }
                }
            }
        }
    }
}

#[test]
fn predicate_forms_agree_and_dualize() {
    for n in 1..=7 {
        for w in Permutation::all(n) {
            assert_eq!(predicted_forced_right(&w), forced_right_by_pattern(&w));
            assert_eq!(predicted_forced_left(&w), forced_left_by_pattern(&w));
            assert_eq!(predicted_forced_top(&w), forced_top_by_pattern(&w));
            assert_eq!(predicted_forced_bottom(&w), forced_bottom_by_pattern(&w));

            // left forcing of w is right forcing of the inverse, relabeled
            let inv = w.inverse();
            let mut dual: Vec<ValuePair> = predicted_forced_right(&inv)
                .into_iter()
                .map(|p| ValuePair::new(w.at(p.low), w.at(p.high)))
                .collect();
            dual.sort();
            assert_eq!(predicted_forced_left(&w), dual, "{w}");

            // right/left forcing at an end implies top/bottom forcing
            if n >= 2 {
                let right = predicted_forced_right(&w);
                let left = predicted_forced_left(&w);
                if right.contains(&ValuePair::new(w.at(1), w.at(2))) {
                    assert_eq!(
                        predicted_forced_top(&w),
                        Some(ValuePair::new(w.at(1), w.at(2)))
                    );
                }
                if left.contains(&ValuePair::new(1, 2)) {
                    assert_eq!(predicted_forced_top(&w), Some(ValuePair::new(1, 2)));
                }
                if right.contains(&ValuePair::new(w.at(n - 1), w.at(n))) {
                    assert_eq!(
                        predicted_forced_bottom(&w),
                        Some(ValuePair::new(w.at(n - 1), w.at(n)))
                    );
                }
                if left.contains(&ValuePair::new(n - 1, n)) {
                    assert_eq!(predicted_forced_bottom(&w), Some(ValuePair::new(n - 1, n)));
                }
            }
        }
    }
}

#[test]
fn regression_3614725() {
    let l = Limits::default();
    let w: Permutation = "3614725".parse().unwrap();
    let ts = tilings(&w, &l).unwrap();
    assert_eq!(ts.len(), 2);
    let r = forced_tiles(&w, &l).unwrap();
    for ty in PerimeterType::ALL {
        for t in &ts {
            assert_eq!(t.perimeter_labels(ty), r.forced(ty), "{ty}");
        }
    }
    let pairs = |v: &[(usize, usize)]| {
        v.iter()
            .map(|&(a, b)| ValuePair::new(a, b))
            .collect::<Vec<_>>()
    };
    assert_eq!(r.forced(PerimeterType::Left), pairs(&[(2, 3), (5, 6)]));
    assert_eq!(r.forced(PerimeterType::Right), pairs(&[(1, 6), (2, 7)]));
    assert_eq!(r.forced(PerimeterType::Top), pairs(&[(1, 3)]));
    assert_eq!(r.forced(PerimeterType::Bottom), pairs(&[(5, 7)]));
}

#[test]
fn example_pair_315264_325164() {
    let l = Limits::default();
    let good: Permutation = "315264".parse().unwrap();
    assert_eq!(
        forced_tiles(&good, &l)
            .unwrap()
            .forced(PerimeterType::Right)
            .len(),
        3
    );
    let bad: Permutation = "325164".parse().unwrap();
    assert!(
        forced_tiles(&bad, &l)
            .unwrap()
            .forced(PerimeterType::Right)
            .len()
            < 3
    );
    let min_right = tilings(&bad, &l)
        .unwrap()
        .iter()
        .map(|t| t.perimeter_labels(PerimeterType::Right).len())
        .min()
        .unwrap();
    assert_eq!(min_right, 2);
}

#[test]
fn optimal_characterization_against_brute_force() {
    let l = Limits::default();
    for m in 1..=3 {
        for w in fully_supported(2 * m) {
            let brute = forced_tiles(&w, &l)
                .unwrap()
                .forced(PerimeterType::Right)
                .len();
            assert_eq!(is_max_forced_right(&w), brute == m, "{w}");
            if is_max_forced_right(&w) {
                assert!(w.is_321_avoiding());
                assert_eq!(tiling_count(&w, &l).unwrap(), 1);
            }
        }
    }
}

#[test]
fn display_conditions_are_alternating_and_avoiding() {
    for size in [2, 4, 6, 8, 10] {
        for w in Permutation::all(size) {
            assert_eq!(
                is_max_forced_right(&w),
                w.is_alternating() && w.is_321_avoiding(),
                "{w}"
            );
        }
    }
}

/// Down-up alternating permutations of `S_size`, by backtracking.
fn alternating(size: usize) -> Vec<Permutation> {
    fn go(size: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let i = prefix.len();
        if i == size {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for v in 1..=size {
            let ok = !used[v] && (i == 0 || (i % 2 == 1) == (v < prefix[i - 1]));
            if ok {
                used[v] = true;
                prefix.push(v);
                go(size, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(size, &mut Vec::new(), &mut vec![false; size + 1], &mut out);
    out
}

#[test]
fn display_conditions_in_s12() {
    // outside the alternating permutations both sides are false: the display
    // conditions force w(2k-1) > w(2k) < w(2k+2) < w(2k+1)
    let alt = alternating(12);
    assert_eq!(alt.len(), 2_702_765);
    let mut count = 0;
    for w in &alt {
        let both = is_max_forced_right(w);
        assert_eq!(both, w.is_321_avoiding(), "{w}");
        count += both as usize;
    }
    assert_eq!(count as u128, catalan(6));
}

#[test]
fn backtracking_matches_full_filter() {
    let l = Limits::default();
    for m in 1..=5 {
        let filtered: Vec<Permutation> = Permutation::all(2 * m)
            .filter(|w| w.is_alternating() && w.is_321_avoiding())
            .collect();
        assert_eq!(enumerate_321_avoiding_alternating(m, &l).unwrap(), filtered);
        let supported: Vec<Permutation> = filtered
            .into_iter()
            .filter(Permutation::is_fully_supported)
            .collect();
        assert_eq!(enumerate_max_forced(m, &l).unwrap(), supported);
    }
}

#[test]
fn catalan_counts_and_phi_bijection() {
    let l = Limits::default();
    for m in 1..=6 {
        let avoiding = enumerate_321_avoiding_alternating(m, &l).unwrap();
        assert_eq!(avoiding.len() as u128, catalan(m as u32));
        let maximal = enumerate_max_forced(m, &l).unwrap();
        assert_eq!(maximal.len() as u128, catalan(m as u32 - 1));
        if m >= 2 {
            let prev = enumerate_321_avoiding_alternating(m - 1, &l).unwrap();
            let mut image: Vec<Permutation> = prev.iter().map(|v| phi(v).unwrap()).collect();
            image.sort();
            image.dedup();
            assert_eq!(image, maximal);
            for v in &prev {
                assert_eq!(phi_inverse(&phi(v).unwrap()).unwrap(), *v);
            }
            for w in &maximal {
                assert_eq!(phi(&phi_inverse(w).unwrap()).unwrap(), *w);
            }
        }
    }
}

#[test]
fn catalan_recurrence() {
    for k in 1..=30u32 {
        let sum: u128 = (0..k).map(|i| catalan(i) * catalan(k - 1 - i)).sum();
        assert_eq!(catalan(k), sum);
    }
    assert!(std::panic::catch_unwind(|| catalan(69)).is_ok());
    assert!(std::panic::catch_unwind(|| catalan(70)).is_err());
}

fn permutation_strategy() -> impl Strategy<Value = Permutation> {
    (1usize..=12)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn inverse_is_an_involution(w in permutation_strategy()) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        let id: Vec<usize> = (1..=w.len()).collect();
        let composed: Vec<usize> = (1..=w.len()).map(|i| w.inverse().at(w.at(i))).collect();
        prop_assert_eq!(composed, id);
    }

    #[test]
    fn text_forms_round_trip(w in permutation_strategy()) {
        let shown = w.to_compact_string();
        prop_assert_eq!(shown.parse::<Permutation>().unwrap(), w.clone());
        let commas: Vec<String> = w.entries().iter().map(|v| v.to_string()).collect();
        prop_assert_eq!(commas.join(",").parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn reduced_word_of_descent_peeling_evaluates_back(w in permutation_strategy()) {
        let mut u = w.clone();
        let mut word = Vec::new();
        while let Some(&k) = u.descents().first() {
            word.push(k);
            u = u.times_generator(k);
        }
        word.reverse();
        prop_assert_eq!(word.len(), w.inversion_count());
        prop_assert_eq!(elnitsky::ReducedWord::new(word).evaluate(w.len()).unwrap(), w);
    }
}
