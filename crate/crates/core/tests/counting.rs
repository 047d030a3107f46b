mod common;

use std::collections::BTreeMap;

use dyck_frames::counting::{
    binomial, catalan, count_colored_dyck, count_colored_motzkin, count_k_motzkin, count_motzkin,
    feet_level0, frame_cardinality, up_steps_per_level,
};
use dyck_frames::frames::enumerate_frames;
use dyck_frames::verify::binomial_identity_failures;
use dyck_frames::{ColorSpec, Count, FootTable, Frame, Limits};
use proptest::prelude::*;

fn limits() -> Limits {
    Limits::default()
}

fn frames(n: usize) -> Vec<Frame> {
    enumerate_frames(n, &limits()).unwrap()
}

#[test]
fn level0_rows_sum_to_catalan() {
    let rows = feet_level0(14);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row.iter().sum::<Count>(), catalan(n), "n = {n}");
    }
}

#[test]
fn foot_table_matches_enumeration() {
    let table = FootTable::new(8, 8);
    for n in 0..=8 {
        let mut observed: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for path in common::dyck(n) {
            for level in 0..=8 {
                *observed.entry((level, path.foot_count(level))).or_insert(0) += 1;
            }
        }
        for level in 0..=8 {
            for feet in 0..=n + 1 {
                let expected = observed.get(&(level, feet)).copied().unwrap_or(0);
                assert_eq!(
                    *table.get(n, level, feet),
                    expected.into(),
                    "n={n} s={level} j={feet}"
                );
            }
        }
    }
}

#[test]
fn foot_table_invariants() {
    let table = FootTable::new(4, 10);
    for n in 1..=10 {
        assert_eq!(*table.get(n, 0, 0), Count::default());
        assert_eq!(*table.get(n, 0, 1), Count::default());
        for level in 1..=4 {
            assert_eq!(*table.get(n, level, n + 1), Count::default());
        }
    }
    assert_eq!(*table.get(0, 0, 1), 1u32.into());
}

#[test]
fn cardinalities_sum_to_catalan() {
    for n in 0..=12 {
        let total: Count = frames(n).iter().map(frame_cardinality).sum();
        assert_eq!(total, catalan(n), "n = {n}");
    }
}

#[test]
fn cardinalities_match_enumeration() {
    for n in 0..=8 {
        for (frame, paths) in common::paths_per_frame(n) {
            assert_eq!(frame_cardinality(&frame), paths.into(), "{frame}");
        }
    }
}

/// Cardinality through the progenitor chain: stripping leading 2s keeps the
/// count, and a frame `(2 + m, a, ...)` has `binom(a - 1, a - m - 1)` times
/// the paths of its right progenitor.
fn cardinality_by_progenitors(frame: &Frame) -> Count {
    let left = frame.left_progenitor();
    let counts = left.counts();
    if counts.len() <= 2 {
        return Count::from(1u32);
    }
    let extra = counts[0] as i64 - 2;
    let a = counts[1] as i64;
    let right = left.right_progenitor().unwrap();
    binomial(a - 1, a - extra - 1) * cardinality_by_progenitors(&right)
}

#[test]
fn cardinality_agrees_with_progenitor_recursion() {
    for n in 0..=11 {
        for frame in frames(n) {
            assert_eq!(
                frame_cardinality(&frame),
                cardinality_by_progenitors(&frame),
                "{frame}"
            );
        }
    }
}

#[test]
fn up_steps_are_read_off_any_path() {
    for n in 1..=8 {
        for path in common::dyck(n) {
            let frame = path.frame().unwrap();
            let v = up_steps_per_level(&frame);
            assert_eq!(v, common::up_steps_between_levels(&path), "{path}");
            assert_eq!(v.iter().sum::<u64>(), n as u64);
            assert_eq!(v[0], frame.counts()[0] - 1);
            assert!(v.iter().all(|&x| x >= 1));
        }
    }
}

#[test]
fn motzkin_counts_match_enumeration() {
    let mut values = Vec::new();
    for n in 0..=12 {
        let paths = common::motzkin(n).len() as u64;
        assert_eq!(
            count_motzkin(n, &limits()).unwrap(),
            paths.into(),
            "n = {n}"
        );
        values.push(paths);
    }
    assert_eq!(&values[..8], [1, 1, 2, 4, 9, 21, 51, 127]);
}

#[test]
fn k_motzkin_counts_match_enumeration() {
    for n in 0..=10 {
        for k in 0..=5 {
            let paths = common::motzkin_at(n, k).len() as u64;
            assert_eq!(count_k_motzkin(n, k, 1), paths.into(), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn colored_k_motzkin_matches_weighted_enumeration() {
    // Oracle value for n = 5, k = 0, r = 2.
    assert_eq!(count_k_motzkin(5, 0, 2), 74u32.into());
    for n in 0..=8 {
        for k in 0..=3 {
            for r in 1..=3u64 {
                let weighted: u128 = common::motzkin_at(n, k)
                    .iter()
                    .map(|p| {
                        (r as u128).pow(p.steps().iter().filter(|s| s.delta() == 0).count() as u32)
                    })
                    .sum();
                assert_eq!(count_k_motzkin(n, k, r), weighted.into());
            }
        }
    }
}

#[test]
fn all_ones_colorings_reduce() {
    for n in 0..=10 {
        assert_eq!(
            count_colored_dyck(n, &ColorSpec::ones(n), &limits()).unwrap(),
            catalan(n)
        );
        assert_eq!(
            count_colored_motzkin(n, &ColorSpec::ones(n / 2), &limits()).unwrap(),
            count_motzkin(n, &limits()).unwrap()
        );
    }
}

#[test]
fn ground_level_coloring_is_k_motzkin() {
    for n in 0..=10 {
        for r in 1..=3 {
            let mut colors = ColorSpec::ones(n / 2);
            colors.horizontal = vec![0; n / 2 + 1];
            colors.horizontal[0] = r;
            assert_eq!(
                count_colored_motzkin(n, &colors, &limits()).unwrap(),
                count_k_motzkin(n, 0, r)
            );
        }
    }
}

#[test]
fn colored_motzkin_golden() {
    let colors = ColorSpec {
        horizontal: vec![2, 1, 0],
        up: vec![1, 1],
        down: vec![1, 1],
    };
    // Oracle: Σ over Motzkin paths of length 4 of 2^(horizontal steps at level 0).
    assert_eq!(
        count_colored_motzkin(4, &colors, &limits()).unwrap(),
        35u32.into()
    );
}

#[test]
fn binomial_identity_sweep() {
    assert_eq!(binomial_identity_failures(6, 8), 0);
}

fn colors_for(n: usize) -> impl Strategy<Value = ColorSpec> {
    let levels = n / 2 + 1;
    (
        prop::collection::vec(0u64..=3, levels),
        prop::collection::vec(1u64..=3, n.max(1)),
        prop::collection::vec(1u64..=3, n.max(1)),
    )
        .prop_map(|(horizontal, up, down)| ColorSpec {
            horizontal,
            up,
            down,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn colored_dyck_matches_weighted_enumeration(
        (n, colors) in (0usize..=7).prop_flat_map(|n| (Just(n), colors_for(2 * n)))
    ) {
        let weighted: u128 = common::dyck(n).iter().map(|p| common::colorings(p, &colors)).sum();
        prop_assert_eq!(count_colored_dyck(n, &colors, &limits()).unwrap(), weighted.into());
    }

    #[test]
    fn colored_motzkin_matches_weighted_enumeration(
        (n, colors) in (0usize..=9).prop_flat_map(|n| (Just(n), colors_for(n)))
    ) {
        let weighted: u128 = common::motzkin(n).iter().map(|p| common::colorings(p, &colors)).sum();
        prop_assert_eq!(count_colored_motzkin(n, &colors, &limits()).unwrap(), weighted.into());
    }

    #[test]
    fn binomial_pascal_rule(top in 1i64..60, bottom in 1i64..60) {
        prop_assert_eq!(
            binomial(top, bottom),
            binomial(top - 1, bottom - 1) + binomial(top - 1, bottom)
        );
    }
}
