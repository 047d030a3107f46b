//! Brute-force oracles shared by the integration tests. Everything here
//! works on enumerated paths only, never on the closed forms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dyck_frames::paths::{enumerate_dyck, enumerate_motzkin};
use dyck_frames::{ColorSpec, Frame, Limits, Path, Step};

pub fn dyck(n: usize) -> Vec<Path> {
    enumerate_dyck(n, &Limits::default()).unwrap().collect()
}

pub fn motzkin(n: usize) -> Vec<Path> {
    enumerate_motzkin(n, None, &Limits::default())
        .unwrap()
        .collect()
}

pub fn motzkin_at(n: usize, level: usize) -> Vec<Path> {
    let only = BTreeSet::from([level]);
    enumerate_motzkin(n, Some(&only), &Limits::default())
        .unwrap()
        .collect()
}

/// Number of Dyck paths of half-length `n` per frame.
pub fn paths_per_frame(n: usize) -> BTreeMap<Frame, u64> {
    let mut tally = BTreeMap::new();
    for path in dyck(n) {
        *tally.entry(path.frame().unwrap()).or_insert(0) += 1;
    }
    tally
}

/// Product over the steps of the number of colors available to each step.
/// A missing horizontal entry counts as zero colors.
pub fn colorings(path: &Path, colors: &ColorSpec) -> u128 {
    let levels = path.level_sequence().into_inner();
    path.steps()
        .iter()
        .zip(&levels)
        .map(|(step, &level)| match step {
            Step::Up => colors.up[level] as u128,
            Step::Down => colors.down[level - 1] as u128,
            Step::Horizontal => colors.horizontal.get(level).copied().unwrap_or(0) as u128,
        })
        .product()
}

/// Up steps from level `k` to `k + 1`, read off the path.
pub fn up_steps_between_levels(path: &Path) -> Vec<u64> {
    let levels = path.level_sequence().into_inner();
    let mut counts = Vec::new();
    for (step, &level) in path.steps().iter().zip(&levels) {
        if *step == Step::Up {
            if counts.len() <= level {
                counts.resize(level + 1, 0);
            }
            counts[level] += 1;
        }
    }
    counts
}

/// Coefficients of a frame read as a polynomial in `x`.
pub fn poly(counts: &[u64]) -> Vec<i64> {
    counts.iter().map(|&c| c as i64).collect()
}

pub fn poly_trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `2 + x p(x)`.
pub fn poly_lift(p: &[i64]) -> Vec<i64> {
    let mut out = vec![2];
    out.extend_from_slice(p);
    poly_trim(out)
}

/// `p(x) + q(x) - 1`.
pub fn poly_glue(p: &[i64], q: &[i64]) -> Vec<i64> {
    let mut out = vec![0; p.len().max(q.len()).max(1)];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in q.iter().enumerate() {
        out[i] += c;
    }
    out[0] -= 1;
    poly_trim(out)
}
