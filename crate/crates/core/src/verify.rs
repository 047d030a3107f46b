//! Self-verification: every closed form against brute-force enumeration.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::counting::{
    binomial_identity_check, catalan, count_colored_dyck, count_colored_motzkin, count_k_motzkin,
    count_motzkin, frame_cardinality, ColorSpec, Count, FootTable,
};
use crate::error::{Enumeration, Result};
use crate::frames::{enumerate_frames, Frame, RawSequence};
use crate::limits::Limits;
use crate::paths::{enumerate_dyck, enumerate_motzkin, Path, Step};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub parameters: String,
    pub expected: Count,
    pub actual: Count,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    fn record(
        &mut self,
        name: &'static str,
        parameters: String,
        expected: impl Into<Count>,
        actual: impl Into<Count>,
    ) {
        let (expected, actual) = (expected.into(), actual.into());
        self.checks.push(Check {
            name,
            parameters,
            pass: expected == actual,
            expected,
            actual,
        });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest Dyck half-length to check; the other sweeps scale with it.
    pub max_n: usize,
    pub limits: Limits,
    /// Corrupt one expected value so the harness itself can be tested.
    pub inject_fault: bool,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> VerifyOptions {
        VerifyOptions {
            max_n,
            limits: Limits::default(),
            inject_fault: false,
        }
    }
}

/// Paths of one half-length, tallied by frame and by feet per level.
struct DyckOracle {
    by_frame: BTreeMap<Frame, u64>,
    // (level, feet) -> paths
    feet: BTreeMap<(usize, usize), u64>,
}

impl DyckOracle {
    fn new(half_length: usize, max_level: usize, limits: &Limits) -> Result<DyckOracle> {
        let mut by_frame = BTreeMap::new();
        let mut feet = BTreeMap::new();
        for path in enumerate_dyck(half_length, limits)? {
            let frame = path.frame()?;
            for level in 0..=max_level {
                let count = frame.counts().get(level).copied().unwrap_or(0) as usize;
                *feet.entry((level, count)).or_insert(0) += 1;
            }
            *by_frame.entry(frame).or_insert(0) += 1;
        }
        Ok(DyckOracle { by_frame, feet })
    }
}

/// Whether every maximal run of `D` is followed by at most one `U` before
/// the next `D` or the end of the path.
pub fn has_canonical_shape(path: &Path) -> bool {
    let steps = path.steps();
    let mut ups_after_descent: Option<usize> = None;
    for step in steps {
        match step {
            Step::Down => ups_after_descent = Some(0),
            Step::Up => {
                if let Some(ups) = ups_after_descent.as_mut() {
                    *ups += 1;
                    if *ups > 1 {
                        return false;
                    }
                }
            }
            Step::Horizontal => {}
        }
    }
    true
}

/// Call `visit` on every sequence of exactly `entries` nonnegative integers
/// with sum at most `max_sum`. Shorter sequences appear zero-padded.
pub fn for_each_bounded_sequence(entries: usize, max_sum: u64, mut visit: impl FnMut(&[u64])) {
    fn fill(left: usize, budget: u64, prefix: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if left == 0 {
            visit(prefix);
            return;
        }
        for value in 0..=budget {
            prefix.push(value);
            fill(left - 1, budget - value, prefix, visit);
            prefix.pop();
        }
    }
    fill(
        entries,
        max_sum,
        &mut Vec::with_capacity(entries),
        &mut visit,
    );
}

/// Number of sequences on which the two admissibility deciders disagree.
pub fn decider_disagreements(entries: usize, max_sum: u64) -> u64 {
    let mut disagreements = 0;
    for_each_bounded_sequence(entries, max_sum, |counts| {
        let raw = RawSequence::new(counts.to_vec());
        if raw.is_admissible_trace() != raw.is_admissible_closed() {
            disagreements += 1;
        }
    });
    disagreements
}

/// Number of `(m, parts)` with `m <= max_m`, parts `>= 1` summing to at most
/// `max_parts_sum`, for which the binomial identity fails.
pub fn binomial_identity_failures(max_m: u64, max_parts_sum: u64) -> u64 {
    fn parts_vectors(budget: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for value in 1..=budget {
            prefix.push(value);
            parts_vectors(budget - value, prefix, out);
            prefix.pop();
        }
    }
    let mut vectors = Vec::new();
    parts_vectors(max_parts_sum, &mut Vec::new(), &mut vectors);
    let mut failures = 0;
    for m in 0..=max_m {
        failures += vectors
            .iter()
            .filter(|parts| !binomial_identity_check(m, parts))
            .count() as u64;
    }
    failures
}

/// Run the oracle-versus-formula suite up to `options.max_n`.
pub fn run(options: &VerifyOptions) -> Result<VerifyReport> {
    let limits = &options.limits;
    let max_n = options.max_n;
    limits.check(Enumeration::DyckHalfLength, max_n)?;
    let mut report = VerifyReport::default();

    let table = FootTable::new(max_n, max_n);
    for n in 0..=max_n {
        let oracle = DyckOracle::new(n, max_n, limits)?;
        let frames = enumerate_frames(n, limits)?;

        if n > 0 {
            report.record(
                "frame_count",
                format!("n={n}"),
                Count::one() << (n - 1),
                frames.len(),
            );
        }
        let generated: BTreeSet<&Frame> = frames.iter().collect();
        let observed: BTreeSet<&Frame> = oracle.by_frame.keys().collect();
        report.record(
            "frame_set_mismatches",
            format!("n={n}"),
            0u32,
            generated.symmetric_difference(&observed).count(),
        );

        let mut total = Count::zero();
        let mut canonical_failures = 0u64;
        let mut consequence_failures = 0u64;
        for frame in &frames {
            let cardinality = frame_cardinality(frame);
            let paths = oracle.by_frame.get(frame).copied().unwrap_or(0);
            report.record(
                "frame_cardinality",
                format!("frame={frame}"),
                paths,
                cardinality.clone(),
            );
            total += cardinality;

            let canonical = frame.canonical_representative();
            if canonical.frame().ok().as_ref() != Some(frame) || !has_canonical_shape(&canonical) {
                canonical_failures += 1;
            }
            if !frame.consequences_hold() {
                consequence_failures += 1;
            }
        }
        report.record("catalan_sum", format!("n={n}"), catalan(n), total);
        report.record(
            "canonical_failures",
            format!("n={n}"),
            0u32,
            canonical_failures,
        );
        report.record(
            "consequence_failures",
            format!("n={n}"),
            0u32,
            consequence_failures,
        );

        let mut mismatched = 0u64;
        for level in 0..=max_n {
            let row = table.row(n, level).expect("table spans max_n");
            for (feet, count) in row.iter().enumerate() {
                let paths = oracle.feet.get(&(level, feet)).copied().unwrap_or(0);
                if *count != Count::from(paths) {
                    mismatched += 1;
                }
            }
        }
        report.record(
            "foot_table_mismatches",
            format!("n={n},levels=0..={max_n}"),
            0u32,
            mismatched,
        );

        report.record(
            "colored_dyck_all_ones",
            format!("n={n}"),
            catalan(n),
            count_colored_dyck(n, &ColorSpec::ones(n), limits)?,
        );
    }

    let motzkin_max = (2 * max_n).min(limits.motzkin_length);
    for length in 0..=motzkin_max {
        let paths = enumerate_motzkin(length, None, limits)?.count();
        report.record(
            "motzkin",
            format!("n={length}"),
            paths,
            count_motzkin(length, limits)?,
        );
        report.record(
            "colored_motzkin_all_ones",
            format!("n={length}"),
            paths,
            count_colored_motzkin(length, &ColorSpec::ones(length / 2), limits)?,
        );
        for level in 0..=max_n.min(5) {
            let only = BTreeSet::from([level]);
            let paths = enumerate_motzkin(length, Some(&only), limits)?.count();
            report.record(
                "k_motzkin",
                format!("n={length},k={level}"),
                paths,
                count_k_motzkin(length, level, 1),
            );
        }
    }

    let entries = max_n.min(8);
    let max_sum = 2 * max_n as u64 + 1;
    report.record(
        "decider_disagreements",
        format!("entries<={entries},sum<={max_sum}"),
        0u32,
        decider_disagreements(entries, max_sum),
    );
    report.record(
        "binomial_identity_failures",
        format!("m<={max_n},parts_sum<={max_n}"),
        0u32,
        binomial_identity_failures(max_n as u64, max_n as u64),
    );

    if options.inject_fault {
        if let Some(first) = report.checks.first_mut() {
            first.expected += 1u32;
            first.pass = first.expected == first.actual;
        }
    }
    Ok(report)
}
