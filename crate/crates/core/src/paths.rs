//! Lattice paths and their exhaustive enumeration.
//!
//! Paths are the ground truth for everything else in the crate: every
//! closed-form count is checked against the enumerators defined here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Enumeration, Error, Result};
use crate::frames::Frame;
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Horizontal,
}

impl Step {
    /// Enumeration order of the steps.
    pub const ALL: [Step; 3] = [Step::Up, Step::Down, Step::Horizontal];

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Horizontal => 0,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Horizontal => 'H',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            'H' => Some(Step::Horizontal),
            _ => None,
        }
    }
}

/// A Motzkin path: it starts and ends at level 0 and never goes below it.
///
/// A path without horizontal steps is a Dyck path. The empty path is the
/// null path.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    /// The null path.
    pub fn null() -> Path {
        Path::default()
    }

    pub fn new(steps: Vec<Step>) -> Result<Path> {
        let mut level = 0i64;
        for (position, step) in steps.iter().enumerate() {
            level += step.delta();
            if level < 0 {
                return Err(Error::MalformedPath {
                    position,
                    reason: "path goes below level 0",
                });
            }
        }
        if level != 0 {
            return Err(Error::MalformedPath {
                position: steps.len(),
                reason: "path does not end at level 0",
            });
        }
        Ok(Path { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::Horizontal)
    }

    pub fn level_sequence(&self) -> LevelSequence {
        let mut levels = Vec::with_capacity(self.steps.len() + 1);
        let mut level = 0usize;
        levels.push(level);
        for step in &self.steps {
            level = match step {
                Step::Up => level + 1,
                Step::Down => level - 1,
                Step::Horizontal => level,
            };
            levels.push(level);
        }
        LevelSequence(levels)
    }

    /// Number of lattice nodes of the path lying at `level`.
    pub fn foot_count(&self, level: usize) -> usize {
        self.level_sequence()
            .as_slice()
            .iter()
            .filter(|&&l| l == level)
            .count()
    }

    /// Foot counts per level; the result is admissible by construction.
    pub fn frame(&self) -> Result<Frame> {
        if let Some(position) = self.steps.iter().position(|s| *s == Step::Horizontal) {
            return Err(Error::NotDyck { position });
        }
        let levels = self.level_sequence();
        let height = levels.as_slice().iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; height + 1];
        for &l in levels.as_slice() {
            counts[l] += 1;
        }
        Ok(Frame::from_counts_unchecked(counts))
    }

    /// `U·self·D`.
    pub fn lift(&self) -> Path {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        Path { steps }
    }

    /// Concatenation `self·other`.
    pub fn glue(&self, other: &Path) -> Path {
        let mut steps = Vec::with_capacity(self.steps.len() + other.steps.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        Path { steps }
    }

    /// Glue `UD` at the end.
    pub fn extend(&self) -> Path {
        let mut steps = self.steps.clone();
        steps.extend([Step::Up, Step::Down]);
        Path { steps }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            fmt::Write::write_char(f, step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(text: &str) -> Result<Path> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(position, c)| {
                Step::from_char(c).ok_or(Error::MalformedPath {
                    position,
                    reason: "expected one of U, D, H",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Path::new(steps)
    }
}

/// Parse a path from its `U`/`D`/`H` text rendering.
pub fn parse_path(text: &str) -> Result<Path> {
    text.parse()
}

/// The level of every lattice node of a path, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Digits are concatenated unless some level needs two of them.
        let separated = self.0.iter().any(|&l| l > 9);
        for (i, level) in self.0.iter().enumerate() {
            if i > 0 && separated {
                f.write_str(",")?;
            }
            write!(f, "{level}")?;
        }
        Ok(())
    }
}

/// Which levels may carry horizontal steps.
#[derive(Debug, Clone, PartialEq, Eq)]
enum HorizontalPolicy {
    Never,
    Anywhere,
    AtLevels(BTreeSet<usize>),
}

impl HorizontalPolicy {
    fn allows(&self, level: usize) -> bool {
        match self {
            HorizontalPolicy::Never => false,
            HorizontalPolicy::Anywhere => true,
            HorizontalPolicy::AtLevels(levels) => levels.contains(&level),
        }
    }
}

/// Depth-first cursor over all paths of a fixed length, in lexicographic
/// order of their text with `U < D < H`.
#[derive(Debug, Clone)]
pub struct PathCursor {
    length: usize,
    horizontal: HorizontalPolicy,
    steps: Vec<Step>,
    levels: Vec<usize>,
    backtracking: bool,
    done: bool,
}

impl PathCursor {
    fn new(length: usize, horizontal: HorizontalPolicy) -> PathCursor {
        PathCursor {
            length,
            horizontal,
            steps: Vec::with_capacity(length),
            levels: vec![0],
            backtracking: false,
            done: false,
        }
    }

    fn feasible(&self, step: Step) -> Option<usize> {
        let level = *self.levels.last().expect("levels is never empty");
        let remaining = self.length - self.steps.len() - 1;
        let next = match step {
            Step::Up => level + 1,
            Step::Down => level.checked_sub(1)?,
            Step::Horizontal => {
                if !self.horizontal.allows(level) {
                    return None;
                }
                level
            }
        };
        (next <= remaining).then_some(next)
    }

    fn push_first_from(&mut self, from: usize) -> bool {
        for &step in &Step::ALL[from..] {
            if let Some(next) = self.feasible(step) {
                self.steps.push(step);
                self.levels.push(next);
                return true;
            }
        }
        false
    }

    fn seek(&mut self) -> bool {
        loop {
            if self.backtracking {
                let Some(last) = self.steps.pop() else {
                    return false;
                };
                self.levels.pop();
                let from = Step::ALL.iter().position(|s| *s == last).unwrap() + 1;
                if self.push_first_from(from) {
                    self.backtracking = false;
                }
            } else if self.steps.len() == self.length {
                return true;
            } else if !self.push_first_from(0) {
                self.backtracking = true;
            }
        }
    }
}

impl Iterator for PathCursor {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        if self.seek() {
            self.backtracking = true;
            Some(Path {
                steps: self.steps.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// All Dyck paths of length `2 * half_length`; there are Catalan-many.
pub fn enumerate_dyck(half_length: usize, limits: &Limits) -> Result<PathCursor> {
    limits.check(Enumeration::DyckHalfLength, half_length)?;
    Ok(PathCursor::new(2 * half_length, HorizontalPolicy::Never))
}

/// All Motzkin paths of `length`, optionally restricted to horizontal steps
/// at the given levels only.
pub fn enumerate_motzkin(
    length: usize,
    horizontal_levels: Option<&BTreeSet<usize>>,
    limits: &Limits,
) -> Result<PathCursor> {
    limits.check(Enumeration::MotzkinLength, length)?;
    let policy = match horizontal_levels {
        None => HorizontalPolicy::Anywhere,
        Some(levels) if levels.is_empty() => HorizontalPolicy::Never,
        Some(levels) => HorizontalPolicy::AtLevels(levels.clone()),
    };
    Ok(PathCursor::new(length, policy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Path {
        text.parse().unwrap()
    }

    fn texts(cursor: PathCursor) -> Vec<String> {
        cursor.map(|p| p.to_string()).collect()
    }

    #[test]
    fn parse_accepts_valid_paths() {
        assert_eq!(p("UD").steps(), &[Step::Up, Step::Down]);
        assert!(p("").is_empty());
        assert_eq!(p("UHD").len(), 3);
    }

    #[test]
    fn parse_rejects_malformed_paths() {
        assert!(matches!(
            parse_path("DU"),
            Err(Error::MalformedPath { position: 0, .. })
        ));
        assert!(matches!(
            parse_path("UUD"),
            Err(Error::MalformedPath { position: 3, .. })
        ));
        assert!(matches!(
            parse_path("UxD"),
            Err(Error::MalformedPath { position: 1, .. })
        ));
    }

    #[test]
    fn level_sequences() {
        assert_eq!(
            p("UUDUUDDUUDUDDD").level_sequence().to_string(),
            "012123212323210"
        );
        assert_eq!(Path::null().level_sequence().as_slice(), &[0]);
        assert_eq!(p("UD").level_sequence().as_slice(), &[0, 1, 0]);
    }

    #[test]
    fn foot_counts() {
        let path = p("UUDUUDDUUDUDDD");
        let feet: Vec<_> = (0..5).map(|l| path.foot_count(l)).collect();
        assert_eq!(feet, [2, 4, 6, 3, 0]);
        assert_eq!(path.foot_count(7), 0);
        assert_eq!(p("UD").foot_count(0), 2);
    }

    #[test]
    fn frames_of_paths() {
        assert_eq!(p("UDUUDD").frame().unwrap().counts(), &[3, 3, 1]);
        assert_eq!(p("UUDDUD").frame().unwrap().counts(), &[3, 3, 1]);
        assert_eq!(Path::null().frame().unwrap().counts(), &[1]);
        assert_eq!(p("UHD").frame(), Err(Error::NotDyck { position: 1 }));
    }

    #[test]
    fn lift_and_glue() {
        assert_eq!(Path::null().lift(), p("UD"));
        assert_eq!(p("UD").lift(), p("UUDD"));
        assert_eq!(p("UDUD").lift(), p("UUDUDD"));
        assert_eq!(p("UD").glue(&p("UUDD")), p("UDUUDD"));
        assert_eq!(p("UUDD").glue(&p("UD")), p("UUDDUD"));
        assert_eq!(Path::null().glue(&p("UUDD")), p("UUDD"));
        assert_eq!(p("UUDD").extend(), p("UUDDUD"));
    }

    #[test]
    fn dyck_enumeration_order_and_size() {
        let limits = Limits::default();
        assert_eq!(texts(enumerate_dyck(0, &limits).unwrap()), [""]);
        assert_eq!(texts(enumerate_dyck(2, &limits).unwrap()), ["UUDD", "UDUD"]);
        assert_eq!(enumerate_dyck(3, &limits).unwrap().count(), 5);
        assert_eq!(enumerate_dyck(5, &limits).unwrap().count(), 42);
        let all = texts(enumerate_dyck(4, &limits).unwrap());
        let mut sorted = all.clone();
        sorted.sort_by_key(|t| {
            t.chars()
                .map(|c| "UDH".find(c).unwrap())
                .collect::<Vec<_>>()
        });
        assert_eq!(all, sorted);
    }

    #[test]
    fn motzkin_enumeration() {
        let limits = Limits::default();
        assert_eq!(enumerate_motzkin(4, None, &limits).unwrap().count(), 9);
        let ground = BTreeSet::from([0]);
        assert_eq!(
            texts(enumerate_motzkin(3, Some(&ground), &limits).unwrap()),
            ["UDH", "HUD", "HHH"]
        );
        let none = BTreeSet::new();
        assert_eq!(
            enumerate_motzkin(1, Some(&none), &limits).unwrap().count(),
            0
        );
        assert_eq!(
            enumerate_motzkin(0, Some(&none), &limits).unwrap().count(),
            1
        );
    }

    #[test]
    fn enumeration_caps() {
        let limits = Limits::default();
        assert!(matches!(
            enumerate_dyck(17, &limits),
            Err(Error::ResourceLimit {
                cap: 16,
                requested: 17,
                ..
            })
        ));
        assert!(matches!(
            enumerate_motzkin(15, None, &limits),
            Err(Error::ResourceLimit { cap: 14, .. })
        ));
        assert!(enumerate_dyck(17, &Limits::unbounded()).is_ok());
    }
}
