//! The frame algebra.
//!
//! A frame records how many nodes of a Dyck path lie on each level. Frames
//! are built from the null frame `(1)` by two operators, *lifting*
//! (`s`, prepend a 2) and *extension* (`a`, add 1 to the first two entries),
//! and reduced back to `(1)` by their inverses *unlift* (`r`) and
//! *unextend* (`b`). [`RawSequence`] is any trimmed nonnegative sequence;
//! [`Frame`] only ever holds admissible ones.

use std::fmt;
use std::str::FromStr;

use crate::error::{Enumeration, Error, Result};
use crate::limits::Limits;
use crate::paths::Path;

/// A finite nonnegative integer sequence, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawSequence(Vec<u64>);

impl RawSequence {
    pub fn new(mut counts: Vec<u64>) -> RawSequence {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        RawSequence(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    fn entry(&self, index: usize) -> u64 {
        self.0.get(index).copied().unwrap_or(0)
    }

    /// `-1 + Σ counts`; even for admissible sequences.
    pub fn length(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum::<i64>() - 1
    }

    /// Index of the last nonzero entry, `None` for the all-zero sequence.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// The operator `s`: prepend a 2.
    pub fn lift(&self) -> RawSequence {
        let mut counts = Vec::with_capacity(self.0.len() + 1);
        counts.push(2);
        counts.extend_from_slice(&self.0);
        RawSequence(counts)
    }

    /// The operator `∧`: entrywise sum with the first entry reduced by one.
    pub fn glue(&self, other: &RawSequence) -> Result<RawSequence> {
        let len = self.0.len().max(other.0.len());
        let mut counts: Vec<u64> = (0..len).map(|i| self.entry(i) + other.entry(i)).collect();
        match counts.first_mut() {
            Some(first) if *first > 0 => *first -= 1,
            _ => return Err(Error::Underflow(format!("{self} ∧ {other}"))),
        }
        Ok(RawSequence::new(counts))
    }

    /// The operator `a`: add 1 to the first two entries.
    pub fn extend(&self) -> RawSequence {
        let mut counts = self.0.clone();
        counts.resize(counts.len().max(2), 0);
        counts[0] += 1;
        counts[1] += 1;
        RawSequence(counts)
    }

    /// The operator `b`, inverse of [`RawSequence::extend`].
    pub fn unextend(&self) -> Result<RawSequence> {
        if self.entry(0) == 0 || self.entry(1) == 0 {
            return Err(Error::Underflow(self.to_string()));
        }
        let mut counts = self.0.clone();
        counts[0] -= 1;
        counts[1] -= 1;
        Ok(RawSequence::new(counts))
    }

    /// The operator `r`, inverse of [`RawSequence::lift`] on its image.
    pub fn unlift(&self) -> Result<RawSequence> {
        if self.0.first() != Some(&2) {
            return Err(Error::NotLifted(self.to_string()));
        }
        Ok(RawSequence(self.0[1..].to_vec()))
    }

    /// Admissibility by reduction: strip a leading 2 with `r`, otherwise
    /// apply `b`, until `(1)` is reached or an entry would go negative.
    pub fn is_admissible_trace(&self) -> bool {
        self.reduction().is_some()
    }

    /// Admissibility by the alternating-sum conditions.
    ///
    /// With `A_k = i_k - i_{k-1} + ... ± i_0`, a sequence of degree `f` is
    /// admissible iff `f = 0` and `i_0 = 1`, or `f > 0`, `i_0 >= 2`,
    /// `A_k >= 2` for even `0 < k < f`, `A_k >= 0` for odd `k < f`, and
    /// `i_0 - i_1 + ... + (-1)^f i_f = 1`.
    pub fn is_admissible_closed(&self) -> bool {
        let Some(degree) = self.degree() else {
            return false;
        };
        let counts = &self.0;
        if degree == 0 {
            return counts[0] == 1;
        }
        if counts[0] < 2 {
            return false;
        }
        let mut alternating = 0i64;
        for (k, &count) in counts.iter().enumerate() {
            alternating = count as i64 - alternating;
            if k == 0 {
                continue;
            }
            let bound = if k % 2 == 0 { 2 } else { 0 };
            if k < degree && alternating < bound {
                return false;
            }
        }
        let signed_total = if degree % 2 == 0 {
            alternating
        } else {
            -alternating
        };
        signed_total == 1
    }

    /// The `r`/`b` steps taking the sequence to `(1)`, if it is admissible.
    fn reduction(&self) -> Option<Vec<Reduction>> {
        let mut counts = self.0.clone();
        let mut start = 0;
        let mut steps = Vec::new();
        // Each step removes 2 from the entry sum.
        let fuel: u64 = counts.iter().sum();
        for _ in 0..=fuel / 2 {
            let rest = &mut counts[start..];
            match rest {
                [1] => return Some(steps),
                [2, ..] => {
                    start += 1;
                    steps.push(Reduction::Unlift);
                }
                [first, second, ..] if *first > 0 && *second > 0 => {
                    *first -= 1;
                    *second -= 1;
                    while counts.last() == Some(&0) {
                        counts.pop();
                    }
                    steps.push(Reduction::Unextend);
                }
                _ => return None,
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reduction {
    Unlift,
    Unextend,
}

impl fmt::Display for RawSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, count) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{count}")?;
        }
        Ok(())
    }
}

impl FromStr for RawSequence {
    type Err = Error;

    /// Comma-separated nonnegative integers; trailing zeros are dropped.
    fn from_str(text: &str) -> Result<RawSequence> {
        let malformed = |reason| Error::MalformedSequence {
            text: text.to_string(),
            reason,
        };
        if text.trim().is_empty() {
            return Err(malformed("empty sequence"));
        }
        text.split(',')
            .map(|field| {
                let field = field.trim();
                if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed("expected comma-separated nonnegative integers"));
                }
                field
                    .parse::<u32>()
                    .map(u64::from)
                    .map_err(|_| malformed("entry out of range"))
            })
            .collect::<Result<Vec<u64>>>()
            .map(RawSequence::new)
    }
}

impl From<Frame> for RawSequence {
    fn from(frame: Frame) -> RawSequence {
        frame.0
    }
}

/// An admissible sequence: the frame of at least one Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame(RawSequence);

impl Frame {
    /// `(1)`, the frame of the null path.
    pub fn null() -> Frame {
        Frame(RawSequence(vec![1]))
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<u64>) -> Frame {
        debug_assert!(RawSequence::new(counts.clone()).is_admissible_trace());
        Frame(RawSequence(counts))
    }

    pub fn counts(&self) -> &[u64] {
        self.0.counts()
    }

    pub fn as_raw(&self) -> &RawSequence {
        &self.0
    }

    /// Length of the paths in this frame.
    pub fn length(&self) -> usize {
        self.0.length() as usize
    }

    pub fn half_length(&self) -> usize {
        self.length() / 2
    }

    pub fn degree(&self) -> usize {
        self.counts().len() - 1
    }

    pub fn lift(&self) -> Frame {
        Frame(self.0.lift())
    }

    pub fn extend(&self) -> Frame {
        Frame(self.0.extend())
    }

    /// Frames are closed under gluing, and gluing them commutes.
    pub fn glue(&self, other: &Frame) -> Frame {
        Frame(
            self.0
                .glue(&other.0)
                .expect("frames start with a positive entry"),
        )
    }

    /// Replay the reduction of the frame to `(1)` backwards on paths: each
    /// unlift becomes a lift and each unextend a glue with `UD`.
    pub fn canonical_representative(&self) -> Path {
        let steps = self.0.reduction().expect("frames are admissible");
        steps
            .iter()
            .rev()
            .fold(Path::null(), |path, step| match step {
                Reduction::Unlift => path.lift(),
                Reduction::Unextend => path.extend(),
            })
    }

    /// `(2, i_1 - i_0 + 2, i_2, ...)`; the null frame has none.
    pub fn right_progenitor(&self) -> Option<Frame> {
        let counts = self.counts();
        if counts.len() < 2 {
            return None;
        }
        let mut progenitor = counts.to_vec();
        progenitor[1] = counts[1] + 2 - counts[0];
        progenitor[0] = 2;
        Some(Frame(RawSequence(progenitor)))
    }

    /// The frame left after stripping the maximal run of leading 2s.
    pub fn left_progenitor(&self) -> Frame {
        let counts = self.counts();
        let skip = counts.iter().take_while(|&&c| c == 2).count();
        Frame(RawSequence(counts[skip..].to_vec()))
    }

    /// The consequences of admissibility for frames of degree `f >= 1`:
    /// `i_{f-1} > i_f`; `i_0 = i_1 + 1` implies `i_1 = i_f`; and
    /// `2 <= i_j <= i_{j-1} + i_{j+1} - 2` for `0 < j < f - 1`.
    /// The null frame satisfies them vacuously.
    ///
    /// The converse of the middle condition does not hold in general:
    /// `(2,2,3,2)` has `i_1 = i_f` but `i_0 != i_1 + 1`.
    pub fn consequences_hold(&self) -> bool {
        let i = self.counts();
        let f = self.degree();
        if f == 0 {
            return true;
        }
        let first = i[f - 1] > i[f];
        let second = i[0] != i[1] + 1 || i[1] == i[f];
        let third = (1..f.saturating_sub(1)).all(|j| 2 <= i[j] && i[j] + 2 <= i[j - 1] + i[j + 1]);
        first && second && third
    }
}

impl TryFrom<RawSequence> for Frame {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Frame> {
        if raw.is_admissible_trace() {
            Ok(Frame(raw))
        } else {
            Err(Error::NotAdmissible(raw.to_string()))
        }
    }
}

impl FromStr for Frame {
    type Err = Error;

    fn from_str(text: &str) -> Result<Frame> {
        text.parse::<RawSequence>()?.try_into()
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All frames of length `2 * half_length`, built level by level with `s`
/// and `a` from `(1)`. Order: for each frame of the previous length, its
/// lifting then its extension.
pub fn enumerate_frames(half_length: usize, limits: &Limits) -> Result<Vec<Frame>> {
    limits.check(Enumeration::FrameHalfLength, half_length)?;
    let mut frames = vec![Frame::null()];
    for n in 1..=half_length {
        let mut next = Vec::with_capacity(2 * frames.len());
        for frame in &frames {
            let lifted = frame.lift();
            let extended = frame.extend();
            // s(1) = a(1) = (2,1); the two differ from n = 2 on.
            let distinct = n > 1 || lifted != extended;
            next.push(lifted);
            if distinct {
                next.push(extended);
            }
        }
        frames = next;
    }
    Ok(frames)
}
