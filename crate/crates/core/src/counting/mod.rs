//! Exact counts: Catalan numbers, foot tables, frame cardinalities and the
//! colored Dyck and Motzkin path formulas built on them.

mod binomial;
mod feet;
mod motzkin;

use num_bigint::BigUint;
use num_traits::One;

pub use binomial::{binomial, binomial_identity_check, weak_compositions};
pub use feet::{feet_level0, FootTable};
pub use motzkin::{count_colored_motzkin, count_k_motzkin, count_motzkin};

use crate::error::{ColorKind, Error, Result};
use crate::frames::{enumerate_frames, Frame};
use crate::limits::Limits;

/// An exact nonnegative integer.
pub type Count = BigUint;

/// Catalan numbers `C(0..=n)` from `C(n) = Σ_{k<n} C(n-1-k) C(k)`.
pub fn catalan_numbers(n: usize) -> Vec<Count> {
    let mut table: Vec<Count> = Vec::with_capacity(n + 1);
    table.push(Count::one());
    for m in 1..=n {
        let next = (0..m).map(|k| &table[m - 1 - k] * &table[k]).sum();
        table.push(next);
    }
    table
}

pub fn catalan(n: usize) -> Count {
    catalan_numbers(n).pop().expect("table has n + 1 entries")
}

/// Number of Up steps joining level `k` to `k + 1`, for `k < degree`:
/// `v_k = i_k - i_{k-1} + ... ± i_0 ∓ 1`. The same for every path of the
/// frame. Empty for the null frame.
pub fn up_steps_per_level(frame: &Frame) -> Vec<u64> {
    let counts = frame.counts();
    let mut alternating = 0i64;
    counts[..frame.degree()]
        .iter()
        .enumerate()
        .map(|(k, &count)| {
            alternating = count as i64 - alternating;
            let v = if k % 2 == 0 {
                alternating - 1
            } else {
                alternating + 1
            };
            debug_assert!(v >= 1);
            v as u64
        })
        .collect()
}

/// Number of Dyck paths having the given frame.
///
/// With `j_1 = i_0 - 2`, `j_2 = i_1 - i_0`, `j_3 = i_2 - i_1 + i_0 - 2`, ...
/// this is `Π_{k=1..f} binom(i_k - 1, i_k - j_k - 1)`.
pub fn frame_cardinality(frame: &Frame) -> Count {
    let counts = frame.counts();
    let mut alternating = 0i64;
    let mut product = Count::one();
    for k in 1..counts.len() {
        alternating = counts[k - 1] as i64 - alternating;
        let j = if (k - 1) % 2 == 0 {
            alternating - 2
        } else {
            alternating
        };
        let i = counts[k] as i64;
        product *= binomial(i - 1, i - j - 1);
    }
    product
}

/// Per-level color multiplicities: `horizontal[t]` colors for a horizontal
/// step at level `t`, `up[k]` and `down[k]` for steps between levels `k`
/// and `k + 1`. A zero horizontal entry forbids horizontal steps there.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorSpec {
    pub horizontal: Vec<u64>,
    pub up: Vec<u64>,
    pub down: Vec<u64>,
}

impl ColorSpec {
    /// Every step has a single color on levels `0..=levels`.
    pub fn ones(levels: usize) -> ColorSpec {
        ColorSpec {
            horizontal: vec![1; levels + 1],
            up: vec![1; levels],
            down: vec![1; levels],
        }
    }

    fn lookup(values: &[u64], kind: ColorKind, level: usize) -> Result<u64> {
        values
            .get(level)
            .copied()
            .ok_or(Error::MissingColor { kind, level })
    }

    pub(crate) fn horizontal_at(&self, level: usize) -> Result<u64> {
        Self::lookup(&self.horizontal, ColorKind::Horizontal, level)
    }

    /// `Π_k (u_k d_k)^{v_k}` over the gaps the frame uses.
    pub(crate) fn vertical_weight(&self, frame: &Frame) -> Result<Count> {
        let mut weight = Count::one();
        for (k, v) in up_steps_per_level(frame).into_iter().enumerate() {
            let up = Self::lookup(&self.up, ColorKind::Up, k)?;
            let down = Self::lookup(&self.down, ColorKind::Down, k)?;
            weight *= (Count::from(up) * down).pow(v as u32);
        }
        Ok(weight)
    }
}

/// Dyck paths of length `2n` whose steps between levels `k` and `k + 1`
/// carry `up[k]` and `down[k]` colors; the horizontal colors are ignored.
pub fn count_colored_dyck(
    half_length: usize,
    colors: &ColorSpec,
    limits: &Limits,
) -> Result<Count> {
    let mut total = Count::default();
    for frame in enumerate_frames(half_length, limits)? {
        total += frame_cardinality(&frame) * colors.vertical_weight(&frame)?;
    }
    Ok(total)
}
