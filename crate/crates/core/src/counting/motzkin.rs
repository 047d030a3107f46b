use num_traits::{One, Zero};

use super::{binomial, frame_cardinality, ColorSpec, Count, FootTable};
use crate::error::Result;
use crate::frames::{enumerate_frames, Frame};
use crate::limits::Limits;

/// Motzkin paths of `length` whose horizontal steps all lie on `level`,
/// each horizontal step colored in one of `colors` ways.
///
/// Spreads the `length - 2j` horizontal steps over the `i` feet at `level`
/// of every Dyck path of length `2j`.
pub fn count_k_motzkin(length: usize, level: usize, colors: u64) -> Count {
    let half = length / 2;
    // Above level `half` no Dyck path of length <= `length` has feet, so
    // every such level counts alike.
    let level = level.min(half + 1);
    let table = FootTable::new(level, half);
    let mut total = Count::zero();
    for j in 0..=half {
        let horizontal = (length - 2 * j) as i64;
        let weight = Count::from(colors).pow(horizontal as u32);
        let row = table.row(j, level).expect("table covers every j <= half");
        for (feet, paths) in row.iter().enumerate() {
            if paths.is_zero() {
                continue;
            }
            total += paths * binomial(horizontal + feet as i64 - 1, horizontal) * &weight;
        }
    }
    total
}

/// The Motzkin number of `length`, from frame cardinalities: a Dyck path of
/// length `2j` takes its `length - 2j` horizontal steps at any of its
/// `2j + 1` nodes.
pub fn count_motzkin(length: usize, limits: &Limits) -> Result<Count> {
    let mut total = Count::zero();
    for j in 0..=length / 2 {
        let dyck: Count = enumerate_frames(j, limits)?
            .iter()
            .map(frame_cardinality)
            .sum();
        total += dyck * binomial(length as i64, (length - 2 * j) as i64);
    }
    Ok(total)
}

/// Motzkin paths of `length` with per-level colors on all three step kinds.
pub fn count_colored_motzkin(length: usize, colors: &ColorSpec, limits: &Limits) -> Result<Count> {
    let mut total = Count::zero();
    for j in 0..=length / 2 {
        let horizontal = length - 2 * j;
        for frame in enumerate_frames(j, limits)? {
            let spread = horizontal_arrangements(&frame, horizontal, colors)?;
            if spread.is_zero() {
                continue;
            }
            total += frame_cardinality(&frame) * colors.vertical_weight(&frame)? * spread;
        }
    }
    Ok(total)
}

/// `Σ_{k_0 + ... + k_f = m} Π_t binom(k_t + i_t - 1, k_t) h_t^{k_t}`, the
/// colored ways to place `m` horizontal steps on the nodes of a frame.
///
/// Evaluated as the coefficient of `x^m` in the product over levels of
/// `Σ_k binom(k + i_t - 1, k) h_t^k x^k`. Levels without nodes only admit
/// `k_t = 0` and contribute a factor 1, as does `h_t^0` when `h_t = 0`.
pub(crate) fn horizontal_arrangements(
    frame: &Frame,
    m: usize,
    colors: &ColorSpec,
) -> Result<Count> {
    let mut series = vec![Count::zero(); m + 1];
    series[0] = Count::one();
    if m == 0 {
        return Ok(series.swap_remove(0));
    }
    for (level, &nodes) in frame.counts().iter().enumerate() {
        let h = Count::from(colors.horizontal_at(level)?);
        let factor: Vec<Count> = (0..=m)
            .map(|k| binomial((k as u64 + nodes) as i64 - 1, k as i64) * h.pow(k as u32))
            .collect();
        let mut next = vec![Count::zero(); m + 1];
        for (a, left) in series.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, right) in factor[..=m - a].iter().enumerate() {
                next[a + b] += left * right;
            }
        }
        series = next;
    }
    Ok(series.swap_remove(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::weak_compositions;
    use crate::frames::RawSequence;

    #[test]
    fn k_motzkin_examples() {
        assert_eq!(count_k_motzkin(3, 0, 1), 3u32.into());
        assert_eq!(count_k_motzkin(4, 3, 1), 2u32.into());
        assert_eq!(count_k_motzkin(4, 1_000_000, 1), 2u32.into());
        assert_eq!(count_k_motzkin(0, 0, 1), 1u32.into());
        assert_eq!(count_k_motzkin(1, 0, 5), 5u32.into());
    }

    #[test]
    fn motzkin_numbers() {
        let limits = Limits::default();
        let values: Vec<u64> = (0..=10)
            .map(|n| count_motzkin(n, &limits).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(values, [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]);
    }

    #[test]
    fn colored_motzkin_reductions() {
        let limits = Limits::default();
        assert_eq!(
            count_colored_motzkin(4, &ColorSpec::ones(2), &limits).unwrap(),
            9u32.into()
        );
        let ground_only = ColorSpec {
            horizontal: vec![1, 0],
            up: vec![1, 1],
            down: vec![1, 1],
        };
        assert_eq!(
            count_colored_motzkin(3, &ground_only, &limits).unwrap(),
            3u32.into()
        );
    }

    #[test]
    fn arrangements_match_weak_composition_sum() {
        let frame: Frame = RawSequence::new(vec![3, 4, 3, 1]).try_into().unwrap();
        let colors = ColorSpec {
            horizontal: vec![2, 0, 3, 1],
            ..Default::default()
        };
        for m in 0..6 {
            let literal: Count = weak_compositions(m as u64, 4)
                .iter()
                .map(|ks| {
                    ks.iter()
                        .zip(frame.counts())
                        .zip(&colors.horizontal)
                        .map(|((&k, &i), &h)| {
                            binomial((k + i) as i64 - 1, k as i64) * Count::from(h).pow(k as u32)
                        })
                        .product::<Count>()
                })
                .sum();
            assert_eq!(
                horizontal_arrangements(&frame, m, &colors).unwrap(),
                literal
            );
        }
    }
}
