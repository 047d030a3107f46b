use std::borrow::Cow;

use num_traits::{One, Zero};

use super::Count;

/// Counts of Dyck paths of length `2n` with exactly `j` nodes at level `s`,
/// for all `s <= max_level`, `n <= max_half_length`.
///
/// Level 0 comes from the decomposition into a lifted prefix and a glued
/// suffix; each higher level is filled from the level below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FootTable {
    max_level: usize,
    max_half_length: usize,
    // levels[s][n][j], j in 0..=n + 1
    levels: Vec<Vec<Vec<Count>>>,
}

/// Rows `n = 0..=max_half_length` of the level-0 slice, column `j` in
/// `0..=n + 1`.
pub fn feet_level0(max_half_length: usize) -> Vec<Vec<Count>> {
    let mut rows: Vec<Vec<Count>> = Vec::with_capacity(max_half_length + 1);
    for n in 0..=max_half_length {
        let mut row = vec![Count::zero(); n + 2];
        match n {
            0 => row[1] = Count::one(),
            1 => row[2] = Count::one(),
            _ => {
                // Two feet: a lifted path of length 2(n - 1), any foot count.
                row[2] = rows[n - 1].iter().sum();
                for (j, cell) in row.iter_mut().enumerate().skip(3) {
                    *cell = (0..=n - 2)
                        .map(|i| {
                            &rows[i + 1][2] * rows[n - i - 1].get(j - 1).unwrap_or(&Count::zero())
                        })
                        .sum();
                }
            }
        }
        rows.push(row);
    }
    rows
}

impl FootTable {
    pub fn new(max_level: usize, max_half_length: usize) -> FootTable {
        let mut levels = vec![feet_level0(max_half_length)];
        for s in 1..=max_level {
            let below = &levels[s - 1];
            let mut rows: Vec<Vec<Count>> = Vec::with_capacity(max_half_length + 1);
            for n in 0..=max_half_length {
                let mut row = vec![Count::zero(); n + 2];
                if n == 0 {
                    row[0] = Count::one();
                }
                // A lifted path of length 2i with k feet at level s - 1,
                // followed by a path of length 2(n - i - 1) with j - k feet.
                for i in 0..n {
                    let rest = &rows[n - i - 1];
                    for (k, lifted) in below[i].iter().enumerate() {
                        if lifted.is_zero() {
                            continue;
                        }
                        for (r, tail) in rest.iter().enumerate() {
                            if k + r < row.len() {
                                row[k + r] += lifted * tail;
                            }
                        }
                    }
                }
                rows.push(row);
            }
            levels.push(rows);
        }
        FootTable {
            max_level,
            max_half_length,
            levels,
        }
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn max_half_length(&self) -> usize {
        self.max_half_length
    }

    /// Row `n` at level `s`, indexed by foot count `0..=n + 1`.
    pub fn row(&self, half_length: usize, level: usize) -> Option<&[Count]> {
        self.levels
            .get(level)
            .and_then(|rows| rows.get(half_length))
            .map(Vec::as_slice)
    }

    /// Entry for `(n, s, j)`. Queries beyond the table are answered from a
    /// freshly built larger table.
    pub fn get(&self, half_length: usize, level: usize, feet: usize) -> Cow<'_, Count> {
        match self.row(half_length, level) {
            Some(row) => match row.get(feet) {
                Some(count) => Cow::Borrowed(count),
                None => Cow::Owned(Count::zero()),
            },
            None => {
                let larger = FootTable::new(
                    self.max_level.max(level),
                    self.max_half_length.max(half_length),
                );
                Cow::Owned(larger.get(half_length, level, feet).into_owned())
            }
        }
    }
}
