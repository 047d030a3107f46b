use num_bigint::BigUint;
use num_traits::One;

use super::Count;

/// `binom(top, bottom)` over all integers, with `binom(a, 0) = 1` for every
/// `a` (including `a = -1`) and zero whenever `bottom < 0`, `top < 0 < bottom`
/// or `bottom > top >= 0`.
pub fn binomial(top: i64, bottom: i64) -> Count {
    if bottom == 0 {
        return Count::one();
    }
    if bottom < 0 || top < 0 || bottom > top {
        return Count::default();
    }
    let bottom = bottom.min(top - bottom) as u64;
    let top = top as u64;
    let mut acc = BigUint::one();
    for k in 1..=bottom {
        // Stays integral: acc is binom(top - bottom + k - 1, k - 1) here.
        acc *= top - bottom + k;
        acc /= k;
    }
    acc
}

/// All sequences of `parts` nonnegative integers summing to `total`, first
/// part descending. There are `binom(total + parts - 1, total)` of them.
pub fn weak_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn fill(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            fill(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    match parts {
        0 if total == 0 => out.push(Vec::new()),
        0 => {}
        _ => fill(total, parts, &mut Vec::with_capacity(parts), &mut out),
    }
    out
}

/// Whether `binom(m + Σ i_t - 1, m)` equals the sum over weak compositions
/// `k_0 + ... + k_ν = m` of `Π binom(k_t + i_t - 1, k_t)`.
pub fn binomial_identity_check(m: u64, parts: &[u64]) -> bool {
    let sum: u64 = parts.iter().sum();
    let closed = binomial((m + sum) as i64 - 1, m as i64);
    let expanded: Count = weak_compositions(m, parts.len())
        .iter()
        .map(|ks| {
            ks.iter()
                .zip(parts)
                .map(|(&k, &i)| binomial((k + i) as i64 - 1, k as i64))
                .product::<Count>()
        })
        .sum();
    closed == expanded
}
