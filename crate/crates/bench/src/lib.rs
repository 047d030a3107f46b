//! Shared workloads for the criterion benches.

use dyck_frames::RawSequence;

/// Every sequence of `entries` nonnegative integers with sum at most
/// `max_sum`, trailing zeros included.
pub fn bounded_sequences(entries: usize, max_sum: u64) -> Vec<RawSequence> {
    fn fill(left: usize, budget: u64, prefix: &mut Vec<u64>, out: &mut Vec<RawSequence>) {
        if left == 0 {
            out.push(RawSequence::new(prefix.clone()));
            return;
        }
        for value in 0..=budget {
            prefix.push(value);
            fill(left - 1, budget - value, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(entries, max_sum, &mut Vec::with_capacity(entries), &mut out);
    out
}
