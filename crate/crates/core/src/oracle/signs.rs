//! Interval-position counters over sign vectors.
//!
//! A sign vector `x in {0,1}^n` marks which coordinates of `y - theta` are
//! negative within a fixed ordering; the position of the covering interval
//! is `psi(x) = sum_i i x_i`.

use crate::error::{Error, Result};
use crate::oracle::LengthHistogram;

const MAX_N: usize = 30;
const ENUMERATION_LIMIT: usize = 20;

/// Histogram of `sum_{i=1}^{m} i x_i` over `{0,1}^m`.
fn weighted_sum_histogram(m: usize) -> LengthHistogram {
    let top = m * (m + 1) / 2;
    if m <= ENUMERATION_LIMIT {
        let mut counts = vec![0u64; top + 1];
        // Gray code walk: one coordinate flips per step.
        let mut psi = 0usize;
        counts[0] += 1;
        for step in 1u64..(1u64 << m) {
            let bit = step.trailing_zeros() as usize;
            let gray = step ^ (step >> 1);
            if gray & (1 << bit) != 0 {
                psi += bit + 1;
            } else {
                psi -= bit + 1;
            }
            counts[psi] += 1;
        }
        LengthHistogram::new(counts)
    } else {
        // Convolution with the two-point law of i * x_i.
        let mut counts = vec![0u64; top + 1];
        counts[0] = 1;
        for i in 1..=m {
            for s in (i..=top).rev() {
                counts[s] += counts[s - i];
            }
        }
        LengthHistogram::new(counts)
    }
}

/// Type B counter over `{0,1}^n`.
pub fn sign_vector_histogram_b(n: usize) -> Result<LengthHistogram> {
    if n > MAX_N {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds {MAX_N}")));
    }
    Ok(weighted_sum_histogram(n))
}

/// Type D counter over the first `n - 1` signs.
pub fn sign_vector_histogram_d(n: usize) -> Result<LengthHistogram> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "n = {n} outside 2..={MAX_N}"
        )));
    }
    Ok(weighted_sum_histogram(n - 1))
}
