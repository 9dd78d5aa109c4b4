//! A net whose cones are congruent but not permuted by a reflection group.
//!
//! Boundaries are the order statistics together with the means of adjacent
//! order statistics, `2n - 1` in all, and the `2n` intervals carry the
//! coefficients of `(1 + q)(1 + q^2)^(n-1)` over `2^n`.

use crate::error::{Error, Result};
use crate::net::{merge_ties, normalise, ConfidenceNet, NetKind, Sample};
use crate::polynomial::Polynomial;

/// Largest `n` whose probabilities fit the `i64` denominator `2^n`.
pub const NONGROUP_LIMIT: usize = 62;

pub type NonGroupNet = ConfidenceNet;

pub fn nongroup_gf(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample size must be at least 1".into(),
        ));
    }
    let square = Polynomial::one_plus_q_pow(2);
    let mut p = Polynomial::one_plus_q_pow(1);
    for _ in 1..n {
        p = &p * &square;
    }
    Ok(p)
}

pub fn nongroup_net(y: &Sample) -> Result<NonGroupNet> {
    let n = y.len();
    if n > NONGROUP_LIMIT {
        return Err(Error::SampleTooLarge {
            n,
            limit: NONGROUP_LIMIT,
        });
    }
    let mut sorted = y.values().to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut raw = Vec::with_capacity(2 * n - 1);
    for (i, &x) in sorted.iter().enumerate() {
        if i > 0 {
            raw.push(0.5 * (sorted[i - 1] + x));
        }
        raw.push(x);
    }
    let gf = nongroup_gf(n)?.to_u64_coeffs()?;
    let (boundaries, weights, merged) = merge_ties(&raw, &gf);
    Ok(ConfidenceNet {
        kind: NetKind::NonGroup { n },
        boundaries,
        probs: normalise(&weights)?,
        merged,
    })
}

/// Row `n` rebuilt from binomial row `n`: the ends stay 1 and each interior
/// `C(n, k)` splits into `C(n-1, k-1), C(n-1, k)`.
pub fn pascal_split_row(n: usize) -> Vec<u64> {
    let prev = binomial_row(n.saturating_sub(1));
    let mut row = vec![1];
    for k in 1..n {
        row.push(prev[k - 1]);
        row.push(prev[k]);
    }
    row.push(1);
    row
}

fn binomial_row(m: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for k in 0..m {
        let next = row[k] * (m - k) as u64 / (k + 1) as u64;
        row.push(next);
    }
    row
}
