//! Confidence nets built from a sample.
//!
//! Each live root `a` contributes the boundary `theta_a = (a . y) / (a . v)`,
//! the point where the ray `y - theta * v` crosses the wall of `a`. Sorted
//! boundaries split the line into intervals `U_0, ..., U_{N-1}`, and `U_j`
//! covers the true parameter with probability `c_j / G(1)` where `c_j` is the
//! `j`-th coefficient of the net generating function.

use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::linalg;
use crate::polynomial::net_generating_function;
use crate::roots::{build_root_system, RootSystem};

/// Exact interval probability.
pub type Prob = Ratio<i64>;

/// Relative tolerance below which two boundaries are treated as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Default largest sample size accepted by [`hartigan_net`].
pub const HARTIGAN_LIMIT: usize = 20;

/// An observed sample of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample(Vec<f64>);

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSample("empty sample".into()));
        }
        if let Some(i) = values.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidSample(format!(
                "value {} at position {i} is not finite",
                values[i]
            )));
        }
        Ok(Sample(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Sample::new(v)
    }
}

impl TryFrom<&[f64]> for Sample {
    type Error = Error;

    fn try_from(v: &[f64]) -> Result<Self> {
        Sample::new(v.to_vec())
    }
}

/// What produced a net.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetKind {
    Group(GroupType),
    /// All nonempty subset means of `n` observations.
    Hartigan {
        n: usize,
    },
    /// Order statistics plus adjacent midpoints.
    NonGroup {
        n: usize,
    },
}

impl fmt::Display for NetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetKind::Group(g) => write!(f, "{g}"),
            NetKind::Hartigan { n } => write!(f, "hartigan{n}"),
            NetKind::NonGroup { n } => write!(f, "nongroup{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceNet {
    pub kind: NetKind,
    /// Strictly increasing interval endpoints `theta_1 < ... < theta_{N-1}`.
    pub boundaries: Vec<f64>,
    /// `probs[j]` is the coverage probability of `U_j`.
    pub probs: Vec<Prob>,
    /// One message per coalescence of tied boundaries.
    pub merged: Vec<String>,
}

/// A contiguous run of intervals `U_lo ..= U_hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageSet {
    pub lo_index: usize,
    pub hi_index: usize,
    pub prob: Prob,
    pub lower: f64,
    pub upper: f64,
}

impl ConfidenceNet {
    pub fn interval_count(&self) -> usize {
        self.probs.len()
    }

    /// Endpoints of `U_j`, with infinite ends for the outer intervals.
    pub fn interval(&self, j: usize) -> (f64, f64) {
        let lo = if j == 0 {
            f64::NEG_INFINITY
        } else {
            self.boundaries[j - 1]
        };
        let hi = self.boundaries.get(j).copied().unwrap_or(f64::INFINITY);
        (lo, hi)
    }

    pub fn total_prob(&self) -> Prob {
        self.probs.iter().copied().sum()
    }

    pub fn covering_interval(&self, theta: f64) -> (usize, Prob) {
        covering_interval(self, theta)
    }

    pub fn central_coverage_set(&self, alpha: f64) -> Result<CoverageSet> {
        central_coverage_set(self, alpha)
    }
}

pub(crate) fn is_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * 1f64.max(a.abs()).max(b.abs())
}

/// Coalesces tied neighbours in sorted `raw`. `weights` has one entry per
/// interval (`raw.len() + 1`); a degenerate interval between tied boundaries
/// is absorbed by its left neighbour.
pub(crate) fn merge_ties(raw: &[f64], weights: &[u64]) -> (Vec<f64>, Vec<u64>, Vec<String>) {
    debug_assert_eq!(weights.len(), raw.len() + 1);
    let mut bounds: Vec<f64> = Vec::with_capacity(raw.len());
    let mut w: Vec<u64> = Vec::with_capacity(weights.len());
    let mut warnings = Vec::new();
    w.push(weights[0]);
    for (i, &b) in raw.iter().enumerate() {
        match bounds.last() {
            Some(&prev) if is_tie(prev, b) => {
                // The interval between the tied pair folds into the one on its left.
                let degenerate = w.pop().expect("nonempty");
                let left = w.len() - 1;
                w[left] += degenerate;
                w.push(weights[i + 1]);
                warnings.push(format!(
                    "boundaries {prev} and {b} coalesced at {prev}; its zero-length interval merged into U_{left}"
                ));
            }
            _ => {
                bounds.push(b);
                w.push(weights[i + 1]);
            }
        }
    }
    (bounds, w, warnings)
}

pub(crate) fn normalise(weights: &[u64]) -> Result<Vec<Prob>> {
    let total: u64 = weights.iter().sum();
    let den = total
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("total weight {total}")))?;
    weights
        .iter()
        .map(|&c| {
            c.to_i64()
                .map(|c| Prob::new(c, den))
                .ok_or_else(|| Error::Overflow(format!("weight {c}")))
        })
        .collect()
}

fn sort_reals(v: &mut [f64]) {
    v.sort_by(f64::total_cmp);
}

/// Precomputed root data for building many nets of one group.
#[derive(Debug, Clone)]
pub struct NetBuilder {
    root_system: RootSystem,
    /// Per live root: its coordinates and `a . v`.
    live: Vec<(Vec<f64>, f64)>,
    gf: Vec<u64>,
}

impl NetBuilder {
    pub fn new(g: GroupType) -> Result<Self> {
        let rs = build_root_system(g)?;
        let live = rs
            .live_roots()
            .roots
            .iter()
            .map(|a| {
                let av = linalg::dot(a, &rs.ray_direction);
                (linalg::to_f64(a), linalg::q_to_f64(&av))
            })
            .collect();
        let gf = net_generating_function(g)?.to_u64_coeffs()?;
        Ok(NetBuilder {
            root_system: rs,
            live,
            gf,
        })
    }

    pub fn group(&self) -> GroupType {
        self.root_system.group
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    /// Net generating function coefficients.
    pub fn gf(&self) -> &[u64] {
        &self.gf
    }

    pub fn ray_direction(&self) -> Vec<f64> {
        linalg::to_f64(&self.root_system.ray_direction)
    }

    fn check(&self, y: &[f64]) -> Result<()> {
        let rs = &self.root_system;
        if y.len() != rs.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: rs.ambient_dim,
                got: y.len(),
            });
        }
        if rs.requires_span_sample() {
            let scale = y.iter().fold(1f64, |m, x| m.max(x.abs()));
            if rs.off_span_component(y) > TIE_TOLERANCE * scale {
                return Err(Error::SampleOutsideSpan);
            }
        }
        Ok(())
    }

    /// Unmerged sorted boundaries, one per live root.
    pub fn raw_boundaries(&self, y: &Sample) -> Result<Vec<f64>> {
        let y = y.values();
        self.check(y)?;
        let mut out: Vec<f64> = self
            .live
            .iter()
            .map(|(a, av)| a.iter().zip(y).map(|(ai, yi)| ai * yi).sum::<f64>() / av)
            .collect();
        sort_reals(&mut out);
        Ok(out)
    }

    pub fn boundaries(&self, y: &Sample) -> Result<Vec<f64>> {
        let raw = self.raw_boundaries(y)?;
        let ones = vec![0u64; raw.len() + 1];
        Ok(merge_ties(&raw, &ones).0)
    }

    pub fn net(&self, y: &Sample) -> Result<ConfidenceNet> {
        let raw = self.raw_boundaries(y)?;
        let (boundaries, weights, mut merged) = merge_ties(&raw, &self.gf);
        merged.extend(self.group().warnings());
        Ok(ConfidenceNet {
            kind: NetKind::Group(self.group()),
            boundaries,
            probs: normalise(&weights)?,
            merged,
        })
    }

    /// Index of the interval covering `theta`, skipping the merge bookkeeping.
    /// Matches `covering_interval(&self.net(y)?, theta).0` whenever no ties occur.
    pub fn covering_index(&self, y: &[f64], theta: f64) -> usize {
        self.live
            .iter()
            .filter(|(a, av)| a.iter().zip(y).map(|(ai, yi)| ai * yi).sum::<f64>() / av < theta)
            .count()
    }
}

pub fn boundaries(g: GroupType, y: &Sample) -> Result<Vec<f64>> {
    NetBuilder::new(g)?.boundaries(y)
}

pub fn confidence_net(g: GroupType, y: &Sample) -> Result<ConfidenceNet> {
    NetBuilder::new(g)?.net(y)
}

/// Interval containing `theta`: the number of boundaries strictly below it.
/// A boundary value itself belongs to the interval on its left.
pub fn covering_interval(net: &ConfidenceNet, theta: f64) -> (usize, Prob) {
    let idx = net.boundaries.partition_point(|&b| b < theta);
    (idx, net.probs[idx])
}

/// Drops outer intervals while the remaining mass stays at least `1 - alpha`.
///
/// At each step the end with the smaller probability is dropped. On a tie the
/// side from which less mass has been removed so far goes first, and the left
/// side if that is tied too.
pub fn central_coverage_set(net: &ConfidenceNet, alpha: f64) -> Result<CoverageSet> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let target = Ratio::<num_bigint::BigInt>::from_float(1.0 - alpha).expect("finite target");
    let to_big = |p: Prob| Ratio::new((*p.numer()).into(), (*p.denom()).into());
    let (mut lo, mut hi) = (0usize, net.probs.len() - 1);
    let mut remaining = net.total_prob();
    let (mut dropped_left, mut dropped_right) = (Prob::zero(), Prob::zero());
    while lo < hi {
        let (pl, pr) = (net.probs[lo], net.probs[hi]);
        let take_left = pl < pr || (pl == pr && dropped_left <= dropped_right);
        let p = if take_left { pl } else { pr };
        if to_big(remaining - p) < target {
            break;
        }
        remaining -= p;
        if take_left {
            dropped_left += p;
            lo += 1;
        } else {
            dropped_right += p;
            hi -= 1;
        }
    }
    Ok(CoverageSet {
        lo_index: lo,
        hi_index: hi,
        prob: remaining,
        lower: net.interval(lo).0,
        upper: net.interval(hi).1,
    })
}

/// Subsample net: boundaries are the means of all `2^n - 1` nonempty
/// subsets, and each of the `2^n` intervals has probability `2^{-n}`.
pub fn hartigan_net(y: &Sample) -> Result<ConfidenceNet> {
    hartigan_net_with_limit(y, HARTIGAN_LIMIT)
}

pub fn hartigan_net_with_limit(y: &Sample, limit: usize) -> Result<ConfidenceNet> {
    let n = y.len();
    if n > limit || n > 62 {
        return Err(Error::SampleTooLarge {
            n,
            limit: limit.min(62),
        });
    }
    let raw = subset_means(y.values());
    let weights = vec![1u64; raw.len() + 1];
    let (boundaries, weights, merged) = merge_ties(&raw, &weights);
    Ok(ConfidenceNet {
        kind: NetKind::Hartigan { n },
        boundaries,
        probs: normalise(&weights)?,
        merged,
    })
}

/// Sorted means of all nonempty subsets.
pub(crate) fn subset_means(y: &[f64]) -> Vec<f64> {
    let n = y.len();
    let size = 1usize << n;
    let mut sums = vec![0f64; size];
    let mut means = Vec::with_capacity(size - 1);
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + y[low];
        means.push(sums[mask] / mask.count_ones() as f64);
    }
    sort_reals(&mut means);
    means
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[f64]) -> Sample {
        Sample::new(v.to_vec()).unwrap()
    }

    fn pr(n: i64, d: i64) -> Prob {
        Prob::new(n, d)
    }

    fn eighths(c: &[i64]) -> Vec<Prob> {
        c.iter().map(|&x| pr(x, 8)).collect()
    }

    #[test]
    fn sample_validation() {
        assert!(Sample::new(vec![]).is_err());
        assert!(Sample::new(vec![1.0, f64::NAN]).is_err());
        assert!(Sample::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundaries(GroupType::B(2), &s(&[1.0, 3.0])).unwrap(),
            vec![1.0, 2.0, 3.0]
        );
        assert_eq!(
            boundaries(GroupType::B(3), &s(&[1.0, 2.0, 4.0])).unwrap(),
            vec![1.0, 1.5, 2.0, 2.5, 3.0, 4.0]
        );
        assert_eq!(
            boundaries(GroupType::D(4), &s(&[1.0, 2.0, 3.0, 4.0])).unwrap(),
            vec![1.5, 2.0, 2.5, 3.0, 3.5]
        );
    }

    #[test]
    fn a2_boundaries_match_ray_intersection() {
        // Oracle: intersect y - theta k with each wall e_j - e_3 directly,
        // (y_j - theta) - (y_3 + 2 theta) = 0.
        let y = [1.0, 0.0, -1.0];
        let direct: Vec<f64> = {
            let mut v: Vec<f64> = (0..2).map(|j| (y[j] - y[2]) / 3.0).collect();
            v.sort_by(f64::total_cmp);
            v
        };
        let got = boundaries(GroupType::A(2), &s(&y)).unwrap();
        assert_eq!(got.len(), 2);
        for (g, d) in got.iter().zip(&direct) {
            assert!((g - d).abs() < 1e-15);
        }
        assert!((got[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((got[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            boundaries(GroupType::B(3), &s(&[1.0, 2.0])),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
        assert!(matches!(
            confidence_net(GroupType::A(2), &s(&[1.0, 2.0])),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn e6_rejects_off_span_sample() {
        let y = s(&[1.0, 2.0, -0.5, 3.0, 0.25, 1.0, -2.0, 4.0]);
        assert_eq!(
            confidence_net(GroupType::E6, &y).unwrap_err(),
            Error::SampleOutsideSpan
        );
        let b = NetBuilder::new(GroupType::E6).unwrap();
        let p = b.root_system().project_to_span(y.values());
        let net = b.net(&s(&p)).unwrap();
        assert_eq!(net.interval_count(), 22);
    }

    #[test]
    fn b3_net() {
        let net = confidence_net(GroupType::B(3), &s(&[1.0, 2.0, 4.0])).unwrap();
        assert_eq!(net.interval_count(), 7);
        assert_eq!(net.probs, eighths(&[1, 1, 1, 2, 1, 1, 1]));
        assert!(net.merged.is_empty());
        assert_eq!(net.total_prob(), pr(1, 1));
    }

    #[test]
    fn a3_net_is_uniform() {
        let net = confidence_net(GroupType::A(3), &s(&[0.3, -1.2, 2.0, 0.1])).unwrap();
        assert_eq!(net.probs, vec![pr(1, 4); 4]);
    }

    #[test]
    fn d4_net_with_tie() {
        let net = confidence_net(GroupType::D(4), &s(&[1.0, 2.0, 3.0, 4.0])).unwrap();
        assert_eq!(net.boundaries, vec![1.5, 2.0, 2.5, 3.0, 3.5]);
        assert_eq!(net.interval_count(), 6);
        // The degenerate interval U_3 (weight 2) folds into U_2.
        assert_eq!(net.probs, eighths(&[1, 1, 3, 1, 1, 1]));
        assert_eq!(net.merged.len(), 1);
        assert!(net.merged[0].contains("2.5"));
        assert_eq!(net.total_prob(), pr(1, 1));
    }

    #[test]
    fn covering_examples() {
        let net = confidence_net(GroupType::B(3), &s(&[1.0, 2.0, 4.0])).unwrap();
        assert_eq!(covering_interval(&net, -10.0), (0, pr(1, 8)));
        assert_eq!(covering_interval(&net, 2.2), (3, pr(2, 8)));
        assert_eq!(covering_interval(&net, 100.0), (6, pr(1, 8)));
        // A boundary hit belongs to the interval on the left.
        assert_eq!(covering_interval(&net, 2.0).0, 2);
    }

    #[test]
    fn central_sets() {
        let net = confidence_net(GroupType::B(3), &s(&[1.0, 2.0, 4.0])).unwrap();
        let c = central_coverage_set(&net, 0.25).unwrap();
        assert_eq!((c.lo_index, c.hi_index, c.prob), (1, 5, pr(6, 8)));
        assert_eq!((c.lower, c.upper), (1.0, 4.0));

        let full = central_coverage_set(&net, 1e-12).unwrap();
        assert_eq!((full.lo_index, full.hi_index, full.prob), (0, 6, pr(1, 1)));
        assert!(full.lower.is_infinite() && full.upper.is_infinite());

        let a1 = confidence_net(GroupType::A(1), &s(&[0.5, -0.5])).unwrap();
        let c = central_coverage_set(&a1, 0.5).unwrap();
        assert_eq!(c.lo_index, c.hi_index);
        assert_eq!(c.prob, pr(1, 2));

        assert!(central_coverage_set(&net, 0.0).is_err());
        assert!(central_coverage_set(&net, 1.0).is_err());
    }

    #[test]
    fn hartigan_examples() {
        let n1 = hartigan_net(&s(&[5.0])).unwrap();
        assert_eq!(n1.boundaries, vec![5.0]);
        assert_eq!(n1.probs, vec![pr(1, 2); 2]);

        let n2 = hartigan_net(&s(&[0.0, 2.0])).unwrap();
        assert_eq!(n2.boundaries, vec![0.0, 1.0, 2.0]);
        assert_eq!(n2.probs, vec![pr(1, 4); 4]);

        let n3 = hartigan_net(&s(&[1.0, 2.0, 4.0])).unwrap();
        let want = [1.0, 1.5, 2.0, 7.0 / 3.0, 2.5, 3.0, 4.0];
        assert_eq!(n3.boundaries.len(), 7);
        for (g, w) in n3.boundaries.iter().zip(want) {
            assert!((g - w).abs() < 1e-15);
        }
        assert_eq!(n3.probs, vec![pr(1, 8); 8]);

        let big = Sample::new(vec![0.0; 21]).unwrap();
        assert_eq!(
            hartigan_net(&big).unwrap_err(),
            Error::SampleTooLarge { n: 21, limit: 20 }
        );
    }

    #[test]
    fn hartigan_ties_sum() {
        let net = hartigan_net(&s(&[1.0, 1.0])).unwrap();
        assert_eq!(net.boundaries, vec![1.0]);
        assert_eq!(net.probs, vec![pr(3, 4), pr(1, 4)]);
        assert_eq!(net.merged.len(), 2);
    }

    fn groups() -> Vec<GroupType> {
        vec![
            GroupType::A(3),
            GroupType::B(4),
            GroupType::D(4),
            GroupType::D(5),
            GroupType::E8,
        ]
    }

    proptest! {
        #[test]
        fn probabilities_partition_the_line(
            gi in 0usize..5,
            raw in prop::collection::vec(-100.0f64..100.0, 8),
            theta in -200.0f64..200.0,
        ) {
            let g = groups()[gi];
            let y = Sample::new(raw[..g.ambient_dim()].to_vec()).unwrap();
            let net = confidence_net(g, &y).unwrap();
            prop_assert_eq!(net.total_prob(), pr(1, 1));
            prop_assert_eq!(net.boundaries.len() + 1, net.interval_count());
            prop_assert!(net.boundaries.windows(2).all(|w| w[0] < w[1]));
            let (idx, _) = covering_interval(&net, theta);
            let (lo, hi) = net.interval(idx);
            prop_assert!(lo < theta && theta <= hi);
        }

        #[test]
        fn generic_interval_count(raw in prop::collection::vec(-100.0f64..100.0, 5)) {
            let g = GroupType::B(5);
            let y = Sample::new(raw).unwrap();
            let net = confidence_net(g, &y).unwrap();
            if net.merged.is_empty() {
                prop_assert_eq!(net.interval_count(), 16);
            }
        }

        #[test]
        fn permutation_invariance(mut raw in prop::collection::vec(-50.0f64..50.0, 4)) {
            for g in [GroupType::B(4), GroupType::D(4)] {
                let a = boundaries(g, &Sample::new(raw.clone()).unwrap()).unwrap();
                raw.reverse();
                raw.swap(0, 2);
                let b = boundaries(g, &Sample::new(raw.clone()).unwrap()).unwrap();
                prop_assert_eq!(a.len(), b.len());
                for (x, y) in a.iter().zip(&b) {
                    prop_assert!((x - y).abs() <= 1e-12 * 1f64.max(x.abs()));
                }
            }
        }
    }
}
