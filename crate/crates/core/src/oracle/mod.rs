//! Independent checks of the algebra and the statistics.
//!
//! Nothing here uses the generating-function formulas: lengths come from a
//! breadth-first search of the Cayley graph, coset minima from an explicit
//! partition of the group, interval counts from enumerating sign vectors, and
//! coverage from simulated data.

mod cayley;
mod element;
mod gallery;
mod montecarlo;
mod signs;

pub use cayley::{
    coset_min_length_histogram, coset_min_length_histogram_with_limit, enumerate_elements,
    inversion_count, length_histogram, length_histogram_with_limit, CayleyGraph, CosetPartition,
    DEFAULT_GROUP_LIMIT,
};
pub use element::GroupElement;
pub use gallery::{gallery_walk, Gallery, GalleryOracle};
pub use montecarlo::{
    hartigan_mc, hartigan_mc_at, monte_carlo_coverage, nongroup_mc, nongroup_mc_at, worker_threads,
    EmpiricalHistogram, HARTIGAN_MC_LIMIT, MC_CHUNK,
};
pub use signs::{sign_vector_histogram_b, sign_vector_histogram_d};

use crate::polynomial::Polynomial;

/// Counts indexed by length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LengthHistogram(Vec<u64>);

impl LengthHistogram {
    pub fn new(counts: Vec<u64>) -> Self {
        LengthHistogram(counts)
    }

    pub fn from_values(values: impl IntoIterator<Item = usize>) -> Self {
        let mut counts: Vec<u64> = Vec::new();
        for v in values {
            if v >= counts.len() {
                counts.resize(v + 1, 0);
            }
            counts[v] += 1;
        }
        LengthHistogram(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// First index where the histogram and the polynomial coefficients differ.
    pub fn first_mismatch(&self, p: &Polynomial) -> Option<usize> {
        let n = self.0.len().max(p.coeffs().len());
        (0..n).find(|&i| p.coeff(i) != self.0.get(i).copied().unwrap_or(0).into())
    }

    pub fn matches(&self, p: &Polynomial) -> bool {
        self.first_mismatch(p).is_none()
    }
}
