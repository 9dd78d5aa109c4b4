//! Seeded Monte Carlo estimates of interval coverage.
//!
//! Trials are split into fixed chunks of `MC_CHUNK`. Chunk `k` draws from a
//! ChaCha8 generator seeded with the user seed and switched to stream `k`, so
//! the histogram depends only on `(seed, trials)` and not on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::net::{covering_interval, hartigan_net, is_tie, ConfidenceNet, NetBuilder, Sample};
use crate::nongroup::{nongroup_gf, nongroup_net};

pub const MC_CHUNK: u64 = 8192;

/// Largest sample size accepted by `hartigan_mc`.
pub const HARTIGAN_MC_LIMIT: usize = 12;

/// Worker count: `COXNET_THREADS` if set to a positive integer, otherwise the
/// available parallelism.
pub fn worker_threads() -> usize {
    std::env::var("COXNET_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Observed cell counts next to the exact cell probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalHistogram {
    pub counts: Vec<u64>,
    pub trials: u64,
    pub expected: Vec<f64>,
}

impl EmpiricalHistogram {
    pub fn proportions(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.trials as f64)
            .collect()
    }

    /// Binomial standard error of each cell proportion under the exact probability.
    pub fn standard_errors(&self) -> Vec<f64> {
        self.expected
            .iter()
            .map(|&p| (p * (1.0 - p) / self.trials as f64).sqrt())
            .collect()
    }

    pub fn z_scores(&self) -> Vec<f64> {
        self.proportions()
            .iter()
            .zip(&self.expected)
            .zip(self.standard_errors())
            .map(|((&obs, &p), se)| if se > 0.0 { (obs - p) / se } else { 0.0 })
            .collect()
    }

    pub fn max_abs_z(&self) -> f64 {
        self.z_scores().iter().fold(0.0, |m, z| m.max(z.abs()))
    }

    /// Every cell lies within `k` standard errors of its exact probability.
    pub fn within(&self, k: f64) -> bool {
        self.max_abs_z() <= k
    }
}

fn run<F>(cells: usize, trials: u64, seed: u64, trial: F) -> Result<Vec<u64>>
where
    F: Fn(&mut ChaCha8Rng) -> Result<usize> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let chunks = trials.div_ceil(MC_CHUNK);
    let work = || {
        (0..chunks)
            .into_par_iter()
            .map(|k| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(k);
                let len = MC_CHUNK.min(trials - k * MC_CHUNK);
                let mut counts = vec![0u64; cells];
                for _ in 0..len {
                    counts[trial(&mut rng)?] += 1;
                }
                Ok(counts)
            })
            .try_reduce(
                || vec![0u64; cells],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    Ok(a)
                },
            )
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(worker_threads())
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

fn normal_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.sample(StandardNormal)).collect()
}

fn shifted(mut z: Vec<f64>, theta: f64) -> Vec<f64> {
    z.iter_mut().for_each(|x| *x += theta);
    z
}

fn cell_index(net: &ConfidenceNet, theta: f64) -> usize {
    covering_interval(net, theta).0
}

fn probabilities(weights: &[u64]) -> Vec<f64> {
    let total: u64 = weights.iter().sum();
    weights.iter().map(|&w| w as f64 / total as f64).collect()
}

/// Coverage counts for `Y = theta v + Z` with standard normal `Z`.
///
/// For E6 and E7 the noise is projected onto the span of the roots.
pub fn monte_carlo_coverage(
    g: GroupType,
    trials: u64,
    seed: u64,
    theta: f64,
) -> Result<EmpiricalHistogram> {
    let builder = NetBuilder::new(g)?;
    let rs = builder.root_system();
    let v = builder.ray_direction();
    let dim = rs.ambient_dim;
    let project = rs.requires_span_sample();
    let counts = run(builder.gf().len(), trials, seed, |rng| {
        let mut z = normal_vec(rng, dim);
        if project {
            z = rs.project_to_span(&z);
        }
        let y: Vec<f64> = v.iter().zip(&z).map(|(vi, zi)| theta * vi + zi).collect();
        let sample = Sample::new(y)?;
        let raw = builder.raw_boundaries(&sample)?;
        if !raw.windows(2).any(|w| is_tie(w[0], w[1])) {
            Ok(raw.partition_point(|&b| b < theta))
        } else {
            Ok(cell_index(&builder.net(&sample)?, theta))
        }
    })?;
    Ok(EmpiricalHistogram {
        counts,
        trials,
        expected: probabilities(builder.gf()),
    })
}

/// Coverage of the subsample-mean net for `n` iid standard normals centred at 0.
pub fn hartigan_mc(n: usize, trials: u64, seed: u64) -> Result<EmpiricalHistogram> {
    hartigan_mc_at(n, trials, seed, 0.0)
}

/// As `hartigan_mc`, with observations centred at `theta`.
pub fn hartigan_mc_at(n: usize, trials: u64, seed: u64, theta: f64) -> Result<EmpiricalHistogram> {
    if n == 0 || n > HARTIGAN_MC_LIMIT {
        return Err(Error::SampleTooLarge {
            n,
            limit: HARTIGAN_MC_LIMIT,
        });
    }
    let cells = 1usize << n;
    let counts = run(cells, trials, seed, |rng| {
        let net = hartigan_net(&Sample::new(shifted(normal_vec(rng, n), theta))?)?;
        Ok(cell_index(&net, theta))
    })?;
    Ok(EmpiricalHistogram {
        counts,
        trials,
        expected: vec![1.0 / cells as f64; cells],
    })
}

/// Coverage of the order-statistic net for `n` iid standard normals centred at 0.
pub fn nongroup_mc(n: usize, trials: u64, seed: u64) -> Result<EmpiricalHistogram> {
    nongroup_mc_at(n, trials, seed, 0.0)
}

/// As `nongroup_mc`, with observations centred at `theta`.
pub fn nongroup_mc_at(n: usize, trials: u64, seed: u64, theta: f64) -> Result<EmpiricalHistogram> {
    let gf = nongroup_gf(n)?.to_u64_coeffs()?;
    let counts = run(gf.len(), trials, seed, |rng| {
        let net = nongroup_net(&Sample::new(shifted(normal_vec(rng, n), theta))?)?;
        Ok(cell_index(&net, theta))
    })?;
    Ok(EmpiricalHistogram {
        counts,
        trials,
        expected: probabilities(&gf),
    })
}
