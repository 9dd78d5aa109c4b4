//! Normal and Edgeworth approximations to net cell probabilities.
//!
//! Cell `j` is compared with the density at the lattice point
//! `u_j = (j - mu) / sigma`, without continuity correction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Mean, variance and standardized fourth cumulant of a cell distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSet {
    pub mu: BigRational,
    pub sigma2: BigRational,
    pub kappa4: BigRational,
}

impl MomentSet {
    pub fn to_f64(&self) -> (f64, f64, f64) {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        (f(&self.mu), f(&self.sigma2), f(&self.kappa4))
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Closed-form moments of `U = sum_{j=1}^n j V_j` with iid fair Bernoulli `V_j`.
pub fn bn_moments(n: usize) -> Result<MomentSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let n = n as i64;
    Ok(MomentSet {
        mu: rat(n * (n + 1), 4),
        sigma2: rat(n * (n + 1) * (2 * n + 1), 24),
        kappa4: rat(-12, 5) * rat(3 * n * n + 3 * n - 1, n * (n + 1) * (2 * n + 1)),
    })
}

/// Exact moments of the distribution `c_j / G(1)` for a polynomial `G`.
pub fn gf_moments(p: &Polynomial) -> Result<MomentSet> {
    let total = p.eval_at_one();
    if total.is_zero() || !p.has_nonnegative_coeffs() {
        return Err(Error::InvalidArgument(
            "moments need nonnegative coefficients with a positive sum".into(),
        ));
    }
    let total = BigRational::from_integer(total);
    let weights: Vec<BigRational> = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()) / &total)
        .collect();
    let mu: BigRational = weights
        .iter()
        .enumerate()
        .map(|(j, w)| w * BigRational::from_integer(j.into()))
        .sum();
    let central = |k: u32| -> BigRational {
        weights
            .iter()
            .enumerate()
            .map(|(j, w)| {
                let d = BigRational::from_integer(j.into()) - &mu;
                let mut pow = BigRational::one();
                for _ in 0..k {
                    pow *= &d;
                }
                w * pow
            })
            .sum()
    };
    let sigma2 = central(2);
    if sigma2.is_zero() {
        return Err(Error::InvalidArgument(
            "distribution has zero variance".into(),
        ));
    }
    let kappa4 = central(4) / (&sigma2 * &sigma2) - BigRational::from_integer(3.into());
    Ok(MomentSet { mu, sigma2, kappa4 })
}

pub fn hermite4(u: f64) -> f64 {
    let u2 = u * u;
    u2 * u2 - 6.0 * u2 + 3.0
}

pub fn normal_pdf(u: f64) -> f64 {
    (-0.5 * u * u).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// `phi(u_j) (1 + kappa4 / 24 * H_4(u_j)) / sigma` for `j = 0..cells`, not renormalized.
pub fn edgeworth_cell_probs(mu: f64, sigma2: f64, kappa4: f64, cells: usize) -> Result<Vec<f64>> {
    if sigma2.is_nan() || sigma2 <= 0.0 || cells == 0 {
        return Err(Error::InvalidArgument(
            "sigma2 must be positive and cells at least 1".into(),
        ));
    }
    let sigma = sigma2.sqrt();
    Ok((0..cells)
        .map(|j| {
            let u = (j as f64 - mu) / sigma;
            normal_pdf(u) * (1.0 + kappa4 / 24.0 * hermite4(u)) / sigma
        })
        .collect())
}

pub fn normal_cell_probs(mu: f64, sigma2: f64, cells: usize) -> Result<Vec<f64>> {
    edgeworth_cell_probs(mu, sigma2, 0.0, cells)
}

/// Summary of an approximation against exact cell probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxError {
    /// Sum of the approximate values.
    pub sum: f64,
    pub max_abs_error: f64,
    pub rmse: f64,
}

pub fn compare(approx: &[f64], exact: &[f64]) -> ApproxError {
    debug_assert_eq!(approx.len(), exact.len());
    let mut max_abs_error = 0f64;
    let mut sq = 0f64;
    for (a, e) in approx.iter().zip(exact) {
        let d = (a - e).abs();
        max_abs_error = max_abs_error.max(d);
        sq += d * d;
    }
    ApproxError {
        sum: approx.iter().sum(),
        max_abs_error,
        rmse: (sq / approx.len() as f64).sqrt(),
    }
}

/// Exact cell probabilities `c_j / G(1)`.
pub fn exact_cell_probs(p: &Polynomial) -> Vec<f64> {
    let total = BigRational::from_integer(p.eval_at_one());
    p.coeffs()
        .iter()
        .map(|c| {
            (BigRational::from_integer(c.clone()) / &total)
                .to_f64()
                .unwrap_or(f64::NAN)
        })
        .collect()
}

/// Edgeworth approximation of `p` using its own exact moments.
pub fn edgeworth_for(p: &Polynomial) -> Result<(Vec<f64>, ApproxError)> {
    let (mu, sigma2, kappa4) = gf_moments(p)?.to_f64();
    let exact = exact_cell_probs(p);
    let approx = edgeworth_cell_probs(mu, sigma2, kappa4, exact.len())?;
    let err = compare(&approx, &exact);
    Ok((approx, err))
}
