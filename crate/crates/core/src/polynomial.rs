//! Dense integer polynomials in `q` and the length / net generating functions.
//!
//! Coefficients are arbitrary precision. Index `i` of [`Polynomial::coeffs`]
//! holds the coefficient of `q^i`; the representation is kept trimmed so the
//! last stored coefficient is nonzero.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::GroupType;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `1 - q^d`
    pub fn one_minus_q_pow(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] += 1;
        c[d] -= 1;
        Self::new(c)
    }

    /// `1 + q^d`
    pub fn one_plus_q_pow(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] += 1;
        c[d] += 1;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as `u64`, failing if any is negative or too large.
    pub fn to_u64_coeffs(&self) -> Result<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_u64()
                    .ok_or_else(|| Error::Overflow(format!("coefficient {c}")))
            })
            .collect()
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Long division from the top coefficient down. Succeeds only when `den`
    /// divides `self` exactly over the integers.
    pub fn divide_exact(&self, den: &Polynomial) -> Result<Polynomial> {
        let Some(dd) = den.degree() else {
            return Err(Error::InvalidArgument(
                "division by the zero polynomial".into(),
            ));
        };
        let Some(nd) = self.degree() else {
            return Ok(Polynomial::zero());
        };
        if nd < dd {
            return Err(Error::NonExactDivision);
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, c) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Polynomial::new(quot))
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        factors
            .into_iter()
            .fold(Polynomial::one(), |acc, f| acc.multiply(f))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Basic invariant degrees `d_1 <= ... <= d_m` of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeList(Vec<usize>);

impl DegreeList {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of the degrees, which is the group order.
    pub fn product(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }
}

pub fn degrees(g: GroupType) -> Result<DegreeList> {
    let g = g.validated()?;
    let mut d: Vec<usize> = match g {
        GroupType::A(n) => (2..=n + 1).collect(),
        GroupType::B(n) => (1..=n).map(|i| 2 * i).collect(),
        GroupType::D(n) => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
        GroupType::E6 => vec![2, 5, 6, 8, 9, 12],
        GroupType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
        GroupType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
    };
    d.sort_unstable();
    Ok(DegreeList(d))
}

/// Length generating function `prod_j (1 - q^{d_j}) / (1 - q)`.
pub fn poincare_polynomial(g: GroupType) -> Result<Polynomial> {
    let degs = degrees(g)?;
    let numerator = Polynomial::product(
        degs.as_slice()
            .iter()
            .map(|&d| Polynomial::one_minus_q_pow(d))
            .collect::<Vec<_>>()
            .iter(),
    );
    let denominator = Polynomial::product(
        std::iter::repeat_n(Polynomial::one_minus_q_pow(1), degs.len())
            .collect::<Vec<_>>()
            .iter(),
    );
    numerator.divide_exact(&denominator)
}

/// Poincaré polynomial of the symmetric group on `n` letters.
pub fn symmetric_poincare(n: usize) -> Polynomial {
    let factors: Vec<Polynomial> = (1..=n)
        .map(|i| {
            Polynomial::one_minus_q_pow(i)
                .divide_exact(&Polynomial::one_minus_q_pow(1))
                .expect("1 - q divides 1 - q^i")
        })
        .collect();
    Polynomial::product(factors.iter())
}

/// Net generating function `prod_j (1 - q^{d_j}) / prod_{i=1}^{n} (1 - q^i)`.
///
/// The coefficient of `q^j` counts the cosets of the `S_n` parabolic whose
/// minimal representative has length `j`, i.e. the number of cones (per `n!`)
/// that put the parameter in interval `j` of the net.
pub fn net_generating_function(g: GroupType) -> Result<Polynomial> {
    let degs = degrees(g)?;
    let n = g.rank();
    let numerator: Vec<Polynomial> = degs
        .as_slice()
        .iter()
        .map(|&d| Polynomial::one_minus_q_pow(d))
        .collect();
    let denominator: Vec<Polynomial> = (1..=n).map(Polynomial::one_minus_q_pow).collect();
    Polynomial::product(numerator.iter())
        .divide_exact(&Polynomial::product(denominator.iter()))
        .map_err(|e| match e {
            Error::NonExactDivision => Error::OracleViolation(format!(
                "net generating function of {g} is not a polynomial"
            )),
            other => other,
        })
}

/// `prod_{i=lo}^{hi} (1 + q^i)`.
pub fn distinct_parts_product(lo: usize, hi: usize) -> Polynomial {
    let factors: Vec<Polynomial> = (lo..=hi).map(Polynomial::one_plus_q_pow).collect();
    Polynomial::product(factors.iter())
}
