//! Small exact rational vector and matrix helpers.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used for root coordinates.
pub type Q = Ratio<i64>;

/// Exact rational vector.
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half(n: i64) -> Q {
    Q::new(n, 2)
}

pub fn qvec(entries: &[i64]) -> QVec {
    entries.iter().map(|&e| q(e)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn scale(a: &[Q], c: Q) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

/// Reflection of `x` in the hyperplane orthogonal to `root`.
pub fn reflect(x: &[Q], root: &[Q]) -> QVec {
    let c = q(2) * dot(x, root) / dot(root, root);
    sub(x, &scale(root, c))
}

pub fn to_f64(a: &[Q]) -> Vec<f64> {
    a.iter().map(q_to_f64).collect()
}

pub fn q_to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Common denominator of all entries.
pub fn denominator_lcm<'a>(entries: impl IntoIterator<Item = &'a Q>) -> i64 {
    entries.into_iter().fold(1i64, |acc, x| acc.lcm(x.denom()))
}

/// Rescales a nonzero vector to the primitive integer vector on the same ray.
pub fn primitive_integer(a: &[Q]) -> QVec {
    let den = denominator_lcm(a);
    let ints: Vec<i64> = a.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    if g == 0 {
        return a.to_vec();
    }
    ints.iter().map(|x| q(x / g)).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [QVec]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= f * *p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space of `m` (rows are equations).
pub fn null_space(m: &[QVec], cols: usize) -> Vec<QVec> {
    let mut a: Vec<QVec> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f];
            }
            v
        })
        .collect()
}

/// Coordinates of `target` in the (linearly independent) `basis`, if it lies in its span.
pub fn coordinates(basis: &[QVec], target: &[Q]) -> Option<Vec<Q>> {
    let k = basis.len();
    // Normal equations G c = B^T target; exact since the basis is independent.
    let mut aug: Vec<QVec> = (0..k)
        .map(|i| {
            let mut row: QVec = (0..k).map(|j| dot(&basis[i], &basis[j])).collect();
            row.push(dot(&basis[i], target));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != k || pivots.contains(&k) {
        return None;
    }
    let c: Vec<Q> = aug.iter().map(|row| row[k]).collect();
    let mut recon = vec![Q::zero(); target.len()];
    for (ci, b) in c.iter().zip(basis) {
        recon = add(&recon, &scale(b, *ci));
    }
    (recon.as_slice() == target).then_some(c)
}

pub fn is_nonnegative(c: &[Q]) -> bool {
    c.iter().all(|x| !x.is_negative())
}
