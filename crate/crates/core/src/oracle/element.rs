use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{self, QVec, Q};

/// An orthogonal transformation with exact rational entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    dim: usize,
    entries: Vec<Q>,
}

impl GroupElement {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Q::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Q::one();
        }
        GroupElement { dim, entries }
    }

    /// Reflection in the hyperplane orthogonal to `root`.
    pub fn reflection(root: &[Q]) -> Self {
        let dim = root.len();
        let nn = linalg::dot(root, root);
        let mut m = Self::identity(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.entries[i * dim + j] -= Q::from_integer(2) * root[i] * root[j] / nn;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Q]> {
        self.entries.chunks(self.dim)
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let d = self.dim;
        let mut entries = vec![Q::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * other.entries[k * d + j];
                }
            }
        }
        GroupElement { dim: d, entries }
    }

    pub fn transpose(&self) -> GroupElement {
        let d = self.dim;
        let mut entries = vec![Q::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.entries[i * d + j];
            }
        }
        GroupElement { dim: d, entries }
    }

    /// Inverse, which is the transpose for an orthogonal matrix.
    pub fn inverse(&self) -> GroupElement {
        self.transpose()
    }

    pub fn apply(&self, x: &[Q]) -> QVec {
        self.rows().map(|r| linalg::dot(r, x)).collect()
    }

    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        self.rows()
            .map(|r| r.iter().zip(x).map(|(a, b)| linalg::q_to_f64(a) * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().compose(self).is_identity()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{half, qvec};

    #[test]
    fn reflections_are_orthogonal_involutions() {
        let r = vec![
            half(1),
            half(-1),
            half(-1),
            half(-1),
            half(-1),
            half(-1),
            half(-1),
            half(1),
        ];
        let s = GroupElement::reflection(&r);
        assert!(s.is_orthogonal());
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.apply(&r), linalg::neg(&r));
    }

    #[test]
    fn compose_order() {
        let s1 = GroupElement::reflection(&qvec(&[1, -1]));
        let s2 = GroupElement::reflection(&qvec(&[0, 1]));
        let x = qvec(&[3, 5]);
        assert_eq!(s1.compose(&s2).apply(&x), s1.apply(&s2.apply(&x)));
        assert_eq!(s1.compose(&s2).inverse(), s2.compose(&s1));
    }
}
