//! Concrete root systems, the `S_n`-type parabolic and its fixed ray direction.
//!
//! Types A, B and D use the usual coordinates (`A_n` in the hyperplane of
//! `R^{n+1}` with zero coordinate sum). E6 and E7 are realised inside the
//! E8 coordinates as the sub-systems spanned by the first six and seven
//! simple roots in Bourbaki numbering:
//!
//! ```text
//! a1 = (1/2)(e1 + e8) - (1/2)(e2 + ... + e7)
//! a2 = e1 + e2
//! a_k = e_{k-1} - e_{k-2}      (k = 3..8)
//! ```
//!
//! The parabolic chain is the `A_{n-1}` sub-diagram: the first `n-1` simple
//! roots for A/B/D, every node except `a2` for the E types.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::linalg::{self, dot, half, q, QVec, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub group: GroupType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<QVec>,
    pub positive_roots: Vec<QVec>,
    pub parabolic_nodes: Vec<usize>,
    pub ray_direction: QVec,
    /// Orthogonal basis of the complement of the root span in the ambient space.
    pub complement: Vec<QVec>,
}

/// Positive roots that are not orthogonal to the ray direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiveRoots {
    pub roots: Vec<QVec>,
    pub boundary_count: usize,
}

fn unit(dim: usize, i: usize) -> QVec {
    let mut v = vec![Q::zero(); dim];
    v[i] = q(1);
    v
}

fn e_diff(dim: usize, i: usize, j: usize) -> QVec {
    linalg::sub(&unit(dim, i), &unit(dim, j))
}

fn e_sum(dim: usize, i: usize, j: usize) -> QVec {
    linalg::add(&unit(dim, i), &unit(dim, j))
}

fn e8_simple_roots() -> Vec<QVec> {
    let mut roots = Vec::with_capacity(8);
    let mut a1 = vec![half(-1); 8];
    a1[0] = half(1);
    a1[7] = half(1);
    roots.push(a1);
    roots.push(e_sum(8, 0, 1));
    for k in 3..=8 {
        roots.push(e_diff(8, k - 2, k - 3));
    }
    roots
}

fn simple_roots(g: GroupType) -> Vec<QVec> {
    match g {
        GroupType::A(n) => (0..n).map(|i| e_diff(n + 1, i, i + 1)).collect(),
        GroupType::B(n) => {
            let mut r: Vec<QVec> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            r.push(unit(n, n - 1));
            r
        }
        GroupType::D(n) => {
            let mut r: Vec<QVec> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            r.push(e_sum(n, n - 2, n - 1));
            r
        }
        GroupType::E6 => e8_simple_roots().into_iter().take(6).collect(),
        GroupType::E7 => e8_simple_roots().into_iter().take(7).collect(),
        GroupType::E8 => e8_simple_roots(),
    }
}

fn parabolic_nodes(g: GroupType) -> Vec<usize> {
    match g {
        GroupType::A(n) | GroupType::B(n) | GroupType::D(n) => (0..n - 1).collect(),
        GroupType::E6 | GroupType::E7 | GroupType::E8 => {
            (0..g.rank()).filter(|&i| i != 1).collect()
        }
    }
}

/// Closure of the simple roots under simple reflections, keeping the roots
/// with nonnegative simple-root coordinates.
fn positive_roots(simple: &[QVec]) -> Vec<QVec> {
    let mut all: Vec<QVec> = simple.to_vec();
    let mut i = 0;
    while i < all.len() {
        let r = all[i].clone();
        for s in simple {
            let image = linalg::reflect(&r, s);
            if !all.contains(&image) {
                all.push(image);
            }
        }
        i += 1;
    }
    let mut pos: Vec<(Q, QVec)> = all
        .into_iter()
        .filter_map(|r| {
            let c = linalg::coordinates(simple, &r)?;
            linalg::is_nonnegative(&c).then(|| (c.iter().sum::<Q>(), r))
        })
        .collect();
    pos.sort();
    pos.into_iter().map(|(_, r)| r).collect()
}

/// Gram-Schmidt over the rationals.
fn orthogonalize(vectors: Vec<QVec>) -> Vec<QVec> {
    let mut out: Vec<QVec> = Vec::new();
    for v in vectors {
        let mut w = v;
        for b in &out {
            let c = dot(&w, b) / dot(b, b);
            w = linalg::sub(&w, &linalg::scale(b, c));
        }
        if !linalg::is_zero(&w) {
            out.push(w);
        }
    }
    out
}

/// The primitive vector in the root span orthogonal to every parabolic simple
/// root, oriented to pair positively with the simple root outside the chain.
pub fn parabolic_fixed_direction(simple: &[QVec], parabolic: &[usize]) -> Result<QVec> {
    let rank = simple.len();
    // v = sum_j c_j a_j with (a_i, v) = 0 for every parabolic node i.
    let equations: Vec<QVec> = parabolic
        .iter()
        .map(|&i| (0..rank).map(|j| dot(&simple[i], &simple[j])).collect())
        .collect();
    let kernel = linalg::null_space(&equations, rank);
    if kernel.len() != 1 {
        return Err(Error::DegenerateParabolic(kernel.len()));
    }
    let dim = simple[0].len();
    let mut v = vec![Q::zero(); dim];
    for (c, a) in kernel[0].iter().zip(simple) {
        v = linalg::add(&v, &linalg::scale(a, *c));
    }
    let mut v = linalg::primitive_integer(&v);
    let outside: Vec<usize> = (0..rank).filter(|i| !parabolic.contains(i)).collect();
    let pairing = outside
        .iter()
        .map(|&i| dot(&v, &simple[i]))
        .find(|x| !x.is_zero())
        .ok_or(Error::DegenerateParabolic(0))?;
    if pairing.is_negative() {
        v = linalg::neg(&v);
    }
    Ok(v)
}

pub fn build_root_system(g: GroupType) -> Result<RootSystem> {
    let g = g.validated()?;
    let simple = simple_roots(g);
    let positive = positive_roots(&simple);
    let parabolic = parabolic_nodes(g);
    let ray = parabolic_fixed_direction(&simple, &parabolic)?;
    let ambient_dim = g.ambient_dim();
    let complement = orthogonalize(linalg::null_space(&simple, ambient_dim));
    Ok(RootSystem {
        group: g,
        ambient_dim,
        simple_roots: simple,
        positive_roots: positive,
        parabolic_nodes: parabolic,
        ray_direction: ray,
        complement,
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn parabolic_fixed_direction(&self) -> Result<QVec> {
        parabolic_fixed_direction(&self.simple_roots, &self.parabolic_nodes)
    }

    pub fn live_roots(&self) -> LiveRoots {
        live_roots(self)
    }

    /// Positive roots orthogonal to the ray direction.
    pub fn dead_roots(&self) -> Vec<QVec> {
        self.positive_roots
            .iter()
            .filter(|a| dot(a, &self.ray_direction).is_zero())
            .cloned()
            .collect()
    }

    /// Whether samples must lie in the span of the roots (E6 and E7, whose
    /// roots do not span the 8-dimensional coordinate space).
    pub fn requires_span_sample(&self) -> bool {
        matches!(self.group, GroupType::E6 | GroupType::E7)
    }

    /// Largest normalised component of `y` outside the root span.
    pub fn off_span_component(&self, y: &[f64]) -> f64 {
        self.complement
            .iter()
            .map(|c| {
                let cf = linalg::to_f64(c);
                let norm = cf.iter().map(|x| x * x).sum::<f64>().sqrt();
                (cf.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() / norm).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Orthogonal projection of `y` onto the root span.
    pub fn project_to_span(&self, y: &[f64]) -> Vec<f64> {
        let mut out = y.to_vec();
        for c in &self.complement {
            let cf = linalg::to_f64(c);
            let coef = cf.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
                / cf.iter().map(|x| x * x).sum::<f64>();
            for (o, a) in out.iter_mut().zip(&cf) {
                *o -= coef * a;
            }
        }
        out
    }

    /// Vector `rho` with `2(rho, a)/(a, a) = 1` for every simple root `a`:
    /// half the sum of the positive roots.
    pub fn weyl_vector(&self) -> QVec {
        let sum = self
            .positive_roots
            .iter()
            .fold(vec![Q::zero(); self.ambient_dim], |acc, r| {
                linalg::add(&acc, r)
            });
        linalg::scale(&sum, half(1))
    }
}

pub fn live_roots(rs: &RootSystem) -> LiveRoots {
    let roots: Vec<QVec> = rs
        .positive_roots
        .iter()
        .filter(|a| !dot(a, &rs.ray_direction).is_zero())
        .cloned()
        .collect();
    LiveRoots {
        boundary_count: roots.len(),
        roots,
    }
}

/// Classical positive-root counts.
pub fn expected_positive_root_count(g: GroupType) -> usize {
    match g {
        GroupType::A(n) => n * (n + 1) / 2,
        GroupType::B(n) => n * n,
        GroupType::D(n) => n * (n - 1),
        GroupType::E6 => 36,
        GroupType::E7 => 63,
        GroupType::E8 => 120,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qvec;
    use crate::polynomial::net_generating_function;

    fn ones(dim: usize) -> QVec {
        qvec(&vec![1; dim])
    }

    fn all_small() -> Vec<GroupType> {
        let mut v = Vec::new();
        for n in 1..=6 {
            v.push(GroupType::A(n));
            v.push(GroupType::B(n));
        }
        for n in 2..=6 {
            v.push(GroupType::D(n));
        }
        v.extend([GroupType::E6, GroupType::E7, GroupType::E8]);
        v
    }

    #[test]
    fn b2_positive_roots() {
        let rs = build_root_system(GroupType::B(2)).unwrap();
        let mut got = rs.positive_roots.clone();
        got.sort();
        let mut want = vec![qvec(&[1, -1]), qvec(&[0, 1]), qvec(&[1, 0]), qvec(&[1, 1])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn positive_root_counts() {
        for g in all_small() {
            let rs = build_root_system(g).unwrap();
            assert_eq!(
                rs.positive_roots.len(),
                expected_positive_root_count(g),
                "{g}"
            );
        }
    }

    #[test]
    fn positive_roots_are_nonnegative_integer_combinations() {
        for g in all_small() {
            let rs = build_root_system(g).unwrap();
            for r in &rs.positive_roots {
                let c = linalg::coordinates(&rs.simple_roots, r).unwrap();
                assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{g}");
            }
        }
    }

    #[test]
    fn ray_directions() {
        for n in 1..=6 {
            let b = build_root_system(GroupType::B(n)).unwrap();
            assert_eq!(b.ray_direction, ones(n));
            let mut k = vec![1; n + 1];
            k[n] = -(n as i64);
            let a = build_root_system(GroupType::A(n)).unwrap();
            assert_eq!(a.ray_direction, qvec(&k));
        }
        for n in 2..=6 {
            assert_eq!(
                build_root_system(GroupType::D(n)).unwrap().ray_direction,
                ones(n)
            );
        }
        let e8 = build_root_system(GroupType::E8).unwrap();
        for &i in &e8.parabolic_nodes {
            assert!(dot(&e8.ray_direction, &e8.simple_roots[i]).is_zero());
        }
        assert!(dot(&e8.ray_direction, &e8.simple_roots[1]).is_positive());
    }

    #[test]
    fn e8_ray_is_not_all_ones() {
        let e8 = build_root_system(GroupType::E8).unwrap();
        assert_ne!(e8.ray_direction, ones(8));
        // With the all-ones direction only 57 positive roots would be live.
        let j = ones(8);
        let live_j = e8
            .positive_roots
            .iter()
            .filter(|a| !dot(a, &j).is_zero())
            .count();
        assert_eq!(live_j, 57);
    }

    #[test]
    fn live_root_examples() {
        let b3 = build_root_system(GroupType::B(3)).unwrap().live_roots();
        let mut got = b3.roots.clone();
        got.sort();
        let mut want = vec![
            qvec(&[1, 0, 0]),
            qvec(&[0, 1, 0]),
            qvec(&[0, 0, 1]),
            qvec(&[1, 1, 0]),
            qvec(&[1, 0, 1]),
            qvec(&[0, 1, 1]),
        ];
        want.sort();
        assert_eq!(got, want);

        let d4 = build_root_system(GroupType::D(4)).unwrap().live_roots();
        assert_eq!(d4.boundary_count, 6);
        assert!(d4
            .roots
            .iter()
            .all(|r| r.iter().filter(|x| **x == q(1)).count() == 2
                && r.iter().all(|x| !x.is_negative())));

        let e = |g| build_root_system(g).unwrap().live_roots().boundary_count;
        assert_eq!(e(GroupType::E8), 92);
        assert_eq!(e(GroupType::E7), 42);
        assert_eq!(e(GroupType::E6), 21);
    }

    #[test]
    fn live_count_equals_gf_degree() {
        for g in all_small() {
            let rs = build_root_system(g).unwrap();
            let gf = net_generating_function(g).unwrap();
            assert_eq!(Some(rs.live_roots().boundary_count), gf.degree(), "{g}");
            let n = g.rank();
            assert_eq!(rs.dead_roots().len(), n * (n - 1) / 2, "{g}");
        }
    }

    #[test]
    fn dead_roots_are_the_parabolic_roots() {
        for g in all_small() {
            let rs = build_root_system(g).unwrap();
            let chain: Vec<QVec> = rs
                .parabolic_nodes
                .iter()
                .map(|&i| rs.simple_roots[i].clone())
                .collect();
            for r in rs.dead_roots() {
                assert!(
                    linalg::coordinates(&chain, &r).is_some() || chain.is_empty(),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn reflection_closure() {
        for g in [
            GroupType::B(3),
            GroupType::D(4),
            GroupType::E6,
            GroupType::A(3),
        ] {
            let rs = build_root_system(g).unwrap();
            for a in &rs.positive_roots {
                for b in &rs.positive_roots {
                    let r = linalg::reflect(b, a);
                    assert!(
                        rs.positive_roots.contains(&r)
                            || rs.positive_roots.contains(&linalg::neg(&r)),
                        "{g}"
                    );
                }
            }
        }
    }

    #[test]
    fn weyl_vector_is_strictly_dominant() {
        for g in all_small() {
            let rs = build_root_system(g).unwrap();
            let rho = rs.weyl_vector();
            for s in &rs.simple_roots {
                assert_eq!(q(2) * dot(&rho, s) / dot(s, s), q(1), "{g}");
            }
        }
    }

    #[test]
    fn span_complement() {
        let e6 = build_root_system(GroupType::E6).unwrap();
        assert_eq!(e6.complement.len(), 2);
        let e7 = build_root_system(GroupType::E7).unwrap();
        assert_eq!(e7.complement.len(), 1);
        assert!(build_root_system(GroupType::B(4))
            .unwrap()
            .complement
            .is_empty());
        assert_eq!(
            build_root_system(GroupType::A(3)).unwrap().complement.len(),
            1
        );
        let y = [1.0, 2.0, -0.5, 3.0, 0.25, 1.0, -2.0, 4.0];
        let p = e6.project_to_span(&y);
        assert!(e6.off_span_component(&p) < 1e-12);
        assert!(e6.off_span_component(&y) > 1e-3);
    }
}
