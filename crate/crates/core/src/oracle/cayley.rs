//! Breadth-first enumeration of a reflection group on its Cayley graph.
//!
//! An element `w` is identified by `w(rho)`, where `rho` is the half sum of
//! positive roots. `rho` has trivial stabiliser, so the map is injective, and
//! the images stay in `rho + root lattice`, which lets them be stored as small
//! scaled integer vectors packed into a `u128`. Edges are left multiplications
//! by simple reflections, `w -> s w`, whose images are `s(w(rho))`.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::linalg::{self, QVec, Q};
use crate::oracle::element::GroupElement;
use crate::oracle::LengthHistogram;
use crate::roots::{build_root_system, RootSystem};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_GROUP_LIMIT: u64 = 5_000_000;

const LANE_BITS: usize = 8;
const MAX_LANES: usize = 128 / LANE_BITS;

fn pack(v: &[i64]) -> u128 {
    v.iter().enumerate().fold(0u128, |acc, (i, &x)| {
        acc | (((x as i8) as u8 as u128) << (i * LANE_BITS))
    })
}

fn unpack(key: u128, dim: usize, out: &mut [i64]) {
    for (i, o) in out.iter_mut().enumerate().take(dim) {
        *o = ((key >> (i * LANE_BITS)) as u8 as i8) as i64;
    }
}

/// Integer form of one simple reflection acting on scaled vectors `X`:
/// `X' = X - k A` with `k = (sum_i num_i X_i) / den`.
#[derive(Debug, Clone)]
struct IntReflection {
    scaled_root: Vec<i64>,
    num: Vec<i64>,
    den: i64,
}

impl IntReflection {
    fn new(root: &[Q], scale: i64) -> Self {
        let scaled_root: Vec<i64> = root.iter().map(|x| (x * scale).to_integer()).collect();
        // k = 2 (a . x) / (a . a) with x = X / scale.
        let norm = linalg::dot(root, root);
        let coefs: Vec<Q> = root
            .iter()
            .map(|a| Q::from_integer(2) * a / (norm * scale))
            .collect();
        let den = linalg::denominator_lcm(&coefs);
        let num = coefs.iter().map(|c| (c * den).to_integer()).collect();
        IntReflection {
            scaled_root,
            num,
            den,
        }
    }

    fn apply(&self, x: &mut [i64]) {
        let s: i64 = self.num.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        let (k, r) = s.div_rem(&self.den);
        debug_assert_eq!(r, 0, "reflection left the weight lattice");
        for (xi, a) in x.iter_mut().zip(&self.scaled_root) {
            *xi -= k * a;
        }
    }
}

/// The whole group, indexed in breadth-first order from the identity.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    root_system: RootSystem,
    scale: i64,
    rho: QVec,
    keys: Vec<u128>,
    index: HashMap<u128, u32>,
    lengths: Vec<u32>,
    /// `(parent, generator)`; the identity points at itself.
    parents: Vec<(u32, u8)>,
    /// `left[i * rank + s]` is the index of `s * w_i`.
    left: Vec<u32>,
}

impl CayleyGraph {
    pub fn build(g: GroupType, limit: u64) -> Result<Self> {
        let order = g.validated()?.order();
        if order > limit as u128 {
            return Err(Error::GroupTooLarge {
                group: g.to_string(),
                order,
                limit,
            });
        }
        let rs = build_root_system(g)?;
        Self::from_root_system(rs)
    }

    pub fn from_root_system(rs: RootSystem) -> Result<Self> {
        let dim = rs.ambient_dim;
        let rank = rs.rank();
        let rho = rs.weyl_vector();
        let scale = linalg::denominator_lcm(rho.iter().chain(rs.simple_roots.iter().flatten()));
        let start: Vec<i64> = rho.iter().map(|x| (x * scale).to_integer()).collect();
        let norm2: i64 = start.iter().map(|x| x * x).sum();
        if dim > MAX_LANES || norm2 > 127 * 127 {
            return Err(Error::InvalidArgument(format!(
                "{} is too large for packed element keys",
                rs.group
            )));
        }
        let gens: Vec<IntReflection> = rs
            .simple_roots
            .iter()
            .map(|r| IntReflection::new(r, scale))
            .collect();

        let capacity = usize::try_from(rs.group.order()).unwrap_or(0);
        let mut keys = Vec::with_capacity(capacity);
        let mut index = HashMap::with_capacity(capacity);
        let mut lengths = Vec::with_capacity(capacity);
        let mut parents = Vec::with_capacity(capacity);
        let mut left = Vec::with_capacity(capacity * rank);

        let k0 = pack(&start);
        keys.push(k0);
        index.insert(k0, 0u32);
        lengths.push(0u32);
        parents.push((0u32, u8::MAX));

        let mut queue = VecDeque::from([0u32]);
        let mut cur = vec![0i64; dim];
        let mut img = vec![0i64; dim];
        while let Some(i) = queue.pop_front() {
            unpack(keys[i as usize], dim, &mut cur);
            for (s, gen) in gens.iter().enumerate() {
                img.copy_from_slice(&cur);
                gen.apply(&mut img);
                let key = pack(&img);
                let next = *index.entry(key).or_insert_with(|| {
                    let id = keys.len() as u32;
                    keys.push(key);
                    lengths.push(lengths[i as usize] + 1);
                    parents.push((i, s as u8));
                    queue.push_back(id);
                    id
                });
                left.push(next);
            }
        }
        Ok(CayleyGraph {
            root_system: rs,
            scale,
            rho,
            keys,
            index,
            lengths,
            parents,
            left,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// Coxeter length: distance from the identity.
    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// Index of `s * w_i` for simple reflection `s`.
    pub fn left_neighbor(&self, i: usize, s: usize) -> usize {
        self.left[i * self.rank() + s] as usize
    }

    pub fn length_histogram(&self) -> LengthHistogram {
        LengthHistogram::from_values(self.lengths.iter().map(|&l| l as usize))
    }

    /// Exact matrix of element `i`, rebuilt along its BFS parent chain.
    pub fn element(&self, i: usize) -> GroupElement {
        let reflections = self.reflections();
        let mut word = Vec::new();
        let mut j = i;
        while j != 0 {
            let (p, s) = self.parents[j];
            word.push(s as usize);
            j = p as usize;
        }
        // w_i = s_k ... s_1 where s_1 was applied first from the identity.
        word.iter().rev().fold(
            GroupElement::identity(self.root_system.ambient_dim),
            |acc, &s| reflections[s].compose(&acc),
        )
    }

    /// Exact matrices of all elements, in index order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let reflections = self.reflections();
        let mut out: Vec<GroupElement> = Vec::with_capacity(self.order());
        out.push(GroupElement::identity(self.root_system.ambient_dim));
        for i in 1..self.order() {
            let (p, s) = self.parents[i];
            let m = reflections[s as usize].compose(&out[p as usize]);
            out.push(m);
        }
        out
    }

    fn reflections(&self) -> Vec<GroupElement> {
        self.root_system
            .simple_roots
            .iter()
            .map(|r| GroupElement::reflection(r))
            .collect()
    }

    /// Index of the element with matrix `m`, if it belongs to the group.
    pub fn index_of(&self, m: &GroupElement) -> Option<usize> {
        let image = m.apply(&self.rho);
        let mut scaled = Vec::with_capacity(image.len());
        for x in &image {
            let y = x * self.scale;
            if !y.is_integer() || y.to_integer().abs() > 127 {
                return None;
            }
            scaled.push(y.to_integer());
        }
        self.index.get(&pack(&scaled)).map(|&i| i as usize)
    }

    /// Partition into cosets `W_J w` of the parabolic subgroup, as connected
    /// components under left multiplication by the parabolic generators.
    pub fn parabolic_cosets(&self) -> Result<CosetPartition> {
        let parabolic = &self.root_system.parabolic_nodes;
        let unset = u32::MAX;
        let mut coset_of = vec![unset; self.order()];
        let mut minima: Vec<u32> = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.order() {
            if coset_of[start] != unset {
                continue;
            }
            let id = minima.len() as u32;
            coset_of[start] = id;
            stack.push(start);
            let (mut best, mut best_len, mut best_count) = (start, u32::MAX, 0usize);
            while let Some(i) = stack.pop() {
                let l = self.lengths[i];
                if l < best_len {
                    (best, best_len, best_count) = (i, l, 1);
                } else if l == best_len {
                    best_count += 1;
                }
                for &s in parabolic {
                    let j = self.left_neighbor(i, s);
                    if coset_of[j] == unset {
                        coset_of[j] = id;
                        stack.push(j);
                    }
                }
            }
            if best_count != 1 {
                return Err(Error::OracleViolation(format!(
                    "coset {id} has {best_count} elements of minimal length {best_len}"
                )));
            }
            minima.push(best as u32);
        }
        Ok(CosetPartition { coset_of, minima })
    }
}

/// Assignment of every element to its parabolic coset.
#[derive(Debug, Clone)]
pub struct CosetPartition {
    /// Coset id of each element index.
    pub coset_of: Vec<u32>,
    /// Element index of the unique minimal-length member of each coset.
    pub minima: Vec<u32>,
}

impl CosetPartition {
    pub fn coset_count(&self) -> usize {
        self.minima.len()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.minima[self.coset_of[i] as usize] as usize == i
    }

    pub fn min_length_histogram(&self, graph: &CayleyGraph) -> LengthHistogram {
        LengthHistogram::from_values(
            self.minima
                .iter()
                .map(|&m| graph.length(m as usize) as usize),
        )
    }
}

/// Coxeter length as the number of positive roots sent to negative roots,
/// independent of the BFS.
pub fn inversion_count(rs: &RootSystem, m: &GroupElement) -> usize {
    let rho = rs.weyl_vector();
    rs.positive_roots
        .iter()
        .filter(|a| {
            let image = m.apply(a);
            // A root is positive iff it pairs positively with rho.
            linalg::dot(&image, &rho) < Q::zero()
        })
        .count()
}

pub fn enumerate_elements(g: GroupType, limit: u64) -> Result<Vec<GroupElement>> {
    Ok(CayleyGraph::build(g, limit)?.elements())
}

pub fn length_histogram(g: GroupType) -> Result<LengthHistogram> {
    length_histogram_with_limit(g, DEFAULT_GROUP_LIMIT)
}

pub fn length_histogram_with_limit(g: GroupType, limit: u64) -> Result<LengthHistogram> {
    Ok(CayleyGraph::build(g, limit)?.length_histogram())
}

pub fn coset_min_length_histogram(g: GroupType) -> Result<LengthHistogram> {
    coset_min_length_histogram_with_limit(g, DEFAULT_GROUP_LIMIT)
}

pub fn coset_min_length_histogram_with_limit(g: GroupType, limit: u64) -> Result<LengthHistogram> {
    let graph = CayleyGraph::build(g, limit)?;
    let cosets = graph.parabolic_cosets()?;
    Ok(cosets.min_length_histogram(&graph))
}
