//! Chambers crossed by the ray `y - theta * v`, located by brute force.

use crate::error::{Error, Result};
use crate::group::GroupType;
use crate::linalg;
use crate::net::{is_tie, NetBuilder, Sample};
use crate::oracle::cayley::{CayleyGraph, CosetPartition};
use crate::oracle::element::GroupElement;

/// The chambers met along one ray, in order of increasing `theta`.
#[derive(Debug, Clone)]
pub struct Gallery {
    /// Parabolic element labelling the first chamber. The ray of `start^{-1} y`
    /// begins in the fundamental chamber.
    pub start: GroupElement,
    /// Chamber labels relative to `start`; position 0 is the identity.
    pub elements: Vec<GroupElement>,
    /// Coxeter length of each element.
    pub lengths: Vec<u32>,
    /// Whether each element is the minimal member of its parabolic coset.
    pub coset_minimal: Vec<bool>,
    /// The `theta` at which each chamber was probed.
    pub probes: Vec<f64>,
}

impl Gallery {
    /// Position `j` carries an element of length `j` that is a coset minimum.
    pub fn is_consistent(&self) -> bool {
        self.lengths
            .iter()
            .enumerate()
            .all(|(j, &l)| l as usize == j)
            && self.coset_minimal.iter().all(|&m| m)
    }
}

/// Enumerated group plus the data needed to walk many rays.
pub struct GalleryOracle {
    builder: NetBuilder,
    graph: CayleyGraph,
    cosets: CosetPartition,
    matrices: Vec<GroupElement>,
    /// `walls[i]` holds `w_i a_s` for each simple root `a_s`, so that
    /// `z` lies in the chamber of `w_i` iff every entry pairs positively with `z`.
    walls: Vec<Vec<Vec<f64>>>,
}

impl GalleryOracle {
    pub fn new(g: GroupType, limit: u64) -> Result<Self> {
        let graph = CayleyGraph::build(g, limit)?;
        let cosets = graph.parabolic_cosets()?;
        let matrices = graph.elements();
        let simple = &graph.root_system().simple_roots;
        let walls = matrices
            .iter()
            .map(|m| simple.iter().map(|a| linalg::to_f64(&m.apply(a))).collect())
            .collect();
        Ok(GalleryOracle {
            builder: NetBuilder::new(g)?,
            graph,
            cosets,
            matrices,
            walls,
        })
    }

    pub fn graph(&self) -> &CayleyGraph {
        &self.graph
    }

    pub fn cosets(&self) -> &CosetPartition {
        &self.cosets
    }

    /// Index of the element whose open chamber contains `z`.
    fn chamber_of(&self, z: &[f64]) -> Result<usize> {
        let scale = z.iter().fold(1f64, |m, x| m.max(x.abs()));
        let eps = 1e-9 * scale;
        let mut found = None;
        for (i, walls) in self.walls.iter().enumerate() {
            let inside = walls
                .iter()
                .all(|w| w.iter().zip(z).map(|(a, b)| a * b).sum::<f64>() > eps);
            if inside {
                if found.is_some() {
                    return Err(Error::OracleViolation(format!(
                        "point {z:?} lies in two chambers"
                    )));
                }
                found = Some(i);
            }
        }
        found.ok_or_else(|| Error::NonGenericSample(format!("point {z:?} lies on a wall")))
    }

    pub fn walk(&self, y: &Sample) -> Result<Gallery> {
        let raw = self.builder.raw_boundaries(y)?;
        if let Some(w) = raw.windows(2).find(|w| is_tie(w[0], w[1])) {
            return Err(Error::NonGenericSample(format!(
                "boundaries {} and {} coincide",
                w[0], w[1]
            )));
        }
        let mut probes = Vec::with_capacity(raw.len() + 1);
        probes.push(raw.first().copied().unwrap_or(0.0) - 1.0);
        probes.extend(raw.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        probes.push(raw.last().copied().unwrap_or(0.0) + 1.0);

        let v = self.builder.ray_direction();
        let chambers: Vec<usize> = probes
            .iter()
            .map(|&theta| {
                let z: Vec<f64> = y
                    .values()
                    .iter()
                    .zip(&v)
                    .map(|(a, b)| a - theta * b)
                    .collect();
                self.chamber_of(&z)
            })
            .collect::<Result<_>>()?;

        let start_index = chambers[0];
        if self.cosets.coset_of[start_index] != self.cosets.coset_of[0] {
            return Err(Error::OracleViolation(
                "first chamber is not labelled by a parabolic element".into(),
            ));
        }
        let start = self.matrices[start_index].clone();
        let start_inv = start.inverse();
        let mut elements = Vec::with_capacity(chambers.len());
        let mut lengths = Vec::with_capacity(chambers.len());
        let mut coset_minimal = Vec::with_capacity(chambers.len());
        for &c in &chambers {
            let rel = start_inv.compose(&self.matrices[c]);
            let idx = self.graph.index_of(&rel).ok_or_else(|| {
                Error::OracleViolation("relative chamber label is not a group element".into())
            })?;
            lengths.push(self.graph.length(idx));
            coset_minimal.push(self.cosets.is_minimal(idx));
            elements.push(rel);
        }
        Ok(Gallery {
            start,
            elements,
            lengths,
            coset_minimal,
            probes,
        })
    }
}

pub fn gallery_walk(g: GroupType, y: &Sample) -> Result<Gallery> {
    GalleryOracle::new(g, crate::oracle::DEFAULT_GROUP_LIMIT)?.walk(y)
}
