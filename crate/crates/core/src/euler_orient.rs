//! Euler characteristics of locally standard 2-torus manifolds computed from
//! the orbit space, and the orientability criterion in dimension two.
//!
//! Over the interior of a face `F` the manifold is `2^dim F` copies of
//! `F \ dF`, so `chi(M) = sum_F 2^dim F (chi(F) - chi(dF))`. The Euler data
//! of the faces is supplied, not computed.

use crate::cycle_colorings::CycleColoring;
use crate::error::{invalid, Error, Result};
use crate::orbit_space::{FacePoset, SurfaceWithBoundary};

/// `(chi(F), chi(dF))` for each face, indexed by face id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceEulerData {
    entries: Vec<Option<(i64, i64)>>,
}

impl FaceEulerData {
    /// No face annotated yet.
    pub fn empty(p: &FacePoset) -> Self {
        FaceEulerData {
            entries: vec![None; p.faces().len()],
        }
    }

    pub fn set(&mut self, face: usize, chi: i64, chi_boundary: i64) {
        self.entries[face] = Some((chi, chi_boundary));
    }

    pub fn get(&self, face: usize) -> Option<(i64, i64)> {
        self.entries.get(face).copied().flatten()
    }

    /// Every face is a closed ball: `chi(F) = 1` and `dF` is a sphere of
    /// dimension `dim F - 1` (empty for vertices). Right for simple polytopes.
    pub fn polytope(p: &FacePoset) -> Self {
        let entries = p
            .faces()
            .iter()
            .map(|f| {
                let sphere = if f.dim == 0 {
                    0
                } else if f.dim % 2 == 1 {
                    2
                } else {
                    0
                };
                Some((1, sphere))
            })
            .collect();
        FaceEulerData { entries }
    }

    /// Surface bookkeeping: vertices `(1, 0)`, arcs with endpoints `(1, 2)`,
    /// boundary circles without vertices `(0, 0)`, and the surface itself
    /// `(chi_q, 0)` since its boundary is a union of circles.
    pub fn surface(p: &FacePoset, chi_q: i64) -> Result<Self> {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.dim(),
            });
        }
        let entries = p
            .faces()
            .iter()
            .map(|f| match f.dim {
                0 => Some((1, 0)),
                1 => {
                    let has_vertex = p.faces_of_dim(0).any(|v| p.is_subface(v.id, f.id));
                    Some(if has_vertex { (1, 2) } else { (0, 0) })
                }
                _ => Some((chi_q, 0)),
            })
            .collect();
        Ok(FaceEulerData { entries })
    }

    /// Annotations for [`FacePoset::disjoint_union`] of the two posets.
    pub fn concat(&self, other: &FaceEulerData) -> FaceEulerData {
        FaceEulerData {
            entries: self.entries.iter().chain(&other.entries).copied().collect(),
        }
    }
}

/// `sum_F 2^dim F (chi(F) - chi(dF))` over all faces.
pub fn euler_total(p: &FacePoset, data: &FaceEulerData) -> Result<i64> {
    p.faces().iter().try_fold(0i64, |acc, f| {
        let (chi, chi_boundary) = data.get(f.id).ok_or(Error::MissingAnnotation(f.id))?;
        Ok(acc + (1i64 << f.dim) * (chi - chi_boundary))
    })
}

/// `chi(M) = 4 chi(Q) - m` for a surface `Q` with `m` vertices.
pub fn euler_2d(q: &SurfaceWithBoundary) -> i64 {
    euler_2d_from(q.euler(), q.m())
}

/// The same formula from the bare numbers, for surfaces with any number of
/// boundary circles.
pub fn euler_2d_from(chi_q: i64, m: usize) -> i64 {
    4 * chi_q - m as i64
}

/// `M` is orientable iff `Q` is and the boundary coloring uses exactly two
/// of the three colors. The coloring must have three colors and one arc
/// per boundary vertex of `q`.
pub fn is_orientable(q: &SurfaceWithBoundary, lambda: &CycleColoring) -> Result<bool> {
    if lambda.s() != 3 {
        return Err(invalid(format!(
            "boundary colorings use the 3 nonzero vectors of (Z/2)^2, got {} colors",
            lambda.s()
        )));
    }
    if lambda.m() != q.m() {
        return Err(Error::DimensionMismatch {
            expected: q.m(),
            found: lambda.m(),
        });
    }
    Ok(q.orientable() && lambda.distinct_colors() == 2)
}
