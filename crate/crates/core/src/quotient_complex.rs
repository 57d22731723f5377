//! The small cover over a polygon as an explicit cell complex.
//!
//! `M = Q x (Z/2)^2 / ~` where `(x, g) ~ (x, g')` iff `g - g'` lies in `G_F`
//! for the face `F` containing `x` in its relative interior. Over the open
//! polygon there are 4 cells, one per group element; over arc `k` there are
//! 2, one per coset of `<lambda(k)>`; over each vertex there is 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::char_functions::CharacteristicFunction;
use crate::cycle_colorings::{enumerate_colorings, CycleColoring};
use crate::error::{inconsistent, invalid, Error, Result};
use crate::orbit::UnionFind;
use crate::orbit_space::{build_polygon, FacePoset};

/// A cell: the face of `Q` it lies over, and the smallest element of its
/// coset in `(Z/2)^2`, as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub face: usize,
    pub label: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCell {
    pub cell: Cell,
    /// Indices of the start and end 0-cells.
    pub ends: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCell {
    pub cell: Cell,
    /// Closed edge path around the cell: 1-cell index and whether it is
    /// traversed from start to end.
    pub word: Vec<(usize, bool)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentificationComplex {
    pub vertices: Vec<Cell>,
    pub edges: Vec<EdgeCell>,
    pub faces: Vec<FaceCell>,
}

/// Euler characteristic and orientability of a closed surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub euler: i64,
    pub orientable: bool,
}

/// Color `c` stands for the nonzero vector with mask `c + 1`.
fn color_vector(c: u8) -> u32 {
    c as u32 + 1
}

/// Builds `M` over the `m`-gon for a boundary coloring by the three nonzero
/// vectors of `(Z/2)^2`.
pub fn build_small_cover(m: usize, lambda: &CycleColoring) -> Result<IdentificationComplex> {
    if m < 3 {
        return Err(invalid(format!(
            "a polygon needs at least 3 vertices, got {m}"
        )));
    }
    if lambda.s() != 3 {
        return Err(invalid(format!(
            "expected a 3-coloring, got {} colors",
            lambda.s()
        )));
    }
    if lambda.m() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: lambda.m(),
        });
    }
    let p = build_polygon(m)?;
    let vertex_face = |k: usize| -> usize {
        let mask = (1u64 << k) | (1u64 << ((k + m - 1) % m));
        p.faces_of_dim(0)
            .find(|f| f.facets == mask)
            .expect("polygon has a vertex between consecutive arcs")
            .id
    };
    let top = p.faces_of_dim(2).next().expect("polygon has a top face").id;

    let vertices: Vec<Cell> = (0..m)
        .map(|k| Cell {
            face: vertex_face(k),
            label: 0,
        })
        .collect();
    // arc k carries cells 2k and 2k + 1 for the two cosets of <v>, in order
    // of their smallest elements
    let coset_rep = |g: u32, v: u32| g.min(g ^ v);
    let mut edges = Vec::with_capacity(2 * m);
    for k in 0..m {
        let v = color_vector(lambda.colors()[k]);
        let mut reps: Vec<u32> = (0..4).map(|g| coset_rep(g, v)).collect();
        reps.sort_unstable();
        reps.dedup();
        for label in reps {
            edges.push(EdgeCell {
                cell: Cell {
                    face: p.facet_face(k).id,
                    label,
                },
                ends: [k, (k + 1) % m],
            });
        }
    }
    let faces = (0..4u32)
        .map(|g| {
            let word = (0..m)
                .map(|k| {
                    let v = color_vector(lambda.colors()[k]);
                    let rep = coset_rep(g, v);
                    let j = if rep == edges[2 * k].cell.label { 0 } else { 1 };
                    (2 * k + j, true)
                })
                .collect();
            FaceCell {
                cell: Cell {
                    face: top,
                    label: g,
                },
                word,
            }
        })
        .collect();
    Ok(IdentificationComplex {
        vertices,
        edges,
        faces,
    })
}

impl IdentificationComplex {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty() && self.faces.is_empty()
    }

    /// Cell counts by dimension.
    pub fn cell_counts(&self) -> [usize; 3] {
        [self.vertices.len(), self.edges.len(), self.faces.len()]
    }

    /// Both complexes side by side, `other`'s cells renumbered after ours.
    pub fn disjoint_union(&self, other: &IdentificationComplex) -> IdentificationComplex {
        let (nv, ne) = (self.vertices.len(), self.edges.len());
        let mut out = self.clone();
        out.vertices.extend_from_slice(&other.vertices);
        out.edges.extend(other.edges.iter().map(|e| EdgeCell {
            cell: e.cell,
            ends: [e.ends[0] + nv, e.ends[1] + nv],
        }));
        out.faces.extend(other.faces.iter().map(|f| FaceCell {
            cell: f.cell,
            word: f.word.iter().map(|&(e, fwd)| (e + ne, fwd)).collect(),
        }));
        out
    }

    /// How many times each 1-cell occurs in the boundary words.
    fn edge_uses(&self) -> Vec<Vec<(usize, bool)>> {
        let mut uses = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for &(e, fwd) in &face.word {
                uses[e].push((f, fwd));
            }
        }
        uses
    }

    /// Every 1-cell lies on exactly two sides of 2-cells.
    pub fn is_closed_surface(&self) -> bool {
        self.edge_uses().iter().all(|u| u.len() == 2)
    }

    /// Plain-text cell list, one cell per line: `dim id boundary-ids`. A
    /// 1-cell lists its two endpoints; a 2-cell its edge path, with `-`
    /// marking an edge traversed backwards.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.vertices.len() {
            writeln!(out, "0 {i}").unwrap();
        }
        for (i, e) in self.edges.iter().enumerate() {
            writeln!(out, "1 {i} {} {}", e.ends[0], e.ends[1]).unwrap();
        }
        for (i, f) in self.faces.iter().enumerate() {
            write!(out, "2 {i}").unwrap();
            for &(e, fwd) in &f.word {
                write!(out, " {}{e}", if fwd { "" } else { "-" }).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// `V - E + F`.
pub fn euler_of_complex(c: &IdentificationComplex) -> i64 {
    c.vertices.len() as i64 - c.edges.len() as i64 + c.faces.len() as i64
}

/// Components of the complex, joining each cell to the cells in its
/// boundary.
pub fn connected_components(c: &IdentificationComplex) -> usize {
    let (nv, ne) = (c.vertices.len(), c.edges.len());
    let mut uf = UnionFind::new(nv + ne + c.faces.len());
    for (i, e) in c.edges.iter().enumerate() {
        uf.union(nv + i, e.ends[0]);
        uf.union(nv + i, e.ends[1]);
    }
    for (i, f) in c.faces.iter().enumerate() {
        for &(e, _) in &f.word {
            uf.union(nv + ne + i, nv + e);
        }
    }
    uf.set_count()
}

/// Tries to orient all 2-cells so that every 1-cell is traversed once in
/// each direction. Requires a closed surface.
pub fn orientable_by_propagation(c: &IdentificationComplex) -> Result<bool> {
    let uses = c.edge_uses();
    if uses.iter().any(|u| u.len() != 2) {
        return Err(inconsistent(
            "not a closed surface: some 1-cell is not used twice",
        ));
    }
    // flip[f] = Some(true) if 2-cell f is reversed
    let mut flip: Vec<Option<bool>> = vec![None; c.faces.len()];
    let mut adjacent: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c.faces.len()];
    for u in &uses {
        let ((a, fa), (b, fb)) = (u[0], u[1]);
        // orientations flip[a], flip[b] are consistent iff the induced
        // directions differ: fa ^ flip[a] != fb ^ flip[b]
        let relation = fa == fb;
        if a == b {
            if relation {
                return Ok(false);
            }
            continue;
        }
        adjacent[a].push((b, relation));
        adjacent[b].push((a, relation));
    }
    for start in 0..c.faces.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            let fa = flip[a].expect("assigned before push");
            for &(b, differ) in &adjacent[a] {
                let want = fa ^ differ;
                match flip[b] {
                    None => {
                        flip[b] = Some(want);
                        stack.push(b);
                    }
                    Some(x) if x != want => return Ok(false),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(true)
}

/// `(chi, orientable)` of the complex built from `lambda`, with
/// orientability found both by propagation and by the two-color criterion.
/// A disagreement is a consistency error.
pub fn surface_type(c: &IdentificationComplex, lambda: &CycleColoring) -> Result<SurfaceType> {
    if c.vertices.len() != lambda.m() {
        return Err(Error::DimensionMismatch {
            expected: c.vertices.len(),
            found: lambda.m(),
        });
    }
    let propagated = orientable_by_propagation(c)?;
    let by_colors = lambda.distinct_colors() == 2;
    if propagated != by_colors {
        return Err(inconsistent(format!(
            "coloring {lambda} uses {} colors but propagation says orientable = {propagated}",
            lambda.distinct_colors()
        )));
    }
    Ok(SurfaceType {
        euler: euler_of_complex(c),
        orientable: propagated,
    })
}

/// For each face `F` of `p`, by face id, the number `2^n / |G_F|` of copies
/// of its interior in `M`.
pub fn orbit_census(p: &FacePoset, lambda: &CharacteristicFunction) -> Result<Vec<u64>> {
    if !lambda.is_valid(p) {
        return Err(invalid("not a characteristic function on this poset"));
    }
    let n = p.dim();
    Ok(p.faces()
        .iter()
        .map(|f| 1u64 << (n - lambda.span_rank(f.facets)))
        .collect())
}

/// Surface types over all of `Lambda(m)`, with multiplicities. Every
/// complex is also checked to be a connected closed surface.
pub fn homeomorphism_census(m: usize) -> Result<BTreeMap<SurfaceType, usize>> {
    let colorings = enumerate_colorings(m, 3)?;
    let types = colorings
        .par_iter()
        .map(|lambda| {
            let c = build_small_cover(m, lambda)?;
            if !c.is_closed_surface() || connected_components(&c) != 1 {
                return Err(inconsistent(format!(
                    "{lambda} gives no connected closed surface"
                )));
            }
            surface_type(&c, lambda)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut census = BTreeMap::new();
    for t in types {
        *census.entry(t).or_insert(0) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_functions::enumerate_char_functions;
    use crate::cycle_colorings::{act_color_symmetry, act_dihedral, color_group, dihedral_group};
    use crate::orbit_space::build_prism;

    fn cover(colors: &[u8]) -> (IdentificationComplex, CycleColoring) {
        let lambda = CycleColoring::three(colors.to_vec()).unwrap();
        (build_small_cover(colors.len(), &lambda).unwrap(), lambda)
    }

    #[test]
    fn projective_plane() {
        let (c, lambda) = cover(&[0, 1, 2]);
        assert_eq!(c.cell_counts(), [3, 6, 4]);
        assert_eq!(
            surface_type(&c, &lambda).unwrap(),
            SurfaceType {
                euler: 1,
                orientable: false
            }
        );
    }

    #[test]
    fn torus_and_klein_bottle() {
        let (c, lambda) = cover(&[0, 1, 0, 1]);
        assert_eq!(
            surface_type(&c, &lambda).unwrap(),
            SurfaceType {
                euler: 0,
                orientable: true
            }
        );
        let (c, lambda) = cover(&[0, 1, 0, 2]);
        assert_eq!(
            surface_type(&c, &lambda).unwrap(),
            SurfaceType {
                euler: 0,
                orientable: false
            }
        );
    }

    #[test]
    fn euler_is_four_minus_m() {
        for (colors, chi) in [
            (&[0u8, 1, 0, 1, 2][..], -1),
            (&[0, 1, 2], 1),
            (&[0, 1, 0, 1, 0, 1, 0, 2], -4),
        ] {
            let (c, _) = cover(colors);
            assert_eq!(euler_of_complex(&c), chi);
        }
    }

    #[test]
    fn census_by_parity() {
        for m in 3..=10 {
            let census = homeomorphism_census(m).unwrap();
            assert!(census.keys().all(|t| t.euler == 4 - m as i64));
            assert_eq!(census.len(), if m % 2 == 1 { 1 } else { 2 }, "m = {m}");
        }
    }

    #[test]
    fn every_complex_is_a_connected_closed_surface() {
        for m in 3..=10 {
            for lambda in enumerate_colorings(m, 3).unwrap() {
                let c = build_small_cover(m, &lambda).unwrap();
                assert_eq!(c.cell_counts(), [m, 2 * m, 4]);
                assert!(c.is_closed_surface());
                assert_eq!(connected_components(&c), 1);
                assert_eq!(euler_of_complex(&c), 4 - m as i64);
            }
        }
    }

    #[test]
    fn components() {
        let (a, _) = cover(&[0, 1, 2]);
        let (b, _) = cover(&[0, 1, 0, 1]);
        let both = a.disjoint_union(&b);
        assert_eq!(connected_components(&both), 2);
        assert_eq!(euler_of_complex(&both), 1);
        assert!(orientable_by_propagation(&both).is_ok());
        assert_eq!(connected_components(&IdentificationComplex::default()), 0);
        assert!(IdentificationComplex::default().is_empty());
    }

    #[test]
    fn type_is_an_equivariant_invariant() {
        for m in 3..=7 {
            let group = dihedral_group(m).unwrap();
            let relabel = color_group(3).unwrap();
            for lambda in enumerate_colorings(m, 3).unwrap() {
                let t = surface_type(&build_small_cover(m, &lambda).unwrap(), &lambda).unwrap();
                for g in &group {
                    for sigma in &relabel {
                        let moved =
                            act_color_symmetry(sigma, &act_dihedral(g, &lambda).unwrap()).unwrap();
                        let c = build_small_cover(m, &moved).unwrap();
                        assert_eq!(surface_type(&c, &moved).unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn census_of_copies() {
        let p = build_polygon(6).unwrap();
        let lambda = CharacteristicFunction::parse(&p, "0:1,1:2,2:1,3:2,4:1,5:3").unwrap();
        let census = orbit_census(&p, &lambda).unwrap();
        for f in p.faces() {
            assert_eq!(census[f.id], [1, 2, 4][f.dim]);
        }
        let prism = build_prism().unwrap();
        for lambda in enumerate_char_functions(&prism, 3).unwrap().iter().take(20) {
            let census = orbit_census(&prism, lambda).unwrap();
            for f in prism.faces() {
                assert_eq!(census[f.id], 1 << f.dim);
            }
        }
    }

    #[test]
    fn text_export() {
        let (c, _) = cover(&[0, 1, 2]);
        let text = c.to_text();
        assert_eq!(text.lines().count(), 13);
        assert!(text.starts_with("0 0\n"));
        assert!(text.contains("\n1 0 0 1\n"));
        assert!(text.lines().last().unwrap().starts_with("2 3 "));
    }

    #[test]
    fn bad_input() {
        let lambda = CycleColoring::three(vec![0, 1]).unwrap();
        assert!(build_small_cover(2, &lambda).is_err());
        let lambda = CycleColoring::three(vec![0, 1, 2]).unwrap();
        assert!(build_small_cover(4, &lambda).is_err());
        let four = CycleColoring::new(vec![0, 1, 3], 4).unwrap();
        assert!(build_small_cover(3, &four).is_err());
        let (c, _) = cover(&[0, 1, 2]);
        let other = CycleColoring::three(vec![0, 1, 0, 1]).unwrap();
        assert!(surface_type(&c, &other).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        // the 2-coloring's complex paired with a 3-coloring of the same size
        let (c, _) = cover(&[0, 1, 0, 1]);
        let three = CycleColoring::three(vec![0, 1, 0, 2]).unwrap();
        assert!(matches!(
            surface_type(&c, &three),
            Err(Error::Consistency(_))
        ));
    }
}
