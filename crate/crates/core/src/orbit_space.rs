//! Face posets of nice manifolds with corners.
//!
//! A face is recorded by its dimension and the set of facets containing it,
//! as a bit mask over facet indices. Facet `j` is the unique face of
//! codimension one whose mask is `1 << j`. Containment is read off the masks:
//! `F <= G` when `dim F <= dim G` and every facet containing `G` also
//! contains `F`.
//!
//! Text format (one face per line, `#` starts a comment):
//!
//! ```text
//! n 2          # ambient dimension
//! 0 1 0b001    # id dim facet-mask
//! 1 1 0b010
//! 2 1 0b100
//! 3 0 0b011
//! 4 0 0b110
//! 5 0 0b101
//! 6 2 0
//! ```
//!
//! Ids must be `0..N` in any order. Masks are decimal or carry a `0b` / `0x`
//! prefix. A file is rejected unless the poset is nice.

use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};

/// Largest number of facets a mask can address.
pub const MAX_FACETS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub id: usize,
    pub dim: usize,
    pub facets: u64,
}

impl Face {
    pub fn facet_count(&self) -> usize {
        self.facets.count_ones() as usize
    }

    /// Facet indices containing this face, ascending.
    pub fn facet_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_FACETS).filter(move |&j| (self.facets >> j) & 1 == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoset {
    dim: usize,
    faces: Vec<Face>,
    // facet index -> face id
    facets: Vec<usize>,
}

impl FacePoset {
    /// Builds a poset from `(dim, facet-mask)` records; face `i` gets id `i`.
    ///
    /// Checks structure only: every face of dimension `dim - 1` with a
    /// single-bit mask is a facet, the facet indices in use are exactly
    /// `0..k` with one facet each, and at least one face of dimension `dim`
    /// has the empty mask. Niceness is a separate check, see [`check_nice`].
    pub fn new(dim: usize, records: &[(usize, u64)]) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("face posets need dimension >= 1"));
        }
        let faces: Vec<Face> = records
            .iter()
            .enumerate()
            .map(|(id, &(d, facets))| Face { id, dim: d, facets })
            .collect();
        if let Some(f) = faces.iter().find(|f| f.dim > dim) {
            return Err(invalid(format!(
                "face {} has dimension {} > {dim}",
                f.id, f.dim
            )));
        }
        if !faces.iter().any(|f| f.dim == dim && f.facets == 0) {
            return Err(invalid("no top face (dimension n, empty facet set)"));
        }
        if let Some(f) = faces.iter().find(|f| f.dim == dim && f.facets != 0) {
            return Err(invalid(format!(
                "top-dimensional face {} lies in facets",
                f.id
            )));
        }
        let used = faces.iter().fold(0u64, |acc, f| acc | f.facets);
        let k = 64 - used.leading_zeros() as usize;
        let mut facets = vec![None; k];
        for f in faces
            .iter()
            .filter(|f| f.dim + 1 == dim && f.facet_count() == 1)
        {
            let j = f.facets.trailing_zeros() as usize;
            if facets[j].replace(f.id).is_some() {
                return Err(invalid(format!("facet index {j} is claimed by two faces")));
            }
        }
        let facets = facets
            .into_iter()
            .enumerate()
            .map(|(j, id)| id.ok_or_else(|| invalid(format!("no facet carries index {j}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FacePoset { dim, faces, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Face id of facet `j`.
    pub fn facet_face(&self, j: usize) -> &Face {
        &self.faces[self.facets[j]]
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    pub fn has_vertex(&self) -> bool {
        self.faces.iter().any(|f| f.dim == 0)
    }

    /// `lower <= upper` in the face order.
    pub fn is_subface(&self, lower: usize, upper: usize) -> bool {
        let (a, b) = (&self.faces[lower], &self.faces[upper]);
        lower == upper || (a.dim < b.dim && b.facets & !a.facets == 0)
    }

    /// Number of faces per dimension, index = dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.dim + 1];
        for f in &self.faces {
            out[f.dim] += 1;
        }
        out
    }

    /// Disjoint union; facets of `other` are renumbered after those of `self`.
    pub fn disjoint_union(&self, other: &FacePoset) -> Result<FacePoset> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let shift = self.facet_count();
        if shift + other.facet_count() > MAX_FACETS {
            return Err(Error::Capacity(format!("more than {MAX_FACETS} facets")));
        }
        let records: Vec<(usize, u64)> = self
            .faces
            .iter()
            .map(|f| (f.dim, f.facets))
            .chain(other.faces.iter().map(|f| (f.dim, f.facets << shift)))
            .collect();
        FacePoset::new(self.dim, &records)
    }

    /// Serializes in the text format described at module level.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.dim);
        for f in &self.faces {
            let _ = writeln!(out, "{} {} {:#b}", f.id, f.dim, f.facets);
        }
        out
    }
}

/// True iff every face of codimension `k` lies in exactly `k` facets.
pub fn check_nice(p: &FacePoset) -> bool {
    p.faces.iter().all(|f| f.facet_count() == p.dim - f.dim)
}

/// Faces listed with facets first (by index), then by decreasing dimension,
/// top face last.
fn ordered(dim: usize, mut records: Vec<(usize, u64)>) -> Result<FacePoset> {
    records.sort_by_key(|&(d, mask)| {
        let facet_rank = if d + 1 == dim {
            0
        } else if d == dim {
            2
        } else {
            1
        };
        (facet_rank, std::cmp::Reverse(d), mask)
    });
    FacePoset::new(dim, &records)
}

fn cycle_records(m: usize) -> Vec<(usize, u64)> {
    let mut records: Vec<(usize, u64)> = (0..m).map(|j| (1, 1u64 << j)).collect();
    // vertex k joins arc k-1 to arc k
    records.extend((0..m).map(|k| (0, (1u64 << k) | (1u64 << ((k + m - 1) % m)))));
    records.push((2, 0));
    records
}

/// A disk whose boundary circle carries `m >= 2` vertices. For `m >= 3` this
/// is the `m`-gon. Arc `k` joins vertex `k` to vertex `k + 1`.
pub fn build_boundary_disk(m: usize) -> Result<FacePoset> {
    if !(2..=MAX_FACETS).contains(&m) {
        return Err(invalid(format!(
            "boundary vertex count {m} outside 2..={MAX_FACETS}"
        )));
    }
    FacePoset::new(2, &cycle_records(m))
}

pub fn build_polygon(m: usize) -> Result<FacePoset> {
    if m < 3 {
        return Err(invalid(format!(
            "a polygon needs at least 3 vertices, got {m}"
        )));
    }
    build_boundary_disk(m)
}

/// The face lattice of the `n`-simplex. Facet `j` is opposite vertex `j`.
pub fn build_simplex(n: usize) -> Result<FacePoset> {
    if !(1..=6).contains(&n) {
        return Err(invalid(format!("simplex dimension {n} outside 1..=6")));
    }
    let all = (1u64 << (n + 1)) - 1;
    // a face is spanned by a nonempty vertex subset and lies in the facets
    // opposite the missing vertices
    let records = (1..=all)
        .map(|span| (span.count_ones() as usize - 1, all & !span))
        .collect();
    ordered(n, records)
}

/// The triangular prism. Facets 0, 1, 3 are the squares, 2 and 4 the
/// triangles; facets 0, 1, 2 meet at a vertex.
pub fn build_prism() -> Result<FacePoset> {
    let squares = [0usize, 1, 3];
    let triangles = [2usize, 4];
    let bit = |j: usize| 1u64 << j;
    let mut records: Vec<(usize, u64)> = (0..5).map(|j| (2, bit(j))).collect();
    for (i, &a) in squares.iter().enumerate() {
        for &b in &squares[i + 1..] {
            records.push((1, bit(a) | bit(b)));
        }
    }
    for &a in &squares {
        for &t in &triangles {
            records.push((1, bit(a) | bit(t)));
        }
    }
    for &t in &triangles {
        for (i, &a) in squares.iter().enumerate() {
            for &b in &squares[i + 1..] {
                records.push((0, bit(a) | bit(b) | bit(t)));
            }
        }
    }
    records.push((3, 0));
    ordered(3, records)
}

/// A surface whose boundary circles carry no vertices: each circle is a
/// facet and there are no other proper faces.
pub fn build_vertex_free_surface(boundary_circles: usize) -> Result<FacePoset> {
    if boundary_circles > MAX_FACETS {
        return Err(Error::Capacity(format!(
            "more than {MAX_FACETS} boundary circles"
        )));
    }
    let mut records: Vec<(usize, u64)> = (0..boundary_circles).map(|j| (1, 1u64 << j)).collect();
    records.push((2, 0));
    FacePoset::new(2, &records)
}

/// The facets of a two-dimensional poset with a single boundary circle, in
/// cyclic order. Starts at facet 0 and steps first toward the smaller
/// neighboring facet index, so a polygon yields `0, 1, ..., m-1`.
pub fn boundary_cycle(p: &FacePoset) -> Result<Vec<usize>> {
    if p.dim != 2 {
        return Err(Error::UnsupportedShape(format!(
            "boundary cycles need a 2-dimensional poset, got dimension {}",
            p.dim
        )));
    }
    let k = p.facet_count();
    if k == 0 {
        return Err(Error::UnsupportedShape("no boundary".into()));
    }
    let vertices: Vec<&Face> = p.faces_of_dim(0).collect();
    if let Some(v) = vertices.iter().find(|v| v.facet_count() != 2) {
        return Err(Error::UnsupportedShape(format!(
            "vertex {} lies in {} facets",
            v.id,
            v.facet_count()
        )));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (vi, v) in vertices.iter().enumerate() {
        for j in v.facet_indices() {
            incident[j].push(vi);
        }
    }
    for (j, vs) in incident.iter().enumerate() {
        match vs.len() {
            2 => {}
            0 => {
                return Err(Error::UnsupportedShape(format!(
                    "facet {j} is a boundary circle without vertices"
                )))
            }
            n => {
                return Err(Error::UnsupportedShape(format!(
                    "facet {j} has {n} vertices, expected 2"
                )))
            }
        }
    }
    // the other arc at vertex `vi`
    let across =
        |vi: usize, j: usize| (vertices[vi].facets & !(1u64 << j)).trailing_zeros() as usize;
    let (a, b) = (incident[0][0], incident[0][1]);
    let mut via = if across(a, 0) <= across(b, 0) { a } else { b };
    let mut cycle = vec![0usize];
    let mut current = 0usize;
    loop {
        let next = across(via, current);
        if next == 0 {
            break;
        }
        if cycle.len() >= k {
            return Err(Error::UnsupportedShape(
                "boundary walk does not close".into(),
            ));
        }
        cycle.push(next);
        let [x, y] = [incident[next][0], incident[next][1]];
        via = if x == via { y } else { x };
        current = next;
    }
    if cycle.len() != k {
        return Err(Error::UnsupportedShape(format!(
            "boundary has several components ({} of {k} facets on the first)",
            cycle.len()
        )));
    }
    Ok(cycle)
}

/// A compact surface with one boundary circle carrying `m` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceWithBoundary {
    orientable: bool,
    genus: usize,
    m: usize,
}

impl SurfaceWithBoundary {
    /// `genus` is the orientable genus (handles) or the non-orientable genus
    /// (cross-caps), depending on `orientable`.
    pub fn new(orientable: bool, genus: usize, m: usize) -> Result<Self> {
        if m == 1 {
            return Err(invalid("a boundary circle with a vertex has at least two"));
        }
        if m > MAX_FACETS {
            return Err(Error::Capacity(format!(
                "more than {MAX_FACETS} boundary vertices"
            )));
        }
        if !orientable && genus == 0 {
            return Err(invalid("a non-orientable surface has genus >= 1"));
        }
        Ok(SurfaceWithBoundary {
            orientable,
            genus,
            m,
        })
    }

    pub fn disk(m: usize) -> Result<Self> {
        Self::new(true, 0, m)
    }

    pub fn projective_plane_minus_disk(m: usize) -> Result<Self> {
        Self::new(false, 1, m)
    }

    pub fn torus_minus_disk(m: usize) -> Result<Self> {
        Self::new(true, 1, m)
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn boundary_components(&self) -> usize {
        1
    }

    pub fn euler(&self) -> i64 {
        let g = self.genus as i64;
        if self.orientable {
            1 - 2 * g
        } else {
            1 - g
        }
    }

    /// Boundary combinatorics as a face poset; the interior topology is not
    /// encoded and enters only through [`euler`](Self::euler).
    pub fn face_poset(&self) -> Result<FacePoset> {
        if self.m == 0 {
            build_vertex_free_surface(1)
        } else {
            build_boundary_disk(self.m)
        }
    }
}

fn parse_mask(token: &str) -> Option<u64> {
    if let Some(b) = token.strip_prefix("0b") {
        u64::from_str_radix(b, 2).ok()
    } else if let Some(h) = token.strip_prefix("0x") {
        u64::from_str_radix(h, 16).ok()
    } else {
        token.parse().ok()
    }
}

/// Parses the text format; the result is guaranteed nice.
pub fn parse_poset(text: &str) -> Result<FacePoset> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut dim = None;
    let mut rows: Vec<(usize, usize, u64, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if dim.is_some() {
                return Err(err(line_no, "duplicate header".into()));
            }
            let [_, d] = tokens[..] else {
                return Err(err(line_no, "header must be `n <dim>`".into()));
            };
            dim = Some(
                d.parse()
                    .map_err(|_| err(line_no, format!("bad dimension {d:?}")))?,
            );
            continue;
        }
        if dim.is_none() {
            return Err(err(
                line_no,
                "face record before the `n <dim>` header".into(),
            ));
        }
        let [id, d, mask] = tokens[..] else {
            return Err(err(line_no, "expected `id dim facet-mask`".into()));
        };
        let id = id
            .parse()
            .map_err(|_| err(line_no, format!("bad id {id:?}")))?;
        let d = d
            .parse()
            .map_err(|_| err(line_no, format!("bad dimension {d:?}")))?;
        let mask = parse_mask(mask).ok_or_else(|| err(line_no, format!("bad mask {mask:?}")))?;
        rows.push((id, d, mask, line_no));
    }
    let dim = dim.ok_or_else(|| err(0, "missing `n <dim>` header".into()))?;
    let mut records = vec![None; rows.len()];
    for &(id, d, mask, line_no) in &rows {
        if id >= rows.len() {
            return Err(err(line_no, format!("id {id} outside 0..{}", rows.len())));
        }
        if records[id].replace((d, mask)).is_some() {
            return Err(err(line_no, format!("duplicate id {id}")));
        }
    }
    let records: Vec<(usize, u64)> = records
        .into_iter()
        .map(|r| r.expect("ids are dense"))
        .collect();
    let poset = FacePoset::new(dim, &records)?;
    if !check_nice(&poset) {
        return Err(invalid(
            "poset is not nice: some face of codimension k is not in exactly k facets",
        ));
    }
    Ok(poset)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_shape() {
        for m in 3..=12 {
            let p = build_polygon(m).unwrap();
            assert_eq!(p.f_vector(), vec![m, m, 1]);
            assert!(check_nice(&p));
            assert!(p.faces_of_dim(0).all(|v| v.facet_count() == 2));
            let v = p.f_vector();
            assert_eq!(v[0] as i64 - v[1] as i64 + v[2] as i64, 1, "disk");
        }
        assert!(build_polygon(2).is_err());
    }

    #[test]
    fn simplex_shape() {
        let tri = build_simplex(2).unwrap();
        let poly = build_polygon(3).unwrap();
        assert_eq!(tri.f_vector(), poly.f_vector());
        assert!(check_nice(&tri));
        let tet = build_simplex(3).unwrap();
        assert_eq!(tet.facet_count(), 4);
        assert_eq!(tet.f_vector(), vec![4, 6, 4, 1]);
        assert!(tet.faces_of_dim(0).all(|v| v.facet_count() == 3));
        for n in 1..=6 {
            let s = build_simplex(n).unwrap();
            assert_eq!(s.facet_count(), n + 1);
            assert_eq!(s.faces().len(), (1 << (n + 1)) - 1);
            assert!(check_nice(&s));
        }
        assert!(build_simplex(0).is_err());
        assert!(build_simplex(7).is_err());
    }

    #[test]
    fn prism_shape() {
        let p = build_prism().unwrap();
        assert_eq!(p.f_vector(), vec![6, 9, 5, 1]);
        assert_eq!(p.facet_count(), 5);
        assert!(check_nice(&p));
        assert!(p.faces_of_dim(0).any(|v| v.facets == 0b00111));
        // the triangles never meet
        assert!(!p.faces().iter().any(|f| f.facets & 0b10100 == 0b10100));
    }

    #[test]
    fn non_nice_poset_detected() {
        // a 2-dimensional poset with a vertex in three facets
        let records = [(1, 0b001), (1, 0b010), (1, 0b100), (0, 0b111), (2, 0)];
        let p = FacePoset::new(2, &records).unwrap();
        assert!(!check_nice(&p));
        assert!(check_nice(&build_polygon(5).unwrap()));
    }

    #[test]
    fn structural_errors() {
        assert!(FacePoset::new(2, &[(1, 1)]).is_err(), "no top face");
        assert!(
            FacePoset::new(2, &[(1, 1), (1, 1), (2, 0)]).is_err(),
            "duplicate facet"
        );
        assert!(
            FacePoset::new(2, &[(1, 0b10), (2, 0)]).is_err(),
            "facet index gap"
        );
        assert!(
            FacePoset::new(2, &[(3, 0), (2, 0)]).is_err(),
            "dimension too big"
        );
    }

    #[test]
    fn boundary_cycles() {
        for m in 3..=9 {
            let p = build_polygon(m).unwrap();
            assert_eq!(boundary_cycle(&p).unwrap(), (0..m).collect::<Vec<_>>());
        }
        assert_eq!(
            boundary_cycle(&build_boundary_disk(2).unwrap()).unwrap(),
            vec![0, 1]
        );
        let q = SurfaceWithBoundary::torus_minus_disk(7).unwrap();
        let cycle = boundary_cycle(&q.face_poset().unwrap()).unwrap();
        assert_eq!(cycle.len(), 7);
    }

    #[test]
    fn consecutive_cycle_facets_share_one_vertex() {
        for m in 2..=9 {
            let p = build_boundary_disk(m).unwrap();
            let cycle = boundary_cycle(&p).unwrap();
            for w in 0..m {
                let (a, b) = (cycle[w], cycle[(w + 1) % m]);
                let shared = p
                    .faces_of_dim(0)
                    .filter(|v| v.facets == (1 << a) | (1 << b))
                    .count();
                // the two arcs of a bigon share both vertices
                assert_eq!(shared, if m == 2 { 2 } else { 1 });
            }
        }
    }

    #[test]
    fn boundary_cycle_errors() {
        let annulus = build_vertex_free_surface(2).unwrap();
        assert!(matches!(
            boundary_cycle(&annulus),
            Err(Error::UnsupportedShape(_))
        ));
        let two = build_polygon(3)
            .unwrap()
            .disjoint_union(&build_polygon(4).unwrap())
            .unwrap();
        assert!(matches!(
            boundary_cycle(&two),
            Err(Error::UnsupportedShape(_))
        ));
        assert!(boundary_cycle(&build_prism().unwrap()).is_err());
    }

    #[test]
    fn surfaces() {
        assert_eq!(SurfaceWithBoundary::disk(5).unwrap().euler(), 1);
        assert_eq!(
            SurfaceWithBoundary::projective_plane_minus_disk(5)
                .unwrap()
                .euler(),
            0
        );
        assert_eq!(
            SurfaceWithBoundary::torus_minus_disk(5).unwrap().euler(),
            -1
        );
        assert_eq!(SurfaceWithBoundary::new(true, 2, 0).unwrap().euler(), -3);
        assert_eq!(SurfaceWithBoundary::new(false, 2, 0).unwrap().euler(), -1);
        assert!(SurfaceWithBoundary::disk(1).is_err());
        assert!(SurfaceWithBoundary::new(false, 0, 3).is_err());
        let vertex_free = SurfaceWithBoundary::disk(0).unwrap().face_poset().unwrap();
        assert_eq!(vertex_free.f_vector(), vec![0, 1, 1]);
    }

    #[test]
    fn text_round_trip() {
        for p in [
            build_polygon(5).unwrap(),
            build_prism().unwrap(),
            build_simplex(3).unwrap(),
        ] {
            assert_eq!(parse_poset(&p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn parses_documented_example() {
        let text = "# triangle\nn 2\n0 1 0b001\n1 1 0b010\n2 1 0b100\n3 0 0b011\n4 0 0b110\n5 0 0b101\n6 2 0\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.f_vector(), vec![3, 3, 1]);
        let shuffled = "n 2\n6 2 0\n5 0 5\n4 0 6\n3 0 3\n2 1 4\n1 1 0x2\n0 1 1\n";
        assert_eq!(parse_poset(shuffled).unwrap().f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poset("0 2 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("n 2\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("n 2\n0 2 0\n0 1 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poset("n 2\n0 2 zz\n"),
            Err(Error::Parse { .. })
        ));
        // not nice: a vertex in three facets
        let bad = "n 2\n0 1 1\n1 1 2\n2 1 4\n3 0 7\n4 2 0\n";
        assert!(matches!(parse_poset(bad), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn subface_relation() {
        let p = build_polygon(4).unwrap();
        let top = p.faces_of_dim(2).next().unwrap().id;
        for f in p.faces() {
            assert!(p.is_subface(f.id, top));
        }
        let v = p.faces_of_dim(0).next().unwrap();
        let incident = p
            .faces_of_dim(1)
            .filter(|e| p.is_subface(v.id, e.id))
            .count();
        assert_eq!(incident, 2);
    }
}
