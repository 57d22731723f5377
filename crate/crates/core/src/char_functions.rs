//! Characteristic functions on face posets and the two symmetry actions on
//! them: `GL(n, Z/2)` on the values, facet automorphisms on the arguments.

use std::fmt;

use itertools::Itertools;

use crate::budget::Budget;
use crate::error::{inconsistent, invalid, Error, Result};
use crate::gf2::{self, enumerate_gl, Gf2Matrix, Gf2Vector};
use crate::orbit::{self, GroupAction};
use crate::orbit_space::{boundary_cycle, FacePoset};

/// An assignment of nonzero vectors of `(Z/2)^n` to facets, indexed by facet
/// index, such that the facets through every face get independent values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacteristicFunction {
    values: Vec<Gf2Vector>,
}

impl CharacteristicFunction {
    pub fn new(p: &FacePoset, values: Vec<Gf2Vector>) -> Result<Self> {
        if values.len() != p.facet_count() {
            return Err(Error::DimensionMismatch {
                expected: p.facet_count(),
                found: values.len(),
            });
        }
        for v in &values {
            if v.rank() != p.dim() {
                return Err(Error::DimensionMismatch {
                    expected: p.dim(),
                    found: v.rank(),
                });
            }
        }
        let lambda = CharacteristicFunction { values };
        if let Some(face) = p.faces().iter().find(|f| !lambda.independent_at(f.facets)) {
            return Err(invalid(format!(
                "values on the facets through face {} are dependent",
                face.id
            )));
        }
        Ok(lambda)
    }

    pub fn values(&self) -> &[Gf2Vector] {
        &self.values
    }

    pub fn value(&self, facet: usize) -> Gf2Vector {
        self.values[facet]
    }

    pub fn rank(&self) -> usize {
        self.values.first().map_or(0, Gf2Vector::rank)
    }

    pub fn is_valid(&self, p: &FacePoset) -> bool {
        self.values.len() == p.facet_count()
            && self.values.iter().all(|v| v.rank() == p.dim())
            && p.faces().iter().all(|f| self.independent_at(f.facets))
    }

    /// Dimension of `G_F`, the span of the values on the facets through a
    /// face with the given facet mask.
    pub fn span_rank(&self, facets: u64) -> usize {
        gf2::rank_of_masks(self.masked(facets))
    }

    fn masked(&self, facets: u64) -> impl Iterator<Item = u32> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(move |(j, _)| (facets >> j) & 1 == 1)
            .map(|(_, v)| v.bits())
    }

    fn independent_at(&self, facets: u64) -> bool {
        self.span_rank(facets) == facets.count_ones() as usize
    }

    /// Parses the `facet:bits` comma list written by `Display`.
    pub fn parse(p: &FacePoset, text: &str) -> Result<Self> {
        let mut values = vec![None; p.facet_count()];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (facet, bits) = item
                .split_once(':')
                .ok_or_else(|| invalid(format!("expected facet:bits, got {item:?}")))?;
            let facet: usize = facet
                .parse()
                .map_err(|_| invalid(format!("bad facet index {facet:?}")))?;
            let bits: u32 = bits
                .parse()
                .map_err(|_| invalid(format!("bad bit mask {bits:?}")))?;
            let slot = values
                .get_mut(facet)
                .ok_or_else(|| invalid(format!("facet {facet} out of range")))?;
            if slot.replace(Gf2Vector::new(p.dim(), bits)?).is_some() {
                return Err(invalid(format!("facet {facet} assigned twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(j, v)| v.ok_or_else(|| invalid(format!("facet {j} has no value"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, values)
    }
}

/// `facet:bits` pairs, comma-separated, bits as a decimal mask (bit `k` is
/// coordinate `k`), e.g. `0:1,1:2,2:4`.
impl fmt::Display for CharacteristicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .values
            .iter()
            .enumerate()
            .map(|(j, v)| format!("{j}:{}", v.bits()))
            .join(",");
        f.write_str(&body)
    }
}

impl fmt::Debug for CharacteristicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharacteristicFunction({self})")
    }
}

/// All characteristic functions on `p` with values in `(Z/2)^n`.
pub fn enumerate_char_functions(p: &FacePoset, n: usize) -> Result<Vec<CharacteristicFunction>> {
    enumerate_char_functions_within(p, n, &Budget::default())
}

/// Backtracking over facets in index order, trying values in increasing
/// bit-mask order; after facet `j` is assigned, every face whose largest
/// facet index is `j` is checked for independence. The output is sorted
/// lexicographically and may be empty.
pub fn enumerate_char_functions_within(
    p: &FacePoset,
    n: usize,
    budget: &Budget,
) -> Result<Vec<CharacteristicFunction>> {
    if n != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: n,
        });
    }
    let k = p.facet_count();
    if k > budget.facets {
        return Err(Error::Capacity(format!(
            "{k} facets exceed the enumeration budget of {}",
            budget.facets
        )));
    }
    let mut checks: Vec<Vec<u64>> = vec![Vec::new(); k];
    for f in p.faces().iter().filter(|f| f.facet_count() >= 2) {
        let last = 63 - f.facets.leading_zeros() as usize;
        checks[last].push(f.facets);
    }
    for c in &mut checks {
        c.sort_unstable();
        c.dedup();
    }
    let candidates: Vec<Gf2Vector> = Gf2Vector::nonzero(n)?.collect();
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(k);
    assign_facet(&checks, &candidates, &mut values, &mut out);
    Ok(out)
}

fn assign_facet(
    checks: &[Vec<u64>],
    candidates: &[Gf2Vector],
    values: &mut Vec<Gf2Vector>,
    out: &mut Vec<CharacteristicFunction>,
) {
    let j = values.len();
    if j == checks.len() {
        out.push(CharacteristicFunction {
            values: values.clone(),
        });
        return;
    }
    for &v in candidates {
        values.push(v);
        let ok = checks[j].iter().all(|&mask| {
            let members = (0..=j)
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| values[i].bits());
            gf2::rank_of_masks(members) == mask.count_ones() as usize
        });
        if ok {
            assign_facet(checks, candidates, values, out);
        }
        values.pop();
    }
}

/// `sigma o lambda`.
pub fn gl_act(
    sigma: &Gf2Matrix,
    lambda: &CharacteristicFunction,
) -> Result<CharacteristicFunction> {
    if sigma.rank() != lambda.rank() {
        return Err(Error::DimensionMismatch {
            expected: lambda.rank(),
            found: sigma.rank(),
        });
    }
    if !sigma.is_invertible() {
        return Err(Error::Singular);
    }
    Ok(gl_act_unchecked(sigma, lambda))
}

fn gl_act_unchecked(sigma: &Gf2Matrix, lambda: &CharacteristicFunction) -> CharacteristicFunction {
    CharacteristicFunction {
        values: lambda
            .values
            .iter()
            .map(|&v| sigma.apply_unchecked(v))
            .collect(),
    }
}

/// A permutation of facet indices that preserves the face structure: the
/// image of every face's facet set is the facet set of a face of the same
/// dimension, with multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetAutomorphism {
    images: Vec<usize>,
}

impl FacetAutomorphism {
    pub fn new(p: &FacePoset, images: Vec<usize>) -> Result<Self> {
        let k = p.facet_count();
        if images.len() != k || !is_permutation(&images) {
            return Err(invalid(format!(
                "{images:?} is not a permutation of 0..{k}"
            )));
        }
        let h = FacetAutomorphism { images };
        if !h.preserves(&face_signature(p), p) {
            return Err(invalid(format!(
                "{:?} does not preserve the face poset",
                h.images
            )));
        }
        Ok(h)
    }

    pub fn identity(k: usize) -> Self {
        FacetAutomorphism {
            images: (0..k).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &FacetAutomorphism) -> Result<FacetAutomorphism> {
        if self.images.len() != other.images.len() {
            return Err(Error::DimensionMismatch {
                expected: self.images.len(),
                found: other.images.len(),
            });
        }
        Ok(FacetAutomorphism {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> FacetAutomorphism {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        FacetAutomorphism { images: inv }
    }

    fn map_mask(&self, mask: u64) -> u64 {
        self.images
            .iter()
            .enumerate()
            .filter(|(j, _)| (mask >> j) & 1 == 1)
            .fold(0, |acc, (_, &img)| acc | (1 << img))
    }

    fn preserves(&self, signature: &[(usize, u64)], p: &FacePoset) -> bool {
        let mut mapped: Vec<(usize, u64)> = p
            .faces()
            .iter()
            .map(|f| (f.dim, self.map_mask(f.facets)))
            .collect();
        mapped.sort_unstable();
        mapped == signature
    }
}

impl fmt::Debug for FacetAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FacetAutomorphism{:?}", self.images)
    }
}

fn is_permutation(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
}

fn face_signature(p: &FacePoset) -> Vec<(usize, u64)> {
    let mut sig: Vec<(usize, u64)> = p.faces().iter().map(|f| (f.dim, f.facets)).collect();
    sig.sort_unstable();
    sig
}

/// `lambda o h`.
pub fn aut_act(
    h: &FacetAutomorphism,
    lambda: &CharacteristicFunction,
) -> Result<CharacteristicFunction> {
    if h.images.len() != lambda.values.len() {
        return Err(Error::DimensionMismatch {
            expected: lambda.values.len(),
            found: h.images.len(),
        });
    }
    Ok(aut_act_unchecked(h, lambda))
}

fn aut_act_unchecked(
    h: &FacetAutomorphism,
    lambda: &CharacteristicFunction,
) -> CharacteristicFunction {
    CharacteristicFunction {
        values: h.images.iter().map(|&i| lambda.values[i]).collect(),
    }
}

/// The facet automorphism group.
///
/// For a two-dimensional poset whose proper faces are the arcs and vertices
/// of a single boundary cycle, the group is the dihedral group of that
/// cycle, listed as rotations then reflections with the arc maps of
/// [`DihedralElement`](crate::cycle_colorings::DihedralElement) (so for the
/// bigon, `m = 2`, each facet permutation appears twice). Otherwise every
/// facet permutation is tried.
pub fn facet_automorphism_group(p: &FacePoset) -> Result<Vec<FacetAutomorphism>> {
    facet_automorphism_group_within(p, &Budget::default())
}

pub fn facet_automorphism_group_within(
    p: &FacePoset,
    budget: &Budget,
) -> Result<Vec<FacetAutomorphism>> {
    if let Some(cycle) = single_cycle(p) {
        return dihedral_automorphisms(p, &cycle);
    }
    let k = p.facet_count();
    if k > budget.permutation_facets {
        return Err(Error::Capacity(format!(
            "{k} facets exceed the permutation search budget of {}",
            budget.permutation_facets
        )));
    }
    let signature = face_signature(p);
    Ok((0..k)
        .permutations(k)
        .map(|images| FacetAutomorphism { images })
        .filter(|h| h.preserves(&signature, p))
        .collect())
}

fn single_cycle(p: &FacePoset) -> Option<Vec<usize>> {
    if p.dim() != 2 || p.faces_of_dim(2).count() != 1 {
        return None;
    }
    boundary_cycle(p).ok()
}

fn dihedral_automorphisms(p: &FacePoset, cycle: &[usize]) -> Result<Vec<FacetAutomorphism>> {
    use crate::cycle_colorings::dihedral_group;
    let m = cycle.len();
    let mut position = vec![0; m];
    for (i, &f) in cycle.iter().enumerate() {
        position[f] = i;
    }
    let signature = face_signature(p);
    dihedral_group(m)?
        .into_iter()
        .map(|g| {
            let h = FacetAutomorphism {
                images: (0..m).map(|f| cycle[g.map_arc(position[f])]).collect(),
            };
            if h.preserves(&signature, p) {
                Ok(h)
            } else {
                Err(inconsistent(
                    "boundary rotation does not preserve the poset",
                ))
            }
        })
        .collect()
}

/// One of the symmetries acting on characteristic functions. Precomposition
/// is a right action; orbit counts only ever see whole groups, which are
/// closed under inverses, so it is used as is.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `lambda -> sigma o lambda`
    Linear(Gf2Matrix),
    /// `lambda -> lambda o h`
    Facet(FacetAutomorphism),
    /// `lambda -> sigma o lambda o h`
    Both(Gf2Matrix, FacetAutomorphism),
}

impl GroupAction<CharacteristicFunction> for Symmetry {
    fn act(&self, x: &CharacteristicFunction) -> CharacteristicFunction {
        match self {
            Symmetry::Linear(s) => gl_act_unchecked(s, x),
            Symmetry::Facet(h) => aut_act_unchecked(h, x),
            Symmetry::Both(s, h) => gl_act_unchecked(s, &aut_act_unchecked(h, x)),
        }
    }
}

/// Result of partitioning characteristic functions under `GL(n, Z/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GlOrbitReport {
    pub functions: usize,
    pub orbits: u64,
    /// Every stabilizer is trivial.
    pub free: bool,
}

/// `GL(n, Z/2)` orbits on `Lambda(p)`.
///
/// When `p` has a vertex the action must be free and `|Lambda| = orbits *
/// |GL|`; a violation is a consistency error.
pub fn count_gl_orbits(p: &FacePoset, n: usize) -> Result<GlOrbitReport> {
    count_gl_orbits_within(p, n, &Budget::default())
}

pub fn count_gl_orbits_within(p: &FacePoset, n: usize, budget: &Budget) -> Result<GlOrbitReport> {
    let lambdas = enumerate_char_functions_within(p, n, budget)?;
    let report = gl_orbits_of(&lambdas, n)?;
    if p.has_vertex() {
        let order = gf2::gl_order(n).expect("n <= 4 here") as u64;
        if !report.free || report.functions as u64 != report.orbits * order {
            return Err(inconsistent(format!(
                "GL({n}) should act freely: {} functions in {} orbits",
                report.functions, report.orbits
            )));
        }
    }
    Ok(report)
}

/// Partitions a set of functions of rank `n` under `GL(n, Z/2)`.
pub fn gl_orbits_of(lambdas: &[CharacteristicFunction], n: usize) -> Result<GlOrbitReport> {
    let group: Vec<Symmetry> = enumerate_gl(n)?.into_iter().map(Symmetry::Linear).collect();
    check_ranks(lambdas, n)?;
    let partition = orbit::partition(lambdas, &group)?;
    let burnside = orbit::burnside_count(lambdas, &group)?;
    if burnside != partition.orbit_count() as u64 {
        return Err(inconsistent("Burnside and partition disagree on GL orbits"));
    }
    Ok(GlOrbitReport {
        functions: lambdas.len(),
        orbits: burnside,
        free: partition.is_free(group.len()),
    })
}

fn check_ranks(lambdas: &[CharacteristicFunction], n: usize) -> Result<()> {
    match lambdas.iter().find(|l| l.rank() != n) {
        Some(l) => Err(Error::DimensionMismatch {
            expected: n,
            found: l.rank(),
        }),
        None => Ok(()),
    }
}

/// Number of `sigma` in `GL(n, Z/2)` with `sigma o lambda = lambda`,
/// computed directly.
pub fn gl_stabilizer_order(lambda: &CharacteristicFunction, group: &[Gf2Matrix]) -> usize {
    group
        .iter()
        .filter(|s| s.rank() == lambda.rank() && gl_act_unchecked(s, lambda) == *lambda)
        .count()
}

/// Orbits of `Lambda(p)` under the facet automorphism group.
pub fn count_aut_orbits(p: &FacePoset, n: usize, budget: &Budget) -> Result<u64> {
    let lambdas = enumerate_char_functions_within(p, n, budget)?;
    let group: Vec<Symmetry> = facet_automorphism_group_within(p, budget)?
        .into_iter()
        .map(Symmetry::Facet)
        .collect();
    orbit::burnside_orbit_count(&lambdas, &group)
}

/// `|GL(n, Z/2) \ Lambda(p) / Aut(F(p))|`.
pub fn count_double_cosets(p: &FacePoset, n: usize) -> Result<u64> {
    count_double_cosets_within(p, n, &Budget::default())
}

/// Partitions under the generators of both groups, then cross-checks with
/// Burnside over the full product group.
pub fn count_double_cosets_within(p: &FacePoset, n: usize, budget: &Budget) -> Result<u64> {
    let lambdas = enumerate_char_functions_within(p, n, budget)?;
    let gl = enumerate_gl(n)?;
    let aut = facet_automorphism_group_within(p, budget)?;
    let generators: Vec<Symmetry> = gl
        .iter()
        .cloned()
        .map(Symmetry::Linear)
        .chain(aut.iter().cloned().map(Symmetry::Facet))
        .collect();
    let by_partition = orbit::partition(&lambdas, &generators)?.orbit_count() as u64;
    let product: Vec<Symmetry> = gl
        .iter()
        .cartesian_product(aut.iter())
        .map(|(s, h)| Symmetry::Both(s.clone(), h.clone()))
        .collect();
    let by_burnside = orbit::burnside_count(&lambdas, &product)?;
    if by_partition != by_burnside {
        return Err(inconsistent(format!(
            "double cosets: partition gives {by_partition}, Burnside gives {by_burnside}"
        )));
    }
    Ok(by_partition)
}
