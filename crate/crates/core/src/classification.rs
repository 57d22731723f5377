//! Equivalence, equivariant and weakly equivariant classification counts.
//!
//! Principal bundles over `Q` are points of `H^1(Q; (Z/2)^n)`, modeled as
//! `n` copies of `H^1(Q; Z/2) = (Z/2)^r`: an element is an `n`-tuple of
//! `r`-bit masks. `GL(n, Z/2)` mixes the copies; an automorphism of `Q`
//! acts on every copy by the same `r x r` matrix.
//!
//! Automorphisms of `Q` are modeled by the product of their image in
//! `GL(H^1)` and the facet automorphism group, each acting on its own
//! factor of `H^1 x Lambda`.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::budget::Budget;
use crate::char_functions::{
    enumerate_char_functions_within, facet_automorphism_group_within, CharacteristicFunction,
    Symmetry,
};
use crate::cycle_colorings::count_orbits_closed_form_b;
use crate::error::{inconsistent, invalid, Error, Result};
use crate::gf2::{self, enumerate_gl, Gf2Matrix};
use crate::orbit::{self, GroupAction};
use crate::orbit_space::{FacePoset, SurfaceWithBoundary};

/// Bound on `r * n`, i.e. on `log2 |H^1(Q; (Z/2)^n)|`.
pub const MAX_H1_BITS: usize = 20;

/// Bound on the order of a group generated in [`H1Model::from_generators`].
pub const MAX_AUT_IMAGE: usize = 1 << 16;

/// A point of `H^1(Q; (Z/2)^n)`: `coords[i]` is the `i`-th copy of
/// `H^1(Q; Z/2)` as an `r`-bit mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H1Element {
    coords: Vec<u32>,
}

impl H1Element {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coefficient change: copy `i` becomes `sum_k sigma[i][k] * copy k`.
    fn mix(&self, sigma: &Gf2Matrix) -> H1Element {
        let mut coords = vec![0; self.coords.len()];
        for (k, column) in sigma.columns().iter().enumerate() {
            for (i, c) in coords.iter_mut().enumerate() {
                if column.coordinate(i) {
                    *c ^= self.coords[k];
                }
            }
        }
        H1Element { coords }
    }

    fn transform(&self, a: &Gf2Matrix) -> H1Element {
        H1Element {
            coords: self.coords.iter().map(|&c| a.apply_bits(c)).collect(),
        }
    }
}

impl fmt::Display for H1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

/// `H^1(Q; (Z/2)^n)` together with the image of `Aut(Q)` in `GL(r, Z/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Model {
    r: usize,
    n: usize,
    /// Every element of the image, identity included. Empty when `r = 0`,
    /// where the only group is trivial.
    aut_image: Vec<Gf2Matrix>,
}

impl H1Model {
    /// Takes the whole group and checks that it is one.
    pub fn new(r: usize, n: usize, aut_image: Vec<Gf2Matrix>) -> Result<Self> {
        check_size(r, n)?;
        if r == 0 {
            if !aut_image.is_empty() {
                return Err(invalid("rank 0 admits no matrices"));
            }
            return Ok(H1Model { r, n, aut_image });
        }
        if let Some(a) = aut_image.iter().find(|a| a.rank() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: a.rank(),
            });
        }
        let set: HashSet<&Gf2Matrix> = aut_image.iter().collect();
        if set.len() != aut_image.len() {
            return Err(invalid("group elements listed twice"));
        }
        if !aut_image.iter().any(Gf2Matrix::is_identity) {
            return Err(invalid("group lacks the identity"));
        }
        for a in &aut_image {
            let inv = a.inverse()?;
            if !set.contains(&inv) {
                return Err(invalid(format!("group not closed under inverses at {a:?}")));
            }
            for b in &aut_image {
                if !set.contains(&a.mul(b)?) {
                    return Err(invalid(format!(
                        "group not closed under products at {a:?}, {b:?}"
                    )));
                }
            }
        }
        Ok(H1Model { r, n, aut_image })
    }

    /// The group generated by `generators` (the identity alone if none).
    pub fn from_generators(r: usize, n: usize, generators: &[Gf2Matrix]) -> Result<Self> {
        check_size(r, n)?;
        if r == 0 {
            return Self::new(0, n, Vec::new());
        }
        for g in generators {
            if g.rank() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    found: g.rank(),
                });
            }
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
        }
        let identity = Gf2Matrix::identity(r)?;
        let mut seen: HashSet<Gf2Matrix> = HashSet::from([identity.clone()]);
        let mut group = vec![identity];
        let mut next = 0;
        while next < group.len() {
            let a = group[next].clone();
            next += 1;
            for g in generators {
                let b = g.mul(&a)?;
                if seen.insert(b.clone()) {
                    if group.len() == MAX_AUT_IMAGE {
                        return Err(Error::Capacity(format!(
                            "generated group exceeds {MAX_AUT_IMAGE} elements"
                        )));
                    }
                    group.push(b);
                }
            }
        }
        Self::new(r, n, group)
    }

    /// `Q` a disk: `H^1 = 0`.
    pub fn disk(n: usize) -> Result<Self> {
        Self::new(0, n, Vec::new())
    }

    /// `RP^2` minus an open disk: `H^1 = Z/2`, on which every automorphism
    /// acts trivially.
    pub fn projective_plane_minus_disk(n: usize) -> Result<Self> {
        Self::new(1, n, vec![Gf2Matrix::identity(1)?])
    }

    /// The torus minus an open disk: `H^1 = (Z/2)^2` with the whole of
    /// `GL(2, Z/2)` realized by mapping classes.
    pub fn torus_minus_disk(n: usize) -> Result<Self> {
        Self::new(2, n, enumerate_gl(2)?)
    }

    /// Reads `r <rank>` followed by one generator per line, written as its
    /// `r^2` entries in row-major order (`0`/`1`, whitespace ignored). Blank
    /// lines and `#` comments are skipped.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `r <rank>` header".into(),
        })?;
        let r = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["r", rank] => rank.parse::<usize>().map_err(|e| Error::Parse {
                line: header_line,
                msg: format!("bad rank: {e}"),
            })?,
            _ => {
                return Err(Error::Parse {
                    line: header_line,
                    msg: "expected `r <rank>`".into(),
                })
            }
        };
        let generators = lines
            .map(|(line, l)| {
                let parse_err = |msg: String| Error::Parse { line, msg };
                let entries = l
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(parse_err(format!("unexpected character {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if r == 0 || entries.len() != r * r {
                    return Err(parse_err(format!(
                        "generator has {} entries, expected {}",
                        entries.len(),
                        r * r
                    )));
                }
                let rows: Vec<Vec<bool>> = entries.chunks(r).map(<[bool]>::to_vec).collect();
                Gf2Matrix::from_rows(&rows).map_err(|e| parse_err(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(r, n, &generators)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aut_image(&self) -> &[Gf2Matrix] {
        &self.aut_image
    }

    pub fn aut_order(&self) -> usize {
        self.aut_image.len().max(1)
    }

    /// `2^(r n)`.
    pub fn element_count(&self) -> usize {
        1 << (self.r * self.n)
    }

    /// All elements, lexicographic in the coordinates.
    pub fn elements(&self) -> Vec<H1Element> {
        (0..self.n)
            .map(|_| 0..(1u32 << self.r))
            .multi_cartesian_product()
            .map(|coords| H1Element { coords })
            .collect()
    }
}

fn check_size(r: usize, n: usize) -> Result<()> {
    if n == 0 || n > gf2::GL_ENUMERATION_MAX_RANK {
        return Err(Error::Capacity(format!(
            "torus rank must lie in 1..={}, got {n}",
            gf2::GL_ENUMERATION_MAX_RANK
        )));
    }
    if r * n > MAX_H1_BITS {
        return Err(Error::Capacity(format!(
            "H^1 would have 2^{} elements, above 2^{MAX_H1_BITS}",
            r * n
        )));
    }
    Ok(())
}

/// A symmetry of `H^1 x Lambda`: an optional coefficient change applied to
/// both factors, an optional automorphism of `H^1`, and an optional action
/// on `Lambda`.
#[derive(Debug, Clone)]
struct PairSymmetry {
    sigma: Option<Gf2Matrix>,
    aut: Option<Gf2Matrix>,
    lambda: Option<Symmetry>,
}

type Pair = (H1Element, CharacteristicFunction);

impl GroupAction<Pair> for PairSymmetry {
    fn act(&self, (xi, lambda): &Pair) -> Pair {
        let mut xi = xi.clone();
        if let Some(a) = &self.aut {
            xi = xi.transform(a);
        }
        if let Some(s) = &self.sigma {
            xi = xi.mix(s);
        }
        let lambda = match &self.lambda {
            Some(g) => g.act(lambda),
            None => lambda.clone(),
        };
        (xi, lambda)
    }
}

impl GroupAction<H1Element> for Gf2Matrix {
    fn act(&self, x: &H1Element) -> H1Element {
        x.transform(self)
    }
}

fn product_set(h1: &H1Model, lambdas: &[CharacteristicFunction]) -> Vec<Pair> {
    h1.elements()
        .into_iter()
        .cartesian_product(lambdas.iter().cloned())
        .collect()
}

fn check_lambda_ranks(n: usize, lambdas: &[CharacteristicFunction]) -> Result<()> {
    match lambdas.iter().find(|l| l.rank() != n) {
        Some(l) => Err(Error::DimensionMismatch {
            expected: n,
            found: l.rank(),
        }),
        None => Ok(()),
    }
}

/// Checks that partition and Burnside agree, returning the count.
fn certified(by_partition: usize, by_burnside: u64, what: &str) -> Result<u64> {
    if by_partition as u64 != by_burnside {
        return Err(inconsistent(format!(
            "{what}: partition gives {by_partition}, Burnside gives {by_burnside}"
        )));
    }
    Ok(by_burnside)
}

/// Equivalence classes: orbits of the diagonal `GL(n, Z/2)` action on
/// `H^1 x lambdas`.
///
/// If every function spans `(Z/2)^n` (as when `Q` has a vertex) the action
/// is free and the count must equal `|H^1| |lambdas| / |GL|`.
pub fn count_equivalence_classes(h1: &H1Model, lambdas: &[CharacteristicFunction]) -> Result<u64> {
    check_lambda_ranks(h1.n, lambdas)?;
    let pairs = product_set(h1, lambdas);
    let group: Vec<PairSymmetry> = enumerate_gl(h1.n)?
        .into_iter()
        .map(|s| PairSymmetry {
            sigma: Some(s.clone()),
            aut: None,
            lambda: Some(Symmetry::Linear(s)),
        })
        .collect();
    let partition = orbit::partition(&pairs, &group)?;
    let count = certified(
        partition.orbit_count(),
        orbit::burnside_count(&pairs, &group)?,
        "equivalence classes",
    )?;
    let spanning = lambdas.iter().all(|l| {
        let all = if l.values().len() == 64 {
            u64::MAX
        } else {
            (1u64 << l.values().len()) - 1
        };
        l.span_rank(all) == h1.n
    });
    if spanning {
        let expected = pairs.len() as u64 / group.len() as u64;
        if !partition.is_free(group.len()) || count != expected {
            return Err(inconsistent(format!(
                "GL({}) should act freely: {count} classes, expected {expected}",
                h1.n
            )));
        }
    }
    Ok(count)
}

/// `h(Q) B(m)` for a surface with one boundary circle carrying `m >= 2`
/// vertices.
pub fn count_equivariant_classes_surface(q: &SurfaceWithBoundary, h_of_q: u64) -> Result<BigUint> {
    if q.boundary_components() != 1 || q.m() < 2 {
        return Err(Error::UnsupportedShape(format!(
            "need one boundary circle with at least 2 vertices, got m = {}",
            q.m()
        )));
    }
    Ok(BigUint::from(h_of_q) * count_orbits_closed_form_b(q.m() as u64)?)
}

/// `h(Q) = |H^1(Q; (Z/2)^2) / Aut(Q)|`.
pub fn compute_h(h1: &H1Model) -> Result<u64> {
    if h1.n != 2 {
        return Err(invalid(format!("h(Q) is defined for n = 2, got {}", h1.n)));
    }
    aut_orbits_on_h1(h1)
}

/// Orbits of the image of `Aut(Q)` on `H^1(Q; (Z/2)^n)`, for any `n`.
pub fn aut_orbits_on_h1(h1: &H1Model) -> Result<u64> {
    let elements = h1.elements();
    if h1.r == 0 {
        return Ok(elements.len() as u64);
    }
    orbit::burnside_orbit_count(&elements, &h1.aut_image)
}

/// Equivariant classes of small covers: `Lambda(p) / Aut(F(p))`.
pub fn count_equivariant_classes_small_cover(p: &FacePoset, n: usize) -> Result<u64> {
    count_equivariant_classes_small_cover_within(p, n, &Budget::default())
}

pub fn count_equivariant_classes_small_cover_within(
    p: &FacePoset,
    n: usize,
    budget: &Budget,
) -> Result<u64> {
    crate::char_functions::count_aut_orbits(p, n, budget)
}

/// Weak equivariant classes: `GL(n, Z/2) \ (H^1 x Lambda(p)) / Aut(Q)`.
pub fn count_weak_classes(h1: &H1Model, p: &FacePoset, n: usize) -> Result<u64> {
    count_weak_classes_within(h1, p, n, &Budget::default())
}

pub fn count_weak_classes_within(
    h1: &H1Model,
    p: &FacePoset,
    n: usize,
    budget: &Budget,
) -> Result<u64> {
    let lambdas = enumerate_char_functions_within(p, n, budget)?;
    weak_classes_of(h1, &lambdas, &facet_automorphism_group_within(p, budget)?)
}

fn weak_classes_of(
    h1: &H1Model,
    lambdas: &[CharacteristicFunction],
    facet_group: &[crate::char_functions::FacetAutomorphism],
) -> Result<u64> {
    check_lambda_ranks(h1.n, lambdas)?;
    let pairs = product_set(h1, lambdas);
    let gl = enumerate_gl(h1.n)?;
    let auts: Vec<Option<Gf2Matrix>> = if h1.aut_image.is_empty() {
        vec![None]
    } else {
        h1.aut_image.iter().cloned().map(Some).collect()
    };
    let generators: Vec<PairSymmetry> = gl
        .iter()
        .map(|s| PairSymmetry {
            sigma: Some(s.clone()),
            aut: None,
            lambda: Some(Symmetry::Linear(s.clone())),
        })
        .chain(auts.iter().flatten().map(|a| PairSymmetry {
            sigma: None,
            aut: Some(a.clone()),
            lambda: None,
        }))
        .chain(facet_group.iter().map(|h| PairSymmetry {
            sigma: None,
            aut: None,
            lambda: Some(Symmetry::Facet(h.clone())),
        }))
        .collect();
    let by_partition = orbit::partition(&pairs, &generators)?.orbit_count();
    let whole: Vec<PairSymmetry> = gl
        .iter()
        .cartesian_product(auts.iter())
        .cartesian_product(facet_group.iter())
        .map(|((s, a), h)| PairSymmetry {
            sigma: Some(s.clone()),
            aut: a.clone(),
            lambda: Some(Symmetry::Both(s.clone(), h.clone())),
        })
        .collect();
    certified(
        by_partition,
        orbit::burnside_count(&pairs, &whole)?,
        "weak classes",
    )
}

/// Orbits of `Aut(Q)` alone on `H^1 x lambdas`, counted directly.
fn equivariant_classes_of(
    h1: &H1Model,
    lambdas: &[CharacteristicFunction],
    facet_group: &[crate::char_functions::FacetAutomorphism],
) -> Result<u64> {
    let pairs = product_set(h1, lambdas);
    let auts: Vec<Option<Gf2Matrix>> = if h1.aut_image.is_empty() {
        vec![None]
    } else {
        h1.aut_image.iter().cloned().map(Some).collect()
    };
    let whole: Vec<PairSymmetry> = auts
        .iter()
        .cartesian_product(facet_group.iter())
        .map(|(a, h)| PairSymmetry {
            sigma: None,
            aut: a.clone(),
            lambda: Some(Symmetry::Facet(h.clone())),
        })
        .collect();
    orbit::burnside_orbit_count(&pairs, &whole)
}

/// The three counts for one orbit space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// `|H^1(Q; (Z/2)^n)|`.
    pub h1_elements: u64,
    /// `|Lambda(Q)|`.
    pub functions: u64,
    /// Orbits of `Aut(Q)` on `H^1` (`h(Q)` when `n = 2`).
    pub h: u64,
    pub equivalence_count: u64,
    pub equivariant_count: u64,
    pub weak_count: u64,
    /// The diagonal `GL(n, Z/2)` action is free.
    pub free: bool,
    /// The independent routes to the equivariant count agree.
    pub consistent: bool,
}

/// All counts for a surface with one boundary circle and `m >= 2` vertices,
/// `n = h1.n() = 2`. The equivariant count is computed directly as an orbit
/// count and compared with `h(Q) B(m)`; `consistent` records the outcome.
pub fn classify_surface(h1: &H1Model, q: &SurfaceWithBoundary) -> Result<ClassificationReport> {
    classify_surface_within(h1, q, &Budget::default())
}

pub fn classify_surface_within(
    h1: &H1Model,
    q: &SurfaceWithBoundary,
    budget: &Budget,
) -> Result<ClassificationReport> {
    let h = compute_h(h1)?;
    let by_theorem = count_equivariant_classes_surface(q, h)?;
    let p = q.face_poset()?;
    let lambdas = enumerate_char_functions_within(&p, 2, budget)?;
    let facet_group = facet_automorphism_group_within(&p, budget)?;
    let equivariant = equivariant_classes_of(h1, &lambdas, &facet_group)?;
    let equivalence = count_equivalence_classes(h1, &lambdas)?;
    let weak = weak_classes_of(h1, &lambdas, &facet_group)?;
    Ok(ClassificationReport {
        h1_elements: h1.element_count() as u64,
        functions: lambdas.len() as u64,
        h,
        equivalence_count: equivalence,
        equivariant_count: equivariant,
        weak_count: weak,
        free: true,
        consistent: by_theorem == BigUint::from(equivariant),
    })
}

/// All counts for a small cover over a simple polytope (`H^1 = 0`).
pub fn classify_small_cover(p: &FacePoset, n: usize) -> Result<ClassificationReport> {
    classify_small_cover_within(p, n, &Budget::default())
}

pub fn classify_small_cover_within(
    p: &FacePoset,
    n: usize,
    budget: &Budget,
) -> Result<ClassificationReport> {
    let h1 = H1Model::disk(n)?;
    let lambdas = enumerate_char_functions_within(p, n, budget)?;
    let facet_group = facet_automorphism_group_within(p, budget)?;
    let equivalence = count_equivalence_classes(&h1, &lambdas)?;
    let equivariant = equivariant_classes_of(&h1, &lambdas, &facet_group)?;
    let direct = crate::char_functions::count_aut_orbits(p, n, budget)?;
    let weak = weak_classes_of(&h1, &lambdas, &facet_group)?;
    let order = gf2::gl_order(n).expect("n checked by H1Model") as u64;
    Ok(ClassificationReport {
        h1_elements: 1,
        functions: lambdas.len() as u64,
        h: 1,
        equivalence_count: equivalence,
        equivariant_count: equivariant,
        weak_count: weak,
        free: equivalence * order == lambdas.len() as u64,
        consistent: direct == equivariant
            && weak <= equivariant
            && equivariant <= lambdas.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_functions::enumerate_char_functions;
    use crate::cycle_colorings::{count_a, count_double_cosets_closed_form_c};
    use crate::orbit_space::{build_polygon, build_prism, build_simplex};
    use num_traits::ToPrimitive;

    fn big(x: BigUint) -> u64 {
        x.to_u64().unwrap()
    }

    #[test]
    fn h_of_the_three_presets() {
        assert_eq!(compute_h(&H1Model::disk(2).unwrap()).unwrap(), 1);
        assert_eq!(
            compute_h(&H1Model::projective_plane_minus_disk(2).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            compute_h(&H1Model::torus_minus_disk(2).unwrap()).unwrap(),
            5
        );
    }

    #[test]
    fn h_of_trivial_action_counts_points() {
        for r in 0..=4 {
            let h1 = H1Model::from_generators(r, 2, &[]).unwrap();
            assert_eq!(h1.aut_order(), 1);
            assert_eq!(compute_h(&h1).unwrap(), 1 << (2 * r));
        }
    }

    #[test]
    fn torus_h_by_explicit_partition() {
        // pairs of vectors in (Z/2)^2 under the diagonal GL(2) action: the
        // zero pair, three orbits of pairs spanning a line, one of bases
        let h1 = H1Model::torus_minus_disk(2).unwrap();
        let elements = h1.elements();
        assert_eq!(elements.len(), 16);
        let p = orbit::partition(&elements, h1.aut_image()).unwrap();
        let mut sizes = p.orbit_sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 3, 3, 6]);
    }

    #[test]
    fn closure_is_checked() {
        let swap = Gf2Matrix::from_column_bits(2, &[2, 1]).unwrap();
        let shear = Gf2Matrix::from_column_bits(2, &[1, 3]).unwrap();
        assert!(H1Model::new(2, 2, vec![swap.clone()]).is_err());
        assert!(H1Model::new(
            2,
            2,
            vec![Gf2Matrix::identity(2).unwrap(), swap.clone(), shear.clone()]
        )
        .is_err());
        let generated = H1Model::from_generators(2, 2, &[swap, shear]).unwrap();
        assert_eq!(generated.aut_order(), 6);
        assert_eq!(compute_h(&generated).unwrap(), 5);
        assert!(H1Model::from_generators(
            2,
            2,
            &[Gf2Matrix::from_column_bits(2, &[1, 1]).unwrap()]
        )
        .is_err());
        assert!(H1Model::new(0, 2, vec![Gf2Matrix::identity(1).unwrap()]).is_err());
        assert!(H1Model::new(11, 2, Vec::new()).is_err());
    }

    #[test]
    fn parse_generators() {
        let text = "# torus\nr 2\n0110\n\n10 11\n";
        let h1 = H1Model::parse(text, 2).unwrap();
        assert_eq!(h1.r(), 2);
        assert_eq!(h1.aut_order(), 6);
        assert_eq!(H1Model::parse("r 1\n", 2).unwrap().aut_order(), 1);
        assert_eq!(H1Model::parse("r 0", 2).unwrap(), H1Model::disk(2).unwrap());
        assert!(matches!(
            H1Model::parse("r 2\n01\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            H1Model::parse("r 2\n0x10\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            H1Model::parse("r 0\n1\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            H1Model::parse("rank 2", 2),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(H1Model::parse("r 2\n1111\n", 2).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let prism = build_prism().unwrap();
        let lambdas = enumerate_char_functions(&prism, 3).unwrap();
        assert_eq!(
            count_equivalence_classes(&H1Model::disk(3).unwrap(), &lambdas).unwrap(),
            5
        );
        let tri = build_simplex(2).unwrap();
        let lambdas = enumerate_char_functions(&tri, 2).unwrap();
        assert_eq!(
            count_equivalence_classes(&H1Model::disk(2).unwrap(), &lambdas).unwrap(),
            1
        );
        let bigon = SurfaceWithBoundary::projective_plane_minus_disk(2)
            .unwrap()
            .face_poset()
            .unwrap();
        let lambdas = enumerate_char_functions(&bigon, 2).unwrap();
        assert_eq!(lambdas.len(), 6);
        let h1 = H1Model::projective_plane_minus_disk(2).unwrap();
        assert_eq!(count_equivalence_classes(&h1, &lambdas).unwrap(), 4);
    }

    #[test]
    fn equivalence_rank_mismatch() {
        let tri = build_simplex(2).unwrap();
        let lambdas = enumerate_char_functions(&tri, 2).unwrap();
        assert!(count_equivalence_classes(&H1Model::disk(3).unwrap(), &lambdas).is_err());
    }

    #[test]
    fn theorem_examples() {
        let disk = SurfaceWithBoundary::disk(6).unwrap();
        assert_eq!(
            big(count_equivariant_classes_surface(&disk, 1).unwrap()),
            13
        );
        let rp2 = SurfaceWithBoundary::projective_plane_minus_disk(5).unwrap();
        assert_eq!(big(count_equivariant_classes_surface(&rp2, 4).unwrap()), 12);
        let torus = SurfaceWithBoundary::torus_minus_disk(10).unwrap();
        assert_eq!(
            big(count_equivariant_classes_surface(&torus, 5).unwrap()),
            390
        );
        let closed = SurfaceWithBoundary::disk(0).unwrap();
        assert!(matches!(
            count_equivariant_classes_surface(&closed, 1),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn small_cover_equivariant_examples() {
        assert_eq!(
            count_equivariant_classes_small_cover(&build_polygon(4).unwrap(), 2).unwrap(),
            6
        );
        assert_eq!(
            count_equivariant_classes_small_cover(&build_prism().unwrap(), 3).unwrap(),
            98
        );
        assert_eq!(
            count_equivariant_classes_small_cover(&build_simplex(3).unwrap(), 3).unwrap(),
            7
        );
    }

    #[test]
    fn weak_examples() {
        let trivial = H1Model::disk(2).unwrap();
        assert_eq!(
            count_weak_classes(&trivial, &build_polygon(12).unwrap(), 2).unwrap(),
            48
        );
        assert_eq!(
            count_weak_classes(&trivial, &build_simplex(2).unwrap(), 2).unwrap(),
            1
        );
        assert_eq!(
            count_weak_classes(&H1Model::disk(3).unwrap(), &build_prism().unwrap(), 3).unwrap(),
            3
        );
    }

    #[test]
    fn polygon_pipeline_matches_closed_forms() {
        for m in 3..=9 {
            let p = build_polygon(m).unwrap();
            let report = classify_small_cover(&p, 2).unwrap();
            assert_eq!(report.functions, big(count_a(m as u64).unwrap()));
            assert_eq!(report.equivalence_count, report.functions / 6);
            assert_eq!(
                report.equivariant_count,
                big(count_orbits_closed_form_b(m as u64).unwrap())
            );
            assert_eq!(
                report.weak_count,
                big(count_double_cosets_closed_form_c(m as u64).unwrap())
            );
            assert!(report.free && report.consistent);
        }
    }

    #[test]
    fn prism_report() {
        let r = classify_small_cover(&build_prism().unwrap(), 3).unwrap();
        assert_eq!(
            (
                r.functions,
                r.equivalence_count,
                r.equivariant_count,
                r.weak_count
            ),
            (840, 5, 98, 3)
        );
        assert!(r.free && r.consistent);
    }

    #[test]
    fn surface_reports_agree_with_theorem() {
        for m in 2..=7 {
            for h1 in [
                H1Model::disk(2).unwrap(),
                H1Model::projective_plane_minus_disk(2).unwrap(),
                H1Model::torus_minus_disk(2).unwrap(),
            ] {
                let q = match h1.r() {
                    0 => SurfaceWithBoundary::disk(m),
                    1 => SurfaceWithBoundary::projective_plane_minus_disk(m),
                    _ => SurfaceWithBoundary::torus_minus_disk(m),
                }
                .unwrap();
                let r = classify_surface(&h1, &q).unwrap();
                assert!(r.consistent, "m = {m}, r = {}", h1.r());
                assert_eq!(r.equivalence_count * 6, r.h1_elements * r.functions);
                assert!(r.weak_count <= r.equivariant_count);
                assert!(r.equivariant_count <= r.h1_elements * r.functions);
            }
        }
    }
}
