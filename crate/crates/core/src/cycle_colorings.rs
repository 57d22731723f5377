//! Proper colorings of a circle with `m` arcs and their symmetry classes.
//!
//! Arc `k` runs from vertex `k` to vertex `k + 1 (mod m)`. The dihedral group
//! of order `2m` acts by moving arcs, the symmetric group on the colors acts
//! by relabeling; with three colors the latter is the action of `GL(2, Z/2)`
//! on the three nonzero vectors of `(Z/2)^2`.
//!
//! Closed forms are evaluated in arbitrary precision. Brute-force
//! enumeration plus [`burnside_orbit_count`] is the independent oracle.

use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{inconsistent, invalid, Error, Result};
use crate::orbit::{self, GroupAction};

/// Largest color count supported by [`CycleColoring`].
pub const MAX_COLORS: usize = 64;

/// Largest color count for which the whole symmetric group is materialized.
pub const MAX_PERMUTED_COLORS: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleColoring {
    colors: Vec<u8>,
    s: u8,
}

impl CycleColoring {
    /// Validates a coloring of `colors.len()` arcs with colors in `0..s`.
    pub fn new(colors: Vec<u8>, s: usize) -> Result<Self> {
        check_params(colors.len(), s)?;
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= s) {
            return Err(invalid(format!("color {c} outside 0..{s}")));
        }
        let m = colors.len();
        for k in 0..m {
            if colors[k] == colors[(k + 1) % m] {
                return Err(Error::ImproperColoring(k, (k + 1) % m));
            }
        }
        Ok(CycleColoring { colors, s: s as u8 })
    }

    /// A coloring with the default three colors.
    pub fn three(colors: Vec<u8>) -> Result<Self> {
        Self::new(colors, 3)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn s(&self) -> usize {
        self.s as usize
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().unique().count()
    }
}

impl fmt::Debug for CycleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleColoring({self})")
    }
}

/// Comma-separated colors, e.g. `0,1,2`.
impl fmt::Display for CycleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.colors.iter().join(","))
    }
}

fn check_params(m: usize, s: usize) -> Result<()> {
    if m < 2 {
        return Err(invalid(format!("a circle needs at least 2 arcs, got {m}")));
    }
    if !(2..=MAX_COLORS).contains(&s) {
        return Err(invalid(format!("color count {s} outside 2..={MAX_COLORS}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralKind {
    Rotation,
    Reflection,
}

/// An element of the dihedral group of order `2m` acting on the arcs.
///
/// `Rotation k` sends arc `i` to arc `i + k`. `Reflection k` is the rotation
/// by `k` after the reflection in the real axis; it sends arc `i` to arc
/// `k - 1 - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    m: usize,
    kind: DihedralKind,
    k: usize,
}

impl DihedralElement {
    pub fn new(m: usize, kind: DihedralKind, k: usize) -> Result<Self> {
        if m < 2 {
            return Err(invalid(format!("dihedral group needs m >= 2, got {m}")));
        }
        Ok(DihedralElement { m, kind, k: k % m })
    }

    pub fn rotation(m: usize, k: usize) -> Result<Self> {
        Self::new(m, DihedralKind::Rotation, k)
    }

    pub fn reflection(m: usize, k: usize) -> Result<Self> {
        Self::new(m, DihedralKind::Reflection, k)
    }

    pub fn identity(m: usize) -> Result<Self> {
        Self::rotation(m, 0)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> DihedralKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Image of arc `i`.
    pub fn map_arc(&self, i: usize) -> usize {
        let m = self.m;
        match self.kind {
            DihedralKind::Rotation => (i + self.k) % m,
            DihedralKind::Reflection => (self.k + m - 1 + m - i % m) % m,
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &DihedralElement) -> Result<DihedralElement> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        let m = self.m;
        use DihedralKind::*;
        let (kind, k) = match (self.kind, other.kind) {
            (Rotation, Rotation) => (Rotation, self.k + other.k),
            (Rotation, Reflection) => (Reflection, self.k + other.k),
            (Reflection, Rotation) => (Reflection, self.k + m - other.k),
            (Reflection, Reflection) => (Rotation, self.k + m - other.k),
        };
        Self::new(m, kind, k)
    }

    pub fn inverse(&self) -> DihedralElement {
        match self.kind {
            DihedralKind::Rotation => DihedralElement {
                k: (self.m - self.k) % self.m,
                ..*self
            },
            DihedralKind::Reflection => *self,
        }
    }

    fn act_unchecked(&self, c: &CycleColoring) -> CycleColoring {
        let inv = self.inverse();
        CycleColoring {
            colors: (0..c.m()).map(|i| c.colors[inv.map_arc(i)]).collect(),
            s: c.s,
        }
    }
}

/// All `2m` elements: rotations `0..m`, then reflections `0..m`.
pub fn dihedral_group(m: usize) -> Result<Vec<DihedralElement>> {
    let rotations = (0..m).map(|k| DihedralElement::rotation(m, k));
    let reflections = (0..m).map(|k| DihedralElement::reflection(m, k));
    rotations.chain(reflections).collect()
}

/// Moves the coloring along `g`: the new color of arc `g(i)` is the old
/// color of arc `i`.
pub fn act_dihedral(g: &DihedralElement, c: &CycleColoring) -> Result<CycleColoring> {
    if g.m != c.m() {
        return Err(Error::DimensionMismatch {
            expected: c.m(),
            found: g.m,
        });
    }
    Ok(g.act_unchecked(c))
}

impl GroupAction<CycleColoring> for DihedralElement {
    fn act(&self, x: &CycleColoring) -> CycleColoring {
        self.act_unchecked(x)
    }

    fn fixes(&self, x: &CycleColoring) -> bool {
        (0..x.m()).all(|i| x.colors[self.map_arc(i)] == x.colors[i])
    }
}

/// A bijection of the color set `0..s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorPermutation {
    images: Vec<u8>,
}

impl ColorPermutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let s = images.len();
        if s == 0 || s > MAX_COLORS {
            return Err(invalid(format!("color count {s} outside 1..={MAX_COLORS}")));
        }
        let mut seen = vec![false; s];
        for &c in &images {
            let c = c as usize;
            if c >= s || seen[c] {
                return Err(invalid(format!(
                    "{images:?} is not a permutation of 0..{s}"
                )));
            }
            seen[c] = true;
        }
        Ok(ColorPermutation { images })
    }

    pub fn identity(s: usize) -> Result<Self> {
        Self::new((0..s as u8).collect())
    }

    pub fn s(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &c)| i == c as usize)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ColorPermutation) -> Result<ColorPermutation> {
        if self.s() != other.s() {
            return Err(Error::DimensionMismatch {
                expected: self.s(),
                found: other.s(),
            });
        }
        Ok(ColorPermutation {
            images: other
                .images
                .iter()
                .map(|&c| self.images[c as usize])
                .collect(),
        })
    }

    fn act_unchecked(&self, c: &CycleColoring) -> CycleColoring {
        CycleColoring {
            colors: c.colors.iter().map(|&x| self.images[x as usize]).collect(),
            s: c.s,
        }
    }
}

/// The full symmetric group on `s` colors in lexicographic order.
pub fn color_group(s: usize) -> Result<Vec<ColorPermutation>> {
    if s == 0 || s > MAX_PERMUTED_COLORS {
        return Err(Error::Capacity(format!(
            "symmetric group on {s} colors (supported: 1..={MAX_PERMUTED_COLORS})"
        )));
    }
    Ok((0..s as u8)
        .permutations(s)
        .map(|images| ColorPermutation { images })
        .collect())
}

pub fn act_color_symmetry(p: &ColorPermutation, c: &CycleColoring) -> Result<CycleColoring> {
    if p.s() != c.s() {
        return Err(Error::DimensionMismatch {
            expected: c.s(),
            found: p.s(),
        });
    }
    Ok(p.act_unchecked(c))
}

impl GroupAction<CycleColoring> for ColorPermutation {
    fn act(&self, x: &CycleColoring) -> CycleColoring {
        self.act_unchecked(x)
    }
}

/// A pair (dihedral element, color permutation) acting as "move, then
/// recolor". The two actions commute, so this is the product group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringSymmetry {
    pub motion: DihedralElement,
    pub recolor: ColorPermutation,
}

impl GroupAction<CycleColoring> for ColoringSymmetry {
    fn act(&self, x: &CycleColoring) -> CycleColoring {
        self.recolor.act_unchecked(&self.motion.act_unchecked(x))
    }

    // fixed iff the color moved to arc g(i) is the recolored color of arc i
    fn fixes(&self, x: &CycleColoring) -> bool {
        (0..x.m())
            .all(|i| x.colors[self.motion.map_arc(i)] == self.recolor.images[x.colors[i] as usize])
    }
}

/// The product of the dihedral group and the symmetric group on the colors,
/// `2m * s!` elements (`12m` for three colors).
pub fn combined_group(m: usize, s: usize) -> Result<Vec<ColoringSymmetry>> {
    let motions = dihedral_group(m)?;
    let recolors = color_group(s)?;
    Ok(motions
        .iter()
        .cartesian_product(recolors.iter())
        .map(|(g, p)| ColoringSymmetry {
            motion: *g,
            recolor: p.clone(),
        })
        .collect())
}

/// All proper colorings in lexicographic order of their color sequences.
pub fn enumerate_colorings(m: usize, s: usize) -> Result<Vec<CycleColoring>> {
    enumerate_colorings_within(m, s, &Budget::default())
}

pub fn enumerate_colorings_within(
    m: usize,
    s: usize,
    budget: &Budget,
) -> Result<Vec<CycleColoring>> {
    check_params(m, s)?;
    let sequences = (s as u128).checked_pow(m as u32);
    if m > u32::MAX as usize || sequences.is_none_or(|n| n > budget.coloring_sequences) {
        return Err(Error::Capacity(format!(
            "{s}^{m} color sequences exceed the budget of {}",
            budget.coloring_sequences
        )));
    }
    let mut out = Vec::new();
    let mut colors = vec![0u8; m];
    extend_coloring(&mut colors, 0, s as u8, &mut out);
    Ok(out)
}

fn extend_coloring(colors: &mut Vec<u8>, pos: usize, s: u8, out: &mut Vec<CycleColoring>) {
    let m = colors.len();
    if pos == m {
        out.push(CycleColoring {
            colors: colors.clone(),
            s,
        });
        return;
    }
    for c in 0..s {
        if pos > 0 && colors[pos - 1] == c {
            continue;
        }
        if pos == m - 1 && colors[0] == c {
            continue;
        }
        colors[pos] = c;
        extend_coloring(colors, pos + 1, s, out);
    }
}

/// Orbit count of colorings under a list of symmetries, certified by both
/// Burnside and a union-find partition. All parameters must match.
pub fn burnside_orbit_count<A>(elements: &[CycleColoring], group: &[A]) -> Result<u64>
where
    A: GroupAction<CycleColoring> + Sync + HasShape,
{
    if let Some(first) = elements.first() {
        for x in elements {
            if (x.m(), x.s()) != (first.m(), first.s()) {
                return Err(invalid("colorings of different shapes in one set"));
            }
        }
        for g in group {
            g.check_shape(first.m(), first.s())?;
        }
    }
    orbit::burnside_orbit_count(elements, group)
}

/// Parameter check used by [`burnside_orbit_count`].
pub trait HasShape {
    fn check_shape(&self, m: usize, s: usize) -> Result<()>;
}

impl HasShape for DihedralElement {
    fn check_shape(&self, m: usize, _s: usize) -> Result<()> {
        if self.m != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: self.m,
            });
        }
        Ok(())
    }
}

impl HasShape for ColorPermutation {
    fn check_shape(&self, _m: usize, s: usize) -> Result<()> {
        if self.s() != s {
            return Err(Error::DimensionMismatch {
                expected: s,
                found: self.s(),
            });
        }
        Ok(())
    }
}

impl HasShape for ColoringSymmetry {
    fn check_shape(&self, m: usize, s: usize) -> Result<()> {
        self.motion.check_shape(m, s)?;
        self.recolor.check_shape(m, s)
    }
}

// ---------------------------------------------------------------------------
// closed forms

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient, with `totient(1) = 1`.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let current = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(current.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

fn closed_form_params(m: u64, s: u64) -> Result<()> {
    if m < 2 {
        return Err(invalid(format!("closed forms need m >= 2, got {m}")));
    }
    if s < 2 {
        return Err(invalid(format!("closed forms need s >= 2, got {s}")));
    }
    if m > u32::MAX as u64 {
        return Err(invalid(format!("m = {m} is too large")));
    }
    Ok(())
}

/// `(s-1)^q + (-1)^q (s-1)` for any `q >= 0`. At `q = 0, 1` this is the
/// value the recurrences need (`s` and `0`), not a count of circle colorings.
fn a_term(q: u64, s: u64) -> BigInt {
    let base = BigInt::from(s - 1);
    let power = base.pow(q as u32);
    if q.is_multiple_of(2) {
        power + base
    } else {
        power - base
    }
}

fn to_natural(x: BigInt, what: &str) -> Result<BigUint> {
    x.to_biguint()
        .ok_or_else(|| inconsistent(format!("{what} evaluated to a negative number")))
}

fn exact_div(num: BigInt, den: u64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(inconsistent(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// `A_s(m) = (s-1)^m + (-1)^m (s-1)`, the number of proper `s`-colorings
/// of the circle with `m` arcs.
pub fn count_closed_form(m: u64, s: u64) -> Result<BigUint> {
    closed_form_params(m, s)?;
    to_natural(a_term(m, s), "A_s(m)")
}

/// `A(m) = 2^m + (-1)^m 2`.
pub fn count_a(m: u64) -> Result<BigUint> {
    count_closed_form(m, 3)
}

/// Dihedral orbits of proper `s`-colorings, via Burnside in closed form:
/// rotations contribute `sum_{2 <= d | m} phi(m/d) A_s(d)`; for even `m` the
/// `m/2` reflections through arc midpoints fix `s (s-1)^(m/2)` colorings
/// each, and the others fix none.
pub fn count_orbits_closed_form_b_scolor(m: u64, s: u64) -> Result<BigUint> {
    closed_form_params(m, s)?;
    let mut total = BigInt::zero();
    for d in divisors(m).into_iter().filter(|&d| d >= 2) {
        total += BigInt::from(totient(m / d)) * a_term(d, s);
    }
    if m.is_multiple_of(2) {
        total += BigInt::from(s) * BigInt::from(s - 1).pow((m / 2) as u32) * BigInt::from(m / 2);
    }
    to_natural(exact_div(total, 2 * m, "B_s(m)")?, "B_s(m)")
}

/// `B(m)`: dihedral orbits of proper 3-colorings.
pub fn count_orbits_closed_form_b(m: u64) -> Result<BigUint> {
    count_orbits_closed_form_b_scolor(m, 3)
}

fn alpha(g: u64) -> u64 {
    match g {
        1 => 1,
        2 => 3,
        3 => 2,
        6 => 4,
        _ => unreachable!("gcd with 6 is one of 1, 2, 3, 6"),
    }
}

fn beta(g: u64) -> u64 {
    match g {
        1 => 0,
        2 => 2,
        3 => 2,
        6 => 4,
        _ => unreachable!("gcd with 6 is one of 1, 2, 3, 6"),
    }
}

/// `C(m)`: classes of proper 3-colorings under the dihedral group and the
/// color permutations together.
///
/// The rotation part sums, over `d | m` with `g = gcd(m/d, 6)`,
/// `phi(m/d) (alpha(g) A(d) + beta(g) A(d-1)) / 6`; the reflection part is
/// `E(m) = (m/6) A((m+1)/2)` for odd `m` and `m 2^(m/2 - 1)` for even `m`.
/// The total is divided by `2m`. Every division is checked to be exact.
pub fn count_double_cosets_closed_form_c(m: u64) -> Result<BigUint> {
    closed_form_params(m, 3)?;
    let mut total = BigInt::zero();
    for d in divisors(m) {
        let g = (m / d).gcd(&6);
        let fixed =
            BigInt::from(alpha(g)) * a_term(d, 3) + BigInt::from(beta(g)) * a_term(d - 1, 3);
        total += BigInt::from(totient(m / d)) * exact_div(fixed, 6, "rotation term")?;
    }
    let reflections = if m % 2 == 1 {
        BigInt::from(m) * exact_div(a_term(m.div_ceil(2), 3), 6, "reflection term")?
    } else {
        BigInt::from(m) * BigInt::from(2u8).pow((m / 2 - 1) as u32)
    };
    total += reflections;
    to_natural(exact_div(total, 2 * m, "C(m)")?, "C(m)")
}

/// `3 * 2^(m-1)`, the right-hand side of `A(m) + A(m-1)`.
pub fn path_colorings(m: u64) -> BigUint {
    BigUint::from(3u8) * (BigUint::one() << (m - 1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rejects_improper_or_malformed() {
        assert_eq!(
            CycleColoring::three(vec![0, 0, 1]),
            Err(Error::ImproperColoring(0, 1))
        );
        assert_eq!(
            CycleColoring::three(vec![0, 1, 0]),
            Err(Error::ImproperColoring(2, 0))
        );
        assert!(CycleColoring::three(vec![0, 3]).is_err());
        assert!(CycleColoring::three(vec![0]).is_err());
        assert!(CycleColoring::new(vec![0, 1], 1).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_colorings(2, 3).unwrap().len(), 6);
        assert_eq!(enumerate_colorings(3, 3).unwrap().len(), 6);
        assert_eq!(enumerate_colorings(4, 3).unwrap().len(), 18);
        let all = enumerate_colorings(4, 3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
    }

    #[test]
    fn enumeration_respects_budget() {
        let tight = Budget {
            coloring_sequences: 81,
            ..Budget::default()
        };
        assert!(enumerate_colorings_within(4, 3, &tight).is_ok());
        assert!(matches!(
            enumerate_colorings_within(5, 3, &tight),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            enumerate_colorings(23, 3),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(count_closed_form(5, 3).unwrap(), big(30));
        assert_eq!(count_closed_form(2, 3).unwrap(), big(6));
        // brute force over 4^3 sequences gives 24
        assert_eq!(count_closed_form(3, 4).unwrap(), big(24));
        assert!(count_closed_form(1, 3).is_err());
        assert!(count_closed_form(4, 1).is_err());
    }

    #[test]
    fn b_examples() {
        assert_eq!(count_orbits_closed_form_b(4).unwrap(), big(6));
        assert_eq!(count_orbits_closed_form_b(6).unwrap(), big(13));
        assert_eq!(count_orbits_closed_form_b(9).unwrap(), big(29));
    }

    #[test]
    fn b_scolor_examples() {
        for m in 2..=20 {
            assert_eq!(
                count_orbits_closed_form_b_scolor(m, 3).unwrap(),
                count_orbits_closed_form_b(m).unwrap()
            );
        }
        assert_eq!(count_orbits_closed_form_b_scolor(4, 2).unwrap(), big(1));
        // Burnside oracle over the 732 proper 4-colorings of the hexagon
        assert_eq!(count_orbits_closed_form_b_scolor(6, 4).unwrap(), big(92));
    }

    #[test]
    fn c_examples() {
        assert_eq!(count_double_cosets_closed_form_c(5).unwrap(), big(1));
        assert_eq!(count_double_cosets_closed_form_c(8).unwrap(), big(8));
        assert_eq!(count_double_cosets_closed_form_c(12).unwrap(), big(48));
    }

    #[test]
    fn closed_forms_scale() {
        // 2^100 + 2
        let a = count_a(100).unwrap();
        assert_eq!(a, (BigUint::one() << 100usize) + big(2));
        assert!(count_orbits_closed_form_b(1000).is_ok());
        assert!(count_double_cosets_closed_form_c(997).is_ok());
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(97), 96);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        // brute-force totient
        for n in 1..200u64 {
            let brute = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(totient(n), brute);
        }
    }

    #[test]
    fn dihedral_action_examples() {
        let c = CycleColoring::three(vec![0, 1, 2, 1, 2]).unwrap();
        let id = DihedralElement::rotation(5, 0).unwrap();
        assert_eq!(act_dihedral(&id, &c).unwrap(), c);
        let full = DihedralElement::rotation(5, 5).unwrap();
        assert_eq!(act_dihedral(&full, &c).unwrap(), c);
        for k in 0..5 {
            let r = DihedralElement::reflection(5, k).unwrap();
            let once = act_dihedral(&r, &c).unwrap();
            assert_eq!(act_dihedral(&r, &once).unwrap(), c);
        }
        let one = DihedralElement::rotation(5, 1).unwrap();
        assert_eq!(act_dihedral(&one, &c).unwrap().colors(), &[2, 0, 1, 2, 1]);
        assert!(act_dihedral(&DihedralElement::rotation(4, 1).unwrap(), &c).is_err());
    }

    #[test]
    fn dihedral_composition_matches_arc_maps() {
        for m in 2..=7 {
            let group = dihedral_group(m).unwrap();
            assert_eq!(group.len(), 2 * m);
            for a in &group {
                for b in &group {
                    let ab = a.compose(b).unwrap();
                    for i in 0..m {
                        assert_eq!(ab.map_arc(i), a.map_arc(b.map_arc(i)));
                    }
                }
                let inv = a.inverse();
                assert_eq!(
                    a.compose(&inv).unwrap(),
                    DihedralElement::identity(m).unwrap()
                );
            }
        }
    }

    #[test]
    fn color_symmetry_examples() {
        let c = CycleColoring::three(vec![0, 1, 2]).unwrap();
        let id = ColorPermutation::identity(3).unwrap();
        assert_eq!(act_color_symmetry(&id, &c).unwrap(), c);
        let swap = ColorPermutation::new(vec![1, 0, 2]).unwrap();
        let twice = act_color_symmetry(&swap, &act_color_symmetry(&swap, &c).unwrap()).unwrap();
        assert_eq!(twice, c);
        let cycle = ColorPermutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(act_color_symmetry(&cycle, &c).unwrap().colors(), &[1, 2, 0]);
        assert!(ColorPermutation::new(vec![0, 0, 1]).is_err());
        assert!(ColorPermutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn burnside_examples() {
        let hexagon = enumerate_colorings(6, 3).unwrap();
        assert_eq!(
            burnside_orbit_count(&hexagon, &dihedral_group(6).unwrap()).unwrap(),
            13
        );
        let trivial = [DihedralElement::identity(6).unwrap()];
        assert_eq!(burnside_orbit_count(&hexagon, &trivial).unwrap(), 66);
        let heptagon = enumerate_colorings(7, 3).unwrap();
        let group = combined_group(7, 3).unwrap();
        assert_eq!(group.len(), 84);
        assert_eq!(burnside_orbit_count(&heptagon, &group).unwrap(), 3);
    }

    #[test]
    fn burnside_rejects_mismatched_group() {
        let square = enumerate_colorings(4, 3).unwrap();
        assert!(burnside_orbit_count(&square, &dihedral_group(5).unwrap()).is_err());
        // a lone reflection is not a group
        let lone = [DihedralElement::reflection(4, 1).unwrap()];
        assert!(burnside_orbit_count(&square, &lone).is_err());
    }

    #[test]
    fn recurrence_holds() {
        for m in 3..=30u64 {
            assert_eq!(
                count_a(m).unwrap() + count_a(m - 1).unwrap(),
                path_colorings(m)
            );
        }
    }

    #[test]
    fn two_color_colorings_of_even_cycles() {
        for m in (2..=12).step_by(2) {
            let all = enumerate_colorings(m, 3).unwrap();
            let two: Vec<_> = all
                .into_iter()
                .filter(|c| c.distinct_colors() == 2)
                .collect();
            assert_eq!(two.len(), 6);
            let dihedral = dihedral_group(m).unwrap();
            assert_eq!(orbit::partition(&two, &dihedral).unwrap().orbit_count(), 3);
            let combined = combined_group(m, 3).unwrap();
            assert_eq!(orbit::partition(&two, &combined).unwrap().orbit_count(), 1);
        }
        for m in (3..=11).step_by(2) {
            let all = enumerate_colorings(m, 3).unwrap();
            assert!(all.iter().all(|c| c.distinct_colors() == 3));
        }
    }

    #[test]
    fn color_action_is_free_on_three_colorings() {
        let recolors = color_group(3).unwrap();
        for m in 2..=9 {
            for c in enumerate_colorings(m, 3).unwrap() {
                for p in recolors.iter().filter(|p| !p.is_identity()) {
                    assert_ne!(p.act(&c), c);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn actions_commute_and_preserve_properness(
            m in 2usize..10,
            pick in 0usize..10_000,
            gi in 0usize..20,
            pi in 0usize..6,
        ) {
            let all = enumerate_colorings(m, 3).unwrap();
            let c = &all[pick % all.len()];
            let g = dihedral_group(m).unwrap()[gi % (2 * m)];
            let p = &color_group(3).unwrap()[pi];
            let moved = act_dihedral(&g, c).unwrap();
            let recolored = act_color_symmetry(p, c).unwrap();
            prop_assert!(CycleColoring::three(moved.colors().to_vec()).is_ok());
            prop_assert!(CycleColoring::three(recolored.colors().to_vec()).is_ok());
            prop_assert_eq!(
                act_color_symmetry(p, &moved).unwrap(),
                act_dihedral(&g, &recolored).unwrap()
            );
        }
    }

    #[test]
    fn fixed_point_shortcuts_match_images() {
        for m in [4, 5, 6] {
            let colorings = enumerate_colorings(m, 3).unwrap();
            for g in combined_group(m, 3).unwrap() {
                for c in &colorings {
                    assert_eq!(g.fixes(c), g.act(c) == *c);
                    assert_eq!(g.motion.fixes(c), g.motion.act(c) == *c);
                }
            }
        }
    }
}
