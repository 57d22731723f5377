//! Linear algebra over the two-element field.
//!
//! A vector of `(Z/2)^n` is an `n`-bit mask where bit `k` is coordinate `k`;
//! addition is XOR. Matrices are stored by columns, so applying a matrix to a
//! vector XORs together the columns selected by the vector's bits.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{invalid, Error, Result};

/// Largest rank a [`Gf2Vector`] may carry.
pub const MAX_RANK: usize = 16;

/// Largest rank for which [`enumerate_gl`] materializes the whole group.
pub const GL_ENUMERATION_MAX_RANK: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    rank: u8,
    bits: u16,
}

impl Gf2Vector {
    pub fn new(rank: usize, bits: u32) -> Result<Self> {
        check_rank(rank)?;
        if bits >> rank != 0 {
            return Err(invalid(format!(
                "bit mask {bits:#b} has bits outside rank {rank}"
            )));
        }
        Ok(Gf2Vector {
            rank: rank as u8,
            bits: bits as u16,
        })
    }

    pub fn zero(rank: usize) -> Result<Self> {
        Self::new(rank, 0)
    }

    /// The standard basis vector `e_{k+1}` (zero-based index `k`).
    pub fn basis(rank: usize, k: usize) -> Result<Self> {
        if k >= rank {
            return Err(invalid(format!(
                "basis index {k} out of range for rank {rank}"
            )));
        }
        Self::new(rank, 1 << k)
    }

    /// All nonzero vectors of the given rank in increasing bit-mask order.
    pub fn nonzero(rank: usize) -> Result<impl Iterator<Item = Gf2Vector>> {
        check_rank(rank)?;
        Ok((1u32..(1u32 << rank)).map(move |bits| Gf2Vector {
            rank: rank as u8,
            bits: bits as u16,
        }))
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits as u32
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn coordinate(&self, k: usize) -> bool {
        k < self.rank() && (self.bits >> k) & 1 == 1
    }

    pub fn checked_add(self, other: Gf2Vector) -> Result<Gf2Vector> {
        same_rank(self.rank(), other.rank())?;
        Ok(self + other)
    }
}

impl Add for Gf2Vector {
    type Output = Gf2Vector;

    /// Coordinatewise sum. Panics in debug builds if the ranks differ; use
    /// [`Gf2Vector::checked_add`] for untrusted input.
    fn add(self, other: Gf2Vector) -> Gf2Vector {
        debug_assert_eq!(self.rank, other.rank);
        Gf2Vector {
            rank: self.rank,
            bits: self.bits ^ other.bits,
        }
    }
}

impl AddAssign for Gf2Vector {
    fn add_assign(&mut self, other: Gf2Vector) {
        *self = *self + other;
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Coordinates from first to last, e.g. `e1 + e3` in rank 3 prints as `101`.
impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.rank() {
            f.write_str(if self.coordinate(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 || rank > MAX_RANK {
        return Err(invalid(format!("rank {rank} outside 1..={MAX_RANK}")));
    }
    Ok(())
}

fn same_rank(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Dimension of the span of `vectors`.
pub fn rank(vectors: &[Gf2Vector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    for v in vectors {
        same_rank(first.rank(), v.rank())?;
    }
    Ok(rank_of_masks(vectors.iter().map(|v| v.bits())))
}

/// Rank of raw bit masks by elimination on leading bits. Callers guarantee
/// a common width.
pub(crate) fn rank_of_masks(masks: impl IntoIterator<Item = u32>) -> usize {
    // pivots[b] holds a reduced vector whose highest set bit is b
    let mut pivots = [0u32; 32];
    let mut r = 0;
    for mut v in masks {
        while v != 0 {
            let top = 31 - v.leading_zeros() as usize;
            if pivots[top] == 0 {
                pivots[top] = v;
                r += 1;
                break;
            }
            v ^= pivots[top];
        }
    }
    r
}

/// Whether the vectors are linearly independent (so in particular distinct
/// and nonzero).
pub fn is_independent(vectors: &[Gf2Vector]) -> Result<bool> {
    Ok(rank(vectors)? == vectors.len())
}

/// A square matrix over Z/2, stored as its columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    columns: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn from_columns(columns: Vec<Gf2Vector>) -> Result<Self> {
        let n = columns.len();
        check_rank(n)?;
        for c in &columns {
            same_rank(n, c.rank())?;
        }
        Ok(Gf2Matrix { columns })
    }

    /// Builds a matrix from column bit masks.
    pub fn from_column_bits(n: usize, bits: &[u32]) -> Result<Self> {
        if bits.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bits.len(),
            });
        }
        let columns = bits
            .iter()
            .map(|&b| Gf2Vector::new(n, b))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(columns)
    }

    /// Builds a matrix from row-major entries, `rows[i][j]` being entry `(i, j)`.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        let mut bits = vec![0u32; n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &entry) in row.iter().enumerate() {
                if entry {
                    bits[j] |= 1 << i;
                }
            }
        }
        Self::from_column_bits(n, &bits)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let columns = (0..n)
            .map(|k| Gf2Vector::basis(n, k))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(columns)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Gf2Vector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.columns[col].coordinate(row)
    }

    pub fn is_invertible(&self) -> bool {
        rank_of_masks(self.columns.iter().map(|c| c.bits())) == self.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(k, c)| c.bits() == 1 << k)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: Gf2Vector) -> Result<Gf2Vector> {
        same_rank(self.rank(), v.rank())?;
        Ok(self.apply_unchecked(v))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, v: Gf2Vector) -> Gf2Vector {
        Gf2Vector {
            rank: self.rank() as u8,
            bits: self.apply_bits(v.bits()) as u16,
        }
    }

    /// Applies the matrix to a raw bit mask of matching width.
    #[inline]
    pub(crate) fn apply_bits(&self, mut v: u32) -> u32 {
        let mut out = 0;
        let mut k = 0;
        while v != 0 {
            if v & 1 == 1 {
                out ^= self.columns[k].bits();
            }
            v >>= 1;
            k += 1;
        }
        out
    }

    /// The product `self * other`, i.e. apply `other` first.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        same_rank(self.rank(), other.rank())?;
        Ok(Gf2Matrix {
            columns: other
                .columns
                .iter()
                .map(|&c| self.apply_unchecked(c))
                .collect(),
        })
    }

    /// Inverse by Gauss-Jordan elimination on rows augmented with the identity.
    pub fn inverse(&self) -> Result<Gf2Matrix> {
        let n = self.rank();
        // row i: low n bits are row i of self, high n bits row i of the identity
        let mut rows: Vec<u32> = (0..n)
            .map(|i| {
                let mut r = 0u32;
                for j in 0..n {
                    if self.entry(i, j) {
                        r |= 1 << j;
                    }
                }
                r | (1 << (n + i))
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| (rows[i] >> col) & 1 == 1)
                .ok_or(Error::Singular)?;
            rows.swap(col, pivot);
            for i in 0..n {
                if i != col && (rows[i] >> col) & 1 == 1 {
                    rows[i] ^= rows[col];
                }
            }
        }
        let mut bits = vec![0u32; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, b) in bits.iter_mut().enumerate() {
                if (row >> (n + j)) & 1 == 1 {
                    *b |= 1 << i;
                }
            }
        }
        Self::from_column_bits(n, &bits)
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order(&self) -> Result<usize> {
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.mul(self)?;
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.columns.iter()).finish()
    }
}

/// `|GL(n, Z/2)| = prod_{k=1..n} (2^n - 2^(k-1))`, when it fits in a `u128`.
pub fn gl_order(n: usize) -> Option<u128> {
    if n == 0 || n > MAX_RANK {
        return None;
    }
    (0..n).try_fold(1u128, |acc, k| {
        let term = (1u128 << n) - (1u128 << k);
        acc.checked_mul(term)
    })
}

/// Every invertible `n x n` matrix over Z/2, exactly once, in lexicographic
/// order of the column bit masks.
///
/// Columns are chosen one at a time outside the span of the earlier ones,
/// which mirrors the product formula in [`gl_order`].
pub fn enumerate_gl(n: usize) -> Result<Vec<Gf2Matrix>> {
    if n == 0 || n > GL_ENUMERATION_MAX_RANK {
        return Err(Error::Capacity(format!(
            "GL(n, Z/2) enumeration supports 1 <= n <= {GL_ENUMERATION_MAX_RANK}, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(gl_order(n).unwrap_or(0) as usize);
    let mut columns = Vec::with_capacity(n);
    extend_basis(n, &mut columns, 1, &mut out);
    Ok(out)
}

// `span` is the set of span members as a bitset indexed by vector mask.
fn extend_basis(n: usize, columns: &mut Vec<u32>, span: u64, out: &mut Vec<Gf2Matrix>) {
    if columns.len() == n {
        out.push(Gf2Matrix {
            columns: columns
                .iter()
                .map(|&b| Gf2Vector {
                    rank: n as u8,
                    bits: b as u16,
                })
                .collect(),
        });
        return;
    }
    for c in 1u32..(1 << n) {
        if (span >> c) & 1 == 1 {
            continue;
        }
        let mut shifted = 0u64;
        for s in 0u32..(1 << n) {
            if (span >> s) & 1 == 1 {
                shifted |= 1 << (s ^ c);
            }
        }
        columns.push(c);
        extend_basis(n, columns, span | shifted, out);
        columns.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(n: usize, bits: u32) -> Gf2Vector {
        Gf2Vector::new(n, bits).unwrap()
    }

    #[test]
    fn vector_rejects_stray_bits_and_bad_rank() {
        assert!(Gf2Vector::new(2, 0b100).is_err());
        assert!(Gf2Vector::new(0, 0).is_err());
        assert!(Gf2Vector::new(17, 1).is_err());
        assert!(Gf2Vector::new(16, 0xffff).is_ok());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[]).unwrap(), 0);
        let (e1, e2, e3) = (v(3, 1), v(3, 2), v(3, 4));
        assert_eq!(rank(&[e1, e2, e1 + e2]).unwrap(), 2);
        assert_eq!(rank(&[e1, e2, e3]).unwrap(), 3);
    }

    #[test]
    fn rank_rejects_mixed_ranks() {
        assert_eq!(
            rank(&[v(2, 1), v(3, 1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn independence_examples() {
        let (e1, e2, e3) = (v(3, 1), v(3, 2), v(3, 4));
        assert!(is_independent(&[e1 + e2 + e3, e3]).unwrap());
        assert!(!is_independent(&[e1, e1]).unwrap());
        assert!(!is_independent(&[e1, e2, e1 + e2]).unwrap());
        assert!(!is_independent(&[Gf2Vector::zero(3).unwrap()]).unwrap());
    }

    #[test]
    fn gl_counts_match_product_formula() {
        assert_eq!(enumerate_gl(1).unwrap().len(), 1);
        assert_eq!(enumerate_gl(2).unwrap().len(), 6);
        assert_eq!(enumerate_gl(3).unwrap().len(), 168);
        for n in 1..=4 {
            let all = enumerate_gl(n).unwrap();
            assert_eq!(all.len() as u128, gl_order(n).unwrap());
            assert!(all.iter().all(Gf2Matrix::is_invertible));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all, "distinct and lexicographically ordered");
        }
    }

    #[test]
    fn gl_rejects_out_of_range() {
        assert!(matches!(enumerate_gl(0), Err(Error::Capacity(_))));
        assert!(matches!(enumerate_gl(5), Err(Error::Capacity(_))));
    }

    #[test]
    fn gl2_element_orders() {
        let orders: Vec<usize> = enumerate_gl(2)
            .unwrap()
            .iter()
            .map(|m| m.order().unwrap())
            .collect();
        assert_eq!(orders.iter().filter(|&&o| o == 1).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
    }

    #[test]
    fn apply_examples() {
        let id = Gf2Matrix::identity(2).unwrap();
        assert_eq!(id.apply(v(2, 3)).unwrap(), v(2, 3));
        let swap = Gf2Matrix::from_column_bits(2, &[0b10, 0b01]).unwrap();
        assert_eq!(swap.apply(v(2, 1)).unwrap(), v(2, 2));
        let shear = Gf2Matrix::from_column_bits(2, &[0b11, 0b10]).unwrap();
        assert_eq!(shear.apply(v(2, 1)).unwrap(), v(2, 3));
        assert!(shear.apply(v(3, 1)).is_err());
    }

    #[test]
    fn from_rows_reads_row_major() {
        // [[1,1],[0,1]]: column 0 = e1, column 1 = e1 + e2
        let m = Gf2Matrix::from_rows(&[vec![true, true], vec![false, true]]).unwrap();
        assert_eq!(m.columns(), &[v(2, 0b01), v(2, 0b11)]);
    }

    #[test]
    fn inverse_of_singular_fails() {
        let m = Gf2Matrix::from_column_bits(2, &[0b11, 0b11]).unwrap();
        assert!(!m.is_invertible());
        assert_eq!(m.inverse(), Err(Error::Singular));
    }

    #[test]
    fn inverses_in_gl3() {
        let id = Gf2Matrix::identity(3).unwrap();
        for m in enumerate_gl(3).unwrap() {
            let inv = m.inverse().unwrap();
            assert_eq!(m.mul(&inv).unwrap(), id);
            assert_eq!(inv.mul(&m).unwrap(), id);
        }
    }

    #[test]
    fn apply_is_a_group_action() {
        for n in 1..=3 {
            let all = enumerate_gl(n).unwrap();
            for a in &all {
                for b in &all {
                    let ab = a.mul(b).unwrap();
                    for bits in 0..(1u32 << n) {
                        let x = v(n, bits);
                        assert_eq!(ab.apply(x).unwrap(), a.apply(b.apply(x).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rank_invariant_under_invertible_maps(
            idx in 0usize..168,
            masks in proptest::collection::vec(0u32..8, 0..6),
        ) {
            let g = &enumerate_gl(3).unwrap()[idx];
            let vs: Vec<_> = masks.iter().map(|&b| v(3, b)).collect();
            let moved: Vec<_> = vs.iter().map(|&x| g.apply(x).unwrap()).collect();
            prop_assert_eq!(rank(&vs).unwrap(), rank(&moved).unwrap());
        }
    }
}
