//! Orbit counting for finite group actions on finite sets.
//!
//! Two independent routes are provided: an explicit partition of the set
//! with a union-find over the supplied actions, and the Burnside average of
//! fixed-point counts. The partition only needs generators; Burnside needs
//! the whole group, listed once per element.

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{inconsistent, Result};

/// A group element acting on values of type `T`.
pub trait GroupAction<T> {
    fn act(&self, x: &T) -> T;

    /// Whether `x` is a fixed point; override to avoid building the image.
    fn fixes(&self, x: &T) -> bool
    where
        T: PartialEq,
    {
        self.act(x) == *x
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn set_size(&mut self, i: usize) -> usize {
        let r = self.find(i);
        self.size[r]
    }
}

/// The orbits of a set under a group, as found by union-find.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// `orbit_of[i]` is a dense orbit index for element `i`, numbered in
    /// order of first appearance.
    pub orbit_of: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    /// True when every orbit has `group_order` elements, i.e. every
    /// stabilizer is trivial.
    pub fn is_free(&self, group_order: usize) -> bool {
        self.orbit_sizes.iter().all(|&s| s == group_order)
    }
}

/// Partitions `elements` into orbits of the group generated by `actions`.
///
/// Fails if some action sends an element outside the set.
pub fn partition<T, A>(elements: &[T], actions: &[A]) -> Result<OrbitPartition>
where
    T: Eq + Hash,
    A: GroupAction<T>,
{
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != elements.len() {
        return Err(inconsistent("element list contains duplicates"));
    }
    let mut uf = UnionFind::new(elements.len());
    for (i, x) in elements.iter().enumerate() {
        for a in actions {
            let y = a.act(x);
            let j = *index
                .get(&y)
                .ok_or_else(|| inconsistent("an action leaves the element set"))?;
            uf.union(i, j);
        }
    }
    let mut dense = HashMap::new();
    let mut orbit_of = Vec::with_capacity(elements.len());
    let mut orbit_sizes = Vec::new();
    for i in 0..elements.len() {
        let root = uf.find(i);
        let next = dense.len();
        let o = *dense.entry(root).or_insert(next);
        if o == orbit_sizes.len() {
            orbit_sizes.push(0);
        }
        orbit_sizes[o] += 1;
        orbit_of.push(o);
    }
    Ok(OrbitPartition {
        orbit_of,
        orbit_sizes,
    })
}

/// `sum_g |X^g|` over the listed group elements.
pub fn fixed_point_total<T, A>(elements: &[T], group: &[A]) -> u64
where
    T: Eq + Sync,
    A: GroupAction<T> + Sync,
{
    group
        .par_iter()
        .map(|g| elements.iter().filter(|x| g.fixes(x)).count() as u64)
        .sum()
}

/// Burnside's count `(1/|G|) sum_g |X^g|`. A fixed-point total that is not
/// divisible by `|G|` means the list is not a group or the set is not
/// invariant.
pub fn burnside_count<T, A>(elements: &[T], group: &[A]) -> Result<u64>
where
    T: Eq + Sync,
    A: GroupAction<T> + Sync,
{
    if group.is_empty() {
        return Err(inconsistent("Burnside count over an empty group"));
    }
    let total = fixed_point_total(elements, group);
    let order = group.len() as u64;
    if !total.is_multiple_of(order) {
        return Err(inconsistent(format!(
            "fixed-point total {total} is not divisible by group order {order}"
        )));
    }
    Ok(total / order)
}

/// Orbit count certified by both routes: Burnside over the full `group`
/// and a union-find partition under the same elements. Disagreement is a
/// consistency error.
pub fn burnside_orbit_count<T, A>(elements: &[T], group: &[A]) -> Result<u64>
where
    T: Eq + Hash + Sync,
    A: GroupAction<T> + Sync,
{
    let by_burnside = burnside_count(elements, group)?;
    let by_partition = partition(elements, group)?.orbit_count() as u64;
    if by_burnside != by_partition {
        return Err(inconsistent(format!(
            "Burnside gives {by_burnside} orbits but the partition gives {by_partition}"
        )));
    }
    Ok(by_burnside)
}
