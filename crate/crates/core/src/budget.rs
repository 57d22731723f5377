/// Limits on exhaustive enumeration. Exceeding any of them is reported as
/// [`Error::Capacity`](crate::Error::Capacity) rather than attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Bound on `s^m`, the number of raw color sequences behind a cycle
    /// coloring enumeration. The default admits `m <= 22` at `s = 3`.
    pub coloring_sequences: u128,
    /// Bound on the facet count of a poset whose characteristic functions
    /// are enumerated.
    pub facets: usize,
    /// Bound on the facet count for brute-force automorphism search over
    /// all facet permutations.
    pub permutation_facets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            coloring_sequences: 3u128.pow(22),
            facets: 24,
            permutation_facets: 9,
        }
    }
}
