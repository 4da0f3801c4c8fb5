/// Bounds for the exponential-time routines. Exceeding one is reported as
/// [`Error::Resource`](crate::Error::Resource), never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order enumerated for Gauss sums and decompositions.
    pub max_sum_order: u128,
    /// Largest group order for exhaustive isomorphism search.
    pub max_iso_order: u128,
    /// Largest number of symmetric matrices produced by pairing enumeration.
    pub max_enumerated_matrices: u128,
    /// Largest number of free indices in a summand candidate family.
    pub max_free_indices: usize,
    /// Largest group order enumerated for one quadratic generator's Gauss sum.
    pub max_generator_order: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sum_order: 1 << 12,
            max_iso_order: 1 << 6,
            max_enumerated_matrices: 1 << 22,
            max_free_indices: 8,
            max_generator_order: 1 << 24,
        }
    }
}
