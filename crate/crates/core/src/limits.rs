use crate::error::{Error, Result};

/// Largest carrier for which subsets are packed into a `u64` mask.
pub const MASK_BITS: usize = 64;

/// Size caps for the exhaustive operations. Exceeding a cap is always an
/// error, never a silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset built by products and by Φ, and largest down-set lattice.
    pub max_size: usize,
    /// Largest poset whose down-sets are enumerated.
    pub max_downset_size: usize,
    /// Largest lattice whose prime ideals are enumerated.
    pub max_prime_size: usize,
    /// Largest poset whose order dimension is computed.
    pub max_dim_size: usize,
    /// Largest number of elements of a standard cube.
    pub max_cube_size: usize,
    /// Largest source lattice for homomorphism enumeration.
    pub max_hom_size: usize,
    /// Largest size handed to poset enumeration.
    pub max_enum_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: 1024,
            max_downset_size: 24,
            max_prime_size: 20,
            max_dim_size: 10,
            max_cube_size: 20,
            max_hom_size: 6,
            max_enum_size: 7,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, cap: usize, actual: usize) -> Result<()> {
    if actual > cap {
        Err(Error::CapExceeded { what, cap, actual })
    } else {
        Ok(())
    }
}

/// Like [`check_cap`] but also enforces the mask width.
pub(crate) fn check_mask_cap(what: &'static str, cap: usize, actual: usize) -> Result<()> {
    check_cap(what, cap.min(MASK_BITS), actual)
}
