//! Finite posets, finite bounded distributive lattices, finite Priestley
//! duality, and the functor Φ that turns the ordering relation of a poset or
//! lattice into a poset or lattice in its own right.
//!
//! Everything is exact and exhaustive; the caps in [`Limits`] bound the size of
//! every search.

mod bits;
pub mod duality;
mod error;
pub mod lattice;
mod limits;
pub mod phi;
pub mod poset;

pub use bits::{from_members, members};
pub use duality::{
    clopen_downset_lattice, e_hom, prime_ideals, spec, spec_hom, unit_lattice, unit_space, DownsetLattice, MonotoneMap,
    PrimeIdeal, Spectrum, SpectrumMap,
};
pub use error::{Bound, Error, HomViolation, Result};
pub use lattice::{enumerate_homs, DistLattice, LatticeHom};
pub use limits::{Limits, MASK_BITS};
pub use phi::{
    dimension_report, factor_by_two, find_fixed_points, free_lattice_shift_check, in_image_of_phi, lemma51_iso,
    phi_hom, phi_lattice, phi_poset, primes_of_phi_closed_form, verify_corollary, FactorWitness, FixedPointMode,
    PhiCarrierMap,
};
pub use poset::{
    down_sets, enumerate_posets, is_isomorphic, linear_extensions, order_dimension, realizer, width, CanonicalCode,
    IsoWitness, Poset, StandardKind,
};
