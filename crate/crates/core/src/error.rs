use thiserror::Error;

/// Which bound a lattice or homomorphism check failed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Bottom,
    Top,
}

/// Why a candidate map is not a (0,1)-lattice homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomViolation {
    WrongLength { expected: usize, actual: usize },
    OutOfRange { element: usize, image: usize },
    Bound(Bound),
    Meet { a: usize, b: usize },
    Join { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("relation is not antisymmetric: {0} <= {1} <= {0}")]
    AntisymmetryViolation(usize, usize),
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("relation matrix has {actual} entries, expected {expected}")]
    MatrixShape { expected: usize, actual: usize },
    #[error("{what}: {actual} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },
    #[error("operation requires a nonempty poset")]
    EmptyPoset,
    #[error("poset has no {0:?} element")]
    Unbounded(Bound),
    #[error("not a lattice: elements {a} and {b} have no {missing}")]
    NotALattice { a: usize, b: usize, missing: &'static str },
    #[error("not distributive: {0} ∧ ({1} ∨ {2}) ≠ ({0} ∧ {1}) ∨ ({0} ∧ {2})")]
    NotDistributive(usize, usize, usize),
    #[error("degenerate bounds: bottom equals top")]
    DegenerateBounds,
    #[error("not a (0,1)-lattice homomorphism: {0:?}")]
    NotHomomorphism(HomViolation),
    #[error("map is not order-preserving: {0} <= {1} but images are unrelated")]
    NotOrderPreserving(usize, usize),
    #[error("map is not an order isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for the three errors that mean "this poset is not a bounded lattice".
    pub fn is_not_a_lattice(&self) -> bool {
        matches!(self, Error::Unbounded(_) | Error::NotALattice { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
