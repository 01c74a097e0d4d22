use alloc::string::String;

use crate::lattice::LatticeError;

/// Errors from the representation-theoretic layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arrow `{arrow}` refers to undeclared vertex {vertex}")]
    UndefinedVertex { arrow: String, vertex: usize },
    #[error("relation {relation}: path {path} is not composable")]
    NonComposablePath { relation: usize, path: usize },
    #[error("relation {relation}: paths do not share source and target")]
    NonParallelRelation { relation: usize },
    #[error("relation {relation}: path {path} has length < 2")]
    NonAdmissibleRelation { relation: usize, path: usize },
    #[error("relation {relation} has no nonzero terms")]
    EmptyRelation { relation: usize },
    #[error("ideal does not contain all paths of length <= {0}; algebra is not finite dimensional")]
    NotFiniteDimensional(usize),
    #[error("representation shape does not match the quiver: {0}")]
    ShapeMismatch(String),
    #[error("representation violates relation {0}")]
    RelationViolated(usize),
    #[error("End has dimension {dim}; enumerating p^{dim} endomorphisms exceeds cap {cap}")]
    EndTooLarge { dim: usize, cap: u64 },
    #[error("Hom has dimension {dim}; enumerating p^{dim} maps exceeds cap {cap}")]
    HomTooLarge { dim: usize, cap: u64 },
    #[error("Ext has dimension {dim}; enumerating p^{dim} classes exceeds cap {cap}")]
    ExtTooLarge { dim: usize, cap: u64 },
    #[error("{what}: {needed} candidates exceed cap {cap}")]
    CapExceeded { what: &'static str, needed: u64, cap: u64 },
    #[error("enumeration of dimension vector {dims:?} needs {needed} matrix tuples; budget is {budget}")]
    BudgetExceeded { dims: alloc::vec::Vec<usize>, needed: u64, budget: u64 },
    #[error("operation needs a hereditary algebra")]
    NotHereditary,
    #[error("indecomposable summand with dimension vector {0:?} is not in the catalog")]
    NotInCatalog(alloc::vec::Vec<usize>),
    #[error("catalog is incomplete: {0}")]
    IncompleteCatalog(String),
    #[error("cover {lower} < {upper} has {count} candidate labels")]
    LabelNotUnique { lower: usize, upper: usize, count: usize },
    #[error("semibricks {first:?} and {second:?} generate the same torsion class")]
    SemibrickCollision { first: alloc::vec::Vec<usize>, second: alloc::vec::Vec<usize> },
    #[error("subcategory is not wide")]
    NotWide,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Enumeration caps. Every brute-force loop checks one of these before it
/// starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Endomorphisms enumerated for brick / indecomposability tests.
    pub end: u64,
    /// Homomorphisms enumerated for iso tests, kernels and cokernels.
    pub hom: u64,
    /// Ext¹ class representatives.
    pub ext: u64,
    /// Candidate subspace tuples when listing submodules.
    pub submodules: u64,
    /// Matrix tuples per dimension vector when building a catalog.
    pub enumeration: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { end: 1 << 16, hom: 4096, ext: 4096, submodules: 1 << 16, enumeration: 1 << 22 }
    }
}

impl Budget {
    /// Every cap set to `n`.
    pub fn uniform(n: u64) -> Budget {
        Budget { end: n, hom: n, ext: n, submodules: n, enumeration: n }
    }
}
