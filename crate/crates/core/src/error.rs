use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial universe mismatch: {left} vs {right} variables")]
    UniverseMismatch { left: usize, right: usize },

    #[error("vertex label {label} out of range for graph with vertex set of size {n}")]
    InvalidVertex { label: usize, n: usize },

    #[error("invalid edge {{{i}, {j}}}")]
    InvalidEdge { i: usize, j: usize },

    #[error("a path needs at least one vertex; use Graph::edgeless(0) for the empty graph")]
    EmptyPath,

    #[error("expected a squarefree monomial, got {0}")]
    NotSquarefree(String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph has {actual} vertices, exceeding the cover enumeration cap {cap}")]
    CoverEnumerationCap { actual: usize, cap: usize },

    #[error("{count} s-fold products exceed the enumeration cap {cap}")]
    ProductCap { count: u128, cap: u128 },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("rooted list construction produced duplicate generator {0}")]
    DuplicateGenerator(String),

    #[error("{0} is not an s-fold product of the given generators")]
    NotPowerProduct(String),

    #[error("the pairwise characterization applies to path-rooted generator lists only")]
    PairsRequiresPathList,

    #[error("invalid chooser script: {0}")]
    InvalidChooser(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("the regularity formula requires n >= 2, got n = {n}")]
    RegularityDomain { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
