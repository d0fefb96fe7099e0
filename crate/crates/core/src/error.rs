use crate::subset::SubsetMask;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("element cap {cap} exceeded during enumeration")]
    CapExceeded { cap: usize },

    #[error("invalid subset {subset} (must be contained in {universe})")]
    InvalidSubset {
        subset: SubsetMask,
        universe: SubsetMask,
    },

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("character contexts differ (q, level, or lattice rank do not match)")]
    ContextMismatch,

    #[error("elements belong to different algebras (n = {0} vs n = {1})")]
    AlgebraMismatch(usize, usize),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("representations are over different fields")]
    FieldMismatch,

    #[error("search budget exhausted after {scanned} nodes (resume from {resume})")]
    BudgetExceeded { scanned: u64, resume: String },

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
