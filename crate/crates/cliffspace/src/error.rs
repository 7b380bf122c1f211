use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("operands belong to different quadric families")]
    FamilyMismatch,

    #[error("matrix {index} is not symmetric")]
    AsymmetricMatrix { index: usize },

    #[error("family matrices are linearly dependent; dependency vector {dependency:?}")]
    DependentMatrices { dependency: Vec<String> },

    #[error("algebra is not generated in degree 1: multiplication into degree {degree} is not surjective")]
    NotGenerated { degree: usize },

    #[error("not Frobenius shaped: {0}")]
    NotFrobeniusShaped(String),

    #[error("family has k = {k} quadrics but n = {n}; a minimal family requires k = n")]
    WrongFamilyShape { n: usize, k: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("family is not certified base-point free: {0}")]
    NotCertified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
