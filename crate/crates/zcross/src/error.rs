//! Error types shared across the crate.

use thiserror::Error;

/// Errors reported by constructors, condensation, and verification.
#[derive(Debug, Error)]
pub enum ZcrossError {
    /// Input data is malformed (bad JSON, inconsistent dimensions,
    /// denominators of zero, and so on).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A mathematical precondition of the requested operation does not
    /// hold for this input.
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    /// The group has even order where odd order is required.
    #[error("even order: {0}")]
    EvenOrder(String),

    /// The quadratic or bilinear form is degenerate.
    #[error("degenerate form: {0}")]
    Degenerate(String),

    /// The lattice is not strongly even (an off-diagonal Gram entry is
    /// odd).
    #[error("not strongly even: {0}")]
    NotStronglyEven(String),

    /// The fixed-sublattice signature parameter is outside the range
    /// where a sign can be extracted (must be divisible by 4).
    #[error("bad fixed-part signature: {0}")]
    BadD0(String),

    /// A purported cocycle fails its cocycle identity.
    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    /// The subgroup is not stable under the relevant action or form.
    #[error("not stable: {0}")]
    NotStable(String),

    /// The subgroup is not isotropic for the quadratic form.
    #[error("not isotropic: {0}")]
    NotIsotropic(String),

    /// An equivariant fusion multiplicity came out non-integral.
    #[error("non-integer multiplicity: {0}")]
    NonIntegerMultiplicity(String),

    /// A promised exact value failed to certify during snapping.
    #[error(transparent)]
    Snap(#[from] crate::scalar::SnapError),
}

pub type Result<T> = std::result::Result<T, ZcrossError>;
