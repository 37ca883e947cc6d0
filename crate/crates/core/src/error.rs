//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Arithmetic on sections of different line bundles or surfaces.
    #[error("divisor class mismatch: {0} vs {1}")]
    ClassMismatch(String, String),

    /// A stored monomial does not lie in the declared graded piece.
    #[error("homogeneity violation: exponents {exps:?} do not match class {class} on F_{h}")]
    Homogeneity { exps: [u32; 4], class: String, h: u32 },

    /// Attempt to sample a section of a bundle with no sections.
    #[error("empty monomial basis for class {0}")]
    EmptyBasis(String),

    /// Fiber restriction at the excluded point (0:0).
    #[error("fiber point must be nonzero")]
    ZeroFiberPoint,

    /// The branch curve contains the negative section as a component.
    #[error("branch curve contains the negative section")]
    ContainsNegativeSection,

    /// Riemann-Hurwitz data that solves to a negative or fractional genus.
    #[error("inconsistent ramification data")]
    InconsistentRamification,

    /// A caller-facing parameter constraint failed; the message names the
    /// violated inequality.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// Resampling loops (generality, transversality) ran out of budget.
    #[error("retry budget exhausted after {attempts} attempts: {context}")]
    RetryExhausted { attempts: u32, context: String },

    /// No shear in the budget produced a consistent census.
    #[error("shape-position failure: increase shear attempts")]
    ShapePosition,

    /// The singular locus of the curve is not a finite set of points.
    #[error("singular locus is not isolated")]
    NonIsolatedSingularLocus,

    /// The fixed prime pool was not large enough for a reconstruction.
    #[error("modulus budget exhausted in exact reconstruction")]
    PrimesExhausted,

    /// Structurally invalid input file.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
