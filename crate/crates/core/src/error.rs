//! Crate-wide error type.
//!
//! Variants are split into input/precondition failures (a caller handed us
//! data outside an operation's contract) and internal consistency failures
//! (two independent routes to the same object disagreed, which indicates a
//! bug rather than bad input).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polar duality requested for a polytope that does not span its ambient space.
    NotFullDimensional,
    /// Polar duality or face duality requested but 0 is not an interior point.
    OriginNotInterior,
    /// Two polytopes with different ambient dimensions were combined.
    DimensionMismatch { left: usize, right: usize },
    /// A section polytope or candidate polytope is unbounded.
    Unbounded,
    /// The w_t = 1 slice of a Groebner cone is unbounded (failed genericity).
    UnboundedSlice,
    /// Candidate deformation polytope unbounded (degenerate grading).
    UnboundedCandidatePolytope,
    /// The input polytope is not Fano (non-integral, or 0 is not the unique
    /// interior lattice point).
    NotFano(String),
    /// A nef-partition block divisor failed the Cartier test.
    NotCartier(String),
    /// The ray blocks do not form a partition, or a block divisor is not nef.
    InvalidNefPartition(String),
    /// A degeneration block admits no section outside the special-fiber ideal.
    EmptySupport { block: usize },
    /// A complex expected to be equidimensional is not.
    NotEquidimensional,
    /// Sphere proxy checks rejected the input complex.
    SphereCheckFailed(String),
    /// The generator form and the facet-intersection form of the mirror
    /// ideal disagree; internal consistency failure.
    FormsDisagree(String),
    /// The combinatorial and prevariety tropical face tests disagree;
    /// internal consistency failure.
    TropicalTestsDisagree(String),
    /// Accepted tropical faces are not closed under superfaces even though
    /// the Minkowski-sum test passed; internal consistency failure.
    NotFaceOfDelta(String),
    /// Two independent routes to the same object disagree (for example the
    /// cone slice against the polar of the deformation hull).
    ConsistencyFailure(String),
    /// No multiple of a mirror generator class admits a Cartier representative.
    NoCartierMultiple(String),
    /// Malformed input data (bad exponents, ragged matrices, label mismatch).
    InvalidInput(String),
}

impl Error {
    /// True for failures that indicate a bug in the implementation rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::FormsDisagree(_)
                | Error::TropicalTestsDisagree(_)
                | Error::NotFaceOfDelta(_)
                | Error::ConsistencyFailure(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotFullDimensional => write!(f, "polytope is not full-dimensional"),
            Error::OriginNotInterior => write!(f, "origin is not an interior point"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {} vs {}", left, right)
            }
            Error::Unbounded => write!(f, "polyhedron is unbounded"),
            Error::UnboundedSlice => write!(f, "w_t = 1 slice of the cone is unbounded"),
            Error::UnboundedCandidatePolytope => {
                write!(f, "candidate deformation polytope is unbounded")
            }
            Error::NotFano(msg) => write!(f, "polytope is not Fano: {}", msg),
            Error::NotCartier(msg) => write!(f, "divisor is not Cartier: {}", msg),
            Error::InvalidNefPartition(msg) => write!(f, "invalid nef partition: {}", msg),
            Error::EmptySupport { block } => {
                write!(f, "degeneration block {} has empty section support", block)
            }
            Error::NotEquidimensional => write!(f, "complex is not equidimensional"),
            Error::SphereCheckFailed(msg) => write!(f, "sphere proxy check failed: {}", msg),
            Error::FormsDisagree(msg) => {
                write!(f, "mirror ideal forms disagree (internal): {}", msg)
            }
            Error::TropicalTestsDisagree(msg) => {
                write!(f, "tropical face tests disagree (internal): {}", msg)
            }
            Error::NotFaceOfDelta(msg) => {
                write!(f, "tropical face closure violated (internal): {}", msg)
            }
            Error::ConsistencyFailure(msg) => {
                write!(f, "consistency failure (internal): {}", msg)
            }
            Error::NoCartierMultiple(msg) => {
                write!(f, "no Cartier multiple found for class: {}", msg)
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
