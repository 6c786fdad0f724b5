//! Exact solver for shortest disjoint A,B-paths on planar graphs of maximum
//! degree three. Optimum length and number of optimal solutions come from
//! the leading monomial of a signed sum of gadget-graph matching polynomials.

pub mod engine;
pub mod modular_interp;
pub mod poly;
pub mod prepare;
pub mod solve;
pub mod witness;

use dpaths_graph::{EdgeId, EmbeddingError, PlanarityError, ValidationReport};
use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub use engine::{Engine, WorkEstimate};
pub use poly::{interpolate, PolyCoeffs};
pub use prepare::{prepare, prepare_with_lengths, Part, Prepared};
pub use solve::{evaluate_p, solve, solve_prepared, ComponentReport, SolveOptions, SolveReport};
pub use witness::{enumerate_witnesses, path_system_length, sample, witness, SolutionIndex};

/// Exact solution count.
pub type BigCount = BigUint;
/// Signed polynomial coefficient.
pub type Coefficient = BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSummary {
    /// Optimal total length, `None` when no solution exists.
    pub length: Option<u64>,
    pub count: BigCount,
    pub witness: Option<Vec<EdgeId>>,
}

impl SolutionSummary {
    pub fn infeasible() -> Self {
        SolutionSummary {
            length: None,
            count: BigCount::default(),
            witness: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("invalid instance: {0}")]
    Validation(ValidationReport),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("supplied rotation system is invalid: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("interpolation points must be s = 0, 1, 2, ...")]
    InterpolationPoints,
    #[error("interpolated coefficient of degree {degree} is not an integer")]
    NonIntegerCoefficient { degree: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("estimated work {estimate:.3e} exceeds the configured limit {limit:.3e}")]
    CapacityExceeded { estimate: f64, limit: f64 },
    #[error("index {index} is outside 1..={count}")]
    IndexOutOfRange { index: BigUint, count: BigUint },
    #[error("instance has no solution")]
    Infeasible,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl From<PlanarityError> for SolveError {
    fn from(err: PlanarityError) -> Self {
        match err {
            PlanarityError::NonPlanar => SolveError::NonPlanar,
            PlanarityError::NotSimple => {
                SolveError::InternalInconsistency("graph is not simple".into())
            }
        }
    }
}
