//! Pfaffian machinery for planar graphs: Kasteleyn orientations, exact
//! skew-symmetric determinants, integer square roots and perfect-matching
//! counts, plus a sparse modular Pfaffian for large matrices.

pub mod det;
pub mod matrix;
pub mod modular;
pub mod orientation;

use dpaths_graph::{Graph, PlanarEmbedding};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use det::{det_exact, isqrt_exact};
pub use matrix::{build_skew_matrix, SkewMatrix};
pub use modular::{crt_symmetric, primes_below, ModularPfaffian, PRIME_CEILING};
pub use orientation::{kasteleyn_orient, verify_orientation, Orientation};

/// Skew matrix over arbitrary-precision integers.
pub type BigSkewMatrix = SkewMatrix<BigInt>;
/// Nonnegative weighted matching count.
pub type BigCount = BigUint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PfaffianError {
    #[error("{0} is not a perfect square")]
    NotPerfectSquare(BigInt),
    #[error("determinant {0} of a skew matrix is negative")]
    NegativeDeterminant(BigInt),
}

/// Weighted perfect-matching count of `graph` with edge `e` weighted `s^length(e)`.
pub fn count_pm(
    graph: &Graph,
    embedding: &PlanarEmbedding,
    s: u64,
) -> Result<BigCount, PfaffianError> {
    if graph.vertex_count() % 2 == 1 {
        return Ok(BigCount::zero());
    }
    let orientation = kasteleyn_orient(graph, embedding);
    let m: BigSkewMatrix = build_skew_matrix(graph, &orientation, s);
    let det = det_exact(&m);
    if det.is_negative() {
        return Err(PfaffianError::NegativeDeterminant(det));
    }
    let root = isqrt_exact(&det)?;
    Ok(root.magnitude().clone())
}
