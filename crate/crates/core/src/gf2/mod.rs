//! Exact arithmetic over GF(2).
//!
//! Everything in this module is characteristic-two and exact; there is no
//! floating point anywhere. The variable conventions follow the evaluation
//! ring tower: `X1, X2, X3` in degree 2 generate the ambient polynomial
//! ring, `E1, E2, E3` (degrees 2, 4, 6) are the elementary symmetric
//! polynomials, and `E` (degree 6) is the single variable surviving the
//! base change that kills `E1` and `E2`.

mod base_change;
mod epoly;
mod fraction;
mod laurent;
mod matrix;
mod poly;
mod symmetric;

pub use base_change::{BaseChange, RingElem};
pub use epoly::EPoly;
pub use fraction::Gf2Fraction;
pub use laurent::Laurent;
pub use matrix::{
    det_epoly, gf2_rank, graded_rank, quotient_by_kernel, rank_over_fraction_field,
    rank_pivots_det, smith_normal_form, GradedMatrix, GradedRankReport,
};
pub use poly::Gf2Poly;
pub use symmetric::SymPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2RingError {
    /// Input to the symmetric rewrite was not invariant under S3; this
    /// signals a foam-evaluation bug upstream.
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    /// A graded matrix entry is not homogeneous of degree rowDeg + colDeg.
    #[error("invalid graded matrix: {0}")]
    InvalidMatrix(String),
}
