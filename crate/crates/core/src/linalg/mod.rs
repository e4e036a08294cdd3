//! Exact scalar fields, sparse matrices and homology dimensions.

mod elim;
mod field;
mod sparse;

pub use field::{is_prime, Field, Scalar};
pub use sparse::SparseMatrix;

use crate::error::{Error, Result};

/// Dimension of `ker(d_out) / im(d_in)` at the middle term of
/// `· --d_in--> V --d_out--> ·`.
///
/// Fails if the shapes do not meet at `V` or if `d_out * d_in != 0`.
pub fn homology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::Shape(format!(
            "incoming map lands in dimension {}, outgoing map starts from {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(Error::ComplexViolation("d_out * d_in is nonzero".into()));
    }
    Ok(d_in.rows() - d_out.rank() - d_in.rank())
}
