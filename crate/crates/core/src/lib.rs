//! Exact computation of the E1/E2 pages of the truncated Sinha spectral
//! sequence for long knots in R^3, the chord-diagram spaces `A_n` modulo
//! the 1T and 4T relations, and the diagonal comparison between the two.

pub mod algebra;
pub mod chord;
pub mod error;
pub mod linalg;
pub mod report;
pub mod sinha;

pub use error::{Error, Result};
pub use linalg::{Field, Scalar, SparseMatrix};
