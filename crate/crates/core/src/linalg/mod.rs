//! Exact linear algebra over the rationals and prime fields.
//!
//! Subspaces are represented by matrices whose rows span them.

mod matrix;
mod plucker;
mod scalar;

pub use matrix::{in_span, subspace_intersection, Echelon, Matrix};
pub use plucker::{normalize, plucker, plucker_raw, support, Pluckers};
pub use scalar::{format_rational, parse_rational, Field, Scalar};
