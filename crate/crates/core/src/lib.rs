//! Numerical semigroups and the monomial curves they define.

pub mod ci;
pub mod deformation;
pub mod error;
pub mod factor;
pub mod knots;
pub mod linalg;
pub mod poly;
pub mod resolution;
pub mod semigroup;
pub mod series;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use semigroup::{BranchClass, FreeData, NumericInvariants, NumericalSemigroup};
