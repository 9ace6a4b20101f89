//! Exact combinatorics, product states, limit laws and Fock-space calculus for
//! the monotone hierarchy, which interpolates between monotone (`m = 1`) and
//! free (`m = ∞`) independence.
//!
//! Everything that can be exact is generic over [`Scalar`] and is normally
//! used with [`Rational`]; analytic quantities (densities, atoms) are `f64`.

pub mod corpus;
pub mod error;
pub mod fock;
pub mod level;
pub mod partitions;
pub mod poly;
pub mod scalar;
pub mod spectra;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use level::Level;
pub use scalar::Scalar;

/// Exact arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Big integer used for counts.
pub type Count = num_bigint::BigUint;
