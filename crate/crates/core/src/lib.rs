//! Exact computations over numerical semigroup rings: monomial fractional
//! ideal arithmetic, semidualizing-module certificates, the multiplicity-9
//! face classification, Burch-ideal checks in truncated polynomial algebras,
//! and gluing constructions for higher multiplicity.
//!
//! Everything is exact (integer exponents, rational linear algebra) and
//! deterministic; all types are immutable values, safe to share across
//! threads.

pub mod error;
pub mod semigroup;
pub mod ideal;
pub mod kunz;
pub mod burch;
pub mod sdz;
pub mod glue;
pub mod fixtures;
pub mod reproduce;

pub use error::{Error, Result};
pub use ideal::{canonical_ideal, dual, MonomialFractionalIdeal};
pub use semigroup::{enumerate_semigroups, AperySet, KunzPoint, NumericalSemigroup, ResourceLimits};
