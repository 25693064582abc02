//! Exact model of the cyclotomic Hecke algebras of type `G(m,1,r)` over
//! the rationals and prime fields, together with their Specht modules,
//! standard bases, and branching behaviour.
//!
//! Everything is computed in exact arithmetic; verification routines
//! return structured reports rather than asserting internally, so callers
//! can inspect failures.

pub mod algebra;
pub mod branching;
pub mod coefficients;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod specht;
pub mod symmetric_group;

pub use error::Error;
