//! Exact computation in NCQSym, the peak algebra NCΠ, NCSym and NCΩ, the
//! descent-to-peak map Θ, and verifiers for the identities relating them.
//!
//! Everything is exact: coefficients are [`algebra::Rational`]s and every
//! algebraic operation can be checked against the word-realization oracle in
//! [`algebra::words`].

pub mod algebra;
pub mod combinatorics;
pub mod convert;
pub mod error;
pub mod identities;
pub mod ncpeak;
pub mod ncqsym;
pub mod ncsym;
pub mod posets;
pub mod text;
pub mod theta;

pub use error::{Error, Result};
