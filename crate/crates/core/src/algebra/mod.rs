//! Exact coefficients, sparse linear combinations, tagged elements, exact
//! linear algebra, and the word-realization oracle.

pub mod element;
pub mod linalg;
pub mod lincomb;
pub mod words;

pub use element::{Basis, Element, Key, KeyKind, TensorElement};
pub use linalg::{intersection_dim, rank, same_span, Echelon};
pub use lincomb::{rat, rat_int, tensor, tensor_map, LinComb, Rational};
pub use words::{
    realize, realize_m, realize_tensor, split_bialphabet, split_paired, word_pattern, word_product,
    TensorWordPolynomial, Word, WordPolynomial, DEFAULT_CAP,
};

use crate::combinatorics::SetComposition;

/// An element of NCQSym written in the M basis.
pub type MComb = LinComb<SetComposition>;

/// An element of NCQSym ⊗ NCQSym written in M ⊗ M.
pub type MTensor = LinComb<(SetComposition, SetComposition)>;
