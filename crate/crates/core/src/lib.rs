//! Euler sums and multiple T-values: word algebras, regularized double
//! shuffle relations, generating-function identities and certified
//! high-precision evaluation.

pub mod algebra;
pub mod cli;
pub mod genfunc;
pub mod identity;
pub mod index;
pub mod lincomb;
pub mod numeric;
pub mod relations;

pub use algebra::RegPoly;
pub use identity::{Derivation, Identity};
pub use index::{
    parse_index, Index, IntegralWord, Letter, MtvIndex, Part, Sign, SignedComposition,
};
pub use lincomb::LinComb;
