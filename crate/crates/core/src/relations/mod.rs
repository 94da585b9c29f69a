//! Exact linear algebra over double-shuffle relations.

mod basis;
mod echelon;
mod system;

use thiserror::Error;

pub use basis::{Symbol, SymbolBasis};
pub use echelon::{rank_of, Echelon, Reduction, SparseRow};
pub use system::{
    check_membership, generate_dsh_system, rank, Certificate, Membership, RelationSystem, Row,
    SpanChecker, DEFAULT_WEIGHT_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationsError {
    #[error("weight {weight} exceeds the relation cap {cap}")]
    Capacity { weight: u32, cap: u32 },
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("relation cache: {0}")]
    Cache(String),
}
