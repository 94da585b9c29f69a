//! Word algebras, regularization and double-shuffle relations.

mod dsh;
mod products;
mod regpoly;
mod regularize;
mod rho;

use thiserror::Error;

pub use dsh::{comparison_identity, dsh_identity};
pub use products::{shuffle, shuffle_compositions, shuffle_lin, stuffle, stuffle_lin};
pub use regpoly::RegPoly;
pub use regularize::{reg_shuffle, reg_stuffle};
pub use rho::{alpha, rho, RhoMap, DEFAULT_WEIGHT_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("weight {weight} exceeds the configured cap {cap}")]
    Capacity { weight: u32, cap: u32 },
}
