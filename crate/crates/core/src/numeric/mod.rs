//! High-precision evaluation with certified error bounds.

mod evaluator;
mod holder;
mod oracle;
mod real;

use thiserror::Error;

pub use evaluator::{
    eval_euler, eval_mtv, eval_regpoly, EvalResult, Evaluator, PrecisionCtx, DEFAULT_GUARD,
    DEFAULT_MAX_TERMS,
};
pub use oracle::oracle_partial_sum;
pub use real::{format_magnitude, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("non-admissible index {0}")]
    NotAdmissible(String),
    #[error("requested {0} digits; at least 10 are required")]
    Precision(u32),
    #[error(
        "precision not reachable: {needed} terms needed, cap {cap}, achieved bound {achieved:e}"
    )]
    Capacity {
        needed: usize,
        cap: usize,
        achieved: f64,
    },
}
