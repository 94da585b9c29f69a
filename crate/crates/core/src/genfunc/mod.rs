//! Generating-function equations and the catalog of sum formulas.

mod catalog;
mod dsl;
mod equations;
mod formal;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::lincomb::fmt_rational;

pub use catalog::{catalog, find, CatalogEntry, Derivable, Section};
pub use dsl::{evaluate, Expr};
pub use equations::{
    depth2_equation, depth3a_equation, depth3b_equation, family_equation, formal_equation,
    parts_of, product_expansion, zeta_sha, zeta_star, FSeries, Family, Flavor, FormalEquation,
};
pub use formal::{binomial, FormalPoly, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenfuncError {
    #[error("{what} needs weight at least {min}, got {weight}")]
    Range { what: String, weight: u32, min: u32 },
    #[error("{0}")]
    Point(String),
    #[error("formula: {0}")]
    Parse(String),
    #[error("unknown identity {0}")]
    Unknown(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A specialization point `(x, y, z)`; depth-two equations ignore `z`
/// and require it to be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecPoint {
    coords: [BigRational; 3],
}

impl SpecPoint {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Result<Self, GenfuncError> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(GenfuncError::Point(
                "the origin is not a specialization point".into(),
            ));
        }
        Ok(SpecPoint { coords: [x, y, z] })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self, GenfuncError> {
        let q = |n: i64| BigRational::from_integer(n.into());
        SpecPoint::new(q(x), q(y), q(z))
    }

    pub fn x(&self) -> &BigRational {
        &self.coords[0]
    }

    pub fn y(&self) -> &BigRational {
        &self.coords[1]
    }

    pub fn z(&self) -> &BigRational {
        &self.coords[2]
    }

    /// The first `n` coordinates.
    pub fn coordinates(&self, n: usize) -> Vec<BigRational> {
        self.coords[..n].to_vec()
    }
}

impl fmt::Display for SpecPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            fmt_rational(&self.coords[0]),
            fmt_rational(&self.coords[1]),
            fmt_rational(&self.coords[2])
        )
    }
}
