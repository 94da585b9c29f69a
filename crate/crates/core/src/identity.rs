//! Named identities between regularized polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::RegPoly;

/// Where an identity came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Derivation {
    /// Copied from a printed statement.
    Transcribed,
    /// Coefficient extraction from a functional equation at a point.
    DerivedFromFunctionalEquation,
    /// A regularized double-shuffle relation.
    DoubleShuffle,
}

/// `lhs = rhs`, both homogeneous of `weight` with `T` of weight 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub weight: u32,
    pub provenance: String,
    pub lhs: RegPoly,
    pub rhs: RegPoly,
    #[serde(default = "default_derivation")]
    pub derivation: Derivation,
}

fn default_derivation() -> Derivation {
    Derivation::Transcribed
}

impl Identity {
    pub fn new(
        name: impl Into<String>,
        weight: u32,
        provenance: impl Into<String>,
        lhs: RegPoly,
        rhs: RegPoly,
        derivation: Derivation,
    ) -> Self {
        Identity {
            name: name.into(),
            weight,
            provenance: provenance.into(),
            lhs,
            rhs,
            derivation,
        }
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> RegPoly {
        &self.lhs - &self.rhs
    }

    /// Holds formally, without using any relation.
    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Both sides have only terms of the stated weight.
    pub fn is_homogeneous(&self) -> bool {
        [&self.lhs, &self.rhs]
            .iter()
            .all(|p| p.is_zero() || p.homogeneous_weight() == Some(self.weight))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [w={}]: {} = {}",
            self.name, self.weight, self.lhs, self.rhs
        )
    }
}
