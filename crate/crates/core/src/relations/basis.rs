//! Coordinates for polynomials in `T` with admissible coefficients.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::algebra::RegPoly;
use crate::index::{admissible_of_weight, SignedComposition};
use crate::relations::RelationsError;

/// `T^k · ζ(c)` with `c` admissible of weight `W - k` (empty `c` is `T^W`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub degree: u32,
    pub composition: SignedComposition,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.degree, self.composition.is_empty()) {
            (0, _) => write!(f, "z({})", self.composition),
            (k, true) => write!(f, "T^{k}"),
            (k, false) => write!(f, "T^{k}*z({})", self.composition),
        }
    }
}

/// All symbols of one weight, ordered by `T`-degree then composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolBasis {
    weight: u32,
    symbols: Vec<Symbol>,
    position: HashMap<Symbol, usize>,
}

impl SymbolBasis {
    pub fn new(weight: u32) -> Self {
        let mut symbols = Vec::new();
        for k in 0..=weight {
            let comps = if k == weight {
                vec![SignedComposition::empty()]
            } else {
                admissible_of_weight(weight - k)
            };
            symbols.extend(comps.into_iter().map(|c| Symbol {
                degree: k,
                composition: c,
            }));
        }
        let position = symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        SymbolBasis {
            weight,
            symbols,
            position,
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, col: usize) -> &Symbol {
        &self.symbols[col]
    }

    pub fn column(&self, s: &Symbol) -> Option<usize> {
        self.position.get(s).copied()
    }

    /// Columns holding `T`-degree `k`.
    pub fn degree_count(&self, k: u32) -> usize {
        self.symbols.iter().filter(|s| s.degree == k).count()
    }

    /// Coordinates of a homogeneous polynomial of this weight.
    pub fn coordinates(&self, p: &RegPoly) -> Result<Vec<(usize, BigRational)>, RelationsError> {
        let mut out = Vec::with_capacity(p.term_count());
        for (k, coeff) in p.iter() {
            for (c, q) in coeff.iter() {
                let s = Symbol {
                    degree: k,
                    composition: c.clone(),
                };
                let col = self.column(&s).ok_or_else(|| {
                    RelationsError::Structural(format!(
                        "{s} is not a weight-{} symbol",
                        self.weight
                    ))
                })?;
                out.push((col, q.clone()));
            }
        }
        out.sort_by_key(|(c, _)| *c);
        Ok(out)
    }

    /// The polynomial with the given coordinates.
    pub fn polynomial(&self, entries: &[(usize, BigRational)]) -> RegPoly {
        let mut out = RegPoly::zero();
        for (col, q) in entries {
            let s = &self.symbols[*col];
            out.add_monomial(
                s.degree,
                &crate::lincomb::LinComb::term(s.composition.clone(), q.clone()),
            );
        }
        out
    }
}
