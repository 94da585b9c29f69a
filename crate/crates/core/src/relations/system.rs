//! Double-shuffle relation systems and span membership.

use std::path::Path;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{comparison_identity, dsh_identity, RegPoly};
use crate::identity::Identity;
use crate::index::{compositions_of_weight, SignedComposition};
use crate::relations::basis::{Symbol, SymbolBasis};
use crate::relations::echelon::{Echelon, Reduction, SparseRow};
use crate::relations::RelationsError;

pub const DEFAULT_WEIGHT_CAP: u32 = 8;
const CACHE_VERSION: u32 = 1;

/// One relation: a vector over the basis, with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub provenance: String,
    pub entries: SparseRow,
}

/// All relations of one weight.
///
/// Rows come from the double-shuffle identity of every unordered pair of
/// indices of total weight `W`, from the comparison `ρ(ζ_*(w)) = ζ_sha(w)`
/// of every divergent `w` of weight `W`, and from lower-weight relations
/// multiplied by a power of `T`. A polynomial identity contributes one row
/// per `T`-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSystem {
    basis: SymbolBasis,
    rows: Vec<Row>,
}

fn unordered_pairs(weight: u32) -> Vec<(SignedComposition, SignedComposition)> {
    let mut out = Vec::new();
    for a in 1..=weight / 2 {
        let left = compositions_of_weight(a);
        let right = compositions_of_weight(weight - a);
        for (i, u) in left.iter().enumerate() {
            let start = if 2 * a == weight { i } else { 0 };
            for v in &right[start..] {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Splits a polynomial relation of weight `W` into per-degree rows.
fn degree_rows(basis: &SymbolBasis, prov: &str, p: &RegPoly) -> Result<Vec<Row>, RelationsError> {
    let mut out = Vec::new();
    for (k, coeff) in p.iter() {
        let part = RegPoly::monomial(k, coeff.clone());
        let entries = basis.coordinates(&part)?;
        let provenance = if p.degree().unwrap_or(0) == 0 {
            prov.to_string()
        } else {
            format!("{prov} @T^{k}")
        };
        out.push(Row {
            provenance,
            entries,
        });
    }
    Ok(out)
}

/// Double-shuffle and comparison relations of exactly this weight, as
/// polynomials with provenance.
fn own_relations(weight: u32) -> Vec<(String, RegPoly)> {
    let pairs = unordered_pairs(weight);
    let mut out: Vec<(String, RegPoly)> = pairs
        .par_iter()
        .map(|(u, v)| (format!("dsh {u} ; {v}"), dsh_identity(u, v).difference()))
        .collect();
    let divergent: Vec<SignedComposition> = compositions_of_weight(weight)
        .into_iter()
        .filter(|c| !c.is_admissible())
        .collect();
    out.extend(
        divergent
            .par_iter()
            .map(|w| (format!("rho {w}"), comparison_identity(w).difference()))
            .collect::<Vec<_>>(),
    );
    out.retain(|(_, p)| !p.is_zero());
    out
}

impl RelationSystem {
    /// Builds the system of weight `weight`, refusing weights above `cap`.
    pub fn generate(weight: u32, cap: u32) -> Result<Self, RelationsError> {
        if weight > cap {
            return Err(RelationsError::Capacity { weight, cap });
        }
        if weight < 1 {
            return Err(RelationsError::Structural("weight must be positive".into()));
        }
        let basis = SymbolBasis::new(weight);
        let mut rows = Vec::new();
        for (prov, p) in own_relations(weight) {
            rows.extend(degree_rows(&basis, &prov, &p)?);
        }
        for k in 1..weight {
            for (prov, p) in own_relations(weight - k) {
                rows.extend(degree_rows(
                    &basis,
                    &format!("T^{k} * ({prov})"),
                    &p.shift(k),
                )?);
            }
        }
        Ok(RelationSystem { basis, rows })
    }

    pub fn weight(&self) -> u32 {
        self.basis.weight()
    }

    pub fn basis(&self) -> &SymbolBasis {
        &self.basis
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).rank()
    }

    /// Rank of the rows living entirely in `T`-degree `k`.
    pub fn rank_at_degree(&self, k: u32) -> usize {
        let mut e = Echelon::new(false);
        for (i, r) in self.rows.iter().enumerate() {
            if r.entries
                .iter()
                .all(|(c, _)| self.basis.symbol(*c).degree == k)
            {
                e.insert(i, &self.flip(&r.entries));
            }
        }
        e.rank()
    }

    /// Elimination runs on reversed columns, so pivots fall on the deepest
    /// symbols and the simplest ones stay free.
    fn flip(&self, entries: &[(usize, BigRational)]) -> SparseRow {
        let n = self.basis.len();
        entries
            .iter()
            .map(|(c, q)| (n - 1 - c, q.clone()))
            .collect()
    }

    pub fn echelon(&self, track_certificates: bool) -> Echelon {
        let mut e = Echelon::new(track_certificates);
        for (i, r) in self.rows.iter().enumerate() {
            e.insert(i, &self.flip(&r.entries));
        }
        e
    }

    /// A checker that reuses one elimination for many identities.
    pub fn checker(&self) -> SpanChecker<'_> {
        SpanChecker {
            system: self,
            echelon: self.echelon(true),
        }
    }

    pub fn to_json(&self) -> String {
        let file = CacheFile {
            version: CACHE_VERSION,
            weight: self.weight(),
            basis: self
                .basis
                .symbols()
                .iter()
                .map(|s| (s.degree, s.composition.to_string()))
                .collect(),
            rows: self
                .rows
                .iter()
                .map(|r| CacheRow {
                    prov: r.provenance.clone(),
                    entries: r
                        .entries
                        .iter()
                        .map(|(c, q)| (*c, q.numer().to_string(), q.denom().to_string()))
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("cache file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, RelationsError> {
        let file: CacheFile =
            serde_json::from_str(text).map_err(|e| RelationsError::Cache(e.to_string()))?;
        if file.version != CACHE_VERSION {
            return Err(RelationsError::Cache(format!(
                "cache version {} (expected {CACHE_VERSION})",
                file.version
            )));
        }
        let basis = SymbolBasis::new(file.weight);
        let stored: Vec<Symbol> = file
            .basis
            .iter()
            .map(|(k, c)| {
                let composition = if c.is_empty() {
                    Ok(SignedComposition::empty())
                } else {
                    c.parse()
                };
                composition.map(|composition| Symbol {
                    degree: *k,
                    composition,
                })
            })
            .collect::<Result<_, _>>()
            .map_err(|e| RelationsError::Cache(e.to_string()))?;
        if stored != basis.symbols() {
            return Err(RelationsError::Cache("basis does not match".into()));
        }
        let mut rows = Vec::with_capacity(file.rows.len());
        for r in file.rows {
            let mut entries = Vec::with_capacity(r.entries.len());
            for (c, n, d) in r.entries {
                if c >= basis.len() {
                    return Err(RelationsError::Cache(format!("column {c} out of range")));
                }
                let n = n.parse().map_err(|_| RelationsError::Cache(n.clone()))?;
                let d = d.parse().map_err(|_| RelationsError::Cache(d.clone()))?;
                entries.push((c, BigRational::new(n, d)));
            }
            rows.push(Row {
                provenance: r.prov,
                entries,
            });
        }
        Ok(RelationSystem { basis, rows })
    }

    /// Loads `dir/dsh-W.json` if present and valid, otherwise generates and
    /// writes it.
    pub fn load_or_generate(dir: &Path, weight: u32, cap: u32) -> Result<Self, RelationsError> {
        if weight > cap {
            return Err(RelationsError::Capacity { weight, cap });
        }
        let path = dir.join(format!("dsh-{weight}.json"));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(sys) = RelationSystem::from_json(&text) {
                if sys.weight() == weight {
                    return Ok(sys);
                }
            }
        }
        let sys = RelationSystem::generate(weight, cap)?;
        std::fs::create_dir_all(dir).map_err(|e| RelationsError::Cache(e.to_string()))?;
        std::fs::write(&path, sys.to_json()).map_err(|e| RelationsError::Cache(e.to_string()))?;
        Ok(sys)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    weight: u32,
    basis: Vec<(u32, String)>,
    rows: Vec<CacheRow>,
}

#[derive(Serialize, Deserialize)]
struct CacheRow {
    prov: String,
    entries: Vec<(usize, String, String)>,
}

/// Multipliers expressing `lhs - rhs` through system rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<(usize, BigRational)>,
}

/// Outcome of a membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Certificate(Certificate),
    /// The reduced remainder of `lhs - rhs`, as `(symbol, coefficient)`.
    Residual(Vec<(Symbol, BigRational)>),
}

impl Membership {
    pub fn is_certified(&self) -> bool {
        matches!(self, Membership::Certificate(_))
    }
}

/// A system with its elimination done once.
pub struct SpanChecker<'a> {
    system: &'a RelationSystem,
    echelon: Echelon,
}

impl SpanChecker<'_> {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn check(&self, id: &Identity) -> Result<Membership, RelationsError> {
        if id.weight != self.system.weight() {
            return Err(RelationsError::Structural(format!(
                "identity has weight {}, system has weight {}",
                id.weight,
                self.system.weight()
            )));
        }
        self.check_polynomial(&id.difference())
    }

    pub fn check_polynomial(&self, p: &RegPoly) -> Result<Membership, RelationsError> {
        let v = self.system.flip(&self.system.basis.coordinates(p)?);
        Ok(match self.echelon.membership(&v) {
            Reduction::InSpan(m) => Membership::Certificate(Certificate { multipliers: m }),
            Reduction::Residual(r) => {
                let mut r = self.system.flip(&r);
                r.sort_by_key(|(c, _)| *c);
                Membership::Residual(
                    r.into_iter()
                        .map(|(c, q)| (self.system.basis.symbol(c).clone(), q))
                        .collect(),
                )
            }
        })
    }

    /// Recombines certificate multipliers against the rows.
    pub fn replay(&self, cert: &Certificate) -> RegPoly {
        let mut out = RegPoly::zero();
        for (i, m) in &cert.multipliers {
            let row = &self.system.rows[*i];
            out.add_scaled(&self.system.basis.polynomial(&row.entries), m);
        }
        out
    }
}

/// `generate_dsh_system` with the default cap.
pub fn generate_dsh_system(weight: u32) -> Result<RelationSystem, RelationsError> {
    RelationSystem::generate(weight, DEFAULT_WEIGHT_CAP)
}

/// One-shot membership check (eliminates the whole system).
pub fn check_membership(id: &Identity, sys: &RelationSystem) -> Result<Membership, RelationsError> {
    sys.checker().check(id)
}

pub fn rank(sys: &RelationSystem) -> usize {
    sys.rank()
}
