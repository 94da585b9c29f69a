//! Polynomials in the regularization variable `T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::products::stuffle_lin;
use crate::index::SignedComposition;
use crate::lincomb::LinComb;

/// `Σ_k P_k T^k` with every `P_k` a combination of admissible compositions.
///
/// Zero coefficients are never stored. Products multiply coefficients by
/// stuffle, which keeps admissible symbols admissible.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct RegPoly {
    coeffs: BTreeMap<u32, LinComb>,
}

impl RegPoly {
    pub fn zero() -> Self {
        RegPoly::default()
    }

    pub fn one() -> Self {
        Self::from_lincomb(LinComb::one())
    }

    /// `T^k`.
    pub fn t_power(k: u32) -> Self {
        Self::monomial(k, LinComb::one())
    }

    pub fn monomial(k: u32, coeff: LinComb) -> Self {
        let mut out = RegPoly::zero();
        out.add_monomial(k, &coeff);
        out
    }

    /// Degree-0 polynomial. Panics in debug builds on divergent symbols.
    pub fn from_lincomb(c: LinComb) -> Self {
        Self::monomial(0, c)
    }

    pub fn symbol(c: SignedComposition) -> Self {
        Self::from_lincomb(LinComb::symbol(c))
    }

    pub fn constant(q: BigRational) -> Self {
        Self::from_lincomb(LinComb::constant(q))
    }

    pub fn add_monomial(&mut self, k: u32, coeff: &LinComb) {
        debug_assert!(
            coeff.all_admissible(),
            "divergent symbol in RegPoly: {coeff}"
        );
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, other: &RegPoly, q: &BigRational) {
        for (&k, c) in &other.coeffs {
            self.add_monomial(k, &c.scale(q));
        }
    }

    pub fn scale(&self, q: &BigRational) -> RegPoly {
        let mut out = RegPoly::zero();
        out.add_scaled(self, q);
        out
    }

    pub fn coeff(&self, k: u32) -> LinComb {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, k: u32) -> Option<&LinComb> {
        self.coeffs.get(&k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LinComb)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored `(degree, symbol)` terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.values().map(LinComb::len).sum()
    }

    /// Weight when homogeneous, counting `T` as weight 1 and rationals as 0.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self
            .coeffs
            .iter()
            .flat_map(|(&k, c)| c.compositions().map(move |s| k + s.weight()));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn max_weight(&self) -> u32 {
        self.coeffs
            .iter()
            .flat_map(|(&k, c)| c.compositions().map(move |s| k + s.weight()))
            .max()
            .unwrap_or(0)
    }

    /// Product with stuffle-multiplied coefficients.
    pub fn mul(&self, other: &RegPoly) -> RegPoly {
        let mut out = RegPoly::zero();
        for (&i, p) in &self.coeffs {
            for (&j, q) in &other.coeffs {
                out.add_monomial(i + j, &stuffle_lin(p, q));
            }
        }
        out
    }

    /// Multiplies every coefficient by a fixed combination (stuffle).
    pub fn mul_lincomb(&self, c: &LinComb) -> RegPoly {
        self.mul(&RegPoly::from_lincomb(c.clone()))
    }

    /// `T^k · self`.
    pub fn shift(&self, k: u32) -> RegPoly {
        RegPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + k, c.clone()))
                .collect(),
        }
    }
}

impl AddAssign<&RegPoly> for RegPoly {
    fn add_assign(&mut self, rhs: &RegPoly) {
        self.add_scaled(rhs, &BigRational::one());
    }
}

impl SubAssign<&RegPoly> for RegPoly {
    fn sub_assign(&mut self, rhs: &RegPoly) {
        self.add_scaled(rhs, &-BigRational::one());
    }
}

impl Add<&RegPoly> for &RegPoly {
    type Output = RegPoly;

    fn add(self, rhs: &RegPoly) -> RegPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&RegPoly> for &RegPoly {
    type Output = RegPoly;

    fn sub(self, rhs: &RegPoly) -> RegPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RegPoly {
    type Output = RegPoly;

    fn neg(self) -> RegPoly {
        self.scale(&-BigRational::one())
    }
}

impl From<LinComb> for RegPoly {
    fn from(c: LinComb) -> Self {
        RegPoly::from_lincomb(c)
    }
}

/// Highest degree first, e.g. `1/2*T^2 - 1/2*z(2)` or `T*z(2) - 2*z(2,1)`.
impl fmt::Display for RegPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (&k, c) in self.coeffs.iter().rev() {
            let tpow = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            for (s, q) in c.iter() {
                let sym = match (tpow.is_empty(), s.is_empty()) {
                    (true, true) => String::new(),
                    (true, false) => format!("z({s})"),
                    (false, true) => tpow.clone(),
                    (false, false) => format!("{tpow}*z({s})"),
                };
                terms.push((q, sym));
            }
        }
        crate::lincomb::write_signed_sum(f, terms.into_iter())
    }
}

/// JSON form: `[[degree, "coeff", "index"], ...]`, the empty index standing
/// for the constant term.
impl Serialize for RegPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<(u32, String, String)> = self
            .coeffs
            .iter()
            .flat_map(|(&k, c)| {
                c.iter()
                    .map(move |(s, q)| (k, crate::lincomb::fmt_rational(q), s.to_string()))
            })
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RegPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<(u32, String, String)> = Vec::deserialize(deserializer)?;
        let mut out = RegPoly::zero();
        for (k, q, idx) in rows {
            let q: BigRational = q.parse().map_err(serde::de::Error::custom)?;
            let c = if idx.is_empty() {
                SignedComposition::empty()
            } else {
                idx.parse().map_err(serde::de::Error::custom)?
            };
            if !c.is_admissible() {
                return Err(serde::de::Error::custom(format!("divergent index {idx}")));
            }
            out.add_monomial(k, &LinComb::term(c, q));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::ratio;

    fn lc(s: &str) -> LinComb {
        s.parse().unwrap()
    }

    #[test]
    fn display_orders_by_degree() {
        let mut p = RegPoly::t_power(2).scale(&ratio(1, 2));
        p += &RegPoly::from_lincomb(lc("-1/2*z(2)"));
        assert_eq!(p.to_string(), "1/2*T^2 - 1/2*z(2)");
        assert_eq!(p.homogeneous_weight(), Some(2));
        assert_eq!(RegPoly::zero().to_string(), "0");
    }

    #[test]
    fn product_uses_stuffle() {
        let a = RegPoly::symbol("2".parse().unwrap());
        let t = RegPoly::t_power(1);
        let p = a.mul(&a).mul(&t);
        assert_eq!(p.coeff(1), lc("z(4) + 2*z(2,2)"));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn cancellation_removes_degree() {
        let t = RegPoly::t_power(3);
        let z = &t - &t;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn json_round_trip() {
        let mut p = RegPoly::t_power(2).scale(&ratio(-3, 2));
        p += &RegPoly::from_lincomb(lc("2 + z(2b,1) - 1/3*z(3)"));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(
            js,
            r#"[[0,"2",""],[0,"-1/3","3"],[0,"1","2b,1"],[2,"-3/2",""]]"#
        );
        let back: RegPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<RegPoly>(r#"[[0,"1","1,2"]]"#).is_err());
    }
}
