//! Formal Q-linear combinations of Euler-sum symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::index::{IndexError, SignedComposition};

/// Finite map from compositions to nonzero rational coefficients.
///
/// The empty composition is the constant `1`, so pure rationals live in the
/// same map. Iteration follows the canonical composition order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LinComb {
    terms: BTreeMap<SignedComposition, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        Self::term(SignedComposition::empty(), q)
    }

    pub fn symbol(c: SignedComposition) -> Self {
        Self::term(c, BigRational::one())
    }

    pub fn term(c: SignedComposition, q: BigRational) -> Self {
        let mut out = LinComb::zero();
        out.add_term(c, q);
        out
    }

    pub fn add_term(&mut self, c: SignedComposition, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, q: &BigRational) {
        if q.is_zero() {
            return;
        }
        for (c, v) in &other.terms {
            self.add_term(c.clone(), v * q);
        }
    }

    pub fn scale(&self, q: &BigRational) -> LinComb {
        if q.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(c, v)| (c.clone(), v * q)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, c: &SignedComposition) -> BigRational {
        self.terms.get(c).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedComposition, &BigRational)> {
        self.terms.iter()
    }

    pub fn compositions(&self) -> impl Iterator<Item = &SignedComposition> {
        self.terms.keys()
    }

    /// Coefficient of the constant `1`.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&SignedComposition::empty())
    }

    pub fn all_admissible(&self) -> bool {
        self.terms.keys().all(SignedComposition::is_admissible)
    }

    /// `Some(w)` when every symbol has weight `w`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(SignedComposition::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(SignedComposition::weight)
            .max()
            .unwrap_or(0)
    }

    /// Sum of coefficients.
    pub fn mass(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }
}

impl FromIterator<(SignedComposition, BigRational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (SignedComposition, BigRational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (c, q) in iter {
            out.add_term(c, q);
        }
        out
    }
}

impl AddAssign<&LinComb> for LinComb {
    fn add_assign(&mut self, rhs: &LinComb) {
        for (c, q) in &rhs.terms {
            self.add_term(c.clone(), q.clone());
        }
    }
}

impl SubAssign<&LinComb> for LinComb {
    fn sub_assign(&mut self, rhs: &LinComb) {
        for (c, q) in &rhs.terms {
            self.add_term(c.clone(), -q.clone());
        }
    }
}

impl Add<&LinComb> for &LinComb {
    type Output = LinComb;

    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LinComb> for &LinComb {
    type Output = LinComb;

    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LinComb {
    type Output = LinComb;

    fn neg(self) -> LinComb {
        self.scale(&-BigRational::one())
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes a signed sum of `(coefficient, symbol)` pairs.
/// An empty symbol string stands for the constant term.
pub(crate) fn write_signed_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigRational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (q, sym) in terms {
        let mag = q.abs();
        if first {
            if q.is_negative() {
                f.write_str("-")?;
            }
        } else if q.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        if sym.is_empty() {
            f.write_str(&fmt_rational(&mag))?;
        } else if mag.is_one() {
            f.write_str(&sym)?;
        } else {
            write!(f, "{}*{}", fmt_rational(&mag), sym)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(
            f,
            self.terms.iter().map(|(c, q)| {
                let sym = if c.is_empty() {
                    String::new()
                } else {
                    format!("z({c})")
                };
                (q, sym)
            }),
        )
    }
}

fn parse_rational(tok: &str) -> Result<BigRational, IndexError> {
    let bad = || IndexError::Malformed(tok.to_string());
    match tok.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            tok.trim().parse().map_err(|_| bad())?,
        )),
    }
}

/// Parses the `Display` form, e.g. `2*z(3,1) - 1/2*z(2b) + 3`.
impl FromStr for LinComb {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LinComb::zero());
        }
        let mut out = LinComb::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            rest = rest.trim_start();
            // the term runs until the next top-level ' + ' or ' - '
            let mut depth = 0usize;
            let mut end = rest.len();
            for (i, ch) in rest.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    '+' | '-' if depth == 0 && i > 0 => {
                        end = i;
                        break;
                    }
                    _ => {}
                }
            }
            let term = rest[..end].trim();
            let (coeff, sym) = match term.find("z(") {
                Some(pos) => {
                    let head = term[..pos].trim().trim_end_matches('*').trim();
                    let q = if head.is_empty() {
                        BigRational::one()
                    } else {
                        parse_rational(head)?
                    };
                    let inner = term[pos + 2..]
                        .strip_suffix(')')
                        .ok_or_else(|| IndexError::Malformed(term.to_string()))?;
                    (q, inner.parse::<SignedComposition>()?)
                }
                None => (parse_rational(term)?, SignedComposition::empty()),
            };
            out.add_term(sym, if negative { -coeff } else { coeff });
            if end == rest.len() {
                break;
            }
            negative = rest[end..].starts_with('-');
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}
