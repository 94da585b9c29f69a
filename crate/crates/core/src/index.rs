//! Index types for Euler sums and multiple T-values.
//!
//! A [`SignedComposition`] is the index `(s_1, ..., s_d; z_1, ..., z_d)` of the
//! nested sum
//!
//! ```text
//! zeta(s; z) = sum_{n_1 > ... > n_d > 0} z_1^{n_1} ... z_d^{n_d} / (n_1^{s_1} ... n_d^{s_d})
//! ```
//!
//! with every `z_j = ±1`. A part with `z_j = -1` is written with a `b` suffix
//! ("barred"), so `2b,3,1b,4` is `zeta(2,3,1,4; -1,1,-1,1)`.
//!
//! The same value has an iterated-integral encoding as an [`IntegralWord`]
//! over the letters `dt/t`, `dt/(1-t)` and `dt/(-1-t)`; block `j` of the word
//! is `(dt/t)^{s_j - 1}` followed by the pole letter for `a_j = z_1 ... z_j`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lincomb::LinComb;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("empty index")]
    Empty,
    #[error("invalid part `{0}`: exponents must be positive integers")]
    BadPart(String),
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("invalid integral word: {0}")]
    InvalidWord(String),
}

/// The sign `z_j` attached to a part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool_bar(bar: bool) -> Sign {
        if bar {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One slot `(s_j, z_j)` of a signed composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub exponent: u32,
    pub sign: Sign,
}

impl Part {
    pub const fn new(exponent: u32, sign: Sign) -> Part {
        Part { exponent, sign }
    }

    pub const fn plus(exponent: u32) -> Part {
        Part::new(exponent, Sign::Plus)
    }

    pub const fn minus(exponent: u32) -> Part {
        Part::new(exponent, Sign::Minus)
    }

    /// The leading `(1, +)` slot that makes an index divergent.
    pub fn is_divergent_head(self) -> bool {
        self.exponent == 1 && self.sign == Sign::Plus
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exponent)?;
        if self.sign.is_minus() {
            f.write_str("b")?;
        }
        Ok(())
    }
}

/// An Euler-sum index.
///
/// Public constructors reject the empty list. The empty composition exists
/// only as the unit of the word algebras (it stands for the constant `1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignedComposition {
    parts: Vec<Part>,
}

impl SignedComposition {
    pub fn new(parts: Vec<Part>) -> Result<Self, IndexError> {
        if parts.is_empty() {
            return Err(IndexError::Empty);
        }
        if let Some(p) = parts.iter().find(|p| p.exponent == 0) {
            return Err(IndexError::BadPart(p.to_string()));
        }
        Ok(SignedComposition { parts })
    }

    /// Builds a composition without checks. Exponents must be positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(parts.iter().all(|p| p.exponent > 0));
        SignedComposition { parts }
    }

    /// The unit of the stuffle algebra.
    pub fn empty() -> Self {
        SignedComposition { parts: Vec::new() }
    }

    /// Unsigned composition (all `z_j = +1`), i.e. a multiple zeta value.
    pub fn mzv(exponents: &[u32]) -> Result<Self, IndexError> {
        Self::new(exponents.iter().map(|&s| Part::plus(s)).collect())
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.exponent).sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Convergent iff the first slot is not `(1, +)`. The empty composition
    /// (the constant `1`) counts as admissible.
    pub fn is_admissible(&self) -> bool {
        self.parts.first().is_none_or(|p| !p.is_divergent_head())
    }

    /// Number of leading `(1, +)` slots.
    pub fn leading_ones(&self) -> usize {
        self.parts
            .iter()
            .take_while(|p| p.is_divergent_head())
            .count()
    }

    /// Sign of the product `z_1 ... z_d`.
    pub fn total_sign(&self) -> Sign {
        self.parts.iter().fold(Sign::Plus, |acc, p| acc * p.sign)
    }
}

/// Weight, depth and admissibility of an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub weight: u32,
    pub depth: usize,
    pub admissible: bool,
}

pub fn classify(c: &SignedComposition) -> Classification {
    Classification {
        weight: c.weight(),
        depth: c.depth(),
        admissible: c.is_admissible(),
    }
}

impl Ord for SignedComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.depth().cmp(&other.depth()))
            .then_with(|| {
                let a = self.parts.iter().map(|p| p.exponent);
                let b = other.parts.iter().map(|p| p.exponent);
                a.cmp(b)
            })
            .then_with(|| {
                let a = self.parts.iter().map(|p| p.sign);
                let b = other.parts.iter().map(|p| p.sign);
                a.cmp(b)
            })
    }
}

impl PartialOrd for SignedComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedComposition {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_index(s)? {
            Index::Euler(c) => Ok(c),
            Index::Mtv(_) => Err(IndexError::Malformed(s.trim().to_string())),
        }
    }
}

impl TryFrom<String> for SignedComposition {
    type Error = IndexError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<SignedComposition> for String {
    fn from(c: SignedComposition) -> String {
        c.to_string()
    }
}

/// A multiple T-value index `(s_1, ..., s_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MtvIndex {
    parts: Vec<u32>,
}

impl MtvIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self, IndexError> {
        if parts.is_empty() {
            return Err(IndexError::Empty);
        }
        if parts.contains(&0) {
            return Err(IndexError::BadPart("0".into()));
        }
        Ok(MtvIndex { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.parts[0] > 1
    }
}

impl fmt::Display for MtvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T:")?;
        for (i, s) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Result of [`parse_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Euler(SignedComposition),
    Mtv(MtvIndex),
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Euler(c) => write!(f, "{c}"),
            Index::Mtv(t) => write!(f, "{t}"),
        }
    }
}

fn parse_exponent(tok: &str) -> Result<u32, IndexError> {
    if tok.is_empty() {
        return Err(IndexError::Malformed(tok.to_string()));
    }
    if tok.starts_with('-') {
        return Err(IndexError::BadPart(tok.to_string()));
    }
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(IndexError::Malformed(tok.to_string()));
    }
    match tok.parse::<u32>() {
        Ok(0) => Err(IndexError::BadPart(tok.to_string())),
        Ok(n) => Ok(n),
        Err(_) => Err(IndexError::Malformed(tok.to_string())),
    }
}

/// Parses `2b,3,1b,4` (Euler sum) or `T:2,1,1` (multiple T-value).
///
/// Whitespace around commas is ignored.
pub fn parse_index(text: &str) -> Result<Index, IndexError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("T:") {
        if rest.trim().is_empty() {
            return Err(IndexError::Empty);
        }
        let parts = rest
            .split(',')
            .map(|tok| parse_exponent(tok.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Index::Mtv(MtvIndex::new(parts)?));
    }
    if text.is_empty() {
        return Err(IndexError::Empty);
    }
    let parts = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (digits, bar) = match tok.strip_suffix('b') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            parse_exponent(digits).map(|s| Part::new(s, Sign::from_bool_bar(bar)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Index::Euler(SignedComposition::new(parts)?))
}

/// One of the three integration forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `dt/t`
    W0,
    /// `dt/(1-t)`
    Wp,
    /// `dt/(-1-t)`
    Wm,
}

impl Letter {
    fn pole(a: Sign) -> Letter {
        match a {
            Sign::Plus => Letter::Wp,
            Sign::Minus => Letter::Wm,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::W0 => "0",
            Letter::Wp => "1",
            Letter::Wm => "-1",
        })
    }
}

/// Iterated-integral word, outermost letter first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegralWord {
    letters: Vec<Letter>,
}

impl IntegralWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, IndexError> {
        match letters.last() {
            None => Err(IndexError::InvalidWord("empty word".into())),
            Some(Letter::W0) => Err(IndexError::InvalidWord(
                "last letter must be a pole letter".into(),
            )),
            Some(_) => Ok(IntegralWord { letters }),
        }
    }

    /// The unit of the shuffle algebra.
    pub fn empty() -> Self {
        IntegralWord {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.letters.first() != Some(&Letter::Wp)
    }
}

impl fmt::Display for IntegralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

pub fn to_integral_word(c: &SignedComposition) -> IntegralWord {
    let mut letters = Vec::with_capacity(c.weight() as usize);
    let mut a = Sign::Plus;
    for p in c.parts() {
        a = a * p.sign;
        letters.extend(std::iter::repeat_n(Letter::W0, p.exponent as usize - 1));
        letters.push(Letter::pole(a));
    }
    IntegralWord { letters }
}

pub fn from_integral_word(word: &IntegralWord) -> Result<SignedComposition, IndexError> {
    letters_to_composition(word.letters())
}

/// Decodes a letter sequence; the empty sequence gives the empty composition.
pub(crate) fn letters_to_composition(letters: &[Letter]) -> Result<SignedComposition, IndexError> {
    let mut parts = Vec::new();
    let mut exponent = 1;
    let mut prev = Sign::Plus;
    for &l in letters {
        match l {
            Letter::W0 => exponent += 1,
            Letter::Wp | Letter::Wm => {
                let a = if l == Letter::Wp {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                parts.push(Part::new(exponent, a * prev));
                prev = a;
                exponent = 1;
            }
        }
    }
    if exponent != 1 {
        return Err(IndexError::InvalidWord(
            "last letter must be a pole letter".into(),
        ));
    }
    Ok(SignedComposition { parts })
}

/// Expands a multiple T-value into its `2^d` signed Euler sums.
///
/// The numerator factor for slot `j` is `1 + (-1)^{d-j+1} (-1)^{n_j}`, so a bar
/// at slot `j` contributes the sign `(-1)^{d-j+1}`.
pub fn mtv_decompose(t: &MtvIndex) -> LinComb {
    let d = t.depth();
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << d) {
        let mut negative = false;
        let parts = t
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &s)| {
                let bar = mask & (1 << j) != 0;
                if bar && (d - j) % 2 == 1 {
                    negative = !negative;
                }
                Part::new(s, Sign::from_bool_bar(bar))
            })
            .collect();
        let coeff = if negative { -1 } else { 1 };
        out.add_term(
            SignedComposition::from_parts_unchecked(parts),
            BigRational::from_integer(BigInt::from(coeff)),
        );
    }
    out
}

/// All signed compositions of a given weight, in canonical order.
pub fn compositions_of_weight(weight: u32) -> Vec<SignedComposition> {
    fn rec(rest: u32, prefix: &mut Vec<Part>, out: &mut Vec<SignedComposition>) {
        if rest == 0 {
            out.push(SignedComposition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for s in 1..=rest {
            for sign in [Sign::Plus, Sign::Minus] {
                prefix.push(Part::new(s, sign));
                rec(rest - s, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if weight > 0 {
        rec(weight, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Admissible signed compositions of a given weight, in canonical order.
pub fn admissible_of_weight(weight: u32) -> Vec<SignedComposition> {
    compositions_of_weight(weight)
        .into_iter()
        .filter(SignedComposition::is_admissible)
        .collect()
}
