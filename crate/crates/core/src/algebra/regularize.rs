//! Stuffle- and shuffle-regularized polynomials of divergent indices.
//!
//! A divergent index starts with a run of `m` slots `(1,+)` (equivalently its
//! word starts with `m` letters `Wp`). Multiplying the index with one slot
//! removed by `ζ(1) = T` produces the index `m` times plus terms with a
//! shorter run, which gives a terminating recursion.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::products::{shuffle_letters, stuffle_parts};
use crate::algebra::regpoly::RegPoly;
use crate::index::{letters_to_composition, to_integral_word, Letter, Part, SignedComposition};

fn stuffle_memo() -> &'static DashMap<SignedComposition, RegPoly> {
    static MEMO: OnceLock<DashMap<SignedComposition, RegPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn shuffle_memo() -> &'static DashMap<SignedComposition, RegPoly> {
    static MEMO: OnceLock<DashMap<SignedComposition, RegPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `ζ_*(c)`: the stuffle-regularized polynomial with `ζ_*(1) = T`.
pub fn reg_stuffle(c: &SignedComposition) -> RegPoly {
    if c.is_admissible() {
        return RegPoly::symbol_or_one(c);
    }
    if let Some(hit) = stuffle_memo().get(c).map(|r| r.clone()) {
        return hit;
    }
    let m = c.leading_ones() as u64;
    let tail = &c.parts()[1..];
    let tail_comp = SignedComposition::from_parts_unchecked(tail.to_vec());
    let mut acc = reg_stuffle(&tail_comp).shift(1);
    for (w, n) in stuffle_parts(&[Part::plus(1)], tail) {
        if w.as_slice() == c.parts() {
            debug_assert_eq!(n, m);
            continue;
        }
        let w = SignedComposition::from_parts_unchecked(w);
        acc.add_scaled(&reg_stuffle(&w), &-int(n));
    }
    let out = acc.scale(&(BigRational::one() / int(m)));
    stuffle_memo().insert(c.clone(), out.clone());
    out
}

/// `ζ_sha(c)`: the shuffle-regularized polynomial with `ζ_sha(1) = T`.
pub fn reg_shuffle(c: &SignedComposition) -> RegPoly {
    if c.is_admissible() {
        return RegPoly::symbol_or_one(c);
    }
    if let Some(hit) = shuffle_memo().get(c).map(|r| r.clone()) {
        return hit;
    }
    let word = to_integral_word(c);
    let letters = word.letters();
    let m = letters.iter().take_while(|&&l| l == Letter::Wp).count() as u64;
    let tail = &letters[1..];
    let tail_comp = letters_to_composition(tail).expect("suffix of a valid word");
    let mut acc = reg_shuffle(&tail_comp).shift(1);
    for (w, n) in shuffle_letters(&[Letter::Wp], tail) {
        if w.as_slice() == letters {
            debug_assert_eq!(n, m);
            continue;
        }
        let w = letters_to_composition(&w).expect("shuffle of valid words ends in a pole");
        acc.add_scaled(&reg_shuffle(&w), &-int(n));
    }
    let out = acc.scale(&(BigRational::one() / int(m)));
    shuffle_memo().insert(c.clone(), out.clone());
    out
}

impl RegPoly {
    /// The degree-0 polynomial of an admissible index; `1` for the empty one.
    pub(crate) fn symbol_or_one(c: &SignedComposition) -> RegPoly {
        if c.is_empty() {
            RegPoly::one()
        } else {
            RegPoly::symbol(c.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::ratio;

    fn c(s: &str) -> SignedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn single_one_is_t() {
        assert_eq!(reg_stuffle(&c("1")), RegPoly::t_power(1));
        assert_eq!(reg_shuffle(&c("1")), RegPoly::t_power(1));
    }

    #[test]
    fn double_one() {
        assert_eq!(reg_stuffle(&c("1,1")).to_string(), "1/2*T^2 - 1/2*z(2)");
        assert_eq!(
            reg_shuffle(&c("1,1")),
            RegPoly::t_power(2).scale(&ratio(1, 2))
        );
    }

    #[test]
    fn one_then_admissible() {
        assert_eq!(reg_stuffle(&c("1,2")).to_string(), "T*z(2) - z(3) - z(2,1)");
        assert_eq!(reg_shuffle(&c("1,2")).to_string(), "T*z(2) - 2*z(2,1)");
        assert_eq!(
            reg_stuffle(&c("1,1b")).to_string(),
            "T*z(1b) - z(2b) - z(1b,1)"
        );
    }

    #[test]
    fn admissible_fixed_points() {
        for s in ["3,2", "2b,1b", "1b,1"] {
            assert_eq!(reg_stuffle(&c(s)), RegPoly::symbol(c(s)));
            assert_eq!(reg_shuffle(&c(s)), RegPoly::symbol(c(s)));
        }
    }

    #[test]
    fn results_are_homogeneous() {
        for comp in crate::index::compositions_of_weight(5) {
            assert_eq!(reg_stuffle(&comp).homogeneous_weight(), Some(5), "{comp}");
            assert_eq!(reg_shuffle(&comp).homogeneous_weight(), Some(5), "{comp}");
        }
    }
}
