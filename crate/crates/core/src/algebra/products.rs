//! Stuffle (quasi-shuffle) and shuffle products.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::index::{
    letters_to_composition, to_integral_word, IntegralWord, Letter, Part, SignedComposition,
};
use crate::lincomb::LinComb;

fn merge(a: Part, b: Part) -> Part {
    Part::new(a.exponent + b.exponent, a.sign * b.sign)
}

fn stuffle_rec(u: &[Part], v: &[Part], prefix: &mut Vec<Part>, out: &mut HashMap<Vec<Part>, u64>) {
    match (u.split_first(), v.split_first()) {
        (None, _) | (_, None) => {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(w).or_default() += 1;
        }
        (Some((&a, ut)), Some((&b, vt))) => {
            prefix.push(a);
            stuffle_rec(ut, v, prefix, out);
            prefix.pop();
            prefix.push(b);
            stuffle_rec(u, vt, prefix, out);
            prefix.pop();
            prefix.push(merge(a, b));
            stuffle_rec(ut, vt, prefix, out);
            prefix.pop();
        }
    }
}

/// Raw quasi-shuffle of two part sequences with multiplicities.
pub(crate) fn stuffle_parts(u: &[Part], v: &[Part]) -> HashMap<Vec<Part>, u64> {
    let mut out = HashMap::new();
    stuffle_rec(u, v, &mut Vec::new(), &mut out);
    out
}

fn shuffle_rec(
    u: &[Letter],
    v: &[Letter],
    prefix: &mut Vec<Letter>,
    out: &mut HashMap<Vec<Letter>, u64>,
) {
    match (u.split_first(), v.split_first()) {
        (None, _) | (_, None) => {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(w).or_default() += 1;
        }
        (Some((&a, ut)), Some((&b, vt))) => {
            prefix.push(a);
            shuffle_rec(ut, v, prefix, out);
            prefix.pop();
            prefix.push(b);
            shuffle_rec(u, vt, prefix, out);
            prefix.pop();
        }
    }
}

/// Raw riffle shuffle of two letter sequences with multiplicities.
pub(crate) fn shuffle_letters(u: &[Letter], v: &[Letter]) -> HashMap<Vec<Letter>, u64> {
    let mut out = HashMap::new();
    shuffle_rec(u, v, &mut Vec::new(), &mut out);
    out
}

fn count(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Harmonic (stuffle) product `u * v`.
pub fn stuffle(u: &SignedComposition, v: &SignedComposition) -> LinComb {
    stuffle_parts(u.parts(), v.parts())
        .into_iter()
        .map(|(w, n)| (SignedComposition::from_parts_unchecked(w), count(n)))
        .collect()
}

/// Shuffle product of two integral words, decoded back to compositions.
pub fn shuffle(u: &IntegralWord, v: &IntegralWord) -> LinComb {
    shuffle_letters(u.letters(), v.letters())
        .into_iter()
        .map(|(w, n)| {
            let c = letters_to_composition(&w).expect("shuffle of valid words ends in a pole");
            (c, count(n))
        })
        .collect()
}

/// Shuffle product of the words of two compositions.
pub fn shuffle_compositions(u: &SignedComposition, v: &SignedComposition) -> LinComb {
    shuffle(&to_integral_word(u), &to_integral_word(v))
}

fn bilinear(
    a: &LinComb,
    b: &LinComb,
    product: impl Fn(&SignedComposition, &SignedComposition) -> LinComb,
) -> LinComb {
    let mut out = LinComb::zero();
    for (u, p) in a.iter() {
        for (v, q) in b.iter() {
            let pq = p * q;
            out.add_scaled(&product(u, v), &pq);
        }
    }
    out
}

/// Bilinear extension of [`stuffle`].
pub fn stuffle_lin(a: &LinComb, b: &LinComb) -> LinComb {
    bilinear(a, b, stuffle)
}

/// Bilinear extension of [`shuffle_compositions`].
pub fn shuffle_lin(a: &LinComb, b: &LinComb) -> LinComb {
    bilinear(a, b, shuffle_compositions)
}
