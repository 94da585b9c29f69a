//! Iterated integrals on `[0, 1/2]` and the Hölder split at `1/2`.
//!
//! `I_{0→1}(w) = Σ_k I_{1/2→1}(w[..k]) · I_{0→1/2}(w[k..])`, and the
//! substitution `t = 1 - s` turns `I_{1/2→1}(u)` into `I_{0→1/2}` of the
//! reversed word with `dt/t ↔ ds/(1-s)` and `dt/(-1-t) → -ds/(2-s)`.
//!
//! On `[0, 1/2]` each integral is a power series `Σ a_n y^n` at `y = 1/2`
//! whose coefficients satisfy `|a_n| ≤ 1`, so truncation after `N` terms
//! leaves a tail below `2^{-N}` and every piece has modulus at most 1.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::index::Letter;

/// A differential form `dt/t` or `sign · dt/(c - t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Form {
    Zero,
    Pole { c: i32, sign: i32 },
}

/// The letter as a form on `[0, 1/2]`.
pub(crate) fn direct(l: Letter) -> Form {
    match l {
        Letter::W0 => Form::Zero,
        Letter::Wp => Form::Pole { c: 1, sign: 1 },
        Letter::Wm => Form::Pole { c: -1, sign: 1 },
    }
}

/// The letter after `t = 1 - s`.
pub(crate) fn dual(l: Letter) -> Form {
    match l {
        Letter::W0 => Form::Pole { c: 1, sign: 1 },
        Letter::Wp => Form::Zero,
        Letter::Wm => Form::Pole { c: 2, sign: -1 },
    }
}

/// A fixed-point piece with its error bound in units of `2^{-bits}`
/// (rounding only) and whether a tail of at most `2^{-terms}` was dropped.
#[derive(Debug, Clone)]
pub(crate) struct Piece {
    pub mant: BigInt,
    pub round_ulps: f64,
    pub truncated: bool,
}

impl Piece {
    pub fn one(bits: u32) -> Piece {
        Piece {
            mant: BigInt::from(1) << bits,
            round_ulps: 0.0,
            truncated: false,
        }
    }
}

/// `∫_{1/2 > t_1 > … > t_n > 0} forms[0](t_1) ⋯ forms[n-1](t_n)`.
///
/// The innermost form must be a pole. Coefficients are stored already
/// scaled by `2^{-n}`, so the value is their plain sum.
pub(crate) fn half_integral(forms: &[Form], terms: usize, bits: u32) -> Piece {
    if forms.is_empty() {
        return Piece::one(bits);
    }
    assert!(
        matches!(forms.last(), Some(Form::Pole { .. })),
        "innermost form must be a pole"
    );
    let mut a = vec![BigInt::zero(); terms + 1];
    a[0] = BigInt::from(1) << bits;
    let mut next = vec![BigInt::zero(); terms + 1];
    for form in forms.iter().rev() {
        next[0] = BigInt::zero();
        match *form {
            Form::Zero => {
                debug_assert!(a[0].is_zero());
                for n in 1..=terms {
                    next[n] = num_integer::Integer::div_floor(&a[n], &BigInt::from(n));
                }
            }
            Form::Pole { c, sign } => {
                // b_k = (a_k + b_{k-1}/2) / c and a'_{k+1} = sign · b_k / (2(k+1))
                let mut b = BigInt::zero();
                for k in 0..terms {
                    let s = &a[k] + (&b >> 1u32);
                    b = match c {
                        1 => s,
                        -1 => -s,
                        _ => num_integer::Integer::div_floor(&s, &BigInt::from(c)),
                    };
                    let q = num_integer::Integer::div_floor(&b, &BigInt::from(2 * (k + 1)));
                    next[k + 1] = if sign < 0 { -q } else { q };
                }
            }
        }
        std::mem::swap(&mut a, &mut next);
    }
    let mant = a.iter().fold(BigInt::zero(), |acc, x| acc + x);
    // each letter adds at most 3 units per coefficient
    let per_coeff = 3.0 * forms.len() as f64;
    Piece {
        mant,
        round_ulps: per_coeff * (terms + 1) as f64,
        truncated: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn value(p: &Piece, bits: u32) -> f64 {
        (&p.mant >> (bits - 60)).to_f64().unwrap() / 2f64.powi(60)
    }

    #[test]
    fn single_letters() {
        let bits = 128;
        let ln2 = std::f64::consts::LN_2;
        // ∫_0^{1/2} dt/(1-t) = log 2
        let p = half_integral(&[direct(Letter::Wp)], 80, bits);
        assert!((value(&p, bits) - ln2).abs() < 1e-15);
        // ∫_0^{1/2} dt/(-1-t) = -log(3/2)
        let p = half_integral(&[direct(Letter::Wm)], 80, bits);
        assert!((value(&p, bits) + (1.5f64).ln()).abs() < 1e-15);
        // -∫_0^{1/2} ds/(2-s) = -log(4/3)
        let p = half_integral(&[dual(Letter::Wm)], 80, bits);
        assert!((value(&p, bits) + (4.0f64 / 3.0).ln()).abs() < 1e-15);
    }

    #[test]
    fn dilogarithm_at_half() {
        // Li_2(1/2) = π²/12 - (log 2)²/2
        let bits = 128;
        let p = half_integral(&[Form::Zero, direct(Letter::Wp)], 90, bits);
        let pi = std::f64::consts::PI;
        let ln2 = std::f64::consts::LN_2;
        assert!((value(&p, bits) - (pi * pi / 12.0 - ln2 * ln2 / 2.0)).abs() < 1e-15);
    }
}
