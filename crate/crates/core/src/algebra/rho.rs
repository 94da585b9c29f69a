//! The comparison map `ρ` from stuffle- to shuffle-regularized polynomials.
//!
//! `ρ(e^{Tu}) = A(u) e^{Tu}` with `A(u) = exp(Σ_{n≥2} (-1)^n ζ(n) u^n / n)`,
//! so `ρ(T^k) = Σ_j k!/(k-j)! α_j T^{k-j}` where `A(u) = Σ α_j u^j`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::products::stuffle_lin;
use crate::algebra::regpoly::RegPoly;
use crate::algebra::AlgebraError;
use crate::index::{Part, SignedComposition};
use crate::lincomb::LinComb;

pub const DEFAULT_WEIGHT_CAP: u32 = 16;

/// `ρ` restricted to polynomials of weight at most `weight_cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoMap {
    pub weight_cap: u32,
}

impl Default for RhoMap {
    fn default() -> Self {
        RhoMap {
            weight_cap: DEFAULT_WEIGHT_CAP,
        }
    }
}

fn alphas() -> &'static Mutex<Vec<LinComb>> {
    static ALPHAS: OnceLock<Mutex<Vec<LinComb>>> = OnceLock::new();
    ALPHAS.get_or_init(|| Mutex::new(vec![LinComb::one(), LinComb::zero()]))
}

fn zeta(n: u32) -> LinComb {
    LinComb::symbol(SignedComposition::from_parts_unchecked(vec![Part::plus(n)]))
}

/// Taylor coefficient `α_j` of `A(u)`, a combination of products of `ζ(n)`
/// expanded by stuffle. Uses `j α_j = Σ_{n=2}^{j} (-1)^n ζ(n) α_{j-n}`.
pub fn alpha(j: u32) -> LinComb {
    let mut table = alphas().lock().expect("alpha table poisoned");
    while table.len() <= j as usize {
        let next = table.len() as u32;
        let mut acc = LinComb::zero();
        for n in 2..=next {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let term = stuffle_lin(&zeta(n), &table[(next - n) as usize]);
            acc.add_scaled(&term, &BigRational::from_integer(BigInt::from(sign)));
        }
        let inv = BigRational::one() / BigRational::from_integer(BigInt::from(next));
        table.push(acc.scale(&inv));
    }
    table[j as usize].clone()
}

impl RhoMap {
    pub fn new(weight_cap: u32) -> Self {
        RhoMap { weight_cap }
    }

    /// `ρ(T^k)`.
    pub fn t_power(&self, k: u32) -> Result<RegPoly, AlgebraError> {
        self.check(k)?;
        let mut out = RegPoly::zero();
        let mut falling = BigRational::one();
        for j in 0..=k {
            if j > 0 {
                falling *= BigRational::from_integer(BigInt::from(k - j + 1));
            }
            out.add_monomial(k - j, &alpha(j).scale(&falling));
        }
        Ok(out)
    }

    pub fn apply(&self, p: &RegPoly) -> Result<RegPoly, AlgebraError> {
        self.check(p.max_weight())?;
        let mut out = RegPoly::zero();
        for (k, coeff) in p.iter() {
            if k <= 1 {
                out.add_monomial(k, coeff);
            } else {
                out += &self.t_power(k)?.mul_lincomb(coeff);
            }
        }
        Ok(out)
    }

    fn check(&self, weight: u32) -> Result<(), AlgebraError> {
        if weight > self.weight_cap {
            Err(AlgebraError::Capacity {
                weight,
                cap: self.weight_cap,
            })
        } else {
            Ok(())
        }
    }
}

/// `ρ` with the default weight cap.
pub fn rho(p: &RegPoly) -> Result<RegPoly, AlgebraError> {
    RhoMap::default().apply(p)
}
