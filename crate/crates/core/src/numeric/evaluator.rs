//! Certified evaluation of admissible Euler sums and multiple T-values.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::RegPoly;
use crate::index::{mtv_decompose, to_integral_word, Letter, MtvIndex, SignedComposition};
use crate::lincomb::LinComb;
use crate::numeric::holder::{direct, dual, half_integral, Form, Piece};
use crate::numeric::real::Real;
use crate::numeric::NumericError;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal digits plus guard digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionCtx {
    pub digits: u32,
    pub guard: u32,
    /// Largest series length allowed before giving up.
    pub max_terms: usize,
}

pub const DEFAULT_GUARD: u32 = 15;
pub const DEFAULT_MAX_TERMS: usize = 20_000;

impl PrecisionCtx {
    pub fn new(digits: u32) -> Result<Self, NumericError> {
        Self::with_guard(digits, DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self, NumericError> {
        if digits < 10 {
            return Err(NumericError::Precision(digits));
        }
        Ok(PrecisionCtx {
            digits,
            guard,
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    /// Fractional bits of the working fixed-point format.
    pub fn bits(&self) -> u32 {
        ((self.digits + self.guard) as f64 * LOG2_10).ceil() as u32 + 16
    }

    /// Series length: tails of all pieces of a word stay below
    /// `10^{-(D + guard/2)}` for words of length up to 63.
    pub fn terms(&self) -> usize {
        ((self.digits as f64 + self.guard as f64 / 2.0) * LOG2_10).ceil() as usize + 8
    }

    pub fn target(&self) -> f64 {
        10f64.powi(-(self.digits as i32))
    }
}

/// A value and a rigorous bound on its absolute error.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub value: Real,
    pub error_bound: f64,
}

impl EvalResult {
    pub fn exact(q: &BigRational, bits: u32) -> EvalResult {
        EvalResult {
            value: Real::from_rational(q, bits),
            error_bound: ulp(bits),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

fn ulp(bits: u32) -> f64 {
    2f64.powi(-(bits as i32))
}

type PieceKey = (bool, Vec<Letter>);

/// Evaluator at a fixed precision, memoizing compositions and split pieces.
pub struct Evaluator {
    ctx: PrecisionCtx,
    bits: u32,
    terms: usize,
    euler: DashMap<SignedComposition, EvalResult>,
    pieces: DashMap<PieceKey, Piece>,
}

impl Evaluator {
    pub fn new(ctx: PrecisionCtx) -> Result<Self, NumericError> {
        let terms = ctx.terms();
        if terms > ctx.max_terms {
            return Err(NumericError::Capacity {
                needed: terms,
                cap: ctx.max_terms,
                achieved: 2f64.powi(-(ctx.max_terms.min(1000) as i32)),
            });
        }
        Ok(Evaluator {
            ctx,
            bits: ctx.bits(),
            terms,
            euler: DashMap::new(),
            pieces: DashMap::new(),
        })
    }

    pub fn ctx(&self) -> PrecisionCtx {
        self.ctx
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of memoized compositions.
    pub fn cached(&self) -> usize {
        self.euler.len()
    }

    fn piece(&self, is_dual: bool, letters: &[Letter]) -> Piece {
        let key = (is_dual, letters.to_vec());
        if let Some(p) = self.pieces.get(&key).map(|p| p.clone()) {
            return p;
        }
        let forms: Vec<Form> = if is_dual {
            letters.iter().rev().map(|&l| dual(l)).collect()
        } else {
            letters.iter().map(|&l| direct(l)).collect()
        };
        let p = half_integral(&forms, self.terms, self.bits);
        self.pieces.insert(key, p.clone());
        p
    }

    /// `ζ(c)` for admissible `c`.
    pub fn euler(&self, c: &SignedComposition) -> Result<EvalResult, NumericError> {
        if !c.is_admissible() || c.is_empty() {
            return Err(NumericError::NotAdmissible(c.to_string()));
        }
        if let Some(hit) = self.euler.get(c).map(|r| r.clone()) {
            return Ok(hit);
        }
        let word = to_integral_word(c);
        let letters = word.letters();
        if letters.len() > 63 {
            return Err(NumericError::Capacity {
                needed: letters.len(),
                cap: 63,
                achieved: f64::INFINITY,
            });
        }
        let tail = 2f64.powi(-(self.terms as i32));
        let u = ulp(self.bits);
        let mut mant = BigInt::zero();
        let mut err = 0.0;
        for k in 0..=letters.len() {
            let p = self.piece(true, &letters[..k]);
            let q = self.piece(false, &letters[k..]);
            mant += (&p.mant * &q.mant) >> self.bits;
            let ep = p.round_ulps * u + if p.truncated { tail } else { 0.0 };
            let eq = q.round_ulps * u + if q.truncated { tail } else { 0.0 };
            err += ep + eq + ep * eq + u;
        }
        let out = EvalResult {
            value: Real::from_mantissa(mant, self.bits),
            error_bound: err,
        };
        if out.error_bound > self.ctx.target() {
            return Err(NumericError::Capacity {
                needed: self.terms,
                cap: self.ctx.max_terms,
                achieved: out.error_bound,
            });
        }
        self.euler.insert(c.clone(), out.clone());
        Ok(out)
    }

    /// `T(t)` as the signed sum of its Euler-sum expansion.
    pub fn mtv(&self, t: &MtvIndex) -> Result<EvalResult, NumericError> {
        if !t.is_admissible() {
            return Err(NumericError::NotAdmissible(t.to_string()));
        }
        self.lincomb(&mtv_decompose(t))
    }

    /// Value of a combination of admissible symbols (constant term exact).
    pub fn lincomb(&self, c: &LinComb) -> Result<EvalResult, NumericError> {
        let u = ulp(self.bits);
        let mut value = Real::zero(self.bits);
        let mut err = 0.0;
        for (s, q) in c.iter() {
            if s.is_empty() {
                value = &value + &Real::from_rational(q, self.bits);
                err += u;
                continue;
            }
            let r = self.euler(s)?;
            value = &value + &r.value.mul_rational(q);
            err += r.error_bound * q.abs().to_f64().unwrap_or(f64::INFINITY) + u;
        }
        Ok(EvalResult {
            value,
            error_bound: err,
        })
    }

    /// Value of `p` at `T = t`, by Horner's rule over the coefficients.
    pub fn regpoly(&self, p: &RegPoly, t: &BigRational) -> Result<EvalResult, NumericError> {
        let u = ulp(self.bits);
        let tf = t.abs().to_f64().unwrap_or(f64::INFINITY);
        let mut value = Real::zero(self.bits);
        let mut err = 0.0;
        let top = p.degree().unwrap_or(0);
        for k in (0..=top).rev() {
            value = value.mul_rational(t);
            err = err * tf + u;
            if let Some(c) = p.coeff_ref(k) {
                let r = self.lincomb(c)?;
                value = &value + &r.value;
                err += r.error_bound;
            }
        }
        Ok(EvalResult {
            value,
            error_bound: err,
        })
    }

    /// Largest modulus over the `T`-coefficients of `p`, with its error bound.
    pub fn coefficient_residual(&self, p: &RegPoly) -> Result<(f64, f64), NumericError> {
        let mut worst = (0.0f64, 0.0f64);
        for (_, c) in p.iter() {
            let r = self.lincomb(c)?;
            let v = r.value.abs().to_f64();
            if v > worst.0 {
                worst.0 = v;
            }
            worst.1 = worst.1.max(r.error_bound);
        }
        Ok(worst)
    }
}

fn shared(ctx: PrecisionCtx) -> Result<Arc<Evaluator>, NumericError> {
    static POOL: OnceLock<DashMap<PrecisionCtx, Arc<Evaluator>>> = OnceLock::new();
    let pool = POOL.get_or_init(DashMap::new);
    if let Some(e) = pool.get(&ctx).map(|e| Arc::clone(&e)) {
        return Ok(e);
    }
    let e = Arc::new(Evaluator::new(ctx)?);
    Ok(Arc::clone(pool.entry(ctx).or_insert(e).value()))
}

/// `ζ(c)` to `ctx.digits` digits, through a process-wide cache.
pub fn eval_euler(c: &SignedComposition, ctx: PrecisionCtx) -> Result<EvalResult, NumericError> {
    shared(ctx)?.euler(c)
}

pub fn eval_mtv(t: &MtvIndex, ctx: PrecisionCtx) -> Result<EvalResult, NumericError> {
    shared(ctx)?.mtv(t)
}

pub fn eval_regpoly(
    p: &RegPoly,
    t_value: &BigRational,
    ctx: PrecisionCtx,
) -> Result<EvalResult, NumericError> {
    shared(ctx)?.regpoly(p, t_value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SignedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn low_precision_constants() {
        let ctx = PrecisionCtx::new(20).unwrap();
        let pi = std::f64::consts::PI;
        let z2 = eval_euler(&c("2"), ctx).unwrap();
        assert!((z2.to_f64() - pi * pi / 6.0).abs() < 1e-15);
        assert!(z2.error_bound < 1e-20);
        let l2 = eval_euler(&c("1b"), ctx).unwrap();
        assert!((l2.to_f64() + std::f64::consts::LN_2).abs() < 1e-15);
        let z2b = eval_euler(&c("2b"), ctx).unwrap();
        assert!((z2b.to_f64() + pi * pi / 12.0).abs() < 1e-15);
    }

    #[test]
    fn euler_relation_to_digits() {
        let ctx = PrecisionCtx::new(30).unwrap();
        let a = eval_euler(&c("2,1"), ctx).unwrap();
        let b = eval_euler(&c("3"), ctx).unwrap();
        assert_eq!(a.value.to_decimal(30), b.value.to_decimal(30));
        assert_eq!(b.value.to_decimal(30), "1.202056903159594285399738161511");
    }

    #[test]
    fn divergent_rejected() {
        let ctx = PrecisionCtx::new(20).unwrap();
        assert!(matches!(
            eval_euler(&c("1,2"), ctx),
            Err(NumericError::NotAdmissible(_))
        ));
        assert!(PrecisionCtx::new(5).is_err());
    }

    #[test]
    fn regpoly_constant_term() {
        let ctx = PrecisionCtx::new(20).unwrap();
        let p = crate::algebra::reg_shuffle(&c("1,2"));
        let at0 = eval_regpoly(&p, &BigRational::zero(), ctx).unwrap();
        let z21 = eval_euler(&c("2,1"), ctx).unwrap();
        assert!((at0.to_f64() + 2.0 * z21.to_f64()).abs() < 1e-15);
        let t2 = eval_mtv(&MtvIndex::new(vec![2]).unwrap(), ctx).unwrap();
        assert_eq!(t2.value.to_decimal(19), "2.4674011002723396547");
    }
}
