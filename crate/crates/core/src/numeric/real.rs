//! Binary fixed-point reals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `mant / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Real {
    mant: BigInt,
    bits: u32,
}

impl Real {
    pub fn zero(bits: u32) -> Real {
        Real {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn from_mantissa(mant: BigInt, bits: u32) -> Real {
        Real { mant, bits }
    }

    /// Largest fixed-point value not above `q`.
    pub fn from_rational(q: &BigRational, bits: u32) -> Real {
        let num: BigInt = q.numer() << bits;
        Real {
            mant: num.div_floor(q.denom()),
            bits,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn abs(&self) -> Real {
        Real {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    /// Re-expresses at another precision (truncating when reducing).
    pub fn with_bits(&self, bits: u32) -> Real {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits),
            Ordering::Less => &self.mant >> (self.bits - bits),
        };
        Real { mant, bits }
    }

    /// Product by a rational, floored; error under one unit.
    pub fn mul_rational(&self, q: &BigRational) -> Real {
        let num = &self.mant * q.numer();
        Real {
            mant: num.div_floor(q.denom()),
            bits: self.bits,
        }
    }

    /// Product, floored; error under one unit.
    pub fn mul(&self, other: &Real) -> Real {
        let bits = self.bits.max(other.bits);
        let a = self.with_bits(bits);
        let b = other.with_bits(bits);
        Real {
            mant: (a.mant * b.mant) >> bits,
            bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let len = self.mant.bits();
        let (m, shift) = if len > 60 {
            let s = len - 60;
            ((&self.mant >> s).to_f64().unwrap_or(0.0), s as i64)
        } else {
            (self.mant.to_f64().unwrap_or(0.0), 0)
        };
        let exp = shift - self.bits as i64;
        m * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::from(1) << self.bits)
    }

    /// Rounded decimal with `places` digits after the point.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10).pow(places as u32);
        let num = (&self.mant * &scale) << 1u32;
        let den = BigInt::from(1) << (self.bits + 1);
        // round half up: floor((2x + 1) / 2)
        let n = (num + (BigInt::from(1) << self.bits)).div_floor(&den);
        let negative = n.sign() == Sign::Minus;
        let digits = n.abs().to_string();
        let digits = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = digits.split_at(digits.len() - places);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

fn aligned(a: &Real, b: &Real) -> (BigInt, BigInt, u32) {
    let bits = a.bits.max(b.bits);
    (a.with_bits(bits).mant, b.with_bits(bits).mant, bits)
}

impl Add<&Real> for &Real {
    type Output = Real;

    fn add(self, rhs: &Real) -> Real {
        let (a, b, bits) = aligned(self, rhs);
        Real { mant: a + b, bits }
    }
}

impl Sub<&Real> for &Real {
    type Output = Real;

    fn sub(self, rhs: &Real) -> Real {
        let (a, b, bits) = aligned(self, rhs);
        Real { mant: a - b, bits }
    }
}

impl Neg for &Real {
    type Output = Real;

    fn neg(self) -> Real {
        Real {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f
            .precision()
            .unwrap_or((self.bits as f64 * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_decimal(places))
    }
}

/// Short scientific form of a non-negative magnitude, `0` for zero.
pub fn format_magnitude(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.3e}")
    }
}
