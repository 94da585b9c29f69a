//! Truncated formal polynomials in a few variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::algebra::RegPoly;

type Exponents = Vec<u32>;

/// A polynomial with rational coefficients in `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, q: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], q);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, BigRational::one());
        p
    }

    /// `Σ x_i` over the listed variables.
    pub fn sum_of(nvars: usize, vars: &[usize]) -> Self {
        let mut p = Poly::zero(nvars);
        for &i in vars {
            p = p.add(&Poly::var(nvars, i));
        }
        p
    }

    /// Complete homogeneous polynomial `h_k` in the listed variables; zero
    /// for negative `k`.
    pub fn complete_homogeneous(nvars: usize, vars: &[usize], k: i64) -> Self {
        if k < 0 {
            return Poly::zero(nvars);
        }
        let mut acc = Poly::one(nvars);
        let mut out = Poly::zero(nvars);
        fn rec(nvars: usize, vars: &[usize], rest: u32, acc: &mut Poly, out: &mut Poly) {
            let Some((&first, tail)) = vars.split_first() else {
                if rest == 0 {
                    *out = out.add(acc);
                }
                return;
            };
            if tail.is_empty() {
                let m = acc.mul(&Poly::var(nvars, first).pow(rest));
                *out = out.add(&m);
                return;
            }
            for e in 0..=rest {
                let mut next = acc.mul(&Poly::var(nvars, first).pow(e));
                rec(nvars, tail, rest - e, &mut next, out);
            }
        }
        rec(nvars, vars, k as u32, &mut acc, &mut out);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn add_term(&mut self, e: Exponents, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, q) in &other.terms {
            out.add_term(e.clone(), q.clone());
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * q);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, p) in &self.terms {
            for (f, q) in &other.terms {
                let g = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, p * q);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, q)| q * monomial_value(e, point))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

fn monomial_value(e: &[u32], point: &[BigRational]) -> BigRational {
    e.iter()
        .zip(point)
        .map(|(&k, x)| Pow::pow(x, k))
        .fold(BigRational::one(), |a, b| a * b)
}

/// A polynomial in `nvars` variables whose coefficients are [`RegPoly`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, RegPoly>,
}

impl FormalPoly {
    pub fn zero(nvars: usize) -> Self {
        FormalPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `weight · coeff`.
    pub fn add_product(&mut self, weight: &Poly, coeff: &RegPoly) {
        debug_assert_eq!(weight.nvars, self.nvars);
        if coeff.is_zero() {
            return;
        }
        for (e, q) in weight.terms() {
            let slot = self.terms.entry(e.clone()).or_insert_with(RegPoly::zero);
            slot.add_scaled(coeff, q);
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn add(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_product(&monomial_poly(self.nvars, e), c);
        }
        out
    }

    pub fn sub(&self, other: &FormalPoly) -> FormalPoly {
        let mut out = self.clone();
        let minus = -BigRational::one();
        for (e, c) in &other.terms {
            out.add_product(&monomial_poly(self.nvars, e).scale(&minus), c);
        }
        out
    }

    pub fn coefficient(&self, e: &[u32]) -> RegPoly {
        self.terms.get(e).cloned().unwrap_or_else(RegPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &RegPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coeff · x^e` at a rational point (`0^0 = 1`).
    pub fn specialize(&self, point: &[BigRational]) -> RegPoly {
        let mut out = RegPoly::zero();
        for (e, c) in &self.terms {
            let m = monomial_value(e, point);
            if !m.is_zero() {
                out.add_scaled(c, &m);
            }
        }
        out
    }
}

fn monomial_poly(nvars: usize, e: &[u32]) -> Poly {
    let mut p = Poly::zero(nvars);
    p.add_term(e.to_vec(), BigRational::one());
    p
}

impl fmt::Display for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (j, &k) in e.iter().enumerate() {
                let name = NAMES.get(j).copied().unwrap_or("t");
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// `C(n, k)` as a rational, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigRational {
    if k < 0 || n < 0 || k > n {
        return BigRational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}
