//! Independent numerical oracles used by the integration tests. None of
//! them goes through the iterated-integral evaluator.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `B_0 … B_n` from `Σ_{k≤m} C(m+1, k) B_k = 0`.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn pow_rat(n: u64, s: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(n).pow(s))
}

/// `ζ(s)` for integer `s ≥ 2` by Euler–Maclaurin at cut `n` with `k`
/// Bernoulli corrections. Returns the value and a bound on the remainder
/// (the first omitted term, valid since the derivatives of `x^{-s}`
/// alternate in sign).
pub fn zeta_euler_maclaurin(s: u32, n: u64, k: usize) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    for j in 1..n {
        sum += pow_rat(j, s).recip();
    }
    sum += pow_rat(n, s - 1).recip() / q(s as i64 - 1);
    sum += pow_rat(n, s).recip() / q(2);
    let b = bernoulli(2 * k + 2);
    // rising = s (s+1) … (s+2i-2), fact = (2i)!
    let term = |i: usize| -> BigRational {
        let mut rising = BigRational::one();
        for t in 0..(2 * i - 1) {
            rising *= q(s as i64 + t as i64);
        }
        let mut fact = BigInt::one();
        for t in 1..=(2 * i) {
            fact *= BigInt::from(t);
        }
        &b[2 * i] * rising / BigRational::from_integer(fact) / pow_rat(n, s + 2 * i as u32 - 1)
    };
    for i in 1..=k {
        sum += term(i);
    }
    (sum, term(k + 1).abs())
}

/// `Σ_{j≥0} (-1)^j / (j+1)^s` by the Cohen–Rodriguez Villegas–Zagier
/// acceleration with `n` terms, in exact rationals. The summand is a
/// moment sequence, so the error is at most `2 / (3+√8)^n` times the sum.
pub fn alternating_cvz(s: u32, n: u64) -> (BigRational, BigRational) {
    // d = T_n(3), computed exactly.
    let (mut t0, mut t1) = (BigInt::one(), BigInt::from(3));
    for _ in 1..n {
        let t2 = BigInt::from(6) * &t1 - &t0;
        t0 = t1;
        t1 = t2;
    }
    let d = BigRational::from_integer(if n == 0 { t0 } else { t1 });
    let mut b = q(-1);
    let mut c = -d.clone();
    let mut acc = BigRational::zero();
    let nn = n as i64;
    for k in 0..nn {
        c = &b - &c;
        acc += &c * pow_rat(k as u64 + 1, s).recip();
        b = b * q((k + nn) * (k - nn)) / (q(2 * k + 1) * q(k + 1) / q(2));
    }
    let value = acc / &d;
    let bound = q(2) / &d;
    (value, bound)
}

/// `|a - b| ≤ 10^{-digits}`.
pub fn agree(a: &BigRational, b: &BigRational, digits: u32) -> bool {
    let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits));
    (a - b).abs() <= tol
}

/// `10^{-digits}` as a rational.
pub fn ten_to_minus(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

/// `T(2,1,1) = 8 Σ 1/(n1² n2 n3)` over `n1 > n2 > n3 > 0` with `n1, n3` odd
/// and `n2` even, by direct partial sums and a least-squares Richardson fit
/// in `(log M)^j / M^i`.
pub fn t211_by_direct_summation() -> f64 {
    let top = 4_000_000usize;
    let mut checkpoints: Vec<usize> = Vec::new();
    let mut m = 20_000f64;
    while (m as usize) < top {
        let c = (m as usize) | 1;
        checkpoints.push(c);
        m *= 1.12;
    }
    // running sums with Neumaier compensation
    let mut inner1 = 0.0f64; // Σ_{n3 < n, n3 odd} 1/n3
    let mut inner2 = (0.0f64, 0.0f64); // Σ_{n2 < n, n2 even} inner1(n2)/n2
    let mut outer = (0.0f64, 0.0f64);
    let add = |acc: &mut (f64, f64), x: f64| {
        let t = acc.0 + x;
        if acc.0.abs() >= x.abs() {
            acc.1 += (acc.0 - t) + x;
        } else {
            acc.1 += (x - t) + acc.0;
        }
        acc.0 = t;
    };
    let mut samples = Vec::new();
    let mut next = 0;
    for n in 1..=top {
        let nf = n as f64;
        if n % 2 == 1 {
            add(&mut outer, (inner2.0 + inner2.1) / (nf * nf));
            if next < checkpoints.len() && n == checkpoints[next] {
                samples.push((nf, 8.0 * (outer.0 + outer.1)));
                next += 1;
            }
            inner1 += 1.0 / nf;
        } else {
            add(&mut inner2, inner1 / nf);
        }
    }
    // basis 1, (log M)^j / M^i for i = 1..3, j = 0..2
    let cols = 1 + 3 * 3;
    let rows = samples.len();
    let mut a = DMatrix::<f64>::zeros(rows, cols);
    let mut y = DVector::<f64>::zeros(rows);
    for (r, &(mf, s)) in samples.iter().enumerate() {
        let l = mf.ln();
        a[(r, 0)] = 1.0;
        let mut col = 1;
        for i in 1..=3 {
            for j in 0..=2 {
                a[(r, col)] = l.powi(j) / mf.powi(i) * 1e4f64.powi(i);
                col += 1;
            }
        }
        y[r] = s;
    }
    let svd = a.svd(true, true);
    let x = svd.solve(&y, 1e-14).expect("least squares");
    x[0]
}
