//! Exact truncated nested sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::index::SignedComposition;

/// `Σ_{M ≥ n_1 > … > n_d > 0} Π z_j^{n_j} / n_j^{s_j}` as an exact rational.
pub fn oracle_partial_sum(c: &SignedComposition, m: usize) -> BigRational {
    // inner[n] = sum over the slots to the right with largest index ≤ n
    let mut inner = vec![BigRational::one(); m + 1];
    for p in c.parts().iter().rev() {
        let mut next = vec![BigRational::zero(); m + 1];
        let mut acc = BigRational::zero();
        for n in 1..=m {
            let mut term =
                BigRational::new(BigInt::one(), BigInt::from(n).pow(p.exponent)) * &inner[n - 1];
            if p.sign.is_minus() && n % 2 == 1 {
                term = -term;
            }
            acc += term;
            next[n] = acc.clone();
        }
        inner = next;
    }
    inner[m].clone()
}
