//! Stuffle and shuffle products of signed compositions.

use tvf::algebra::{shuffle_compositions, stuffle};
use tvf::SignedComposition;

fn main() {
    let pairs = [("2", "3"), ("2b", "1b"), ("2,1", "1"), ("1b", "1b,2")];
    for (u, v) in pairs {
        let a: SignedComposition = u.parse().unwrap();
        let b: SignedComposition = v.parse().unwrap();
        println!("z({a}) * z({b})");
        println!("  stuffle: {}", stuffle(&a, &b));
        println!("  shuffle: {}", shuffle_compositions(&a, &b));
    }
}
