//! Multiple T-values as signed sums of Euler sums.

use tvf::index::mtv_decompose;
use tvf::MtvIndex;

fn main() {
    for parts in [
        vec![2],
        vec![2, 1],
        vec![3, 1],
        vec![2, 1, 1],
        vec![2, 2, 1],
    ] {
        let t = MtvIndex::new(parts).unwrap();
        println!("{t} = {}", mtv_decompose(&t));
    }
}
