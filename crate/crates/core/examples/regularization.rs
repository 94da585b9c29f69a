//! Stuffle and shuffle regularization of divergent indices and the map ρ
//! between them.

use tvf::algebra::{reg_shuffle, reg_stuffle, rho};
use tvf::SignedComposition;

fn main() {
    for text in ["1", "1,1", "1,2", "1,1b", "1,1,1", "1,2b,1"] {
        let c: SignedComposition = text.parse().unwrap();
        let star = reg_stuffle(&c);
        println!("z*({c})       = {star}");
        println!(
            "rho(z*({c}))  = {}",
            rho(&star).expect("within the weight cap")
        );
        println!("zsha({c})     = {}", reg_shuffle(&c));
        println!();
    }
}
