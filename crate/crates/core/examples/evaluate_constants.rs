//! Certified values of Euler sums and multiple T-values.
//!
//! `cargo run --release --example evaluate_constants -- 50`

use tvf::index::{parse_index, Index};
use tvf::numeric::{format_magnitude, Evaluator, PrecisionCtx};

fn main() {
    let digits: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40);
    let ev = Evaluator::new(PrecisionCtx::new(digits).expect("digits >= 10")).expect("evaluator");
    for text in [
        "2", "3", "2b", "1b", "1b,1b", "3,1", "2b,1", "T:2", "T:2,1,1", "T:4",
    ] {
        let r = match parse_index(text).expect("valid index") {
            Index::Euler(c) => ev.euler(&c),
            Index::Mtv(t) => ev.mtv(&t),
        }
        .expect("admissible");
        println!(
            "{text:>8}  {}  (± {})",
            r.value.to_decimal(digits as usize),
            format_magnitude(r.error_bound)
        );
    }
}
