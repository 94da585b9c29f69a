//! Every catalog identity at a few weights, checked numerically.
//!
//! `cargo run --release --example sum_formulas -- 4 6`

use tvf::genfunc::catalog;
use tvf::numeric::{format_magnitude, Evaluator, PrecisionCtx};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<u32>().ok());
    let lo = args.next().unwrap_or(4);
    let hi = args.next().unwrap_or(lo);
    let ev = Evaluator::new(PrecisionCtx::new(30).unwrap()).unwrap();
    let mut failed = 0;
    for w in lo..=hi {
        for e in catalog().iter().filter(|e| e.valid_at(w)) {
            let id = e.instantiate(w).unwrap();
            let (r, _) = ev.coefficient_residual(&id.difference()).unwrap();
            let ok = r <= 1e-25;
            failed += usize::from(!ok);
            println!(
                "{} w={w} {:<30} {}",
                if ok { "ok  " } else { "FAIL" },
                e.name,
                format_magnitude(r)
            );
        }
    }
    println!("{failed} failures");
}
