//! `Σ_{a+b+c=w} 2^b (3^{a-1} - 1) T(a,b,c) = 2/3 (w-1)(w-2) T(w)`, checked
//! numerically from weight 4 up.

use tvf::genfunc::find;
use tvf::numeric::{format_magnitude, Evaluator, PrecisionCtx};

fn main() {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let entry = find("KT-main").unwrap();
    println!("{} = {}", entry.lhs_text, entry.rhs_text);
    let ev = Evaluator::new(PrecisionCtx::new(40).unwrap()).unwrap();
    for w in entry.min_weight..=top {
        let id = entry.instantiate(w).unwrap();
        let lhs = ev.lincomb(&id.lhs.coeff(0)).unwrap();
        let (r, _) = ev.coefficient_residual(&id.difference()).unwrap();
        println!(
            "w={w:>2}  {}  residual {}",
            lhs.value.to_decimal(30),
            format_magnitude(r)
        );
    }
}
