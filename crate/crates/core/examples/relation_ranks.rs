//! Size and rank of the double-shuffle relation systems by weight.
//!
//! Run with `cargo run --release --example relation_ranks -- 6`.

use std::time::Instant;

use tvf::relations::RelationSystem;

fn main() {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    println!("weight  symbols  rows  rank  degree-0 symbols  degree-0 rank  seconds");
    for w in 2..=top {
        let start = Instant::now();
        let sys = RelationSystem::generate(w, top).expect("within cap");
        let rank = sys.rank();
        let rank0 = sys.rank_at_degree(0);
        println!(
            "{w:>6}  {:>7}  {:>4}  {rank:>4}  {:>16}  {rank0:>13}  {:>7.2}",
            sys.basis().len(),
            sys.rows().len(),
            sys.basis().degree_count(0),
            start.elapsed().as_secs_f64()
        );
    }
}
