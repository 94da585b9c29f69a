//! Machine-readable verification reports, as `tvf verify` writes them.

use tvf::cli::{verify_entry, write_reports, Format};
use tvf::genfunc::catalog;
use tvf::numeric::{Evaluator, PrecisionCtx};
use tvf::relations::RelationSystem;

fn main() {
    let w = 4;
    let ev = Evaluator::new(PrecisionCtx::new(30).unwrap()).unwrap();
    let sys = RelationSystem::generate(w, 8).unwrap();
    let checker = sys.checker();
    let reports: Vec<_> = catalog()
        .iter()
        .filter(|e| e.valid_at(w) && e.name.starts_with("sum-depth2"))
        .map(|e| verify_entry(e, w, &ev, Some(&checker)).unwrap())
        .collect();
    write_reports(&mut std::io::stdout(), &reports, Format::Json).unwrap();
}
