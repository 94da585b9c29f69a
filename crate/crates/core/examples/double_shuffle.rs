//! A double-shuffle relation, and a span certificate for a classical
//! identity.

use tvf::algebra::dsh_identity;
use tvf::genfunc::find;
use tvf::relations::{Membership, RelationSystem};
use tvf::SignedComposition;

fn main() {
    let u: SignedComposition = "1b".parse().unwrap();
    let v: SignedComposition = "2".parse().unwrap();
    let id = dsh_identity(&u, &v);
    println!("{id}");

    let sys = RelationSystem::generate(4, 8).expect("within cap");
    let checker = sys.checker();
    let kt = find("KT-main").unwrap().instantiate(4).unwrap();
    println!("\n{kt}");
    match checker.check(&kt).unwrap() {
        Membership::Certificate(c) => {
            println!("certificate over {} relations:", c.multipliers.len());
            for (i, m) in &c.multipliers {
                println!("  {m} x [{}]", sys.rows()[*i].provenance);
            }
            assert_eq!(checker.replay(&c), kt.difference());
        }
        Membership::Residual(r) => println!("not in the span: {r:?}"),
    }
}
