//! Coefficient identities of the generating-function equations, checked
//! against the direct product expansion and specialized at a point.

use tvf::genfunc::{family_equation, formal_equation, product_expansion, Family, SpecPoint};
use tvf::Sign::{Minus, Plus};

fn main() {
    let w = 5;
    let signs = [Plus, Minus, Plus];
    let fe = formal_equation(Family::Depth3A, &signs, w).expect("weight >= 4");
    let (stuffle_side, shuffle_side) = product_expansion(Family::Depth3A, &signs, w).unwrap();
    let closed = fe.lhs.sub(&fe.rhs);
    let direct = stuffle_side.sub(&shuffle_side);
    println!(
        "weight {w}, signs {signs:?}: {} monomials in x, y, z",
        closed.terms().count()
    );
    println!(
        "closed form agrees with the product expansion: {}",
        closed == direct
    );
    println!("coefficient of x^2: {} = 0", closed.coefficient(&[2, 0, 0]));

    let p = SpecPoint::from_ints(1, 0, 0).unwrap();
    let id = family_equation(Family::Depth3A, &signs, w, &p).unwrap();
    println!("\nat {p}:\n{id}");
}
