//! Regularized double-shuffle relations.
//!
//! For indices `u, v` with `P = ζ_*(u)`, `Q = ζ_*(v)` the values satisfy
//! `ζ_*(u*v) = P·Q`, `ζ_sha(u⧢v) = ρ(P)·ρ(Q)` and `ζ_sha(w) = ρ(ζ_*(w))`
//! for every index `w`. Combining the three gives
//!
//! `Σ_{w ∈ u*v} ζ_sha(w) + ρ(P)·ρ(Q) = Σ_{w ∈ u⧢v} ζ_sha(w) + ρ(P·Q)`,
//!
//! which for admissible `u, v` is the classical `u*v = u⧢v`.

use crate::algebra::products::{shuffle_compositions, stuffle};
use crate::algebra::regpoly::RegPoly;
use crate::algebra::regularize::{reg_shuffle, reg_stuffle};
use crate::algebra::rho::rho;
use crate::identity::{Derivation, Identity};
use crate::index::SignedComposition;
use crate::lincomb::LinComb;

fn shuffle_regularize(c: &LinComb) -> RegPoly {
    let mut out = RegPoly::zero();
    for (w, q) in c.iter() {
        out.add_scaled(&reg_shuffle(w), q);
    }
    out
}

/// The double-shuffle identity of the product `ζ(u) ζ(v)`.
pub fn dsh_identity(u: &SignedComposition, v: &SignedComposition) -> Identity {
    let mut lhs = shuffle_regularize(&stuffle(u, v));
    let mut rhs = shuffle_regularize(&shuffle_compositions(u, v));
    if !(u.is_admissible() && v.is_admissible()) {
        let p = reg_stuffle(u);
        let q = reg_stuffle(v);
        let rp = rho(&p).expect("weight within default cap");
        let rq = rho(&q).expect("weight within default cap");
        lhs += &rp.mul(&rq);
        rhs += &rho(&p.mul(&q)).expect("weight within default cap");
    }
    Identity::new(
        format!("dsh({u};{v})"),
        u.weight() + v.weight(),
        format!("double shuffle of z({u}) and z({v})"),
        lhs,
        rhs,
        Derivation::DoubleShuffle,
    )
}

/// `ρ(ζ_*(w)) = ζ_sha(w)` for a single index; trivial when `w` is admissible.
pub fn comparison_identity(w: &SignedComposition) -> Identity {
    Identity::new(
        format!("rho({w})"),
        w.weight(),
        format!("comparison of regularizations of z({w})"),
        rho(&reg_stuffle(w)).expect("weight within default cap"),
        reg_shuffle(w),
        Derivation::DoubleShuffle,
    )
}
