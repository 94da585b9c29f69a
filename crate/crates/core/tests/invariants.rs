//! Span and numeric invariants of the relation systems, the regularization
//! maps and the functional equations.

use std::sync::OnceLock;

use rayon::prelude::*;

use tvf::algebra::{dsh_identity, reg_shuffle, reg_stuffle, rho};
use tvf::genfunc::{
    catalog, depth2_equation, depth3b_equation, evaluate, find, formal_equation, Expr, Family,
    SpecPoint,
};
use tvf::index::{compositions_of_weight, mtv_decompose};
use tvf::lincomb::rat;
use tvf::numeric::{Evaluator, PrecisionCtx};
use tvf::relations::{Membership, RelationSystem};
use tvf::Sign::{Minus, Plus};
use tvf::{Identity, MtvIndex, RegPoly, Sign, SignedComposition};

fn systems() -> &'static Vec<RelationSystem> {
    static S: OnceLock<Vec<RelationSystem>> = OnceLock::new();
    S.get_or_init(|| {
        (0..=6u32)
            .into_par_iter()
            .map(|w| RelationSystem::generate(w.max(1), 8).unwrap())
            .collect()
    })
}

fn ev(digits: u32) -> Evaluator {
    Evaluator::new(PrecisionCtx::new(digits).unwrap()).unwrap()
}

fn minus(a: &RegPoly, b: &RegPoly) -> RegPoly {
    let mut d = a.clone();
    d.add_scaled(b, &rat(-1));
    d
}

fn formula(text: &str, w: u32) -> RegPoly {
    evaluate(&text.parse::<Expr>().unwrap(), w).unwrap()
}

#[test]
fn rho_agrees_with_shuffle_regularization_modulo_relations() {
    let e = ev(30);
    for w in 2..=6u32 {
        let checker = systems()[w as usize].checker();
        for c in compositions_of_weight(w)
            .into_iter()
            .filter(|c| !c.is_admissible())
        {
            let d = minus(&rho(&reg_stuffle(&c)).unwrap(), &reg_shuffle(&c));
            assert!(checker.check_polynomial(&d).unwrap().is_certified(), "{c}");
            let (r, _) = e.coefficient_residual(&d).unwrap();
            assert!(r <= 1e-30, "{c}: {r:e}");
        }
    }
}

#[test]
fn double_shuffle_identities_hold_numerically() {
    let e = ev(30);
    let tol = 1e-25;
    let comps: Vec<SignedComposition> = (1..=5).flat_map(compositions_of_weight).collect();
    let pairs: Vec<(&SignedComposition, &SignedComposition)> = comps
        .iter()
        .enumerate()
        .flat_map(|(i, u)| comps[i..].iter().map(move |v| (u, v)))
        .filter(|(u, v)| u.weight() + v.weight() <= 6)
        .collect();
    pairs.par_iter().for_each(|(u, v)| {
        let d = dsh_identity(u, v).difference();
        let degree = d.degree().unwrap_or(0);
        for t in 0..=degree.max(1) as i64 {
            let r = e.regpoly(&d, &rat(t)).unwrap();
            assert!(r.to_f64().abs() <= tol, "dsh({u};{v}) at T={t}");
        }
    });
}

#[test]
fn every_relation_row_vanishes_numerically() {
    let e = ev(40);
    for sys in &systems()[2..=5] {
        sys.rows().par_iter().for_each(|row| {
            let p = sys.basis().polynomial(&row.entries);
            let (r, _) = e.coefficient_residual(&p).unwrap();
            assert!(r <= 1e-35, "{}: {r:e}", row.provenance);
        });
    }
}

#[test]
fn relation_systems_are_deterministic() {
    let a = RelationSystem::generate(5, 8).unwrap().to_json();
    let b = RelationSystem::generate(5, 8).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(RelationSystem::from_json(&a).unwrap(), systems()[5]);
}

#[test]
fn classical_consequences_and_certificates() {
    let check = |w: u32, lhs: &str, rhs: &str| {
        let id = Identity::new(
            "t",
            w,
            "",
            formula(lhs, w),
            formula(rhs, w),
            tvf::Derivation::Transcribed,
        );
        let sys = &systems()[w as usize];
        let checker = sys.checker();
        match checker.check(&id).unwrap() {
            Membership::Certificate(c) => assert_eq!(checker.replay(&c), id.difference()),
            Membership::Residual(r) => panic!("{lhs} = {rhs} not certified: {r:?}"),
        }
    };
    check(3, "z(2,1)", "z(3)");
    check(4, "4*z(3,1)", "z(4)");
    check(2, "2*z(~2)", "-z(2)");
    check(4, "sum'[a,b=w]{z(a,b)}", "z(w)");
    let zero = Identity::new(
        "0",
        4,
        "",
        RegPoly::zero(),
        RegPoly::zero(),
        tvf::Derivation::Transcribed,
    );
    match systems()[4].checker().check(&zero).unwrap() {
        Membership::Certificate(c) => assert!(c.multipliers.is_empty()),
        Membership::Residual(_) => panic!("zero identity"),
    }
    assert_eq!(systems()[2].rank_at_degree(0), 2);
}

#[test]
fn main_identity_at_weight_four_is_t211_equals_t4() {
    let id = find("KT-main").unwrap().instantiate(4).unwrap();
    let t = |p: Vec<u32>| RegPoly::from_lincomb(mtv_decompose(&MtvIndex::new(p).unwrap()));
    assert_eq!(id.lhs, t(vec![2, 1, 1]).scale(&rat(4)));
    assert_eq!(id.rhs, t(vec![4]).scale(&rat(4)));
}

#[test]
fn depth_two_equation_is_a_polynomial_identity() {
    let e = ev(30);
    for w in 3..=7 {
        let fe = formal_equation(Family::Depth2, &[Plus, Plus], w).unwrap();
        let d = fe.lhs.sub(&fe.rhs);
        for (exps, c) in d.terms() {
            let (r, _) = e.coefficient_residual(c).unwrap();
            assert!(r <= 1e-30, "w={w} x^{}y^{}: {r:e}", exps[0], exps[1]);
        }
    }
}

#[test]
fn depth_two_specializations() {
    let p01 = SpecPoint::from_ints(0, 1, 0).unwrap();
    let p11 = SpecPoint::from_ints(1, 1, 0).unwrap();
    for w in 3..=6 {
        let checker = systems()[w as usize].checker();
        let in_span =
            |d: &RegPoly| d.is_zero() || checker.check_polynomial(d).unwrap().is_certified();

        let id = depth2_equation([Plus, Plus], w, &p01).unwrap();
        let want = minus(&formula("sum'[a,b=w]{z(a,b)}", w), &formula("z(w)", w));
        assert!(
            in_span(&minus(&id.difference(), &want))
                || in_span(&(minus(&id.difference(), &want.scale(&rat(-1)))))
        );

        let id = depth2_equation([Plus, Plus], w, &p11).unwrap();
        let want = minus(
            &formula("sum'[a,b=w]{2^(a-1)*z(a,b)}", w),
            &formula("(w+1)/2*z(w)", w),
        );
        let d1 = minus(&id.difference(), &want);
        let d2 = minus(&id.difference(), &want.scale(&rat(-1)));
        assert!(in_span(&d1) || in_span(&d2), "w={w}");
    }
    // the ζ(ā,b̄) sum at weight 3
    let want = minus(
        &formula("z(~2,~1)", 3),
        &formula("z(~1,2) - z(~1,~2) + z(~3)", 3),
    );
    let e = ev(30);
    assert!(e.coefficient_residual(&want).unwrap().0 < 1e-30);
}

#[test]
fn triple_product_equation_at_one_one_one() {
    let p = SpecPoint::from_ints(1, 1, 1).unwrap();
    let e = ev(30);
    for w in 4..=6 {
        let id = depth3b_equation([Plus, Plus, Plus], w, &p).unwrap();
        let lhs = formula("6*sum[a,b,c=w]{3^(a-1)*2^(b-1)*zs(a,b,c)}", w);
        let rhs = formula(
            "C(v,2)*z(w) + 6*sum[a,b,c=w]{zt(a,b,c)} + 3*sum[k,c=w]{(k-1)*(zt(k,c)+zt(c,k))}",
            w,
        );
        let want = minus(&lhs, &rhs);
        let d = minus(&id.difference(), &want);
        let d_flip = minus(&id.difference(), &want.scale(&rat(-1)));
        let r = e
            .coefficient_residual(&d)
            .unwrap()
            .0
            .min(e.coefficient_residual(&d_flip).unwrap().0);
        assert!(r < 1e-28, "w={w}: {r:e}");
        assert!(e.coefficient_residual(&id.difference()).unwrap().0 < 1e-28);
    }
}

#[test]
fn every_functional_equation_instance_holds_numerically() {
    let e = ev(30);
    let points = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (0, 1, 1),
        (1, 1, 1),
    ];
    let signs: Vec<[Sign; 3]> = (0..8)
        .map(|m| {
            let s = |b: usize| if m >> b & 1 == 1 { Minus } else { Plus };
            [s(2), s(1), s(0)]
        })
        .collect();
    let mut jobs = Vec::new();
    for f in [Family::Depth3A, Family::Depth3B] {
        for &s in &signs {
            for &p in &points {
                jobs.push((f, s, p, 5u32));
            }
        }
    }
    jobs.par_iter().for_each(|&(f, s, (x, y, z), w)| {
        let p = SpecPoint::from_ints(x, y, z).unwrap();
        let id = tvf::genfunc::family_equation(f, &s, w, &p).unwrap();
        let (r, _) = e.coefficient_residual(&id.difference()).unwrap();
        assert!(r < 1e-28, "{}: {r:e}", id.name);
    });
}

#[test]
fn derived_catalog_identities_hold_up_to_weight_ten() {
    let e = ev(30);
    let jobs: Vec<_> = catalog()
        .iter()
        .filter(|c| c.derivable.is_some())
        .flat_map(|c| (c.min_weight..=10).map(move |w| (c, w)))
        .collect();
    jobs.par_iter().for_each(|(c, w)| {
        let d = c.derive(*w).unwrap().unwrap();
        let (r, _) = e.coefficient_residual(&d.difference()).unwrap();
        assert!(r < 1e-25, "{} at {w}: {r:e}", c.name);
    });
}

#[test]
fn mtv_values_match_their_expansions() {
    let e = ev(30);
    for w in 2..=6u32 {
        for c in compositions_of_weight(w)
            .into_iter()
            .filter(|c| c.is_admissible())
        {
            if c.parts().iter().any(|p| p.sign == Minus) {
                continue;
            }
            let t = MtvIndex::new(c.parts().iter().map(|p| p.exponent).collect()).unwrap();
            let direct = e.mtv(&t).unwrap().value.to_rational();
            let summed = e.lincomb(&mtv_decompose(&t)).unwrap().value.to_rational();
            let gap = num_traits::ToPrimitive::to_f64(&(direct - summed))
                .unwrap()
                .abs();
            assert!(gap <= 1e-30, "T({t}): {gap:e}");
        }
    }
}
