//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process fails unless every criterion passes or fails only on
//! `EXPECTED_FAILURES`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config as PtConfig, RngAlgorithm, TestRng, TestRunner};
use rayon::prelude::*;

use tvf::algebra::{shuffle_compositions, shuffle_lin, stuffle, stuffle_lin};
use tvf::genfunc::{catalog, find, zeta_sha, zeta_star, CatalogEntry};
use tvf::index::compositions_of_weight;
use tvf::lincomb::ratio;
use tvf::numeric::{format_magnitude, oracle_partial_sum, Evaluator, PrecisionCtx};
use tvf::relations::{RelationSystem, SpanChecker};
use tvf::{LinComb, Part, RegPoly, Sign, SignedComposition};

/// The printed formula for `Σ' ζ(ā,b̄,1̄)` is numerically false at every
/// weight; its functional-equation form `sum-ab1-mmm-corrected` holds.
const EXPECTED_FAILURES: &[&str] = &["sum-ab1-mmm"];

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, detail: impl Into<String>) -> Self {
        Outcome {
            failures,
            detail: detail.into(),
        }
    }
}

fn entry_of(failure: &str) -> &str {
    failure.split('@').next().unwrap_or(failure)
}

struct Systems {
    by_weight: BTreeMap<u32, RelationSystem>,
}

impl Systems {
    fn build(weights: impl IntoIterator<Item = u32>) -> Self {
        let ws: Vec<u32> = weights.into_iter().collect();
        let by_weight = ws
            .par_iter()
            .map(|&w| (w, RelationSystem::generate(w, 8).expect("within cap")))
            .collect();
        Systems { by_weight }
    }

    fn checkers(&self) -> BTreeMap<u32, SpanChecker<'_>> {
        self.by_weight
            .par_iter()
            .map(|(&w, s)| (w, s.checker()))
            .collect()
    }
}

fn evaluator(digits: u32) -> Evaluator {
    Evaluator::new(PrecisionCtx::new(digits).unwrap()).unwrap()
}

/// Numeric residual of each `(entry, w)` against `tol`; failures are
/// `name@w (residual)`.
fn numeric_suite(
    entries: &[&'static CatalogEntry],
    weights: std::ops::RangeInclusive<u32>,
    ev: &Evaluator,
    tol: f64,
) -> (usize, Vec<String>, f64) {
    let jobs: Vec<(&CatalogEntry, u32)> = entries
        .iter()
        .flat_map(|e| {
            weights
                .clone()
                .filter(|&w| e.valid_at(w))
                .map(move |w| (*e, w))
        })
        .collect();
    let results: Vec<(String, f64)> = jobs
        .par_iter()
        .map(|(e, w)| {
            let id = e.instantiate(*w).unwrap();
            let (r, _) = ev.coefficient_residual(&id.difference()).unwrap();
            (format!("{}@{w}", e.name), r)
        })
        .collect();
    let worst_passing = results
        .iter()
        .filter(|(_, r)| *r <= tol)
        .map(|(_, r)| *r)
        .fold(0.0, f64::max);
    let failures = results
        .iter()
        .filter(|(_, r)| *r > tol)
        .map(|(n, r)| format!("{n} ({})", format_magnitude(*r)))
        .collect();
    (results.len(), failures, worst_passing)
}

fn symbolic_suite(
    entries: &[&'static CatalogEntry],
    weights: &[u32],
    checkers: &BTreeMap<u32, SpanChecker<'_>>,
) -> (usize, Vec<String>) {
    let mut n = 0;
    let mut failures = Vec::new();
    for e in entries {
        for &w in weights {
            if !e.valid_at(w) {
                continue;
            }
            n += 1;
            let id = e.instantiate(w).unwrap();
            if !checkers[&w].check(&id).unwrap().is_certified() {
                failures.push(format!("{}@{w} (no certificate)", e.name));
            }
        }
    }
    (n, failures)
}

fn entries(names: &[&str]) -> Vec<&'static CatalogEntry> {
    names.iter().map(|n| find(n).unwrap()).collect()
}

fn prefixed(prefixes: &[&str]) -> Vec<&'static CatalogEntry> {
    catalog()
        .iter()
        .filter(|e| {
            prefixes
                .iter()
                .any(|p| e.name == *p || e.name.starts_with(&format!("{p}-")))
        })
        .filter(|e| !e.name.ends_with("-corrected"))
        .collect()
}

// 1
fn finite_m_stuffle() -> Outcome {
    let m = 50;
    let comps: Vec<SignedComposition> = (1..=5)
        .flat_map(compositions_of_weight)
        .filter(|c| c.depth() <= 2)
        .collect();
    let mut memo: BTreeMap<String, BigRational> = BTreeMap::new();
    let mut partial = |c: &SignedComposition| {
        memo.entry(c.to_string())
            .or_insert_with(|| oracle_partial_sum(c, m))
            .clone()
    };
    let mut pairs = 0;
    let mut failures = Vec::new();
    for u in &comps {
        for v in &comps {
            if u.weight() + v.weight() > 6 {
                continue;
            }
            pairs += 1;
            let lhs = partial(u) * partial(v);
            let mut rhs = BigRational::from_integer(BigInt::from(0));
            for (w, q) in stuffle(u, v).iter() {
                rhs += q * partial(w);
            }
            if lhs != rhs {
                failures.push(format!("{u} * {v}"));
            }
        }
    }
    Outcome::new(failures, format!("{pairs} ordered pairs, M = {m}, exact"))
}

fn composition_strategy() -> impl Strategy<Value = SignedComposition> {
    prop::collection::vec((1u32..=3, any::<bool>()), 1..=3)
        .prop_filter("weight at most 5", |v| {
            v.iter().map(|p| p.0).sum::<u32>() <= 5
        })
        .prop_map(|v| {
            SignedComposition::new(
                v.into_iter()
                    .map(|(s, b)| Part::new(s, Sign::from_bool_bar(b)))
                    .collect(),
            )
            .unwrap()
        })
}

// 2
fn word_algebra_laws() -> Outcome {
    let config = PtConfig {
        cases: 500,
        failure_persistence: None,
        ..PtConfig::default()
    };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    let strat = (
        composition_strategy(),
        composition_strategy(),
        composition_strategy(),
    );
    let result = runner.run(&strat, |(a, b, c)| {
        let sc = LinComb::symbol(c.clone());
        prop_assert_eq!(stuffle(&a, &b), stuffle(&b, &a));
        prop_assert_eq!(shuffle_compositions(&a, &b), shuffle_compositions(&b, &a));
        let left = stuffle_lin(&stuffle(&a, &b), &sc);
        let right = stuffle_lin(&LinComb::symbol(a.clone()), &stuffle(&b, &c));
        prop_assert_eq!(left, right);
        let left = shuffle_lin(&shuffle_compositions(&a, &b), &sc);
        let right = shuffle_lin(&LinComb::symbol(a.clone()), &shuffle_compositions(&b, &c));
        prop_assert_eq!(left, right);
        Ok(())
    });
    let failures = match result {
        Ok(()) => vec![],
        Err(e) => vec![e.to_string()],
    };
    Outcome::new(failures, "500 random triples, stuffle and shuffle, exact")
}

// 3
fn auxiliary_identities(checkers: &BTreeMap<u32, SpanChecker<'_>>) -> Outcome {
    let aux = entries(&["z11rel", "z2bar"]);
    let ev = evaluator(40);
    let (n, mut failures, worst) = numeric_suite(&aux, 2..=2, &ev, 1e-35);
    let (m, sym) = symbolic_suite(&aux, &[2], checkers);
    failures.extend(sym);
    Outcome::new(
        failures,
        format!(
            "{n} numeric at D=40 (worst {}), {m} certificates at W=2",
            format_magnitude(worst)
        ),
    )
}

// 4
fn sha_star_difference() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let ev = evaluator(40);
    let mut worst = 0.0f64;
    for w in 3..=7 {
        for c in compositions_of_weight(w)
            .into_iter()
            .filter(|c| c.depth() == 3)
        {
            // the (1,1,c) statement needs weight at least 4, i.e. c convergent
            if c.to_string() == "1,1,1" {
                continue;
            }
            checked += 1;
            let diff = {
                let mut d = zeta_sha(&c).unwrap();
                d.add_scaled(&zeta_star(&c), &ratio(-1, 1));
                d
            };
            let one = Part::new(1, Sign::Plus);
            let head_is_one_one = c.parts()[0] == one && c.parts()[1] == one;
            let expected = if head_is_one_one {
                let last = SignedComposition::new(vec![c.parts()[2]]).unwrap();
                RegPoly::symbol("2".parse().unwrap())
                    .mul(&zeta_star(&last))
                    .scale(&ratio(1, 2))
            } else {
                RegPoly::zero()
            };
            if diff != expected {
                failures.push(format!("({c}): {diff} vs {expected}"));
            }
            // numeric cross-check of the constant terms
            let mut d = diff.clone();
            d.add_scaled(&expected, &ratio(-1, 1));
            let (r, _) = ev.coefficient_residual(&d).unwrap();
            worst = worst.max(r);
            if r > 1e-30 {
                failures.push(format!("({c}) numeric {r:e}"));
            }
        }
    }
    Outcome::new(
        failures,
        format!(
            "{checked} signed triples of weight 3..7 except (1,1,1), exact; numeric worst {}",
            format_magnitude(worst)
        ),
    )
}

// 5
fn depth_two_suite(checkers: &BTreeMap<u32, SpanChecker<'_>>) -> Outcome {
    let all = entries(&[
        "sum-depth2-pp",
        "sum-depth2-mm",
        "sum-depth2-mp",
        "sum-depth2-pm",
        "T-sum-depth2",
        "T-weighted-depth2",
    ]);
    let ev = evaluator(40);
    let (n, mut failures, worst) = numeric_suite(&all, 3..=10, &ev, 1e-35);
    let sym_entries = entries(&[
        "sum-depth2-pp",
        "sum-depth2-mm",
        "sum-depth2-mp",
        "sum-depth2-pm",
        "T-weighted-depth2",
    ]);
    let (m, sym) = symbolic_suite(&sym_entries, &[3, 4, 5, 6], checkers);
    failures.extend(sym);
    Outcome::new(
        failures,
        format!(
            "{n} numeric at D=40, w=3..10 (worst {}); {m} certificates, w=3..6",
            format_magnitude(worst)
        ),
    )
}

// 6
fn depth_three_part_a() -> Outcome {
    let all = prefixed(&[
        "sum-ab1",
        "T-sum-ab1",
        "sum-1bc",
        "sum-abc",
        "T-sum-abc",
        "T-sum-abc-total",
        "sum-a1c",
        "weighted-2b",
    ]);
    assert_eq!(all.len(), 8 + 1 + 8 + 8 + 1 + 1 + 8 + 6, "part A entries");
    let ev = evaluator(35);
    let (n, failures, worst) = numeric_suite(&all, 4..=8, &ev, 1e-30);
    Outcome::new(
        failures,
        format!(
            "{} identities, {n} instances at D=35, w=4..8 (worst passing {})",
            all.len(),
            format_magnitude(worst)
        ),
    )
}

// 7
fn depth_three_part_b(checkers: &BTreeMap<u32, SpanChecker<'_>>) -> Outcome {
    let ev = evaluator(40);
    let weighted = prefixed(&["weighted-3a2b"]);
    assert_eq!(weighted.len(), 4);
    let (n1, mut failures, w1) = numeric_suite(&weighted, 4..=8, &ev, 1e-35);
    let kt = entries(&["KT-main"]);
    let (n2, f2, w2) = numeric_suite(&kt, 4..=10, &ev, 1e-35);
    failures.extend(f2);
    let (m, sym) = symbolic_suite(&kt, &[4, 5], checkers);
    failures.extend(sym);

    // w = 4: T(2,1,1) = T(4), by direct summation and T(4) = (15/8) ζ(4)
    let direct = common::t211_by_direct_summation();
    let (z4, bound) = common::zeta_euler_maclaurin(4, 60, 20);
    assert!(bound < common::ten_to_minus(30));
    let t4 = z4 * ratio(15, 8);
    let t4 = num_traits::ToPrimitive::to_f64(&t4).unwrap();
    let oracle_gap = (direct - t4).abs();
    if oracle_gap > 1e-10 {
        failures.push(format!("direct T(2,1,1) = {direct:.15} vs T(4) = {t4:.15}"));
    }
    Outcome::new(
        failures,
        format!(
            "{n1} weighted instances w=4..8 (worst {}), {n2} main-identity instances w=4..10 (worst {}), {m} certificates, direct-summation gap {}",
            format_magnitude(w1),
            format_magnitude(w2),
            format_magnitude(oracle_gap)
        ),
    )
}

// 8
fn derivation_matches_transcription(checkers: &BTreeMap<u32, SpanChecker<'_>>) -> Outcome {
    let derivable: Vec<&CatalogEntry> =
        catalog().iter().filter(|e| e.derivable.is_some()).collect();
    let jobs: Vec<(&CatalogEntry, u32)> = derivable
        .iter()
        .flat_map(|e| (3..=6).filter(|&w| e.valid_at(w)).map(move |w| (*e, w)))
        .collect();
    let results: Vec<(String, bool, bool)> = jobs
        .par_iter()
        .map(|(e, w)| {
            let t = e.instantiate(*w).unwrap();
            let d = e.derive(*w).unwrap().unwrap();
            let mut diff = d.difference();
            diff.add_scaled(&t.difference(), &ratio(-1, 1));
            let exact = diff.is_zero();
            let in_span = exact || checkers[w].check_polynomial(&diff).unwrap().is_certified();
            (format!("{}@{w}", e.name), exact, in_span)
        })
        .collect();
    let exact = results.iter().filter(|r| r.1).count();
    let failures = results
        .iter()
        .filter(|r| !r.2)
        .map(|r| format!("{} (not in span)", r.0))
        .collect();
    Outcome::new(
        failures,
        format!(
            "{} identities, {} instances w<=6, {exact} identical before reduction",
            derivable.len(),
            results.len()
        ),
    )
}

// 9
fn evaluator_certification() -> Outcome {
    let (z2, b2) = common::zeta_euler_maclaurin(2, 100, 40);
    let (z3, b3) = common::zeta_euler_maclaurin(3, 100, 40);
    let (eta1, c1) = common::alternating_cvz(1, 100);
    let (eta2, c2) = common::alternating_cvz(2, 100);
    let tight = common::ten_to_minus(65);
    assert!(
        b2 < tight && b3 < tight && c1 < tight && c2 < tight,
        "oracle bounds"
    );
    let oracles: [(&str, BigRational); 4] = [("2", z2), ("3", z3), ("2b", -eta2), ("1b", -eta1)];
    let mut failures = Vec::new();
    let mut prefixes: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for d in [20u32, 40, 60] {
        let ev = evaluator(d);
        for (text, want) in &oracles {
            let c: SignedComposition = text.parse().unwrap();
            let got = ev.euler(&c).unwrap();
            if !common::agree(&got.value.to_rational(), want, d) {
                failures.push(format!("z({text}) at D={d}"));
            }
            prefixes
                .entry(text)
                .or_default()
                .push(got.value.to_decimal(20));
        }
    }
    for (text, p) in &prefixes {
        if p.iter().collect::<BTreeSet<_>>().len() != 1 {
            failures.push(format!(
                "z({text}) leading digits move under refinement: {p:?}"
            ));
        }
    }
    Outcome::new(
        failures,
        "z(2), z(3), z(2b), z(1b) at D = 20, 40, 60 against Euler-Maclaurin and CVZ",
    )
}

fn main() {
    let start = Instant::now();
    let systems = Systems::build(2..=6);
    let checkers = systems.checkers();
    println!(
        "relation systems W=2..6 ready in {:.1}s",
        start.elapsed().as_secs_f64()
    );

    type Criterion<'a> = (u32, &'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion<'_>> = vec![
        (1, "finite-M stuffle exactness", Box::new(finite_m_stuffle)),
        (2, "word-algebra laws", Box::new(word_algebra_laws)),
        (
            3,
            "auxiliary weight-two identities",
            Box::new(|| auxiliary_identities(&checkers)),
        ),
        (
            4,
            "shuffle vs stuffle regularization in depth three",
            Box::new(sha_star_difference),
        ),
        (
            5,
            "depth-two sum formulas",
            Box::new(|| depth_two_suite(&checkers)),
        ),
        (
            6,
            "depth-three sum formulas, 2x1 family",
            Box::new(depth_three_part_a),
        ),
        (
            7,
            "depth-three 1x1x1 family and the main weighted sum",
            Box::new(|| depth_three_part_b(&checkers)),
        ),
        (
            8,
            "derived identities agree with the catalog",
            Box::new(|| derivation_matches_transcription(&checkers)),
        ),
        (
            9,
            "evaluator certification",
            Box::new(evaluator_certification),
        ),
    ];

    let mut unexpected = 0;
    for (n, title, run) in &criteria {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        let verdict = if out.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {n}: {verdict}  {title}  [{}; {secs:.1}s]",
            out.detail
        );
        for f in &out.failures {
            let known = EXPECTED_FAILURES.contains(&entry_of(f));
            println!("    {} {f}", if known { "expected:" } else { "failed:" });
            if !known {
                unexpected += 1;
            }
        }
    }
    let corrected = find("sum-ab1-mmm-corrected").unwrap();
    let (n, f, worst) = numeric_suite(&[corrected], 4..=8, &evaluator(35), 1e-30);
    println!(
        "note: {} holds at {n} weights (worst {}), {} failures",
        corrected.name,
        format_magnitude(worst),
        f.len()
    );
    println!(
        "total {:.1}s, {unexpected} unexpected failures",
        start.elapsed().as_secs_f64()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
