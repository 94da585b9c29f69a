//! Weight-`w` coefficient identities of the generating-function equations.
//!
//! Regularized symbols are resolved as `ζ_*(s) = reg_stuffle(s)` and
//! `ζ_sha(s) = ρ(reg_stuffle(s))`. The second form differs from
//! `reg_shuffle(s)` only by comparison relations, and it makes the
//! difference `ζ_sha − ζ_*` explicit: it vanishes unless the index starts
//! with two or more `(1, +)` slots.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_traits::Zero;

use crate::algebra::{reg_stuffle, rho, shuffle_lin, stuffle_lin, RegPoly};
use crate::genfunc::formal::{FormalPoly, Poly};
use crate::genfunc::{GenfuncError, SpecPoint};
use crate::identity::{Derivation, Identity};
use crate::index::{Part, Sign, SignedComposition};
use crate::lincomb::{ratio, LinComb};

/// `ζ_*(c)`.
pub fn zeta_star(c: &SignedComposition) -> RegPoly {
    reg_stuffle(c)
}

/// `ζ_sha(c)` in ρ-normalized form.
pub fn zeta_sha(c: &SignedComposition) -> Result<RegPoly, GenfuncError> {
    static MEMO: OnceLock<DashMap<SignedComposition, RegPoly>> = OnceLock::new();
    let memo = MEMO.get_or_init(DashMap::new);
    if let Some(hit) = memo.get(c).map(|p| p.clone()) {
        return Ok(hit);
    }
    let p = rho(&reg_stuffle(c))?;
    memo.insert(c.clone(), p.clone());
    Ok(p)
}

/// Which of the two regularizations a generating series carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Stuffle,
    Shuffle,
}

fn resolve(c: &SignedComposition, flavor: Flavor) -> Result<RegPoly, GenfuncError> {
    match flavor {
        Flavor::Stuffle => Ok(zeta_star(c)),
        Flavor::Shuffle => zeta_sha(c),
    }
}

fn comp(parts: &[(u32, Sign)]) -> SignedComposition {
    SignedComposition::new(parts.iter().map(|&(s, z)| Part::new(s, z)).collect())
        .expect("nonempty index")
}

/// Compositions of `w` into exactly `n` positive parts, lexicographic.
pub fn parts_of(w: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            if rest >= 1 {
                prefix.push(rest);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for s in 1..rest {
            prefix.push(s);
            rec(rest - s, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(w, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The generating series `F_♯^{sgn}(x_1,…,x_d) = Σ ζ_♯(s; z) Π x_j^{s_j−1}`,
/// truncated at weight `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSeries {
    signs: Vec<Sign>,
    weight: u32,
    flavor: Flavor,
    coeffs: BTreeMap<Vec<u32>, RegPoly>,
}

impl FSeries {
    pub fn new(signs: &[Sign], weight: u32, flavor: Flavor) -> Result<Self, GenfuncError> {
        let d = signs.len();
        let mut coeffs = BTreeMap::new();
        for w in d as u32..=weight {
            for s in parts_of(w, d) {
                let parts: Vec<(u32, Sign)> =
                    s.iter().copied().zip(signs.iter().copied()).collect();
                let e = s.iter().map(|x| x - 1).collect();
                coeffs.insert(e, resolve(&comp(&parts), flavor)?);
            }
        }
        Ok(FSeries {
            signs: signs.to_vec(),
            weight,
            flavor,
            coeffs,
        })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn depth(&self) -> usize {
        self.signs.len()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `Π x_j^{e_j}`; zero beyond the truncation.
    pub fn coefficient(&self, e: &[u32]) -> RegPoly {
        self.coeffs.get(e).cloned().unwrap_or_else(RegPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &RegPoly)> {
        self.coeffs.iter()
    }

    /// The total-degree-`k` part of `F(f_1, …, f_d)` for polynomials `f_j`.
    pub fn compose(&self, forms: &[Poly], k: u32) -> FormalPoly {
        assert_eq!(forms.len(), self.depth());
        let nvars = forms[0].nvars();
        let mut out = FormalPoly::zero(nvars);
        for (e, c) in &self.coeffs {
            if e.iter().sum::<u32>() != k {
                continue;
            }
            let mut weight = Poly::one(nvars);
            for (f, &k) in forms.iter().zip(e) {
                weight = weight.mul(&f.pow(k));
            }
            out.add_product(&weight, c);
        }
        out
    }
}

/// The three families of functional equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `ζ(a; z1) ζ(b; z2)`.
    Depth2,
    /// `ζ(a, b; z1, z2) ζ(c; z3)`.
    Depth3A,
    /// `ζ(a; z1) ζ(b; z2) ζ(c; z3)`.
    Depth3B,
}

impl Family {
    pub fn arity(self) -> usize {
        match self {
            Family::Depth2 => 2,
            Family::Depth3A | Family::Depth3B => 3,
        }
    }

    pub fn min_weight(self) -> u32 {
        match self {
            Family::Depth2 => 3,
            Family::Depth3A | Family::Depth3B => 4,
        }
    }

    /// Depths of the factors of the underlying product.
    pub fn shape(self) -> &'static [usize] {
        match self {
            Family::Depth2 => &[1, 1],
            Family::Depth3A => &[2, 1],
            Family::Depth3B => &[1, 1, 1],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Depth2 => "depth2",
            Family::Depth3A => "depth3a",
            Family::Depth3B => "depth3b",
        }
    }
}

/// Both sides of a functional equation at one weight, as formal
/// polynomials in `x, y (, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalEquation {
    pub lhs: FormalPoly,
    pub rhs: FormalPoly,
}

fn h(nvars: usize, vars: &[usize], k: i64) -> Poly {
    Poly::complete_homogeneous(nvars, vars, k)
}

fn xpow(nvars: usize, i: usize, k: u32) -> Poly {
    Poly::var(nvars, i).pow(k)
}

fn mono(nvars: usize, vars: &[usize], exps: &[u32]) -> Poly {
    let mut p = Poly::one(nvars);
    for (&i, &k) in vars.iter().zip(exps) {
        p = p.mul(&xpow(nvars, i, k));
    }
    p
}

fn depth2_closed(z: [Sign; 2], w: u32) -> Result<FormalEquation, GenfuncError> {
    let (x, y) = (0, 1);
    let n = 2;
    let [z1, z2] = z;
    let k = w - 2;
    let sha1 = FSeries::new(&[z1, z1 * z2], w, Flavor::Shuffle)?;
    let sha2 = FSeries::new(&[z2, z1 * z2], w, Flavor::Shuffle)?;
    let st1 = FSeries::new(&[z1, z2], w, Flavor::Stuffle)?;
    let st2 = FSeries::new(&[z2, z1], w, Flavor::Stuffle)?;
    let xy = Poly::sum_of(n, &[x, y]);
    let (px, py) = (Poly::var(n, x), Poly::var(n, y));
    let lhs = sha1
        .compose(&[xy.clone(), py.clone()], k)
        .add(&sha2.compose(&[xy, px.clone()], k));
    let mut rhs = st1
        .compose(&[px.clone(), py.clone()], k)
        .add(&st2.compose(&[py, px], k));
    // (F(x) - F(y)) / (x - y) for the depth-one series of sign z1 z2
    let single = zeta_star(&comp(&[(w, z1 * z2)]));
    rhs.add_product(&h(n, &[x, y], k as i64), &single);
    Ok(FormalEquation { lhs, rhs })
}

fn depth3a_closed(z: [Sign; 3], w: u32) -> Result<FormalEquation, GenfuncError> {
    let (x, y, zz) = (0, 1, 2);
    let n = 3;
    let [z1, z2, z3] = z;
    let mut lhs = FormalPoly::zero(n);
    if z1 == Sign::Plus && z2 == Sign::Plus {
        let two = RegPoly::symbol(comp(&[(2, Sign::Plus)]));
        let term = two.mul(&zeta_star(&comp(&[(w - 2, z3)])));
        lhs.add_product(&xpow(n, zz, w - 3).scale(&ratio(1, 2)), &term);
    }
    for bc in parts_of(w, 2) {
        let (b, c) = (bc[0], bc[1]);
        let wa = h(n, &[x, zz], b as i64 - 2).mul(&xpow(n, y, c - 1));
        lhs.add_product(&wa, &zeta_star(&comp(&[(b, z1 * z3), (c, z2)])));
        let wb = xpow(n, x, b - 1).mul(&h(n, &[y, zz], c as i64 - 2));
        lhs.add_product(&wb, &zeta_star(&comp(&[(b, z1), (c, z2 * z3)])));
    }
    let mut rhs = FormalPoly::zero(n);
    let xz = Poly::sum_of(n, &[x, zz]);
    let yz = Poly::sum_of(n, &[y, zz]);
    for s in parts_of(w, 3) {
        let (a, b, c) = (s[0], s[1], s[2]);
        let e = [a - 1, b - 1, c - 1];
        lhs.add_product(
            &mono(n, &[x, y, zz], &e),
            &zeta_star(&comp(&[(a, z1), (b, z2), (c, z3)])),
        );
        lhs.add_product(
            &mono(n, &[x, zz, y], &e),
            &zeta_star(&comp(&[(a, z1), (b, z3), (c, z2)])),
        );
        lhs.add_product(
            &mono(n, &[zz, x, y], &e),
            &zeta_star(&comp(&[(a, z3), (b, z1), (c, z2)])),
        );

        let head = xz.pow(a - 1).mul(&yz.pow(b - 1));
        rhs.add_product(
            &head.mul(&xpow(n, y, c - 1)),
            &zeta_sha(&comp(&[(a, z1), (b, z3 * z1), (c, z1 * z2 * z3)]))?,
        );
        rhs.add_product(
            &head.mul(&xpow(n, zz, c - 1)),
            &zeta_sha(&comp(&[(a, z1), (b, z2), (c, z1 * z2 * z3)]))?,
        );
        rhs.add_product(
            &xz.pow(a - 1)
                .mul(&xpow(n, x, b - 1))
                .mul(&xpow(n, y, c - 1)),
            &zeta_sha(&comp(&[(a, z3), (b, z1 * z3), (c, z2)]))?,
        );
    }
    Ok(FormalEquation { lhs, rhs })
}

fn depth3b_closed(z: [Sign; 3], w: u32) -> Result<FormalEquation, GenfuncError> {
    let n = 3;
    let [z1, z2, z3] = z;
    let all = Poly::sum_of(n, &[0, 1, 2]);
    let sum2 = |i: usize, j: usize| Poly::sum_of(n, &[i, j]);
    // (second-slot form, third-slot variable, signs) for the six shuffle terms
    let shuffle_terms: [(Poly, usize, [Sign; 3]); 6] = [
        (sum2(2, 1), 1, [z1, z3 * z1, z2 * z3]),
        (sum2(2, 1), 2, [z1, z2 * z1, z3 * z2]),
        (sum2(2, 0), 0, [z2, z3 * z2, z1 * z3]),
        (sum2(2, 0), 2, [z2, z1 * z2, z3 * z1]),
        (sum2(0, 1), 1, [z3, z1 * z3, z2 * z1]),
        (sum2(0, 1), 0, [z3, z2 * z3, z1 * z2]),
    ];
    // (variable order, signs) for the six stuffle permutations
    let zs = [z1, z2, z3];
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut lhs = FormalPoly::zero(n);
    let mut rhs = FormalPoly::zero(n);
    for s in parts_of(w, 3) {
        let (a, b, c) = (s[0], s[1], s[2]);
        for (second, third, sg) in &shuffle_terms {
            let weight = all
                .pow(a - 1)
                .mul(&second.pow(b - 1))
                .mul(&xpow(n, *third, c - 1));
            lhs.add_product(
                &weight,
                &zeta_sha(&comp(&[(a, sg[0]), (b, sg[1]), (c, sg[2])]))?,
            );
        }
        for p in &perms {
            let weight = mono(n, p, &[a - 1, b - 1, c - 1]);
            rhs.add_product(
                &weight,
                &zeta_star(&comp(&[(a, zs[p[0]]), (b, zs[p[1]]), (c, zs[p[2]])])),
            );
        }
    }
    // merged pairs: (i, j) merge into k, the remaining slot carries c
    let pairs = [(0usize, 1usize, 2usize), (2, 0, 1), (1, 2, 0)];
    for kc in parts_of(w, 2) {
        let (k, c) = (kc[0], kc[1]);
        if k < 2 {
            continue;
        }
        for &(i, j, r) in &pairs {
            let merged = zs[i] * zs[j];
            let mut coeff = zeta_star(&comp(&[(k, merged), (c, zs[r])]));
            coeff += &zeta_star(&comp(&[(c, zs[r]), (k, merged)]));
            let weight = h(n, &[i, j], k as i64 - 2).mul(&xpow(n, r, c - 1));
            rhs.add_product(&weight, &coeff);
        }
    }
    rhs.add_product(
        &h(n, &[0, 1, 2], w as i64 - 3),
        &zeta_star(&comp(&[(w, z1 * z2 * z3)])),
    );
    Ok(FormalEquation { lhs, rhs })
}

type EquationKey = (Family, Vec<Sign>, u32);

/// Closed-form functional equation of a family at weight `w`, memoized.
pub fn formal_equation(
    family: Family,
    signs: &[Sign],
    w: u32,
) -> Result<Arc<FormalEquation>, GenfuncError> {
    check_family(family, signs, w)?;
    static MEMO: OnceLock<DashMap<EquationKey, Arc<FormalEquation>>> = OnceLock::new();
    let memo = MEMO.get_or_init(DashMap::new);
    let key = (family, signs.to_vec(), w);
    if let Some(hit) = memo.get(&key).map(|e| Arc::clone(&e)) {
        return Ok(hit);
    }
    let eq = match family {
        Family::Depth2 => depth2_closed([signs[0], signs[1]], w)?,
        Family::Depth3A => depth3a_closed([signs[0], signs[1], signs[2]], w)?,
        Family::Depth3B => depth3b_closed([signs[0], signs[1], signs[2]], w)?,
    };
    let eq = Arc::new(eq);
    memo.insert(key, Arc::clone(&eq));
    Ok(eq)
}

fn check_family(family: Family, signs: &[Sign], w: u32) -> Result<(), GenfuncError> {
    if signs.len() != family.arity() {
        return Err(GenfuncError::Point(format!(
            "{} takes {} signs, got {}",
            family.label(),
            family.arity(),
            signs.len()
        )));
    }
    if w < family.min_weight() {
        return Err(GenfuncError::Range {
            what: family.label().to_string(),
            weight: w,
            min: family.min_weight(),
        });
    }
    Ok(())
}

/// Both sides of the product expansion, term by term: for every `s` of
/// weight `w`, the stuffle expansion of the product (plus the correction
/// `Π ρ(P_i) − Π P_i`) against its shuffle expansion, weighted by
/// `Π x_j^{s_j − 1}`. Returns `(stuffle side, shuffle side)`.
///
/// Independent of the closed forms: nothing here is reindexed by hand.
pub fn product_expansion(
    family: Family,
    signs: &[Sign],
    w: u32,
) -> Result<(FormalPoly, FormalPoly), GenfuncError> {
    check_family(family, signs, w)?;
    let shape = family.shape();
    let n = signs.len();
    let vars: Vec<usize> = (0..n).collect();
    let mut st = FormalPoly::zero(n);
    let mut sh = FormalPoly::zero(n);
    for s in parts_of(w, n) {
        let mut factors = Vec::new();
        let mut at = 0;
        for &len in shape {
            let parts: Vec<(u32, Sign)> = (at..at + len).map(|j| (s[j], signs[j])).collect();
            factors.push(comp(&parts));
            at += len;
        }
        let weight = mono(n, &vars, &s.iter().map(|x| x - 1).collect::<Vec<_>>());
        let mut stuffled = LinComb::symbol(factors[0].clone());
        let mut shuffled = LinComb::symbol(factors[0].clone());
        let mut star_product = zeta_star(&factors[0]);
        let mut sha_product = zeta_sha(&factors[0])?;
        for f in &factors[1..] {
            stuffled = stuffle_lin(&stuffled, &LinComb::symbol(f.clone()));
            shuffled = shuffle_lin(&shuffled, &LinComb::symbol(f.clone()));
            star_product = star_product.mul(&zeta_star(f));
            sha_product = sha_product.mul(&zeta_sha(f)?);
        }
        let mut left = RegPoly::zero();
        for (t, q) in stuffled.iter() {
            left.add_scaled(&zeta_star(t), q);
        }
        left += &sha_product;
        left -= &star_product;
        let mut right = RegPoly::zero();
        for (t, q) in shuffled.iter() {
            right.add_scaled(&zeta_sha(t)?, q);
        }
        st.add_product(&weight, &left);
        sh.add_product(&weight, &right);
    }
    Ok((st, sh))
}

fn signs_label(signs: &[Sign]) -> String {
    signs
        .iter()
        .map(|s| if s.is_minus() { '-' } else { '+' })
        .collect()
}

fn equation(
    family: Family,
    signs: &[Sign],
    w: u32,
    p: &SpecPoint,
) -> Result<Identity, GenfuncError> {
    let eq = formal_equation(family, signs, w)?;
    let coords = p.coordinates(family.arity());
    let lhs = eq.lhs.specialize(&coords);
    let rhs = eq.rhs.specialize(&coords);
    let (left, right) = match family {
        Family::Depth3A => ("stuffle side", "shuffle side"),
        _ => ("shuffle side", "stuffle side"),
    };
    let name = format!("fe-{}({})@{}", family.label(), signs_label(signs), p);
    let provenance = format!(
        "{left} = {right} of the {} product with signs ({}), weight-{w} coefficient at {p}",
        match family {
            Family::Depth2 => "single-by-single",
            Family::Depth3A => "double-by-single",
            Family::Depth3B => "triple single",
        },
        signs_label(signs),
    );
    Ok(Identity::new(
        name,
        w,
        provenance,
        lhs,
        rhs,
        Derivation::DerivedFromFunctionalEquation,
    ))
}

/// The depth-two equation `F_sha(x+y, y) + F_sha(x+y, x) = F_*(x, y) +
/// F_*(y, x) + ζ(w) f_w(x, y)` at weight `w`, specialized at `p`.
pub fn depth2_equation(signs: [Sign; 2], w: u32, p: &SpecPoint) -> Result<Identity, GenfuncError> {
    if !p.z().is_zero() {
        return Err(GenfuncError::Point(format!(
            "the depth-two equation has two variables; got {p}"
        )));
    }
    equation(Family::Depth2, &signs, w, p)
}

/// Double-by-single equation (stuffle side with the `δ ζ(2) ζ_*(w−2)/2`
/// term on the left), specialized at `p`.
pub fn depth3a_equation(signs: [Sign; 3], w: u32, p: &SpecPoint) -> Result<Identity, GenfuncError> {
    equation(Family::Depth3A, &signs, w, p)
}

/// Triple-product equation (six shuffle terms on the left), specialized at
/// `p`.
pub fn depth3b_equation(signs: [Sign; 3], w: u32, p: &SpecPoint) -> Result<Identity, GenfuncError> {
    equation(Family::Depth3B, &signs, w, p)
}

/// Any family by value.
pub fn family_equation(
    family: Family,
    signs: &[Sign],
    w: u32,
    p: &SpecPoint,
) -> Result<Identity, GenfuncError> {
    match family {
        Family::Depth2 => {
            let s: [Sign; 2] = signs
                .try_into()
                .map_err(|_| GenfuncError::Point("depth2 takes 2 signs".into()))?;
            depth2_equation(s, w, p)
        }
        _ => equation(family, signs, w, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    fn z(s: &str) -> RegPoly {
        RegPoly::symbol(s.parse().unwrap())
    }

    const ALL3: [[Sign; 3]; 8] = [
        [P, P, P],
        [P, P, M],
        [P, M, P],
        [P, M, M],
        [M, P, P],
        [M, P, M],
        [M, M, P],
        [M, M, M],
    ];

    #[test]
    fn parts_enumeration() {
        assert_eq!(parts_of(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(parts_of(5, 3).len(), 6);
        assert!(parts_of(2, 3).is_empty());
    }

    #[test]
    fn closed_forms_match_product_expansions() {
        for w in 3..=5 {
            for s in [[P, P], [P, M], [M, P], [M, M]] {
                let eq = formal_equation(Family::Depth2, &s, w).unwrap();
                let (st, sh) = product_expansion(Family::Depth2, &s, w).unwrap();
                assert_eq!(eq.lhs, sh, "depth2 {s:?} w={w}");
                assert_eq!(eq.rhs, st, "depth2 {s:?} w={w}");
            }
        }
        for w in 4..=5 {
            for s in ALL3 {
                let eq = formal_equation(Family::Depth3A, &s, w).unwrap();
                let (st, sh) = product_expansion(Family::Depth3A, &s, w).unwrap();
                assert_eq!(eq.lhs, st, "depth3a {s:?} w={w}");
                assert_eq!(eq.rhs, sh, "depth3a {s:?} w={w}");
                let eq = formal_equation(Family::Depth3B, &s, w).unwrap();
                let (st, sh) = product_expansion(Family::Depth3B, &s, w).unwrap();
                assert_eq!(eq.lhs, sh, "depth3b {s:?} w={w}");
                assert_eq!(eq.rhs, st, "depth3b {s:?} w={w}");
            }
        }
    }

    #[test]
    fn depth2_sum_formula_at_zero_one() {
        let p = SpecPoint::from_ints(0, 1, 0).unwrap();
        let id = depth2_equation([P, P], 4, &p).unwrap();
        // Σ_{a≥2} ζ(a,b) = ζ(4) after the ζ_*(1,3) terms cancel
        let expect = &(&z("2,2") + &z("3,1")) - &z("4");
        assert_eq!(id.difference(), expect);
        assert!(id.is_homogeneous());
    }

    #[test]
    fn weight_and_point_errors() {
        let p = SpecPoint::from_ints(1, 0, 0).unwrap();
        assert!(matches!(
            depth2_equation([P, P], 2, &p),
            Err(GenfuncError::Range { .. })
        ));
        assert!(depth3a_equation([P, P, P], 3, &p).is_err());
        let q = SpecPoint::from_ints(0, 0, 1).unwrap();
        assert!(matches!(
            depth2_equation([P, P], 4, &q),
            Err(GenfuncError::Point(_))
        ));
    }
}
