//! Every sum formula, weighted sum formula and auxiliary identity, as
//! weight-parameterized formulas.

use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::RegPoly;
use crate::genfunc::dsl::{evaluate, Expr};
use crate::genfunc::equations::{family_equation, Family};
use crate::genfunc::{GenfuncError, SpecPoint};
use crate::identity::{Derivation, Identity};
use crate::index::Sign;
use crate::lincomb::ratio;

/// Which functional equation an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    Depth2,
    Depth3a,
    Depth3b,
    Aux,
}

impl Section {
    pub fn label(self) -> &'static str {
        match self {
            Section::Depth2 => "depth2",
            Section::Depth3a => "depth3a",
            Section::Depth3b => "depth3b",
            Section::Aux => "aux",
        }
    }

    pub fn parse(text: &str) -> Option<Section> {
        [
            Section::Depth2,
            Section::Depth3a,
            Section::Depth3b,
            Section::Aux,
        ]
        .into_iter()
        .find(|s| s.label() == text)
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A linear combination of functional-equation instances at one point that
/// yields the entry once lower sum formulas and regularization are used.
#[derive(Debug, Clone)]
pub struct Derivable {
    pub family: Family,
    pub point: SpecPoint,
    /// `(signs z_j, multiplier)`.
    pub terms: Vec<(Vec<Sign>, BigRational)>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub section: Section,
    pub provenance: &'static str,
    pub min_weight: u32,
    /// Set for identities that exist at one weight only.
    pub max_weight: Option<u32>,
    pub lhs_text: &'static str,
    pub rhs_text: &'static str,
    lhs: Expr,
    rhs: Expr,
    pub derivable: Option<Derivable>,
}

impl CatalogEntry {
    fn check_weight(&self, w: u32) -> Result<(), GenfuncError> {
        let too_high = self.max_weight.is_some_and(|m| w > m);
        if w < self.min_weight || too_high {
            return Err(GenfuncError::Range {
                what: self.name.to_string(),
                weight: w,
                min: self.min_weight,
            });
        }
        Ok(())
    }

    pub fn valid_at(&self, w: u32) -> bool {
        self.check_weight(w).is_ok()
    }

    /// The entry at weight `w`.
    pub fn instantiate(&self, w: u32) -> Result<Identity, GenfuncError> {
        self.check_weight(w)?;
        Ok(Identity::new(
            self.name,
            w,
            self.provenance,
            evaluate(&self.lhs, w)?,
            evaluate(&self.rhs, w)?,
            Derivation::Transcribed,
        ))
    }

    /// The functional-equation combination the entry is read off from, if
    /// it has one.
    pub fn derive(&self, w: u32) -> Result<Option<Identity>, GenfuncError> {
        self.check_weight(w)?;
        let Some(d) = &self.derivable else {
            return Ok(None);
        };
        let mut lhs = RegPoly::zero();
        let mut rhs = RegPoly::zero();
        for (signs, m) in &d.terms {
            let id = family_equation(d.family, signs, w, &d.point)?;
            lhs.add_scaled(&id.lhs, m);
            rhs.add_scaled(&id.rhs, m);
        }
        Ok(Some(Identity::new(
            format!("{} (derived)", self.name),
            w,
            format!("{} functional equation at {}", d.family.label(), d.point),
            lhs,
            rhs,
            Derivation::DerivedFromFunctionalEquation,
        )))
    }
}

type Raw = (
    &'static str,
    Section,
    &'static str,
    u32,
    &'static str,
    &'static str,
    Option<(Family, (i64, i64, i64), &'static [(&'static str, i64, i64)])>,
);

use Family::{Depth2 as F2, Depth3A as FA, Depth3B as FB};
use Section::{Aux, Depth2 as S2, Depth3a as SA, Depth3b as SB};

const RAW: &[Raw] = &[
    // double sums
    ("sum-depth2-pp", S2, "sum of zeta(a,b) over a+b=w, a>=2", 3,
        "sum'[a,b=w]{z(a,b)}", "z(w)",
        Some((F2, (0, 1, 0), &[("++", 1, 1)]))),
    ("sum-depth2-mm", S2, "sum of zeta(-a,-b) over a+b=w, a>=2", 3,
        "sum'[a,b=w]{z(~a,~b)}", "z(~1,v) - z(~1,~v) + z(~w)",
        Some((F2, (1, 0, 0), &[("+-", 1, 1)]))),
    ("sum-depth2-mp", S2, "sum of zeta(-a,b) over a+b=w, a>=2", 3,
        "sum'[a,b=w]{z(~a,b)}", "z(~v,~1) + z(~1,~v) - z(~v,1) - z(~1,v) + z(w)",
        Some((F2, (1, 0, 0), &[("--", 1, 1)]))),
    ("sum-depth2-pm", S2, "sum of zeta(a,-b) over a+b=w, a>=2", 3,
        "sum'[a,b=w]{z(a,~b)}", "z(~v,1) - z(~v,~1) + z(~w)",
        Some((F2, (0, 1, 0), &[("+-", 1, 1)]))),
    ("T-sum-depth2", S2, "sum of double T-values T(a,b) over a+b=w, a>=2", 3,
        "sum'[a,b=w]{T(a,b)}",
        "2*(z(w) - z(~w) + z(~v,~1) + z(~1,~v) - z(~v,1) - z(~1,v))",
        None),
    ("T-weighted-depth2", S2, "2^(a-1)-weighted sum of double T-values over a+b=w, a>=2", 3,
        "sum'[a,b=w]{2^(a-1)*T(a,b)}", "(w-1)*T(w)",
        Some((F2, (1, 1, 0), &[("++", 1, 2), ("+-", -1, 1), ("--", 1, 2)]))),
    // triple sums with last part 1
    ("sum-ab1-ppp", SA, "sum of zeta(a,b,1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(a,b,1)}", "z(v,1) + z(u,2)",
        Some((FA, (1, 0, 0), &[("+++", -1, 1)]))),
    ("sum-ab1-pmp", SA, "sum of zeta(a,-b,1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(a,~b,1)}",
        "z(~v,1) + z(~u,2) + 2*z(~u,1,1) - z(~u,~1,~1) - z(~u,1,~1)",
        Some((FA, (1, 0, 0), &[("-++", -1, 1)]))),
    ("sum-ab1-mpp", SA, "sum of zeta(-a,b,1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(~a,b,1)}",
        "z(v,1) + z(~u,~2) + z(~u,1,~1) + z(~u,~1,1) + z(~1,~u,1) - 2*z(~u,1,1) - z(~1,u,1)",
        Some((FA, (1, 0, 0), &[("-+-", -1, 1)]))),
    ("sum-ab1-mmp", SA, "sum of zeta(-a,-b,1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(~a,~b,1)}",
        "z(~v,1) + z(u,~2) + z(u,~1,1) + z(~1,u,1) - z(u,~1,~1) - z(~1,~u,1)",
        Some((FA, (1, 0, 0), &[("++-", -1, 1)]))),
    ("sum-ab1-mmm", SA, "sum of zeta(-a,-b,-1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(~a,~b,~1)}",
        "z(v,~1) + z(~u,2) + z(~u,~1,~1) - z(~u,1,~1)",
        Some((FA, (1, 0, 0), &[("+--", -1, 1)]))),
    ("sum-ab1-ppm", SA, "sum of zeta(a,b,-1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(a,b,~1)}",
        "z(v,~1) + z(u,~2) + z(u,~1,1) - z(u,~1,~1)",
        Some((FA, (1, 0, 0), &[("+-+", -1, 1)]))),
    ("sum-ab1-pmm", SA, "sum of zeta(a,-b,-1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(a,~b,~1)}",
        "z(~v,~1) + z(~u,~2) + z(~u,1,~1) - z(~u,~1,1)",
        Some((FA, (1, 0, 0), &[("--+", -1, 1)]))),
    ("sum-ab1-mpm", SA, "sum of zeta(-a,b,-1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{z(~a,b,~1)}",
        "z(v,~1) + z(~u,2) + z(~u,~1,~1) + z(~1,~u,~1) - z(~u,1,~1) - z(~1,u,~1)",
        Some((FA, (1, 0, 0), &[("---", -1, 1)]))),
    ("sum-ab1-mmm-corrected", SA, "sum of zeta(-a,-b,-1) over a+b=w-1, a>=2, as read off the functional equation", 4,
        "sum'[a,b=v]{z(~a,~b,~1)}",
        "z(~v,~1) + z(u,2) + 2*z(u,~1,~1) - 2*z(u,~1,1) + z(~1,u,~1) - z(~1,~u,~1)",
        Some((FA, (1, 0, 0), &[("+--", -1, 1)]))),
    ("T-sum-ab1", SA, "sum of triple T-values T(a,b,1) over a+b=w-1, a>=2", 4,
        "sum'[a,b=v]{T(a,b,1)}",
        "2*T(u,2) + 4*(z(u,~1,~1) + z(~u,1,1) - z(~u,1,~1) - z(u,~1,1))",
        None),
    // triple sums with first part 1
    ("sum-1bc-ppp", SA, "sum of regularized zeta(1,b,c) over b+c=w-1", 4,
        "sum[b,c=v]{zs(1,b,c)}", "z(2,u) + zt(1,v) + zt(1,1,u) - 1/2*z(2)*z(u)",
        Some((FA, (0, 1, 0), &[("+++", -1, 1)]))),
    ("sum-1bc-pmp", SA, "sum of regularized zeta(1,-b,c) over b+c=w-1", 4,
        "sum[b,c=v]{zs(1,~b,c)}",
        "z(~2,~u) + zt(1,v) + zt(1,~1,~u) + zt(1,~u,~1) + z(~1,1,~u) - z(~1,~1,~u) - zt(1,~u,1)",
        Some((FA, (0, 1, 0), &[("+--", -1, 1)]))),
    ("sum-1bc-mpp", SA, "sum of zeta(-1,b,c) over b+c=w-1", 4,
        "sum[b,c=v]{z(~1,b,c)}",
        "z(2,u) + z(~1,~v) + z(~1,u,~1) + 2*z(~1,~1,u) - z(~1,1,u) - z(~1,u,1)",
        Some((FA, (0, 1, 0), &[("-+-", -1, 1)]))),
    ("sum-1bc-mmp", SA, "sum of zeta(-1,-b,c) over b+c=w-1", 4,
        "sum[b,c=v]{z(~1,~b,c)}", "z(~2,~u) + z(~1,~v) + z(~1,1,~u)",
        Some((FA, (0, 1, 0), &[("--+", -1, 1)]))),
    ("sum-1bc-mmm", SA, "sum of zeta(-1,-b,-c) over b+c=w-1", 4,
        "sum[b,c=v]{z(~1,~b,~c)}",
        "z(~2,u) + z(~1,v) + z(~1,u,1) + z(~1,1,u) - z(~1,u,~1)",
        Some((FA, (0, 1, 0), &[("-++", -1, 1)]))),
    ("sum-1bc-ppm", SA, "sum of regularized zeta(1,b,-c) over b+c=w-1", 4,
        "sum[b,c=v]{zs(1,b,~c)}",
        "z(2,~u) + zt(1,~v) + zt(1,~u,1) + zt(1,1,~u) - zs(1,~u,~1) - 1/2*z(2)*z(~u)",
        Some((FA, (0, 1, 0), &[("+-+", -1, 1)]))),
    ("sum-1bc-pmm", SA, "sum of regularized zeta(1,-b,-c) over b+c=w-1", 4,
        "sum[b,c=v]{zs(1,~b,~c)}",
        "z(~2,u) + zt(1,~v) + zt(1,~1,u) + z(~1,1,u) - z(~1,~1,u)",
        Some((FA, (0, 1, 0), &[("++-", -1, 1)]))),
    ("sum-1bc-mpm", SA, "sum of zeta(-1,b,-c) over b+c=w-1", 4,
        "sum[b,c=v]{z(~1,b,~c)}",
        "z(2,~u) + z(~1,v) + 2*z(~1,~1,~u) - z(~1,1,~u)",
        Some((FA, (0, 1, 0), &[("---", -1, 1)]))),
    // all triple sums
    ("T-sum-abc", SA, "sum of triple T-values T(a,b,c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{T(a,b,c)}",
        "2/3*T(2)*T(u) - 2*T(u,2) + 4*(z(u,~1,1) - z(~u,1,1) + z(~u,1,~1) - z(u,~1,~1))",
        Some((FA, (0, 0, 1), &[
            ("+++", -1, 1), ("+--", -1, 1), ("-+-", 1, 1), ("--+", 1, 1),
            ("-++", -1, 1), ("+-+", 1, 1), ("++-", 1, 1), ("---", -1, 1),
        ]))),
    ("sum-abc-ppp", SA, "sum of zeta(a,b,c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(a,b,c)}", "z(w)",
        Some((FA, (0, 0, 1), &[("+++", -1, 1)]))),
    ("sum-abc-pmp", SA, "sum of zeta(a,-b,c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(a,~b,c)}",
        "2*z(~u,1,~1) - 2*z(~u,1,1) - z(~1,1,~u) + z(~1,~1,~u) + z(~v,~1) - z(~v,1) - z(~u,2) - z(~2,~u)",
        Some((FA, (0, 0, 1), &[("+--", -1, 1)]))),
    ("sum-abc-mpp", SA, "sum of zeta(-a,b,c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(~a,b,c)}",
        "z(~u,1,1) - z(~u,1,~1) + z(~1,u,1) - z(~1,u,~1) + z(~1,1,~u) + z(~1,1,u) - 2*z(~1,~1,u) - z(~u,~2) - z(2,u)",
        Some((FA, (0, 0, 1), &[("-+-", -1, 1)]))),
    ("sum-abc-mmp", SA, "sum of zeta(-a,-b,c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(~a,~b,c)}",
        "z(~1,1,u) - z(~1,1,~u) + z(~1,v) - z(~1,~v) + z(~2,u) - z(~2,~u) + z(~w)",
        Some((FA, (0, 0, 1), &[("--+", -1, 1)]))),
    ("sum-abc-mpm", SA, "sum of zeta(-a,b,-c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(~a,b,~c)}",
        "z(u,~1,1) - z(u,~1,~1) + z(~1,1,~u) - 2*z(~1,~1,~u) + z(~1,~1,u) + z(~1,~v) - z(~1,v) - z(u,2) - z(2,~u) - z(u)*z(~2)",
        Some((FA, (0, 0, 1), &[("-++", -1, 1)]))),
    ("sum-abc-pmm", SA, "sum of zeta(a,-b,-c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(a,~b,~c)}",
        "z(u,~1,~1) - z(u,~1,1) + z(~1,~1,u) - z(~1,1,u) - z(u,~2) - z(~2,u)",
        Some((FA, (0, 0, 1), &[("+-+", -1, 1)]))),
    ("sum-abc-ppm", SA, "sum of zeta(a,b,-c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(a,b,~c)}",
        "z(~u,1,1) - z(~u,1,~1) + z(~v,1) - z(~v,~1) - z(~u,~2) + z(~u,2) + z(~w)",
        Some((FA, (0, 0, 1), &[("++-", -1, 1)]))),
    ("sum-abc-mmm", SA, "sum of zeta(-a,-b,-c) over a+b+c=w, a>=2", 4,
        "sum'[a,b,c=w]{z(~a,~b,~c)}",
        "z(~1,u,~1) - z(~1,u,1) + z(~1,~1,~u) - z(~1,1,u) - z(~u,2) - z(~2,u)",
        Some((FA, (0, 0, 1), &[("---", -1, 1)]))),
    ("T-sum-abc-total", SA, "sum of T(a,b,c) plus sum of T(a,b,1), first part at least 2", 4,
        "sum'[a,b,c=w]{T(a,b,c)} + sum'[a,b=v]{T(a,b,1)}", "2/3*T(2)*T(u)",
        None),
    // triple sums with middle part 1
    ("sum-a1c-ppp", SA, "sum of regularized zeta(a,1,c) over a+c=w-1", 4,
        "sum[a,c=v]{zt(a,1,c)}", "zt(1,1,u) + z(v,1) + z(2,u)",
        Some((FA, (1, 1, 0), &[("+++", 1, 1)]))),
    ("sum-a1c-pmm", SA, "sum of regularized zeta(a,-1,-c) over a+c=w-1", 4,
        "sum[a,c=v]{zt(a,~1,~c)}",
        "zt(1,~1,~u) + z(~1,~u,~1) - z(~1,~u,1) + z(v,~1) + z(~2,~u)",
        Some((FA, (1, 1, 0), &[("+--", 1, 1)]))),
    ("sum-a1c-mmp", SA, "sum of zeta(-a,-1,c) over a+c=w-1", 4,
        "sum[a,c=v]{z(~a,~1,c)}", "z(~1,~1,~u) + z(2,~u) + z(~v,~1)",
        Some((FA, (1, 1, 0), &[("-+-", 1, 1)]))),
    ("sum-a1c-mpm", SA, "sum of zeta(-a,1,-c) over a+c=w-1", 4,
        "sum[a,c=v]{z(~a,1,~c)}",
        "z(~1,u,1) + z(~1,1,u) - z(~1,u,~1) + z(~v,1) + z(~2,u)",
        Some((FA, (1, 1, 0), &[("--+", 1, 1)]))),
    ("sum-a1c-mpp", SA, "sum of zeta(-a,1,c) over a+c=w-1", 4,
        "sum[a,c=v]{z(~a,1,c)}",
        "z(~1,~1,~u) + 2*z(~v,1) + z(~1,v) - z(~1,~v) - z(~v,~1) - z(~u,2) - z(w)",
        Some((FA, (1, 1, 0), &[("-++", 1, 1)]))),
    ("sum-a1c-ppm", SA, "sum of regularized zeta(a,1,-c) over a+c=w-1", 4,
        "sum[a,c=v]{zt(a,1,~c)}",
        "z(~u,~1,~1) - z(~u,~1,1) + zt(1,1,~u) - z(~v,~1) + z(v,~1) + 2*z(~v,~1) - z(~v,1) - z(~u,~2) + z(2)*z(~u) - z(~w)",
        Some((FA, (1, 1, 0), &[("+-+", 1, 1)]))),
    ("sum-a1c-pmp", SA, "sum of regularized zeta(a,-1,c) over a+c=w-1", 4,
        "sum[a,c=v]{zt(a,~1,c)}",
        "2*z(u,~1,~1) - 2*z(u,~1,1) + z(~1,1,u) + zt(1,~1,u) - z(~1,~1,u) + z(~v,~1) + z(v,~1) + z(~1,v) - z(~v,1) - z(~1,~v) - z(2,u) - 2*z(u,~2) - z(~w) - z(w)",
        Some((FA, (1, 1, 0), &[("++-", 1, 1)]))),
    ("sum-a1c-mmm", SA, "sum of zeta(-a,-1,-c) over a+c=w-1", 4,
        "sum[a,c=v]{z(~a,~1,~c)}",
        "3*z(u,~1,1) - 3*z(u,~1,~1) + z(~1,~1,u) + 2*z(~v,1) - z(~v,~1) + z(u,~2) + z(2,u) - z(u,2)",
        Some((FA, (1, 1, 0), &[("---", 1, 1)]))),
    // 2^(b-1)-weighted triple sums
    ("weighted-2b-ppp", SA, "2^(b-1)-weighted sum of regularized zeta(a,b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{2^(b-1)*zs(a,b,c)}",
        "2*zt(1,1,u) + w*zt(1,v) - 2*z(u,2) - z(w)",
        Some((FA, (0, 1, 1), &[("+++", -1, 1)]))),
    ("weighted-2b-pmp", SA, "2^(b-1)-weighted sum of regularized zeta(a,-b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{2^(b-1)*zs(a,~b,c)}",
        "4*z(u,~1,~1) - 4*z(u,~1,1) - 2*z(~1,~1,u) + 2*z(~1,1,u) + 2*zt(1,~1,u) + 2*z(~v,~1) - 2*z(~v,1) + u*zt(1,v) + 2*zt(1,~v) + 4*z(~2,u) + 2*z(u,2) + z(w) + 2*z(~w)",
        Some((FA, (0, 1, 1), &[("+--", -1, 1)]))),
    ("weighted-2b-mpp", SA, "2^(b-1)-weighted sum of zeta(-a,b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{2^(b-1)*z(~a,b,c)}",
        "2*z(~1,~1,~u) + w*z(~1,~v) + 2*z(~v,~1) - 2*z(~v,1) + z(~2,~u) + z(2,~u) + 2*z(w) - z(~w) + z(2)*z(~u)",
        Some((FA, (0, 1, 1), &[("-+-", -1, 1)]))),
    ("weighted-2b-mmp", SA, "2^(b-1)-weighted sum of zeta(-a,-b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{2^(b-1)*z(~a,~b,c)}",
        "2*z(~1,~1,~u) + u*z(~1,~v) + 2*z(~1,v) + z(~2,~u) + z(2,~u) + z(~w)",
        Some((FA, (0, 1, 1), &[("--+", -1, 1)]))),
    ("weighted-2b-mmm-mpm", SA, "2^(b-1)-weighted sum of zeta(-a,-b,-c) + zeta(-a,b,-c) over a+b+c=w", 4,
        "sum[a,b,c=w]{2^(b-1)*(zs(~a,~b,~c) + zs(~a,b,~c))}",
        "2*z(u,~1,1) + 2*z(~1,~1,u) - 2*z(u,~1,~1) + v*z(~1,v) + z(~v,1) + z(~1,~v) - z(~v,~1) + z(2,u) - z(u,2)",
        Some((FA, (0, 1, 1), &[("---", -1, 1)]))),
    ("weighted-2b-ppm-pmm", SA, "2^(b-1)-weighted sum of regularized zeta(a,b,-c) + zeta(a,-b,-c) over a+b+c=w", 4,
        "sum[a,b,c=w]{2^(b-1)*(zs(a,b,~c) + zs(a,~b,~c))}",
        "zt(1,~1,~u) + z(~1,1,~u) - z(~1,~1,~u) + zt(1,1,~u) - z(~v,~1) + z(~v,1) + zt(1,v) + v*zt(1,~v) + z(~2,~u) + z(2,~u) + z(~w) + 3*z(~2)*z(~u)",
        Some((FA, (0, 1, 1), &[("+-+", -1, 1)]))),
    // 3^(a-1) 2^(b-1)-weighted triple sums
    ("weighted-3a2b-ppp", SB, "3^(a-1)2^(b-1)-weighted sum of regularized zeta(a,b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{3^(a-1)*2^(b-1)*zs(a,b,c)}",
        "(1/3*C(v,2) + u)*z(w) + 2*zt(1,1,u) - 2*z(u,2) + w*zt(1,v)",
        Some((FB, (1, 1, 1), &[("+++", 1, 3)]))),
    ("weighted-3a2b-pmp-mpm-mmm", SB, "3^(a-1)2^(b-1)-weighted sum of zeta(a,-b,c) + zeta(-a,b,-c) + zeta(-a,-b,-c)", 4,
        "2*sum[a,b,c=w]{3^(a-1)*2^(b-1)*(zs(a,~b,c) + z(~a,b,~c) + z(~a,~b,~c))}",
        "2*z(~1,1,u) + 2*zt(1,~1,u) + 2*z(~1,~1,u) + C(v,2)*z(w) + 2*z(~1,v) + 2*zt(1,~v) + 2*z(~1,~v) - 2*z(u,2) - 4*z(u,~2) + u*(2*z(~1,v) + 2*z(~w) + z(w) + zt(1,v))",
        Some((FB, (1, 1, 1), &[("+--", 1, 1)]))),
    ("weighted-3a2b-pmm-ppm-mmp", SB, "3^(a-1)2^(b-1)-weighted sum of zeta(a,-b,-c) + zeta(a,b,-c) + zeta(-a,-b,c)", 4,
        "2*sum[a,b,c=w]{3^(a-1)*2^(b-1)*(zs(a,~b,~c) + zs(a,b,~c) + z(~a,~b,c))}",
        "2*zt(1,1,~u) + 2*zt(1,~1,~u) + 2*z(~1,1,~u) + 2*zt(1,~v) + 2*z(~1,~v) + 2*zt(1,v) + z(~2,~u) - z(2,~u) - 4*z(~u,2) - 2*z(~u,~2) + u*(2*zt(1,~v) + z(~1,~v) + z(w) + 2*z(~w)) + C(v,2)*z(~w) + z(w) - z(~w)",
        Some((FB, (1, 1, 1), &[("++-", 1, 1)]))),
    ("weighted-3a2b-mpp", SB, "3^(a-1)2^(b-1)-weighted sum of zeta(-a,b,c) over a+b+c=w", 4,
        "2*sum[a,b,c=w]{3^(a-1)*2^(b-1)*z(~a,b,c)}",
        "2*z(~1,~1,~u) + u*z(~1,~v) + 2*z(~1,v) + z(2,~u) - 2*z(~u,~2) - z(~2,~u) + (1/3*C(v,2) + 1)*z(~w) + (w-3)*z(w)",
        Some((FB, (1, 1, 1), &[("---", 1, 3)]))),
    ("KT-main", SB, "weighted sum 2^b(3^(a-1)-1) T(a,b,c) over a+b+c=w equals 2/3(w-1)(w-2)T(w)", 4,
        "sum[a,b,c=w]{2^b*(3^(a-1)-1)*T(a,b,c)}", "2/3*(w-1)*(w-2)*T(w)",
        None),
    // weight two
    ("z11rel", Aux, "zeta(-1,-1) - zeta(-1,1) = zeta(-2)", 2,
        "z(~1,~1) - z(~1,1)", "z(~2)", None),
    ("z2bar", Aux, "2 zeta(-2) = -zeta(2)", 2, "2*z(~2)", "-z(2)", None),
];

fn signs(text: &str) -> Vec<Sign> {
    text.chars()
        .map(|c| Sign::from_bool_bar(c == '-'))
        .collect()
}

fn build() -> Vec<CatalogEntry> {
    RAW.iter()
        .map(
            |&(name, section, provenance, min_weight, lhs_text, rhs_text, der)| {
                let parse = |t: &str| {
                    t.parse::<Expr>()
                        .unwrap_or_else(|e| panic!("catalog entry {name}: {e}"))
                };
                let derivable = der.map(|(family, (x, y, z), terms)| Derivable {
                    family,
                    point: SpecPoint::from_ints(x, y, z).expect("nonzero point"),
                    terms: terms
                        .iter()
                        .map(|&(s, n, d)| (signs(s), ratio(n, d)))
                        .collect(),
                });
                CatalogEntry {
                    name,
                    section,
                    provenance,
                    min_weight,
                    max_weight: (section == Section::Aux).then_some(2),
                    lhs_text,
                    rhs_text,
                    lhs: parse(lhs_text),
                    rhs: parse(rhs_text),
                    derivable,
                }
            },
        )
        .collect()
}

/// All entries in a fixed order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn find(name: &str) -> Result<&'static CatalogEntry, GenfuncError> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| GenfuncError::Unknown(name.to_string()))
}
