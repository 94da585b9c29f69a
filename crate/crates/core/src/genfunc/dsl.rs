//! A small formula language for weight-parameterized identities.
//!
//! ```text
//! sum'[a,b=w]{ z(~a,b) }  =  z(~v,~1) + z(~1,~v) - z(~v,1) - z(~1,v) + z(w)
//! ```
//!
//! Atoms: `z(..)` an admissible Euler sum, `zt(..)` its stuffle-regularized
//! value, `zs(..)` its shuffle-regularized value, `T(..)` a multiple
//! T-value, `C(n,k)` a binomial coefficient, integers and the variables
//! `w`, `u = w-2`, `v = w-1` plus any summation variables. `~` bars a slot.
//! `sum[a,b,c=n]{..}` runs over positive `a+b+c = n`; `sum'` drops the
//! terms with first variable 1. A product whose left factor is the number
//! zero skips its right factor, so `(3^(a-1)-1)*T(a,b,c)` is fine at `a=1`.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::RegPoly;
use crate::genfunc::equations::{parts_of, zeta_sha, zeta_star};
use crate::genfunc::formal::binomial;
use crate::genfunc::GenfuncError;
use crate::index::{mtv_decompose, MtvIndex, Part, Sign, SignedComposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaKind {
    Plain,
    Star,
    Sha,
    Mtv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Binom(Box<Expr>, Box<Expr>),
    /// Slots are `(barred, exponent)`.
    Zeta(ZetaKind, Vec<(bool, Expr)>),
    Sum {
        prime: bool,
        vars: Vec<String>,
        total: Box<Expr>,
        body: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, GenfuncError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()[]{},=~'".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(GenfuncError::Parse(format!(
                "unexpected character {c:?} in {text:?}"
            )));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), GenfuncError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(GenfuncError::Parse(format!(
                "expected {c:?} at token {}, found {:?}",
                self.pos,
                self.peek()
            )))
        }
    }

    fn ident(&mut self) -> Result<String, GenfuncError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            other => Err(GenfuncError::Parse(format!(
                "expected a name, found {other:?}"
            ))),
        }
    }

    fn expr(&mut self) -> Result<Expr, GenfuncError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, GenfuncError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, GenfuncError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if self.eat('^') {
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn slots(&mut self) -> Result<Vec<(bool, Expr)>, GenfuncError> {
        self.expect('(')?;
        let mut out = Vec::new();
        loop {
            let bar = self.eat('~');
            out.push((bar, self.expr()?));
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')')?;
        Ok(out)
    }

    fn primary(&mut self) -> Result<Expr, GenfuncError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let kind = match name.as_str() {
                    "z" => Some(ZetaKind::Plain),
                    "zt" => Some(ZetaKind::Star),
                    "zs" => Some(ZetaKind::Sha),
                    "T" => Some(ZetaKind::Mtv),
                    _ => None,
                };
                if let Some(kind) = kind {
                    return Ok(Expr::Zeta(kind, self.slots()?));
                }
                match name.as_str() {
                    "C" => {
                        self.expect('(')?;
                        let n = self.expr()?;
                        self.expect(',')?;
                        let k = self.expr()?;
                        self.expect(')')?;
                        Ok(Expr::Binom(Box::new(n), Box::new(k)))
                    }
                    "sum" => {
                        let prime = self.eat('\'');
                        self.expect('[')?;
                        let mut vars = vec![self.ident()?];
                        while self.eat(',') {
                            vars.push(self.ident()?);
                        }
                        self.expect('=')?;
                        let total = self.expr()?;
                        self.expect(']')?;
                        self.expect('{')?;
                        let body = self.expr()?;
                        self.expect('}')?;
                        Ok(Expr::Sum {
                            prime,
                            vars,
                            total: Box::new(total),
                            body: Box::new(body),
                        })
                    }
                    _ => Ok(Expr::Var(name)),
                }
            }
            other => Err(GenfuncError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl FromStr for Expr {
    type Err = GenfuncError;

    fn from_str(text: &str) -> Result<Self, GenfuncError> {
        let mut p = Parser {
            toks: tokenize(text)?,
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(GenfuncError::Parse(format!(
                "trailing input after token {} in {text:?}",
                p.pos
            )));
        }
        Ok(e)
    }
}

#[derive(Debug, Clone)]
enum Val {
    Num(BigRational),
    Poly(RegPoly),
}

impl Val {
    fn into_poly(self) -> RegPoly {
        match self {
            Val::Num(q) => {
                if q.is_zero() {
                    RegPoly::zero()
                } else {
                    RegPoly::constant(q)
                }
            }
            Val::Poly(p) => p,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Val::Num(q) => q.is_zero(),
            Val::Poly(p) => p.is_zero(),
        }
    }
}

type Env = HashMap<String, i64>;

fn integer(v: &Val, what: &str) -> Result<i64, GenfuncError> {
    match v {
        Val::Num(q) if q.is_integer() => q
            .to_integer()
            .to_i64()
            .ok_or_else(|| GenfuncError::Parse(format!("{what} out of range"))),
        _ => Err(GenfuncError::Parse(format!("{what} must be an integer"))),
    }
}

fn number(e: &Expr, env: &Env) -> Result<i64, GenfuncError> {
    integer(&eval(e, env)?, "index entry")
}

fn eval(e: &Expr, env: &Env) -> Result<Val, GenfuncError> {
    Ok(match e {
        Expr::Num(n) => Val::Num(BigRational::from_integer(n.clone())),
        Expr::Var(name) => {
            let n = env
                .get(name)
                .ok_or_else(|| GenfuncError::Parse(format!("unbound variable {name}")))?;
            Val::Num(BigRational::from_integer((*n).into()))
        }
        Expr::Neg(a) => match eval(a, env)? {
            Val::Num(q) => Val::Num(-q),
            Val::Poly(p) => Val::Poly(-&p),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (x, y) = (eval(a, env)?, eval(b, env)?);
            let minus = matches!(e, Expr::Sub(..));
            match (x, y) {
                (Val::Num(p), Val::Num(q)) => Val::Num(if minus { p - q } else { p + q }),
                (x, y) => {
                    let (x, y) = (x.into_poly(), y.into_poly());
                    Val::Poly(if minus { &x - &y } else { &x + &y })
                }
            }
        }
        Expr::Mul(a, b) => {
            let x = eval(a, env)?;
            if x.is_zero() {
                return Ok(Val::Num(BigRational::zero()));
            }
            match (x, eval(b, env)?) {
                (Val::Num(p), Val::Num(q)) => Val::Num(p * q),
                (Val::Num(q), Val::Poly(p)) | (Val::Poly(p), Val::Num(q)) => Val::Poly(p.scale(&q)),
                (Val::Poly(p), Val::Poly(q)) => Val::Poly(p.mul(&q)),
            }
        }
        Expr::Div(a, b) => {
            let q = match eval(b, env)? {
                Val::Num(q) if !q.is_zero() => q,
                _ => {
                    return Err(GenfuncError::Parse(
                        "division by a non-number or zero".into(),
                    ))
                }
            };
            match eval(a, env)? {
                Val::Num(p) => Val::Num(p / q),
                Val::Poly(p) => Val::Poly(p.scale(&(BigRational::one() / q))),
            }
        }
        Expr::Pow(a, b) => {
            let k = integer(&eval(b, env)?, "exponent")?;
            let base = match eval(a, env)? {
                Val::Num(q) => q,
                Val::Poly(_) => return Err(GenfuncError::Parse("only numbers have powers".into())),
            };
            if k < 0 {
                return Err(GenfuncError::Parse("negative exponent".into()));
            }
            Val::Num(num_traits::Pow::pow(&base, k as u32))
        }
        Expr::Binom(n, k) => Val::Num(binomial(number(n, env)?, number(k, env)?)),
        Expr::Zeta(kind, slots) => Val::Poly(zeta(*kind, slots, env)?),
        Expr::Sum {
            prime,
            vars,
            total,
            body,
        } => {
            let n = number(total, env)?;
            let mut acc = RegPoly::zero();
            let mut scalar = BigRational::zero();
            if n >= vars.len() as i64 {
                let mut inner = env.clone();
                for s in parts_of(n as u32, vars.len()) {
                    if *prime && s[0] == 1 {
                        continue;
                    }
                    for (name, &x) in vars.iter().zip(&s) {
                        inner.insert(name.clone(), x as i64);
                    }
                    match eval(body, &inner)? {
                        Val::Num(q) => scalar += q,
                        Val::Poly(p) => acc += &p,
                    }
                }
            }
            if acc.is_zero() {
                Val::Num(scalar)
            } else {
                if !scalar.is_zero() {
                    acc += &RegPoly::constant(scalar);
                }
                Val::Poly(acc)
            }
        }
    })
}

fn zeta(kind: ZetaKind, slots: &[(bool, Expr)], env: &Env) -> Result<RegPoly, GenfuncError> {
    let mut parts = Vec::with_capacity(slots.len());
    for (bar, e) in slots {
        let s = number(e, env)?;
        if s < 1 {
            return Err(GenfuncError::Parse(format!(
                "index entry {s} is not positive"
            )));
        }
        parts.push(Part::new(s as u32, Sign::from_bool_bar(*bar)));
    }
    if kind == ZetaKind::Mtv {
        if parts.iter().any(|p| p.sign.is_minus()) {
            return Err(GenfuncError::Parse("T(..) takes no bars".into()));
        }
        let t = MtvIndex::new(parts.iter().map(|p| p.exponent).collect())
            .map_err(|e| GenfuncError::Parse(e.to_string()))?;
        if !t.is_admissible() {
            return Err(GenfuncError::Parse(format!("T({t}) diverges")));
        }
        return Ok(RegPoly::from_lincomb(mtv_decompose(&t)));
    }
    let c = SignedComposition::new(parts).map_err(|e| GenfuncError::Parse(e.to_string()))?;
    match kind {
        ZetaKind::Plain if !c.is_admissible() => Err(GenfuncError::Parse(format!(
            "z({c}) diverges; write zt(..) or zs(..)"
        ))),
        ZetaKind::Plain => Ok(RegPoly::symbol(c)),
        ZetaKind::Star => Ok(zeta_star(&c)),
        ZetaKind::Sha => zeta_sha(&c),
        ZetaKind::Mtv => unreachable!(),
    }
}

/// Value of `e` at weight `w` (with `u = w-2`, `v = w-1`).
pub fn evaluate(e: &Expr, w: u32) -> Result<RegPoly, GenfuncError> {
    let w = w as i64;
    let env: Env = [("w", w), ("u", w - 2), ("v", w - 1)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    Ok(eval(e, &env)?.into_poly())
}
