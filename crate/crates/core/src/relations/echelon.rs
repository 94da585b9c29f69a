//! Fraction-free sparse row echelon form with optional certificates.
//!
//! Rows are integer vectors kept primitive (content divided out); a row's
//! pivot is its leading column, so the result depends only on the column
//! order and the insertion order.
//!
//! For certificates each pivot records how it was reduced: the stored row
//! equals `σ (lcm · v + Σ γ_k P_k)` with `v` the inserted row and `P_k`
//! earlier pivots. Expanding these records backwards writes any span
//! member in terms of inserted rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseRow = Vec<(usize, BigRational)>;
type IntRow = Vec<(usize, BigInt)>;

#[derive(Debug, Clone)]
struct Record {
    origin: usize,
    lcm: BigInt,
    sigma: BigRational,
    /// `(pivot column, γ)`
    steps: Vec<(usize, BigRational)>,
}

#[derive(Debug, Clone)]
struct Pivot {
    row: IntRow,
    /// Position in insertion order.
    serial: usize,
    record: Option<Record>,
}

/// Result of reducing a vector against the echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// `v = Σ m_i · row_i`, listed by inserted row index. Empty when the
    /// echelon form does not track certificates.
    InSpan(Vec<(usize, BigRational)>),
    /// A nonzero primitive remainder with leading coefficient 1.
    Residual(SparseRow),
}

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Pivot>,
    order: Vec<usize>,
    track: bool,
}

fn to_integer_row(v: &[(usize, BigRational)]) -> (IntRow, BigInt) {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut row: IntRow = v
        .iter()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (*c, q.numer() * (&lcm / q.denom())))
        .collect();
    row.sort_by_key(|(c, _)| *c);
    (row, lcm)
}

fn content(row: &IntRow) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x))
}

/// `a·x - b·y` on sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if i >= x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduction state: `row = σ (lcm · v + Σ γ_k P_k)`.
struct Trace {
    sigma: BigRational,
    steps: Vec<(usize, BigRational)>,
}

impl Echelon {
    pub fn new(track_certificates: bool) -> Self {
        Echelon {
            pivots: BTreeMap::new(),
            order: Vec::new(),
            track: track_certificates,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn tracks_certificates(&self) -> bool {
        self.track
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Eliminates pivot columns from `row` in increasing column order.
    fn reduce(&self, mut row: IntRow, trace: &mut Option<Trace>) -> IntRow {
        let mut pos = 0;
        while pos < row.len() {
            let col = row[pos].0;
            let Some(p) = self.pivots.get(&col) else {
                pos += 1;
                continue;
            };
            let lead = &p.row[0].1;
            let x = &row[pos].1;
            let g = lead.gcd(x);
            let a = lead / &g;
            let b = x / &g;
            row = combine(&a, &row, &b, &p.row);
            let c = content(&row);
            let c = if c.is_zero() { BigInt::one() } else { c };
            if !c.is_one() {
                for e in row.iter_mut() {
                    e.1 /= &c;
                }
            }
            if let Some(t) = trace.as_mut() {
                // row' = (a·row - b·P)/c = σ' (X - b/(a σ) P) with σ' = aσ/c
                let gamma = -BigRational::from_integer(b)
                    / (&t.sigma * BigRational::from_integer(a.clone()));
                t.steps.push((col, gamma));
                t.sigma = &t.sigma * BigRational::new(a, c);
            }
            // entries left of `pos` are untouched by the elimination
        }
        row
    }

    /// Adds inserted row number `index`. Returns `true` when the rank grew.
    pub fn insert(&mut self, index: usize, v: &[(usize, BigRational)]) -> bool {
        let (row, lcm) = to_integer_row(v);
        if row.is_empty() {
            return false;
        }
        let mut trace = self.track.then(|| Trace {
            sigma: BigRational::one(),
            steps: Vec::new(),
        });
        let row = self.reduce(row, &mut trace);
        if row.is_empty() {
            return false;
        }
        let record = trace.map(|t| Record {
            origin: index,
            lcm,
            sigma: t.sigma,
            steps: t.steps,
        });
        let col = row[0].0;
        self.pivots.insert(
            col,
            Pivot {
                row,
                serial: self.order.len(),
                record,
            },
        );
        self.order.push(col);
        true
    }

    /// Rewrites `Σ μ_col P_col` in terms of inserted rows.
    fn expand(&self, mut mu: BTreeMap<usize, BigRational>) -> Vec<(usize, BigRational)> {
        let mut cert: BTreeMap<usize, BigRational> = BTreeMap::new();
        for &col in self.order.iter().rev() {
            let Some(m) = mu.remove(&col) else { continue };
            if m.is_zero() {
                continue;
            }
            let p = &self.pivots[&col];
            let rec = p.record.as_ref().expect("certificates tracked");
            let ms = &m * &rec.sigma;
            *cert.entry(rec.origin).or_insert_with(BigRational::zero) +=
                &ms * BigRational::from_integer(rec.lcm.clone());
            for (k, gamma) in &rec.steps {
                debug_assert!(self.pivots[k].serial < p.serial);
                *mu.entry(*k).or_insert_with(BigRational::zero) += &ms * gamma;
            }
        }
        cert.into_iter().filter(|(_, q)| !q.is_zero()).collect()
    }

    /// Decides whether `v` lies in the row span.
    pub fn membership(&self, v: &[(usize, BigRational)]) -> Reduction {
        let (row, lcm) = to_integer_row(v);
        if row.is_empty() {
            return Reduction::InSpan(Vec::new());
        }
        let mut trace = self.track.then(|| Trace {
            sigma: BigRational::one(),
            steps: Vec::new(),
        });
        let rem = self.reduce(row, &mut trace);
        if rem.is_empty() {
            let Some(t) = trace else {
                return Reduction::InSpan(Vec::new());
            };
            // 0 = σ (lcm·v + Σ γ_k P_k)  ⇒  v = Σ (-γ_k / lcm) P_k
            let lcm = BigRational::from_integer(lcm);
            let mut mu = BTreeMap::new();
            for (k, g) in t.steps {
                *mu.entry(k).or_insert_with(BigRational::zero) -= g / &lcm;
            }
            Reduction::InSpan(self.expand(mu))
        } else {
            let lead = BigRational::from_integer(rem[0].1.clone());
            Reduction::Residual(
                rem.into_iter()
                    .map(|(c, x)| (c, BigRational::from_integer(x) / &lead))
                    .collect(),
            )
        }
    }
}

/// Rank of a set of rows, without certificates.
pub fn rank_of(rows: &[SparseRow]) -> usize {
    let mut e = Echelon::new(false);
    for (i, r) in rows.iter().enumerate() {
        e.insert(i, r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{rat, ratio};

    fn row(v: &[(usize, i64, i64)]) -> SparseRow {
        v.iter().map(|&(c, n, d)| (c, ratio(n, d))).collect()
    }

    fn replay(rows: &[SparseRow], cert: &[(usize, BigRational)], n: usize) -> Vec<BigRational> {
        let mut sum = vec![rat(0); n];
        for (i, m) in cert {
            for (c, q) in &rows[*i] {
                sum[*c] += m * q;
            }
        }
        sum
    }

    #[test]
    fn rank_and_membership() {
        let rows = vec![
            row(&[(0, 1, 1), (1, -1, 2)]),
            row(&[(1, 1, 1), (2, 3, 1)]),
            row(&[(0, 2, 1), (2, 3, 1)]),
        ];
        let mut e = Echelon::new(true);
        for (i, r) in rows.iter().enumerate() {
            e.insert(i, r);
        }
        assert_eq!(e.rank(), 2);
        let target = row(&[(0, 1, 1), (2, 3, 2)]);
        match e.membership(&target) {
            Reduction::InSpan(cert) => {
                assert_eq!(replay(&rows, &cert, 3), vec![rat(1), rat(0), ratio(3, 2)]);
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
        assert!(matches!(
            e.membership(&row(&[(2, 1, 1)])),
            Reduction::Residual(_)
        ));
        assert_eq!(e.membership(&[]), Reduction::InSpan(Vec::new()));
    }

    #[test]
    fn chained_certificates() {
        let rows = vec![
            row(&[(0, 2, 1), (1, 3, 1), (3, 1, 1)]),
            row(&[(0, 1, 3), (2, -1, 1)]),
            row(&[(1, 5, 1), (2, 7, 2), (3, -1, 1)]),
            row(&[(0, 1, 1), (1, 1, 1), (2, 1, 1), (3, 1, 1)]),
        ];
        let mut e = Echelon::new(true);
        for (i, r) in rows.iter().enumerate() {
            e.insert(i, r);
        }
        let target = row(&[(0, 7, 2), (1, -2, 1), (2, 1, 5), (3, 4, 1)]);
        match e.membership(&target) {
            Reduction::InSpan(cert) => {
                let expect: Vec<BigRational> = (0..4)
                    .map(|c| {
                        target
                            .iter()
                            .find(|(k, _)| *k == c)
                            .map(|(_, q)| q.clone())
                            .unwrap_or_else(|| rat(0))
                    })
                    .collect();
                assert_eq!(replay(&rows, &cert, 4), expect);
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn order_independent_rank() {
        let rows = vec![
            row(&[(0, 1, 1), (3, 1, 1)]),
            row(&[(1, 1, 1), (3, 1, 1)]),
            row(&[(0, 1, 1), (1, -1, 1)]),
            row(&[(2, 5, 3)]),
        ];
        let mut rev = rows.clone();
        rev.reverse();
        assert_eq!(rank_of(&rows), 3);
        assert_eq!(rank_of(&rev), 3);
    }
}
