//! Exact linear feasibility by Fourier–Motzkin elimination.
//!
//! Variables are the element weights. Every basis gives `-w(B) <= -1` and every
//! other `k`-subset gives `w(D) <= 0`; by rescaling, a solution exists exactly
//! when some weighting separates the bases strictly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{binomial, check_cap, k_subsets, SmallMatroid};
use crate::error::{Error, Result};
use crate::poset::SubsetWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LpWitness {
    Feasible {
        /// Weights of `1..=n` as `p/q`.
        #[serde(serialize_with = "serialize_rationals")]
        weights: Vec<BigRational>,
        /// Number of inequalities before each elimination step, then after the last.
        stage_sizes: Vec<usize>,
    },
    Infeasible {
        /// The original constraints whose combination gives `0 <= negative`.
        contradiction: Vec<SubsetWord>,
        stage_sizes: Vec<usize>,
    },
}

impl LpWitness {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpWitness::Feasible { .. })
    }

    pub fn stage_sizes(&self) -> &[usize] {
        match self {
            LpWitness::Feasible { stage_sizes, .. } | LpWitness::Infeasible { stage_sizes, .. } => {
                stage_sizes
            }
        }
    }
}

fn serialize_rationals<S: serde::Serializer>(
    values: &[BigRational],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(
        values
            .iter()
            .map(|v| format!("{}/{}", v.numer(), v.denom())),
    )
}

/// `coeffs · x <= rhs`, derived from the original constraints in `history`.
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<BigInt>,
    rhs: BigRational,
    history: Vec<usize>,
}

impl Row {
    fn normalized(mut self) -> Row {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs /= BigRational::from_integer(g);
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Rows keyed by coefficient vector, keeping the tightest right-hand side.
#[derive(Default)]
struct System {
    rows: BTreeMap<Vec<BigInt>, Row>,
}

enum Insert {
    Kept,
    Contradiction(Vec<usize>),
}

impl System {
    fn insert(&mut self, row: Row) -> Insert {
        let row = row.normalized();
        if row.is_trivial() {
            if row.rhs.is_negative() {
                return Insert::Contradiction(row.history);
            }
            return Insert::Kept;
        }
        // on a tie keep the shorter history
        match self.rows.get(&row.coeffs) {
            Some(old)
                if old.rhs < row.rhs
                    || (old.rhs == row.rhs && old.history.len() <= row.history.len()) => {}
            _ => {
                self.rows.insert(row.coeffs.clone(), row);
            }
        }
        Insert::Kept
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn take(&mut self) -> Vec<Row> {
        std::mem::take(&mut self.rows).into_values().collect()
    }
}

/// Eliminates variable `v` from `p` (positive there) and `q` (negative there).
fn combine(p: &Row, q: &Row, v: usize) -> Row {
    let a = &p.coeffs[v];
    let b = -&q.coeffs[v];
    let coeffs = p
        .coeffs
        .iter()
        .zip(&q.coeffs)
        .map(|(x, y)| &b * x + a * y)
        .collect();
    let rhs = BigRational::from_integer(b.clone()) * &p.rhs
        + BigRational::from_integer(a.clone()) * &q.rhs;
    Row {
        coeffs,
        rhs,
        history: union(&p.history, &q.history),
    }
    .normalized()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Decides whether a separating weighting exists. `cap` bounds the number of
/// `k`-subsets, i.e. the number of original constraints.
pub fn lp_threshold_oracle(m: &SmallMatroid, cap: u128) -> Result<LpWitness> {
    let n = m.n() as usize;
    let k = m.k();
    check_cap("LP constraints", binomial(m.n(), k), cap)?;
    let subsets: Vec<u64> = k_subsets(m.n(), k).collect();
    let mut system = System::default();
    for (idx, &s) in subsets.iter().enumerate() {
        let basis = m.is_basis(s);
        let sign = if basis { -1 } else { 1 };
        let coeffs = (0..n)
            .map(|b| BigInt::from(if s >> b & 1 == 1 { sign } else { 0 }))
            .collect();
        let rhs = if basis {
            -BigRational::one()
        } else {
            BigRational::zero()
        };
        let row = Row {
            coeffs,
            rhs,
            history: vec![idx],
        };
        if let Insert::Contradiction(h) = system.insert(row) {
            return Ok(infeasible(m, &subsets, h, vec![1]));
        }
    }

    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(n);
    let mut stage_sizes = Vec::with_capacity(n + 1);
    for v in 0..n {
        let rows = system.take();
        stage_sizes.push(rows.len());
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in &rows {
            if r.coeffs[v].is_positive() {
                pos.push(r);
            } else if r.coeffs[v].is_negative() {
                neg.push(r);
            } else {
                system.insert(r.clone());
            }
        }
        // a combination of more than (eliminated + 1) originals is redundant
        let max_history = v + 2;
        for p in &pos {
            for q in &neg {
                if union(&p.history, &q.history).len() > max_history {
                    continue;
                }
                if let Insert::Contradiction(h) = system.insert(combine(p, q, v)) {
                    stage_sizes.push(system.len());
                    return Ok(infeasible(m, &subsets, h, stage_sizes));
                }
            }
        }
        stages.push(rows);
    }
    stage_sizes.push(system.len());

    // History pruning can leave a stage short of the exact projection. When an
    // interval comes out empty, the two rows bounding it combine into a valid row
    // the current values violate; it joins the stage of its first variable and
    // back-substitution resumes there. A trivial combination proves infeasibility.
    let mut x = vec![BigRational::zero(); n];
    let mut v = n;
    while v > 0 {
        v -= 1;
        let mut lo: Option<(BigRational, usize)> = None;
        let mut hi: Option<(BigRational, usize)> = None;
        for (i, r) in stages[v].iter().enumerate() {
            let a = &r.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let rest: BigRational = (v + 1..n)
                .map(|j| BigRational::from_integer(r.coeffs[j].clone()) * &x[j])
                .sum();
            let bound = (&r.rhs - rest) / BigRational::from_integer(a.clone());
            if a.is_positive() {
                if hi.as_ref().is_none_or(|(h, _)| bound < *h) {
                    hi = Some((bound, i));
                }
            } else if lo.as_ref().is_none_or(|(l, _)| bound > *l) {
                lo = Some((bound, i));
            }
        }
        match (lo, hi) {
            (Some((l, q)), Some((h, p))) if l > h => {
                let cut = combine(&stages[v][p], &stages[v][q], v);
                match cut.coeffs.iter().position(|c| !c.is_zero()) {
                    None => {
                        return Ok(infeasible(m, &subsets, cut.history, stage_sizes));
                    }
                    Some(j) => {
                        stages[j].push(cut);
                        v = j + 1;
                    }
                }
            }
            (lo, hi) => x[v] = pick(lo.map(|b| b.0), hi.map(|b| b.0)),
        }
    }
    // every original constraint must hold; a failure would be a bug in the elimination
    for &s in &subsets {
        let w: BigRational = (0..n).filter(|b| s >> b & 1 == 1).map(|b| &x[b]).sum();
        let ok = if m.is_basis(s) {
            w >= BigRational::one()
        } else {
            !w.is_positive()
        };
        if !ok {
            return Err(Error::InvariantViolation(format!(
                "elimination witness violates the constraint of {}",
                m.word(s)
            )));
        }
    }
    Ok(LpWitness::Feasible {
        weights: x,
        stage_sizes,
    })
}

/// An integer inside `[lo, hi]` when there is one, otherwise an endpoint.
fn pick(lo: Option<BigRational>, hi: Option<BigRational>) -> BigRational {
    match (lo, hi) {
        (Some(l), Some(h)) => {
            let c = l.ceil();
            if c <= h {
                c
            } else {
                l
            }
        }
        (Some(l), None) => l.ceil(),
        (None, Some(h)) => h.floor(),
        (None, None) => BigRational::zero(),
    }
}

fn infeasible(
    m: &SmallMatroid,
    subsets: &[u64],
    history: Vec<usize>,
    stage_sizes: Vec<usize>,
) -> LpWitness {
    LpWitness::Infeasible {
        contradiction: history.into_iter().map(|i| m.word(subsets[i])).collect(),
        stage_sizes,
    }
}
