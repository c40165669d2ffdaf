//! Explicit weight functions for threshold shifted matroids and their verification.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{classify, CaseTag, Verdict};
use crate::error::{Error, Result};
use crate::poset::{leq_letters, SubsetWord};
use crate::shifted::{dual, DefiningBasis};

/// An entry of a piecewise-constant weighting before `-∞` is made finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawWeight {
    Finite(BigInt),
    NegInfinity,
}

impl fmt::Display for RawWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawWeight::Finite(v) => write!(f, "{v}"),
            RawWeight::NegInfinity => f.write_str("-inf"),
        }
    }
}

/// Which construction produced a weight function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Construction {
    /// `T = {1..k}`: every element of `T` is a coloop.
    InitialSegment,
    OneBlock,
    TwoBlocks,
    ThreeBlocksSecondBlockOne,
    /// Built on the dual (three blocks, second block one) and transported back.
    DualOfSecondBlockOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightFunction {
    /// `weights[i]` is the weight of element `i + 1`.
    #[serde(serialize_with = "serialize_rationals")]
    pub weights: Vec<BigRational>,
    pub construction: Construction,
    /// Coloops added back after building weights on the contraction.
    pub lifted_coloops: u32,
}

fn serialize_rationals<S: serde::Serializer>(
    values: &[BigRational],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&rational_text(v))?;
    }
    seq.end()
}

/// `p/q` with the denominator always present.
pub(crate) fn rational_text(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

impl WeightFunction {
    pub fn n(&self) -> u32 {
        self.weights.len() as u32
    }

    pub fn weight(&self, x: u32) -> &BigRational {
        &self.weights[x as usize - 1]
    }

    pub fn weight_of(&self, s: &SubsetWord) -> BigRational {
        s.letters().iter().map(|&x| self.weight(x)).sum()
    }

    /// Scales to integers by the least common denominator.
    pub fn integer_vector(&self) -> Vec<BigInt> {
        integer_vector(&self.weights)
    }
}

impl fmt::Display for WeightFunction {
    /// One `i: p/q` line per element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.weights.iter().enumerate() {
            writeln!(f, "{}: {}", i + 1, rational_text(w))?;
        }
        Ok(())
    }
}

fn integer_vector(weights: &[BigRational]) -> Vec<BigInt> {
    let lcm = weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    weights
        .iter()
        .map(|w| w.numer() * (&lcm / w.denom()))
        .collect()
}

/// The piecewise weights on a coloop-free `T` with at most two blocks, or three
/// blocks whose second block is a single element. Bases weigh at least 0 and
/// non-bases at most -1 (or contain a `-∞` entry).
pub fn raw_weights(m: &DefiningBasis) -> Result<Vec<RawWeight>> {
    let n = m.n() as usize;
    let d = m.blocks()?;
    if !d.starts_with_gap {
        return Err(Error::ContractViolation(
            "raw weights need a coloop-free defining basis".into(),
        ));
    }
    let sizes = d.block_sizes();
    let ends: Vec<usize> = d.blocks.iter().map(|b| b.end as usize).collect();
    let int = |v: i64| RawWeight::Finite(BigInt::from(v));
    let piecewise = |values: &[BigInt]| -> Vec<RawWeight> {
        (1..=n)
            .map(|j| match ends.iter().position(|&e| j <= e) {
                Some(p) => RawWeight::Finite(values[p].clone()),
                None => RawWeight::NegInfinity,
            })
            .collect()
    };
    match sizes.as_slice() {
        [_] => Ok((1..=n)
            .map(|j| if j <= ends[0] { int(0) } else { int(-1) })
            .collect()),
        &[l1, l2] => Ok(piecewise(&[BigInt::from(l2), -BigInt::from(l1)])),
        &[l1, 1, l3] => {
            let (l1, l3) = (BigInt::from(l1), BigInt::from(l3));
            let l3_2 = &l3 * &l3;
            let l3_3 = &l3_2 * &l3;
            let one = BigInt::one();
            let a = 2 * &l3_3 + 6 * &l3_2 + 4 * &l3 + &one;
            let b = (&one - 2 * &l1) * &l3_2 + (&one - 3 * &l1) * &l3;
            let c = -(BigInt::from(2) * &l1 * &l3_2) - (4 * &l1 + &one) * &l3 - (&l1 + &one);
            Ok(piecewise(&[a, b, c]))
        }
        _ => Err(Error::ContractViolation(format!(
            "no direct weight construction for block sizes {sizes:?}"
        ))),
    }
}

/// `w ↦ 2k·w + 1` on finite entries, then `-∞ ↦ -(1 + k·max|finite|)`.
fn finalize(raw: &[RawWeight], k: usize) -> Vec<BigInt> {
    let scale = BigInt::from(2 * k);
    let strict: Vec<Option<BigInt>> = raw
        .iter()
        .map(|r| match r {
            RawWeight::Finite(v) => Some(&scale * v + 1),
            RawWeight::NegInfinity => None,
        })
        .collect();
    let max_abs = strict
        .iter()
        .flatten()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let floor = -(BigInt::one() + BigInt::from(k) * max_abs);
    strict
        .into_iter()
        .map(|v| v.unwrap_or_else(|| floor.clone()))
        .collect()
}

/// A weight function whose positive-weight `k`-subsets are exactly the bases.
pub fn synthesize_weights(m: &DefiningBasis) -> Result<WeightFunction> {
    let class = classify(m);
    if class.verdict != Verdict::Threshold {
        return Err(Error::ContractViolation(format!(
            "weights requested for {m}, classified {class}"
        )));
    }
    if class.case == Some(CaseTag::ThreeBlocksSecondGapOne) {
        return transport_from_dual(m);
    }
    direct(m)
}

fn direct(m: &DefiningBasis) -> Result<WeightFunction> {
    let contraction = classify(m).contraction;
    let inner = &contraction.basis;
    if inner.k() == 0 {
        // T = {1..k}: only T itself is a basis
        let k = m.k();
        let w = (1..=m.n() as usize)
            .map(|j| BigInt::from(if j <= k { 1 } else { 1 - 2 * k as i64 }))
            .collect();
        return Ok(WeightFunction {
            weights: to_rationals(w),
            construction: Construction::InitialSegment,
            lifted_coloops: 0,
        });
    }
    let construction = match inner.blocks()?.num_blocks() {
        1 => Construction::OneBlock,
        2 => Construction::TwoBlocks,
        _ => Construction::ThreeBlocksSecondBlockOne,
    };
    let mut weights = finalize(&raw_weights(inner)?, inner.k());
    for rank in (inner.k()..).take(contraction.removed as usize) {
        weights = lift_coloop(&weights, rank);
    }
    Ok(WeightFunction {
        weights: to_rationals(weights),
        construction,
        lifted_coloops: contraction.removed,
    })
}

/// Adds a new first element in every basis. The old rank is `rank`.
fn lift_coloop(w: &[BigInt], rank: usize) -> Vec<BigInt> {
    let alpha = w.iter().max().cloned().unwrap_or_else(BigInt::zero) + 1;
    std::iter::once(BigInt::from(rank) * &alpha)
        .chain(w.iter().map(|x| x - &alpha))
        .collect()
}

fn transport_from_dual(m: &DefiningBasis) -> Result<WeightFunction> {
    let d = dual(m);
    let dual_class = classify(&d);
    if dual_class.case != Some(CaseTag::ThreeBlocksSecondBlockOne) {
        return Err(Error::InvariantViolation(format!(
            "dual of {m} is {d}, classified {dual_class}"
        )));
    }
    let wd = direct(&d)?;
    let n = m.n();
    let k = BigInt::from(m.k());
    // u(x) is the dual weight of the element that x becomes
    let u: Vec<&BigRational> = (1..=n).map(|x| wd.weight(n + 1 - x)).collect();
    let c: BigRational = u.iter().copied().sum();
    let share = c / BigRational::from_integer(k);
    let weights = u.into_iter().map(|ux| &share - ux).collect();
    Ok(WeightFunction {
        weights,
        construction: Construction::DualOfSecondBlockOne,
        lifted_coloops: wd.lifted_coloops,
    })
}

fn to_rationals(v: Vec<BigInt>) -> Vec<BigRational> {
    v.into_iter().map(BigRational::from_integer).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every `k`-subset of `[n]`.
    Full,
    /// Monotonicity, `w(T) > 0`, and `w(M_i) <= 0` for the minimal non-bases
    /// `M_i = {1..i-1} ∪ {t_i+1 .. t_i+1+k-i}`. Sound, and complete for
    /// weakly decreasing weights.
    Structural,
}

/// Checks that bases weigh `> 0` and other `k`-subsets `<= 0`.
pub fn verify_weights(
    m: &DefiningBasis,
    w: &WeightFunction,
    mode: VerifyMode,
    cap: u128,
) -> Result<bool> {
    if w.n() != m.n() {
        return Err(Error::invalid(format!(
            "{} weights for a ground set of size {}",
            w.n(),
            m.n()
        )));
    }
    let iw = w.integer_vector();
    match mode {
        VerifyMode::Full => verify_full(m, &iw, cap),
        VerifyMode::Structural => Ok(verify_structural(m, &iw)),
    }
}

fn verify_full(m: &DefiningBasis, w: &[BigInt], cap: u128) -> Result<bool> {
    let n = m.n() as usize;
    let k = m.k();
    let total = binomial(n as u64, k as u64);
    if total > cap {
        return Err(Error::ResourceLimit {
            what: "k-subset enumeration",
            needed: total,
            cap,
        });
    }
    let t = m.t().letters();
    let mut subset: Vec<u32> = (1..=k as u32).collect();
    loop {
        let weight: BigInt = subset.iter().map(|&x| &w[x as usize - 1]).sum();
        let basis = leq_letters(&subset, t);
        if basis != weight.is_positive() {
            return Ok(false);
        }
        if !next_subset(&mut subset, n as u32) {
            return Ok(true);
        }
    }
}

/// Advances to the next `k`-subset of `[n]` in lexicographic order.
pub(crate) fn next_subset(s: &mut [u32], n: u32) -> bool {
    let k = s.len();
    let Some(i) = (0..k).rev().find(|&i| s[i] < n - (k - 1 - i) as u32) else {
        return false;
    };
    s[i] += 1;
    for j in i + 1..k {
        s[j] = s[j - 1] + 1;
    }
    true
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

fn verify_structural(m: &DefiningBasis, w: &[BigInt]) -> bool {
    if w.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    let n = m.n() as usize;
    let k = m.k();
    let mut prefix = vec![BigInt::zero(); n + 1];
    for (i, x) in w.iter().enumerate() {
        prefix[i + 1] = &prefix[i] + x;
    }
    let t = m.t().letters();
    let w_t: BigInt = t.iter().map(|&x| &w[x as usize - 1]).sum();
    if !w_t.is_positive() {
        return false;
    }
    for (i0, &ti) in t.iter().enumerate() {
        // M_i for 1-based i = i0 + 1: i0 leading elements, then k - i0 from t_i + 1
        let ti = ti as usize;
        let last = ti + k - i0;
        if last > n {
            continue;
        }
        let weight = &prefix[i0] + (&prefix[last] - &prefix[ti]);
        if weight.is_positive() {
            return false;
        }
    }
    true
}

impl WeightFunction {
    /// Smallest basis weight and largest non-basis weight, by enumeration.
    pub fn margins(
        &self,
        m: &DefiningBasis,
        cap: u128,
    ) -> Result<(Option<BigRational>, Option<BigRational>)> {
        let n = m.n();
        let k = m.k();
        let total = binomial(n as u64, k as u64);
        if total > cap {
            return Err(Error::ResourceLimit {
                what: "k-subset enumeration",
                needed: total,
                cap,
            });
        }
        let (mut min_basis, mut max_other): (Option<BigRational>, Option<BigRational>) =
            (None, None);
        let mut subset: Vec<u32> = (1..=k as u32).collect();
        loop {
            let weight: BigRational = subset.iter().map(|&x| self.weight(x)).sum();
            if leq_letters(&subset, m.t().letters()) {
                if min_basis.as_ref().is_none_or(|v| &weight < v) {
                    min_basis = Some(weight);
                }
            } else if max_other.as_ref().is_none_or(|v| &weight > v) {
                max_other = Some(weight);
            }
            if !next_subset(&mut subset, n) {
                break;
            }
        }
        Ok((min_basis, max_other))
    }
}
