//! Counting threshold classes: the closed form, the exhaustive sweep, and the
//! ratio against all `2^n` shifted classes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{block_decomposition, SubsetWord};
use crate::shifted::DefiningBasis;
use crate::threshold::{classify, CaseTag, Verdict};

/// Default largest `n` accepted by [`census`].
pub const DEFAULT_CENSUS_CAP: u32 = 24;

/// How many non-threshold `T` a report lists.
pub const OFFENDING_LIMIT: usize = 1000;

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n+1,2) + C(n+1,4) + C(n+1,6) + C(n-1,6)`, with `C(a,b) = 0` for `a < b`.
pub fn threshold_count_formula(n: u32) -> BigUint {
    let n = n as u64;
    binomial(n + 1, 2) + binomial(n + 1, 4) + binomial(n + 1, 6) + binomial(n.saturating_sub(1), 6)
}

/// The mutually exclusive shapes of threshold `T` (coloops included), each with
/// a binomial count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EnumerationCase {
    OneBlock,
    TwoBlocks,
    ThreeBlocksWithOne,
    ThreeBlocksSecondBlockOne,
    ThreeBlocksSecondGapOne,
    FourBlocksThirdBlockOne,
    FourBlocksSecondGapOne,
}

impl EnumerationCase {
    pub const ALL: [EnumerationCase; 7] = [
        EnumerationCase::OneBlock,
        EnumerationCase::TwoBlocks,
        EnumerationCase::ThreeBlocksWithOne,
        EnumerationCase::ThreeBlocksSecondBlockOne,
        EnumerationCase::ThreeBlocksSecondGapOne,
        EnumerationCase::FourBlocksThirdBlockOne,
        EnumerationCase::FourBlocksSecondGapOne,
    ];

    /// Number of `T ⊆ [n]` of this shape.
    pub fn count(self, n: u32) -> BigUint {
        let n = n as u64;
        match self {
            EnumerationCase::OneBlock => binomial(n + 1, 2),
            EnumerationCase::TwoBlocks => binomial(n + 1, 4),
            EnumerationCase::ThreeBlocksWithOne => binomial(n, 5),
            EnumerationCase::ThreeBlocksSecondBlockOne => binomial(n.saturating_sub(1), 5),
            EnumerationCase::ThreeBlocksSecondGapOne => binomial(n.saturating_sub(2), 5),
            EnumerationCase::FourBlocksThirdBlockOne => binomial(n.saturating_sub(1), 6),
            EnumerationCase::FourBlocksSecondGapOne => binomial(n.saturating_sub(2), 6),
        }
    }

    /// The shape of a non-empty `T`, or `None` when `⟨T⟩` is not threshold.
    pub fn of(t: &SubsetWord) -> Option<EnumerationCase> {
        let d = block_decomposition(t).ok()?;
        let sizes = d.block_sizes();
        let has_one = !d.starts_with_gap;
        // gaps[1] is the gap after the second block when T starts with a block,
        // and the gap after the first block otherwise
        let second_gap_one = d.gaps.get(1).is_some_and(|g| g.len() == 1);
        use EnumerationCase::*;
        match (sizes.len(), has_one) {
            (1, _) => Some(OneBlock),
            (2, _) => Some(TwoBlocks),
            (3, true) => Some(ThreeBlocksWithOne),
            (3, false) if sizes[1] == 1 => Some(ThreeBlocksSecondBlockOne),
            (3, false) if second_gap_one => Some(ThreeBlocksSecondGapOne),
            (4, true) if sizes[2] == 1 => Some(FourBlocksThirdBlockOne),
            (4, true) if second_gap_one => Some(FourBlocksSecondGapOne),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: u32,
    /// `2^n`, counting the empty defining basis.
    pub shifted_classes: u64,
    pub non_empty_classes: u64,
    /// The empty `T`, reported apart from both verdicts.
    pub rank_zero_classes: u64,
    pub threshold_by_case: BTreeMap<CaseTag, u64>,
    pub threshold_by_enumeration_case: BTreeMap<EnumerationCase, u64>,
    pub threshold_count: u64,
    pub non_threshold_count: u64,
    /// The first non-threshold `T` in increasing bitmask order, at most
    /// [`OFFENDING_LIMIT`] of them.
    pub non_threshold: Vec<SubsetWord>,
    /// `threshold_count / 2^n` as `p/q` in lowest terms.
    pub ratio: String,
}

#[derive(Clone, Default)]
struct Tally {
    by_case: BTreeMap<CaseTag, u64>,
    by_enumeration: BTreeMap<EnumerationCase, u64>,
    threshold: u64,
    non_threshold: u64,
    offending: Vec<u64>,
    /// A threshold verdict without a matching enumeration shape, or vice versa.
    mismatch: Option<u64>,
}

impl Tally {
    fn add(mut self, n: u32, mask: u64) -> Tally {
        let t = SubsetWord::from_mask(n, mask);
        let shape = EnumerationCase::of(&t);
        let class = classify(&DefiningBasis::new(t));
        let case = class.case.expect("non-empty T has a case");
        if (class.verdict == Verdict::Threshold) != shape.is_some() && self.mismatch.is_none() {
            self.mismatch = Some(mask);
        }
        match class.verdict {
            Verdict::Threshold => {
                self.threshold += 1;
                *self.by_case.entry(case).or_default() += 1;
                if let Some(s) = shape {
                    *self.by_enumeration.entry(s).or_default() += 1;
                }
            }
            _ => {
                self.non_threshold += 1;
                if self.offending.len() < OFFENDING_LIMIT {
                    self.offending.push(mask);
                }
            }
        }
        self
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.by_case {
            *self.by_case.entry(k).or_default() += v;
        }
        for (k, v) in other.by_enumeration {
            *self.by_enumeration.entry(k).or_default() += v;
        }
        self.threshold += other.threshold;
        self.non_threshold += other.non_threshold;
        self.offending.extend(other.offending);
        self.offending.sort_unstable();
        self.offending.truncate(OFFENDING_LIMIT);
        self.mismatch = match (self.mismatch, other.mismatch) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Classifies every non-empty `T ⊆ [n]`.
pub fn census(n: u32, cap: u32) -> Result<CensusReport> {
    if n == 0 {
        return Err(Error::invalid("census needs n >= 1"));
    }
    if n > cap || n > 62 {
        return Err(Error::ResourceLimit {
            what: "census ground set",
            needed: n as u128,
            cap: cap.min(62) as u128,
        });
    }
    let total = 1u64 << n;
    let tally = (1..total)
        .into_par_iter()
        .fold(Tally::default, |t, mask| t.add(n, mask))
        .reduce(Tally::default, Tally::merge);
    if let Some(mask) = tally.mismatch {
        return Err(Error::InvariantViolation(format!(
            "classification and enumeration shapes disagree on T={}",
            SubsetWord::from_mask(n, mask)
        )));
    }
    let ratio = exact_ratio(&BigUint::from(tally.threshold), n);
    Ok(CensusReport {
        n,
        shifted_classes: total,
        non_empty_classes: total - 1,
        rank_zero_classes: 1,
        threshold_by_case: tally.by_case,
        threshold_by_enumeration_case: tally.by_enumeration,
        threshold_count: tally.threshold,
        non_threshold_count: tally.non_threshold,
        non_threshold: tally
            .offending
            .into_iter()
            .map(|m| SubsetWord::from_mask(n, m))
            .collect(),
        ratio,
    })
}

fn exact_ratio(numerator: &BigUint, n: u32) -> String {
    let den = BigUint::one() << n;
    let g = numerator.gcd(&den);
    if g.is_zero() {
        return format!("0/{den}");
    }
    format!("{}/{}", numerator / &g, den / g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub n: u32,
    /// `F(n)`.
    pub numerator: BigUint,
    /// `2^n`.
    pub denominator: BigUint,
}

impl RatioRow {
    /// The ratio rounded half-up to `places` decimals.
    pub fn decimal(&self, places: u32) -> String {
        rounded_decimal(&self.numerator, &self.denominator, places)
    }

    /// The ratio as a percentage rounded half-up to `places` decimals.
    pub fn percent(&self, places: u32) -> String {
        let hundred = &self.numerator * BigUint::from(100u32);
        format!("{}%", rounded_decimal(&hundred, &self.denominator, places))
    }
}

/// `num / den` rounded half-up to `places` decimals.
pub fn rounded_decimal(num: &BigUint, den: &BigUint, places: u32) -> String {
    let scale = BigUint::from(10u32).pow(places);
    let scaled = (num * &scale * 2u32 + den) / (den * 2u32);
    let (whole, frac) = scaled.div_rem(&scale);
    if places == 0 {
        return whole.to_string();
    }
    format!(
        "{whole}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

pub fn ratio_series(n_max: u32) -> Vec<RatioRow> {
    (1..=n_max)
        .map(|n| RatioRow {
            n,
            numerator: threshold_count_formula(n),
            denominator: BigUint::one() << n,
        })
        .collect()
}

/// Columns `n,numerator,denominator,decimal`, the decimal to six places.
pub fn ratio_csv(rows: &[RatioRow]) -> String {
    let mut out = String::from("n,numerator,denominator,decimal\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.n,
            r.numerator,
            r.denominator,
            r.decimal(6)
        )
        .expect("writing to a String");
    }
    out
}

/// Whether each ratio from `from` on is strictly below its predecessor.
pub fn strictly_decreasing_from(rows: &[RatioRow], from: u32) -> bool {
    rows.windows(2).filter(|w| w[0].n >= from).all(|w| {
        // a/b > c/d  <=>  a*d > c*b
        let lhs = BigInt::from(w[0].numerator.clone()) * BigInt::from(w[1].denominator.clone());
        let rhs = BigInt::from(w[1].numerator.clone()) * BigInt::from(w[0].denominator.clone());
        lhs > rhs
    })
}
