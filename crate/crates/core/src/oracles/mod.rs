//! Brute-force ground truth computed from bases alone.
//!
//! Nothing here calls into the block-structure code it is used to check: bases
//! come from the definition (componentwise comparison against `T`) or from an
//! explicit list, and everything else is exhaustive search.

mod asummability;
mod circuits;
mod lp;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::SubsetWord;
use crate::recognition::ExplicitMatroid;
use crate::shifted::DefiningBasis;

pub use asummability::{asummability_oracle, asummability_oracle_general, AsummabilityViolation};
pub use circuits::{binary_symdiff_oracle, circuits_bruteforce, paving_oracle};
pub use lp::{lp_threshold_oracle, LpWitness};

/// Largest ground set the oracles accept.
pub const MAX_ORACLE_N: u32 = 63;

/// A matroid on `[n]` with bases stored as bitmasks (bit `x - 1` for element `x`).
#[derive(Clone, Debug)]
pub struct SmallMatroid {
    n: u32,
    k: u32,
    bases: Vec<u64>,
    lookup: HashSet<u64>,
}

impl SmallMatroid {
    /// Bases of `⟨T⟩`, found by testing every `k`-subset against `T` directly.
    pub fn from_shifted(m: &DefiningBasis, cap: u128) -> Result<Self> {
        let n = m.n();
        let k = m.k() as u32;
        check_n(n)?;
        check_cap("k-subset enumeration", binomial(n, k), cap)?;
        let t = m.t().letters();
        let bases = k_subsets(n, k)
            .filter(|&mask| letters(mask).iter().zip(t).all(|(s, t)| s <= t))
            .collect();
        Ok(Self::from_masks(n, k, bases))
    }

    pub fn from_explicit(m: &ExplicitMatroid) -> Result<Self> {
        let n = m.n() as u32;
        check_n(n)?;
        let bases = m
            .bases()
            .iter()
            .map(|b| b.blocks().first().copied().unwrap_or(0))
            .collect();
        Ok(Self::from_masks(n, m.rank() as u32, bases))
    }

    fn from_masks(n: u32, k: u32, mut bases: Vec<u64>) -> Self {
        bases.sort_by_cached_key(|&b| letters(b));
        let lookup = bases.iter().copied().collect();
        SmallMatroid {
            n,
            k,
            bases,
            lookup,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Bases in lexicographic order of their letters.
    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.lookup.contains(&mask)
    }

    /// Size-`k` non-bases in lexicographic order.
    pub fn non_bases(&self, cap: u128) -> Result<Vec<u64>> {
        check_cap("k-subset enumeration", binomial(self.n, self.k), cap)?;
        let mut out: Vec<u64> = k_subsets(self.n, self.k)
            .filter(|m| !self.is_basis(*m))
            .collect();
        out.sort_by_cached_key(|&b| letters(b));
        Ok(out)
    }

    pub(crate) fn word(&self, mask: u64) -> SubsetWord {
        SubsetWord::from_mask(self.n, mask)
    }
}

fn check_n(n: u32) -> Result<()> {
    if n > MAX_ORACLE_N {
        return Err(Error::ResourceLimit {
            what: "oracle ground set",
            needed: n as u128,
            cap: MAX_ORACLE_N as u128,
        });
    }
    Ok(())
}

pub(crate) fn check_cap(what: &'static str, needed: u128, cap: u128) -> Result<()> {
    if needed > cap {
        return Err(Error::ResourceLimit { what, needed, cap });
    }
    Ok(())
}

/// Letters of a mask, increasing.
pub(crate) fn letters(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// All masks over `n` bits with `k` bits set, in increasing numeric order.
pub(crate) fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = u64> {
    let limit = 1u128 << n;
    let first = if k == 0 {
        0
    } else {
        u64::MAX >> (64 - k.min(64))
    };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let v = (((r ^ cur) >> 2) / c) | r;
            ((v as u128) < limit && r != 0).then_some(v)
        };
        Some(cur)
    })
}

pub(crate) fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    (0..k).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}
