//! Search for `l` bases and `l` non-bases with equal sorted concatenations.

use std::collections::HashMap;

use serde::Serialize;

use super::{check_cap, letters, SmallMatroid};
use crate::error::{Error, Result};
use crate::poset::SubsetWord;
use crate::shifted::DefiningBasis;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsummabilityViolation {
    pub bases: Vec<SubsetWord>,
    pub non_bases: Vec<SubsetWord>,
}

fn check_l(l: usize) -> Result<()> {
    if !(2..=3).contains(&l) {
        return Err(Error::Unsupported(format!(
            "asummability search for l = {l}; only 2 and 3 are implemented"
        )));
    }
    Ok(())
}

/// Number of multisets of size `l` from `count` items.
fn multisets(count: usize, l: usize) -> u128 {
    let c = count as u128;
    match l {
        2 => c * (c + 1) / 2,
        _ => c * (c + 1) * (c + 2) / 6,
    }
}

/// Calls `visit` on every non-decreasing index tuple of length `l` below `count`,
/// in lexicographic order, until it returns `true`.
fn first_tuple(
    count: usize,
    l: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let mut idx = vec![0usize; l];
    if count == 0 {
        return None;
    }
    loop {
        if visit(&idx) {
            return Some(idx);
        }
        let p = (0..l).rev().find(|&p| idx[p] + 1 < count)?;
        idx[p] += 1;
        for q in p + 1..l {
            idx[q] = idx[p];
        }
    }
}

/// Multiplicity of each element in the concatenation of `masks`.
fn counts(masks: impl IntoIterator<Item = u64>) -> [u8; 64] {
    let mut c = [0u8; 64];
    for m in masks {
        for (b, slot) in c.iter_mut().enumerate() {
            *slot += (m >> b & 1) as u8;
        }
    }
    c
}

/// Matches `l`-multisets of bases against `l`-multisets of non-bases by their
/// concatenation. The first violation in lexicographic order of the non-bases
/// is returned; `cap` bounds each side's multiset count.
pub fn asummability_oracle_general(
    m: &SmallMatroid,
    l: usize,
    cap: u128,
) -> Result<Option<AsummabilityViolation>> {
    check_l(l)?;
    let bases = m.bases();
    check_cap("basis multisets", multisets(bases.len(), l), cap)?;
    let non_bases = m.non_bases(cap)?;
    check_cap("non-basis multisets", multisets(non_bases.len(), l), cap)?;
    let mut sums: HashMap<[u8; 64], Vec<usize>> = HashMap::new();
    first_tuple(bases.len(), l, |idx| {
        sums.entry(counts(idx.iter().map(|&i| bases[i])))
            .or_insert_with(|| idx.to_vec());
        false
    });
    let mut found = None;
    first_tuple(non_bases.len(), l, |idx| {
        match sums.get(&counts(idx.iter().map(|&i| non_bases[i]))) {
            Some(b) => {
                found = Some((b.clone(), idx.to_vec()));
                true
            }
            None => false,
        }
    });
    Ok(found.map(|(b, d)| AsummabilityViolation {
        bases: b.into_iter().map(|i| m.word(bases[i])).collect(),
        non_bases: d.into_iter().map(|i| m.word(non_bases[i])).collect(),
    }))
}

/// For `⟨T⟩`: non-bases `D_1 <= .. <= D_l` (lexicographically) whose sorted
/// concatenation lies below `l` copies of `T`. The bases are read off the
/// concatenation by taking every `l`-th letter.
pub fn asummability_oracle(
    m: &DefiningBasis,
    l: usize,
    cap: u128,
) -> Result<Option<AsummabilityViolation>> {
    check_l(l)?;
    let small = SmallMatroid::from_shifted(m, cap)?;
    let non_bases: Vec<Vec<u32>> = small.non_bases(cap)?.into_iter().map(letters).collect();
    check_cap("non-basis multisets", multisets(non_bases.len(), l), cap)?;
    let bound: Vec<u32> = m
        .t()
        .letters()
        .iter()
        .flat_map(|&x| std::iter::repeat_n(x, l))
        .collect();
    let concat = |idx: &[usize]| {
        let mut all: Vec<u32> = idx
            .iter()
            .flat_map(|&i| non_bases[i].iter().copied())
            .collect();
        all.sort_unstable();
        all
    };
    let Some(idx) = first_tuple(non_bases.len(), l, |idx| {
        concat(idx).iter().zip(&bound).all(|(a, b)| a <= b)
    }) else {
        return Ok(None);
    };
    let all = concat(&idx);
    let n = m.n();
    let bases = (0..l)
        .map(|j| SubsetWord::new(n, all.iter().skip(j).step_by(l).copied().collect()))
        .collect::<Result<Vec<_>>>()?;
    let non_bases = idx
        .iter()
        .map(|&i| SubsetWord::new(n, non_bases[i].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(AsummabilityViolation { bases, non_bases }))
}
