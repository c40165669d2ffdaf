//! Matroids given as lists of bases: validation, the vicinal preorder, shiftedness,
//! and the canonical defining basis.
//!
//! The vicinal preorder puts `i ≺ j` when `N[i] ⊇ N(j)`, where
//! `N(j) = {B \ j : j ∈ B}` and `N[i] = {B \ j : i, j ∈ B}`. It is total exactly
//! when the matroid is shifted, and sorting the ground set along it turns the
//! bases into a principal order ideal.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::SubsetWord;
use crate::shifted::{count_bases, enumerate_bases, DefiningBasis};

/// How many tie-class reorderings `canonicalize` tries before giving up.
pub const TIE_RETRY_LIMIT: usize = 720;

/// A matroid on labelled elements, stored as a duplicate-free list of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitMatroid {
    ground: Vec<String>,
    bases: Vec<ElementSet>,
    rank: usize,
}

impl ExplicitMatroid {
    /// Checks shape and the basis-exchange axiom. Elements are indices into `ground`.
    pub fn validate(ground: Vec<String>, bases: Vec<Vec<usize>>) -> Result<Self> {
        let n = ground.len();
        let Some(first) = bases.first() else {
            return Err(Error::EmptyBases);
        };
        let rank = first.len();
        let mut sets = Vec::with_capacity(bases.len());
        for (index, b) in bases.iter().enumerate() {
            if let Some(&x) = b.iter().find(|&&x| x >= n) {
                return Err(Error::invalid(format!(
                    "basis {} uses element index {x} outside a ground set of {n}",
                    index + 1
                )));
            }
            let set = ElementSet::from_indices(n, b.iter().copied());
            if set.len() != rank || b.len() != rank {
                return Err(Error::RaggedBases {
                    index: index + 1,
                    expected: rank,
                    found: set.len(),
                });
            }
            sets.push(set);
        }
        let mut seen = HashSet::with_capacity(sets.len());
        for (index, s) in sets.iter().enumerate() {
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateBasis(index + 1));
            }
        }
        let matroid = ExplicitMatroid {
            ground,
            bases: sets,
            rank,
        };
        matroid.check_exchange(&seen)?;
        Ok(matroid)
    }

    fn check_exchange(&self, lookup: &HashSet<ElementSet>) -> Result<()> {
        let failure = if self.n() <= 64 {
            self.exchange_failure_packed()
        } else {
            self.exchange_failure(lookup)
        };
        match failure {
            None => Ok(()),
            Some((i, j, x)) => Err(Error::NotAMatroid {
                first: self.labels(&self.bases[i]),
                second: self.labels(&self.bases[j]),
                element: self.ground[x].clone(),
            }),
        }
    }

    /// First `(i, j, x)` such that no `y ∈ B_j \ B_i` makes `B_i - x + y` a basis.
    fn exchange_failure(&self, lookup: &HashSet<ElementSet>) -> Option<(usize, usize, usize)> {
        self.bases.par_iter().enumerate().find_map_first(|(i, b1)| {
            let mut candidate = b1.clone();
            for (j, b2) in self.bases.iter().enumerate() {
                for x in b1.iter().filter(|&x| !b2.contains(x)) {
                    candidate.remove(x);
                    let ok = b2.iter().filter(|&y| !b1.contains(y)).any(|y| {
                        candidate.insert(y);
                        let hit = lookup.contains(&candidate);
                        candidate.remove(y);
                        hit
                    });
                    candidate.insert(x);
                    if !ok {
                        return Some((i, j, x));
                    }
                }
            }
            None
        })
    }

    /// `exchange_failure` on single-word masks.
    fn exchange_failure_packed(&self) -> Option<(usize, usize, usize)> {
        let masks: Vec<u64> = self
            .bases
            .iter()
            .map(|b| b.blocks().first().copied().unwrap_or(0))
            .collect();
        let lookup: HashSet<u64> = masks.iter().copied().collect();
        let bits = |mut w: u64| {
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    b
                })
            })
        };
        masks.par_iter().enumerate().find_map_first(|(i, &b1)| {
            for (j, &b2) in masks.iter().enumerate() {
                let only2 = b2 & !b1;
                for x in bits(b1 & !b2) {
                    let base = b1 & !(1 << x);
                    if !bits(only2).any(|y| lookup.contains(&(base | 1 << y))) {
                        return Some((i, j, x as usize));
                    }
                }
            }
            None
        })
    }

    /// Bases of a shifted matroid, labelled `1..=n`. Fails over `cap` bases.
    pub fn from_shifted(m: &DefiningBasis, cap: u128) -> Result<Self> {
        let n = m.n() as usize;
        let bases = enumerate_bases(m, cap)?
            .iter()
            .map(|b| ElementSet::from_indices(n, b.letters().iter().map(|&x| x as usize - 1)))
            .collect();
        Ok(ExplicitMatroid {
            ground: (1..=n).map(|x| x.to_string()).collect(),
            bases,
            rank: m.k(),
        })
    }

    /// Parses a bases file: one basis per line, whitespace-separated tokens,
    /// blank lines and `#` comments ignored. With `n`, tokens must be integers in
    /// `1..=n` and the ground set is `[n]`; otherwise it is the set of tokens seen,
    /// in numeric order when every token is an integer and lexicographic otherwise.
    pub fn parse(text: &str, n: Option<u32>) -> Result<Self> {
        let lines: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().collect())
            .collect();
        let ground: Vec<String> = match n {
            Some(n) => {
                let mut position = 0;
                for line in &lines {
                    for tok in line {
                        position += 1;
                        match tok.parse::<u32>() {
                            Ok(x) if (1..=n).contains(&x) => {}
                            _ => {
                                return Err(Error::Parse {
                                    position,
                                    token: tok.to_string(),
                                    reason: format!("expected an integer in 1..={n}"),
                                })
                            }
                        }
                    }
                }
                (1..=n).map(|x| x.to_string()).collect()
            }
            None => {
                let mut tokens: Vec<&str> = lines.iter().flatten().copied().collect();
                tokens.sort_unstable();
                tokens.dedup();
                if tokens.iter().all(|t| t.parse::<u64>().is_ok()) {
                    tokens.sort_by_key(|t| t.parse::<u64>().expect("checked numeric"));
                }
                tokens.into_iter().map(str::to_string).collect()
            }
        };
        let index: HashMap<&str, usize> = ground
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        let mut bases = Vec::with_capacity(lines.len());
        for line in &lines {
            let b = line
                .iter()
                .map(|tok| {
                    // `1` and `01` name the same element when n is given
                    match n {
                        Some(_) => tok.parse::<usize>().expect("checked above") - 1,
                        None => index[tok],
                    }
                })
                .collect();
            bases.push(b);
        }
        Self::validate(ground, bases)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: &ElementSet) -> bool {
        self.bases.iter().any(|b| b == s)
    }

    /// Element labels of a set, in ground order.
    pub fn labels(&self, s: &ElementSet) -> Vec<String> {
        s.iter().map(|i| self.ground[i].clone()).collect()
    }

    /// The same matroid with element `i` moved to position `perm[i]` and the
    /// bases listed in `order`.
    pub fn relabeled(&self, perm: &[usize], order: &[usize]) -> Self {
        let n = self.n();
        let mut ground = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            ground[p] = self.ground[i].clone();
        }
        let bases = order
            .iter()
            .map(|&b| ElementSet::from_indices(n, self.bases[b].iter().map(|i| perm[i])))
            .collect();
        ExplicitMatroid {
            ground,
            bases,
            rank: self.rank,
        }
    }
}

/// Neighborhoods and the pairwise comparison of the vicinal preorder.
#[derive(Clone, Debug)]
pub struct VicinalData {
    pub open: Vec<HashSet<ElementSet>>,
    pub closed: Vec<HashSet<ElementSet>>,
    /// `precedes[i][j]` is `i ≺ j`.
    pub precedes: Vec<Vec<bool>>,
}

impl VicinalData {
    pub fn is_total(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.precedes.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.precedes[i][j] && !self.precedes[j][i])
    }

    /// Whether `i` and `j` precede each other.
    pub fn tied(&self, i: usize, j: usize) -> bool {
        self.precedes[i][j] && self.precedes[j][i]
    }
}

pub fn vicinal_preorder(m: &ExplicitMatroid) -> VicinalData {
    let n = m.n();
    let mut open = vec![HashSet::new(); n];
    let mut closed = vec![HashSet::new(); n];
    for b in m.bases() {
        for i in b.iter() {
            let mut minus = b.clone();
            minus.remove(i);
            for j in b.iter() {
                closed[j].insert(minus.clone());
            }
            open[i].insert(minus);
        }
    }
    let precedes = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| open[j].iter().all(|s| closed[i].contains(s)))
                .collect()
        })
        .collect();
    VicinalData {
        open,
        closed,
        precedes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shiftedness {
    /// Ground indices from smallest to largest in the vicinal order.
    Shifted(Vec<usize>),
    /// Neither element precedes the other.
    NotShifted { first: usize, second: usize },
}

/// Sorts by the number of elements each one precedes, ties in input order.
pub fn is_shifted(m: &ExplicitMatroid) -> Shiftedness {
    shiftedness(&vicinal_preorder(m))
}

fn shiftedness(v: &VicinalData) -> Shiftedness {
    if let Some((first, second)) = v.incomparable_pair() {
        return Shiftedness::NotShifted { first, second };
    }
    let n = v.precedes.len();
    let mut order: Vec<usize> = (0..n).collect();
    let below = |i: usize| v.precedes[i].iter().filter(|&&p| p).count();
    order.sort_by_key(|&i| std::cmp::Reverse(below(i)));
    Shiftedness::Shifted(order)
}

/// Canonical form of a shifted matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Canonical {
    pub basis: DefiningBasis,
    /// `(label, position in [n])` in ground order.
    pub relabeling: Vec<(String, u32)>,
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.basis)?;
        for (tok, x) in &self.relabeling {
            writeln!(f, "{tok} -> {x}")?;
        }
        Ok(())
    }
}

/// The unique `T` with `⟨T⟩` isomorphic to `m`, and the element map achieving it.
pub fn canonicalize(m: &ExplicitMatroid) -> Result<Canonical> {
    let v = vicinal_preorder(m);
    let order = match shiftedness(&v) {
        Shiftedness::Shifted(order) => order,
        Shiftedness::NotShifted { first, second } => {
            return Err(Error::ContractViolation(format!(
                "not shifted: {} and {} are incomparable",
                m.ground[first], m.ground[second]
            )))
        }
    };
    // tie classes as ranges of `order`
    let mut classes: Vec<std::ops::Range<usize>> = Vec::new();
    let mut start = 0;
    for p in 1..=order.len() {
        if p == order.len() || !v.tied(order[start], order[p]) {
            classes.push(start..p);
            start = p;
        }
    }
    let mut attempt = order.clone();
    for _ in 0..TIE_RETRY_LIMIT {
        if let Some(c) = try_order(m, &attempt)? {
            return Ok(c);
        }
        if !next_tie_order(&mut attempt, &classes) {
            break;
        }
    }
    Err(Error::VerificationFailed(format!(
        "no ordering of the vicinal tie classes within {TIE_RETRY_LIMIT} attempts gives an order ideal"
    )))
}

/// Steps through permutations inside each tie class, odometer style.
fn next_tie_order(order: &mut [usize], classes: &[std::ops::Range<usize>]) -> bool {
    for class in classes.iter().rev() {
        let slice = &mut order[class.clone()];
        if next_permutation(slice) {
            return true;
        }
        // wrapped back to sorted; carry into the previous class
    }
    false
}

fn next_permutation(s: &mut [usize]) -> bool {
    let Some(i) = (1..s.len()).rev().find(|&i| s[i - 1] < s[i]) else {
        s.sort_unstable();
        return false;
    };
    let j = (i..s.len())
        .rev()
        .find(|&j| s[j] > s[i - 1])
        .expect("pivot has a successor");
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

fn try_order(m: &ExplicitMatroid, order: &[usize]) -> Result<Option<Canonical>> {
    let n = m.n() as u32;
    let mut position = vec![0u32; order.len()];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p as u32 + 1;
    }
    let mut top = vec![0u32; m.rank()];
    for b in m.bases() {
        let mut letters: Vec<u32> = b.iter().map(|i| position[i]).collect();
        letters.sort_unstable();
        for (t, x) in top.iter_mut().zip(letters) {
            *t = (*t).max(x);
        }
    }
    let t = SubsetWord::new(n, top)?;
    let basis = DefiningBasis::new(t);
    if count_bases(&basis) != BigUint::from(m.num_bases()) {
        return Ok(None);
    }
    Ok(Some(Canonical {
        basis,
        relabeling: m.ground.iter().cloned().zip(position).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|x| x.to_string()).collect()
    }

    fn matroid(n: usize, bases: &[&[usize]]) -> Result<ExplicitMatroid> {
        ExplicitMatroid::validate(
            labels(n),
            bases
                .iter()
                .map(|b| b.iter().map(|x| x - 1).collect())
                .collect(),
        )
    }

    #[test]
    fn validation() {
        assert!(matroid(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]).is_ok());
        match matroid(4, &[&[1, 2], &[3, 4]]).unwrap_err() {
            Error::NotAMatroid { first, element, .. } => {
                assert_eq!(first, vec!["1", "2"]);
                assert_eq!(element, "1");
            }
            e => panic!("{e}"),
        }
        assert!(matroid(3, &[&[1, 2, 3]]).is_ok());
        assert_eq!(matroid(3, &[]).unwrap_err(), Error::EmptyBases);
        assert!(matches!(
            matroid(3, &[&[1, 2], &[1]]).unwrap_err(),
            Error::RaggedBases { index: 2, .. }
        ));
        assert_eq!(
            matroid(3, &[&[1, 2], &[2, 1]]).unwrap_err(),
            Error::DuplicateBasis(2)
        );
    }

    #[test]
    fn vicinal_on_24() {
        let m = matroid(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]).unwrap();
        let v = vicinal_preorder(&m);
        for i in 0..4 {
            assert!(v.open[i].is_subset(&v.closed[i]));
        }
        assert!(v.tied(0, 1) && v.tied(2, 3));
        assert!(v.precedes[1][2] && !v.precedes[2][1]);
        assert_eq!(is_shifted(&m), Shiftedness::Shifted(vec![0, 1, 2, 3]));
    }

    #[test]
    fn uniform_is_all_tied() {
        let all: Vec<Vec<usize>> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| vec![i, j]))
            .collect();
        let m = ExplicitMatroid::validate(labels(4), all).unwrap();
        let v = vicinal_preorder(&m);
        assert!((0..4).all(|i| (0..4).all(|j| v.tied(i, j))));
        assert_eq!(canonicalize(&m).unwrap().basis.to_string(), "n=4; T=3 4");
    }

    #[test]
    fn two_parallel_classes() {
        let m = matroid(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]).unwrap();
        assert!(matches!(is_shifted(&m), Shiftedness::NotShifted { .. }));
    }

    #[test]
    fn canonical_24_under_letters() {
        // 1 -> c, 2 -> a, 3 -> d, 4 -> b
        let text = "c a\nc d\nc b\na d\na b\n";
        let m = ExplicitMatroid::parse(text, None).unwrap();
        let c = canonicalize(&m).unwrap();
        assert_eq!(c.basis.to_string(), "n=4; T=2 4");
        let map: HashMap<_, _> = c.relabeling.iter().cloned().collect();
        assert!(map["a"] <= 2 && map["c"] <= 2);
        assert!(map["b"] >= 3 && map["d"] >= 3);
    }

    #[test]
    fn single_basis() {
        let m = ExplicitMatroid::parse("x y z\n", None).unwrap();
        let c = canonicalize(&m).unwrap();
        assert_eq!(c.basis.to_string(), "n=3; T=1 2 3");
    }

    #[test]
    fn loops_come_last() {
        let m = ExplicitMatroid::parse("1 2\n1 3\n", Some(4)).unwrap();
        let c = canonicalize(&m).unwrap();
        assert_eq!(c.basis.to_string(), "n=4; T=1 3");
        assert_eq!(c.relabeling[3], ("4".to_string(), 4));
    }

    #[test]
    fn parse_errors() {
        match ExplicitMatroid::parse("1 2\n1 9\n", Some(4)).unwrap_err() {
            Error::Parse {
                position, token, ..
            } => {
                assert_eq!(position, 4);
                assert_eq!(token, "9");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn tie_permutations() {
        let mut order = vec![0, 1, 2, 3];
        let classes = vec![0..2, 2..4];
        let mut seen = 1;
        while next_tie_order(&mut order, &classes) {
            seen += 1;
        }
        assert_eq!(seen, 4);
        assert_eq!(order, vec![0, 1, 2, 3]);
    }
}
