//! Weakly increasing words over `[n]`, the componentwise order on them,
//! sorted concatenation, and the block/gap decomposition of subsets.
//!
//! Letters are 1-based. Every word carries its ground-set size `n`, and
//! binary operations reject words over different ground sets.

use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// A weakly increasing word of letters in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    n: u32,
}

impl Word {
    pub fn new(n: u32, letters: Vec<u32>) -> Result<Self> {
        for (i, &x) in letters.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::invalid(format!(
                    "letter {x} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if i > 0 && letters[i - 1] > x {
                return Err(Error::invalid(format!(
                    "letters decrease at position {}",
                    i + 1
                )));
            }
        }
        Ok(Word { letters, n })
    }

    pub fn empty(n: u32) -> Self {
        Word {
            letters: Vec::new(),
            n,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A strictly increasing word, i.e. a subset of `[n]`, with a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetWord {
    word: Word,
    mask: ElementSet,
}

impl SubsetWord {
    pub fn new(n: u32, letters: Vec<u32>) -> Result<Self> {
        let word = Word::new(n, letters)?;
        Self::from_word(word)
    }

    pub fn from_word(word: Word) -> Result<Self> {
        if let Some(i) = word.letters.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "repeated letter {} at position {}",
                word.letters[i],
                i + 2
            )));
        }
        let mask = ElementSet::from_indices(
            word.n as usize,
            word.letters.iter().map(|&x| x as usize - 1),
        );
        Ok(SubsetWord { word, mask })
    }

    /// The subset of `[n]` whose bit `x - 1` is set in `mask`.
    pub fn from_mask(n: u32, mask: u64) -> Self {
        let letters = (1..=n).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        SubsetWord::new(n, letters).expect("mask letters are increasing and in range")
    }

    pub fn empty(n: u32) -> Self {
        SubsetWord {
            word: Word::empty(n),
            mask: ElementSet::with_width(n as usize),
        }
    }

    /// `{1, .., k}` inside `[n]`.
    pub fn initial_segment(n: u32, k: u32) -> Self {
        SubsetWord::new(n, (1..=k).collect()).expect("initial segment fits in [n]")
    }

    /// Parses the textual form: whitespace-separated strictly increasing integers.
    /// Errors report the 1-based position of the offending token.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (i, token) in text.split_whitespace().enumerate() {
            let bad = |reason: String| Error::Parse {
                position: i + 1,
                token: token.to_string(),
                reason,
            };
            let x: u32 = token
                .parse()
                .map_err(|_| bad("not a positive integer".into()))?;
            if x == 0 || x > n {
                return Err(bad(format!("outside 1..={n}")));
            }
            if let Some(&prev) = letters.last() {
                if x <= prev {
                    return Err(bad(format!("not greater than the previous element {prev}")));
                }
            }
            letters.push(x);
        }
        SubsetWord::new(n, letters)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letters(&self) -> &[u32] {
        &self.word.letters
    }

    pub fn n(&self) -> u32 {
        self.word.n
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= 1 && self.mask.contains(x as usize - 1)
    }

    pub fn mask(&self) -> &ElementSet {
        &self.mask
    }

    /// `[n] \ self` in increasing order.
    pub fn complement(&self) -> SubsetWord {
        let letters = (1..=self.n()).filter(|&x| !self.contains(x)).collect();
        SubsetWord::new(self.n(), letters).expect("complement is a subset")
    }

    pub fn max_element(&self) -> Option<u32> {
        self.letters().last().copied()
    }
}

impl fmt::Display for SubsetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.letters())
    }
}

impl Serialize for SubsetWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.letters().serialize(serializer)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

fn same_ground(a: &Word, b: &Word) -> Result<()> {
    if a.n != b.n {
        return Err(Error::invalid(format!(
            "ground-set mismatch: n={} vs n={}",
            a.n, b.n
        )));
    }
    Ok(())
}

fn same_length(a: &Word, b: &Word) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// `S ≺ T`: `S(i) <= T(i)` at every index.
pub fn componentwise_leq(s: &Word, t: &Word) -> Result<bool> {
    same_length(s, t)?;
    Ok(leq_letters(s.letters(), t.letters()))
}

/// Unchecked componentwise comparison of equal-length letter slices.
#[inline]
pub(crate) fn leq_letters(s: &[u32], t: &[u32]) -> bool {
    debug_assert_eq!(s.len(), t.len());
    s.iter().zip(t).all(|(a, b)| a <= b)
}

/// A position bijection `pi` with `S(i) <= T(pi[i])` for every `i` (0-based), if any exists.
///
/// Assigns each letter of `S`, smallest first, to the leftmost unused position
/// of `T` that dominates it.
pub fn matching_witness(s: &Word, t: &Word) -> Result<Option<Vec<usize>>> {
    same_length(s, t)?;
    let k = s.len();
    let mut used = vec![false; k];
    let mut pi = Vec::with_capacity(k);
    for &x in s.letters() {
        match (0..k).find(|&j| !used[j] && t.letters()[j] >= x) {
            Some(j) => {
                used[j] = true;
                pi.push(j);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(pi))
}

/// The multiset union of the letters of `a` and `b`, re-sorted.
pub fn sorted_concat(a: &Word, b: &Word) -> Result<Word> {
    same_ground(a, b)?;
    Ok(Word {
        letters: merge(a.letters(), b.letters()),
        n: a.n,
    })
}

/// Sorted concatenation of any number of words over the same ground set.
pub fn sorted_concat_all<'a>(n: u32, words: impl IntoIterator<Item = &'a Word>) -> Result<Word> {
    let mut acc = Word::empty(n);
    for w in words {
        acc = sorted_concat(&acc, w)?;
    }
    Ok(acc)
}

pub(crate) fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A maximal run `start..=end` of consecutive integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub start: u32,
    pub end: u32,
}

impl Run {
    pub fn len(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }

    pub fn to_subset_word(&self, n: u32) -> SubsetWord {
        SubsetWord::new(n, self.elements().collect()).expect("run lies inside [n]")
    }
}

/// Blocks (maximal runs of `T`) and gaps (maximal runs of `[n] \ T`), each in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub n: u32,
    pub blocks: Vec<Run>,
    pub gaps: Vec<Run>,
    /// Whether the run containing `1` is a gap.
    pub starts_with_gap: bool,
}

impl BlockDecomposition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Run::len).collect()
    }

    /// All runs in increasing order, tagged `true` for blocks.
    pub fn runs(&self) -> Vec<(bool, Run)> {
        let mut runs: Vec<(bool, Run)> = self
            .blocks
            .iter()
            .map(|&r| (true, r))
            .chain(self.gaps.iter().map(|&r| (false, r)))
            .collect();
        runs.sort_by_key(|(_, r)| r.start);
        runs
    }
}

pub fn block_decomposition(t: &SubsetWord) -> Result<BlockDecomposition> {
    if t.is_empty() {
        return Err(Error::Degenerate(
            "block decomposition of the empty set".into(),
        ));
    }
    let n = t.n();
    let mut blocks = Vec::new();
    let mut gaps = Vec::new();
    let mut x = 1;
    while x <= n {
        let inside = t.contains(x);
        let start = x;
        while x < n && t.contains(x + 1) == inside {
            x += 1;
        }
        let run = Run { start, end: x };
        if inside {
            blocks.push(run);
        } else {
            gaps.push(run);
        }
        x += 1;
    }
    Ok(BlockDecomposition {
        n,
        blocks,
        gaps,
        starts_with_gap: !t.contains(1),
    })
}
