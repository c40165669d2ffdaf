#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use shiftmat::shifted::DefiningBasis;
use shiftmat::threshold::{classify, Verdict};
use shiftmat::SubsetWord;

/// Every `T ⊆ [n]`, in increasing bitmask order, the empty set first.
pub fn all_bases(n: u32) -> impl Iterator<Item = DefiningBasis> {
    (0..1u64 << n).map(move |mask| DefiningBasis::new(SubsetWord::from_mask(n, mask)))
}

pub fn non_empty_bases(n: u32) -> impl Iterator<Item = DefiningBasis> {
    all_bases(n).skip(1)
}

pub fn db(n: u32, t: &[u32]) -> DefiningBasis {
    DefiningBasis::from_letters(n, t).unwrap()
}

/// Builds `T` from alternating run lengths: coloops, then gap/block pairs, then loops.
pub fn from_runs(coloops: u32, pairs: &[(u32, u32)], loops: u32) -> DefiningBasis {
    let mut letters: Vec<u32> = (1..=coloops).collect();
    let mut x = coloops;
    for &(gap, block) in pairs {
        x += gap;
        letters.extend(x + 1..=x + block);
        x += block;
    }
    db(x + loops, &letters)
}

/// A random threshold defining basis on at most `max_n` elements, drawn
/// uniformly over the threshold block shapes.
pub fn random_threshold(rng: &mut impl Rng, max_n: u32) -> DefiningBasis {
    loop {
        let size = |rng: &mut dyn rand::RngCore| rng.gen_range(1..=max_n / 8 + 1);
        let coloops = if rng.gen_bool(0.5) { 0 } else { size(rng) };
        let loops = if rng.gen_bool(0.5) { 0 } else { size(rng) };
        let pairs: Vec<(u32, u32)> = match rng.gen_range(0..5) {
            0 => vec![],
            1 => vec![(size(rng), size(rng))],
            2 => vec![(size(rng), size(rng)), (size(rng), size(rng))],
            3 => vec![
                (size(rng), size(rng)),
                (size(rng), 1),
                (size(rng), size(rng)),
            ],
            _ => vec![
                (size(rng), size(rng)),
                (1, size(rng)),
                (size(rng), size(rng)),
            ],
        };
        if pairs.is_empty() && coloops == 0 {
            continue;
        }
        let m = from_runs(coloops, &pairs, loops);
        if m.n() > max_n {
            continue;
        }
        assert_eq!(
            classify(&m).verdict,
            Verdict::Threshold,
            "generator produced {m}"
        );
        return m;
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
