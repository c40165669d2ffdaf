//! Circuits, paving and binary tests computed from the bases by subset sweeps.

use super::{check_cap, SmallMatroid};
use crate::error::Result;
use crate::shifted::Circuit;

/// Minimal dependent sets, sorted by size and then lexicographically. Needs
/// `2^n <= cap`.
pub fn circuits_bruteforce(m: &SmallMatroid, cap: u128) -> Result<Vec<Circuit>> {
    Ok(circuit_masks(m, cap)?
        .into_iter()
        .map(|c| Circuit {
            elements: m.word(c),
        })
        .collect())
}

fn circuit_masks(m: &SmallMatroid, cap: u128) -> Result<Vec<u64>> {
    let n = m.n();
    check_cap("subset sweep", 1u128 << n, cap)?;
    let size = 1usize << n;
    let mut independent = vec![false; size];
    for &b in m.bases() {
        independent[b as usize] = true;
    }
    for mask in (0..size).rev() {
        if independent[mask] {
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                independent[mask ^ bit] = true;
                rest ^= bit;
            }
        }
    }
    let mut out: Vec<u64> = (0..size)
        .filter(|&mask| {
            if independent[mask] {
                return false;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !independent[mask ^ bit] {
                    return false;
                }
                rest ^= bit;
            }
            true
        })
        .map(|mask| mask as u64)
        .collect();
    out.sort_by_cached_key(|&c| (c.count_ones(), super::letters(c)));
    Ok(out)
}

/// Every circuit has at least `k` elements.
pub fn paving_oracle(m: &SmallMatroid, cap: u128) -> Result<bool> {
    let k = m.k();
    Ok(circuit_masks(m, cap)?.iter().all(|c| c.count_ones() >= k))
}

/// The symmetric difference of any two distinct circuits contains a circuit.
pub fn binary_symdiff_oracle(m: &SmallMatroid, cap: u128) -> Result<bool> {
    let circuits = circuit_masks(m, cap)?;
    let c = circuits.len() as u128;
    check_cap("circuit pairs", c * c.saturating_sub(1) / 2, cap)?;
    Ok(circuits.iter().enumerate().all(|(i, &a)| {
        circuits[i + 1..].iter().all(|&b| {
            let diff = a ^ b;
            circuits.iter().any(|&x| x & !diff == 0)
        })
    }))
}
