//! Two bases and two non-bases with equal sorted concatenations, which rules out
//! any separating weight function.

use std::fmt;

use serde::Serialize;

use super::{classify, Verdict};
use crate::error::{Error, Result};
use crate::poset::{leq_letters, merge, Run, SubsetWord};
use crate::shifted::DefiningBasis;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonThresholdCertificate {
    pub b1: SubsetWord,
    pub b2: SubsetWord,
    pub d1: SubsetWord,
    pub d2: SubsetWord,
}

impl fmt::Display for NonThresholdCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "B1={}", self.b1)?;
        writeln!(f, "B2={}", self.b2)?;
        writeln!(f, "D1={}", self.d1)?;
        writeln!(f, "D2={}", self.d2)
    }
}

/// How one block of the two copies of `T` is shared out: the major side takes
/// the whole block plus `dup` leading letters of the second copy, shifted down
/// by `shift`; the minor side takes the rest of the second copy.
struct Share {
    major_is_first: bool,
    dup: u32,
    shift: u32,
}

/// Builds the certificate on the coloop-free contraction and lifts it back.
pub fn certificate(m: &DefiningBasis) -> Result<NonThresholdCertificate> {
    let class = classify(m);
    if class.verdict != Verdict::NotThreshold {
        return Err(Error::ContractViolation(format!(
            "certificate requested for {m}, classified {class}"
        )));
    }
    let inner = &class.contraction.basis;
    let n = inner.n();
    let decomp = inner.blocks()?;
    let share = |major_is_first, dup, shift| Share {
        major_is_first,
        dup,
        shift,
    };
    let (runs, shares) = if decomp.num_blocks() >= 4 {
        // merge blocks 4.. into one run starting where block 4 starts
        let b = &decomp.blocks;
        let tail: usize = b[3..].iter().map(Run::len).sum();
        let fourth = Run {
            start: b[3].start,
            end: b[3].start + tail as u32 - 1,
        };
        (
            vec![b[0], b[1], b[2], fourth],
            vec![
                share(true, 1, 1),
                share(false, 1, 1),
                share(false, 1, 1),
                share(true, 1, 1),
            ],
        )
    } else {
        (
            decomp.blocks.clone(),
            vec![share(true, 1, 1), share(false, 2, 2), share(true, 1, 1)],
        )
    };
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for (run, s) in runs.iter().zip(&shares) {
        let elements: Vec<u32> = run.elements().collect();
        let (major, minor) = if s.major_is_first {
            (&mut d1, &mut d2)
        } else {
            (&mut d2, &mut d1)
        };
        major.extend((0..s.dup).map(|i| run.start + i - s.shift));
        major.extend_from_slice(&elements);
        minor.extend_from_slice(&elements[s.dup as usize..]);
    }
    d1.sort_unstable();
    d2.sort_unstable();
    let d1 = SubsetWord::new(n, d1)?;
    let d2 = SubsetWord::new(n, d2)?;
    let (b1, b2) = split_by_interleaving(&d1, &d2)?;
    let lift = |s: &SubsetWord| class.contraction.lift(s);
    let cert = NonThresholdCertificate {
        b1: lift(&b1),
        b2: lift(&b2),
        d1: lift(&d1),
        d2: lift(&d2),
    };
    if !verify_certificate(m, &cert) {
        return Err(Error::InvariantViolation(format!(
            "certificate for {m} does not verify:\n{cert}"
        )));
    }
    Ok(cert)
}

/// Splits `D1 + D2` into its odd- and even-position letters.
pub(crate) fn split_by_interleaving(
    d1: &SubsetWord,
    d2: &SubsetWord,
) -> Result<(SubsetWord, SubsetWord)> {
    let all = merge(d1.letters(), d2.letters());
    let odd = all.iter().step_by(2).copied().collect();
    let even = all.iter().skip(1).step_by(2).copied().collect();
    Ok((
        SubsetWord::new(d1.n(), odd)?,
        SubsetWord::new(d1.n(), even)?,
    ))
}

/// Bases `B1, B2`, size-`k` non-bases `D1, D2`, and `B1 + B2 = D1 + D2`.
pub fn verify_certificate(m: &DefiningBasis, c: &NonThresholdCertificate) -> bool {
    let k = m.k();
    let t = m.t().letters();
    let all = [&c.b1, &c.b2, &c.d1, &c.d2];
    if all.iter().any(|s| s.n() != m.n() || s.len() != k) {
        return false;
    }
    leq_letters(c.b1.letters(), t)
        && leq_letters(c.b2.letters(), t)
        && !leq_letters(c.d1.letters(), t)
        && !leq_letters(c.d2.letters(), t)
        && merge(c.b1.letters(), c.b2.letters()) == merge(c.d1.letters(), c.d2.letters())
}
