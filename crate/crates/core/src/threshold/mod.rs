//! Thresholdness of shifted matroids from the block structure of the
//! coloop-free defining basis.
//!
//! | blocks of `T̃` | verdict |
//! |---|---|
//! | 0, 1 or 2 | threshold |
//! | 3, second block or second gap of size one | threshold |
//! | 3, otherwise | not threshold |
//! | 4 or more | not threshold |
//!
//! Threshold verdicts come with a [`WeightFunction`]; the others with a
//! [`NonThresholdCertificate`], two bases and two non-bases with equal sorted
//! concatenations.

mod certificate;
mod weights;

use std::fmt;

use serde::Serialize;

use crate::shifted::{contract_coloops, Contraction, DefiningBasis};

pub use certificate::{certificate, verify_certificate, NonThresholdCertificate};
pub use weights::{
    raw_weights, synthesize_weights, verify_weights, Construction, RawWeight, VerifyMode,
    WeightFunction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Threshold,
    NotThreshold,
    /// `T` is empty: the single empty basis has weight zero under every weighting.
    DegenerateRankZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    AtMostTwoBlocks,
    ThreeBlocksSecondBlockOne,
    ThreeBlocksSecondGapOne,
    FourPlusBlocks,
    ThreeBlocksBad,
}

impl CaseTag {
    pub fn verdict(self) -> Verdict {
        match self {
            CaseTag::AtMostTwoBlocks
            | CaseTag::ThreeBlocksSecondBlockOne
            | CaseTag::ThreeBlocksSecondGapOne => Verdict::Threshold,
            CaseTag::FourPlusBlocks | CaseTag::ThreeBlocksBad => Verdict::NotThreshold,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// `None` only for [`Verdict::DegenerateRankZero`].
    pub case: Option<CaseTag>,
    /// Number of blocks of the contracted defining basis.
    pub blocks: usize,
    pub contraction: Contraction,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            Some(case) => write!(f, "{} {}", self.verdict, case),
            None => write!(f, "{}", self.verdict),
        }
    }
}

pub fn classify(m: &DefiningBasis) -> Classification {
    let contraction = contract_coloops(m);
    if m.k() == 0 {
        return Classification {
            verdict: Verdict::DegenerateRankZero,
            case: None,
            blocks: 0,
            contraction,
        };
    }
    let (case, blocks) = match contraction.basis.blocks() {
        // every element was a coloop
        Err(_) => (CaseTag::AtMostTwoBlocks, 0),
        Ok(d) => {
            let case = match d.num_blocks() {
                0..=2 => CaseTag::AtMostTwoBlocks,
                3 if d.blocks[1].len() == 1 => CaseTag::ThreeBlocksSecondBlockOne,
                // coloop-free, so gaps[0] precedes the first block
                3 if d.gaps[1].len() == 1 => CaseTag::ThreeBlocksSecondGapOne,
                3 => CaseTag::ThreeBlocksBad,
                _ => CaseTag::FourPlusBlocks,
            };
            (case, d.num_blocks())
        }
    };
    Classification {
        verdict: case.verdict(),
        case: Some(case),
        blocks,
        contraction,
    }
}
