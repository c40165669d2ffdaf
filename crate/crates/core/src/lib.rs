//! Shifted and threshold matroids.
//!
//! A shifted matroid `⟨T⟩` on `[n]` has as bases every `k`-subset lying below
//! its defining basis `T` in the componentwise order. This crate decides which
//! shifted matroids are threshold (their bases are exactly the `k`-subsets of
//! positive weight under some weighting of the ground set), builds checkable
//! certificates either way, recognizes shifted matroids given as bases lists,
//! and counts threshold classes.
//!
//! Module map:
//!
//! - [`poset`]: words, componentwise order, sorted concatenation, blocks and gaps
//! - [`shifted`]: bases, circuits, loops/coloops, duality, contraction, paving/binary
//! - [`recognition`]: bases-list input, vicinal preorder, canonical defining basis
//! - [`threshold`]: classification, weight synthesis, non-threshold certificates
//! - [`oracles`]: brute-force ground truth (exact LP, asummability search, circuits)
//! - [`census`]: closed-form counts and exhaustive sweeps
//! - [`cli`]: the `shiftmat` command line

pub mod bitset;
pub mod census;
pub mod cli;
pub mod error;
pub mod oracles;
pub mod poset;
pub mod recognition;
pub mod shifted;
pub mod threshold;

pub use error::{Error, Result};
pub use poset::{BlockDecomposition, Run, SubsetWord, Word};
pub use recognition::ExplicitMatroid;
pub use shifted::{Circuit, DefiningBasis};
pub use threshold::{Classification, NonThresholdCertificate, Verdict, WeightFunction};

/// Default cap on exhaustive enumerations (subsets, bases, constraints).
pub const DEFAULT_CAP: u128 = 1 << 20;
