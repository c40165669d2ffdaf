//! The smallest non-threshold shifted matroid, seen three ways: the block
//! structure, an explicit 2-trade, and an infeasible separating LP.
//!
//! cargo run --example counterexample

use shiftmat::oracles::{asummability_oracle, lp_threshold_oracle, LpWitness, SmallMatroid};
use shiftmat::shifted::DefiningBasis;
use shiftmat::threshold::{certificate, classify, verify_certificate};

fn main() -> shiftmat::Result<()> {
    let m = DefiningBasis::from_letters(8, &[2, 4, 6, 8])?;
    println!("{m}: {}", classify(&m));

    let c = certificate(&m)?;
    print!("{c}");
    println!("verified: {}", verify_certificate(&m, &c));

    if let Some(v) = asummability_oracle(&m, 2, 1 << 16)? {
        let show: Vec<String> = v.non_bases.iter().map(ToString::to_string).collect();
        println!("first 2-trade found by search: D = {show:?}");
    }

    let small = SmallMatroid::from_shifted(&m, 1 << 16)?;
    match lp_threshold_oracle(&small, 1 << 16)? {
        LpWitness::Infeasible {
            contradiction,
            stage_sizes,
        } => {
            println!(
                "LP infeasible: {} constraints combine to 0 <= negative",
                contradiction.len()
            );
            println!("constraints per elimination stage: {stage_sizes:?}");
        }
        LpWitness::Feasible { .. } => println!("LP unexpectedly feasible"),
    }
    Ok(())
}
