//! The brute-force LP oracle next to the block classification.
//!
//! cargo run --release --example lp_oracle

use shiftmat::oracles::{lp_threshold_oracle, LpWitness, SmallMatroid};
use shiftmat::shifted::DefiningBasis;
use shiftmat::threshold::{classify, Verdict};

fn main() -> shiftmat::Result<()> {
    let mut agree = 0;
    let mut total = 0;
    for mask in 1u64..1 << 7 {
        let m = DefiningBasis::new(shiftmat::SubsetWord::from_mask(7, mask));
        let small = SmallMatroid::from_shifted(&m, 1 << 16)?;
        let lp = lp_threshold_oracle(&small, 1 << 16)?;
        total += 1;
        if lp.is_feasible() == (classify(&m).verdict == Verdict::Threshold) {
            agree += 1;
        }
    }
    println!("n=7: LP and classification agree on {agree} of {total}");

    let m = DefiningBasis::from_letters(6, &[2, 4, 6])?;
    let small = SmallMatroid::from_shifted(&m, 1 << 16)?;
    if let LpWitness::Feasible {
        weights,
        stage_sizes,
    } = lp_threshold_oracle(&small, 1 << 16)?
    {
        let w: Vec<String> = weights.iter().map(ToString::to_string).collect();
        println!("{m}: weights {}", w.join(" "));
        println!("constraints per stage: {stage_sizes:?}");
    }
    Ok(())
}
