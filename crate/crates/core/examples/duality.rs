//! Duality and coloop contraction, and how they leave the verdict alone.
//!
//! cargo run --example duality

use shiftmat::shifted::{contract_coloops, count_bases, dual, DefiningBasis};
use shiftmat::threshold::classify;

fn main() -> shiftmat::Result<()> {
    for (n, t) in [
        (8, vec![2, 4, 6, 8]),
        (8, vec![2, 4, 5, 7]),
        (10, vec![1, 2, 4, 6, 8]),
        (9, vec![1, 3, 6, 7]),
    ] {
        let m = DefiningBasis::from_letters(n, &t)?;
        let d = dual(&m);
        let c = contract_coloops(&m);
        println!("{m}: {}", classify(&m));
        println!(
            "  dual {d}: {} ({} bases each)",
            classify(&d),
            count_bases(&m)
        );
        println!(
            "  contracted {} after removing {} coloops: {}",
            c.basis,
            c.removed,
            classify(&c.basis)
        );
    }
    Ok(())
}
