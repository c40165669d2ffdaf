//! Classify a handful of shifted matroids and show the contraction behind each verdict.
//!
//! cargo run --example classify

use shiftmat::shifted::{coloops, count_bases, loops, DefiningBasis};
use shiftmat::threshold::classify;

fn main() -> shiftmat::Result<()> {
    let cases: [(u32, &[u32]); 7] = [
        (6, &[2, 4, 6]),
        (8, &[2, 4, 6, 8]),
        (8, &[2, 5, 6, 8]),
        (8, &[2, 3, 5, 7, 8]),
        (8, &[2, 4, 5, 7]),
        (10, &[1, 2, 4, 6, 8]),
        (9, &[1, 2, 3]),
    ];
    for (n, t) in cases {
        let m = DefiningBasis::from_letters(n, t)?;
        let c = classify(&m);
        println!("{m}");
        println!("  bases: {}", count_bases(&m));
        println!("  coloops: [{}]  loops: [{}]", coloops(&m), loops(&m));
        println!(
            "  contracted: {} ({} blocks)",
            c.contraction.basis, c.blocks
        );
        println!("  verdict: {c}");
    }
    Ok(())
}
