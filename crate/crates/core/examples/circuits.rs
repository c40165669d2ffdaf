//! Circuits, paving and binary checks for shifted matroids.
//!
//! cargo run --example circuits

use std::collections::BTreeMap;

use shiftmat::shifted::{circuits, is_binary_structural, is_paving, DefiningBasis};

fn main() -> shiftmat::Result<()> {
    let m = DefiningBasis::from_letters(8, &[2, 4, 6, 8])?;
    let cs = circuits(&m);
    let mut sizes = BTreeMap::new();
    for c in &cs {
        *sizes.entry(c.size()).or_insert(0) += 1;
    }
    println!("{m}: {} circuits, by size {sizes:?}", cs.len());
    for c in cs.iter().take(8) {
        println!("  {c}");
    }

    for (n, t) in [
        (5, vec![3, 4, 5]),
        (6, vec![2, 5, 6]),
        (4, vec![1, 4]),
        (5, vec![1, 2]),
        (6, vec![2, 4, 6]),
    ] {
        let m = DefiningBasis::from_letters(n, &t)?;
        println!(
            "{m}: paving={} binary={:?}",
            is_paving(&m)?,
            is_binary_structural(&m)?
        );
    }
    Ok(())
}
