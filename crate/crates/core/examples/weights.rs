//! Build separating weights for threshold shifted matroids and check them.
//!
//! cargo run --example weights

use shiftmat::shifted::DefiningBasis;
use shiftmat::threshold::{raw_weights, synthesize_weights, verify_weights, VerifyMode};

fn main() -> shiftmat::Result<()> {
    for (n, t) in [
        (6, vec![2, 3, 4]),
        (6, vec![2, 4, 6]),
        (8, vec![2, 3, 5, 7, 8]),
        (8, vec![2, 4, 5, 7]),
        (9, vec![1, 2, 5, 6]),
    ] {
        let m = DefiningBasis::from_letters(n, &t)?;
        let w = synthesize_weights(&m)?;
        let ok = verify_weights(&m, &w, VerifyMode::Full, 1 << 20)?;
        println!("{m}  construction: {:?}", w.construction);
        if let Ok(raw) = raw_weights(&m) {
            let raw: Vec<String> = raw.iter().map(ToString::to_string).collect();
            println!("  raw:     {}", raw.join(" "));
        }
        let ints: Vec<String> = w.integer_vector().iter().map(ToString::to_string).collect();
        println!("  integer: {}", ints.join(" "));
        println!("  every basis positive, every non-basis non-positive: {ok}");
    }

    // far too many subsets to enumerate; the structural check still applies
    let t: Vec<u32> = (1..=40).chain(71..=120).chain(151..=170).collect();
    let big = DefiningBasis::new(shiftmat::SubsetWord::new(200, t)?);
    let w = synthesize_weights(&big)?;
    let ok = verify_weights(&big, &w, VerifyMode::Structural, 1 << 20)?;
    println!("n=200, k={}: structurally verified: {ok}", big.k());
    Ok(())
}
