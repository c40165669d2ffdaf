//! Recover the defining basis of a shifted matroid handed over as a shuffled,
//! relabelled list of bases.
//!
//! cargo run --example recognize

use shiftmat::recognition::{canonicalize, is_shifted, vicinal_preorder, ExplicitMatroid};
use shiftmat::shifted::{enumerate_bases, DefiningBasis};
use shiftmat::threshold::classify;

fn main() -> shiftmat::Result<()> {
    // the bases of <2 4 6>, written out under other names in a scrambled order
    let names = ["zeta", "beta", "alpha", "epsilon", "gamma", "delta"];
    let hidden = DefiningBasis::from_letters(6, &[2, 4, 6])?;
    let mut lines: Vec<String> = enumerate_bases(&hidden, 1 << 10)?
        .iter()
        .map(|b| {
            let tokens: Vec<&str> = b.letters().iter().map(|&x| names[x as usize - 1]).collect();
            tokens.join(" ")
        })
        .collect();
    lines.sort();
    let text = lines.join("\n");
    println!("{text}\n");

    let m = ExplicitMatroid::parse(&text, None)?;
    println!("{} elements, rank {}, {} bases", m.n(), m.rank(), m.num_bases());
    println!("vicinal preorder total: {}", vicinal_preorder(&m).is_total());
    println!("{:?}", is_shifted(&m));

    let c = canonicalize(&m)?;
    print!("{c}");
    println!("{}", classify(&c.basis));

    // two parallel classes: not shifted
    let p = ExplicitMatroid::parse("a c\na d\nb c\nb d\n", None)?;
    println!("{:?}", is_shifted(&p));
    Ok(())
}
