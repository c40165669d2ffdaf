//! Count threshold shifted matroids on [n] and watch their share shrink.
//!
//! cargo run --release --example census

use shiftmat::census::{census, ratio_series, strictly_decreasing_from, threshold_count_formula};

fn main() -> shiftmat::Result<()> {
    for n in [8, 10, 12, 16] {
        let r = census(n, 24)?;
        println!(
            "n={n}: {} threshold of {} non-empty, formula says {}",
            r.threshold_count,
            r.non_empty_classes,
            threshold_count_formula(n)
        );
        for (case, count) in &r.threshold_by_enumeration_case {
            println!("    {case:?}: {count}");
        }
        let shown: Vec<String> = r
            .non_threshold
            .iter()
            .take(4)
            .map(ToString::to_string)
            .collect();
        println!("  first non-threshold: {shown:?}");
    }

    let rows = ratio_series(40);
    for r in rows.iter().filter(|r| r.n % 5 == 0 || r.n == 14) {
        println!(
            "n={:>2}  {}/{}  = {}",
            r.n,
            r.numerator,
            r.denominator,
            r.percent(4)
        );
    }
    println!(
        "decreasing from n=8: {}",
        strictly_decreasing_from(&rows, 8)
    );
    Ok(())
}
