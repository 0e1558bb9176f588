//! The stated corollary bound |X| >= |U|+|V|+1 fails already in C3, while
//! |X| >= |U|+|V| holds everywhere it was checked.
//!
//!     cargo run --release --example corollary_discrepancy

use group_matching::group::{catalog, make_cyclic};
use group_matching::lab::{check_corollary, sweep_corollary, LabConfig};
use group_matching::GroupSubset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c3 = make_cyclic(3)?;
    let u = GroupSubset::new(&c3, [1])?;
    let x = GroupSubset::new(&c3, [1, 2])?;
    print!("{}", check_corollary(&c3, &u, &u, &x)?.render_text());

    println!();
    let cfg = LabConfig::default();
    for entry in catalog().iter().filter(|e| e.group.order() <= 6) {
        let r = sweep_corollary(&entry.group, &cfg)?;
        println!(
            "{:<8} {:>5} instances  stated-bound counterexamples {:>4}  corrected-bound failures {}",
            entry.name,
            r.instances_tested,
            r.counter("stated_bound_counterexamples"),
            r.counter("corrected_bound_failures")
        );
    }
    Ok(())
}
