//! The two lower bounds on |AB| in arbitrary groups: Kemperman's, under a
//! unique-product hypothesis, and Olson's, through a subgroup witness.
//!
//!     cargo run --release --example kemperman_olson

use group_matching::group::{catalog, make_cyclic};
use group_matching::lab::{check_olson, sweep_kemperman, sweep_olson, LabConfig};
use group_matching::GroupSubset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = LabConfig::default();
    println!("Kemperman, exhaustive:");
    for entry in catalog().iter().filter(|e| e.group.order() <= 6) {
        let r = sweep_kemperman(&entry.group, &cfg)?;
        println!(
            "  {:<8} {:>5} pairs, {:>5} with a unique product, {:?}",
            entry.name,
            r.instances_tested,
            r.counter("hypothesis_met"),
            r.status
        );
    }

    println!("\nOlson:");
    for entry in catalog().iter().filter(|e| e.group.order() <= 12) {
        let r = sweep_olson(&entry.group, &cfg)?;
        println!(
            "  {:<8} {:>5} pairs, {:>5} need H != 1, {:?}",
            entry.name,
            r.instances_tested,
            r.counter("nontrivial_h"),
            r.status
        );
    }

    let c4 = make_cyclic(4)?;
    let a = GroupSubset::new(&c4, [1, 3])?;
    let r = check_olson(&c4, &a, &a)?;
    print!(
        "\nA=B={a} in C4 needs a nontrivial subgroup:\n{}",
        r.render_text()
    );
    Ok(())
}
