//! A group has the matching property exactly when it is trivial, of prime
//! order, or torsion-free. Sweep pairs and build the subgroup counterexample.
//!
//!     cargo run --release --example matching_property

use group_matching::group::catalog;
use group_matching::lab::{check_matching_property, construct_counterexample, LabConfig};
use group_matching::{Error, Group};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = LabConfig::default();
    println!(
        "{:<10} {:>9} {:>8}  predicted  observed",
        "group", "pairs", "failing"
    );
    for entry in catalog() {
        let g = &entry.group;
        if g.order() > 12 {
            continue;
        }
        let r = check_matching_property(g, &cfg)?;
        println!(
            "{:<10} {:>9} {:>8}  {:<9}  {:?}",
            entry.name,
            r.instances_tested,
            r.counter("failing_pairs"),
            g.classify().predicted_matching_property,
            r.status,
        );
    }

    println!();
    for entry in catalog() {
        match construct_counterexample(&entry.group) {
            Ok(pair) => println!(
                "{:<10} A=<{}>={} B={}  confirmed: {}",
                entry.name,
                pair.generator,
                pair.a,
                pair.b,
                pair.is_confirmed()
            ),
            Err(Error::NotApplicable(_)) => println!("{:<10} not applicable", entry.name),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}
