//! Every identity-free subset admits a matching to itself, and a subset
//! containing the identity never does. Exhaustive over small groups.
//!
//!     cargo run --release --example automatching

use group_matching::group::catalog;
use group_matching::lab::{check_automatching, LabConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = LabConfig::default();
    for entry in catalog() {
        if entry.group.order() > 10 {
            continue;
        }
        let report = check_automatching(&entry.group, &cfg)?;
        println!(
            "{:<10} {:>4} identity-free subsets   {:?}   only-if confirmed on {}",
            entry.name,
            report.instances_tested,
            report.status,
            report.counter("only_if_confirmed")
        );
    }
    Ok(())
}
