//! Three independent answers to "does a matching exist": the engine, brute
//! force, and Hall's condition in union and intersection form.
//!
//!     cargo run --release --example hall_cross_validation

use group_matching::group::{catalog, make_cyclic};
use group_matching::lab::{cross_validate_hall, sweep_hall, LabConfig};
use group_matching::GroupSubset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = make_cyclic(4)?;
    let a = GroupSubset::new(&c4, [0, 2])?;
    let b = GroupSubset::new(&c4, [1, 2])?;
    println!("C4, A={a} B={b}: {:?}", cross_validate_hall(&a, &b)?);

    let cfg = LabConfig::default();
    for entry in catalog() {
        let r = sweep_hall(&entry.group, &cfg)?;
        println!(
            "{:<10} {:>4} instances  matchable {:>4}  unmatchable {:>4}  {:?}",
            entry.name,
            r.instances_tested,
            r.counter("matchable"),
            r.counter("unmatchable"),
            r.status
        );
    }
    Ok(())
}
