//! Torsion-free groups have the matching property: random sets in Z^d
//! always match, and small instances are confirmed by brute force.
//!
//!     cargo run --release --example lattice_matching

use group_matching::io::{parse_group_spec, parse_lattice_subset, AnyGroup};
use group_matching::lab::{check_lattice_matching, LabConfig, LatticeParams};
use group_matching::{find_matching, MatchOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let AnyGroup::Lattice(z2) = parse_group_spec("Z^2")? else {
        unreachable!()
    };
    let a = parse_lattice_subset(&z2, "{(0,0),(1,0),(2,0),(0,1)}")?;
    let b = parse_lattice_subset(&z2, "{(1,0),(1,1),(-1,0),(0,2)}")?;
    if let MatchOutcome::Matched(m) = find_matching(&a, &b)? {
        for (x, y) in m.pairs() {
            println!("{x} -> {y}");
        }
    }

    let cfg = LabConfig::with_seed(7);
    for dim in 1..=3 {
        let params = LatticeParams {
            dim,
            ..LatticeParams::default()
        };
        let r = check_lattice_matching(&params, &cfg)?;
        println!(
            "Z^{dim}: {} trials {:?}, {} confirmed by brute force",
            r.instances_tested,
            r.status,
            r.counter("brute_force_confirmed")
        );
    }
    Ok(())
}
