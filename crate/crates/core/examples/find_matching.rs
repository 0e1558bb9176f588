//! The matching engine: a matching when one exists, a Hall violator
//! otherwise, both checked independently.
//!
//!     cargo run --example find_matching

use group_matching::group::{make_cyclic, make_quaternion};
use group_matching::io::parse_finite_subset;
use group_matching::{
    brute_force_matching, build_graph, find_matching, verify_matching, GroupSubset, MatchOutcome,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = make_cyclic(5)?;
    let a = parse_finite_subset(&c5, "{1,2,3,4}")?;
    let graph = build_graph(&a, &a)?;
    println!("C5, A=B={a}: {} edges", graph.edge_count());
    for (i, x) in a.iter().enumerate() {
        println!("  E_{x} = {}", graph.row(i));
    }
    if let MatchOutcome::Matched(m) = find_matching(&a, &a)? {
        for (x, y) in m.pairs() {
            println!("  {x} -> {y}");
        }
        println!("  verified: {}", verify_matching(&a, &a, &m).is_ok());
    }

    let c4 = make_cyclic(4)?;
    let a = GroupSubset::new(&c4, [0, 2])?;
    let b = GroupSubset::new(&c4, [1, 2])?;
    match find_matching(&a, &b)? {
        MatchOutcome::Violator(v) => {
            println!(
                "\nC4, A={a} B={b}: no matching, S={} has N(S)={} (deficiency {})",
                v.subset, v.neighborhood, v.deficiency
            );
            println!("  violator sound: {}", v.is_sound(&a, &b));
            println!(
                "  brute force agrees: {}",
                brute_force_matching(&a, &b)?.is_none()
            );
        }
        MatchOutcome::Matched(_) => println!("unexpected matching"),
    }

    let q8 = make_quaternion()?;
    let a = GroupSubset::new(&q8, [0, 2, 4, 6])?;
    let b = GroupSubset::new(&q8, [1, 3, 5, 7])?;
    let outcome = find_matching(&a, &b)?;
    println!("\nQ8, A={a} B={b}: matched = {}", outcome.is_matched());

    let err = find_matching(&a, &GroupSubset::new(&q8, [0, 1, 2, 3])?).unwrap_err();
    println!("B containing the identity: {err}");
    Ok(())
}
