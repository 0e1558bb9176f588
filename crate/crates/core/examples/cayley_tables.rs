//! Build groups from families and from raw Cayley tables, enumerate
//! subgroups, and round-trip the table-file format.
//!
//!     cargo run --example cayley_tables

use group_matching::group::{catalog, make_dihedral};
use group_matching::io::{format_table, parse_table};
use group_matching::{Error, Group, GroupTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Klein four-group with named elements
    let rows = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    let names = ["e", "a", "b", "c"].map(String::from).to_vec();
    let v4 = GroupTable::from_cayley_table(rows, Some(names))?.with_label("V4");
    println!(
        "{}: order {}, abelian {}",
        v4.label(),
        v4.order(),
        v4.is_abelian()
    );
    for x in 0..v4.order() {
        println!(
            "  {} has order {}",
            v4.display_elem(&x),
            v4.element_order(x)
        );
    }

    // a Latin square whose row 0 is not the identity row is rejected
    let bad = GroupTable::from_cayley_table(vec![vec![1, 0], vec![0, 1]], None);
    match bad {
        Err(Error::NotAGroup { reason, witness }) => {
            println!("rejected: {reason} at {witness:?}")
        }
        other => println!("unexpected: {other:?}"),
    }

    let d4 = make_dihedral(4)?;
    let subgroups = d4.enumerate_subgroups()?;
    println!("\n{} has {} subgroups:", d4.label(), subgroups.len());
    for h in &subgroups {
        println!("  |H|={} {h}", h.len());
    }

    let text = format_table(&d4);
    let back = parse_table(&text)?;
    println!(
        "\ntable file round-trip identical: {}",
        back.rows() == d4.rows()
    );
    println!("{}", text.lines().take(5).collect::<Vec<_>>().join("\n"));

    println!("\ncatalog:");
    for entry in catalog() {
        let c = entry.group.classify();
        println!(
            "  {:<10} order {:>2}  matching property predicted: {}",
            entry.name,
            entry.group.order(),
            c.predicted_matching_property
        );
    }
    Ok(())
}
