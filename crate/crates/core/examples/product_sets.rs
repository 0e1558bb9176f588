//! Product sets, unique products, and the candidate and stable sets that
//! drive matching.
//!
//!     cargo run --example product_sets

use group_matching::group::{make_cyclic, make_symmetric};
use group_matching::{
    candidate_set, product_set, stable_set, unique_products, GroupSubset, LatticeGroup,
    LatticePoint,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c7 = make_cyclic(7)?;
    let a = GroupSubset::new(&c7, [0, 1, 2])?;
    let b = GroupSubset::new(&c7, [0, 3])?;
    println!("in C7: A={a} B={b} AB={}", product_set(&a, &b)?);
    for w in unique_products(&a, &b)? {
        let (x, y) = &w.factorizations[0];
        println!("  {} = {x}+{y} is a unique product", w.value);
    }

    // S3 is non-abelian: AB and BA differ
    let s3 = make_symmetric(3)?;
    let a = GroupSubset::new(&s3, [1, 2])?;
    let b = GroupSubset::new(&s3, [3])?;
    println!(
        "\nin S3: AB={} BA={}",
        product_set(&a, &b)?,
        product_set(&b, &a)?
    );

    // candidate sets E_a = {b in B : ab not in A}
    let c6 = make_cyclic(6)?;
    let a = GroupSubset::new(&c6, [0, 2, 4])?;
    let b = GroupSubset::new(&c6, [1, 2, 4])?;
    println!("\nin C6 with A={a} B={b}:");
    for x in a.iter() {
        println!("  E_{x} = {}", candidate_set(&a, &b, x)?);
    }
    let s = GroupSubset::new(&c6, [0, 2, 4])?;
    println!("  stable set V_S for S={s}: {}", stable_set(&a, &b, &s)?);

    // Minkowski sum in Z^2
    let z2 = LatticeGroup::new(2)?;
    let p = |x, y| LatticePoint(vec![x, y]);
    let a = GroupSubset::new(&z2, [p(0, 0), p(1, 0), p(0, 1)])?;
    println!("\nin Z^2: A+A = {}", product_set(&a, &a)?);
    Ok(())
}
