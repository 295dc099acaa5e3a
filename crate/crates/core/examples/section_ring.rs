//! Section-space dimensions, exact basis verification, straightening and
//! the Hilbert polynomial.

use bslab::section::{dim_sections, hilbert_table, straighten, verify_basis};
use bslab::tableau::{enumerate_row_standard, Tableau};
use bslab::word::Shape;

fn main() -> bslab::Result<()> {
    let shape = Shape::canonical(3, vec![1, 1, 1])?;
    println!("dim M(1,1,1) = {}", dim_sections(&shape));

    let report = verify_basis(&shape, Some(2024));
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));

    let bad: Vec<Tableau> = enumerate_row_standard(&shape).into_iter().filter(|t| !t.is_straight()).collect();
    for t in &bad {
        let s = straighten(t, &shape)?;
        println!("\n{t}verified: {}", s.verified);
        for (u, c) in &s.terms {
            println!("{c} *\n{u}");
        }
    }

    let table = hilbert_table(&shape, 5)?;
    println!("dimensions {:?}", table.entries);
    if let Some(hp) = &table.interpolated {
        println!("HP(d) = {}", hp.to_fraction_string());
    }
    Ok(())
}
