//! Straight tableaux, contra-tableaux, block products and the lift of a
//! flag-variety section.

use bslab::tableau::{
    block_factor, block_product, enumerate_row_standard, enumerate_straight, is_contra, lift_flag_section, Row,
    Tableau,
};
use bslab::word::{Interval, Shape};

fn row(lo: usize, entries: &[usize]) -> bslab::Result<Row> {
    Row::new(Interval::new(lo, lo + entries.len() - 1)?, entries.to_vec())
}

fn main() -> bslab::Result<()> {
    let shape = Shape::canonical(3, vec![1, 1, 1])?;
    let all = enumerate_row_standard(&shape);
    let straight = enumerate_straight(&shape);
    println!("{} row-standard, {} straight tableaux on\n{shape}", all.len(), straight.len());
    for t in all.iter().filter(|t| !t.is_straight()) {
        println!("not straight:\n{t}");
    }

    let shape = Shape::canonical(4, vec![1, 2, 1, 1, 1, 3])?;
    let t1 = Tableau::new(4, vec![row(2, &[1])?])?;
    let t2 = Tableau::new(4, vec![row(3, &[2])?, row(2, &[1, 3])?, row(2, &[2, 3])?])?;
    let t3 = Tableau::new(
        4,
        vec![row(4, &[1])?, row(4, &[1])?, row(4, &[2])?, row(3, &[1, 2])?, row(2, &[1, 3, 4])?],
    )?;
    println!("top part is contra: {}", is_contra(&t3)?);
    let product = block_product(&[t1, t2, t3.clone()], &shape)?;
    println!("product (straight: {}):\n{product}", product.is_straight());
    println!("factors back into {} parts", block_factor(&product, &shape)?.len());

    let lifted = lift_flag_section(&t3, &shape)?;
    println!("lift (straight: {}):\n{lifted}", lifted.is_straight());
    Ok(())
}
