//! Lattice points of tableaux as Gelfand-Tsetlin patterns, their additivity
//! over block products, and generation of the initial algebra.

use bslab::lattice::{degree_one_generation, gt_pattern_of_contra, point_of_tableau, point_of_tableau_sized, sum_points};
use bslab::tableau::{block_product, Row, Tableau};
use bslab::word::{Interval, Shape};

fn row(lo: usize, entries: &[usize]) -> bslab::Result<Row> {
    Row::new(Interval::new(lo, lo + entries.len() - 1)?, entries.to_vec())
}

fn main() -> bslab::Result<()> {
    let t1 = Tableau::new(4, vec![row(2, &[1])?])?;
    let t2 = Tableau::new(4, vec![row(3, &[2])?, row(2, &[1, 3])?, row(2, &[2, 3])?])?;
    let t3 = Tableau::new(
        4,
        vec![row(4, &[1])?, row(4, &[1])?, row(4, &[2])?, row(3, &[1, 2])?, row(2, &[1, 3, 4])?],
    )?;
    let points = vec![point_of_tableau_sized(&t1, 2)?, point_of_tableau_sized(&t2, 3)?, point_of_tableau(&t3)];
    for p in &points {
        println!("{}", p.pattern());
    }
    println!("contra route:\n{}", gt_pattern_of_contra(&t3)?);

    let sum = sum_points(&points, 4)?;
    println!("sum:\n{}", sum.pattern());
    let shape = Shape::canonical(4, vec![1, 2, 1, 1, 1, 3])?;
    let product = block_product(&[t1, t2, t3], &shape)?;
    println!("point of the product equals the sum: {}", point_of_tableau(&product) == sum);

    let unit = Shape::canonical(3, vec![1, 1, 1])?;
    for step in degree_one_generation(&unit, 3) {
        println!(
            "degree {}: {} exponents, {} sums of degree-one exponents, generated: {}",
            step.degree, step.exponents, step.sums, step.generated
        );
    }
    Ok(())
}
