//! Flagged minors, tableau polynomials and their leading exponents, and the
//! Plucker-type coordinates of the three-dimensional example.

use bslab::plucker::plucker_coords_3d;
use bslab::poly::{leading_exponent, minor_poly, tableau_poly, VarContext};
use bslab::tableau::enumerate_straight;
use bslab::word::Shape;

fn main() -> bslab::Result<()> {
    let ctx = VarContext::upper_triangular(3);
    for (rows, cols) in [(vec![1], vec![2]), (vec![2, 3], vec![2, 3]), (vec![1, 2], vec![2, 3])] {
        let p = minor_poly(&rows, &cols, 3)?;
        println!("[{rows:?}:{cols:?}] = {}", ctx.render(&p));
    }

    let shape = Shape::canonical(3, vec![1, 1, 1])?;
    for t in enumerate_straight(&shape).iter().take(3) {
        println!("\n{t}= {}\nleading exponent:\n{}", ctx.render(&tableau_poly(t)), leading_exponent(t));
    }

    let pc = plucker_coords_3d();
    for (name, p) in pc.named() {
        println!("{name} = {}", pc.ctx.render(p));
    }
    for rel in pc.relations() {
        println!("relation expands to {}", pc.ctx.render(&rel));
    }
    Ok(())
}
