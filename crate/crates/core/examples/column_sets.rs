//! Canonical words, their column sets, and the shapes they lay out.

use bslab::word::{column_sets, decompose_multiplicity, is_row_convex, Shape, Word};

fn main() -> bslab::Result<()> {
    for n in 2..=4 {
        let word = Word::longest(n)?;
        let sets = column_sets(&word);
        println!("n = {n}, word {word}, row-convex: {}", is_row_convex(&sets));
        print!("{sets}");
    }

    let shape = Shape::canonical(4, vec![1, 1, 1, 1, 1, 1])?;
    println!("\nshape of m = (1,1,1,1,1,1):\n{shape}");
    for (j, part) in decompose_multiplicity(&shape)?.iter().enumerate() {
        println!("m({}) = {part:?}", j + 1);
    }
    println!("flag weight: {:?}", shape.flag_weight().unwrap_or_default());
    Ok(())
}
