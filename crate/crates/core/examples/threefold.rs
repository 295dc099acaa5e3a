//! The three-dimensional example: fibers of both degenerations, the
//! components of the special fiber, and the full verification report.

use bslab::degeneration::{
    component_counts, congruence_count, d3_points, ehrhart_series_numerator, fiber_table, format_t_poly,
    hull_summary, verify_example3, Family, TriGradedPresentation,
};

fn main() -> bslab::Result<()> {
    let generic = TriGradedPresentation::at(Family::One, 1);
    for rel in &generic.relations {
        println!("{rel} = 0");
    }
    let table = fiber_table(&generic, 4);
    println!("generic fiber: {:?}, numerator {:?}", table.entries, table.numerator);

    for family in [Family::One, Family::Two] {
        let special = TriGradedPresentation::at(family, 0);
        let counts: Vec<u64> = (0..=4).map(|d| congruence_count(&special, d)).collect::<Result<_, _>>()?;
        println!("{family:?} at tau = 0: {counts:?}");
    }

    let comps: Vec<_> = (0..=4).map(component_counts).collect::<Result<_, _>>()?;
    let d3: Vec<u64> = comps.iter().map(|c| c.d3).collect();
    let k2: Vec<u64> = comps.iter().map(|c| c.k2).collect();
    println!("D3 {d3:?}, numerator {}", format_t_poly(&ehrhart_series_numerator(&d3, 4)?));
    println!("K2 {k2:?}, numerator {}", format_t_poly(&ehrhart_series_numerator(&k2, 3)?));

    let cube: Vec<Vec<i64>> = d3_points(1).iter().map(|p| p.iter().map(|&x| x as i64).collect()).collect();
    println!("{:?}", hull_summary(&cube)?);

    let report = verify_example3(4)?;
    println!("{} checks, all pass: {}", report.checks.len(), report.pass);
    Ok(())
}
