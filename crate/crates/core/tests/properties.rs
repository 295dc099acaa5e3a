mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use proptest::prelude::*;

use bslab::degeneration::{congruence_count, congruence_count_shuffled, Family, TriGradedPresentation};
use bslab::lattice::{gt_pattern_of_contra, point_of_tableau, point_of_tableau_sized};
use bslab::poly::{leading_exponent, minor_poly, tableau_poly, x_index, upper_nvars, VarContext};
use bslab::section::{dim_sections, straighten, verify_basis};
use bslab::tableau::{
    block_factor, block_product, enumerate_row_standard, enumerate_straight, is_contra, lift_flag_section,
    row_standardize, Standardized, Tableau, TableauDoc,
};
use bslab::word::{block_range, column_sets, decompose_multiplicity, is_row_convex, Shape, Word};

use common::*;

#[test]
fn canonical_column_sets_have_closed_form() {
    for n in 2..=8 {
        let word = Word::longest(n).unwrap();
        let sets = column_sets(&word);
        assert!(is_row_convex(&sets));
        assert_eq!(sets.sets[0], vec![2]);
        for j in 1..n {
            let p = j * (j - 1) / 2;
            for t in 1..=j {
                assert_eq!(sets.sets[p + t - 1], (t + 1..=j + 1).collect::<Vec<_>>(), "n={n} j={j} t={t}");
            }
        }
        for (k, s) in sets.sets.iter().enumerate() {
            assert_eq!(s.len(), word.letters()[k]);
        }
    }
}

#[test]
fn canonical_word_reverses() {
    for n in 2..=8 {
        let w = Word::longest(n).unwrap();
        assert_eq!(w.len(), n * (n - 1) / 2);
        let expected: Vec<usize> = (1..=n).rev().collect();
        assert_eq!(w.permutation(), expected);
    }
}

#[test]
fn straight_tableaux_are_the_grid_straight_ones() {
    for m in all_vectors(3, 1) {
        let shape = Shape::canonical(3, m).unwrap();
        let filtered: Vec<Tableau> = enumerate_row_standard(&shape).into_iter().filter(straight_by_grid).collect();
        assert_eq!(enumerate_straight(&shape), filtered);
    }
}

#[test]
fn straight_equals_contra_on_block_shapes() {
    for n in 2..=4 {
        for j in 1..n {
            let indices: Vec<usize> = block_range(j).collect();
            for part in all_vectors(indices.len(), 2) {
                let mut m = vec![0; n * (n - 1) / 2];
                for (&k, &x) in indices.iter().zip(&part) {
                    m[k - 1] = x;
                }
                let shape = Shape::canonical(n, m).unwrap();
                let straight: BTreeSet<Tableau> = enumerate_straight(&shape).into_iter().collect();
                let contra: BTreeSet<Tableau> = enumerate_row_standard(&shape)
                    .into_iter()
                    .filter(|t| is_contra(t).unwrap())
                    .collect();
                assert_eq!(straight, contra, "n={n} block {j} part {part:?}");
                assert!(contra.iter().all(contra_by_grid));
            }
        }
    }
}

#[test]
fn straightness_is_hereditary() {
    let shape = Shape::canonical(3, vec![2, 1, 2]).unwrap();
    for t in enumerate_straight(&shape) {
        for skip in 0..t.rows().len() {
            let rows = t.rows().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, r)| r.clone()).collect();
            assert!(Tableau::new(3, rows).unwrap().is_straight());
        }
    }
}

#[test]
fn straight_count_is_monotone() {
    for m in all_vectors(3, 2) {
        let base = dim_sections(&Shape::canonical(3, m.clone()).unwrap());
        for k in 0..3 {
            let mut bigger = m.clone();
            bigger[k] += 1;
            assert!(dim_sections(&Shape::canonical(3, bigger).unwrap()) >= base);
        }
    }
}

#[test]
fn lifts_are_straight() {
    for m in all_vectors(3, 2) {
        let shape = Shape::canonical(3, m).unwrap();
        let top = shape.block_shape(2).unwrap();
        for t in enumerate_straight(&top) {
            assert!(lift_flag_section(&t, &shape).unwrap().is_straight());
        }
    }
    for top in all_vectors(3, 1) {
        let shape = Shape::canonical(4, [vec![1, 1, 1], top].concat()).unwrap();
        for t in enumerate_straight(&shape.block_shape(3).unwrap()) {
            assert!(lift_flag_section(&t, &shape).unwrap().is_straight());
        }
    }
}

#[test]
fn flagged_minors_lead_with_their_diagonal() {
    let n = 6;
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|b| b.count_ones() as usize == k)
            .map(|b| (1..=n).filter(|&i| b >> (i - 1) & 1 == 1).collect())
            .collect()
    };
    let mut checked = 0;
    for k in 1..=4 {
        for cols in subsets(k) {
            for rows in subsets(k) {
                if !rows.iter().zip(&cols).all(|(r, c)| r <= c) {
                    continue;
                }
                let p = minor_poly(&rows, &cols, n).unwrap();
                let mut diag = vec![0u32; upper_nvars(n)];
                for (&r, &c) in rows.iter().zip(&cols) {
                    diag[x_index(n, r, c)] += 1;
                }
                let (lead, coeff) = p.leading().unwrap();
                assert_eq!((lead, coeff), (&diag, &BigInt::from(1)), "[{rows:?}:{cols:?}]");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 406);
}

#[test]
fn leading_exponent_is_the_leading_monomial() {
    for shape in [Shape::canonical(3, vec![1, 1, 1]).unwrap(), Shape::canonical(4, vec![1; 6]).unwrap()] {
        for t in enumerate_straight(&shape) {
            let p = tableau_poly(&t);
            assert_eq!(p.leading().unwrap().0.as_slice(), leading_exponent(&t).as_exponent());
        }
    }
}

#[test]
fn leading_exponents_add_over_block_products() {
    let shape = Shape::canonical(3, vec![2, 1, 2]).unwrap();
    for t in enumerate_row_standard(&shape) {
        let parts = block_factor(&t, &shape).unwrap();
        assert_eq!(block_product(&parts, &shape).unwrap(), t);
        let sum = parts.iter().map(leading_exponent).fold(leading_exponent(&Tableau::empty(3)), |a, b| a.add(&b));
        assert_eq!(sum, leading_exponent(&t));
    }
}

#[test]
fn bases_for_small_shapes() {
    let mut shapes: Vec<Shape> = all_vectors(3, 2).into_iter().map(|m| Shape::canonical(3, m).unwrap()).collect();
    shapes.push(Shape::canonical(4, vec![1; 6]).unwrap());
    for shape in shapes {
        let report = verify_basis(&shape, None);
        assert!(report.is_basis(), "{report:?}");
        assert_eq!(report.distinct_leading, report.straight_count);
    }
}

#[test]
fn straightening_reverifies() {
    for m in [vec![1, 1, 1], vec![2, 1, 1], vec![1, 2, 2]] {
        let shape = Shape::canonical(3, m).unwrap();
        for t in enumerate_row_standard(&shape) {
            let s = straighten(&t, &shape).unwrap();
            assert!(s.verified);
            assert!(s.terms.iter().all(|(u, _)| u.is_straight()));
        }
    }
}

#[test]
fn additivity_of_points() {
    for m in all_vectors(3, 2) {
        let shape = Shape::canonical(3, m).unwrap();
        for t in enumerate_row_standard(&shape) {
            let parts = block_factor(&t, &shape).unwrap();
            let sum = point_of_tableau_sized(&parts[0], 2)
                .unwrap()
                .embed(3)
                .unwrap()
                .add(&point_of_tableau(&parts[1]))
                .unwrap();
            assert_eq!(sum, point_of_tableau(&t));
        }
    }
}

#[test]
fn contra_patterns_interlace() {
    for n in 2..=4 {
        for j in 1..n {
            let indices: Vec<usize> = block_range(j).collect();
            for part in all_vectors(indices.len(), 2) {
                let mut m = vec![0; n * (n - 1) / 2];
                for (&k, &x) in indices.iter().zip(&part) {
                    m[k - 1] = x;
                }
                let shape = Shape::canonical(n, m).unwrap();
                for t in enumerate_straight(&shape) {
                    let local = Tableau::new(j + 1, t.rows().to_vec()).unwrap();
                    let gt = gt_pattern_of_contra(&local).unwrap();
                    assert!(gt.is_interlacing(), "{gt}");
                    assert_eq!(gt, point_of_tableau_sized(&t, j + 1).unwrap().pattern());
                }
            }
        }
    }
}

#[test]
fn json_round_trips() {
    let shape = worked_shape();
    let text = serde_json::to_string(&shape).unwrap();
    assert_eq!(serde_json::from_str::<Shape>(&text).unwrap(), shape);
    let t = block_product(&worked_parts(), &shape).unwrap();
    let doc = t.to_doc(Some(shape.multiplicity()));
    let back = TableauDoc::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back.resolve().unwrap(), (t, Some(shape)));
    let report = verify_basis(&Shape::canonical(3, vec![1, 1, 1]).unwrap(), Some(5));
    let text = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<bslab::section::BasisReport>(&text).unwrap(), report);
}

fn shape_strategy() -> impl Strategy<Value = Shape> {
    (2usize..=4)
        .prop_flat_map(|n| proptest::collection::vec(0u32..=3, n * (n - 1) / 2).prop_map(move |m| (n, m)))
        .prop_map(|(n, m)| Shape::canonical(n, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocks_sum_to_multiplicity(shape in shape_strategy()) {
        let blocks = decompose_multiplicity(&shape).unwrap();
        let total: Vec<u32> = (0..shape.multiplicity().len())
            .map(|k| blocks.iter().map(|b| b[k]).sum())
            .collect();
        prop_assert_eq!(total.as_slice(), shape.multiplicity());
        prop_assert_eq!(shape.row_count() as u32, shape.multiplicity().iter().sum::<u32>());
    }

    #[test]
    fn standardizing_tracks_parity(perm in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle(), n in 5usize..=6) {
        let columns = bslab::word::Interval::new(n - 4, n).unwrap();
        match row_standardize(columns, &perm, n).unwrap() {
            Standardized::Row { sign, row } => {
                prop_assert_eq!(row.entries().to_vec(), vec![1, 2, 3, 4, 5]);
                let expected = if inversions(&perm.iter().map(|x| x - 1).collect::<Vec<_>>()) .is_multiple_of(2) { 1 } else { -1 };
                prop_assert_eq!(sign, expected);
            }
            Standardized::Zero => prop_assert!(false, "distinct flagged entries standardize to a row"),
        }
    }

    #[test]
    fn tableau_values_match_numeric_determinants(
        pick in any::<proptest::sample::Index>(),
        values in proptest::collection::vec(-9i64..=9, 10),
    ) {
        let shape = Shape::canonical(4, vec![1, 1, 0, 1, 1, 0]).unwrap();
        let all = enumerate_row_standard(&shape);
        let t = pick.get(&all);
        let ctx = VarContext::upper_triangular(4);
        let matrix = |i: usize, j: usize| if i <= j { values[x_index(4, i, j)] } else { 0 };
        let point: BTreeMap<String, BigInt> = (1..=4)
            .flat_map(|i| (i..=4).map(move |j| (i, j)))
            .map(|(i, j)| (format!("x_{i}_{j}"), BigInt::from(matrix(i, j))))
            .collect();
        let expected: i64 = t
            .rows()
            .iter()
            .map(|r| {
                let cols = r.columns().to_vec();
                let sub: Vec<Vec<i64>> = r.entries().iter().map(|&i| cols.iter().map(|&j| matrix(i, j)).collect()).collect();
                det_leibniz(&sub)
            })
            .product();
        prop_assert_eq!(ctx.evaluate(&tableau_poly(t), &point).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn straightening_rank_four(pick in any::<proptest::sample::Index>()) {
        let shape = Shape::canonical(4, vec![1, 1, 1, 1, 0, 1]).unwrap();
        let all = enumerate_row_standard(&shape);
        let t = pick.get(&all);
        let s = straighten(t, &shape).unwrap();
        prop_assert!(s.verified);
    }

    #[test]
    fn congruence_count_ignores_order(seed in any::<u64>(), d in 0u32..=3) {
        for family in [Family::One, Family::Two] {
            let p = TriGradedPresentation::at(family, 0);
            prop_assert_eq!(congruence_count_shuffled(&p, d, seed).unwrap(), congruence_count(&p, d).unwrap());
        }
    }

    #[test]
    fn leading_exponents_are_injective(m in proptest::collection::vec(0u32..=2, 3)) {
        let shape = Shape::canonical(3, m).unwrap();
        let straight = enumerate_straight(&shape);
        let distinct: HashSet<_> = straight.iter().map(leading_exponent).collect();
        prop_assert_eq!(distinct.len(), straight.len());
    }
}
