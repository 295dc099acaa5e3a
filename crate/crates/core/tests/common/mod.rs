//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use bslab::tableau::{Row, Tableau};
use bslab::word::{Interval, Shape};

pub fn row(lo: usize, entries: &[usize]) -> Row {
    Row::new(Interval::new(lo, lo + entries.len() - 1).unwrap(), entries.to_vec()).unwrap()
}

/// The three block parts of the rank-4 worked example.
pub fn worked_parts() -> Vec<Tableau> {
    vec![
        Tableau::new(4, vec![row(2, &[1])]).unwrap(),
        Tableau::new(4, vec![row(3, &[2]), row(2, &[1, 3]), row(2, &[2, 3])]).unwrap(),
        Tableau::new(
            4,
            vec![row(4, &[1]), row(4, &[1]), row(4, &[2]), row(3, &[1, 2]), row(2, &[1, 3, 4])],
        )
        .unwrap(),
    ]
}

pub fn worked_shape() -> Shape {
    Shape::canonical(4, vec![1, 2, 1, 1, 1, 3]).unwrap()
}

/// `(5d^3 + 11d^2 + 8d + 2) / 2`.
pub fn threefold_hp(d: u64) -> u64 {
    (5 * d.pow(3) + 11 * d.pow(2) + 8 * d + 2) / 2
}

/// All vectors of length `len` with entries in `0..=max`.
pub fn all_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    permutations(k - 1)
        .into_iter()
        .flat_map(|p| {
            (0..k).map(move |pos| {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                q
            })
        })
        .collect()
}

pub fn inversions(v: &[usize]) -> usize {
    (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
}

/// Leibniz formula.
pub fn det_leibniz(m: &[Vec<i64>]) -> i64 {
    permutations(m.len())
        .iter()
        .map(|p| {
            let sign = if inversions(p).is_multiple_of(2) { 1 } else { -1 };
            sign * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i64>()
        })
        .sum()
}

/// Cells as a dense grid, `None` for empty.
fn grid(t: &Tableau) -> Vec<Vec<Option<usize>>> {
    t.rows()
        .iter()
        .map(|r| (0..=t.n()).map(|c| r.entry(c)).collect())
        .collect()
}

/// Straightness read directly off the grid.
pub fn straight_by_grid(t: &Tableau) -> bool {
    let g = grid(t);
    for k in 1..=t.n() {
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if let (Some(a), Some(b)) = (g[i][k], g[j][k]) {
                    if a > b && !matches!(g[i][k - 1], Some(left) if left >= b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Columns weakly increasing downward.
pub fn contra_by_grid(t: &Tableau) -> bool {
    let g = grid(t);
    (1..=t.n()).all(|k| {
        let col: Vec<usize> = g.iter().filter_map(|r| r[k]).collect();
        col.windows(2).all(|w| w[0] <= w[1])
    })
}
