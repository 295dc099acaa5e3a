//! Lattice points of leading exponents, Gelfand-Tsetlin patterns, and
//! degree-wise checks of the initial algebra.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{leading_exponent, AlphaMatrix};
use crate::tableau::{enumerate_straight, is_contra, Tableau};
use crate::word::Shape;

/// The point `p = (p^(1), ..., p^(size))` with `p^(k)_j = sum_{i >= k} alpha_ij`.
/// Each row is stored as `(p_size, ..., p_1)`; entries `p^(k)_j` with `j < k`
/// are structurally zero.
///
/// Equality and hashing use the rows `p^(2), ..., p^(size)` only; the first
/// row is determined by the shape.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticePoint {
    size: usize,
    rows: Vec<Vec<u32>>,
}

impl PartialEq for LatticePoint {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.rows[1..] == other.rows[1..]
    }
}

impl Eq for LatticePoint {}

impl Hash for LatticePoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.rows[1..].hash(state);
    }
}

impl LatticePoint {
    pub fn zero(size: usize) -> Self {
        LatticePoint {
            size,
            rows: vec![vec![0; size]; size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `p^(k)`, as `(p_size, ..., p_1)`.
    pub fn row(&self, k: usize) -> &[u32] {
        &self.rows[k - 1]
    }

    /// `p^(k)_j`.
    pub fn get(&self, k: usize, j: usize) -> u32 {
        self.rows[k - 1][self.size - j]
    }

    /// The `n(n-1)/2` coordinates of `p^(2), ..., p^(n)` that can be nonzero.
    pub fn coordinates(&self) -> Vec<u32> {
        (2..=self.size)
            .flat_map(|k| self.rows[k - 1][..=self.size - k].to_vec())
            .collect()
    }

    /// Left-pads every row with zeros; rows beyond the old size are zero.
    pub fn embed(&self, size: usize) -> Result<LatticePoint> {
        if size < self.size {
            return Err(Error::Embedding {
                from: self.size,
                to: size,
            });
        }
        let pad = size - self.size;
        let mut out = LatticePoint::zero(size);
        for (k, row) in self.rows.iter().enumerate() {
            out.rows[k][pad..].copy_from_slice(row);
        }
        Ok(out)
    }

    pub fn add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        if self.size != other.size {
            return Err(Error::Embedding {
                from: other.size,
                to: self.size,
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(LatticePoint { size: self.size, rows })
    }

    pub fn pattern(&self) -> GtPattern {
        GtPattern {
            rows: (1..=self.size)
                .map(|k| self.rows[k - 1][..=self.size - k].to_vec())
                .collect(),
        }
    }
}

/// Runs the recursion `p^(r-1) = p^(r) + (alpha_{r-1,size}, ..., alpha_{r-1,r-1}, 0, ...)`
/// from `p^(size) = (alpha_{size,size}, 0, ..., 0)`.
pub fn point_of_alpha(alpha: &AlphaMatrix, size: usize) -> Result<LatticePoint> {
    if (1..=alpha.n()).any(|j| j > size && alpha.column_sum(j) > 0) {
        return Err(Error::Embedding {
            from: alpha.n(),
            to: size,
        });
    }
    let mut point = LatticePoint::zero(size);
    let mut acc = vec![0u32; size];
    for k in (1..=size).rev() {
        for j in k..=size {
            acc[size - j] += alpha.get(k, j);
        }
        point.rows[k - 1] = acc.clone();
    }
    Ok(point)
}

pub fn point_of_tableau(t: &Tableau) -> LatticePoint {
    point_of_alpha(&leading_exponent(t), t.n()).expect("a tableau fits its own rank")
}

/// The point of a tableau that only uses columns `1..=size`, as a point of
/// that size (how block `j` parts are read, with `size = j + 1`).
pub fn point_of_tableau_sized(t: &Tableau, size: usize) -> Result<LatticePoint> {
    if t.max_column() > size {
        return Err(Error::Embedding {
            from: t.max_column(),
            to: size,
        });
    }
    point_of_alpha(&leading_exponent(t), size)
}

/// Embeds every part into size `n` and adds them up.
pub fn sum_points(parts: &[LatticePoint], n: usize) -> Result<LatticePoint> {
    parts
        .iter()
        .try_fold(LatticePoint::zero(n), |acc, p| acc.add(&p.embed(n)?))
}

/// Triangular array whose row `k` has `size - k + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GtPattern {
    pub rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `a_i >= b_i >= a_{i+1}` between each row `a` and the row `b` below it.
    pub fn is_interlacing(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            b.len() + 1 == a.len() && b.iter().enumerate().all(|(i, &x)| a[i] >= x && x >= a[i + 1])
        })
    }

    /// Rows as `(5,2,1,0)/(3,1,0)/(1,1)/(1)`.
    pub fn compact(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("({})", items.join(","))
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Triangular layout, each row shifted by half a slot:
    ///
    /// ```text
    /// 5 2 1 0
    ///  3 1 0
    ///   1 1
    ///    1
    /// ```
    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            out.push_str(&" ".repeat(k * width));
            out.push_str(&cells.join(&" ".repeat(width)));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Gelfand-Tsetlin pattern of a contra-tableau by the classical route:
/// rotate by 180 degrees, complement entries `i -> size + 1 - i`, transpose
/// to a semistandard tableau, then read row `k` of the pattern as the shape
/// of the entries `<= size - k + 1`.
pub fn gt_pattern_of_contra(t: &Tableau) -> Result<GtPattern> {
    let contra = is_contra(t).map_err(|e| Error::InvalidInput(e.to_string()))?;
    if !contra {
        return Err(Error::InvalidInput("not a contra-tableau".into()));
    }
    let size = t.n();
    // rotated rows are left-justified because every row ends in the same column
    let rotated: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .rev()
        .map(|r| r.entries().iter().rev().map(|&e| size + 1 - e).collect())
        .collect();
    let width = rotated.iter().map(Vec::len).max().unwrap_or(0);
    let semistandard: Vec<Vec<usize>> = (0..width)
        .map(|b| rotated.iter().filter_map(|r| r.get(b).copied()).collect())
        .collect();
    let rows = (1..=size)
        .map(|k| {
            let bound = size - k + 1;
            (0..bound)
                .map(|b| {
                    semistandard
                        .get(b)
                        .map_or(0, |r| r.iter().filter(|&&e| e <= bound).count() as u32)
                })
                .collect()
        })
        .collect();
    Ok(GtPattern { rows })
}

/// Leading exponents of the straight tableaux of shape `d m`.
pub fn initial_exponents(shape: &Shape, d: u32) -> BTreeSet<AlphaMatrix> {
    enumerate_straight(&shape.scaled(d))
        .iter()
        .map(leading_exponent)
        .collect()
}

/// Whether the degree-`d` leading exponents are exactly the `d`-fold sums of
/// degree-one ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenerationStep {
    pub degree: u32,
    pub exponents: usize,
    pub sums: usize,
    pub generated: bool,
}

pub fn degree_one_generation(shape: &Shape, dmax: u32) -> Vec<GenerationStep> {
    let one = initial_exponents(shape, 1);
    let mut sums: BTreeSet<AlphaMatrix> = [AlphaMatrix::zero(shape.n())].into();
    (1..=dmax)
        .map(|d| {
            sums = sums.iter().flat_map(|a| one.iter().map(move |b| a.add(b))).collect();
            let target = initial_exponents(shape, d);
            GenerationStep {
                degree: d,
                exponents: target.len(),
                sums: sums.len(),
                generated: sums == target,
            }
        })
        .collect()
}
