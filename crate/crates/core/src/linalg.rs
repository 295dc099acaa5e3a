//! Exact linear algebra over the integers and rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Builds a sparse row from unsorted entries, summing repeats and dropping zeros.
pub fn sparse_row(entries: impl IntoIterator<Item = (usize, BigInt)>) -> SparseRow {
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (c, v) in entries {
        *acc.entry(c).or_default() += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Row echelon form built incrementally by fraction-free elimination: a new
/// row `r` with the same leading column as pivot `p` becomes
/// `p_lead * r - r_lead * p`, then is divided by the gcd of its entries.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates leading entries against the pivots until the leading column
    /// is free; an empty result means the row lies in the span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = self.pivots.get(lead) else {
                break;
            };
            row = eliminate(&row, pivot);
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots.insert(lead, normalize(row));
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let (fa, fb) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            i += 1;
            (row[i - 1].0, &fa * &row[i - 1].1)
        } else if take_piv {
            j += 1;
            (pivot[j - 1].0, -(&fb * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, &fa * &row[i - 1].1 - &fb * &pivot[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    normalize(out)
}

fn normalize(mut row: SparseRow) -> SparseRow {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            return row;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut ech = SparseEchelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// The Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Rank of a dense matrix over `Z/p`, `p` prime. An integer matrix has at
/// least this rank over the rationals.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col] % p, p - 2, p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| mul_mod(x % p, inv, p)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col] % p;
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x % p + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Serializes as the list of coefficients, e.g. `["1", "4", "11/2", "5/2"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], denominator: i64) -> Self {
        let d = BigInt::from(denominator);
        RationalPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::new(BigInt::from(c), d.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Lagrange interpolation through `(x_k, y_k)` with distinct `x_k`.
    pub fn interpolate(points: &[(i64, BigInt)]) -> Self {
        let m = points.len();
        let mut total = vec![BigRational::zero(); m];
        for (k, (xk, yk)) in points.iter().enumerate() {
            // basis numerator prod_{i != k} (x - x_i), lowest degree first
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (i, (xi, _)) in points.iter().enumerate() {
                if i == k {
                    continue;
                }
                let xi = BigRational::from_integer(BigInt::from(*xi));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * &xi;
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(*xk)) - xi;
            }
            let scale = BigRational::from_integer(yk.clone()) / denom;
            for (d, c) in basis.into_iter().enumerate() {
                total[d] += c * &scale;
            }
        }
        RationalPoly::new(total)
    }
}

impl From<RationalPoly> for Vec<String> {
    fn from(p: RationalPoly) -> Self {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for RationalPoly {
    type Error = String;

    fn try_from(v: Vec<String>) -> std::result::Result<Self, String> {
        v.iter()
            .map(|s| s.parse::<BigRational>().map_err(|e| format!("{s:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RationalPoly::new)
    }
}

impl RationalPoly {
    /// Integer numerator over the least common denominator, e.g.
    /// `(5*d^3 + 11*d^2 + 8*d + 2)/2`.
    pub fn to_fraction_string(&self) -> String {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = RationalPoly::new(
            self.coeffs
                .iter()
                .map(|c| c * BigRational::from_integer(denom.clone()))
                .collect(),
        );
        if denom.is_one() {
            scaled.to_string()
        } else if scaled.coeffs.iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({scaled})/{denom}")
        } else {
            format!("{scaled}/{denom}")
        }
    }
}

impl fmt::Display for RationalPoly {
    /// Degree-descending, variable `d`, e.g. `5/2*d^3 + 11/2*d^2 + 4*d + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let body = match deg {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{deg}"),
            };
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(usize, i64)]) -> SparseRow {
        sparse_row(v.iter().map(|&(c, x)| (c, BigInt::from(x))))
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(
            rank(vec![
                row(&[(0, 2), (1, 3)]),
                row(&[(0, 4), (2, 5)]),
                row(&[(1, 6), (2, -5)]),
            ]),
            2
        );
        assert_eq!(rank(Vec::<SparseRow>::new()), 0);
        assert_eq!(rank(vec![row(&[(3, 0)])]), 0);
    }

    #[test]
    fn modular_rank() {
        let m = vec![vec![2, 3, 0], vec![4, 0, 5], vec![0, 6, PRIME - 5]];
        assert_eq!(rank_mod_p(m, PRIME), 2);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![3, 4]], PRIME), 2);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![3, 4]], 2), 1);
        assert_eq!(rank_mod_p(Vec::new(), PRIME), 0);
    }

    #[test]
    fn span_membership() {
        let mut ech = SparseEchelon::new();
        ech.insert(row(&[(0, 3), (2, 1)]));
        ech.insert(row(&[(1, 2), (2, 7)]));
        assert!(ech.contains(row(&[(0, 6), (1, -4), (2, -12)])));
        assert!(!ech.contains(row(&[(2, 1)])));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let target = RationalPoly::from_integers(&[2, 8, 11, 5], 2);
        let points: Vec<(i64, BigInt)> = (0..4)
            .map(|d| (d, target.eval_int(d).to_integer()))
            .collect();
        let fit = RationalPoly::interpolate(&points);
        assert_eq!(fit, target);
        assert_eq!(fit.to_string(), "5/2*d^3 + 11/2*d^2 + 4*d + 1");
        assert_eq!(fit.eval_int(5), BigRational::from_integer(BigInt::from(471)));
        assert_eq!(fit.to_fraction_string(), "(5*d^3 + 11*d^2 + 8*d + 2)/2");
    }

    #[test]
    fn json_round_trip() {
        let p = RationalPoly::from_integers(&[2, 8, 11, 5], 2);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"["1","4","11/2","5/2"]"#);
        assert_eq!(serde_json::from_str::<RationalPoly>(&text).unwrap(), p);
        assert!(serde_json::from_str::<RationalPoly>(r#"["x"]"#).is_err());
    }

    #[test]
    fn interpolation_drops_excess_degree() {
        let points: Vec<(i64, BigInt)> = (0..5).map(|d| (d, BigInt::from(d + 1))).collect();
        let fit = RationalPoly::interpolate(&points);
        assert_eq!(fit.degree(), Some(1));
        assert_eq!(fit.to_string(), "d + 1");
    }
}
