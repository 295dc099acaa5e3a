//! Exact integer polynomials in the entries of a generic matrix, flagged
//! minors and tableau polynomials.
//!
//! Monomials are exponent vectors over a fixed [`VarContext`]. The term order
//! is pure lexicographic with variable 0 largest; for the upper-triangular
//! context the variables are ranked row-major,
//! `x_1_1 > x_1_2 > ... > x_1_n > x_2_2 > ... > x_n_n`, which makes the main
//! diagonal the leading term of every flagged minor.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{Row, Tableau};

pub type Exponent = Vec<u32>;

/// A polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Poly::monomial(e, BigInt::one())
    }

    pub fn monomial(exponent: Exponent, coeff: BigInt) -> Self {
        let mut p = Poly::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// The order-maximal term.
    pub fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: BigInt) {
        debug_assert_eq!(exponent.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Value at an assignment of every variable, indexed like the context.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(v.clone(), k as usize);
                }
            }
            total += term;
        }
        total
    }
}

impl Poly {
    /// Value modulo `p` at an assignment of residues.
    pub fn eval_mod(&self, values: &[u64], p: u64) -> u64 {
        let mut total = 0u64;
        for (e, c) in &self.terms {
            let r = c.mod_floor(&BigInt::from(p));
            let mut term = r.to_u64().expect("residue fits in u64");
            for (&v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    term = crate::linalg::mul_mod(term, v, p);
                }
            }
            total = (total + term) % p;
        }
        total
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Named variables in a fixed order; index 0 is the largest in the term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarContext {
    pub fn new(names: Vec<String>) -> Self {
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        VarContext { names, index }
    }

    /// `x_i_j` for `1 <= i <= j <= n`, row-major.
    pub fn upper_triangular(n: usize) -> Self {
        let names = (1..=n)
            .flat_map(|i| (i..=n).map(move |j| format!("x_{i}_{j}")))
            .collect();
        VarContext::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Option<Poly> {
        self.index_of(name).map(|i| Poly::var(self.len(), i))
    }

    /// Exact value of `p` at a named assignment; only variables that occur in
    /// `p` need a value.
    pub fn evaluate(&self, p: &Poly, point: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let mut values = vec![BigInt::zero(); self.len()];
        for (i, name) in self.names.iter().enumerate() {
            let used = p.terms.keys().any(|e| e[i] > 0);
            match point.get(name) {
                Some(v) => values[i] = v.clone(),
                None if used => return Err(Error::Evaluation(name.clone())),
                None => {}
            }
        }
        Ok(p.eval(&values))
    }

    /// Terms from the leading one down, e.g. `x_1_2*x_2_3 - x_1_3*x_2_2`.
    pub fn render(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in p.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{k}", self.names[i])
                    }
                })
                .collect();
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => out.push_str(&magnitude.to_string()),
                (false, true) => out.push_str(&monomial.join("*")),
                (false, false) => out.push_str(&format!("{magnitude}*{}", monomial.join("*"))),
            }
        }
        out
    }

    pub fn to_doc(&self, p: &Poly) -> Vec<TermDoc> {
        p.terms
            .iter()
            .rev()
            .map(|(e, c)| TermDoc {
                exponents: e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (self.names[i].clone(), k))
                    .collect(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_doc(&self, doc: &[TermDoc]) -> Result<Poly> {
        let mut p = Poly::zero(self.len());
        for term in doc {
            let mut e = vec![0; self.len()];
            for (name, &k) in &term.exponents {
                let i = self
                    .index_of(name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown variable {name}")))?;
                e[i] = k;
            }
            let c: BigInt = term
                .coeff
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {:?}", term.coeff)))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// JSON form of one term: variable powers and a decimal coefficient string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exponents: BTreeMap<String, u32>,
    pub coeff: String,
}

/// Index of `x_i_j` (1-based, `i <= j`) in the row-major upper-triangular context.
pub fn x_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= n);
    (i - 1) * (2 * n + 2 - i) / 2 + (j - i)
}

pub fn upper_nvars(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Determinant by Laplace expansion along the first row, skipping zero
/// entries.
pub fn det(matrix: &[Vec<Poly>], nvars: usize) -> Poly {
    let k = matrix.len();
    if k == 0 {
        return Poly::one(nvars);
    }
    let cols: Vec<usize> = (0..k).collect();
    det_rec(matrix, 0, &cols, nvars)
}

fn det_rec(matrix: &[Vec<Poly>], row: usize, cols: &[usize], nvars: usize) -> Poly {
    if cols.len() == 1 {
        return matrix[row][cols[0]].clone();
    }
    let mut total = Poly::zero(nvars);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = det_rec(matrix, row + 1, &rest, nvars);
        if sub.is_zero() {
            continue;
        }
        let term = entry * &sub;
        total = if pos % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// `[R:C]` on the generic upper-triangular `n x n` matrix.
pub fn minor_poly(rows: &[usize], cols: &[usize], n: usize) -> Result<Poly> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidMinor {
            rows: rows.len(),
            columns: cols.len(),
        });
    }
    if let Some(&bad) = rows.iter().chain(cols).find(|&&x| x == 0 || x > n) {
        return Err(Error::InvalidEntry { entry: bad, n });
    }
    let nvars = upper_nvars(n);
    let flagged = {
        let (mut r, mut c) = (rows.to_vec(), cols.to_vec());
        r.sort_unstable();
        c.sort_unstable();
        r.iter().zip(&c).all(|(a, b)| a <= b)
    };
    if !flagged {
        return Ok(Poly::zero(nvars));
    }
    let matrix: Vec<Vec<Poly>> = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&c| {
                    if r <= c {
                        Poly::var(nvars, x_index(n, r, c))
                    } else {
                        Poly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect();
    Ok(det(&matrix, nvars))
}

/// Memoizes row minors while expanding many tableaux of one rank.
#[derive(Debug, Default)]
pub struct MinorCache {
    minors: HashMap<Row, Poly>,
}

impl MinorCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row_poly(&mut self, row: &Row, n: usize) -> Poly {
        self.minors
            .entry(row.clone())
            .or_insert_with(|| {
                minor_poly(row.entries(), &row.columns().to_vec(), n)
                    .expect("rows of a tableau are square and in range")
            })
            .clone()
    }

    pub fn tableau_poly(&mut self, t: &Tableau) -> Poly {
        let n = t.n();
        t.rows()
            .iter()
            .fold(Poly::one(upper_nvars(n)), |acc, row| &acc * &self.row_poly(row, n))
    }
}

/// Product of the row minors of `t`; the empty tableau gives 1.
pub fn tableau_poly(t: &Tableau) -> Poly {
    MinorCache::new().tableau_poly(t)
}

/// Counts `alpha_ij` = number of entries `i` in column `j`, stored in the
/// layout of the upper-triangular variables so it doubles as an exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphaMatrix {
    n: usize,
    counts: Vec<u32>,
}

impl AlphaMatrix {
    pub fn zero(n: usize) -> Self {
        AlphaMatrix {
            n,
            counts: vec![0; upper_nvars(n)],
        }
    }

    pub fn from_exponent(n: usize, exponent: Exponent) -> Self {
        assert_eq!(exponent.len(), upper_nvars(n));
        AlphaMatrix { n, counts: exponent }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `alpha_ij`; zero below the diagonal.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i > j {
            0
        } else {
            self.counts[x_index(self.n, i, j)]
        }
    }

    pub fn as_exponent(&self) -> &[u32] {
        &self.counts
    }

    pub fn column_sum(&self, j: usize) -> u32 {
        (1..=j).map(|i| self.get(i, j)).sum()
    }

    pub fn add(&self, other: &AlphaMatrix) -> AlphaMatrix {
        assert_eq!(self.n, other.n);
        AlphaMatrix {
            n: self.n,
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        }
    }
}

pub fn leading_exponent(t: &Tableau) -> AlphaMatrix {
    let n = t.n();
    let mut alpha = AlphaMatrix::zero(n);
    for row in t.rows() {
        for (c, &r) in row.columns().iter().zip(row.entries()) {
            alpha.counts[x_index(n, r, c)] += 1;
        }
    }
    alpha
}

impl fmt::Display for AlphaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
