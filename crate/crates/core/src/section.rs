//! Section spaces `M(m)`: dimensions, basis verification by exact linear
//! algebra, straightening, and Hilbert functions of the section ring.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, sparse_row, RationalPoly, SparseEchelon, SparseRow, PRIME};
use crate::poly::{leading_exponent, upper_nvars, AlphaMatrix, Exponent, MinorCache, Poly};
use crate::tableau::{count_straight, enumerate_row_standard, enumerate_straight, Tableau, TableauDoc};
use crate::word::Shape;

/// Number of straight tableaux of the shape.
pub fn dim_sections(shape: &Shape) -> u64 {
    count_straight(shape)
}

/// Outcome of a random-evaluation independence test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Precheck {
    pub seed: u64,
    pub points: usize,
    pub rank: u64,
    /// Full rank at the sample points proves independence; a deficit proves nothing.
    pub independent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BasisReport {
    pub n: usize,
    pub multiplicity: Vec<u32>,
    pub straight_count: u64,
    pub symbolic_rank: u64,
    pub distinct_leading: u64,
    pub row_standard_count: u64,
    pub span_verified: bool,
    /// Row-standard tableaux whose polynomial is outside the span.
    pub witness_failures: Vec<TableauDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precheck: Option<Precheck>,
}

impl BasisReport {
    pub fn is_basis(&self) -> bool {
        self.span_verified && self.symbolic_rank == self.straight_count
    }
}

/// Column indices for monomials, largest monomial first, so that the
/// leading term of a polynomial is the first entry of its sparse row.
struct MonomialIndex {
    index: HashMap<Exponent, usize>,
}

impl MonomialIndex {
    fn new<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let all: BTreeSet<&Exponent> = polys.into_iter().flat_map(|p| p.terms().map(|(e, _)| e)).collect();
        let index = all.into_iter().rev().enumerate().map(|(k, e)| (e.clone(), k)).collect();
        MonomialIndex { index }
    }

    fn row(&self, p: &Poly) -> SparseRow {
        sparse_row(p.terms().map(|(e, c)| (self.index[e], c.clone())))
    }
}

/// Expands every straight tableau of `shape`, computes the exact rank of
/// their coefficient matrix and checks that every row-standard tableau
/// lies in their span. With a seed, also runs [`precheck_independence`].
pub fn verify_basis(shape: &Shape, seed: Option<u64>) -> BasisReport {
    let straight = enumerate_straight(shape);
    let all = enumerate_row_standard(shape);
    let mut cache = MinorCache::new();
    let basis_polys: Vec<Poly> = straight.iter().map(|t| cache.tableau_poly(t)).collect();
    let straight_set: HashSet<&Tableau> = straight.iter().collect();
    let others: Vec<(&Tableau, Poly)> = all
        .iter()
        .filter(|t| !straight_set.contains(t))
        .map(|t| (t, cache.tableau_poly(t)))
        .collect();
    let columns = MonomialIndex::new(basis_polys.iter().chain(others.iter().map(|(_, p)| p)));

    let mut echelon = SparseEchelon::new();
    for p in &basis_polys {
        echelon.insert(columns.row(p));
    }
    let witness_failures: Vec<TableauDoc> = others
        .iter()
        .filter(|(_, p)| !echelon.contains(columns.row(p)))
        .map(|(t, _)| t.to_doc(Some(shape.multiplicity())))
        .collect();
    let leading: HashSet<AlphaMatrix> = straight.iter().map(leading_exponent).collect();

    BasisReport {
        n: shape.n(),
        multiplicity: shape.multiplicity().to_vec(),
        straight_count: straight.len() as u64,
        symbolic_rank: echelon.rank() as u64,
        distinct_leading: leading.len() as u64,
        row_standard_count: all.len() as u64,
        span_verified: witness_failures.is_empty(),
        witness_failures,
        precheck: seed.map(|s| precheck_polys(&basis_polys, upper_nvars(shape.n()), s)),
    }
}

/// Evaluates the straight tableau polynomials at random integer matrices
/// with entries in `[-20, 20]` and returns the rank of the value matrix
/// modulo a large prime, a lower bound for its rank over the rationals.
pub fn precheck_independence(shape: &Shape, seed: u64) -> Precheck {
    let mut cache = MinorCache::new();
    let polys: Vec<Poly> = enumerate_straight(shape).iter().map(|t| cache.tableau_poly(t)).collect();
    precheck_polys(&polys, upper_nvars(shape.n()), seed)
}

fn precheck_polys(polys: &[Poly], nvars: usize, seed: u64) -> Precheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = polys.len() + 4;
    let samples: Vec<Vec<u64>> = (0..points)
        .map(|_| {
            (0..nvars)
                .map(|_| rng.gen_range(-20i64..=20).rem_euclid(PRIME as i64) as u64)
                .collect()
        })
        .collect();
    let values: Vec<Vec<u64>> = polys
        .iter()
        .map(|p| samples.iter().map(|x| p.eval_mod(x, PRIME)).collect())
        .collect();
    let rank = rank_mod_p(values, PRIME) as u64;
    Precheck {
        seed,
        points,
        rank,
        independent: rank == polys.len() as u64,
    }
}

/// `t` written in the straight basis of its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straightening {
    pub terms: Vec<(Tableau, BigRational)>,
    /// The expansion of the combination equals the expansion of `t`.
    pub verified: bool,
}

/// Expresses `t` as a combination of straight tableaux of `shape`.
///
/// Straight tableaux have pairwise distinct leading exponents and leading
/// coefficient 1, so the coefficients come from repeatedly cancelling the
/// leading term of the remainder (a triangular solve). The identity is then
/// re-checked by expanding both sides.
pub fn straighten(t: &Tableau, shape: &Shape) -> Result<Straightening> {
    if !t.fits(shape) {
        return Err(Error::ShapeMismatch("tableau does not fit the shape".into()));
    }
    let basis = enumerate_straight(shape);
    let by_leading: HashMap<AlphaMatrix, usize> =
        basis.iter().enumerate().map(|(k, s)| (leading_exponent(s), k)).collect();
    let n = shape.n();
    let mut cache = MinorCache::new();
    let target = cache.tableau_poly(t);
    let mut remainder = target.clone();
    let mut coeffs: std::collections::BTreeMap<usize, BigInt> = Default::default();
    while let Some((e, c)) = remainder.leading() {
        let alpha = AlphaMatrix::from_exponent(n, e.clone());
        let &k = by_leading.get(&alpha).ok_or_else(|| {
            Error::BasisFailure(format!("no straight tableau with leading exponent\n{alpha}"))
        })?;
        let p = cache.tableau_poly(&basis[k]);
        let lead = p.leading().map(|(_, c)| c.clone()).unwrap_or_default();
        let (q, r) = c.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::BasisFailure(format!("leading coefficient {lead} does not divide {c}")));
        }
        remainder = &remainder - &p.scale(&q);
        *coeffs.entry(k).or_default() += q;
    }
    coeffs.retain(|_, c| !c.is_zero());
    let rebuilt = coeffs.iter().fold(Poly::zero(target.nvars()), |acc, (&k, c)| {
        &acc + &cache.tableau_poly(&basis[k]).scale(c)
    });
    Ok(Straightening {
        verified: rebuilt == target,
        terms: coeffs
            .into_iter()
            .map(|(k, c)| (basis[k].clone(), BigRational::from_integer(c)))
            .collect(),
    })
}

/// Dimensions of `M(d m)` for `d = 0..=dmax` and, when there are enough
/// degrees, the interpolating polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedDimensionTable {
    pub n: usize,
    pub multiplicity: Vec<u32>,
    pub entries: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interpolated: Option<RationalPoly>,
}

/// Counts straight tableaux of `d m` for each `d <= dmax`. The Hilbert
/// polynomial has degree at most the word length `l`; it is fitted on
/// `d = 0..=l` and checked on every further degree, so it is only produced
/// when `dmax >= l + 1`.
pub fn hilbert_table(shape: &Shape, dmax: u32) -> Result<GradedDimensionTable> {
    let entries: Vec<u64> = (0..=dmax).map(|d| dim_sections(&shape.scaled(d))).collect();
    let interpolated = interpolate_table(&entries, shape.word().len())?;
    Ok(GradedDimensionTable {
        n: shape.n(),
        multiplicity: shape.multiplicity().to_vec(),
        entries,
        interpolated,
    })
}

/// Fits a polynomial of degree at most `degree_bound` through the first
/// `degree_bound + 1` values and checks it against the rest.
pub fn interpolate_table(entries: &[u64], degree_bound: usize) -> Result<Option<RationalPoly>> {
    if entries.len() < degree_bound + 2 {
        return Ok(None);
    }
    let points: Vec<(i64, BigInt)> = entries[..=degree_bound]
        .iter()
        .enumerate()
        .map(|(d, &v)| (d as i64, BigInt::from(v)))
        .collect();
    let fit = RationalPoly::interpolate(&points);
    for (d, &v) in entries.iter().enumerate().skip(degree_bound + 1) {
        let predicted = fit.eval_int(d as i64);
        if predicted != BigRational::from_integer(BigInt::from(v)) {
            return Err(Error::NonPolynomialGrowth {
                degree: d,
                expected: predicted.to_string(),
                found: v.to_string(),
            });
        }
    }
    Ok(Some(fit))
}

/// Leading coefficient sanity: every straight tableau polynomial leads with `+1`.
pub fn leading_coefficients_are_one(shape: &Shape) -> bool {
    let mut cache = MinorCache::new();
    enumerate_straight(shape)
        .iter()
        .all(|t| cache.tableau_poly(t).leading().is_some_and(|(_, c)| c.is_one()))
}
