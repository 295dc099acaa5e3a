//! The three-dimensional example: the tri-graded presentation of the
//! coordinate ring, its two one-parameter degenerations, the toric special
//! fibers, the components `D_3`, `G`, `K_2` and their Ehrhart data.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank, sparse_row, RationalPoly, SparseEchelon};
use crate::section::dim_sections;
use crate::word::Shape;

/// Variable order of the presentation.
pub const VARIABLES: [&str; 8] = ["s1", "s2", "r23", "r13", "r12", "q1", "q2", "q3"];
const GROUP: [usize; 8] = [0, 0, 1, 1, 1, 2, 2, 2];
const GROUP_SIZE: [usize; 3] = [2, 3, 3];

pub type Monomial = [u32; 8];

fn mono(vars: &[usize]) -> Monomial {
    let mut m = [0; 8];
    for &v in vars {
        m[v] += 1;
    }
    m
}

fn mul(a: &Monomial, b: &Monomial) -> Monomial {
    std::array::from_fn(|i| a[i] + b[i])
}

fn tri_degree(m: &Monomial) -> [u32; 3] {
    let mut d = [0; 3];
    for (v, &k) in m.iter().enumerate() {
        d[GROUP[v]] += k;
    }
    d
}

/// All monomials of tri-degree `deg`, in a fixed order.
pub fn monomials(deg: [u32; 3]) -> Vec<Monomial> {
    fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .rev()
            .flat_map(|first| {
                compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let groups: Vec<Vec<Vec<u32>>> = (0..3).map(|g| compositions(deg[g], GROUP_SIZE[g])).collect();
    let mut out = Vec::new();
    for a in &groups[0] {
        for b in &groups[1] {
            for c in &groups[2] {
                let mut m = [0; 8];
                for (slot, &x) in m.iter_mut().zip(a.iter().chain(b).chain(c)) {
                    *slot = x;
                }
                out.push(m);
            }
        }
    }
    out
}

/// A homogeneous relation with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Monomial, BigRational)>,
}

impl Relation {
    fn new(terms: Vec<(Monomial, BigRational)>) -> Self {
        Relation {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn degree(&self) -> [u32; 3] {
        self.terms.first().map_or([0; 3], |(m, _)| tri_degree(m))
    }

    /// Coefficients cleared of denominators.
    fn integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let denom = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        self.terms
            .iter()
            .map(|(m, c)| (*m, (c * BigRational::from_integer(denom.clone())).to_integer()))
            .collect()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let body: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { VARIABLES[v].to_string() } else { format!("{}^{e}", VARIABLES[v]) })
                .collect();
            let body = body.join("*");
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag}*{body}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `tau` on the `q3 r12` term of the second relation.
    One,
    /// `tau` on the `q2 r13` term of the second relation.
    Two,
}

/// Variables `s*` of degree (1,0,0), `r*` of degree (0,1,0), `q*` of degree
/// (0,0,1), and two relations of degrees (1,1,0) and (0,1,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriGradedPresentation {
    pub family: Family,
    pub tau: BigRational,
    pub relations: Vec<Relation>,
}

const S1: usize = 0;
const S2: usize = 1;
const R23: usize = 2;
const R13: usize = 3;
const R12: usize = 4;
const Q1: usize = 5;
const Q2: usize = 6;
const Q3: usize = 7;

impl TriGradedPresentation {
    /// `s1 r23 + s2 r13`, `q1 r23 + q2 r13 + tau q3 r12`.
    pub fn family1(tau: BigRational) -> Self {
        Self::build(Family::One, tau)
    }

    /// `s1 r23 + s2 r13`, `q1 r23 + tau q2 r13 + q3 r12`.
    pub fn family2(tau: BigRational) -> Self {
        Self::build(Family::Two, tau)
    }

    pub fn at(family: Family, tau: i64) -> Self {
        Self::build(family, BigRational::from_integer(tau.into()))
    }

    fn build(family: Family, tau: BigRational) -> Self {
        let one = BigRational::one;
        let (c2, c3) = match family {
            Family::One => (one(), tau.clone()),
            Family::Two => (tau.clone(), one()),
        };
        let relations = vec![
            Relation::new(vec![(mono(&[S1, R23]), one()), (mono(&[S2, R13]), one())]),
            Relation::new(vec![
                (mono(&[Q1, R23]), one()),
                (mono(&[Q2, R13]), c2),
                (mono(&[Q3, R12]), c3),
            ]),
        ];
        TriGradedPresentation { family, tau, relations }
    }
}

/// Dimension of the tri-degree `(d,d,d)` part of the quotient: the number of
/// monomials minus the rank of all monomial multiples of the relations that
/// land in that degree.
pub fn fiber_dimension(pres: &TriGradedPresentation, d: u32) -> u64 {
    let target = monomials([d; 3]);
    let index: HashMap<Monomial, usize> = target.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut echelon = SparseEchelon::new();
    for rel in &pres.relations {
        let deg = rel.degree();
        if (0..3).any(|g| deg[g] > d) {
            continue;
        }
        let terms = rel.integer_terms();
        for u in monomials(std::array::from_fn(|g| d - deg[g])) {
            echelon.insert(sparse_row(terms.iter().map(|(m, c)| (index[&mul(&u, m)], c.clone()))));
        }
    }
    (target.len() - echelon.rank()) as u64
}

/// Signs `sigma_v` such that `v -> sigma_v v` turns every relation into a
/// difference of two monomials.
pub fn pure_difference_signs(pres: &TriGradedPresentation) -> Result<[i8; 8]> {
    for rel in &pres.relations {
        if rel.terms.len() != 2 || rel.terms.iter().any(|(_, c)| !c.abs().is_one()) {
            return Err(Error::NotBinomial(rel.to_string()));
        }
    }
    let sign_of = |mask: u32, m: &Monomial| {
        let odd: u32 = (0..8).filter(|&v| mask >> v & 1 == 1).map(|v| m[v]).sum();
        if odd.is_multiple_of(2) { 1 } else { -1 }
    };
    for mask in 0u32..256 {
        let ok = pres.relations.iter().all(|rel| {
            let (m1, c1) = &rel.terms[0];
            let (m2, c2) = &rel.terms[1];
            let s1 = if c1.is_negative() { -1 } else { 1 } * sign_of(mask, m1);
            let s2 = if c2.is_negative() { -1 } else { 1 } * sign_of(mask, m2);
            s1 == -s2
        });
        if ok {
            return Ok(std::array::from_fn(|v| if mask >> v & 1 == 1 { -1 } else { 1 }));
        }
    }
    Err(Error::NotBinomial("no sign change makes every relation a pure difference".into()))
}

type Congruence = (Vec<Monomial>, Vec<(usize, usize)>);

/// Monomials of degree `(d,d,d)` and the pairs identified by the binomial
/// relations (each relation times each monomial of complementary degree).
fn congruence_pairs(pres: &TriGradedPresentation, d: u32) -> Result<Congruence> {
    pure_difference_signs(pres)?;
    let target = monomials([d; 3]);
    let index: HashMap<Monomial, usize> = target.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut pairs = Vec::new();
    for rel in &pres.relations {
        let deg = rel.degree();
        if (0..3).any(|g| deg[g] > d) {
            continue;
        }
        let (a, b) = (&rel.terms[0].0, &rel.terms[1].0);
        for u in monomials(std::array::from_fn(|g| d - deg[g])) {
            pairs.push((index[&mul(&u, a)], index[&mul(&u, b)]));
        }
    }
    Ok((target, pairs))
}

fn count_classes(size: usize, pairs: &[(usize, usize)]) -> u64 {
    let mut uf = UnionFind::<usize>::new(size);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    uf.into_labeling().into_iter().collect::<BTreeSet<_>>().len() as u64
}

/// Number of congruence classes of degree-`(d,d,d)` monomials; for a
/// pure-difference binomial ideal the classes form a basis of the quotient.
pub fn congruence_count(pres: &TriGradedPresentation, d: u32) -> Result<u64> {
    let (target, pairs) = congruence_pairs(pres, d)?;
    Ok(count_classes(target.len(), &pairs))
}

/// Same count with the identifications processed in a seeded random order.
pub fn congruence_count_shuffled(pres: &TriGradedPresentation, d: u32, seed: u64) -> Result<u64> {
    let (target, mut pairs) = congruence_pairs(pres, d)?;
    pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Ok(count_classes(target.len(), &pairs))
}

/// Parameters of the monomial map onto `D_3`.
pub const D3_PARAMETERS: [&str; 6] = ["u1", "u2", "v", "w", "z", "y"];

/// `s = (u1, u2)`, `r23 = u2 v`, `r13 = u1 v`, `r12 = w`, `q1 = u1 z`,
/// `q2 = u2 z`, `q3 = y`.
const D3_IMAGE: [[u32; 6]; 8] = [
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
];

pub fn d3_image(m: &Monomial) -> [u32; 6] {
    let mut out = [0; 6];
    for (v, &k) in m.iter().enumerate() {
        for (slot, &e) in out.iter_mut().zip(&D3_IMAGE[v]) {
            *slot += k * e;
        }
    }
    out
}

/// The monomial map sends both monomials of every relation to the same
/// monomial, so it kills each pure-difference binomial, and `r13 r23` maps
/// to a nonzero monomial.
pub fn d3_parametrization_valid(pres: &TriGradedPresentation) -> Result<bool> {
    pure_difference_signs(pres)?;
    let kills = pres
        .relations
        .iter()
        .all(|rel| d3_image(&rel.terms[0].0) == d3_image(&rel.terms[1].0));
    let nonzero = d3_image(&mono(&[R13, R23])).iter().any(|&e| e > 0);
    Ok(kills && nonzero)
}

/// Distinct exponent images of the degree-`(d,d,d)` monomials.
pub fn d3_points(d: u32) -> BTreeSet<[u32; 6]> {
    monomials([d; 3]).iter().map(d3_image).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentCounts {
    pub degree: u32,
    pub d3: u64,
    pub g: u64,
    pub k2: u64,
    pub fiber: u64,
}

/// `D_3` from the parametrization, `G` as the monomials whose `r`-part is
/// `r12^d`, and `K_2 = D_3 + G - fiber` with the toric fiber of family 1.
pub fn component_counts(d: u32) -> Result<ComponentCounts> {
    let d3 = d3_points(d).len() as u64;
    let g = monomials([d; 3])
        .iter()
        .filter(|m| m[R23] == 0 && m[R13] == 0)
        .count() as u64;
    let fiber = congruence_count(&TriGradedPresentation::at(Family::One, 0), d)?;
    Ok(ComponentCounts {
        degree: d,
        d3,
        g,
        k2: d3 + g - fiber,
        fiber,
    })
}

/// Numerator `N(t) = (sum_d values[d] t^d) (1 - t)^power`, lowest degree
/// first. The first `power` values determine it; every coefficient from
/// `t^power` up to the last supplied value must vanish.
pub fn ehrhart_series_numerator(values: &[u64], power: usize) -> Result<Vec<BigInt>> {
    if values.len() < power {
        return Err(Error::InsufficientData {
            needed: power,
            got: values.len(),
        });
    }
    let binom: Vec<BigInt> = (0..=power)
        .scan(BigInt::one(), |c, k| {
            let out = if k % 2 == 0 { c.clone() } else { -c.clone() };
            *c = &*c * BigInt::from(power - k) / BigInt::from(k + 1);
            Some(out)
        })
        .collect();
    let mut coeffs: Vec<BigInt> = (0..values.len())
        .map(|i| {
            (0..=power.min(i))
                .map(|k| &binom[k] * BigInt::from(values[i - k]))
                .sum()
        })
        .collect();
    if let Some((degree, value)) = coeffs.iter().enumerate().skip(power).find(|(_, c)| !c.is_zero()) {
        return Err(Error::NotRationalOfClaimedForm {
            degree,
            value: value.to_string(),
        });
    }
    coeffs.truncate(power);
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// `3t^2 + 8t + 1` from `[1, 8, 3]`.
pub fn format_t_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let body = match deg {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{deg}"),
        };
        if body.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullSummary {
    pub points: usize,
    pub dimension: usize,
    pub vertices: usize,
    pub facets: usize,
}

fn affine_rank(points: &[Vec<i64>], coords: &[usize]) -> usize {
    let base = &points[0];
    rank(points[1..].iter().map(|p| {
        sparse_row(coords.iter().enumerate().map(|(k, &c)| (k, BigInt::from(p[c] - base[c]))))
    }))
}

/// Face counts of the convex hull of a finite point set whose affine hull is
/// three-dimensional, by exhaustive search over supporting planes through
/// three points.
pub fn hull_summary(points: &[Vec<i64>]) -> Result<HullSummary> {
    let pts: Vec<Vec<i64>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.is_empty() {
        return Err(Error::Geometry("no points".into()));
    }
    let width = pts[0].len();
    let all: Vec<usize> = (0..width).collect();
    let dimension = affine_rank(&pts, &all);
    if dimension != 3 {
        return Err(Error::Geometry(format!("affine hull has dimension {dimension}, not 3")));
    }
    let coords = (0..width)
        .flat_map(|i| (i + 1..width).flat_map(move |j| (j + 1..width).map(move |k| [i, j, k])))
        .find(|c| affine_rank(&pts, c) == 3)
        .expect("some coordinate projection preserves a full-rank affine hull");
    let proj: Vec<[i64; 3]> = pts.iter().map(|p| coords.map(|c| p[c])).collect();
    let sub = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let dot = |a: [i64; 3], b: [i64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let cross = |a: [i64; 3], b: [i64; 3]| {
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    };

    let mut facets: Vec<(Vec<usize>, [i64; 3])> = Vec::new();
    let m = proj.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let normal = cross(sub(proj[b], proj[a]), sub(proj[c], proj[a]));
                if normal == [0; 3] {
                    continue;
                }
                let offset = dot(normal, proj[a]);
                let side: Vec<i64> = proj.iter().map(|&p| dot(normal, p) - offset).collect();
                if side.iter().all(|&s| s >= 0) || side.iter().all(|&s| s <= 0) {
                    let on: Vec<usize> = (0..m).filter(|&i| side[i] == 0).collect();
                    if !facets.iter().any(|(f, _)| *f == on) {
                        facets.push((on, normal));
                    }
                }
            }
        }
    }
    let vertices = (0..m)
        .filter(|&i| {
            let normals = facets
                .iter()
                .filter(|(on, _)| on.contains(&i))
                .map(|(_, n)| sparse_row(n.iter().enumerate().map(|(k, &x)| (k, BigInt::from(x)))));
            rank(normals) == 3
        })
        .count();
    Ok(HullSummary {
        points: m,
        dimension,
        vertices,
        facets: facets.len(),
    })
}

/// Dimensions of one family at one parameter value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FiberTable {
    pub family: Family,
    pub tau: String,
    pub entries: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<String>,
}

/// Fiber dimensions for `d = 0..=dmax` by exact rank, with the series
/// numerator over `(1 - t)^4` when it is determined by the data.
pub fn fiber_table(pres: &TriGradedPresentation, dmax: u32) -> FiberTable {
    let entries: Vec<u64> = (0..=dmax).map(|d| fiber_dimension(pres, d)).collect();
    let numerator = ehrhart_series_numerator(&entries, 4).ok().map(|c| format_t_poly(&c));
    FiberTable {
        family: pres.family,
        tau: pres.tau.to_string(),
        entries,
        numerator,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub degree: Option<u32>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, degree: Option<u32>, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Check {
            name: name.into(),
            degree,
            pass: expected == computed,
            expected,
            computed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example3Report {
    pub dmax: u32,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Example3Report {
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// The Hilbert polynomial `(5d^3 + 11d^2 + 8d + 2)/2`.
pub fn threefold_hilbert_polynomial() -> RationalPoly {
    RationalPoly::from_integers(&[2, 8, 11, 5], 2)
}

fn eval_u64(p: &RationalPoly, d: u32) -> String {
    p.eval_int(d as i64).to_string()
}

/// Every count of the example for `d <= dmax` against its closed form,
/// plus the series numerators, the parametrization and the cube.
pub fn verify_example3(dmax: u32) -> Result<Example3Report> {
    if dmax < 3 {
        return Err(Error::InsufficientData {
            needed: 4,
            got: dmax as usize + 1,
        });
    }
    let hp = threefold_hilbert_polynomial();
    let d3_form = RationalPoly::from_integers(&[1, 4, 5, 2], 1);
    let g_form = RationalPoly::from_integers(&[2, 5, 4, 1], 2);
    let k2_form = RationalPoly::from_integers(&[2, 5, 3], 2);
    let tau1 = TriGradedPresentation::at(Family::One, 1);
    let fam1 = TriGradedPresentation::at(Family::One, 0);
    let fam2 = TriGradedPresentation::at(Family::Two, 0);
    let unit = Shape::canonical(3, vec![1, 1, 1])?;

    let mut checks = Vec::new();
    let mut series: [Vec<u64>; 4] = Default::default();
    for d in 0..=dmax {
        let expected = eval_u64(&hp, d);
        let deg = Some(d);
        checks.push(Check::new("fiber-tau1", deg, &expected, fiber_dimension(&tau1, d)));
        checks.push(Check::new("congruence-family1", deg, &expected, congruence_count(&fam1, d)?));
        let fiber2 = congruence_count(&fam2, d)?;
        checks.push(Check::new("congruence-family2", deg, &expected, fiber2));
        checks.push(Check::new("straight-count", deg, &expected, dim_sections(&unit.scaled(d))));
        let c = component_counts(d)?;
        checks.push(Check::new("d3-count", deg, eval_u64(&d3_form, d), c.d3));
        checks.push(Check::new("g-count", deg, eval_u64(&g_form, d), c.g));
        checks.push(Check::new("k2-count", deg, eval_u64(&k2_form, d), c.k2));
        checks.push(Check::new("inclusion-exclusion", deg, &expected, c.d3 + c.g - c.k2));
        for (s, v) in series.iter_mut().zip([c.d3, c.g, c.k2, fiber2]) {
            s.push(v);
        }
    }
    let numerator = |values: &[u64], power| {
        ehrhart_series_numerator(values, power).map_or_else(|e| e.to_string(), |c| format_t_poly(&c))
    };
    checks.push(Check::new("series-d3", None, "3t^2 + 8t + 1", numerator(&series[0], 4)));
    checks.push(Check::new("series-g", None, "2t + 1", numerator(&series[1], 4)));
    checks.push(Check::new("series-k2", None, "2t + 1", numerator(&series[2], 3)));
    checks.push(Check::new("series-family2", None, "5t^2 + 9t + 1", numerator(&series[3], 4)));
    checks.push(Check::new("d3-parametrization", None, true, d3_parametrization_valid(&fam1)?));
    let cube: Vec<Vec<i64>> = d3_points(1)
        .iter()
        .map(|p| p.iter().map(|&x| x as i64).collect())
        .collect();
    let hull = hull_summary(&cube)?;
    checks.push(Check::new(
        "d3-polytope",
        Some(1),
        "8 vertices, 6 facets",
        format!("{} vertices, {} facets", hull.vertices, hull.facets),
    ));
    Ok(Example3Report {
        dmax,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn monomial_counts() {
        for d in 0..5u32 {
            let d64 = d as u64;
            let expected = (d64 + 1) * binomial(d64 + 2, 2).pow(2);
            assert_eq!(monomials([d; 3]).len() as u64, expected);
        }
        assert_eq!(monomials([1; 3]).len(), 18);
    }

    #[test]
    fn presentations() {
        let p = TriGradedPresentation::at(Family::One, 1);
        assert_eq!(p.relations[0].to_string(), "s1*r23 + s2*r13");
        assert_eq!(p.relations[1].to_string(), "r23*q1 + r13*q2 + r12*q3");
        assert_eq!(p.relations[0].degree(), [1, 1, 0]);
        assert_eq!(p.relations[1].degree(), [0, 1, 1]);
        let q = TriGradedPresentation::family2(BigRational::new(1.into(), 2.into()));
        assert_eq!(q.relations[1].to_string(), "r23*q1 + 1/2*r13*q2 + r12*q3");
        assert_eq!(TriGradedPresentation::at(Family::Two, 0).relations[1].terms.len(), 2);
    }

    #[test]
    fn fiber_dimensions() {
        let p = TriGradedPresentation::at(Family::One, 1);
        assert_eq!(fiber_dimension(&p, 0), 1);
        assert_eq!(fiber_dimension(&p, 1), 13);
        assert_eq!(fiber_dimension(&p, 2), 51);
        let half = TriGradedPresentation::family1(BigRational::new(3.into(), 7.into()));
        assert_eq!(fiber_dimension(&half, 2), 51);
    }

    #[test]
    fn congruence_counts() {
        for family in [Family::One, Family::Two] {
            let p = TriGradedPresentation::at(family, 0);
            assert_eq!(congruence_count(&p, 0).unwrap(), 1);
            assert_eq!(congruence_count(&p, 1).unwrap(), 13);
            assert_eq!(congruence_count(&p, 2).unwrap(), 51);
            assert_eq!(congruence_count_shuffled(&p, 2, 11).unwrap(), 51);
        }
        let full = TriGradedPresentation::at(Family::One, 1);
        assert!(matches!(congruence_count(&full, 1), Err(Error::NotBinomial(_))));
    }

    #[test]
    fn signs_make_pure_differences() {
        let p = TriGradedPresentation::at(Family::One, 0);
        let signs = pure_difference_signs(&p).unwrap();
        for rel in &p.relations {
            let value = |m: &Monomial| -> i64 { (0..8).map(|v| (signs[v] as i64).pow(m[v])).product() };
            assert_eq!(value(&rel.terms[0].0), -value(&rel.terms[1].0));
        }
    }

    #[test]
    fn components() {
        assert!(d3_parametrization_valid(&TriGradedPresentation::at(Family::One, 0)).unwrap());
        let c = component_counts(1).unwrap();
        assert_eq!((c.d3, c.g, c.k2, c.fiber), (12, 6, 5, 13));
        let c = component_counts(0).unwrap();
        assert_eq!((c.d3, c.g, c.k2), (1, 1, 1));
        let c = component_counts(2).unwrap();
        assert_eq!((c.d3, c.g, c.k2), (45, 18, 12));
    }

    #[test]
    fn numerators() {
        let n = ehrhart_series_numerator(&[1, 12, 45, 112, 225], 4).unwrap();
        assert_eq!(format_t_poly(&n), "3t^2 + 8t + 1");
        let n = ehrhart_series_numerator(&[1, 6, 18, 40, 75], 4).unwrap();
        assert_eq!(format_t_poly(&n), "2t + 1");
        let err = ehrhart_series_numerator(&[1, 2, 4, 8, 16, 32], 4).unwrap_err();
        assert!(matches!(err, Error::NotRationalOfClaimedForm { degree: 4, .. }));
        assert!(matches!(
            ehrhart_series_numerator(&[1, 2], 4),
            Err(Error::InsufficientData { needed: 4, got: 2 })
        ));
        assert_eq!(format_t_poly(&[]), "0");
        assert_eq!(format_t_poly(&[BigInt::from(-1), BigInt::from(0), BigInt::from(-2)]), "-2t^2 - 1");
    }

    #[test]
    fn hull_of_cube_and_simplex() {
        let cube: Vec<Vec<i64>> = d3_points(1).iter().map(|p| p.iter().map(|&x| x as i64).collect()).collect();
        let h = hull_summary(&cube).unwrap();
        assert_eq!((h.points, h.dimension, h.vertices, h.facets), (12, 3, 8, 6));
        let simplex = vec![vec![0, 0, 0, 5], vec![1, 0, 0, 5], vec![0, 1, 0, 5], vec![0, 0, 1, 5]];
        let h = hull_summary(&simplex).unwrap();
        assert_eq!((h.vertices, h.facets), (4, 4));
        assert!(hull_summary(&[vec![0, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn example_report() {
        let r = verify_example3(3).unwrap();
        assert!(r.pass, "{:?}", r.failures());
        assert!(verify_example3(2).is_err());
    }
}
