//! Plücker-type coordinates of the three-dimensional Bott-Samelson variety
//! `P_1 x P_2 x P_1 / B^3` for `GL_3`.

use crate::poly::{det, Poly, VarContext};

/// Zero patterns: `P_1` kills entries (3,1) and (3,2); `P_2` kills (2,1) and (3,1).
const P1_ZEROS: [(usize, usize); 2] = [(3, 1), (3, 2)];
const P2_ZEROS: [(usize, usize); 2] = [(2, 1), (3, 1)];

/// The structurally nonzero entries of `p_1`, `p_2`, `p_3`, named `a_i_j`,
/// `b_i_j`, `c_i_j`.
pub fn parabolic_context() -> VarContext {
    let mut names = Vec::new();
    for (letter, zeros) in [("a", P1_ZEROS), ("b", P2_ZEROS), ("c", P1_ZEROS)] {
        for i in 1..=3 {
            for j in 1..=3 {
                if !zeros.contains(&(i, j)) {
                    names.push(format!("{letter}_{i}_{j}"));
                }
            }
        }
    }
    VarContext::new(names)
}

#[derive(Debug, Clone)]
pub struct PluckerCoords3 {
    pub ctx: VarContext,
    pub s1: Poly,
    pub s2: Poly,
    pub r23: Poly,
    pub r13: Poly,
    pub r12: Poly,
    pub q1: Poly,
    pub q2: Poly,
    pub q3: Poly,
}

impl PluckerCoords3 {
    /// `s_1 r_23 + s_2 r_13` and `q_1 r_23 + q_2 r_13 + q_3 r_12`.
    pub fn relations(&self) -> [Poly; 2] {
        let first = &(&self.s1 * &self.r23) + &(&self.s2 * &self.r13);
        let second = &(&(&self.q1 * &self.r23) + &(&self.q2 * &self.r13)) + &(&self.q3 * &self.r12);
        [first, second]
    }

    pub fn named(&self) -> Vec<(&'static str, &Poly)> {
        vec![
            ("s1", &self.s1),
            ("s2", &self.s2),
            ("r23", &self.r23),
            ("r13", &self.r13),
            ("r12", &self.r12),
            ("q1", &self.q1),
            ("q2", &self.q2),
            ("q3", &self.q3),
        ]
    }
}

type Matrix = Vec<Vec<Poly>>;

fn generic(ctx: &VarContext, letter: &str) -> Matrix {
    (1..=3)
        .map(|i| {
            (1..=3)
                .map(|j| {
                    ctx.var(&format!("{letter}_{i}_{j}"))
                        .unwrap_or_else(|| Poly::zero(ctx.len()))
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix, nvars: usize) -> Matrix {
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    (0..3).fold(Poly::zero(nvars), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

/// `s_i`: row `i`, column 1 of `p_1`; `r_ij`: rows `{i,j}`, columns `{1,2}`
/// of `p_1 p_2`; `q_i`: row `i`, column 1 of `p_1 p_2 p_3`.
///
/// `r_13` takes its rows in the order (3,1), so `r_13 = -a_1_1 a_3_3 b_1_1 b_3_2`
/// and both relations hold with all plus signs.
pub fn plucker_coords_3d() -> PluckerCoords3 {
    let ctx = parabolic_context();
    let nv = ctx.len();
    let (p1, p2, p3) = (generic(&ctx, "a"), generic(&ctx, "b"), generic(&ctx, "c"));
    let p12 = matmul(&p1, &p2, nv);
    let p123 = matmul(&p12, &p3, nv);
    let r = |i: usize, j: usize| {
        let sub = vec![
            vec![p12[i - 1][0].clone(), p12[i - 1][1].clone()],
            vec![p12[j - 1][0].clone(), p12[j - 1][1].clone()],
        ];
        det(&sub, nv)
    };
    PluckerCoords3 {
        s1: p1[0][0].clone(),
        s2: p1[1][0].clone(),
        r23: r(2, 3),
        r13: r(3, 1),
        r12: r(1, 2),
        q1: p123[0][0].clone(),
        q2: p123[1][0].clone(),
        q3: p123[2][0].clone(),
        ctx,
    }
}
