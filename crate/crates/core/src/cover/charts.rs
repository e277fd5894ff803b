use std::sync::Arc;

use crate::curve::{CurveContext, CurvePolynomial, LocalFraction};
use crate::matrix::Matrix;
use crate::syzygy::{s_generators, s_prime_generators};
use crate::verdict::{ensure, Verdict};

pub type FractionMatrix = Matrix<LocalFraction>;

/// A syzygy triple divided by a unit X^a Z^b.
pub type FractionTriple = [LocalFraction; 3];

fn frac(ctx: &Arc<CurveContext>, c: i64, num: (u32, u32, u32), den: (u32, u32)) -> LocalFraction {
    LocalFraction::monomial(ctx, c, num, den)
}

/// Transition matrix from the basis (s₂/w, s₃/w) on W = D₊(w) to the
/// basis (s₁/u, s₂/u) on U = D₊(u): [[0, -w/u], [u/w, v²/(uw)]].
pub fn transition_matrix(ctx: &Arc<CurveContext>) -> FractionMatrix {
    Matrix::from_rows(vec![
        vec![LocalFraction::constant(ctx, 0), frac(ctx, -1, (0, 0, 1), (1, 0))],
        vec![frac(ctx, 1, (1, 0, 0), (0, 1)), frac(ctx, 1, (0, 2, 0), (1, 1))],
    ])
}

/// The Frobenius matrices (H_U, H_W) on the two charts.
pub fn h_matrices(ctx: &Arc<CurveContext>) -> (FractionMatrix, FractionMatrix) {
    let q = ctx.p() as u32;
    let one = LocalFraction::constant(ctx, 1);
    let two = LocalFraction::constant(ctx, 2);
    let v_over_u = frac(ctx, 1, (0, q + 1, 0), (q + 1, 0));
    let h_u = Matrix::from_rows(vec![
        vec![frac(ctx, 1, (0, 2, q - 1), (q + 1, 0)), two + v_over_u.clone()],
        vec![one - v_over_u, frac(ctx, -1, (0, q - 1, 2), (q + 1, 0))],
    ]);
    let over_w = |a: i64, b: i64| {
        LocalFraction::new(
            CurvePolynomial::term(ctx, a, q + 1, 0, 0) + CurvePolynomial::term(ctx, b, 0, q + 1, 0),
            0,
            q + 1,
        )
    };
    let h_w = Matrix::from_rows(vec![
        vec![frac(ctx, -1, (2, q - 1, 0), (0, q + 1)), over_w(-1, -2)],
        vec![over_w(-2, -1), frac(ctx, -1, (q - 1, 2, 0), (0, q + 1))],
    ]);
    (h_u, h_w)
}

/// Componentwise `t / (X^a Z^b)`.
pub fn divide(t: &[CurvePolynomial; 3], a: u32, b: u32) -> FractionTriple {
    t.clone().map(|x| LocalFraction::new(x, a, b))
}

/// Σᵢ mᵢⱼ·fromᵢ = toⱼ for every column j.
pub fn check_change_of_basis(label: &str, m: &FractionMatrix, from: &[FractionTriple], to: &[FractionTriple]) -> Verdict {
    for (j, target) in to.iter().enumerate() {
        for k in 0..3 {
            let sum = from
                .iter()
                .enumerate()
                .map(|(i, f)| m.get(i, j).clone() * f[k].clone())
                .reduce(|x, y| x + y)
                .expect("nonempty basis");
            ensure(sum == target[k], || {
                format!("{label}: column {} component {} gives {sum}, expected {}", j + 1, k + 1, target[k])
            })?;
        }
    }
    Ok(())
}

/// The local bases of the two charts: (s₁/u, s₂/u) and (s₂/w, s₃/w), with
/// their Frobenius pullbacks and the s' bases.
#[derive(Debug, Clone)]
pub struct ChartBases {
    pub u: [FractionTriple; 2],
    pub w: [FractionTriple; 2],
    pub u_frobenius: [FractionTriple; 2],
    pub w_frobenius: [FractionTriple; 2],
    pub u_prime: [FractionTriple; 2],
    pub w_prime: [FractionTriple; 2],
}

impl ChartBases {
    pub fn new(ctx: &Arc<CurveContext>) -> Self {
        let q = ctx.p() as u32;
        let s = s_generators(ctx);
        let sp = s_prime_generators(ctx);
        let frob = s.clone().map(|t| t.map(|x| x.p_power()));
        Self {
            u: [divide(&s[0], 1, 0), divide(&s[1], 1, 0)],
            w: [divide(&s[1], 0, 1), divide(&s[2], 0, 1)],
            u_frobenius: [divide(&frob[0], q, 0), divide(&frob[1], q, 0)],
            w_frobenius: [divide(&frob[1], 0, q), divide(&frob[2], 0, q)],
            u_prime: [divide(&sp[0], 1, 0), divide(&sp[1], 1, 0)],
            w_prime: [divide(&sp[1], 0, 1), divide(&sp[2], 0, 1)],
        }
    }
}

/// T expresses the W basis in the U basis, using w²s₁ - v²s₂ + u²s₃ = 0.
pub fn check_transition(ctx: &Arc<CurveContext>) -> Verdict {
    let t = transition_matrix(ctx);
    let bases = ChartBases::new(ctx);
    check_change_of_basis("T", &t, &bases.u, &bases.w)?;
    let det = t.det();
    ensure(det == LocalFraction::constant(ctx, 1), || format!("det T = {det}"))
}

/// H_U and H_W carry the Frobenius bases to the s' bases, and both have
/// determinant -2.
pub fn check_h_matrices(ctx: &Arc<CurveContext>) -> Verdict {
    let (h_u, h_w) = h_matrices(ctx);
    let bases = ChartBases::new(ctx);
    check_change_of_basis("H_U", &h_u, &bases.u_frobenius, &bases.u_prime)?;
    check_change_of_basis("H_W", &h_w, &bases.w_frobenius, &bases.w_prime)?;
    let minus_two = LocalFraction::constant(ctx, -2);
    for (name, h) in [("H_U", &h_u), ("H_W", &h_w)] {
        let det = h.det();
        ensure(det == minus_two, || format!("det {name} = {det}"))?;
    }
    Ok(())
}

/// Entrywise p-th power.
pub fn frobenius_twist(m: &FractionMatrix) -> FractionMatrix {
    m.map(|x| x.p_power())
}

/// H_U = T^(p) · H_W · T⁻¹ for the given matrices.
pub fn cocycle_holds(t: &FractionMatrix, h_u: &FractionMatrix, h_w: &FractionMatrix) -> bool {
    match t.inverse() {
        Ok(t_inv) => frobenius_twist(t).mul(h_w).mul(&t_inv) == *h_u,
        Err(_) => false,
    }
}

pub fn cocycle_check(ctx: &Arc<CurveContext>) -> Verdict {
    let t = transition_matrix(ctx);
    let (h_u, h_w) = h_matrices(ctx);
    ensure(cocycle_holds(&t, &h_u, &h_w), || "H_U differs from T^(p) H_W T^-1".to_string())
}
