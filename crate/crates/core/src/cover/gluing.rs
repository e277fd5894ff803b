use std::sync::Arc;

use super::charts::{h_matrices, transition_matrix, FractionMatrix};
use super::relations::{constant_matrix, formal_matrix, frobenius_formal, FormalMatrix};
use crate::curve::{CurveContext, FormalPolynomial, FormalVars, LocalFraction};
use crate::ring::Ring;
use crate::verdict::{ensure, Verdict};

fn frac(ctx: &Arc<CurveContext>, c: i64, num: (u32, u32, u32), den: (u32, u32)) -> LocalFraction {
    LocalFraction::monomial(ctx, c, num, den)
}

/// a = -(w/u)γ, b = -(w/u)δ, c = (u/w)α + (v²/(uw))γ, d = (u/w)β + (v²/(uw))δ.
pub fn gluing_substitution(ctx: &Arc<CurveContext>) -> [FormalPolynomial; 4] {
    let g = FormalPolynomial::vars_of(ctx, FormalVars::AlphaDelta);
    let w_u = frac(ctx, -1, (0, 0, 1), (1, 0));
    let u_w = frac(ctx, 1, (1, 0, 0), (0, 1));
    let v_uw = frac(ctx, 1, (0, 2, 0), (1, 1));
    [
        g[2].scale(&w_u),
        g[3].scale(&w_u),
        g[0].scale(&u_w) + g[2].scale(&v_uw),
        g[1].scale(&u_w) + g[3].scale(&v_uw),
    ]
}

/// Entries of M·B in row order, B = [[α, β], [γ, δ]].
pub fn times_b(m: &FractionMatrix) -> [FormalPolynomial; 4] {
    let ctx = m.get(0, 0).context();
    let prod = constant_matrix(m, FormalVars::AlphaDelta).mul(&formal_matrix(ctx, FormalVars::AlphaDelta));
    [prod.get(0, 0).clone(), prod.get(0, 1).clone(), prod.get(1, 0).clone(), prod.get(1, 1).clone()]
}

/// Both sides of A^(p) - H_U·A = T^(p)·(B^(p) - H_W·B) after A ↦ T·B.
pub fn glued_relations(ctx: &Arc<CurveContext>, t: &FractionMatrix) -> (FormalMatrix, FormalMatrix) {
    let (h_u, h_w) = h_matrices(ctx);
    let vars = FormalVars::AlphaDelta;
    let b = formal_matrix(ctx, vars);
    let a = constant_matrix(t, vars).mul(&b);
    let lhs = frobenius_formal(&a).sub(&constant_matrix(&h_u, vars).mul(&a));
    let t_p = constant_matrix(&t.map(|x| x.p_power()), vars);
    let rhs = t_p.mul(&frobenius_formal(&b).sub(&constant_matrix(&h_w, vars).mul(&b)));
    (lhs, rhs)
}

/// The substitution is A = T·B, it carries ad - bc to αδ - βγ, and it
/// carries the relations of A_U into the ideal of B_W.
pub fn gluing_substitution_check(ctx: &Arc<CurveContext>) -> Verdict {
    check_gluing_with(ctx, &transition_matrix(ctx))
}

pub fn check_gluing_with(ctx: &Arc<CurveContext>, t: &FractionMatrix) -> Verdict {
    let images = gluing_substitution(ctx);
    let names = ["a", "b", "c", "d"];
    for ((got, want), name) in times_b(t).iter().zip(&images).zip(names) {
        ensure(got == want, || format!("(T·B) entry {name} is {got}, substitution gives {want}"))?;
    }
    let abcd = FormalPolynomial::vars_of(ctx, FormalVars::Abcd);
    let det_a = abcd[0].clone() * abcd[3].clone() - abcd[1].clone() * abcd[2].clone();
    let g = FormalPolynomial::vars_of(ctx, FormalVars::AlphaDelta);
    let det_b = g[0].clone() * g[3].clone() - g[1].clone() * g[2].clone();
    let subbed = det_a.substitute(&images);
    ensure(subbed == det_b, || format!("ad - bc becomes {subbed}"))?;
    let (lhs, rhs) = glued_relations(ctx, t);
    ensure(lhs == rhs, || "A^(p) - H_U A differs from T^(p)(B^(p) - H_W B)".to_string())
}

/// Which membership identity of the section ring to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionIdentity {
    /// ((u²/w)α + (v²/w)γ)·w² - v²·wγ = u²·wα.
    Alpha,
    /// ((u²/w)β + (v²/w)δ)·w² - v²·wδ = u²·wβ.
    Beta,
    /// The same with u²·wδ subtracted in place of v²·wδ.
    BetaWithU,
}

/// Left side minus right side of the chosen identity.
pub fn section_ring_difference(ctx: &Arc<CurveContext>, which: SectionIdentity) -> FormalPolynomial {
    let g = FormalPolynomial::vars_of(ctx, FormalVars::AlphaDelta);
    let u2_w = frac(ctx, 1, (2, 0, 0), (0, 1));
    let v2_w = frac(ctx, 1, (0, 2, 0), (0, 1));
    let w2 = frac(ctx, 1, (0, 0, 2), (0, 0));
    let u2w = frac(ctx, 1, (2, 0, 1), (0, 0));
    let v2w = frac(ctx, 1, (0, 2, 1), (0, 0));
    let (first, second, subtracted) = match which {
        SectionIdentity::Alpha => (0, 2, &v2w),
        SectionIdentity::Beta => (1, 3, &v2w),
        SectionIdentity::BetaWithU => (1, 3, &u2w),
    };
    let generator = g[first].scale(&u2_w) + g[second].scale(&v2_w);
    generator.scale(&w2) - g[second].scale(subtracted) - g[first].scale(&u2w)
}

pub fn section_ring_identity_check(ctx: &Arc<CurveContext>) -> Verdict {
    for which in [SectionIdentity::Alpha, SectionIdentity::Beta] {
        let diff = section_ring_difference(ctx, which);
        ensure(diff.is_zero(), || format!("{which:?} identity leaves {diff}"))?;
    }
    Ok(())
}
