use std::collections::BTreeMap;
use std::sync::Arc;

use super::charts::{h_matrices, transition_matrix, FractionMatrix};
use super::gluing::gluing_substitution;
use crate::curve::{CurveContext, CurvePolynomial, FormalPolynomial, FormalVars, LocalFraction, Monomial};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::verdict::{ensure, Verdict};

pub type FormalMatrix = Matrix<FormalPolynomial>;

/// Everything needed to glue the cover: the transition matrix, the two
/// Frobenius matrices, the four defining relations on each chart and the
/// substitution a, b, c, d ↦ entries of T·B.
#[derive(Debug, Clone)]
pub struct CoverData {
    pub ctx: Arc<CurveContext>,
    pub t: FractionMatrix,
    pub h_u: FractionMatrix,
    pub h_w: FractionMatrix,
    /// Entries (1,1), (1,2), (2,1), (2,2) of u^{p+1}·(A^(p) adj A - det A · H_U).
    pub relations_u: [FormalPolynomial; 4],
    /// Same for B on W, cleared by w^{p+1}.
    pub relations_w: [FormalPolynomial; 4],
    pub substitution: [FormalPolynomial; 4],
}

/// [[a, b], [c, d]] in the first four variables of `vars`.
pub fn formal_matrix(ctx: &Arc<CurveContext>, vars: FormalVars) -> FormalMatrix {
    let v = FormalPolynomial::vars_of(ctx, vars);
    Matrix::from_rows(vec![vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]])
}

pub fn constant_matrix(m: &FractionMatrix, vars: FormalVars) -> FormalMatrix {
    m.map(|x| FormalPolynomial::constant(vars, x.clone()))
}

pub fn frobenius_formal(m: &FormalMatrix) -> FormalMatrix {
    let p = m.get(0, 0).context().p();
    m.map(|x| x.pow(p))
}

fn entries(m: &FormalMatrix) -> [FormalPolynomial; 4] {
    [m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()]
}

/// A^(p)·adj(A) - det(A)·H, entries in row order.
pub fn relation_matrix(h: &FractionMatrix, vars: FormalVars) -> FormalMatrix {
    let ctx = h.get(0, 0).context();
    let a = formal_matrix(ctx, vars);
    let det = a.det();
    frobenius_formal(&a).mul(&a.adjugate()).sub(&constant_matrix(h, vars).scale(&det))
}

/// A^(p)·adj(A) - D·H over {a, b, c, d, D}.
pub fn relation_matrix_with_det_symbol(h: &FractionMatrix) -> FormalMatrix {
    let ctx = h.get(0, 0).context();
    let a = formal_matrix(ctx, FormalVars::Abcd);
    let lead = frobenius_formal(&a).mul(&a.adjugate()).map(|x| x.with_det_symbol());
    let d = FormalPolynomial::var(ctx, FormalVars::AbcdDet, 4);
    lead.sub(&constant_matrix(h, FormalVars::AbcdDet).scale(&d))
}

/// X^k as a constant of the given variable set.
fn clearing(ctx: &Arc<CurveContext>, vars: FormalVars, m: Monomial) -> FormalPolynomial {
    FormalPolynomial::constant(vars, LocalFraction::from_poly(CurvePolynomial::term(ctx, 1, m.0, m.1, m.2)))
}

fn cleared(m: &FormalMatrix, factor: &FormalPolynomial) -> [FormalPolynomial; 4] {
    entries(m).map(|x| x * factor.clone())
}

pub fn u_clearing(ctx: &Arc<CurveContext>, vars: FormalVars) -> FormalPolynomial {
    clearing(ctx, vars, Monomial(ctx.p() as u32 + 1, 0, 0))
}

pub fn w_clearing(ctx: &Arc<CurveContext>, vars: FormalVars) -> FormalPolynomial {
    clearing(ctx, vars, Monomial(0, 0, ctx.p() as u32 + 1))
}

pub fn build_relations(ctx: &Arc<CurveContext>) -> CoverData {
    let t = transition_matrix(ctx);
    let (h_u, h_w) = h_matrices(ctx);
    let relations_u = cleared(&relation_matrix(&h_u, FormalVars::Abcd), &u_clearing(ctx, FormalVars::Abcd));
    let relations_w =
        cleared(&relation_matrix(&h_w, FormalVars::AlphaDelta), &w_clearing(ctx, FormalVars::AlphaDelta));
    let substitution = gluing_substitution(ctx);
    CoverData { ctx: Arc::clone(ctx), t, h_u, h_w, relations_u, relations_w, substitution }
}

pub fn build_cover(p: u64) -> Result<CoverData> {
    Ok(build_relations(&CurveContext::fermat(p)?))
}

/// The displayed presentation of A_U: numerators g₁..g₄ over {a, b, c, d}
/// and the fractions h₁..h₄ they are set equal to after dividing by det A.
pub fn displayed_presentation(ctx: &Arc<CurveContext>) -> [(FormalPolynomial, LocalFraction); 4] {
    let q = ctx.p() as u32;
    let v = FormalPolynomial::vars_of(ctx, FormalVars::Abcd);
    let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
    let pw = |x: &FormalPolynomial| x.pow(q as u64);
    let f = |c: i64, num, den| LocalFraction::monomial(ctx, c, num, den);
    let v_ratio = f(1, (0, q + 1, 0), (q + 1, 0));
    let one = LocalFraction::constant(ctx, 1);
    let two = LocalFraction::constant(ctx, 2);
    [
        (
            pw(a) * d.clone() - c.clone() * pw(b),
            f(1, (0, 2, 0), (2, 0)) * f(1, (0, 0, q - 1), (q - 1, 0)),
        ),
        (pw(b) * a.clone() - pw(a) * b.clone(), two + v_ratio.clone()),
        (pw(c) * d.clone() - c.clone() * pw(d), one - v_ratio),
        (
            pw(d) * a.clone() - b.clone() * pw(c),
            -(f(1, (0, 0, 2), (2, 0)) * f(1, (0, q - 1, 0), (q - 1, 0))),
        ),
    ]
}

/// The stored relations agree with u^{p+1}·(gᵢ - det A · hᵢ).
pub fn check_relations(data: &CoverData) -> Verdict {
    let ctx = &data.ctx;
    let v = FormalPolynomial::vars_of(ctx, FormalVars::Abcd);
    let det = v[0].clone() * v[3].clone() - v[1].clone() * v[2].clone();
    let factor = u_clearing(ctx, FormalVars::Abcd);
    for (i, ((g, h), rel)) in displayed_presentation(ctx).into_iter().zip(&data.relations_u).enumerate() {
        let expected = (g - det.scale(&h)) * factor.clone();
        ensure(&expected == rel, || format!("relation {} of A_U is {rel}, expected {expected}", i + 1))?;
    }
    for (chart, rels) in [("A_U", &data.relations_u), ("B_W", &data.relations_w)] {
        for (i, rel) in rels.iter().enumerate() {
            ensure(rel.terms().all(|(_, c)| c.as_polynomial().is_some()), || {
                format!("relation {} of {chart} keeps a denominator", i + 1)
            })?;
        }
    }
    Ok(())
}

/// Coefficients in k[u, v]/(u^{p+1} + v^{p+1}), keyed by (i, j) of u^i v^j
/// with j ≤ p.
pub type W0Coefficient = BTreeMap<(u32, u32), u64>;
pub type W0Form = BTreeMap<Vec<u32>, W0Coefficient>;

/// Sets w = 0 in a polynomial written in normal form and reduces
/// v^{p+1} to -u^{p+1}.
pub fn restrict_w0(f: &CurvePolynomial) -> W0Coefficient {
    let ctx = f.context();
    let (p, e) = (ctx.p(), ctx.relation_degree());
    let mut out = W0Coefficient::new();
    for (m, &c) in f.terms() {
        if m.2 > 0 {
            continue;
        }
        let (q, r) = (m.1 / e, m.1 % e);
        let c = if q % 2 == 1 { (p - c) % p } else { c };
        let key = (m.0 + q * e, r);
        let entry = out.entry(key).or_insert(0);
        *entry = (*entry + c) % p;
        if *entry == 0 {
            out.remove(&key);
        }
    }
    out
}

/// [`restrict_w0`] on every coefficient; the coefficients must be
/// polynomials.
pub fn specialize_form(f: &FormalPolynomial) -> W0Form {
    let mut out = W0Form::new();
    for (e, c) in f.terms() {
        let poly = c.as_polynomial().expect("denominator-free coefficient");
        let r = restrict_w0(poly);
        if !r.is_empty() {
            out.insert(e.clone(), r);
        }
    }
    out
}

/// The four generators at w = 0 over {a, b, c, d, D}:
/// a^p d - c b^p, b^p a - a^p b - D, c^p d - c d^p - 2D, d^p a - b c^p.
pub fn w0_generators(ctx: &Arc<CurveContext>) -> [FormalPolynomial; 4] {
    let p = ctx.p();
    let v = FormalPolynomial::vars_of(ctx, FormalVars::AbcdDet);
    let (a, b, c, d, det) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    [
        a.pow(p) * d.clone() - c.clone() * b.pow(p),
        b.pow(p) * a.clone() - a.pow(p) * b.clone() - det.clone(),
        c.pow(p) * d.clone() - c.clone() * d.pow(p) - det.clone() - det.clone(),
        d.pow(p) * a.clone() - b.clone() * c.pow(p),
    ]
}

/// The relations of A_U, with det A kept as a unit symbol D, become
/// u^{p+1} times the generators of [`w0_generators`] once w = 0. None of
/// those generators has a constant term, even after D ↦ ad - bc.
pub fn specialize_w0(ctx: &Arc<CurveContext>) -> Verdict {
    let (h_u, _) = h_matrices(ctx);
    let factor = u_clearing(ctx, FormalVars::AbcdDet);
    let rels = cleared(&relation_matrix_with_det_symbol(&h_u), &factor);
    let v = FormalPolynomial::vars_of(ctx, FormalVars::AbcdDet);
    let det = v[0].clone() * v[3].clone() - v[1].clone() * v[2].clone();
    let images = [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), det];
    for (i, (rel, gen)) in rels.iter().zip(w0_generators(ctx)).enumerate() {
        let got = specialize_form(rel);
        let expected = specialize_form(&(gen.clone() * factor.clone()));
        ensure(got == expected, || format!("relation {} at w = 0 is {got:?}, expected {expected:?}", i + 1))?;
        let expanded = gen.substitute(&images);
        ensure(expanded.coefficient(&[0; 5]).is_none(), || {
            format!("generator {} has a constant term", i + 1)
        })?;
    }
    Ok(())
}

/// det(A^(p)) = (det A)^p, det H_U = det H_W = -2 and
/// det(H_U·A) = det H_U · det A.
pub fn det_periodicity_check(ctx: &Arc<CurveContext>) -> Verdict {
    let p = ctx.p();
    let a = formal_matrix(ctx, FormalVars::Abcd);
    let det = a.det();
    let lhs = frobenius_formal(&a).det();
    ensure(lhs == det.pow(p), || "det(A^(p)) differs from (det A)^p".to_string())?;

    let (h_u, h_w) = h_matrices(ctx);
    let minus_two = LocalFraction::constant(ctx, -2);
    ensure(h_u.det() == minus_two, || format!("det H_U = {}", h_u.det()))?;
    ensure(h_w.det() == minus_two, || format!("det H_W = {}", h_w.det()))?;

    let h = constant_matrix(&h_u, FormalVars::Abcd);
    let product = h.mul(&a).det();
    let expected = det.scale(&minus_two);
    ensure(product == expected, || format!("det(H_U A) = {product}, expected {expected}"))
}
