//! Numerical cross-checks: every symbolic identity is re-evaluated at
//! random points of the curves over 𝔽_{p²}, using only field arithmetic on
//! the evaluated pieces.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cover::{
    build_relations, gluing_substitution, h_matrices, relation_matrix_with_det_symbol, transition_matrix,
    u_clearing, w0_generators, ChartBases, FractionMatrix, FractionTriple,
};
use crate::curve::{random_curve_points, random_element, CurvePoint, CurvePolynomial, FormalVars};
use crate::error::Result;
use crate::field::{make_extension_field, ExtFieldElement, ExtensionField};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::syzygy::{build_catalog, psi_kernel_vector, AlphaMap, GeneratorCatalog};
use crate::verdict::{ensure, Mismatch, Verdict};

pub const MIN_POINTS: usize = 20;

type Values = Matrix<ExtFieldElement>;

/// Random points and assignments shared by all oracle checks of one prime.
pub struct Oracle {
    pub field: Arc<ExtensionField>,
    pub catalog: GeneratorCatalog,
    /// Points of the Fermat curve with u, w ≠ 0.
    pub fermat_points: Vec<CurvePoint>,
    /// Points of the base curve.
    pub base_points: Vec<CurvePoint>,
    /// Points of the Fermat curve with w = 0 and u ≠ 0.
    pub w0_points: Vec<CurvePoint>,
    /// One assignment of four field elements per Fermat point.
    pub assignments: Vec<[ExtFieldElement; 4]>,
}

impl Oracle {
    pub fn new(p: u64, points: usize, seed: u64) -> Result<Self> {
        let field = make_extension_field(p, 2)?;
        let catalog = build_catalog(p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fermat_points = random_curve_points(&catalog.fermat, &field, points, true, &mut rng)?;
        let base_points = random_curve_points(&catalog.base, &field, points, false, &mut rng)?;
        let w0_points: Vec<CurvePoint> = crate::curve::curve_points(&catalog.fermat, &field)?
            .into_iter()
            .filter(|pt| pt[2].is_zero() && !pt[0].is_zero())
            .take(points)
            .collect();
        let assignments = (0..points)
            .map(|_| std::array::from_fn(|_| random_element(&field, &mut rng)))
            .collect();
        Ok(Self { field, catalog, fermat_points, base_points, w0_points, assignments })
    }

    fn c(&self, x: i64) -> ExtFieldElement {
        self.field.from_i64(x)
    }

    fn eval(&self, f: &CurvePolynomial, pt: &CurvePoint) -> std::result::Result<ExtFieldElement, Mismatch> {
        Ok(f.evaluate(pt)?)
    }

    fn eval_matrix(&self, m: &FractionMatrix, pt: &CurvePoint) -> std::result::Result<Values, Mismatch> {
        Ok(m.try_map(|x| x.evaluate(pt))?)
    }

    fn eval_triple(&self, t: &FractionTriple, pt: &CurvePoint) -> std::result::Result<[ExtFieldElement; 3], Mismatch> {
        let v = t.iter().map(|x| x.evaluate(pt)).collect::<Result<Vec<_>>>()?;
        Ok([v[0].clone(), v[1].clone(), v[2].clone()])
    }

    fn matrix_of(&self, a: &[ExtFieldElement; 4]) -> Values {
        Matrix::from_rows(vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]])
    }

    /// Σ aᵢ(P)·fᵢ(P) = 0 for every catalog entry.
    pub fn catalog(&self) -> Verdict {
        for t in self.catalog.entries() {
            let fermat_side = Arc::ptr_eq(t.data[0].context(), &self.catalog.fermat);
            let pts = if fermat_side { &self.fermat_points } else { &self.base_points };
            for pt in pts {
                let mut sum = self.c(0);
                for (a, f) in t.components.iter().zip(&t.data) {
                    sum = sum + self.eval(a, pt)? * self.eval(f, pt)?;
                }
                ensure(sum.is_zero(), || format!("{} pairs to {sum} at {pt:?}", t.name))?;
            }
        }
        Ok(())
    }

    fn combination_vanishes(&self, label: &str, coeffs: &[CurvePolynomial; 3], vectors: &[[CurvePolynomial; 3]; 3], pts: &[CurvePoint]) -> Verdict {
        for pt in pts {
            for k in 0..3 {
                let mut sum = self.c(0);
                for i in 0..3 {
                    sum = sum + self.eval(&coeffs[i], pt)? * self.eval(&vectors[i][k], pt)?;
                }
                ensure(sum.is_zero(), || format!("{label}: component {} is {sum} at {pt:?}", k + 1))?;
            }
        }
        Ok(())
    }

    /// Kernel relations of φ and ψ and both sides of the α relation.
    pub fn kernels(&self) -> Verdict {
        let cat = &self.catalog;
        let get3 = |prefix: &str| -> [[CurvePolynomial; 3]; 3] {
            std::array::from_fn(|i| cat.get(&format!("{prefix}(e{})", i + 1)).components.clone())
        };
        let kernel = &cat.get("kernel").components;
        self.combination_vanishes("φ kernel", kernel, &get3("phi"), &self.base_points)?;
        self.combination_vanishes("ψ kernel", &psi_kernel_vector(&cat.base), &get3("psi"), &self.base_points)?;
        let map = AlphaMap::new(cat);
        self.combination_vanishes("α on base curve", kernel, &map.base_images, &self.base_points)?;
        let rel = {
            let f = &cat.fermat;
            [
                CurvePolynomial::term(f, 1, 0, 0, 2),
                CurvePolynomial::term(f, -1, 0, 2, 0),
                CurvePolynomial::term(f, 1, 2, 0, 0),
            ]
        };
        self.combination_vanishes("relation among s'", &rel, &map.sources, &self.fermat_points)?;
        self.combination_vanishes("relation among s", &rel, &map.images, &self.fermat_points)
    }

    fn change_of_basis(&self, label: &str, m: &FractionMatrix, from: &[FractionTriple], to: &[FractionTriple]) -> Verdict {
        for pt in &self.fermat_points {
            let mv = self.eval_matrix(m, pt)?;
            for (j, target) in to.iter().enumerate() {
                let want = self.eval_triple(target, pt)?;
                for k in 0..3 {
                    let mut sum = self.c(0);
                    for (i, f) in from.iter().enumerate() {
                        sum = sum + mv.get(i, j).clone() * self.eval_triple(f, pt)?[k].clone();
                    }
                    ensure(sum == want[k], || format!("{label}: column {} differs at {pt:?}", j + 1))?;
                }
            }
        }
        Ok(())
    }

    /// T, H_U and H_W as changes of basis, their determinants and the cocycle
    /// condition.
    pub fn charts(&self) -> Verdict {
        let ctx = &self.catalog.fermat;
        let t = transition_matrix(ctx);
        let (h_u, h_w) = h_matrices(ctx);
        let bases = ChartBases::new(ctx);
        self.change_of_basis("T", &t, &bases.u, &bases.w)?;
        self.change_of_basis("H_U", &h_u, &bases.u_frobenius, &bases.u_prime)?;
        self.change_of_basis("H_W", &h_w, &bases.w_frobenius, &bases.w_prime)?;
        let p = ctx.p() as u128;
        for pt in &self.fermat_points {
            let tv = self.eval_matrix(&t, pt)?;
            let hu = self.eval_matrix(&h_u, pt)?;
            let hw = self.eval_matrix(&h_w, pt)?;
            ensure(tv.det().is_one(), || format!("det T ≠ 1 at {pt:?}"))?;
            ensure(hu.det() == self.c(-2), || format!("det H_U ≠ -2 at {pt:?}"))?;
            ensure(hw.det() == self.c(-2), || format!("det H_W ≠ -2 at {pt:?}"))?;
            let t_p = tv.map(|x| x.pow_big(p));
            let rhs = t_p.mul(&hw).mul(&tv.inverse()?);
            ensure(rhs == hu, || format!("cocycle fails at {pt:?}"))?;
        }
        Ok(())
    }

    /// The stored relations of both charts against A^(p)·adj A - det A·H
    /// computed from field values.
    pub fn relations(&self) -> Verdict {
        let ctx = &self.catalog.fermat;
        let data = build_relations(ctx);
        let p = ctx.p() as u128;
        for (pt, assign) in self.fermat_points.iter().zip(&self.assignments) {
            let a = self.matrix_of(assign);
            for (h, rels, clear) in [
                (&data.h_u, &data.relations_u, pt[0].pow_big(p + 1)),
                (&data.h_w, &data.relations_w, pt[2].pow_big(p + 1)),
            ] {
                let hv = self.eval_matrix(h, pt)?;
                let expected =
                    a.map(|x| x.pow_big(p)).mul(&a.adjugate()).sub(&hv.scale(&a.det())).scale(&clear);
                for (i, rel) in rels.iter().enumerate() {
                    let got = rel.evaluate(pt, assign)?;
                    ensure(&got == expected.get(i / 2, i % 2), || format!("relation {} differs at {pt:?}", i + 1))?;
                }
            }
        }
        Ok(())
    }

    /// A = T·B, det A = det B, and the two membership identities.
    pub fn gluing(&self) -> Verdict {
        let ctx = &self.catalog.fermat;
        let t = transition_matrix(ctx);
        let subs = gluing_substitution(ctx);
        for (pt, greek) in self.fermat_points.iter().zip(&self.assignments) {
            let b = self.matrix_of(greek);
            let a = self.eval_matrix(&t, pt)?.mul(&b);
            for (i, s) in subs.iter().enumerate() {
                ensure(&s.evaluate(pt, greek)? == a.get(i / 2, i % 2), || format!("entry {} of T·B at {pt:?}", i + 1))?;
            }
            ensure(a.det() == b.det(), || format!("det A ≠ det B at {pt:?}"))?;

            let [u, v, w] = pt.clone();
            let [al, be, ga, de] = greek.clone();
            let w_inv = w.inverse()?;
            let (u2, v2, w2) = (u.clone() * u.clone(), v.clone() * v.clone(), w.clone() * w.clone());
            for (x, y) in [(al, ga), (be, de)] {
                let generator = (u2.clone() * x.clone() + v2.clone() * y.clone()) * w_inv.clone();
                let lhs = generator * w2.clone() - v2.clone() * w.clone() * y;
                ensure(lhs == u2.clone() * w.clone() * x, || format!("membership identity fails at {pt:?}"))?;
            }
        }
        Ok(())
    }

    /// det(A^(p)) = (det A)^p and det(H_U·A) = -2·det A on values.
    pub fn determinants(&self) -> Verdict {
        let ctx = &self.catalog.fermat;
        let (h_u, _) = h_matrices(ctx);
        let p = ctx.p() as u128;
        for (pt, assign) in self.fermat_points.iter().zip(&self.assignments) {
            let a = self.matrix_of(assign);
            let a_p = a.map(|x| x.pow_big(p));
            ensure(a_p.det() == a.det().pow_big(p), || format!("det(A^(p)) ≠ (det A)^p for {assign:?}"))?;
            let hv = self.eval_matrix(&h_u, pt)?;
            ensure(hv.mul(&a).det() == self.c(-2) * a.det(), || format!("det(H_U A) ≠ -2 det A at {pt:?}"))?;
        }
        Ok(())
    }

    /// At points with w = 0 the relations with det A kept as a symbol agree
    /// with u^{p+1} times the four reduced generators.
    pub fn w0(&self) -> Verdict {
        let ctx = &self.catalog.fermat;
        let (h_u, _) = h_matrices(ctx);
        let factor = u_clearing(ctx, FormalVars::AbcdDet);
        let rels = relation_matrix_with_det_symbol(&h_u);
        let gens = w0_generators(ctx);
        ensure(!self.w0_points.is_empty(), || "no points with w = 0".to_string())?;
        for (pt, assign) in self.w0_points.iter().zip(&self.assignments) {
            let mut full: Vec<ExtFieldElement> = assign.to_vec();
            full.push(self.c(1) + assign[0].clone());
            for (i, gen) in gens.iter().enumerate() {
                let rel = rels.get(i / 2, i % 2).clone() * factor.clone();
                let want = (gen.clone() * factor.clone()).evaluate(pt, &full)?;
                ensure(rel.evaluate(pt, &full)? == want, || format!("w = 0 relation {} differs at {pt:?}", i + 1))?;
            }
        }
        Ok(())
    }

    /// Every oracle check with its name.
    pub fn run_all(&self) -> Vec<(&'static str, Verdict)> {
        vec![
            ("catalog", self.catalog()),
            ("kernels", self.kernels()),
            ("charts", self.charts()),
            ("relations", self.relations()),
            ("gluing", self.gluing()),
            ("determinants", self.determinants()),
            ("w0", self.w0()),
        ]
    }
}

/// Runs every oracle check at `points` random points per curve.
pub fn cross_check(p: u64, points: usize, seed: u64) -> Verdict {
    let oracle = Oracle::new(p, points.max(MIN_POINTS), seed)?;
    for (name, verdict) in oracle.run_all() {
        verdict.map_err(|m| Mismatch(format!("{name}: {m}")))?;
    }
    Ok(())
}
