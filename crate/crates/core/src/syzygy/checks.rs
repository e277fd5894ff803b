use std::sync::Arc;

use super::catalog::{mono, phi_images, phi_map, psi_images, s_generators, GeneratorCatalog};
use super::triple::{check_syzygy, SyzygyTriple};
use crate::curve::{CurveContext, CurvePolynomial, Monomial};
use crate::matrix::Matrix;
use crate::verdict::{ensure, Mismatch, Verdict};

type Triple = [CurvePolynomial; 3];

fn show(t: &Triple) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

/// Σ cᵢ·vᵢ for three vectors vᵢ and scalars cᵢ.
pub fn combine(coeffs: &Triple, vectors: &[Triple; 3]) -> Triple {
    std::array::from_fn(|k| {
        (0..3)
            .map(|i| coeffs[i].clone() * vectors[i][k].clone())
            .reduce(|a, b| a + b)
            .expect("three terms")
    })
}

fn is_zero_triple(t: &Triple) -> bool {
    t.iter().all(|c| c.is_zero())
}

/// Runs [`check_syzygy`] on every entry and confirms that the displayed
/// φ(eᵢ) are the images of R₁, R₂, R₃ under φ.
pub fn check_catalog(cat: &GeneratorCatalog) -> Verdict {
    for t in cat.entries() {
        ensure(check_syzygy(t)?, || format!("{t} is not a syzygy of total degree {}", t.total_degree))?;
    }
    let zero = CurvePolynomial::zero(&cat.base);
    let z3 = [zero.clone(), zero.clone(), zero];
    let sources = [
        phi_map(&cat.base, &cat.get("R1").components, &z3),
        phi_map(&cat.base, &z3, &cat.get("R2").components),
        phi_map(&cat.base, &z3, &cat.get("R3").components),
    ];
    for (i, img) in sources.iter().enumerate() {
        let listed = &cat.get(&format!("phi(e{})", i + 1)).components;
        ensure(img == listed, || format!("phi(e{}) = {} but the map gives {}", i + 1, show(listed), show(img)))?;
    }
    Ok(())
}

/// The kernel vector of e ↦ ψ(e) for the listed ψ images.
pub fn psi_kernel_vector(ctx: &Arc<CurveContext>) -> Triple {
    let m = mono(ctx);
    [m(1, 0, 1, 0), m(-1, 1, 0, 0), m(1, 0, 0, 1)]
}

/// (z, -y, x) kills the φ images; (y, -x, z) kills the ψ images.
pub fn check_kernel_relation(cat: &GeneratorCatalog) -> Verdict {
    let phi: [Triple; 3] = std::array::from_fn(|i| cat.get(&format!("phi(e{})", i + 1)).components.clone());
    let kernel = &cat.get("kernel").components;
    let image = combine(kernel, &phi);
    ensure(is_zero_triple(&image), || format!("(z,-y,x) maps to {} under φ", show(&image)))?;

    let psi: [Triple; 3] = std::array::from_fn(|i| cat.get(&format!("psi(e{})", i + 1)).components.clone());
    let image = combine(&psi_kernel_vector(&cat.base), &psi);
    ensure(is_zero_triple(&image), || format!("(y,-x,z) maps to {} under ψ", show(&image)))
}

/// The Frobenius periodicity on generators, written on both curves.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMap {
    /// Generators of Syz(x^p, y^p, z^p) and their images in Syz(x, y, z).
    pub base_sources: [Triple; 3],
    pub base_images: [Triple; 3],
    /// Generators of Syz(u^{2p}, v^{2p}, w^{2p}) and their images in Syz(u², v², w²).
    pub sources: [Triple; 3],
    pub images: [Triple; 3],
}

impl AlphaMap {
    pub fn new(cat: &GeneratorCatalog) -> Self {
        let (base, fermat) = (&cat.base, &cat.fermat);
        let x = mono(base);
        let zero = CurvePolynomial::zero(base);
        let base_images = [
            [x(-1, 0, 1, 0), x(1, 1, 0, 0), zero.clone()],
            [x(-1, 0, 0, 1), zero.clone(), x(1, 1, 0, 0)],
            [zero, x(-1, 0, 0, 1), x(1, 0, 1, 0)],
        ];
        let u = mono(fermat);
        let q = cat.p() as u32;
        let sources = [
            [u(-1, 2, 0, q - 1), u(1, 0, 2, q - 1), u(1, q + 1, 0, 0) + u(-1, 0, q + 1, 0)],
            [u(1, 2, q - 1, 0), u(2, q + 1, 0, 0) + u(1, 0, q + 1, 0), u(-1, 0, q - 1, 2)],
            [u(1, q + 1, 0, 0) + u(2, 0, q + 1, 0), u(1, q - 1, 2, 0), u(-1, q - 1, 0, 2)],
        ];
        Self { base_sources: phi_images(base), base_images, sources, images: s_generators(fermat) }
    }
}

/// The parts of [`check_alpha`], in the order they run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaStep {
    /// Images are syzygies of (u², v², w²) of total degree 1.
    Images,
    /// Sources are syzygies of (u^{2p}, v^{2p}, w^{2p}) of total degree 1.
    Sources,
    /// The relation w²s₁' - v²s₂' + u²s₃' = 0 is carried to w²s₁ - v²s₂ + u²s₃ = 0.
    Relation,
    /// (a₁, a₂, a₃) ↦ (a₃, -a₂, a₁) turns each ψ(eᵢ) into a syzygy of (x, y, z).
    Swap,
    /// On the base curve: images are syzygies of (x, y, z) and the kernel
    /// relation (z, -y, x) is carried to zero.
    BaseCurve,
    /// x ↦ u², y ↦ v², z ↦ w² turns the base-curve map into the Fermat one.
    Substitution,
}

impl AlphaStep {
    pub const ALL: [AlphaStep; 6] = [
        AlphaStep::Images,
        AlphaStep::Sources,
        AlphaStep::Relation,
        AlphaStep::Swap,
        AlphaStep::BaseCurve,
        AlphaStep::Substitution,
    ];
}

fn is_syzygy(name: &str, comps: &Triple, data: &Triple, twist: i64, total: i64) -> Verdict {
    let t = SyzygyTriple::new(name, comps.clone(), data.clone(), twist, total);
    ensure(check_syzygy(&t)?, || format!("{t} fails against ({}, {}, {})", data[0], data[1], data[2]))
}

fn squares(ctx: &Arc<CurveContext>, k: u32) -> Triple {
    let m = mono(ctx);
    [m(1, k, 0, 0), m(1, 0, k, 0), m(1, 0, 0, k)]
}

/// Maps a base-curve polynomial to the Fermat curve along x ↦ u², y ↦ v², z ↦ w².
pub fn pull_back(f: &CurvePolynomial, fermat: &Arc<CurveContext>) -> CurvePolynomial {
    f.map_monomials(fermat, |m| Monomial(2 * m.0, 2 * m.1, 2 * m.2))
}

pub fn alpha_step(cat: &GeneratorCatalog, map: &AlphaMap, step: AlphaStep) -> Verdict {
    let p = cat.p() as i64;
    let fermat = &cat.fermat;
    let base = &cat.base;
    match step {
        AlphaStep::Images => {
            let data = squares(fermat, 2);
            for (i, img) in map.images.iter().enumerate() {
                is_syzygy(&format!("alpha(s{}')", i + 1), img, &data, 3, 1)?;
            }
            Ok(())
        }
        AlphaStep::Sources => {
            let data = squares(fermat, 2 * cat.p() as u32);
            for (i, src) in map.sources.iter().enumerate() {
                is_syzygy(&format!("s{}'", i + 1), src, &data, 3 * p, 1)?;
            }
            Ok(())
        }
        AlphaStep::Relation => {
            let rel = {
                let m = mono(fermat);
                [m(1, 0, 0, 2), m(-1, 0, 2, 0), m(1, 2, 0, 0)]
            };
            let lhs = combine(&rel, &map.sources);
            ensure(is_zero_triple(&lhs), || format!("w²s₁' - v²s₂' + u²s₃' = {}", show(&lhs)))?;
            let rhs = combine(&rel, &map.images);
            ensure(is_zero_triple(&rhs), || format!("w²α(s₁') - v²α(s₂') + u²α(s₃') = {}", show(&rhs)))
        }
        AlphaStep::Swap => {
            let data = squares(base, 1);
            for (i, t) in psi_images(base).iter().enumerate() {
                let swapped = [t[2].clone(), -t[1].clone(), t[0].clone()];
                is_syzygy(&format!("swap(psi(e{}))", i + 1), &swapped, &data, 2, 0)?;
            }
            Ok(())
        }
        AlphaStep::BaseCurve => {
            let data = squares(base, 1);
            for (i, img) in map.base_images.iter().enumerate() {
                is_syzygy(&format!("alpha(phi(e{}))", i + 1), img, &data, 2, 0)?;
            }
            let kernel = cat.get("kernel").components.clone();
            let src = combine(&kernel, &map.base_sources);
            ensure(is_zero_triple(&src), || format!("(z,-y,x) maps to {} under φ", show(&src)))?;
            let img = combine(&kernel, &map.base_images);
            ensure(is_zero_triple(&img), || format!("(z,-y,x) maps to {} under α∘φ", show(&img)))
        }
        AlphaStep::Substitution => {
            let pairs = map.base_sources.iter().zip(&map.sources).chain(map.base_images.iter().zip(&map.images));
            for (b, y) in pairs {
                let pulled: Triple = std::array::from_fn(|k| pull_back(&b[k], fermat));
                ensure(&pulled == y, || format!("{} pulls back to {}, expected {}", show(b), show(&pulled), show(y)))?;
            }
            Ok(())
        }
    }
}

/// Every [`AlphaStep`] with its outcome.
pub fn alpha_steps(cat: &GeneratorCatalog, map: &AlphaMap) -> Vec<(AlphaStep, Verdict)> {
    AlphaStep::ALL.iter().map(|&s| (s, alpha_step(cat, map, s))).collect()
}

/// Well-definedness of the Frobenius periodicity on generators.
pub fn check_alpha(cat: &GeneratorCatalog) -> Verdict {
    let map = AlphaMap::new(cat);
    for (step, verdict) in alpha_steps(cat, &map) {
        verdict.map_err(|m| Mismatch(format!("{step:?}: {m}")))?;
    }
    Ok(())
}

/// True iff some 2×2 minor of the matrix with rows `a` and `b` is nonzero.
pub fn rows_independent(a: &SyzygyTriple, b: &SyzygyTriple) -> bool {
    let m = Matrix::from_rows(vec![a.components.to_vec(), b.components.to_vec()]);
    m.minors(2).iter().any(|x| !x.is_zero())
}

/// R₀, R₁ and R₂, R₃ are linearly independent.
pub fn check_independence(cat: &GeneratorCatalog) -> Verdict {
    for (a, b) in [("R0", "R1"), ("R2", "R3")] {
        ensure(rows_independent(cat.get(a), cat.get(b)), || format!("{a} and {b} are dependent"))?;
    }
    Ok(())
}

/// One copy of `t` per term of each component, with that term's sign flipped.
pub fn sign_flip_mutants(t: &SyzygyTriple) -> Vec<SyzygyTriple> {
    let mut out = Vec::new();
    for k in 0..3 {
        let comp = &t.components[k];
        let ctx = comp.context();
        for (n, (m, &c)) in comp.terms().enumerate() {
            let twice = CurvePolynomial::term(ctx, 2 * c as i64, m.0, m.1, m.2);
            let mut mutant = t.clone();
            mutant.components[k] = comp.clone() - twice;
            mutant.name = format!("{} component {} term {}", t.name, k + 1, n + 1);
            out.push(mutant);
        }
    }
    out
}

/// Every single-sign mutant of every catalog entry is rejected.
pub fn check_mutation_sensitivity(cat: &GeneratorCatalog) -> Verdict {
    for t in cat.entries() {
        for mutant in sign_flip_mutants(t) {
            ensure(!check_syzygy(&mutant).unwrap_or(false), || format!("sign flip {} still passes", mutant.name))?;
        }
    }
    Ok(())
}
