use std::sync::Arc;

use super::triple::SyzygyTriple;
use crate::curve::{CurveContext, CurvePolynomial};
use crate::error::Result;

/// Every explicit syzygy of the construction for one prime.
///
/// Base-curve entries (x, y, z on x^d + y^d = z^d) come first, then the
/// Fermat-curve entries (u, v, w on u^{p+1} + v^{p+1} = w^{p+1}).
#[derive(Debug, Clone)]
pub struct GeneratorCatalog {
    pub base: Arc<CurveContext>,
    pub fermat: Arc<CurveContext>,
    entries: Vec<SyzygyTriple>,
}

pub const CATALOG_NAMES: [&str; 17] = [
    "R0", "R1", "R2", "R3", "phi(e1)", "phi(e2)", "phi(e3)", "psi(e1)", "psi(e2)", "psi(e3)", "kernel",
    "s1", "s2", "s3", "s1'", "s2'", "s3'",
];

impl GeneratorCatalog {
    pub fn entries(&self) -> &[SyzygyTriple] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> &SyzygyTriple {
        self.entries
            .iter()
            .find(|t| t.name == name)
            .unwrap_or_else(|| panic!("catalog has no entry {name}"))
    }

    pub fn get_mut(&mut self, name: &str) -> &mut SyzygyTriple {
        self.entries
            .iter_mut()
            .find(|t| t.name == name)
            .unwrap_or_else(|| panic!("catalog has no entry {name}"))
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }
}

/// Shorthand for c · X^i Y^j Z^k.
pub(crate) fn mono(ctx: &Arc<CurveContext>) -> impl Fn(i64, u32, u32, u32) -> CurvePolynomial + '_ {
    move |c, i, j, k| CurvePolynomial::term(ctx, c, i, j, k)
}

/// φ on 𝒮₁(p+1) ⊕ 𝒮₂((3p+1)/2):
/// (f, g) ↦ (z^{d-1}f₁ + g₁, z^{d-1}f₂ + g₂, f₃ + z g₃).
pub fn phi_map(
    ctx: &Arc<CurveContext>,
    f: &[CurvePolynomial; 3],
    g: &[CurvePolynomial; 3],
) -> [CurvePolynomial; 3] {
    let m = mono(ctx);
    let zd1 = m(1, 0, 0, ctx.d() - 1);
    let z = m(1, 0, 0, 1);
    [
        zd1.clone() * f[0].clone() + g[0].clone(),
        zd1 * f[1].clone() + g[1].clone(),
        f[2].clone() + z * g[2].clone(),
    ]
}

/// The three displayed images φ(e₁), φ(e₂), φ(e₃) on the base curve.
pub fn phi_images(ctx: &Arc<CurveContext>) -> [[CurvePolynomial; 3]; 3] {
    let m = mono(ctx);
    let d = ctx.d();
    [
        [m(-1, 1, 0, d - 1), m(1, 0, 1, d - 1), m(1, d, 0, 0) + m(-1, 0, d, 0)],
        [m(1, 1, d - 1, 0), m(2, d, 0, 0) + m(1, 0, d, 0), m(-1, 0, d - 1, 1)],
        [m(1, d, 0, 0) + m(2, 0, d, 0), m(1, d - 1, 1, 0), m(-1, d - 1, 0, 1)],
    ]
}

/// The Koszul map ψ: e₁ ↦ (x, 0, -z), e₂ ↦ (y, z, 0), e₃ ↦ (0, x, y).
pub fn psi_images(ctx: &Arc<CurveContext>) -> [[CurvePolynomial; 3]; 3] {
    let m = mono(ctx);
    let zero = CurvePolynomial::zero(ctx);
    [
        [m(1, 1, 0, 0), zero.clone(), m(-1, 0, 0, 1)],
        [m(1, 0, 1, 0), m(1, 0, 0, 1), zero.clone()],
        [zero, m(1, 1, 0, 0), m(1, 0, 1, 0)],
    ]
}

/// s₁, s₂, s₃ of Syz(u², v², w²)(3).
pub fn s_generators(ctx: &Arc<CurveContext>) -> [[CurvePolynomial; 3]; 3] {
    let m = mono(ctx);
    let zero = CurvePolynomial::zero(ctx);
    [
        [m(-1, 0, 2, 0), m(1, 2, 0, 0), zero.clone()],
        [m(-1, 0, 0, 2), zero.clone(), m(1, 2, 0, 0)],
        [zero, m(-1, 0, 0, 2), m(1, 0, 2, 0)],
    ]
}

/// s₁', s₂', s₃' of Syz(u^{2p}, v^{2p}, w^{2p})(3p), written with 2d.
pub fn s_prime_generators(ctx: &Arc<CurveContext>) -> [[CurvePolynomial; 3]; 3] {
    let m = mono(ctx);
    let d2 = 2 * ctx.d();
    [
        [m(-1, 2, 0, d2 - 2), m(1, 0, 2, d2 - 2), m(1, d2, 0, 0) + m(-1, 0, d2, 0)],
        [m(1, 2, d2 - 2, 0), m(2, d2, 0, 0) + m(1, 0, d2, 0), m(-1, 0, d2 - 2, 2)],
        [m(1, d2, 0, 0) + m(2, 0, d2, 0), m(1, d2 - 2, 2, 0), m(-1, d2 - 2, 0, 2)],
    ]
}

pub fn build_catalog(p: u64) -> Result<GeneratorCatalog> {
    let base = CurveContext::base_curve(p)?;
    let fermat = CurveContext::fermat(p)?;
    let pi = p as i64;
    let d = base.d();
    let e = d - 1; // (p - 1) / 2
    let x = mono(&base);

    let xp = x(1, p as u32, 0, 0);
    let yp = x(1, 0, p as u32, 0);
    let zp = x(1, 0, 0, p as u32);
    let xd_plus_yd = x(1, d, 0, 0) + x(1, 0, d, 0);
    let s1_data = [xp.clone(), yp.clone(), xd_plus_yd.clone()];
    let s2_data = [xp.clone(), yp.clone(), xd_plus_yd.clone() * xd_plus_yd];

    let mut entries = vec![
        SyzygyTriple::new(
            "R0",
            [x(1, 0, e, 0), x(1, e, 0, 0), x(-1, e, e, 0)],
            s1_data.clone(),
            0,
            (3 * pi - 1) / 2,
        ),
        SyzygyTriple::new(
            "R1",
            [x(-1, 1, 0, 0), x(1, 0, 1, 0), x(1, d, 0, 0) + x(-1, 0, d, 0)],
            s1_data,
            0,
            pi + 1,
        ),
        SyzygyTriple::new(
            "R2",
            [x(1, 1, e, 0), x(2, d, 0, 0) + x(1, 0, d, 0), x(-1, 0, e, 0)],
            s2_data.clone(),
            0,
            (3 * pi + 1) / 2,
        ),
        SyzygyTriple::new(
            "R3",
            [x(1, d, 0, 0) + x(2, 0, d, 0), x(1, e, 1, 0), x(-1, e, 0, 0)],
            s2_data,
            0,
            (3 * pi + 1) / 2,
        ),
    ];

    let phi = phi_images(&base);
    let phi_data = [xp, yp, zp];
    for (i, comps) in phi.iter().enumerate() {
        entries.push(SyzygyTriple::new(
            format!("phi(e{})", i + 1),
            comps.clone(),
            phi_data.clone(),
            (3 * pi + 1) / 2,
            0,
        ));
    }

    let koszul_data = [x(1, 0, 0, 1), x(-1, 0, 1, 0), x(1, 1, 0, 0)];
    for (i, comps) in psi_images(&base).into_iter().enumerate() {
        entries.push(SyzygyTriple::new(format!("psi(e{})", i + 1), comps, koszul_data.clone(), 2, 0));
    }

    // (z, -y, x) annihilates each coordinate column of (φ(e₁), φ(e₂), φ(e₃));
    // stored against the first column.
    entries.push(SyzygyTriple::new(
        "kernel",
        koszul_data.clone(),
        [phi[0][0].clone(), phi[1][0].clone(), phi[2][0].clone()],
        0,
        d as i64 + 1,
    ));

    let u = mono(&fermat);
    let s_data = [u(1, 2, 0, 0), u(1, 0, 2, 0), u(1, 0, 0, 2)];
    for (i, comps) in s_generators(&fermat).into_iter().enumerate() {
        entries.push(SyzygyTriple::new(format!("s{}", i + 1), comps, s_data.clone(), 3, 1));
    }
    let two_p = 2 * p as u32;
    let sp_data = [u(1, two_p, 0, 0), u(1, 0, two_p, 0), u(1, 0, 0, two_p)];
    for (i, comps) in s_prime_generators(&fermat).into_iter().enumerate() {
        entries.push(SyzygyTriple::new(format!("s{}'", i + 1), comps, sp_data.clone(), 3 * pi, 1));
    }

    debug_assert_eq!(entries.iter().map(|t| t.name.as_str()).collect::<Vec<_>>(), CATALOG_NAMES);
    Ok(GeneratorCatalog { base: Arc::clone(&base), fermat: Arc::clone(&fermat), entries })
}
