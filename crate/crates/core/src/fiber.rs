//! The fiber of the cover over (u : v : w) = (1 : 0 : 1), counted by
//! enumeration in an explicit finite field, and the numerical invariants of
//! the components.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::field::{
    check_odd_prime, find_generator, make_extension_field, make_extension_field_with_cap, solve_power_equation,
    ExtFieldElement, ExtensionField,
};
use crate::ring::Ring;
use crate::verdict::{ensure, Verdict};

/// A point of the fiber; a = c^p and b = d^p are determined by c and d.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiberPoint {
    pub c: ExtFieldElement,
    pub d: ExtFieldElement,
}

impl FiberPoint {
    pub fn a(&self) -> ExtFieldElement {
        self.c.frobenius()
    }

    pub fn b(&self) -> ExtFieldElement {
        self.d.frobenius()
    }

    /// c^{p²-1} = 2, d^{p²-1} = 2 and (c d^p - c^p d)^{p-1} = -2.
    pub fn satisfies_reduced_equations(&self) -> bool {
        let field = self.c.field();
        let p = field.characteristic() as u128;
        let two = field.from_i64(2);
        let cross = self.c.clone() * self.b() - self.a() * self.d.clone();
        self.c.pow_big(p * p - 1) == two
            && self.d.pow_big(p * p - 1) == two
            && cross.pow_big(p - 1) == field.from_i64(-2)
    }

    /// 2c = a^p, 2d = b^p, a = c^p, b = d^p and (ad - bc)^{p-1} = -2, the
    /// fiber equations before c and d are known to be units.
    pub fn satisfies_fiber_ideal(&self) -> bool {
        let field = self.c.field();
        let p = field.characteristic() as u128;
        let two = field.from_i64(2);
        let (a, b) = (self.a(), self.b());
        let det = a.clone() * self.d.clone() - b.clone() * self.c.clone();
        two.clone() * self.c.clone() == a.pow_big(p)
            && two * self.d.clone() == b.pow_big(p)
            && det.pow_big(p - 1) == field.from_i64(-2)
    }
}

/// Smallest even m such that c^{p²-1} = 2 is solvable in 𝔽_{p^m}:
/// 2^{(p^m-1)/(p²-1)} = 1 in 𝔽_p. Then μ_{p²-1} ⊆ 𝔽_{p^m} as well, so every
/// solution lies there.
pub fn fiber_field_degree(p: u64) -> Result<u32> {
    check_odd_prime(p)?;
    let pb = BigUint::from(p);
    let k = &pb * &pb - 1u32;
    let two = BigUint::from(2u32);
    let m = (2..=2 * (p as u32 - 1))
        .step_by(2)
        .find(|&m| {
            let n = pb.pow(m) - 1u32;
            (&n % &k).is_zero() && two.modpow(&(n / &k), &pb).is_one()
        })
        .expect("m = 2·ord_p(2) always qualifies");
    Ok(m)
}

/// Smallest k such that x^{p-1} = -2 is solvable in 𝔽_{p^k}.
pub fn eta_field_degree(p: u64) -> Result<u32> {
    check_odd_prime(p)?;
    let pb = BigUint::from(p);
    let minus_two = BigUint::from(p - 2);
    let k = (1..=p as u32 - 1)
        .find(|&k| {
            let n = (pb.pow(k) - 1u32) / (p - 1);
            minus_two.modpow(&n, &pb).is_one()
        })
        .expect("k = ord_p(-2) always qualifies");
    Ok(k)
}

/// (p² - 1)·p·(p - 1).
pub fn fiber_formula(p: u64) -> u64 {
    (p * p - 1) * p * (p - 1)
}

/// The enumerated fiber.
#[derive(Debug, Clone)]
pub struct FiberCensus {
    pub p: u64,
    pub field: Arc<ExtensionField>,
    pub points: Vec<FiberPoint>,
}

impl FiberCensus {
    pub fn total(&self) -> u64 {
        self.points.len() as u64
    }
}

/// All (c, d) in 𝔽_{p^m} on the fiber, m = [`fiber_field_degree`]. The
/// solutions of c^{p²-1} = 2 are found by a field scan, then paired with
/// d = ζc for ζ ∈ μ_{p²-1} with ζ^{p-1} ≠ 1.
///
/// Fails with [`crate::Error::FieldTooLarge`] when p^m exceeds `cap`.
pub fn enumerate_fiber(p: u64, cap: u64) -> Result<FiberCensus> {
    let m = fiber_field_degree(p)?;
    let field = make_extension_field_with_cap(p, m as usize, cap)?;
    field.ensure_enumerable()?;
    let k = p * p - 1;
    let cs = solve_power_equation(&field, k, &field.from_i64(2))?;
    let roots = solve_power_equation(&field, k, &field.one())?;
    let twists: Vec<_> = roots.into_iter().filter(|z| !z.pow_big((p - 1) as u128).is_one()).collect();
    let mut points = Vec::with_capacity(cs.len() * twists.len());
    for c in &cs {
        for z in &twists {
            points.push(FiberPoint { c: c.clone(), d: z.clone() * c.clone() });
        }
    }
    Ok(FiberCensus { p, field, points })
}

/// Every point satisfies both forms of the fiber equations, the total
/// matches the formula, and d/c takes p² - p values each exactly p² - 1
/// times.
pub fn verify_census(census: &FiberCensus) -> Verdict {
    let p = census.p;
    for pt in &census.points {
        ensure(pt.satisfies_reduced_equations(), || format!("{pt:?} fails the reduced equations"))?;
        ensure(pt.satisfies_fiber_ideal(), || format!("{pt:?} fails the fiber equations"))?;
    }
    ensure(census.total() == fiber_formula(p), || {
        format!("census found {} points, formula gives {}", census.total(), fiber_formula(p))
    })?;
    let mut ratios: BTreeMap<u64, u64> = BTreeMap::new();
    for pt in &census.points {
        let z = pt.d.clone() * pt.c.inverse()?;
        *ratios.entry(z.index()).or_default() += 1;
    }
    ensure(ratios.len() as u64 == p * p - p, || format!("{} distinct ratios d/c", ratios.len()))?;
    ensure(ratios.values().all(|&n| n == p * p - 1), || "ratio classes of unequal size".to_string())
}

/// Numerical invariants of the components of the cover.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentStats {
    pub p: u64,
    pub component_count: u64,
    pub total_fiber: u64,
    pub degree_per_component: u64,
    pub genus_base: u64,
    pub genus_component: u64,
    pub eta_field_degree: u32,
    pub fiber_field_degree: u32,
    /// Generator of 𝔽_p^×.
    pub zeta: ExtFieldElement,
    /// Whether `total_fiber` was counted rather than taken from the formula.
    pub census_ran: bool,
}

impl ComponentStats {
    /// 2g_X - 2 = deg · (2g_Y - 2).
    pub fn hurwitz_holds(&self) -> bool {
        let lhs = 2 * self.genus_component as i128 - 2;
        let rhs = self.degree_per_component as i128 * (2 * self.genus_base as i128 - 2);
        lhs == rhs
    }
}

/// p(p-1)/2.
pub fn genus_base(p: u64) -> u64 {
    p * (p - 1) / 2
}

/// p(p²-1)(p(p-1)/2 - 1) + 1.
pub fn genus_component(p: u64) -> u64 {
    p * (p * p - 1) * (genus_base(p) - 1) + 1
}

/// Stats from the formulas, with the total taken from `census` when given.
pub fn component_stats(p: u64, census: Option<&FiberCensus>) -> Result<ComponentStats> {
    check_odd_prime(p)?;
    let fp = make_extension_field(p, 1)?;
    let component_count = p - 1;
    let (total_fiber, census_ran) = match census {
        Some(c) => (c.total(), true),
        None => (fiber_formula(p), false),
    };
    Ok(ComponentStats {
        p,
        component_count,
        total_fiber,
        degree_per_component: total_fiber / component_count,
        genus_base: genus_base(p),
        genus_component: genus_component(p),
        eta_field_degree: eta_field_degree(p)?,
        fiber_field_degree: fiber_field_degree(p)?,
        zeta: find_generator(&fp)?,
        census_ran,
    })
}

/// Component count p - 1, divisibility of the total, degree p(p² - 1) and
/// Hurwitz.
pub fn verify_stats(stats: &ComponentStats) -> Verdict {
    let p = stats.p;
    ensure(stats.component_count == p - 1, || format!("{} components", stats.component_count))?;
    ensure(stats.total_fiber % stats.component_count == 0, || "total not divisible by p - 1".to_string())?;
    ensure(stats.degree_per_component == p * (p * p - 1), || {
        format!("degree {} ≠ p(p²-1)", stats.degree_per_component)
    })?;
    ensure(stats.hurwitz_holds(), || format!("Hurwitz fails for genus {}", stats.genus_component))
}
