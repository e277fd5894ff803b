use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;

use super::context::CurveContext;
use crate::error::{Error, Result};
use crate::field::{ExtFieldElement, ExtensionField};
use crate::ring::Ring;

pub type CurvePoint = [ExtFieldElement; 3];

/// Every nonzero triple (X, Y, Z) over `field` with X^e + Y^e = Z^e, in
/// index order of (X, Y, Z). Scans |F|^2 pairs, so |F|^2 must fit the
/// field's scan cap.
pub fn curve_points(ctx: &CurveContext, field: &Arc<ExtensionField>) -> Result<Vec<CurvePoint>> {
    let n = field.ensure_enumerable()?;
    if (n as u128) * (n as u128) > field.scan_cap() as u128 {
        return Err(Error::FieldTooLarge {
            size: format!("({}^{})^2", field.characteristic(), field.degree()),
            cap: field.scan_cap(),
        });
    }
    if field.characteristic() != ctx.p() {
        return Err(Error::ContextMismatch);
    }
    let e = ctx.relation_degree() as u128;
    let elems = field.elements()?;
    let mut roots: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, z) in elems.iter().enumerate() {
        roots.entry(z.pow_big(e).index()).or_default().push(i);
    }
    let powers: Vec<ExtFieldElement> = elems.iter().map(|x| x.pow_big(e)).collect();
    let mut out = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let target = (powers[i].clone() + powers[j].clone()).index();
            for &k in roots.get(&target).into_iter().flatten() {
                if i == 0 && j == 0 && k == 0 {
                    continue;
                }
                out.push([x.clone(), y.clone(), elems[k].clone()]);
            }
        }
    }
    Ok(out)
}

/// `count` distinct curve points chosen with `rng`. With `units_only`,
/// only points whose first and third coordinates are nonzero qualify, so
/// that fractions with denominators X^a Z^b can be evaluated.
pub fn random_curve_points<R: rand::Rng>(
    ctx: &CurveContext,
    field: &Arc<ExtensionField>,
    count: usize,
    units_only: bool,
    rng: &mut R,
) -> Result<Vec<CurvePoint>> {
    let mut pts = curve_points(ctx, field)?;
    if units_only {
        pts.retain(|pt| !pt[0].is_zero() && !pt[2].is_zero());
    }
    if pts.len() < count {
        return Err(Error::InsufficientPoints { requested: count, available: pts.len() });
    }
    Ok(pts.choose_multiple(rng, count).cloned().collect())
}

/// Uniform random element of an enumerable field.
pub fn random_element<R: rand::Rng>(field: &Arc<ExtensionField>, rng: &mut R) -> ExtFieldElement {
    let n = field.order() as u64;
    field.element_at(rng.gen_range(0..n))
}
