use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::context::CurveContext;
use super::fraction::LocalFraction;
use super::polynomial::check_on_curve;
use crate::error::{Error, Result};
use crate::field::ExtFieldElement;
use crate::ring::Ring;

/// Indeterminate sets adjoined over the localized curve ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormalVars {
    /// Entries a, b, c, d of the matrix A on the chart X ≠ 0.
    Abcd,
    /// Entries α, β, γ, δ of the matrix B on the chart Z ≠ 0.
    AlphaDelta,
    /// a, b, c, d together with a symbol D standing for the unit det A.
    AbcdDet,
}

impl FormalVars {
    pub fn names(&self) -> &'static [&'static str] {
        match self {
            FormalVars::Abcd => &["a", "b", "c", "d"],
            FormalVars::AlphaDelta => &["α", "β", "γ", "δ"],
            FormalVars::AbcdDet => &["a", "b", "c", "d", "D"],
        }
    }

    pub fn arity(&self) -> usize {
        self.names().len()
    }
}

/// Polynomial in formal indeterminates with [`LocalFraction`] coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalPolynomial {
    vars: FormalVars,
    ctx: Arc<CurveContext>,
    terms: BTreeMap<Vec<u32>, LocalFraction>,
}

impl FormalPolynomial {
    pub fn zero(ctx: &Arc<CurveContext>, vars: FormalVars) -> Self {
        Self { vars, ctx: Arc::clone(ctx), terms: BTreeMap::new() }
    }

    pub fn constant(vars: FormalVars, c: LocalFraction) -> Self {
        let mut out = Self::zero(c.context(), vars);
        out.insert(vec![0; vars.arity()], c);
        out
    }

    pub fn var(ctx: &Arc<CurveContext>, vars: FormalVars, idx: usize) -> Self {
        assert!(idx < vars.arity(), "no such variable");
        let mut exps = vec![0; vars.arity()];
        exps[idx] = 1;
        let mut out = Self::zero(ctx, vars);
        out.insert(exps, LocalFraction::constant(ctx, 1));
        out
    }

    /// All variables of the set in order.
    pub fn vars_of(ctx: &Arc<CurveContext>, vars: FormalVars) -> Vec<Self> {
        (0..vars.arity()).map(|i| Self::var(ctx, vars, i)).collect()
    }

    /// Single term coef · Π var_i^{exps_i}.
    pub fn term(vars: FormalVars, coef: LocalFraction, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), vars.arity());
        let mut out = Self::zero(coef.context(), vars);
        out.insert(exps.to_vec(), coef);
        out
    }

    fn insert(&mut self, exps: Vec<u32>, c: LocalFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
        }
    }

    pub fn vars(&self) -> FormalVars {
        self.vars
    }

    pub fn context(&self) -> &Arc<CurveContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LocalFraction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Option<&LocalFraction> {
        self.terms.get(exps)
    }

    /// Total degrees in the formal variables that occur, ascending.
    pub fn formal_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Total degree counting only the first `k` variables.
    pub fn partial_degrees(&self, k: usize) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|e| e[..k].iter().sum()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn scale(&self, c: &LocalFraction) -> Self {
        let mut out = Self::zero(&self.ctx, self.vars);
        for (e, x) in &self.terms {
            out.insert(e.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn map_coefficients<F: Fn(&LocalFraction) -> LocalFraction>(&self, f: F) -> Self {
        let mut out = Self::zero(&self.ctx, self.vars);
        for (e, x) in &self.terms {
            out.insert(e.clone(), f(x));
        }
        out
    }

    /// Replaces variable i by `images[i]`; the result lives in the images'
    /// variable set.
    pub fn substitute(&self, images: &[FormalPolynomial]) -> Self {
        assert_eq!(images.len(), self.vars.arity(), "one image per variable");
        let target = images[0].vars;
        assert!(images.iter().all(|g| g.vars == target), "images must share variables");
        let mut acc = Self::zero(&self.ctx, target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t * img.pow(k as u64);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Reinterprets a polynomial over {a,b,c,d} as one over {a,b,c,d,D}.
    pub fn with_det_symbol(&self) -> Self {
        assert_eq!(self.vars, FormalVars::Abcd);
        let mut out = Self::zero(&self.ctx, FormalVars::AbcdDet);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.push(0);
            out.insert(e, c.clone());
        }
        out
    }

    /// Value at a curve point with the formal variables set to `assignment`.
    pub fn evaluate(&self, point: &[ExtFieldElement; 3], assignment: &[ExtFieldElement]) -> Result<ExtFieldElement> {
        check_on_curve(&self.ctx, point)?;
        if assignment.len() != self.vars.arity() {
            return Err(Error::ContextMismatch);
        }
        let field = point[0].field();
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.evaluate_unchecked(point)?;
            for (x, &k) in assignment.iter().zip(e) {
                t = t * x.pow_big(k as u128);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.vars == other.vars && (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx),
            "{}",
            Error::ContextMismatch
        );
    }
}

impl Add for FormalPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.check_compatible(&rhs);
        for (e, c) in rhs.terms {
            self.insert(e, c);
        }
        self
    }
}

impl Sub for FormalPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FormalPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_coefficients(|c| -c.clone())
    }
}

impl Mul for FormalPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_compatible(&rhs);
        let mut out = Self::zero(&self.ctx, self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Ring for FormalPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ctx, self.vars)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.vars, LocalFraction::constant(&self.ctx, 1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if e.iter().any(|&k| k > 0) {
            return None;
        }
        Some(Self::constant(self.vars, c.try_inverse()?))
    }
}

impl fmt::Display for FormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = names
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})·{}", mono.join(""))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::points::{random_curve_points, random_element};
    use crate::field::make_extension_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinant_is_frobenius_compatible() {
        // det(A^(p)) = (det A)^p over {a,b,c,d}
        for p in [3u64, 5, 7] {
            let ctx = CurveContext::fermat(p).unwrap();
            let v = FormalPolynomial::vars_of(&ctx, FormalVars::Abcd);
            let det = v[0].clone() * v[3].clone() - v[1].clone() * v[2].clone();
            let det_p = v[0].pow(p) * v[3].pow(p) - v[1].pow(p) * v[2].pow(p);
            assert_eq!(det.pow(p), det_p);
        }
    }

    #[test]
    fn substitution_composes_with_evaluation() {
        let ctx = CurveContext::fermat(3).unwrap();
        let f9 = make_extension_field(3, 2).unwrap();
        let abcd = FormalPolynomial::vars_of(&ctx, FormalVars::Abcd);
        let greek = FormalPolynomial::vars_of(&ctx, FormalVars::AlphaDelta);
        let w_over_u = LocalFraction::monomial(&ctx, -1, (0, 0, 1), (1, 0));
        let images = vec![
            greek[2].scale(&w_over_u),
            greek[3].scale(&w_over_u),
            greek[0].clone(),
            greek[1].clone() + greek[3].clone(),
        ];
        let det = abcd[0].clone() * abcd[3].clone() - abcd[1].clone() * abcd[2].clone();
        let subbed = det.substitute(&images);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for pt in random_curve_points(&ctx, &f9, 10, true, &mut rng).unwrap() {
            let assign: Vec<_> = (0..4).map(|_| random_element(&f9, &mut rng)).collect();
            let imgs: Vec<_> = images.iter().map(|g| g.evaluate(&pt, &assign).unwrap()).collect();
            assert_eq!(subbed.evaluate(&pt, &assign).unwrap(), det.evaluate(&pt, &imgs).unwrap());
        }
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let ctx = CurveContext::fermat(5).unwrap();
        let a = FormalPolynomial::var(&ctx, FormalVars::Abcd, 0);
        assert!((a.clone() - a).is_zero());
        let rel = FormalPolynomial::constant(FormalVars::Abcd, LocalFraction::monomial(&ctx, 1, (0, 0, 6), (0, 0)));
        let lhs = FormalPolynomial::constant(
            FormalVars::Abcd,
            LocalFraction::monomial(&ctx, 1, (6, 0, 0), (0, 0)) + LocalFraction::monomial(&ctx, 1, (0, 6, 0), (0, 0)),
        );
        assert!((rel - lhs).is_zero());
    }
}
