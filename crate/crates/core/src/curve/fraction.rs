use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::context::CurveContext;
use super::polynomial::{check_on_curve, CurvePolynomial, Homogeneity, Monomial};
use crate::error::{Error, Result};
use crate::field::{inv_mod, mul_mod, ExtFieldElement};
use crate::ring::Ring;

/// f / (X^a Z^b): an element of the curve ring localized at the first and
/// third variables.
///
/// Equality is tested by cross-multiplication, which is sound because X and
/// Z are nonzerodivisors in the curve ring.
#[derive(Debug, Clone)]
pub struct LocalFraction {
    num: CurvePolynomial,
    u_exp: u32,
    w_exp: u32,
}

impl LocalFraction {
    /// Builds `num / (X^u_exp Z^w_exp)` and cancels common monomial factors.
    pub fn new(num: CurvePolynomial, u_exp: u32, w_exp: u32) -> Self {
        let mut f = Self { num, u_exp, w_exp };
        f.reduce();
        f
    }

    pub fn from_poly(num: CurvePolynomial) -> Self {
        Self::new(num, 0, 0)
    }

    pub fn constant(ctx: &Arc<CurveContext>, c: i64) -> Self {
        Self::from_poly(CurvePolynomial::constant(ctx, c))
    }

    /// c · X^i Y^j Z^k / (X^a Z^b).
    pub fn monomial(ctx: &Arc<CurveContext>, c: i64, num: (u32, u32, u32), den: (u32, u32)) -> Self {
        Self::new(CurvePolynomial::term(ctx, c, num.0, num.1, num.2), den.0, den.1)
    }

    fn reduce(&mut self) {
        match self.num.min_exponents() {
            None => {
                self.u_exp = 0;
                self.w_exp = 0;
            }
            Some(m) => {
                let cu = m.0.min(self.u_exp);
                let cw = m.2.min(self.w_exp);
                if cu > 0 || cw > 0 {
                    self.num = self.num.div_monomial_exact(Monomial(cu, 0, cw));
                    self.u_exp -= cu;
                    self.w_exp -= cw;
                }
                while self.w_exp > 0 {
                    match self.num.div_z() {
                        Some(q) => {
                            self.num = q;
                            self.w_exp -= 1;
                        }
                        None => break,
                    }
                }
            }
        }
    }

    pub fn context(&self) -> &Arc<CurveContext> {
        self.num.context()
    }

    pub fn numerator(&self) -> &CurvePolynomial {
        &self.num
    }

    /// (a, b) of the denominator X^a Z^b.
    pub fn denominator(&self) -> (u32, u32) {
        (self.u_exp, self.w_exp)
    }

    /// Same fraction written over X^a Z^b with a, b at least the current
    /// exponents.
    pub fn numerator_over(&self, a: u32, b: u32) -> CurvePolynomial {
        assert!(a >= self.u_exp && b >= self.w_exp, "denominator too small");
        self.num.mul_monomial(Monomial(a - self.u_exp, 0, b - self.w_exp))
    }

    /// Some(numerator) when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&CurvePolynomial> {
        (self.u_exp == 0 && self.w_exp == 0).then_some(&self.num)
    }

    pub fn p_power(&self) -> Self {
        let p = self.context().p() as u32;
        Self::new(self.num.p_power(), self.u_exp * p, self.w_exp * p)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.num.scale(c), self.u_exp, self.w_exp)
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self::new(self.num.mul_monomial(m), self.u_exp, self.w_exp)
    }

    /// Cross-multiplication test.
    pub fn fraction_equal(&self, other: &Self) -> bool {
        let lhs = self.num.mul_monomial(Monomial(other.u_exp, 0, other.w_exp));
        let rhs = other.num.mul_monomial(Monomial(self.u_exp, 0, self.w_exp));
        lhs == rhs
    }

    /// Some((c, i, k)) when the numerator equals c · X^i Z^k in the curve
    /// ring, i.e. the fraction is a unit of the localization.
    pub fn unit_form(&self) -> Option<(u64, u32, u32)> {
        let n = match self.num.homogeneity() {
            Homogeneity::Homogeneous(n) => n,
            _ => return None,
        };
        let ctx = self.context();
        for k in 0..=n {
            let candidate = CurvePolynomial::term(ctx, 1, n - k, 0, k);
            let (m, &cm) = candidate.terms().next()?;
            let c_num = self.num.coefficient(m);
            if c_num == 0 {
                continue;
            }
            let c = mul_mod(c_num, inv_mod(cm, ctx.p()), ctx.p());
            if candidate.scale(c as i64) == self.num {
                return Some((c, n - k, k));
            }
        }
        None
    }

    pub fn evaluate(&self, point: &[ExtFieldElement; 3]) -> Result<ExtFieldElement> {
        check_on_curve(self.context(), point)?;
        self.evaluate_unchecked(point)
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[ExtFieldElement; 3]) -> Result<ExtFieldElement> {
        let num = self.num.evaluate_unchecked(point);
        if self.u_exp == 0 && self.w_exp == 0 {
            return Ok(num);
        }
        let den = point[0].pow_big(self.u_exp as u128) * point[2].pow_big(self.w_exp as u128);
        let inv = den.inverse().map_err(|_| Error::PoleAtPoint)?;
        Ok(num * inv)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let a = self.u_exp.max(other.u_exp);
        let b = self.w_exp.max(other.w_exp);
        let lhs = self.numerator_over(a, b);
        let rhs = other.numerator_over(a, b).scale(sign);
        Self::new(lhs + rhs, a, b)
    }
}

impl PartialEq for LocalFraction {
    fn eq(&self, other: &Self) -> bool {
        self.fraction_equal(other)
    }
}

impl Add for LocalFraction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, 1)
    }
}

impl Sub for LocalFraction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, -1)
    }
}

impl Mul for LocalFraction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.u_exp + rhs.u_exp, self.w_exp + rhs.w_exp)
    }
}

impl Neg for LocalFraction {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Ring for LocalFraction {
    fn zero_like(&self) -> Self {
        Self::constant(self.context(), 0)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.context(), 1)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        let (c, i, k) = self.unit_form()?;
        let ctx = self.context();
        let c_inv = inv_mod(c, ctx.p()) as i64;
        Some(Self::new(
            CurvePolynomial::term(ctx, c_inv, self.u_exp, 0, self.w_exp),
            i,
            k,
        ))
    }
    fn pow(&self, exp: u64) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl fmt::Display for LocalFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, _, z] = self.context().names();
        if self.u_exp == 0 && self.w_exp == 0 {
            return write!(f, "{}", self.num);
        }
        let den = super::polynomial::fmt_monomial([x, '_', z], &Monomial(self.u_exp, 0, self.w_exp));
        let den = if self.u_exp > 0 && self.w_exp > 0 { format!("({den})") } else { den };
        if self.num.num_terms() > 1 {
            write!(f, "({})/{den}", self.num)
        } else {
            write!(f, "{}/{den}", self.num)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::points::random_curve_points;
    use crate::field::make_extension_field;
    use crate::matrix::Matrix;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mono(ctx: &Arc<CurveContext>, c: i64, n: (u32, u32, u32), d: (u32, u32)) -> LocalFraction {
        LocalFraction::monomial(ctx, c, n, d)
    }

    #[test]
    fn common_factors_cancel() {
        let ctx = CurveContext::fermat(3).unwrap();
        let a = mono(&ctx, 1, (0, 2, 0), (1, 1));
        let b = mono(&ctx, 1, (1, 2, 0), (2, 1));
        assert_eq!(b.denominator(), (1, 1));
        assert!(a.fraction_equal(&b));
    }

    #[test]
    fn defining_relation_holds_as_fractions() {
        for p in [3u64, 5, 7] {
            let ctx = CurveContext::fermat(p).unwrap();
            let e = (p + 1) as u32;
            let lhs = mono(&ctx, 1, (0, 0, e), (0, 0));
            let rhs = mono(&ctx, 1, (e, 0, 0), (0, 0)) + mono(&ctx, 1, (0, e, 0), (0, 0));
            assert!(lhs.fraction_equal(&rhs));
        }
    }

    #[test]
    fn distinct_fractions_differ() {
        let ctx = CurveContext::fermat(3).unwrap();
        let a = mono(&ctx, 1, (0, 0, 1), (1, 0));
        let b = mono(&ctx, 1, (0, 1, 0), (1, 0));
        assert!(!a.fraction_equal(&b));
        // (1 : 0 : 1) separates them
        let f3 = make_extension_field(3, 1).unwrap();
        let pt = [f3.from_i64(1), f3.from_i64(0), f3.from_i64(1)];
        assert_ne!(a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
    }

    fn transition(ctx: &Arc<CurveContext>) -> Matrix<LocalFraction> {
        Matrix::from_rows(vec![
            vec![LocalFraction::constant(ctx, 0), mono(ctx, -1, (0, 0, 1), (1, 0))],
            vec![mono(ctx, 1, (1, 0, 0), (0, 1)), mono(ctx, 1, (0, 2, 0), (1, 1))],
        ])
    }

    #[test]
    fn transition_determinant_and_inverse() {
        let ctx = CurveContext::fermat(3).unwrap();
        let t = transition(&ctx);
        assert!(t.det().is_one());
        let inv = t.inverse().unwrap();
        let expected = Matrix::from_rows(vec![
            vec![mono(&ctx, 1, (0, 2, 0), (1, 1)), mono(&ctx, 1, (0, 0, 1), (1, 0))],
            vec![mono(&ctx, -1, (1, 0, 0), (0, 1)), LocalFraction::constant(&ctx, 0)],
        ]);
        assert_eq!(inv, expected);
        let id = Matrix::identity_like(&LocalFraction::constant(&ctx, 0), 2);
        assert_eq!(t.mul(&inv), id);
        assert!(id.det().is_one());
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let ctx = CurveContext::fermat(3).unwrap();
        let v = mono(&ctx, 1, (0, 1, 0), (0, 0));
        let m = Matrix::from_rows(vec![vec![v.clone(), v.clone()], vec![v.clone(), v]]);
        assert_eq!(m.inverse().unwrap_err(), Error::Singular);
        // v is not a unit of the localization either
        let n = Matrix::from_rows(vec![vec![mono(&ctx, 1, (0, 1, 0), (0, 0))]]);
        assert_eq!(n.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn units_are_recognised_through_the_relation() {
        // w^{p+1} has normal form u^{p+1} + v^{p+1}, yet is a unit
        let ctx = CurveContext::fermat(5).unwrap();
        let w6 = mono(&ctx, -2, (0, 0, 6), (0, 0));
        assert_eq!(w6.unit_form(), Some((3, 0, 6)));
        let inv = w6.try_inverse().unwrap();
        assert!((inv * w6).is_one());
    }

    #[test]
    fn fraction_p_power_matches_repeated_product() {
        let ctx = CurveContext::fermat(5).unwrap();
        let f = mono(&ctx, 2, (0, 2, 0), (1, 1)) + mono(&ctx, 1, (0, 0, 1), (1, 0));
        assert_eq!(f.p_power(), Ring::pow(&f, 5));
    }

    fn arb_fraction(ctx: Arc<CurveContext>) -> impl Strategy<Value = LocalFraction> {
        (prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -2i64..3), 0..4), 0u32..3, 0u32..3).prop_map(
            move |(ts, a, b)| {
                let num = ts.into_iter().fold(CurvePolynomial::zero(&ctx), |acc, ((i, j, k), c)| {
                    acc + CurvePolynomial::term(&ctx, c, i, j, k)
                });
                LocalFraction::new(num, a, b)
            },
        )
    }

    proptest! {
        #[test]
        fn adjugate_contract(es in prop::collection::vec(arb_fraction(CurveContext::fermat(3).unwrap()), 4)) {
            let m = Matrix::from_rows(vec![es[..2].to_vec(), es[2..].to_vec()]);
            let id = Matrix::identity_like(&es[0], 2);
            prop_assert_eq!(m.mul(&m.adjugate()), id.scale(&m.det()));
            prop_assert_eq!(m.adjugate().mul(&m), id.scale(&m.det()));
        }

        #[test]
        fn adjugate_contract_3x3(es in prop::collection::vec(arb_fraction(CurveContext::fermat(3).unwrap()), 9)) {
            let m = Matrix::from_rows(vec![es[..3].to_vec(), es[3..6].to_vec(), es[6..].to_vec()]);
            let id = Matrix::identity_like(&es[0], 3);
            prop_assert_eq!(m.mul(&m.adjugate()), id.scale(&m.det()));
        }

        #[test]
        fn fraction_arithmetic_matches_evaluation(f in arb_fraction(CurveContext::fermat(3).unwrap()),
                                                  g in arb_fraction(CurveContext::fermat(3).unwrap()),
                                                  seed in any::<u64>()) {
            let ctx = CurveContext::fermat(3).unwrap();
            let f9 = make_extension_field(3, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for pt in random_curve_points(&ctx, &f9, 4, true, &mut rng).unwrap() {
                let (fv, gv) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
                prop_assert_eq!((f.clone() * g.clone()).evaluate(&pt).unwrap(), fv.clone() * gv.clone());
                prop_assert_eq!((f.clone() - g.clone()).evaluate(&pt).unwrap(), fv - gv);
            }
        }
    }
}
