use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::context::CurveContext;
use crate::error::{Error, Result};
use crate::field::{binomial_mod, inv_mod, mul_mod, reduce_i64, ExtFieldElement};
use crate::ring::Ring;

/// Exponent triple of the three curve variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub u32, pub u32, pub u32);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0 + self.1 + self.2
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 + other.0, self.1 + other.1, self.2 + other.2)
    }
}

/// Graded lexicographic with the first variable largest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
            .then(self.1.cmp(&other.1))
            .then(self.2.cmp(&other.2))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// Element of the curve ring in normal form: every stored monomial has
/// third exponent below the relation degree, coefficients in [1, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePolynomial {
    ctx: Arc<CurveContext>,
    terms: BTreeMap<Monomial, u64>,
}

/// Reduces arbitrary integer-coefficient terms against the defining relation.
pub fn normal_form<I>(ctx: &Arc<CurveContext>, raw: I) -> CurvePolynomial
where
    I: IntoIterator<Item = (Monomial, i64)>,
{
    let mut terms = BTreeMap::new();
    for (m, c) in raw {
        push_reduced(ctx, &mut terms, reduce_i64(c, ctx.p()), m);
    }
    CurvePolynomial { ctx: Arc::clone(ctx), terms }
}

/// Adds c·X^i Y^j Z^k into `terms` after rewriting Z^e -> X^e + Y^e:
/// Z^{qe+r} = Z^r (X^e + Y^e)^q, expanded binomially mod p.
fn push_reduced(ctx: &CurveContext, terms: &mut BTreeMap<Monomial, u64>, c: u64, m: Monomial) {
    let p = ctx.p();
    if c == 0 {
        return;
    }
    let e = ctx.relation_degree();
    if m.2 < e {
        accumulate(terms, m, c, p);
        return;
    }
    let (q, r) = (m.2 / e, m.2 % e);
    for t in 0..=q {
        let b = binomial_mod(q as u64, t as u64, p);
        if b == 0 {
            continue;
        }
        let mono = Monomial(m.0 + e * t, m.1 + e * (q - t), r);
        accumulate(terms, mono, mul_mod(c, b, p), p);
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, u64>, m: Monomial, c: u64, p: u64) {
    let entry = terms.entry(m).or_insert(0);
    *entry = (*entry + c) % p;
    if *entry == 0 {
        terms.remove(&m);
    }
}

impl CurvePolynomial {
    pub fn zero(ctx: &Arc<CurveContext>) -> Self {
        Self { ctx: Arc::clone(ctx), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Arc<CurveContext>, c: i64) -> Self {
        Self::term(ctx, c, 0, 0, 0)
    }

    /// c · X^i Y^j Z^k, in normal form.
    pub fn term(ctx: &Arc<CurveContext>, c: i64, i: u32, j: u32, k: u32) -> Self {
        normal_form(ctx, [(Monomial(i, j, k), c)])
    }

    /// First variable (u or x).
    pub fn var0(ctx: &Arc<CurveContext>) -> Self {
        Self::term(ctx, 1, 1, 0, 0)
    }

    pub fn var1(ctx: &Arc<CurveContext>) -> Self {
        Self::term(ctx, 1, 0, 1, 0)
    }

    pub fn var2(ctx: &Arc<CurveContext>) -> Self {
        Self::term(ctx, 1, 0, 0, 1)
    }

    pub fn context(&self) -> &Arc<CurveContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every stored exponent satisfies the normal-form bound.
    pub fn is_normal(&self) -> bool {
        let e = self.ctx.relation_degree();
        self.terms.iter().all(|(m, &c)| m.2 < e && c != 0 && c < self.ctx.p())
    }

    /// Re-applies the reduction; a no-op on values built through this API.
    pub fn normalized(&self) -> Self {
        normal_form(&self.ctx, self.terms.iter().map(|(m, &c)| (*m, c as i64)))
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|x| x == d) => Homogeneity::Homogeneous(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let p = self.ctx.p();
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            accumulate(&mut terms, *m, c, p);
        }
        Ok(Self { ctx: Arc::clone(&self.ctx), terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let p = self.ctx.p();
        let mut terms = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                push_reduced(&self.ctx, &mut terms, mul_mod(ca, cb, p), ma.times(mb));
            }
        }
        Ok(Self { ctx: Arc::clone(&self.ctx), terms })
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let p = self.ctx.p();
        let c = reduce_i64(c, p);
        let terms = self
            .terms
            .iter()
            .map(|(m, &x)| (*m, mul_mod(x, c, p)))
            .filter(|(_, x)| *x != 0)
            .collect();
        Self { ctx: Arc::clone(&self.ctx), terms }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        for (mm, &c) in &self.terms {
            push_reduced(&self.ctx, &mut terms, c, mm.times(&m));
        }
        Self { ctx: Arc::clone(&self.ctx), terms }
    }

    /// f^p via (Σ c_M M)^p = Σ c_M M^p, valid since coefficients lie in F_p.
    pub fn p_power(&self) -> Self {
        let p = self.ctx.p() as u32;
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            push_reduced(&self.ctx, &mut terms, c, Monomial(m.0 * p, m.1 * p, m.2 * p));
        }
        Self { ctx: Arc::clone(&self.ctx), terms }
    }

    /// Componentwise minimum exponents over all terms (None for zero).
    pub fn min_exponents(&self) -> Option<Monomial> {
        self.terms.keys().copied().reduce(|a, b| Monomial(a.0.min(b.0), a.1.min(b.1), a.2.min(b.2)))
    }

    /// The quotient by the third variable in the curve ring, if it exists.
    ///
    /// Modulo Z the ring is k[X, Y]/(X^e + Y^e), so the Z-free part must be
    /// a multiple r·(X^e + Y^e) = r·Z^e; the quotient is then the shifted
    /// Z-part plus r·Z^{e-1}.
    pub fn div_z(&self) -> Option<Self> {
        let p = self.ctx.p();
        let e = self.ctx.relation_degree();
        let mut out = BTreeMap::new();
        let mut rest: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for (m, &c) in &self.terms {
            if m.2 > 0 {
                out.insert(Monomial(m.0, m.1, m.2 - 1), c);
            } else {
                rest.insert((m.1, m.0), c);
            }
        }
        // long division by Y^e + X^e, highest Y power first
        while let Some((&(j, i), &c)) = rest.iter().next_back() {
            if j < e {
                return None;
            }
            rest.remove(&(j, i));
            accumulate(&mut out, Monomial(i, j - e, e - 1), c, p);
            let key = (j - e, i + e);
            let entry = rest.entry(key).or_insert(0);
            *entry = (*entry + p - c) % p;
            if *entry == 0 {
                rest.remove(&key);
            }
        }
        Some(Self { ctx: Arc::clone(&self.ctx), terms: out })
    }

    /// Divides every term by `m`; `m` must divide each stored monomial.
    pub(crate) fn div_monomial_exact(&self, m: Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(mm, &c)| {
                debug_assert!(mm.0 >= m.0 && mm.1 >= m.1 && mm.2 >= m.2);
                (Monomial(mm.0 - m.0, mm.1 - m.1, mm.2 - m.2), c)
            })
            .collect();
        Self { ctx: Arc::clone(&self.ctx), terms }
    }

    /// Ring map into `target` sending monomials through `f`. The caller
    /// guarantees that `f` respects the two defining relations.
    pub fn map_monomials<F>(&self, target: &Arc<CurveContext>, f: F) -> Self
    where
        F: Fn(Monomial) -> Monomial,
    {
        assert_eq!(self.ctx.p(), target.p(), "{}", Error::ContextMismatch);
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            push_reduced(target, &mut terms, c, f(*m));
        }
        Self { ctx: Arc::clone(target), terms }
    }

    /// Value at a point on the curve. Does not consult the normal form.
    pub fn evaluate(&self, point: &[ExtFieldElement; 3]) -> Result<ExtFieldElement> {
        check_on_curve(&self.ctx, point)?;
        Ok(self.evaluate_unchecked(point))
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[ExtFieldElement; 3]) -> ExtFieldElement {
        let field = point[0].field();
        let mut acc = field.zero();
        for (m, &c) in &self.terms {
            let t = field.from_i64(c as i64)
                * point[0].pow_big(m.0 as u128)
                * point[1].pow_big(m.1 as u128)
                * point[2].pow_big(m.2 as u128);
            acc = acc + t;
        }
        acc
    }

    /// Some(c) when the polynomial is a constant c ∈ F_p.
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Monomial(0, 0, 0)).copied(),
            _ => None,
        }
    }
}

pub(crate) fn check_on_curve(ctx: &CurveContext, point: &[ExtFieldElement; 3]) -> Result<()> {
    if point[0].field().characteristic() != ctx.p() {
        return Err(Error::ContextMismatch);
    }
    let e = ctx.relation_degree() as u128;
    let lhs = point[0].pow_big(e) + point[1].pow_big(e) - point[2].pow_big(e);
    if lhs.is_zero() {
        Ok(())
    } else {
        Err(Error::NotOnCurve)
    }
}

impl Add for CurvePolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("polynomials from different curves")
    }
}

impl Sub for CurvePolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&(-rhs)).expect("polynomials from different curves")
    }
}

impl Mul for CurvePolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("polynomials from different curves")
    }
}

impl Neg for CurvePolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Ring for CurvePolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        Self::constant(&self.ctx, 1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if c != 0 => {
                Some(Self::constant(&self.ctx, inv_mod(c, self.ctx.p()) as i64))
            }
            _ => None,
        }
    }
}

/// Signed representative in (-p/2, p/2] for display.
pub(crate) fn signed(c: u64, p: u64) -> i64 {
    if c > p / 2 {
        c as i64 - p as i64
    } else {
        c as i64
    }
}

pub(crate) fn fmt_monomial(names: [char; 3], m: &Monomial) -> String {
    let mut s = String::new();
    for (name, e) in names.iter().zip([m.0, m.1, m.2]) {
        match e {
            0 => {}
            1 => s.push(*name),
            _ => s.push_str(&format!("{name}^{e}")),
        }
    }
    s
}

/// Terms in descending graded-lex order, coefficients shown as signed
/// residues: `u^4 - 2v^2w^2 + 1`.
impl fmt::Display for CurvePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ctx.p();
        for (n, (m, &c)) in self.terms.iter().rev().enumerate() {
            let s = signed(c, p);
            let mono = fmt_monomial(self.ctx.names(), m);
            let mag = s.unsigned_abs();
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}{mono}"),
            };
            match (n, s < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
