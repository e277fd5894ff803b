use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rayon::prelude::*;

use super::poly::{is_irreducible, FpPoly};
use super::prime::{check_odd_prime, gcd_u128, mul_mod, prime_factors, reduce_i64};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Default bound on the number of elements a full-field scan may visit.
pub const DEFAULT_SCAN_CAP: u64 = 1 << 22;

/// The field F_p[x]/(f) for a monic irreducible `f` of degree `m`.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtensionField {
    p: u64,
    m: usize,
    /// Monic modulus, low degree first, length `m + 1`.
    modulus: Vec<u64>,
    order: u128,
    scan_cap: u64,
}

/// Builds F_{p^m} with the first irreducible monic modulus in index order
/// (coefficient vectors read as base-p numbers, constant term least
/// significant).
pub fn make_extension_field(p: u64, m: usize) -> Result<Arc<ExtensionField>> {
    make_extension_field_with_cap(p, m, DEFAULT_SCAN_CAP)
}

pub fn make_extension_field_with_cap(p: u64, m: usize, scan_cap: u64) -> Result<Arc<ExtensionField>> {
    check_odd_prime(p)?;
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = (p as u128)
        .checked_pow(m as u32)
        .ok_or_else(|| Error::FieldTooLarge { size: format!("{p}^{m}"), cap: scan_cap })?;
    let mut idx: u128 = 0;
    while idx < order {
        let mut coeffs = digits(idx, p, m);
        coeffs.push(1);
        if is_irreducible(&FpPoly::new(coeffs.clone(), p)) {
            return Ok(Arc::new(ExtensionField { p, m, modulus: coeffs, order, scan_cap }));
        }
        idx += 1;
    }
    Err(Error::NoIrreducible { p, degree: m })
}

fn digits(mut idx: u128, p: u64, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push((idx % p as u128) as u64);
        idx /= p as u128;
    }
    out
}

impl ExtensionField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn scan_cap(&self) -> u64 {
        self.scan_cap
    }

    /// Fails unless the whole field fits under the scan cap.
    pub fn ensure_enumerable(&self) -> Result<u64> {
        if self.order > self.scan_cap as u128 {
            return Err(Error::FieldTooLarge {
                size: format!("{}^{}", self.p, self.m),
                cap: self.scan_cap,
            });
        }
        Ok(self.order as u64)
    }

    pub fn zero(self: &Arc<Self>) -> ExtFieldElement {
        ExtFieldElement { field: Arc::clone(self), coeffs: vec![0; self.m] }
    }

    pub fn one(self: &Arc<Self>) -> ExtFieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self: &Arc<Self>, c: i64) -> ExtFieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = reduce_i64(c, self.p);
        ExtFieldElement { field: Arc::clone(self), coeffs }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[i64]) -> ExtFieldElement {
        assert!(coeffs.len() <= self.m, "too many coefficients");
        let mut c = vec![0; self.m];
        for (slot, &x) in c.iter_mut().zip(coeffs) {
            *slot = reduce_i64(x, self.p);
        }
        ExtFieldElement { field: Arc::clone(self), coeffs: c }
    }

    /// The generator x of the power basis.
    pub fn primitive_element(self: &Arc<Self>) -> ExtFieldElement {
        if self.m == 1 {
            // x ≡ -f(0) modulo a linear modulus
            return self.from_i64(-(self.modulus[0] as i64));
        }
        self.from_coeffs(&[0, 1])
    }

    /// Element whose coefficient vector is the base-p expansion of `index`.
    pub fn element_at(self: &Arc<Self>, index: u64) -> ExtFieldElement {
        ExtFieldElement { field: Arc::clone(self), coeffs: digits(index as u128, self.p, self.m) }
    }

    /// Every element in index order. Requires the field to be enumerable.
    pub fn elements(self: &Arc<Self>) -> Result<Vec<ExtFieldElement>> {
        let n = self.ensure_enumerable()?;
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    /// Parallel scan over the whole field, keeping elements that satisfy `pred`,
    /// returned in index order.
    pub fn scan<F>(self: &Arc<Self>, pred: F) -> Result<Vec<ExtFieldElement>>
    where
        F: Fn(&ExtFieldElement) -> bool + Sync + Send,
    {
        let n = self.ensure_enumerable()?;
        Ok((0..n)
            .into_par_iter()
            .map(|i| self.element_at(i))
            .filter(|x| pred(x))
            .collect())
    }

    fn mul_coeffs(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (p, m) = (self.p, self.m);
        let mut t = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                t[i + j] = (t[i + j] + x * y) % p;
            }
        }
        for top in (m..t.len()).rev() {
            let c = t[top];
            if c == 0 {
                continue;
            }
            for j in 0..m {
                let idx = top - m + j;
                t[idx] = (t[idx] + p - mul_mod(c, self.modulus[j], p)) % p;
            }
        }
        t.truncate(m);
        t
    }
}

/// Element of an [`ExtensionField`], stored as its canonical residue.
#[derive(Clone)]
pub struct ExtFieldElement {
    field: Arc<ExtensionField>,
    coeffs: Vec<u64>,
}

impl ExtFieldElement {
    pub fn field(&self) -> &Arc<ExtensionField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Inverse of [`ExtensionField::element_at`].
    pub fn index(&self) -> u64 {
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.field.p + c)
    }

    /// Some(c) when the element lies in the prime field.
    pub fn as_prime(&self) -> Option<u64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn pow_big(&self, mut exp: u128) -> Self {
        let mut base = self.coeffs.clone();
        let mut acc = self.field.one().coeffs;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.field.mul_coeffs(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.field.mul_coeffs(&base, &base);
            }
        }
        Self { field: Arc::clone(&self.field), coeffs: acc }
    }

    pub fn frobenius(&self) -> Self {
        self.pow_big(self.field.p as u128)
    }

    pub fn inverse(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow_big(self.field.order - 2))
    }

    fn check_same(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "{}",
            Error::ContextMismatch
        );
    }
}

impl PartialEq for ExtFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.check_same(other);
        self.coeffs == other.coeffs
    }
}

impl Eq for ExtFieldElement {}

impl std::hash::Hash for ExtFieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a polynomial in the generator `x`, e.g. `2x^2 + x + 4`.
impl fmt::Display for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            parts.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Add for ExtFieldElement {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let p = self.field.p;
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = (*a + b) % p;
        }
        self
    }
}

impl Sub for ExtFieldElement {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let p = self.field.p;
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = (*a + p - b) % p;
        }
        self
    }
}

impl Mul for ExtFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        let coeffs = self.field.mul_coeffs(&self.coeffs, &rhs.coeffs);
        Self { field: self.field, coeffs }
    }
}

impl Neg for ExtFieldElement {
    type Output = Self;
    fn neg(mut self) -> Self {
        let p = self.field.p;
        for a in self.coeffs.iter_mut() {
            *a = (p - *a) % p;
        }
        self
    }
}

impl Ring for ExtFieldElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn pow(&self, exp: u64) -> Self {
        self.pow_big(exp as u128)
    }
}

/// Least n ≥ 1 with a^n = 1.
pub fn multiplicative_order(a: &ExtFieldElement) -> Result<u64> {
    if Ring::is_zero(a) {
        return Err(Error::ZeroElement);
    }
    let group = u64::try_from(a.field.order - 1).map_err(|_| Error::FieldTooLarge {
        size: format!("{}^{}", a.field.p, a.field.m),
        cap: a.field.scan_cap,
    })?;
    let mut order = group;
    for q in prime_factors(group) {
        while order % q == 0 && a.pow_big((order / q) as u128).is_one() {
            order /= q;
        }
    }
    Ok(order)
}

/// Smallest element (in index order) of multiplicative order p^m - 1.
pub fn find_generator(field: &Arc<ExtensionField>) -> Result<ExtFieldElement> {
    let n = field.ensure_enumerable()?;
    let group = n - 1;
    let factors = prime_factors(group);
    (1..n)
        .map(|i| field.element_at(i))
        .find(|a| factors.iter().all(|&q| !a.pow_big((group / q) as u128).is_one()))
        .ok_or(Error::ZeroElement)
}

/// All x in the field with x^n = a, by exhaustive scan, in index order.
pub fn solve_power_equation(
    field: &Arc<ExtensionField>,
    n: u64,
    a: &ExtFieldElement,
) -> Result<Vec<ExtFieldElement>> {
    if Ring::is_zero(a) {
        return Err(Error::ZeroElement);
    }
    assert!(n >= 1, "exponent must be positive");
    field.scan(|x| x.pow_big(n as u128) == *a)
}

/// Solvability criterion for x^n = a with a ≠ 0:
/// a^((q-1)/gcd(n, q-1)) = 1 where q is the field order.
pub fn power_equation_solvable(a: &ExtFieldElement, n: u64) -> Result<bool> {
    if Ring::is_zero(a) {
        return Err(Error::ZeroElement);
    }
    let group = a.field.order - 1;
    let g = gcd_u128(n as u128, group);
    Ok(a.pow_big(group / g).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_case() {
        let f = make_extension_field(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.modulus(), &[0, 1]);
        let two = f.from_i64(2);
        assert_eq!((two.clone() * two).as_prime(), Some(1));
    }

    #[test]
    fn f81_every_unit_has_order_dividing_80() {
        let f = make_extension_field(3, 4).unwrap();
        let elems = f.elements().unwrap();
        assert_eq!(elems.len(), 81);
        for a in elems.iter().skip(1) {
            assert!(a.pow_big(80).is_one(), "{a}");
        }
    }

    #[test]
    fn f25_frobenius_fixes_exactly_the_prime_field() {
        let f = make_extension_field(5, 2).unwrap();
        let fixed: Vec<_> = f.elements().unwrap().into_iter().filter(|a| a.frobenius() == *a).collect();
        assert_eq!(fixed.len(), 5);
        assert!(fixed.iter().all(|a| a.as_prime().is_some()));
    }

    #[test]
    fn moduli_are_deterministic() {
        let a = make_extension_field(5, 8).unwrap();
        let b = make_extension_field(5, 8).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert!(is_irreducible(&FpPoly::new(a.modulus().to_vec(), 5)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(make_extension_field(4, 2).unwrap_err(), Error::InvalidPrime(4));
        assert_eq!(make_extension_field(2, 2).unwrap_err(), Error::InvalidPrime(2));
        assert_eq!(make_extension_field(3, 0).unwrap_err(), Error::ZeroDegree);
        let tiny = make_extension_field_with_cap(3, 4, 50).unwrap();
        assert!(matches!(tiny.elements(), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn orders_in_prime_fields() {
        let f7 = make_extension_field(7, 1).unwrap();
        let f5 = make_extension_field(5, 1).unwrap();
        let f3 = make_extension_field(3, 1).unwrap();
        assert_eq!(multiplicative_order(&f7.from_i64(2)).unwrap(), 3);
        assert_eq!(multiplicative_order(&f5.from_i64(1)).unwrap(), 1);
        assert_eq!(multiplicative_order(&f3.from_i64(2)).unwrap(), 2);
        assert_eq!(multiplicative_order(&f3.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn order_matches_brute_force_in_f81() {
        let f = make_extension_field(3, 4).unwrap();
        for a in f.elements().unwrap().into_iter().skip(1) {
            let brute = (1..=80u64).find(|&n| a.pow_big(n as u128).is_one()).unwrap();
            assert_eq!(multiplicative_order(&a).unwrap(), brute);
            assert_eq!(80 % brute, 0);
        }
    }

    #[test]
    fn generators_of_small_prime_fields() {
        for (p, g) in [(5u64, 2u64), (3, 2), (7, 3)] {
            let f = make_extension_field(p, 1).unwrap();
            let gen = find_generator(&f).unwrap();
            assert_eq!(gen.as_prime(), Some(g));
            assert_eq!(multiplicative_order(&gen).unwrap(), p - 1);
        }
        let f = make_extension_field(5, 2).unwrap();
        assert_eq!(multiplicative_order(&find_generator(&f).unwrap()).unwrap(), 24);
    }

    #[test]
    fn square_roots_of_minus_two_in_f3() {
        let f = make_extension_field(3, 1).unwrap();
        let sols = solve_power_equation(&f, 2, &f.from_i64(-2)).unwrap();
        let vals: Vec<_> = sols.iter().map(|x| x.as_prime().unwrap()).collect();
        assert_eq!(vals, vec![1, 2]);
    }

    #[test]
    fn eighth_roots_of_two() {
        let f9 = make_extension_field(3, 2).unwrap();
        let two9 = f9.from_i64(2);
        assert!(solve_power_equation(&f9, 8, &two9).unwrap().is_empty());
        assert!(!power_equation_solvable(&two9, 8).unwrap());

        let f81 = make_extension_field(3, 4).unwrap();
        let two81 = f81.from_i64(2);
        // criterion: 2^(80/8) = 2^10 = 1 in F_3
        assert!(power_equation_solvable(&two81, 8).unwrap());
        let sols = solve_power_equation(&f81, 8, &two81).unwrap();
        assert_eq!(sols.len(), 8);
        assert!(sols.iter().all(|x| x.pow_big(8) == two81));
    }

    #[test]
    fn solve_rejects_zero() {
        let f = make_extension_field(5, 1).unwrap();
        assert_eq!(solve_power_equation(&f, 3, &f.zero()).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn fermat_little_theorem_exhaustive() {
        for (p, m) in [(3u64, 1usize), (3, 2), (3, 6), (5, 3), (7, 3), (11, 2), (13, 2)] {
            let f = make_extension_field(p, m).unwrap();
            let q = f.order();
            for a in f.elements().unwrap().into_iter().skip(1) {
                assert!(a.pow_big(q - 1).is_one());
            }
        }
    }

    #[test]
    fn solve_count_matches_gcd_formula() {
        let f = make_extension_field(5, 2).unwrap();
        for n in 1..=30u64 {
            for a in f.elements().unwrap().into_iter().skip(1).step_by(5) {
                let sols = solve_power_equation(&f, n, &a).unwrap();
                assert!(sols.iter().all(|x| x.pow_big(n as u128) == a));
                let solvable = power_equation_solvable(&a, n).unwrap();
                if solvable {
                    assert_eq!(sols.len() as u128, gcd_u128(n as u128, 24));
                } else {
                    assert!(sols.is_empty());
                }
            }
        }
    }

    fn field_strategy() -> impl Strategy<Value = (u64, usize)> {
        prop_oneof![Just((3u64, 4usize)), Just((5, 2)), Just((5, 8)), Just((7, 6)), Just((13, 2))]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((p, m) in field_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let f = make_extension_field(p, m).unwrap();
            let n = f.order() as u64;
            let (a, b, c) = (f.element_at(a % n), f.element_at(b % n), f.element_at(c % n));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert!((a.clone() - a.clone()).is_zero());
            if !a.is_zero() {
                prop_assert!((a.clone() * a.inverse().unwrap()).is_one());
                prop_assert!(a.pow_big(f.order() - 1).is_one());
            }
            // Frobenius is a ring endomorphism
            prop_assert_eq!((a.clone() + b.clone()).frobenius(), a.frobenius() + b.frobenius());
            prop_assert_eq!((a.clone() * b.clone()).frobenius(), a.frobenius() * b.frobenius());
        }
    }
}
