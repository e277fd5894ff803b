use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::Ring;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut i = 3;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 2;
    }
    true
}

/// Rejects 2, composites and anything below 3.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p >= 3 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn reduce_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse via Fermat; `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, (p - 2) as u128, p)
}

/// Binomial coefficient modulo a prime, by Lucas' theorem.
pub(crate) fn binomial_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        let mut c = 1;
        for t in 0..ki {
            c = mul_mod(c, (ni - t) % p, p);
            c = mul_mod(c, inv_mod((t + 1) % p, p), p);
        }
        acc = mul_mod(acc, c, p);
        n /= p;
        k /= p;
    }
    acc
}

/// Element of the prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    p: u64,
}

impl PrimeFieldElement {
    pub fn new(value: i64, p: u64) -> Self {
        Self { value: reduce_i64(value, p), p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::ZeroElement);
        }
        Ok(Self { value: inv_mod(self.value, self.p), p: self.p })
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "{}", Error::ContextMismatch);
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self { value: (self.value + rhs.value) % self.p, p: self.p }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self { value: (self.value + self.p - rhs.value) % self.p, p: self.p }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self { value: mul_mod(self.value, rhs.value, self.p), p: self.p }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: (self.p - self.value) % self.p, p: self.p }
    }
}

impl Ring for PrimeFieldElement {
    fn zero_like(&self) -> Self {
        Self { value: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Self { value: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
