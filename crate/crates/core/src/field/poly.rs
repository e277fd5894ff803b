//! Dense univariate polynomials over F_p, just enough for modulus search.

use super::prime::{inv_mod, mul_mod};

/// Coefficients low degree first, no trailing zeros (zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FpPoly {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl FpPoly {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs, p }
    }

    pub fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(c, p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![], self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(c, p)
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        let p = self.p;
        let md = modulus.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(modulus.coeffs[md], p);
        let mut r = self.coeffs.clone();
        while r.len() > md {
            let top = r.len() - 1;
            let q = mul_mod(r[top], lead_inv, p);
            if q != 0 {
                for (j, &m) in modulus.coeffs.iter().enumerate() {
                    let idx = top - md + j;
                    r[idx] = (r[idx] + p - mul_mod(q, m, p)) % p;
                }
            }
            r.pop();
        }
        Self::new(r, p)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::new(vec![1], self.p).rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }
}

/// Rabin's test: `f` (monic, degree m) is irreducible iff
/// x^(p^m) ≡ x mod f and gcd(x^(p^(m/q)) - x, f) = 1 for every prime q | m.
pub(crate) fn is_irreducible(f: &FpPoly) -> bool {
    let p = f.p;
    let m = match f.degree() {
        Some(0) | None => return false,
        Some(m) => m,
    };
    if m == 1 {
        return true;
    }
    let x = FpPoly::x(p);
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![x.rem(f)];
    for _ in 0..m {
        let next = frob.last().unwrap().pow_mod(p, f);
        frob.push(next);
    }
    if frob[m] != x.rem(f) {
        return false;
    }
    super::prime::prime_factors(m as u64).into_iter().all(|q| {
        let k = m / q as usize;
        let g = frob[k].sub(&x).gcd(f);
        g.degree() == Some(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_irreducible(f: &FpPoly) -> bool {
        // No monic factor of degree 1..=deg/2.
        let p = f.p;
        let m = f.degree().unwrap();
        for d in 1..=m / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut c: Vec<u64> = (0..d).map(|i| (idx / p.pow(i as u32)) % p).collect();
                c.push(1);
                let g = FpPoly::new(c, p);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for (p, m) in [(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
            for idx in 0..p.pow(m as u32) {
                let mut c: Vec<u64> = (0..m).map(|i| (idx / p.pow(i as u32)) % p).collect();
                c.push(1);
                let f = FpPoly::new(c, p);
                assert_eq!(is_irreducible(&f), brute_force_irreducible(&f), "{f:?}");
            }
        }
    }
}
