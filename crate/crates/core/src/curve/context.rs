use std::sync::Arc;

use crate::error::Result;
use crate::field::check_odd_prime;

/// Graded ring F_p[X,Y,Z]/(X^e + Y^e - Z^e) in which polynomials live.
///
/// Two instances occur: the Fermat curve u^{p+1} + v^{p+1} = w^{p+1} and the
/// base curve x^d + y^d = z^d with d = (p+1)/2. Both have the same shape, so
/// one engine serves both under different display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveContext {
    p: u64,
    d: u32,
    relation_degree: u32,
    names: [char; 3],
}

impl CurveContext {
    /// u^{p+1} + v^{p+1} - w^{p+1}.
    pub fn fermat(p: u64) -> Result<Arc<Self>> {
        check_odd_prime(p)?;
        let d = ((p + 1) / 2) as u32;
        Ok(Arc::new(Self { p, d, relation_degree: 2 * d, names: ['u', 'v', 'w'] }))
    }

    /// x^d + y^d - z^d with p = 2d - 1.
    pub fn base_curve(p: u64) -> Result<Arc<Self>> {
        check_odd_prime(p)?;
        let d = ((p + 1) / 2) as u32;
        Ok(Arc::new(Self { p, d, relation_degree: d, names: ['x', 'y', 'z'] }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// (p + 1) / 2.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Exponent e of the defining relation X^e + Y^e = Z^e.
    pub fn relation_degree(&self) -> u32 {
        self.relation_degree
    }

    pub fn names(&self) -> [char; 3] {
        self.names
    }
}
