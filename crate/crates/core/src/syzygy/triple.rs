use std::fmt;

use crate::curve::{CurvePolynomial, Homogeneity};
use crate::error::{Error, Result};

/// A candidate syzygy (a₁, a₂, a₃) of forms (f₁, f₂, f₃), viewed as a section
/// of Syz(f₁, f₂, f₃)(twist).
///
/// Its total degree is deg aᵢ + deg fᵢ - twist, which must not depend on i.
#[derive(Debug, Clone, PartialEq)]
pub struct SyzygyTriple {
    pub name: String,
    pub components: [CurvePolynomial; 3],
    pub data: [CurvePolynomial; 3],
    pub twist: i64,
    pub total_degree: i64,
}

impl SyzygyTriple {
    pub fn new(
        name: impl Into<String>,
        components: [CurvePolynomial; 3],
        data: [CurvePolynomial; 3],
        twist: i64,
        total_degree: i64,
    ) -> Self {
        Self { name: name.into(), components, data, twist, total_degree }
    }

    /// Σ aᵢfᵢ in normal form.
    pub fn pairing(&self) -> CurvePolynomial {
        self.components
            .iter()
            .zip(&self.data)
            .map(|(a, f)| a.clone() * f.clone())
            .reduce(|x, y| x + y)
            .expect("three components")
    }

    /// The common value of deg aᵢ + deg fᵢ over nonzero components; None
    /// when the components disagree or all vanish.
    pub fn graded_degree(&self) -> Result<Option<i64>> {
        let mut seen = None;
        for (i, (a, f)) in self.components.iter().zip(&self.data).enumerate() {
            let da = match a.homogeneity() {
                Homogeneity::Zero => continue,
                Homogeneity::Homogeneous(d) => d as i64,
                Homogeneity::Mixed => {
                    return Err(Error::NonHomogeneous(format!("{}[{}]", self.name, i + 1)))
                }
            };
            let df = match f.homogeneity() {
                Homogeneity::Homogeneous(d) => d as i64,
                _ => return Err(Error::NonHomogeneous(format!("{} data[{}]", self.name, i + 1))),
            };
            match seen {
                None => seen = Some(da + df),
                Some(s) if s != da + df => return Ok(None),
                Some(_) => {}
            }
        }
        Ok(seen)
    }

    /// Componentwise product with a scalar polynomial.
    pub fn scaled(&self, c: &CurvePolynomial) -> [CurvePolynomial; 3] {
        self.components.clone().map(|a| c.clone() * a)
    }
}

/// True iff Σ aᵢfᵢ vanishes and the degree bookkeeping matches the declared
/// total degree. Non-homogeneous components are an error.
pub fn check_syzygy(t: &SyzygyTriple) -> Result<bool> {
    let ctx = t.data[0].context();
    if t.components.iter().chain(&t.data).any(|x| x.context() != ctx) {
        return Err(Error::ContextMismatch);
    }
    let degree = t.graded_degree()?;
    let degree_ok = match degree {
        Some(d) => d - t.twist == t.total_degree,
        None => false,
    };
    Ok(degree_ok && t.pairing().is_zero())
}

impl fmt::Display for SyzygyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = ({}, {}, {})",
            self.name, self.components[0], self.components[1], self.components[2]
        )
    }
}
