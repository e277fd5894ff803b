//! The curve ring F_p[X,Y,Z]/(X^e + Y^e - Z^e), its localization at X and
//! Z, and polynomials in formal matrix entries over that localization.

mod context;
mod formal;
mod fraction;
mod points;
mod polynomial;

pub use context::CurveContext;
pub use formal::{FormalPolynomial, FormalVars};
pub use fraction::LocalFraction;
pub use points::{curve_points, random_curve_points, random_element, CurvePoint};
pub use polynomial::{normal_form, CurvePolynomial, Homogeneity, Monomial};
