//! Exact arithmetic kernel: arbitrary-precision rationals, multivariate
//! polynomials in r_1..r_k, univariate polynomials over them, and exact
//! linear algebra. Floats never enter this module.

mod linalg;
mod multipoly;
mod unipoly;

pub use linalg::{adjugate_inverse, char_poly, det_small, mat_mul, solve_unitriangular, PolyMatrix};
pub use multipoly::{MultiPoly, Monomial};
pub use unipoly::UniPoly;

use num::BigRational;

/// Exact rational scalar used throughout the symbolic layers.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational from a fraction.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Lossy conversion to f64 (used only at the boundary-module interface).
pub fn rat_to_f64(x: &Rat) -> f64 {
    use num::ToPrimitive;
    x.to_f64().expect("rational out of f64 range")
}
