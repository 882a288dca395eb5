//! Exact arithmetic: rationals, sparse polynomials in q^{1/2}, t^{1/2},
//! T^{1/2}, the coefficient field and Laurent polynomials in x.

pub mod cyclotomic;
pub mod field;
pub mod laurent;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod text;

pub type BigRat = num_rational::BigRational;

pub use field::Field;
pub use laurent::{Exp, LaurentPoly};
pub use poly::{Mono, SparsePoly};
pub use scalar::Scalar;
