//! One-row Macdonald polynomials of types C and D: tableau sums, the
//! generating-function coefficients `G_r`, both directions of Lassalle's
//! relation, principal specializations and the Koornwinder operator.

pub mod formulas;
pub mod koornwinder;
pub mod lassalle;
pub mod principal;

use crate::arith::{Field, Scalar};
use crate::error::Result;
use crate::qseries::qpoch;

pub use formulas::{
    g_series, rewriting_forms_agree, tableau_coefficient, tableau_poly, tableau_poly_c_general,
    tableau_poly_c_special, tableau_poly_d,
};
pub use koornwinder::{
    bc_specialize, eigenvalue_bracket, eigenvalue_pairs, koornwinder_apply, triangularity_check, EigenvalueData,
    KoornwinderParams,
};
pub use lassalle::{lassalle_expand, lassalle_invert};
pub use principal::{principal_closed_form, principal_point, principal_specialize, ClosedForm};

/// The base parameters `q`, `t` of a computation.
#[derive(Clone, Debug)]
pub struct Base<F> {
    pub q: F,
    pub t: F,
}

impl Base<Scalar> {
    pub fn symbolic() -> Self {
        Base { q: Scalar::q(), t: Scalar::t() }
    }
}

impl<F: Field> Base<F> {
    pub fn new(q: F, t: F) -> Self {
        Base { q, t }
    }

    /// `t^a q^b`.
    pub fn tq(&self, a: i64, b: i64) -> Result<F> {
        Ok(self.t.powi(a)?.mul(&self.q.powi(b)?))
    }

    /// `(z;q)_k`.
    pub fn poch(&self, z: &F, k: i64) -> Result<F> {
        qpoch(z, &self.q, k)
    }

    /// `(t^a q^b; q)_k`.
    pub fn ptq(&self, a: i64, b: i64, k: i64) -> Result<F> {
        self.poch(&self.tq(a, b)?, k)
    }

    /// `(t;q)_k / (q;q)_k`.
    pub fn ratio(&self, k: i64) -> Result<F> {
        self.poch(&self.t, k)?.div(&self.poch(&self.q, k)?)
    }
}

/// The parameter `T` of type C.
#[derive(Clone, Debug, PartialEq)]
pub enum BigT<F> {
    /// `T = t²/q`.
    Special,
    Value(F),
}

impl<F: Field> BigT<F> {
    pub fn value(&self, base: &Base<F>) -> Result<F> {
        match self {
            BigT::Special => base.t.mul(&base.t).div(&base.q),
            BigT::Value(v) => Ok(v.clone()),
        }
    }
}
