//! Exact one-row Macdonald polynomials of types C and D.

pub mod arith;
pub mod cli;
pub mod error;
pub mod macdonald;
pub mod qseries;
pub mod tableaux;
pub mod walgebra;

pub use error::{Error, Result};
