//! Exact arithmetic for Clifford-valued polynomials and Gelfand-Tsetlin
//! bases of spaces of homogeneous solutions to the Hodge-de Rham system.

pub mod ck;
pub mod clifford;
pub mod error;
pub mod fischer;
pub mod golden;
pub mod gt_basis;
pub mod linalg;
pub mod mvpoly;
pub mod operators;
pub mod par;
pub mod parse;
pub mod render;
pub mod sample;
pub mod scalar;
pub mod selftest;
pub mod special;
pub mod verify;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

pub use clifford::{Blade, Multivector};
pub use error::{Error, Result};
pub use mvpoly::{MVPolynomial, Monomial};
pub use scalar::{AlgebraMode, Scalar};
