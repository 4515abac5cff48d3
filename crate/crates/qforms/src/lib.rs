//! Exact-arithmetic toolkit for the linear algebra of squared linear forms.
//!
//! Everything here is computed over the rationals with no tolerances:
//! sparse multivariate polynomials ([`poly`]), exact matrices with
//! fraction-free elimination ([`linalg`]), independence decisions for sets
//! of squared linear forms and their k-fold products ([`independence`]),
//! and symbolic verification of the determinant-flavored product
//! identities ([`identity`]).

pub mod identity;
pub mod independence;
pub mod linalg;
pub mod poly;
pub mod rat;

pub use linalg::RationalMatrix;
pub use poly::{Monomial, Polynomial, VarSet};
pub use rat::Rational;
