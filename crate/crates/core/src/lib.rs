//! Arity gap, quasi-arity and sum decompositions of polynomial functions.
//!
//! The crate has three layers:
//!
//! * [`field`]: exact arithmetic in GF(p^k) (order at most 64) and in the rationals.
//! * [`poly`] and [`table`]: sparse polynomials over a field, and dense value
//!   tables of functions `A^n -> B` with brute-force minors, arity gap and
//!   quasi-arity.
//! * [`analyzer`]: polynomial-level gap computation and the decompositions
//!   `f = g + h` where `h` vanishes on tuples with a repeated entry.

pub mod analyzer;
pub mod error;
pub mod field;
pub mod poly;
pub mod table;

pub use error::{Error, Result};
pub use field::{Elem, Field, FiniteField};
pub use poly::{delta, Monomial, Polynomial};
pub use table::{FunctionTable, GapCase, GapReport, PartialTable};
