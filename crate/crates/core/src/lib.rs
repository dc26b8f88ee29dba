//! Complete weight enumerators of Reed-Solomon (RS) and extended
//! Reed-Solomon (ERS) codes over GF(p^m), computed two ways: by tallying
//! every codeword, and from closed forms built on quadratic character sums
//! for dimensions 2 and 3.
//!
//! Modules, bottom up:
//! - [`gf`]: the field, trace and quadratic character;
//! - [`cyclo`]: exact sums of p-th roots of unity, Gauss sums;
//! - [`counts`]: solution counts of `a2 x^2 + a1 x + a0 = ρ`;
//! - [`codes`]: evaluation sets, encoding, codeword enumeration;
//! - [`cwe`]: enumerator polynomials, brute force and closed forms;
//! - [`json`], [`cli`], [`errata`]: serialization and the command line.

pub mod cli;
pub mod codes;
pub mod counts;
pub mod cwe;
pub mod cyclo;
pub mod errata;
pub mod error;
pub mod gf;
pub mod json;

pub use codes::{CodeSpec, Codeword, EvalKind, MessagePoly};
pub use cwe::{CweComparison, CwePolynomial, ExponentVector, WeightDistribution};
pub use cyclo::CyclotomicInt;
pub use error::{Error, Result};
pub use gf::{FieldContext, FieldElement};
pub use json::CweRecord;
