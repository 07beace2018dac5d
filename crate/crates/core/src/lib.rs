//! Exact algebra for quadratic bent Boolean functions in trace form.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`gf2n`]: arithmetic in GF(2^n), n ≤ 32, over a polynomial basis;
//! - [`skewpoly`]: the skew-polynomial ring GF(2^n)[x; σ] with right division
//!   and greatest common right divisors;
//! - [`linpoly`]: linearized polynomials, Dickson matrices and three
//!   independent permutation tests;
//! - [`boolfun`]: trace-form Boolean functions, truth tables, Walsh spectra,
//!   quadratic rank and algebraic degree;
//! - [`constructions`]: the quadratic bent families and their criteria.
//!
//! ```
//! use bentpoly_core::gf2n::FieldSpec;
//! use bentpoly_core::constructions::{enumerate_new, first_noncube};
//!
//! let field = FieldSpec::new(8).unwrap();
//! let a = first_noncube(&field).unwrap();
//! for (_, repr) in enumerate_new(&field, a).unwrap() {
//!     let f = repr.truth_table().unwrap();
//!     assert!(f.is_bent(&field).unwrap());
//! }
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitmat;
pub mod boolfun;
pub mod constructions;
mod error;
pub mod gf2n;
pub mod gf2poly;
pub mod linpoly;
pub mod skewpoly;

pub use error::{Error, Result};
