//! Command-line front-end, file formats and verification harness for
//! [`bentpoly_core`].
//!
//! ```
//! let mut out = Vec::new();
//! let code = bentpoly::cli::run(
//!     ["bentpoly", "verify", "--family", "li", "--n", "6", "--k", "2", "--t", "1"],
//!     &mut out,
//!     &mut std::io::sink(),
//! );
//! assert_eq!(code, 0);
//! assert!(String::from_utf8(out).unwrap().contains("predicted=false verified=false"));
//! ```

pub mod acceptance;
pub mod cli;
pub mod families;
pub mod formats;
pub mod report;
