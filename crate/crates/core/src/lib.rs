//! Quaternary Hermitian linear complementary dual (LCD) codes.
//!
//! The crate covers the whole path from field arithmetic to certified
//! results:
//!
//! - [`gf4`]: GF(4) scalars, vectors and matrices with rank, RREF and null spaces.
//! - [`code`]: linear codes, duals, LCD tests, weight enumerators, the
//!   MacWilliams transform, shortening and puncturing, monomial maps, and
//!   entanglement-assisted quantum parameters.
//! - [`search`]: the row-by-row exhaustive search for systematic generator
//!   matrices with minimum-weight pruning, parallel partitioning and
//!   checkpoint/resume.
//! - [`bounds`]: the sphere-packing bound, closed forms for the largest
//!   minimum weight in dimensions `n-1`, `n-2`, `n-3`, and recorded facts.
//! - [`catalog`]: named codes with explicit matrices and their verification.
//! - [`io`]: the plain-text code file format.
//!
//! ```
//! use lcd4::catalog;
//!
//! let c15 = catalog::build("C15").unwrap();
//! assert!(c15.is_hermitian_lcd());
//! assert_eq!(c15.eaqecc_params().unwrap().to_string(), "[[15,7,7;8]]_2");
//! ```

pub mod bounds;
pub mod catalog;
pub mod code;
pub mod error;
pub mod gf4;
pub mod io;
pub mod search;

pub use code::{CodeParams, LinearCode, MonomialTransform, QuantumParams, WeightEnumerator};
pub use error::{Error, Result};
pub use gf4::{Gf4, Gf4Matrix, Gf4Vector};
