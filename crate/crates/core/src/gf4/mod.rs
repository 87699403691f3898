//! Arithmetic over GF(4) and dense linear algebra on top of it.

mod matrix;
pub(crate) mod packed;
mod scalar;
mod vector;

pub use matrix::{Gf4Matrix, Rref};
pub use packed::Packed;
pub use scalar::Gf4;
pub use vector::Gf4Vector;
