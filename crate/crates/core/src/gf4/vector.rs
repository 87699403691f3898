use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use super::Gf4;
use crate::error::{Error, Result};

/// A vector over GF(4) of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf4Vector(Vec<Gf4>);

impl Gf4Vector {
    pub fn new(symbols: Vec<Gf4>) -> Gf4Vector {
        Gf4Vector(symbols)
    }

    /// The zero vector `0_n`.
    pub fn zeros(n: usize) -> Gf4Vector {
        Gf4Vector(vec![Gf4::ZERO; n])
    }

    /// The all-one vector `1_n`.
    pub fn ones(n: usize) -> Gf4Vector {
        Gf4Vector(vec![Gf4::ONE; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Gf4] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Gf4> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<Gf4> {
        self.0
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|s| !s.is_zero()).count()
    }

    /// First nonzero symbol, if any.
    pub fn leading(&self) -> Option<Gf4> {
        self.0.iter().copied().find(|s| !s.is_zero())
    }

    pub fn conj(&self) -> Gf4Vector {
        Gf4Vector(self.0.iter().map(|s| s.conj()).collect())
    }

    pub fn scale(&self, c: Gf4) -> Gf4Vector {
        Gf4Vector(self.0.iter().map(|s| c * *s).collect())
    }

    pub fn add(&self, other: &Gf4Vector) -> Result<Gf4Vector> {
        self.check_len(other)?;
        Ok(Gf4Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a + *b).collect(),
        ))
    }

    /// `Σ xᵢ ȳᵢ`.
    pub fn hermitian_inner_product(&self, other: &Gf4Vector) -> Result<Gf4> {
        self.check_len(other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| *x * y.conj())
            .sum())
    }

    /// `Σ xᵢ yᵢ`.
    pub fn euclidean_inner_product(&self, other: &Gf4Vector) -> Result<Gf4> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(x, y)| *x * *y).sum())
    }

    fn check_len(&self, other: &Gf4Vector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Gf4Vector {
    type Output = Gf4;

    fn index(&self, i: usize) -> &Gf4 {
        &self.0[i]
    }
}

impl From<Vec<Gf4>> for Gf4Vector {
    fn from(v: Vec<Gf4>) -> Gf4Vector {
        Gf4Vector(v)
    }
}

impl FromIterator<Gf4> for Gf4Vector {
    fn from_iter<I: IntoIterator<Item = Gf4>>(iter: I) -> Gf4Vector {
        Gf4Vector(iter.into_iter().collect())
    }
}

/// Symbols separated by whitespace, or written contiguously: `"0 1 w W"` or `"01wW"`.
impl FromStr for Gf4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gf4Vector> {
        s.chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(col, c)| {
                Gf4::from_symbol(c).ok_or_else(|| Error::Parse {
                    line: 1,
                    column: col + 1,
                    message: format!("invalid GF(4) symbol {c:?}"),
                })
            })
            .collect()
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, s) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
