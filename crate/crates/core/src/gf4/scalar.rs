//! Elements of GF(4) = {0, 1, ω, ω²} with ω² = ω + 1.
//!
//! Each element is stored in its two-bit encoding `0 ↔ 00`, `1 ↔ 01`,
//! `ω ↔ 10`, `ω² ↔ 11`, i.e. `a + bω` is stored as `a | b << 1`. Addition is
//! XOR of the encodings; multiplication goes through a 16-entry table.
//!
//! ```text
//! × | 0  1  ω  ω²
//! --+-------------
//! 0 | 0  0  0  0
//! 1 | 0  1  ω  ω²
//! ω | 0  ω  ω² 1
//! ω²| 0  ω² 1  ω
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use crate::error::Error;

const MUL: [u8; 16] = [
    0, 0, 0, 0, //
    0, 1, 2, 3, //
    0, 2, 3, 1, //
    0, 3, 1, 2, //
];

/// An element of GF(4).
///
/// The derived order is the encoding order `0 < 1 < ω < ω²`, which is the
/// symbol order used when rows of a generator matrix are compared.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    /// All field elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    /// The multiplicative group, generated by ω.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds an element from its two-bit encoding; higher bits are ignored.
    #[inline]
    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugation `x ↦ x²`: fixes 0 and 1, swaps ω and ω².
    #[inline]
    pub const fn conj(self) -> Gf4 {
        // a + bω ↦ (a + b) + bω
        Gf4(self.0 ^ (self.0 >> 1))
    }

    /// Multiplicative inverse, `None` for zero.
    #[inline]
    pub const fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            // x⁻¹ = x² = conj(x) on the multiplicative group of order 3
            _ => Some(self.conj()),
        }
    }

    /// Parses one symbol of the textual alphabet `0`, `1`, `w` (ω), `W` (ω²).
    pub fn from_symbol(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }
}

// Addition in characteristic 2 is XOR of the bit encodings.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

// Characteristic 2: subtraction is addition and every element is its own negative.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[((self.0 << 2) | rhs.0) as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Gf4 {
    fn sum<I: Iterator<Item = Gf4>>(iter: I) -> Gf4 {
        iter.fold(Gf4::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl TryFrom<char> for Gf4 {
    type Error = Error;

    fn try_from(c: char) -> Result<Gf4, Error> {
        Gf4::from_symbol(c).ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid GF(4) symbol {c:?}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: Gf4 = Gf4::OMEGA;
    const W2: Gf4 = Gf4::OMEGA2;

    #[test]
    fn addition_examples() {
        assert_eq!(W + W2, Gf4::ONE);
        assert_eq!(Gf4::ONE + W, W2);
        for x in Gf4::ALL {
            assert_eq!(x + x, Gf4::ZERO);
        }
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(W * W, W2);
        assert_eq!(W * W2, Gf4::ONE);
        for x in Gf4::ALL {
            assert_eq!(Gf4::ZERO * x, Gf4::ZERO);
            assert_eq!(x * Gf4::ONE, x);
        }
    }

    #[test]
    fn defining_relation() {
        assert_eq!(W * W, W + Gf4::ONE);
        for x in Gf4::NONZERO {
            assert_eq!(x * x * x, Gf4::ONE);
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(W.conj(), W2);
        assert_eq!(W2.conj(), W);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        assert_eq!(Gf4::ZERO.conj(), Gf4::ZERO);
        for x in Gf4::ALL {
            assert_eq!(x.conj(), x * x);
            assert_eq!(x.conj().conj(), x);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            assert_eq!(a + Gf4::ZERO, a);
            if let Some(inv) = a.inv() {
                assert_eq!(a * inv, Gf4::ONE);
            } else {
                assert!(a.is_zero());
            }
            for b in Gf4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a + b).conj(), a.conj() + b.conj());
                assert_eq!((a * b).conj(), a.conj() * b.conj());
                for c in Gf4::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn symbols_round_trip() {
        for x in Gf4::ALL {
            assert_eq!(Gf4::from_symbol(x.symbol()), Some(x));
        }
        assert_eq!(Gf4::from_symbol('2'), None);
        assert!(Gf4::try_from('x').is_err());
    }

    #[test]
    fn order_is_encoding_order() {
        assert!(Gf4::ZERO < Gf4::ONE && Gf4::ONE < W && W < W2);
    }
}
