//! Bitsliced GF(4) words: up to 64 symbols held in two bit planes.
//!
//! Symbol `j` of the word is `lo_j + hi_j·ω`, matching the scalar encoding.

use super::Gf4;

/// Maximum number of symbols a [`Packed`] word holds.
pub const MAX_LEN: usize = 64;

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Packed {
    pub lo: u64,
    pub hi: u64,
}

impl Packed {
    pub const ZERO: Packed = Packed { lo: 0, hi: 0 };

    /// Packs a symbol slice of length at most [`MAX_LEN`].
    pub fn from_symbols(symbols: &[Gf4]) -> Packed {
        debug_assert!(symbols.len() <= MAX_LEN);
        let mut p = Packed::ZERO;
        for (j, s) in symbols.iter().enumerate() {
            p.set(j, *s);
        }
        p
    }

    pub fn to_symbols(self, len: usize) -> Vec<Gf4> {
        (0..len).map(|j| self.get(j)).collect()
    }

    #[inline]
    pub fn get(self, j: usize) -> Gf4 {
        Gf4::from_bits((((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)) as u8)
    }

    #[inline]
    pub fn set(&mut self, j: usize, s: Gf4) {
        let mask = 1u64 << j;
        self.lo = (self.lo & !mask) | (u64::from(s.bits() & 1) << j);
        self.hi = (self.hi & !mask) | (u64::from(s.bits() >> 1) << j);
    }

    #[inline]
    pub fn weight(self) -> u32 {
        (self.lo | self.hi).count_ones()
    }

    #[inline]
    pub fn xor(self, other: Packed) -> Packed {
        Packed {
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi,
        }
    }

    #[inline]
    pub fn scale(self, c: Gf4) -> Packed {
        match c.bits() {
            0 => Packed::ZERO,
            1 => self,
            // ω(a + bω) = b + (a + b)ω
            2 => Packed {
                lo: self.hi,
                hi: self.lo ^ self.hi,
            },
            // ω²(a + bω) = (a + b) + aω
            _ => Packed {
                lo: self.lo ^ self.hi,
                hi: self.lo,
            },
        }
    }

    #[inline]
    pub fn conj(self) -> Packed {
        Packed {
            lo: self.lo ^ self.hi,
            hi: self.hi,
        }
    }

    /// Coordinatewise product.
    #[inline]
    pub fn product(self, other: Packed) -> Packed {
        // (a + bω)(c + dω) = (ac + bd) + (ad + bc + bd)ω
        let (a, b, c, d) = (self.lo, self.hi, other.lo, other.hi);
        Packed {
            lo: (a & c) ^ (b & d),
            hi: (a & d) ^ (b & c) ^ (b & d),
        }
    }

    /// Sum of all symbols.
    #[inline]
    pub fn trace_sum(self) -> Gf4 {
        Gf4::from_bits(((self.lo.count_ones() & 1) | ((self.hi.count_ones() & 1) << 1)) as u8)
    }

    #[inline]
    pub fn euclidean_dot(self, other: Packed) -> Gf4 {
        self.product(other).trace_sum()
    }

    #[inline]
    pub fn hermitian_dot(self, other: Packed) -> Gf4 {
        self.product(other.conj()).trace_sum()
    }

    /// Removes symbol `j`, shifting higher symbols down by one.
    pub fn remove(self, j: usize) -> Packed {
        let low = (1u64 << j) - 1;
        let squeeze = |x: u64| (x & low) | ((x >> 1) & !low);
        Packed {
            lo: squeeze(self.lo),
            hi: squeeze(self.hi),
        }
    }
}
