//! Minimum-weight bookkeeping for a prefix `r_1, …, r_m` of the block `A`.
//!
//! A codeword of the `[m + (n-k), m]` prefix code is `(λ | λR)` with weight
//! `wt(λ) + wt(λR)`. While `4^m ≤ 4^(n-k)` every combination is kept
//! explicitly; past that point only the smallest message weight per
//! redundancy value is kept, which is all the weight test needs.

use crate::gf4::{Gf4, Packed};

const UNREACHED: u8 = u8::MAX;

// Redundancy parts fit in 32 symbols: low plane in the low half, high plane in the high half.
#[inline]
fn pack(p: Packed) -> u64 {
    p.lo | (p.hi << 32)
}

#[inline]
fn unpack(x: u64) -> Packed {
    Packed {
        lo: x & 0xffff_ffff,
        hi: x >> 32,
    }
}

#[inline]
fn weight(x: u64) -> u32 {
    ((x | (x >> 32)) & 0xffff_ffff).count_ones()
}

#[derive(Debug, Clone)]
enum Combos {
    /// Redundancy part and message weight of every combination; the entries
    /// from `fresh` on are the ones that involve the newest row.
    Span {
        red: Vec<u64>,
        msg_weight: Vec<u8>,
        fresh: usize,
    },
    /// Smallest message weight per redundancy value (index `lo | hi << r`),
    /// and the indices that improved with the newest row.
    Table {
        min_weight: Vec<u8>,
        changed: Vec<u32>,
    },
}

#[derive(Debug, Clone)]
pub(crate) struct PrefixState {
    redundancy: usize,
    rows: usize,
    combos: Combos,
}

impl PrefixState {
    /// State of the single-row prefix `r_1`.
    pub(crate) fn root(redundancy: usize, first: Packed) -> PrefixState {
        let base = PrefixState {
            redundancy,
            rows: 0,
            combos: Combos::Span {
                red: vec![0],
                msg_weight: vec![0],
                fresh: 0,
            },
        };
        base.extend(first)
    }

    /// Whether appending `row` keeps every codeword weight `≥ d`, checked
    /// against all combinations of the prefix.
    pub(crate) fn admits(&self, row: Packed, d: u32) -> bool {
        let c = pack(row);
        match &self.combos {
            Combos::Span {
                red, msg_weight, ..
            } => red
                .iter()
                .zip(msg_weight)
                .all(|(r, w)| u32::from(*w) + 1 + weight(r ^ c) >= d),
            Combos::Table { min_weight, .. } => min_weight
                .iter()
                .enumerate()
                .all(|(v, w)| u32::from(*w) + 1 + self.index_weight(v as u32, c) >= d),
        }
    }

    /// Like [`admits`](Self::admits), but only against combinations that
    /// involve the newest row. Valid for rows already admitted by the parent.
    pub(crate) fn admits_fresh(&self, row: Packed, d: u32) -> bool {
        let c = pack(row);
        match &self.combos {
            Combos::Span {
                red,
                msg_weight,
                fresh,
            } => red[*fresh..]
                .iter()
                .zip(&msg_weight[*fresh..])
                .all(|(r, w)| u32::from(*w) + 1 + weight(r ^ c) >= d),
            Combos::Table {
                min_weight,
                changed,
            } => changed
                .iter()
                .all(|&v| u32::from(min_weight[v as usize]) + 1 + self.index_weight(v, c) >= d),
        }
    }

    #[inline]
    fn index_weight(&self, v: u32, c: u64) -> u32 {
        let r = self.redundancy;
        let mask = (1u64 << r) - 1;
        let v = u64::from(v);
        let packed = (v & mask) | ((v >> r) << 32);
        weight(packed ^ c)
    }

    #[inline]
    fn index_of(&self, x: u64) -> usize {
        let p = unpack(x);
        (p.lo | (p.hi << self.redundancy)) as usize
    }

    /// The state after appending `row`.
    pub(crate) fn extend(&self, row: Packed) -> PrefixState {
        let multiples = [
            pack(row),
            pack(row.scale(Gf4::OMEGA)),
            pack(row.scale(Gf4::OMEGA2)),
        ];
        let rows = self.rows + 1;
        let combos = match &self.combos {
            Combos::Span {
                red, msg_weight, ..
            } if rows <= self.redundancy => {
                let old = red.len();
                let mut new_red = Vec::with_capacity(old * 4);
                let mut new_w = Vec::with_capacity(old * 4);
                new_red.extend_from_slice(red);
                new_w.extend_from_slice(msg_weight);
                for m in multiples {
                    new_red.extend(red.iter().map(|r| r ^ m));
                    new_w.extend(msg_weight.iter().map(|w| w + 1));
                }
                Combos::Span {
                    red: new_red,
                    msg_weight: new_w,
                    fresh: old,
                }
            }
            Combos::Span {
                red, msg_weight, ..
            } => {
                let mut table = vec![UNREACHED; 1usize << (2 * self.redundancy)];
                for (r, w) in red.iter().zip(msg_weight) {
                    let i = self.index_of(*r);
                    table[i] = table[i].min(*w);
                }
                self.table_step(table, &multiples)
            }
            Combos::Table { min_weight, .. } => self.table_step(min_weight.clone(), &multiples),
        };
        PrefixState {
            redundancy: self.redundancy,
            rows,
            combos,
        }
    }

    fn table_step(&self, old: Vec<u8>, multiples: &[u64; 3]) -> Combos {
        let idx: Vec<usize> = multiples.iter().map(|m| self.index_of(*m)).collect();
        let mut new = old.clone();
        let mut changed = Vec::new();
        for (v, slot) in new.iter_mut().enumerate() {
            // v = u + αr  ⇔  u = v + αr; in index form addition is XOR
            let best = idx
                .iter()
                .map(|&m| old[v ^ m].saturating_add(1))
                .min()
                .unwrap_or(UNREACHED);
            if best < *slot {
                *slot = best;
                changed.push(v as u32);
            }
        }
        Combos::Table {
            min_weight: new,
            changed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Packed {
        let v: Vec<Gf4> = s.chars().map(|c| Gf4::from_symbol(c).unwrap()).collect();
        Packed::from_symbols(&v)
    }

    #[test]
    fn span_and_table_agree() {
        // redundancy 2: the third row forces the table representation
        let rows = [p("11"), p("1w"), p("1W"), p("01")];
        let mut state = PrefixState::root(2, rows[0]);
        for r in &rows[1..] {
            state = state.extend(*r);
        }
        assert!(matches!(state.combos, Combos::Table { .. }));
        for x in ["10", "11", "0w", "wW"] {
            let c = p(x);
            // brute force: min over all λ ∈ F_4^4 of wt(λ)+1+wt(λR + c)
            let mut best = u32::MAX;
            for code in 0..256u32 {
                let mut acc = c;
                let mut w = 1;
                for (i, r) in rows.iter().enumerate() {
                    let coef = Gf4::from_bits(((code >> (2 * i)) & 3) as u8);
                    if !coef.is_zero() {
                        w += 1;
                    }
                    acc = acc.xor(r.scale(coef));
                }
                best = best.min(w + acc.weight());
            }
            for d in 1..6 {
                assert_eq!(state.admits(c, d), best >= d, "row {x}, d {d}");
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let state = PrefixState::root(3, p("011"));
        let x = pack(p("wW1"));
        let i = state.index_of(x);
        assert_eq!(state.index_weight(i as u32, 0), 3);
    }
}
