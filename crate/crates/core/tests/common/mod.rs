//! Reference implementations kept independent of the library: GF(4)
//! arithmetic from tables, naive enumeration, a literal brute force over the
//! systematic normal form, and equivalence classes of codes as multisets of
//! projective columns.
//!
//! Symbols are `u8` in the same 2-bit encoding as the library: 0, 1, 2 = ω,
//! 3 = ω².

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use lcd4::{Gf4, Gf4Matrix, LinearCode};

const LOG: [usize; 4] = [usize::MAX, 0, 1, 2];
const EXP: [u8; 3] = [1, 2, 3];

pub fn mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        0
    } else {
        EXP[(LOG[a as usize] + LOG[b as usize]) % 3]
    }
}

pub fn conj(a: u8) -> u8 {
    mul(a, a)
}

pub fn inv(a: u8) -> u8 {
    assert_ne!(a, 0);
    EXP[(3 - LOG[a as usize]) % 3]
}

pub fn to_u8(m: &Gf4Matrix) -> Vec<Vec<u8>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).bits()).collect())
        .collect()
}

pub fn to_code(rows: &[Vec<u8>]) -> LinearCode {
    let rows: Vec<Vec<Gf4>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Gf4::from_bits(x)).collect())
        .collect();
    LinearCode::from_rows(&rows).expect("full rank")
}

pub fn rank(mut m: Vec<Vec<u8>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let s = inv(m[rank][c]);
        let pivot: Vec<u8> = m[rank].iter().map(|&x| mul(x, s)).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x ^= mul(f, y);
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn hermitian_gram(g: &[Vec<u8>]) -> Vec<Vec<u8>> {
    g.iter()
        .map(|a| {
            g.iter()
                .map(|b| a.iter().zip(b).fold(0, |s, (&x, &y)| s ^ mul(x, conj(y))))
                .collect()
        })
        .collect()
}

pub fn is_hermitian_lcd(g: &[Vec<u8>]) -> bool {
    rank(hermitian_gram(g)) == g.len()
}

/// Calls `f` with every codeword `m·G`.
pub fn for_each_codeword(g: &[Vec<u8>], mut f: impl FnMut(&[u8])) {
    let k = g.len();
    let n = g[0].len();
    let mut word = vec![0u8; n];
    for m in 0..1usize << (2 * k) {
        word.iter_mut().for_each(|x| *x = 0);
        for (i, row) in g.iter().enumerate() {
            let c = ((m >> (2 * i)) & 3) as u8;
            if c != 0 {
                for (x, &y) in word.iter_mut().zip(row) {
                    *x ^= mul(c, y);
                }
            }
        }
        f(&word);
    }
}

pub fn weight_distribution(g: &[Vec<u8>]) -> Vec<u128> {
    let mut counts = vec![0u128; g[0].len() + 1];
    for_each_codeword(g, |w| counts[w.iter().filter(|&&x| x != 0).count()] += 1);
    counts
}

pub fn min_weight(g: &[Vec<u8>]) -> usize {
    weight_distribution(g)
        .iter()
        .skip(1)
        .position(|&c| c > 0)
        .map_or(0, |i| i + 1)
}

/// Rows of `A` as base-4 integers with the first symbol most significant,
/// so integer order is lexicographic order over `0 < 1 < ω < ω²`.
fn row_vec(x: usize, len: usize) -> Vec<u8> {
    (0..len)
        .map(|j| ((x >> (2 * (len - 1 - j))) & 3) as u8)
        .collect()
}

/// Every `A` satisfying the four normal-form conditions literally, with
/// `(I_k | A)` Hermitian LCD of minimum weight at least `d`. No pruning.
pub fn brute_force_normal_form(n: usize, k: usize, d: usize) -> BTreeSet<Vec<Vec<u8>>> {
    let r = n - k;
    let rows: Vec<Vec<u8>> = (0..1usize << (2 * r)).map(|x| row_vec(x, r)).collect();
    let weight = |v: &[u8]| v.iter().filter(|&&x| x != 0).count();
    let first_row: Vec<u8> = (0..r).map(|j| u8::from(j >= r - (d - 1))).collect();
    let ok = |v: &[u8]| weight(v) >= d - 1 && v.iter().find(|&&x| x != 0) == Some(&1);
    let mut out = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        rows: &[Vec<u8>],
        chosen: &mut Vec<usize>,
        k: usize,
        d: usize,
        first: &[u8],
        ok: &dyn Fn(&[u8]) -> bool,
        out: &mut BTreeSet<Vec<Vec<u8>>>,
    ) {
        if chosen.len() == k {
            let a: Vec<Vec<u8>> = chosen.iter().map(|&i| rows[i].clone()).collect();
            let g: Vec<Vec<u8>> = a
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    (0..k)
                        .map(|j| u8::from(i == j))
                        .chain(row.iter().copied())
                        .collect()
                })
                .collect();
            if is_hermitian_lcd(&g) && min_weight(&g) >= d {
                out.insert(a);
            }
            return;
        }
        for (x, row) in rows.iter().enumerate() {
            let fits = match chosen.last() {
                None => row.as_slice() == first,
                Some(&prev) => ok(row) && if d >= 3 { x > prev } else { x >= prev },
            };
            if fits {
                chosen.push(x);
                rec(rows, chosen, k, d, first, ok, out);
                chosen.pop();
            }
        }
    }
    rec(&rows, &mut chosen, k, d, &first_row, &ok, &mut out);
    out
}

/// `A` of a systematic code `(I_k | A)`.
pub fn redundancy_part(code: &LinearCode) -> Vec<Vec<u8>> {
    let g = to_u8(code.generator());
    g.into_iter().map(|row| row[code.k()..].to_vec()).collect()
}

/// Columns in `GF(4)^k` up to nonzero scalars: zero plus the normalized
/// projective points, each column encoded base 4 with entry `i` at `4^i`.
pub struct ColumnSpace {
    pub k: usize,
    pub symbols: Vec<usize>,
    index: Vec<usize>,
}

impl ColumnSpace {
    pub fn new(k: usize) -> ColumnSpace {
        let size = 1usize << (2 * k);
        let mut index = vec![usize::MAX; size];
        let mut symbols = Vec::new();
        for (c, slot) in index.iter_mut().enumerate() {
            if Self::normalize_raw(k, c) == c {
                *slot = symbols.len();
                symbols.push(c);
            }
        }
        let index = (0..size)
            .map(|c| index[Self::normalize_raw(k, c)])
            .collect();
        ColumnSpace { k, symbols, index }
    }

    fn entry(c: usize, i: usize) -> u8 {
        ((c >> (2 * i)) & 3) as u8
    }

    fn normalize_raw(k: usize, c: usize) -> usize {
        let Some(lead) = (0..k).map(|i| Self::entry(c, i)).find(|&x| x != 0) else {
            return 0;
        };
        let s = inv(lead);
        (0..k)
            .map(|i| (mul(Self::entry(c, i), s) as usize) << (2 * i))
            .sum()
    }

    pub fn symbol_of(&self, column: &[u8]) -> usize {
        self.index[column
            .iter()
            .enumerate()
            .map(|(i, &x)| (x as usize) << (2 * i))
            .sum::<usize>()]
    }

    /// Image of each symbol under every invertible `k × k` matrix.
    pub fn group_action(&self) -> Vec<Vec<u8>> {
        let k = self.k;
        let mut out = Vec::new();
        for code in 0..1usize << (2 * k * k) {
            let m: Vec<Vec<u8>> = (0..k)
                .map(|r| {
                    (0..k)
                        .map(|c| ((code >> (2 * (r * k + c))) & 3) as u8)
                        .collect()
                })
                .collect();
            if rank(m.clone()) < k {
                continue;
            }
            let perm = self
                .symbols
                .iter()
                .map(|&c| {
                    let col: Vec<u8> = (0..k)
                        .map(|r| (0..k).fold(0, |s, j| s ^ mul(m[r][j], Self::entry(c, j))))
                        .collect();
                    self.symbol_of(&col) as u8
                })
                .collect();
            out.push(perm);
        }
        out
    }
}

/// A multiset of symbols as 4-bit counts.
pub fn multiset_key(counts: &[u8]) -> u128 {
    counts
        .iter()
        .enumerate()
        .fold(0, |key, (i, &c)| key | (c as u128) << (4 * i))
}

pub fn code_key(space: &ColumnSpace, g: &[Vec<u8>]) -> u128 {
    let mut counts = vec![0u8; space.symbols.len()];
    for j in 0..g[0].len() {
        let col: Vec<u8> = g.iter().map(|row| row[j]).collect();
        counts[space.symbol_of(&col)] += 1;
    }
    multiset_key(&counts)
}

/// Every column multiset of size `n` spanning a Hermitian LCD `[n, k]` code
/// of minimum weight exactly `d`. Column order and column scalars do not
/// change the weight distribution or the LCD property, so this set, taken
/// up to the action of `GL(k, 4)`, is the set of monomial equivalence
/// classes.
pub fn lcd_multisets(space: &ColumnSpace, n: usize, d: usize) -> HashSet<u128> {
    let k = space.k;
    let s = space.symbols.len();
    let messages = 1usize << (2 * k);
    let entry = ColumnSpace::entry;
    // nz[m * s + x]: whether message m has a nonzero inner product with symbol x
    let nz: Vec<u32> = (0..messages)
        .flat_map(|m| {
            space.symbols.iter().map(move |&c| {
                u32::from((0..k).fold(0, |a, i| a ^ mul(entry(m, i), entry(c, i))) != 0)
            })
        })
        .collect();
    // outer[x]: c c̄ᵀ for symbol x, row-major
    let outer: Vec<Vec<u8>> = space
        .symbols
        .iter()
        .map(|&c| {
            (0..k * k)
                .map(|e| mul(entry(c, e / k), conj(entry(c, e % k))))
                .collect()
        })
        .collect();

    struct Walk<'a> {
        n: usize,
        d: u32,
        k: usize,
        s: usize,
        messages: usize,
        nz: &'a [u32],
        outer: &'a [Vec<u8>],
        counts: Vec<u8>,
        weights: Vec<u32>,
        gram: Vec<u8>,
        out: HashSet<u128>,
    }
    impl Walk<'_> {
        fn go(&mut self, from: usize, placed: usize) {
            if placed == self.n {
                let min = self.weights[1..].iter().copied().min().unwrap_or(0);
                if min == self.d {
                    let g: Vec<Vec<u8>> = self.gram.chunks(self.k).map(<[u8]>::to_vec).collect();
                    if rank(g) == self.k {
                        self.out.insert(multiset_key(&self.counts));
                    }
                }
                return;
            }
            for x in from..self.s {
                self.counts[x] += 1;
                for m in 0..self.messages {
                    self.weights[m] += self.nz[m * self.s + x];
                }
                for (g, &o) in self.gram.iter_mut().zip(&self.outer[x]) {
                    *g ^= o;
                }
                self.go(x, placed + 1);
                for (g, &o) in self.gram.iter_mut().zip(&self.outer[x]) {
                    *g ^= o;
                }
                for m in 0..self.messages {
                    self.weights[m] -= self.nz[m * self.s + x];
                }
                self.counts[x] -= 1;
            }
        }
    }
    let mut walk = Walk {
        n,
        d: d as u32,
        k,
        s,
        messages,
        nz: &nz,
        outer: &outer,
        counts: vec![0; s],
        weights: vec![0; messages],
        gram: vec![0; k * k],
        out: HashSet::new(),
    };
    walk.go(0, 0);
    walk.out
}

/// Union of the `GL(k, 4)` orbits of the given multisets.
pub fn orbit_union(space: &ColumnSpace, keys: impl IntoIterator<Item = u128>) -> HashSet<u128> {
    let action = space.group_action();
    let s = space.symbols.len();
    let mut union = HashSet::new();
    for key in keys {
        if union.contains(&key) {
            continue;
        }
        let counts: Vec<u8> = (0..s).map(|i| ((key >> (4 * i)) & 15) as u8).collect();
        for perm in &action {
            let mut image = vec![0u8; s];
            for (x, &c) in counts.iter().enumerate() {
                image[perm[x] as usize] += c;
            }
            union.insert(multiset_key(&image));
        }
    }
    union
}

pub struct CompletenessReport {
    pub searched: usize,
    pub brute_force: usize,
    pub classes_reached: usize,
    pub lcd_multisets: usize,
    pub normal_form_matches: bool,
    pub classes_match: bool,
}

/// Compares an exhaustive search against the literal brute force over the
/// normal form, and the equivalence classes it reaches against all LCD
/// codes of minimum weight exactly `d`.
pub fn completeness(n: usize, k: usize, d: usize) -> CompletenessReport {
    use lcd4::search::{run_search, SearchConfig};
    let out = run_search(&SearchConfig::new(n, k, d)).expect("valid search");
    let searched: BTreeSet<Vec<Vec<u8>>> = out.found.iter().map(redundancy_part).collect();
    let brute = brute_force_normal_form(n, k, d);

    let space = ColumnSpace::new(k);
    let reached = orbit_union(
        &space,
        out.found
            .iter()
            .map(|c| code_key(&space, &to_u8(c.generator()))),
    );
    let all = lcd_multisets(&space, n, d);
    CompletenessReport {
        searched: searched.len(),
        brute_force: brute.len(),
        classes_reached: reached.len(),
        lcd_multisets: all.len(),
        normal_form_matches: searched == brute && out.found.len() == searched.len(),
        classes_match: reached == all,
    }
}
