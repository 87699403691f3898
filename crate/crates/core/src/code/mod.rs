//! Linear codes over GF(4) presented by generator matrices.

mod enumerate;
mod enumerator;
mod monomial;
mod params;

pub use enumerator::WeightEnumerator;
pub use monomial::MonomialTransform;
pub use params::{CodeParams, QuantumParams};

use crate::error::{Error, Result};
use crate::gf4::packed::MAX_LEN;
use crate::gf4::{Gf4, Gf4Matrix, Gf4Vector, Packed};

/// Codes with at most this many dimensions are enumerated directly; larger
/// ones go through the dual and the MacWilliams transform.
pub const DIRECT_ENUMERATION_MAX_K: usize = 12;

/// An `[n, k]` code over GF(4), the row space of a full-rank `k × n` generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    generator: Gf4Matrix,
}

impl LinearCode {
    /// Wraps a full-rank generator matrix with `1 ≤ k ≤ n ≤ 64`.
    pub fn new(generator: Gf4Matrix) -> Result<LinearCode> {
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || n == 0 {
            return Err(Error::ZeroDimension);
        }
        if n > MAX_LEN {
            return Err(Error::LengthTooLarge { n, max: MAX_LEN });
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        Ok(LinearCode { generator })
    }

    /// The code spanned by the rows of `m`, which need not be independent.
    pub fn span(m: &Gf4Matrix) -> Result<LinearCode> {
        let r = m.rref();
        LinearCode::new(r.matrix.take_rows(r.rank))
    }

    /// The code generated by `(I_k | a)`.
    pub fn systematic(a: &Gf4Matrix) -> Result<LinearCode> {
        LinearCode::new(Gf4Matrix::identity(a.rows()).hstack(a)?)
    }

    pub fn from_rows<R: AsRef<[Gf4]>>(rows: &[R]) -> Result<LinearCode> {
        LinearCode::new(Gf4Matrix::from_rows(rows)?)
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Gf4Matrix {
        &self.generator
    }

    fn packed_rows(m: &Gf4Matrix) -> Vec<Packed> {
        m.row_iter().map(Packed::from_symbols).collect()
    }

    /// `(I_k | A)` for a column-permuted copy of the code, and the permutation.
    ///
    /// Applying the returned transform to this code yields the code generated
    /// by the returned matrix.
    pub fn standard_form(&self) -> (Gf4Matrix, MonomialTransform) {
        let r = self.generator.rref();
        let mut perm = r.pivots.clone();
        perm.extend((0..self.n()).filter(|c| !r.pivots.contains(c)));
        let g = r.matrix.take_rows(r.rank).select_columns(&perm);
        let t = MonomialTransform::permutation(perm)
            .expect("pivots and free columns form a permutation");
        (g, t)
    }

    /// Generator of `C^⊥_H`, possibly with zero rows when `C = F_4^n`.
    ///
    /// `x ⊥_H C` iff `Ḡ xᵀ = 0`, so this is the null space of the conjugated generator.
    pub fn hermitian_dual_generator(&self) -> Gf4Matrix {
        self.generator.conj().null_space()
    }

    /// Generator of `C^⊥`, possibly with zero rows when `C = F_4^n`.
    pub fn euclidean_dual_generator(&self) -> Gf4Matrix {
        self.generator.null_space()
    }

    /// `C^⊥_H`; fails with [`Error::ZeroDimension`] when `C` is the full space.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        let h = self.hermitian_dual_generator();
        debug_assert!(self
            .generator
            .matmul(&h.conj_transpose())
            .map(|m| m.is_zero())
            .unwrap_or(true));
        LinearCode::new(h)
    }

    /// `C^⊥`; fails with [`Error::ZeroDimension`] when `C` is the full space.
    pub fn euclidean_dual(&self) -> Result<LinearCode> {
        LinearCode::new(self.euclidean_dual_generator())
    }

    /// `G Ḡᵀ`.
    pub fn hermitian_gram(&self) -> Gf4Matrix {
        self.generator
            .matmul(&self.generator.conj_transpose())
            .expect("shapes agree")
    }

    /// Hermitian LCD test: `G Ḡᵀ` is nonsingular.
    pub fn is_hermitian_lcd(&self) -> bool {
        self.hermitian_gram()
            .is_nonsingular()
            .expect("Gram matrix is square")
    }

    /// Hermitian LCD test by definition: `C ∩ C^⊥_H = {0}`, i.e. the stacked
    /// generators of `C` and `C^⊥_H` have rank `n`.
    pub fn is_hermitian_lcd_by_intersection(&self) -> bool {
        let stacked = self
            .generator
            .vstack(&self.hermitian_dual_generator())
            .expect("same length");
        stacked.rank() == self.n()
    }

    /// Euclidean LCD test: `C ∩ C^⊥ = {0}`.
    pub fn is_euclidean_lcd(&self) -> bool {
        let stacked = self
            .generator
            .vstack(&self.euclidean_dual_generator())
            .expect("same length");
        stacked.rank() == self.n()
    }

    /// Whether `x` is a codeword.
    pub fn contains(&self, x: &[Gf4]) -> Result<bool> {
        self.generator.row_space_contains(x)
    }

    /// Calls `f` on each of the `4^k` codewords. Intended for small codes.
    pub fn for_each_codeword(&self, mut f: impl FnMut(Gf4Vector)) {
        let n = self.n();
        let rows = LinearCode::packed_rows(&self.generator);
        let mut msg = vec![0u8; self.k()];
        loop {
            let mut acc = Packed::ZERO;
            for (g, &c) in rows.iter().zip(&msg) {
                acc = acc.xor(g.scale(Gf4::from_bits(c)));
            }
            f(Gf4Vector::new(acc.to_symbols(n)));
            let Some(pos) = msg.iter().position(|&c| c != 3) else {
                break;
            };
            msg[pos] += 1;
            msg[..pos].iter_mut().for_each(|c| *c = 0);
        }
    }

    /// The minimum nonzero weight `d(C)`.
    ///
    /// Messages are enumerated on the systematic form by increasing weight,
    /// stopping once the message weight reaches the best codeword weight.
    pub fn minimum_weight(&self) -> usize {
        let r = self.generator.rref();
        let rows = LinearCode::packed_rows(&r.matrix);
        enumerate::minimum_weight_systematic(&rows) as usize
    }

    /// `[n, k, d]₄`.
    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.n(), self.k(), self.minimum_weight())
    }

    /// The full weight distribution, by direct enumeration for
    /// `k ≤ DIRECT_ENUMERATION_MAX_K` and through the dual otherwise.
    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        if self.k() <= DIRECT_ENUMERATION_MAX_K {
            return Ok(self.weight_enumerator_direct());
        }
        if self.n() - self.k() <= DIRECT_ENUMERATION_MAX_K {
            return self.weight_enumerator_via_dual();
        }
        Err(Error::TooLargeToEnumerate {
            n: self.n(),
            k: self.k(),
        })
    }

    /// Direct enumeration of all `4^k` codewords.
    pub fn weight_enumerator_direct(&self) -> WeightEnumerator {
        let rows = LinearCode::packed_rows(&self.generator);
        WeightEnumerator::new(enumerate::weight_distribution(&rows, self.n()))
    }

    /// Enumerates `C^⊥_H` directly and transforms back.
    pub fn weight_enumerator_via_dual(&self) -> Result<WeightEnumerator> {
        if self.k() == self.n() {
            return WeightEnumerator::new(std::iter::once(1).chain(vec![0; self.n()]).collect())
                .macwilliams_transform(0);
        }
        let dual = self.hermitian_dual()?;
        dual.weight_enumerator_direct()
            .macwilliams_transform(dual.k())
    }

    /// Nonzero codewords of weight at most `max_weight`, found by testing
    /// every low-weight vector against the parity checks.
    pub fn low_weight_codewords(&self, max_weight: usize) -> Vec<Gf4Vector> {
        let checks = LinearCode::packed_rows(&self.hermitian_dual_generator());
        enumerate::low_weight_members(&checks, self.n(), max_weight)
            .into_iter()
            .map(|p| Gf4Vector::new(p.to_symbols(self.n())))
            .collect()
    }

    /// `S(C, i)`: codewords vanishing at coordinate `i` (1-based), with the
    /// coordinate deleted.
    pub fn shorten(&self, i: usize) -> Result<LinearCode> {
        let col = self.coordinate(i)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&c| c != col).collect();
        let g = &self.generator;
        let Some(pivot) = (0..self.k()).find(|&r| !g.get(r, col).is_zero()) else {
            return LinearCode::new(g.select_columns(&keep));
        };
        let p = Gf4Vector::new(g.row(pivot).to_vec());
        let inv = g.get(pivot, col).inv().expect("pivot is nonzero");
        let mut rows = Vec::with_capacity(self.k() - 1);
        for r in (0..self.k()).filter(|&r| r != pivot) {
            let row = Gf4Vector::new(g.row(r).to_vec());
            let f = g.get(r, col) * inv;
            let cleared = row.add(&p.scale(f))?;
            rows.push(keep.iter().map(|&c| cleared[c]).collect::<Vec<Gf4>>());
        }
        if rows.is_empty() {
            return Err(Error::ZeroDimension);
        }
        LinearCode::from_rows(&rows)
    }

    /// The code with coordinate `i` (1-based) deleted from every codeword.
    pub fn puncture(&self, i: usize) -> Result<LinearCode> {
        let col = self.coordinate(i)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&c| c != col).collect();
        if keep.is_empty() {
            return Err(Error::ZeroDimension);
        }
        LinearCode::span(&self.generator.select_columns(&keep))
    }

    /// `{xP : x ∈ C}`.
    pub fn apply_monomial(&self, p: &MonomialTransform) -> Result<LinearCode> {
        let rows = self
            .generator
            .row_iter()
            .map(|r| p.apply(r))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_rows(&rows)
    }

    /// Entanglement-assisted quantum parameters `[[n, k, d; n-k]]₂` of a
    /// Hermitian LCD code.
    pub fn eaqecc_params(&self) -> Result<QuantumParams> {
        if !self.is_hermitian_lcd() {
            return Err(Error::NotHermitianLcd);
        }
        Ok(self.params().into())
    }

    /// Same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n() == other.n()
            && self.k() == other.k()
            && self.generator.rref().matrix == other.generator.rref().matrix
    }

    fn coordinate(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() {
            return Err(Error::CoordinateOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(i - 1)
    }
}
