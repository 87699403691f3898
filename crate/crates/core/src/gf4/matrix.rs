use std::fmt;

use super::{Gf4, Gf4Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(4).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
///
/// Zero rows are kept at the bottom, so `matrix` has the input's shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Gf4Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Gf4Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Gf4>) -> Result<Gf4Matrix> {
        if data.len() != rows * cols {
            return Err(Error::RaggedRows);
        }
        Ok(Gf4Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Gf4Matrix {
        Gf4Matrix {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Gf4Matrix {
        let mut m = Gf4Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf4::ONE);
        }
        m
    }

    /// Stacks rows; all must have the same length. An empty list yields a 0×0 matrix.
    pub fn from_rows<R: AsRef<[Gf4]>>(rows: &[R]) -> Result<Gf4Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::RaggedRows);
            }
            data.extend_from_slice(r);
        }
        Ok(Gf4Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Gf4) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Gf4Vector {
        Gf4Vector::new(self.row(i).to_vec())
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Gf4]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Gf4> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let mut t = Gf4Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    /// `M̄ᵀ`.
    pub fn conj_transpose(&self) -> Gf4Matrix {
        self.transpose().conj()
    }

    pub fn matmul(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Gf4Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] += a * other.get(l, j);
                }
            }
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let rows: Vec<Vec<Gf4>> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).copied().collect())
            .collect();
        let mut m = Gf4Matrix::from_rows(&rows)?;
        m.cols = self.cols + other.cols;
        Ok(m)
    }

    /// `self` above `other`.
    pub fn vstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Gf4Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Gf4Matrix {
        let mut out = Gf4Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Keeps the first `count` rows.
    pub fn take_rows(&self, count: usize) -> Gf4Matrix {
        let count = count.min(self.rows);
        Gf4Matrix {
            rows: count,
            cols: self.cols,
            data: self.data[..count * self.cols].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && !f.is_zero() {
                    m.add_scaled_row(i, r, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// True iff the square matrix has full rank.
    pub fn is_nonsingular(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.rows)
    }

    /// Basis (as rows) of `{x : M xᵀ = 0}`.
    pub fn null_space(&self) -> Gf4Matrix {
        let Rref {
            matrix: r,
            rank,
            pivots,
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Gf4Matrix::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            basis.set(b, f, Gf4::ONE);
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                // characteristic 2: x_p = -R[i][f] = R[i][f]
                basis.set(b, p, r.get(i, f));
            }
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Gf4]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let rank = self.rank();
        let stacked = self.vstack(&Gf4Matrix::from_rows(&[v])?)?;
        Ok(stacked.rank() == rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: Gf4) {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x *= c;
        }
    }

    /// row[dst] += c · row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Gf4) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += c * s;
        }
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, s) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
