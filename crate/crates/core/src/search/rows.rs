use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Vector, Packed};

/// Longest redundancy part `n - k` the search handles.
pub const MAX_REDUNDANCY: usize = 16;

/// A candidate row of the redundancy block `A`: weight at least `d - 1`
/// and leading nonzero symbol equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowCandidate {
    vector: Gf4Vector,
    packed: Packed,
}

impl RowCandidate {
    pub(crate) fn new(vector: Gf4Vector) -> RowCandidate {
        let packed = Packed::from_symbols(vector.as_slice());
        RowCandidate { vector, packed }
    }

    pub fn vector(&self) -> &Gf4Vector {
        &self.vector
    }

    pub(crate) fn packed(&self) -> Packed {
        self.packed
    }

    pub fn weight(&self) -> usize {
        self.packed.weight() as usize
    }
}

/// All rows of length `len` with weight `≥ d - 1` and leading symbol 1, in
/// ascending lexicographic order over `0 < 1 < ω < ω²`.
pub fn enumerate_rows(len: usize, d: usize) -> Result<Vec<RowCandidate>> {
    if d == 0 {
        return Err(Error::InvalidParameters(
            "minimum weight must be at least 1".into(),
        ));
    }
    if len == 0 || len > MAX_REDUNDANCY {
        return Err(Error::InvalidParameters(format!(
            "row length {len} outside 1..={MAX_REDUNDANCY}"
        )));
    }
    let mut out = Vec::new();
    let mut row = vec![Gf4::ZERO; len];
    extend_rows(&mut row, 0, false, 0, d.saturating_sub(1), &mut out);
    Ok(out)
}

// Depth-first over coordinates in symbol order, so output comes out sorted.
fn extend_rows(
    row: &mut [Gf4],
    pos: usize,
    started: bool,
    weight: usize,
    min_weight: usize,
    out: &mut Vec<RowCandidate>,
) {
    if weight + (row.len() - pos) < min_weight {
        return;
    }
    if pos == row.len() {
        if started {
            out.push(RowCandidate::new(Gf4Vector::new(row.to_vec())));
        }
        return;
    }
    let choices: &[Gf4] = if started {
        &Gf4::ALL
    } else {
        &[Gf4::ZERO, Gf4::ONE]
    };
    for &s in choices {
        row[pos] = s;
        extend_rows(
            row,
            pos + 1,
            started || !s.is_zero(),
            weight + usize::from(!s.is_zero()),
            min_weight,
            out,
        );
    }
    row[pos] = Gf4::ZERO;
}

/// `r_1 = (0_{n-k-d+1}, 1_{d-1})`.
pub fn first_row(n: usize, k: usize, d: usize) -> Result<RowCandidate> {
    if k >= n || d == 0 || n - k < d - 1 {
        return Err(Error::InvalidParameters(format!(
            "no first row for (n, k, d) = ({n}, {k}, {d}): need n - k ≥ d - 1"
        )));
    }
    let zeros = n - k - (d - 1);
    let v: Gf4Vector = std::iter::repeat_n(Gf4::ZERO, zeros)
        .chain(std::iter::repeat_n(Gf4::ONE, d - 1))
        .collect();
    Ok(RowCandidate::new(v))
}
