use std::fmt;

use serde::{Deserialize, Serialize};

/// Parameters `[n, k, d]₄` of a quaternary linear code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl CodeParams {
    pub const fn new(n: usize, k: usize, d: usize) -> CodeParams {
        CodeParams { n, k, d }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_4", self.n, self.k, self.d)
    }
}

/// Parameters `[[n, k, d; c]]₂` of an entanglement-assisted quantum code
/// using `c` maximally entangled pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub c: usize,
}

impl QuantumParams {
    pub const fn new(n: usize, k: usize, d: usize, c: usize) -> QuantumParams {
        QuantumParams { n, k, d, c }
    }

    /// Number of channel errors the code corrects, `⌊(d-1)/2⌋`.
    pub const fn correctable_errors(&self) -> usize {
        self.d.saturating_sub(1) / 2
    }
}

impl From<CodeParams> for QuantumParams {
    /// A Hermitian LCD `[n,k,d]₄` code gives an `[[n,k,d;n-k]]₂` code.
    fn from(p: CodeParams) -> QuantumParams {
        QuantumParams::new(p.n, p.k, p.d, p.n - p.k)
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]_2", self.n, self.k, self.d, self.c)
    }
}
