use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Counts `A_0, …, A_n` of codewords by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    counts: Vec<u128>,
}

impl WeightEnumerator {
    /// Wraps a coefficient list `A_0, …, A_n`.
    pub fn new(counts: Vec<u128>) -> WeightEnumerator {
        WeightEnumerator { counts }
    }

    /// Builds an enumerator of length `n` from sparse `(weight, count)` pairs.
    pub fn from_terms(n: usize, terms: &[(usize, u128)]) -> WeightEnumerator {
        let mut counts = vec![0; n + 1];
        for &(w, a) in terms {
            counts[w] += a;
        }
        WeightEnumerator { counts }
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// Code length `n`.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, weight: usize) -> u128 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// `Σ A_i`, which is `4^k` for a code of dimension `k`.
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Smallest `i ≥ 1` with `A_i > 0`.
    pub fn minimum_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    /// Nonzero `(weight, count)` pairs in ascending weight order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u128)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, a)| **a > 0)
            .map(|(i, a)| (i, *a))
    }

    /// The `i:A_i` line format, zero terms omitted.
    pub fn to_pairs(&self) -> String {
        self.terms()
            .map(|(i, a)| format!("{i}:{a}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the `i:A_i` format for a code of length `n`.
    pub fn parse_pairs(s: &str, n: usize) -> Result<WeightEnumerator> {
        let mut counts = vec![0u128; n + 1];
        let mut column = 1;
        for tok in s.split(' ') {
            let bad = |message: String| Error::Parse {
                line: 1,
                column,
                message,
            };
            let (i, a) = tok
                .split_once(':')
                .ok_or_else(|| bad(format!("expected `i:A_i`, got {tok:?}")))?;
            let i: usize = i.parse().map_err(|_| bad(format!("bad weight {i:?}")))?;
            let a: u128 = a.parse().map_err(|_| bad(format!("bad count {a:?}")))?;
            if i > n {
                return Err(bad(format!("weight {i} exceeds length {n}")));
            }
            counts[i] = a;
            column += tok.len() + 1;
        }
        Ok(WeightEnumerator { counts })
    }

    /// Enumerator of the dual of an `[n, k]` code with this enumerator.
    ///
    /// `A'_j = 4^{-k} Σ_i A_i K_j(i)` with the quaternary Krawtchouk kernel
    /// `K_j(i) = Σ_s (-1)^s 3^{j-s} C(i,s) C(n-i,j-s)`. The same distribution
    /// holds for the Euclidean and the Hermitian dual, since the two differ by
    /// coordinatewise conjugation. Fails if any output coefficient is negative
    /// or fractional, which means the input was not a code's enumerator.
    pub fn macwilliams_transform(&self, k: usize) -> Result<WeightEnumerator> {
        let n = self.length();
        if k > n {
            return Err(Error::InvalidParameters(format!(
                "dimension {k} exceeds length {n}"
            )));
        }
        let binom = binomial_table(n);
        let pow3: Vec<BigInt> = (0..=n).map(|e| BigInt::from(3).pow(e as u32)).collect();
        let scale = BigInt::from(4).pow(k as u32);
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut sum = BigInt::zero();
            for (i, &a) in self.counts.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut kernel = BigInt::zero();
                for s in 0..=j.min(i) {
                    if j - s > n - i {
                        continue;
                    }
                    let term = &pow3[j - s] * &binom[i][s] * &binom[n - i][j - s];
                    if s % 2 == 0 {
                        kernel += term;
                    } else {
                        kernel -= term;
                    }
                }
                sum += kernel * BigInt::from(a);
            }
            if sum.is_negative() || !(&sum % &scale).is_zero() {
                return Err(Error::InconsistentEnumerator(format!(
                    "coefficient {j} of the transform is {sum}/{scale}"
                )));
            }
            let value = (sum / &scale).to_u128().ok_or_else(|| {
                Error::InconsistentEnumerator(format!("coefficient {j} overflows"))
            })?;
            out.push(value);
        }
        Ok(WeightEnumerator { counts: out })
    }
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for s in 1..=i {
            t[i][s] = &t[i - 1][s - 1] + &t[i - 1][s];
        }
    }
    t
}

/// Polynomial form, e.g. `1 + 210y^7 + 252y^8`.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}y")?,
                _ => write!(f, "{a}y^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for WeightEnumerator {
    type Err = Error;

    /// Parses the `i:A_i` format; the length is taken from the largest weight present.
    fn from_str(s: &str) -> Result<WeightEnumerator> {
        let n = s
            .split(' ')
            .filter_map(|t| t.split_once(':').and_then(|(i, _)| i.parse::<usize>().ok()))
            .max()
            .unwrap_or(0);
        WeightEnumerator::parse_pairs(s, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_transforms_to_zero_code() {
        // F_4^3: A_i = C(3,i) 3^i
        let full = WeightEnumerator::new(vec![1, 9, 27, 27]);
        let dual = full.macwilliams_transform(3).unwrap();
        assert_eq!(dual.counts(), &[1, 0, 0, 0]);
        assert_eq!(dual.macwilliams_transform(0).unwrap(), full);
    }

    #[test]
    fn repetition_code_dual() {
        // [4,1] repetition code 1 + 3y^4; its dual is a [4,3] code of size 64
        let rep = WeightEnumerator::new(vec![1, 0, 0, 0, 3]);
        let dual = rep.macwilliams_transform(1).unwrap();
        assert_eq!(dual.total(), 64);
        assert_eq!(dual.macwilliams_transform(3).unwrap(), rep);
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        let bogus = WeightEnumerator::new(vec![1, 1, 0, 0]);
        assert!(matches!(
            bogus.macwilliams_transform(1),
            Err(Error::InconsistentEnumerator(_))
        ));
    }

    #[test]
    fn formats() {
        let we = WeightEnumerator::from_terms(5, &[(0, 1), (1, 2), (5, 72)]);
        assert_eq!(we.to_string(), "1 + 2y + 72y^5");
        assert_eq!(we.to_pairs(), "0:1 1:2 5:72");
        assert_eq!(
            WeightEnumerator::parse_pairs("0:1 1:2 5:72", 5).unwrap(),
            we
        );
        assert_eq!("0:1 1:2 5:72".parse::<WeightEnumerator>().unwrap(), we);
        assert!(WeightEnumerator::parse_pairs("0:1 9:2", 5).is_err());
        assert_eq!(we.minimum_weight(), Some(1));
    }
}
