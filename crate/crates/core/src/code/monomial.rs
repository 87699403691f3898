use crate::error::{Error, Result};
use crate::gf4::Gf4;

/// A monomial map `x ↦ xP`: coordinate `j` of the image is `x[perm[j]] · scale[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialTransform {
    perm: Vec<usize>,
    scale: Vec<Gf4>,
}

impl MonomialTransform {
    pub fn new(perm: Vec<usize>, scale: Vec<Gf4>) -> Result<MonomialTransform> {
        let n = perm.len();
        if scale.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: scale.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        if scale.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidParameters(
                "monomial scale entries must be nonzero".into(),
            ));
        }
        Ok(MonomialTransform { perm, scale })
    }

    pub fn identity(n: usize) -> MonomialTransform {
        MonomialTransform {
            perm: (0..n).collect(),
            scale: vec![Gf4::ONE; n],
        }
    }

    /// Pure column permutation.
    pub fn permutation(perm: Vec<usize>) -> Result<MonomialTransform> {
        let n = perm.len();
        MonomialTransform::new(perm, vec![Gf4::ONE; n])
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scale(&self) -> &[Gf4] {
        &self.scale
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p == j)
            && self.scale.iter().all(|s| *s == Gf4::ONE)
    }

    pub fn apply(&self, x: &[Gf4]) -> Result<Vec<Gf4>> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: x.len(),
            });
        }
        Ok(self
            .perm
            .iter()
            .zip(&self.scale)
            .map(|(&p, &s)| x[p] * s)
            .collect())
    }
}
