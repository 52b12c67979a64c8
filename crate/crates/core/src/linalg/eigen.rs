use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::{Matrix, Subspace};

/// Generalized eigenspaces of one operator, eigenvalues ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDecomposition {
    ambient_dim: usize,
    pairs: Vec<(Rational, Subspace)>,
}

impl WeightDecomposition {
    pub fn pairs(&self) -> &[(Rational, Subspace)] {
        &self.pairs
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = &Rational> {
        self.pairs.iter().map(|(l, _)| l)
    }

    /// The weight space for `lambda`, if it is an eigenvalue.
    pub fn space(&self, lambda: &Rational) -> Option<&Subspace> {
        self.pairs.iter().find(|(l, _)| l == lambda).map(|(_, s)| s)
    }

    /// Spaces are independent and fill the ambient space.
    pub fn is_direct_sum(&self) -> bool {
        let vectors: Vec<Vec<Rational>> = self
            .pairs
            .iter()
            .flat_map(|(_, s)| s.basis_vectors().map(<[Rational]>::to_vec))
            .collect();
        let total = vectors.len();
        total == self.ambient_dim && Subspace::from_vectors(self.ambient_dim, vectors).dim() == total
    }
}

impl fmt::Display for WeightDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, s)) in self.pairs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "eigenvalue {l}: {s}")?;
        }
        Ok(())
    }
}

/// `ker (m - lambda I)^n` with `n` the ambient dimension.
pub fn generalized_eigenspace(m: &Matrix, lambda: &Rational) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::ShapeError("generalized eigenspace of a non-square matrix".into()));
    }
    let n = m.rows();
    let shifted = m.sub(&Matrix::scalar(n, lambda));
    Ok(shifted.pow(n as u32).nullspace())
}

/// Splits `Q^n` into generalized eigenspaces of `m`; fails when the
/// characteristic polynomial has irrational or complex roots.
pub fn decompose(m: &Matrix) -> Result<WeightDecomposition> {
    let cp = m.char_poly()?;
    let roots = cp.rational_roots()?;
    let mut rest = cp.clone();
    for (r, mult) in &roots {
        for _ in 0..*mult {
            rest = rest.div_linear(r).0;
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NonSplitSpectrum { unfactored: rest });
    }
    let n = m.rows();
    let mut pairs = Vec::with_capacity(roots.len());
    for (r, _) in roots {
        let space = generalized_eigenspace(m, &r)?;
        pairs.push((r, space));
    }
    let dec = WeightDecomposition { ambient_dim: n, pairs };
    debug_assert!(dec.is_direct_sum());
    Ok(dec)
}
