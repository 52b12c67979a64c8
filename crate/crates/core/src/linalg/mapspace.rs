use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::{Matrix, Subspace};

/// A linear space of `n x n` operators, e.g. a derivation space.
///
/// The basis is the canonical (RREF) basis of the flattened matrices, so
/// equal spaces have identical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MapSpace {
    ambient_dim: usize,
    basis: Vec<Matrix>,
}

impl MapSpace {
    pub fn zero(n: usize) -> Self {
        MapSpace { ambient_dim: n, basis: Vec::new() }
    }

    /// All of `End(Q^n)`.
    pub fn full(n: usize) -> Self {
        MapSpace::from_flat_subspace(n, &Subspace::full(n * n))
    }

    pub fn span(n: usize, maps: &[Matrix]) -> Result<Self> {
        if maps.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::ShapeError(format!("map space over Q^{n} needs {n}x{n} matrices")));
        }
        let flat = Subspace::from_vectors(n * n, maps.iter().map(Matrix::flatten).collect());
        Ok(MapSpace::from_flat_subspace(n, &flat))
    }

    /// Interprets a subspace of `Q^(n*n)` as row-major flattened matrices.
    pub fn from_flat_subspace(n: usize, flat: &Subspace) -> Self {
        assert_eq!(flat.ambient_dim(), n * n, "flattened subspace has wrong ambient dimension");
        MapSpace {
            ambient_dim: n,
            basis: flat.basis_vectors().map(|v| Matrix::from_flat(n, v)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn to_flat_subspace(&self) -> Subspace {
        Subspace::from_vectors(
            self.ambient_dim * self.ambient_dim,
            self.basis.iter().map(Matrix::flatten).collect(),
        )
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.ambient_dim
            && m.cols() == self.ambient_dim
            && self.to_flat_subspace().contains(&m.flatten())
    }

    pub fn is_subset_of(&self, other: &MapSpace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.to_flat_subspace().is_subset_of(&other.to_flat_subspace())
    }

    pub fn intersection(&self, other: &MapSpace) -> Result<MapSpace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::ShapeError("map spaces over different dimensions".into()));
        }
        let flat = self.to_flat_subspace().intersection(&other.to_flat_subspace())?;
        Ok(MapSpace::from_flat_subspace(self.ambient_dim, &flat))
    }

    /// `sum_i coeffs[i] * basis[i]`
    pub fn combination(&self, coeffs: &[Rational]) -> Result<Matrix> {
        if coeffs.len() != self.basis.len() {
            return Err(Error::ArityError { expected: self.basis.len(), got: coeffs.len() });
        }
        let n = self.ambient_dim;
        Ok(self
            .basis
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependent_generators_collapse() {
        let a = Matrix::from_ints(&[vec![1, 0], vec![0, 0]]);
        let b = Matrix::from_ints(&[vec![0, 0], vec![0, 1]]);
        let s = MapSpace::span(2, &[a.clone(), b.clone(), a.add(&b)]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&Matrix::identity(2)));
        assert!(!s.contains(&Matrix::from_ints(&[vec![0, 1], vec![0, 0]])));
    }

    #[test]
    fn subset_and_intersection() {
        let diag = MapSpace::span(
            2,
            &[
                Matrix::from_ints(&[vec![1, 0], vec![0, 0]]),
                Matrix::from_ints(&[vec![0, 0], vec![0, 1]]),
            ],
        )
        .unwrap();
        let upper = MapSpace::span(
            2,
            &[Matrix::identity(2), Matrix::from_ints(&[vec![0, 1], vec![0, 0]])],
        )
        .unwrap();
        let meet = diag.intersection(&upper).unwrap();
        assert_eq!(meet, MapSpace::span(2, &[Matrix::identity(2)]).unwrap());
        assert!(meet.is_subset_of(&diag));
        assert!(!upper.is_subset_of(&diag));
        assert!(diag.is_subset_of(&MapSpace::full(2)));
    }
}
