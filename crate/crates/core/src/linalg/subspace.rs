use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::{Matrix, RowReducer};

/// Coordinate subspace of `Q^n`, stored as the RREF of a spanning set.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n) }
    }

    /// Span of standard basis vectors at the given 0-based positions.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace::from_vectors(n, vectors)
    }

    pub fn from_vectors(n: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let mut red = RowReducer::new(n);
        for v in vectors {
            assert_eq!(v.len(), n, "vector length differs from ambient dimension");
            red.insert(v);
        }
        red.into_subspace()
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::from_vectors(m.cols(), m.row_vecs().map(<[Rational]>::to_vec).collect())
    }

    pub(crate) fn from_rref_rows(n: usize, rows: Vec<Vec<Rational>>) -> Self {
        let basis = if rows.is_empty() {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_rows(rows).expect("rows of equal length")
        };
        Subspace { ambient_dim: n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vecs()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis_vectors()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("no zero rows"))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::ShapeError(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // Reduce v by the canonical basis; membership iff nothing remains.
        let mut rest = v.to_vec();
        for (row, p) in self.basis_vectors().zip(self.pivots()) {
            let f = rest[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        rest.iter().all(Rational::is_zero)
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() <= other.dim()
            && self.basis_vectors().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let vectors = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Rational]>::to_vec)
            .collect();
        Ok(Subspace::from_vectors(self.ambient_dim, vectors))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Solve sum_i s_i A_i - sum_j t_j B_j = 0; each solution gives sum_i s_i A_i.
        let n = self.ambient_dim;
        let mut system = Matrix::zeros(n, a + b);
        for (i, row) in self.basis_vectors().enumerate() {
            for (k, x) in row.iter().enumerate() {
                system.set(k, i, x.clone());
            }
        }
        for (j, row) in other.basis_vectors().enumerate() {
            for (k, x) in row.iter().enumerate() {
                system.set(k, a + j, -x);
            }
        }
        let sols = system.nullspace();
        let vectors = sols
            .basis_vectors()
            .map(|s| {
                let mut v = vec![Rational::zero(); n];
                for (i, row) in self.basis_vectors().enumerate() {
                    if s[i].is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += &(&s[i] * y);
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(n, vectors))
    }

    /// Image `m(self)`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::ShapeError("map and subspace dimensions differ".into()));
        }
        Ok(Subspace::from_vectors(
            m.rows(),
            self.basis_vectors().map(|v| m.apply(v)).collect(),
        ))
    }

    /// `m(self) ⊆ self`
    pub fn is_invariant_under(&self, m: &Matrix) -> Result<bool> {
        Ok(self.image(m)?.is_subset_of(self))
    }

    /// Standard basis positions outside the pivot columns: a canonical complement.
    pub fn pivot_complement(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient_dim).filter(|c| !pivots.contains(c)).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.dim())?;
        for row in self.basis_vectors() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "\n  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, {:?})", self.ambient_dim, self.basis)
    }
}
