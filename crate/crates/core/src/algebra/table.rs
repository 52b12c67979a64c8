use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::Matrix;

use super::identity::{check_leibniz_identity, IdentityReport};

/// Coordinates of an algebra element in the standard basis.
pub type Element = Vec<Rational>;

/// `e_i` (0-based) in dimension `dim`.
pub fn basis_element(dim: usize, i: usize) -> Element {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// Finite-dimensional algebra given by structure constants
/// `[e_i, e_j] = sum_k c_ij^k e_k`, validated against the right Leibniz
/// identity unless built unchecked.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    dim: usize,
    // products[i * dim + j]: sparse coordinates of [e_i, e_j]
    products: Vec<Vec<(usize, Rational)>>,
    nonzero: Vec<(usize, usize)>,
}

/// Accumulates a multiplication table; indices are 0-based.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    dim: usize,
    dense: Vec<Vec<Rational>>,
}

impl TableBuilder {
    pub fn new(dim: usize) -> Self {
        TableBuilder { dim, dense: vec![vec![Rational::zero(); dim]; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `coeff * e_k` to `[e_i, e_j]`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, coeff: Rational) -> Result<&mut Self> {
        if i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(Error::InvalidArgument(format!(
                "index out of range for dimension {}: ({}, {}) -> {}",
                self.dim,
                i + 1,
                j + 1,
                k + 1
            )));
        }
        self.dense[i * self.dim + j][k] += coeff;
        Ok(self)
    }

    /// 1-based convenience with integer coefficients, used by the corpus generators.
    pub fn with(mut self, i: usize, j: usize, result: &[(usize, i64)]) -> Self {
        for &(k, c) in result {
            self.add(i - 1, j - 1, k - 1, Rational::from_int(c))
                .expect("generator index in range");
        }
        self
    }

    pub fn build(self, name: impl Into<String>) -> Result<LeibnizAlgebra> {
        let alg = self.build_unchecked(name);
        match check_leibniz_identity(&alg) {
            IdentityReport::Holds => Ok(alg),
            IdentityReport::Violated { indices, .. } => {
                Err(Error::IdentityViolation(indices[0] + 1, indices[1] + 1, indices[2] + 1))
            }
        }
    }

    /// Skips identity validation; only for demonstrating identity failures.
    pub fn build_unchecked(self, name: impl Into<String>) -> LeibnizAlgebra {
        let dim = self.dim;
        let mut products = Vec::with_capacity(dim * dim);
        let mut nonzero = Vec::new();
        for (idx, row) in self.dense.into_iter().enumerate() {
            let sparse: Vec<(usize, Rational)> = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !sparse.is_empty() {
                nonzero.push((idx / dim.max(1), idx % dim.max(1)));
            }
            products.push(sparse);
        }
        LeibnizAlgebra { name: name.into(), dim, products, nonzero }
    }
}

impl LeibnizAlgebra {
    pub fn abelian(dim: usize) -> LeibnizAlgebra {
        TableBuilder::new(dim).build_unchecked(format!("abelian{dim}"))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse coordinates of `[e_i, e_j]`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Pairs `(i, j)` with `[e_i, e_j] != 0`, in lexicographic order.
    pub fn nonzero_products(&self) -> &[(usize, usize)] {
        &self.nonzero
    }

    pub fn basis(&self, i: usize) -> Element {
        basis_element(self.dim, i)
    }

    pub fn zero(&self) -> Element {
        vec![Rational::zero(); self.dim]
    }

    fn check_element(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::ShapeError(format!(
                "element of length {} in a {}-dimensional algebra",
                x.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Bilinear product through the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked `bracket`; callers guarantee matching lengths.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Element {
        let mut out = vec![Rational::zero(); self.dim];
        for &(i, j) in &self.nonzero {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let f = &x[i] * &y[j];
            for (k, c) in self.basis_product(i, j) {
                out[*k] += &(&f * c);
            }
        }
        out
    }

    /// Matrix of `z -> [z, x]`.
    pub fn right_mult(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_element(x)?;
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Ok(Matrix::from_columns(self.dim, &cols))
    }

    /// Matrix of `z -> [x, z]`.
    pub fn left_mult(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_element(x)?;
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Ok(Matrix::from_columns(self.dim, &cols))
    }

    /// `[e_i, e_j] = -[e_j, e_i]` and `[e_i, e_i] = 0` for all basis pairs.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let a = self.mul(&self.basis(i), &self.basis(j));
                let b = self.mul(&self.basis(j), &self.basis(i));
                a.iter().zip(&b).all(|(p, q)| (p + q).is_zero())
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.nonzero.is_empty()
    }

    /// Table rebuilt in the basis given by the columns of `t`:
    /// `[x, y]' = t^-1 [t x, t y]`. The result is isomorphic to `self`.
    pub fn change_basis(&self, t: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim;
        if t.rows() != n || t.cols() != n {
            return Err(Error::ShapeError("change of basis must be square".into()));
        }
        let inv = t.inverse()?;
        let mut b = TableBuilder::new(n);
        let cols: Vec<Element> = (0..n).map(|j| t.column(j)).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = inv.apply(&self.mul(&cols[i], &cols[j]));
                for (k, c) in prod.into_iter().enumerate() {
                    if !c.is_zero() {
                        b.add(i, j, k, c)?;
                    }
                }
            }
        }
        Ok(b.build_unchecked(self.name.clone()))
    }

    /// `self ⊕ other` with `other`'s basis placed after `self`'s.
    pub fn direct_sum(&self, other: &LeibnizAlgebra, name: impl Into<String>) -> LeibnizAlgebra {
        let (n, m) = (self.dim, other.dim);
        let mut b = TableBuilder::new(n + m);
        for &(i, j) in &self.nonzero {
            for (k, c) in self.basis_product(i, j) {
                b.add(i, j, *k, c.clone()).expect("in range");
            }
        }
        for &(i, j) in &other.nonzero {
            for (k, c) in other.basis_product(i, j) {
                b.add(n + i, n + j, n + k, c.clone()).expect("in range");
            }
        }
        b.build_unchecked(name)
    }

    /// Sparse 1-based listing of the table: `((i, j), [(k, c)])`.
    pub fn table_entries(&self) -> Vec<((usize, usize), Vec<(usize, Rational)>)> {
        self.nonzero
            .iter()
            .map(|&(i, j)| {
                let res = self
                    .basis_product(i, j)
                    .iter()
                    .map(|(k, c)| (k + 1, c.clone()))
                    .collect();
                ((i + 1, j + 1), res)
            })
            .collect()
    }
}

impl fmt::Display for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim)?;
        for ((i, j), res) in self.table_entries() {
            let terms: Vec<String> = res
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        format!("e{k}")
                    } else {
                        format!("{c}*e{k}")
                    }
                })
                .collect();
            write!(f, "\n  [e{i}, e{j}] = {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
