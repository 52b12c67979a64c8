use crate::exactmath::Rational;

use super::Subspace;

/// Incremental reduced-row-echelon accumulator.
///
/// Rows are inserted one at a time; the stored rows are kept fully reduced,
/// so the final basis is canonical no matter the insertion order.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    // (pivot column, row) with row[pivot] == 1 and zeros in every other pivot column.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip().expect("nonzero pivot");
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in &mut self.rows {
            let f = row[pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    /// Row space of everything inserted so far.
    pub fn into_subspace(self) -> Subspace {
        let n = self.ncols;
        Subspace::from_rref_rows(n, self.rows.into_iter().map(|(_, r)| r).collect())
    }

    /// Solution space `{x : r · x = 0 for every inserted row r}`.
    pub fn nullspace(&self) -> Subspace {
        let n = self.ncols;
        let mut is_pivot = vec![false; n];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); n];
            x[free] = Rational::one();
            for (p, row) in &self.rows {
                x[*p] = -&row[free];
            }
            basis.push(x);
        }
        Subspace::from_vectors(n, basis)
    }
}
