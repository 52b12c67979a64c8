//! Matrices over `MultiPoly`: generic elements of map spaces and their
//! determinant / characteristic-polynomial certificates.

use crate::error::{Error, Result};
use crate::exactmath::{MultiPoly, Rational};

use super::charpoly::berkowitz;
use super::{MapSpace, Matrix};

/// Square or rectangular matrix with polynomial entries in a shared ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<MultiPoly>,
}

/// Largest size for which `symbolic_det` uses memoized cofactor expansion.
pub const COFACTOR_LIMIT: usize = 6;

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix { rows, cols, nvars, data: vec![MultiPoly::zero(nvars); rows * cols] }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeError("ragged polynomial rows".into()));
        }
        if rows.iter().flatten().any(|p| p.nvars() != nvars) {
            return Err(Error::ShapeError("entries over different variable sets".into()));
        }
        let n = rows.len();
        Ok(PolyMatrix { rows: n, cols, nvars, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.data[r * self.cols + c]
    }

    fn row_vecs(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    /// Substitutes a point for all variables.
    pub fn eval(&self, point: &[Rational]) -> Result<Matrix> {
        let data = self
            .data
            .iter()
            .map(|p| p.eval(point))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, data)
    }

    fn check_square(&self, what: &str) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::ShapeError(format!(
                "{what} of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

/// `sum_i x_i B_i` over the basis `B_i` of `s`, one fresh variable per basis map.
pub fn generic_element(s: &MapSpace) -> PolyMatrix {
    let b = s.dim();
    if b == 0 {
        return PolyMatrix::zeros(s.ambient_dim(), s.ambient_dim(), 0);
    }
    let n = s.ambient_dim();
    let mut m = PolyMatrix::zeros(n, n, b);
    for (i, basis) in s.basis().iter().enumerate() {
        let x = MultiPoly::var(b, i);
        for r in 0..n {
            for c in 0..n {
                let coeff = basis.get(r, c);
                if !coeff.is_zero() {
                    let e = &mut m.data[r * n + c];
                    *e = &*e + &x.scale(coeff);
                }
            }
        }
    }
    m
}

/// `sum_i x_i M_i` with one variable per given matrix (no reduction of the list).
pub fn generic_combination(n: usize, mats: &[Matrix]) -> PolyMatrix {
    let b = mats.len();
    let mut m = PolyMatrix::zeros(n, n, b);
    for (i, mat) in mats.iter().enumerate() {
        assert_eq!((mat.rows(), mat.cols()), (n, n), "generic_combination needs n x n maps");
        let x = MultiPoly::var(b, i);
        for r in 0..n {
            for c in 0..n {
                let coeff = mat.get(r, c);
                if !coeff.is_zero() {
                    let e = &mut m.data[r * n + c];
                    *e = &*e + &x.scale(coeff);
                }
            }
        }
    }
    m
}

/// Exact determinant: memoized cofactor expansion up to `COFACTOR_LIMIT`,
/// fraction-free Bareiss elimination beyond.
pub fn symbolic_det(m: &PolyMatrix) -> Result<MultiPoly> {
    m.check_square("determinant")?;
    if m.rows <= COFACTOR_LIMIT {
        Ok(cofactor_det(m))
    } else {
        Ok(bareiss_det(m))
    }
}

/// Laplace expansion along rows, memoizing minors by their column set.
pub fn cofactor_det(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows;
    let nv = m.nvars;
    if n == 0 {
        return MultiPoly::one(nv);
    }
    // minors[mask]: determinant of rows (n - |mask|)..n restricted to columns in mask
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    minors[0] = Some(MultiPoly::one(nv));
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = MultiPoly::zero(nv);
        let mut sign_pos = true;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = m.get(row, c);
            if !entry.is_zero() {
                let minor = minors[mask & !(1 << c)].as_ref().expect("smaller minors first");
                if !minor.is_zero() {
                    let t = entry * minor;
                    acc = if sign_pos { &acc + &t } else { &acc - &t };
                }
            }
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

pub fn bareiss_det(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows;
    let nv = m.nvars;
    if n == 0 {
        return MultiPoly::one(nv);
    }
    let mut a = m.row_vecs();
    let mut negate = false;
    let mut prev = MultiPoly::one(nv);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return MultiPoly::zero(nv),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[i][k] = MultiPoly::zero(nv);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Non-leading coefficients of `det(tI - m)`: entries for `t^0 .. t^(d-1)`.
pub fn symbolic_char_poly(m: &PolyMatrix) -> Result<Vec<MultiPoly>> {
    m.check_square("characteristic polynomial")?;
    let one = MultiPoly::one(m.nvars);
    let mut coeffs = berkowitz(&m.row_vecs(), &one);
    let lead = coeffs.pop();
    debug_assert!(lead.is_some_and(|l| l == one));
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nv: usize, i: usize) -> MultiPoly {
        MultiPoly::var(nv, i)
    }

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn generic_element_examples() {
        let e12 = Matrix::from_ints(&[vec![0, 1], vec![0, 0]]);
        let g = generic_element(&MapSpace::span(2, &[Matrix::identity(2)]).unwrap());
        assert_eq!(g.get(0, 0), &x(1, 0));
        assert_eq!(g.get(1, 1), &x(1, 0));
        assert!(g.get(0, 1).is_zero());

        let g = generic_element(&MapSpace::span(2, std::slice::from_ref(&e12)).unwrap());
        assert_eq!(g.get(0, 1), &x(1, 0));
        assert!(g.get(0, 0).is_zero());

        let g = generic_element(&MapSpace::span(2, &[Matrix::identity(2), e12]).unwrap());
        assert_eq!(g.get(0, 0), &x(2, 0));
        assert_eq!(g.get(0, 1), &x(2, 1));
        assert_eq!(g.get(1, 1), &x(2, 0));

        let g = generic_element(&MapSpace::zero(3));
        assert_eq!((g.rows(), g.nvars()), (3, 0));
    }

    #[test]
    fn det_examples() {
        let m = PolyMatrix::from_rows(
            2,
            vec![vec![x(2, 0), x(2, 1)], vec![MultiPoly::zero(2), x(2, 0)]],
        )
        .unwrap();
        assert_eq!(symbolic_det(&m).unwrap(), x(2, 0).pow(2));
        assert!(symbolic_det(&PolyMatrix::zeros(2, 2, 1)).unwrap().is_zero());
        assert!(symbolic_det(&PolyMatrix::zeros(2, 3, 1)).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let nil = PolyMatrix::from_rows(
            1,
            vec![vec![MultiPoly::zero(1), x(1, 0)], vec![MultiPoly::zero(1), MultiPoly::zero(1)]],
        )
        .unwrap();
        let cp = symbolic_char_poly(&nil).unwrap();
        assert!(cp.iter().all(MultiPoly::is_zero));
        assert_eq!(cp.len(), 2);

        let scalar = PolyMatrix::from_rows(
            1,
            vec![vec![x(1, 0), MultiPoly::zero(1)], vec![MultiPoly::zero(1), x(1, 0)]],
        )
        .unwrap();
        let cp = symbolic_char_poly(&scalar).unwrap();
        assert_eq!(cp, vec![x(1, 0).pow(2), x(1, 0).scale(&r(-2))]);
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        // 4x4 with pivots that vanish and force row swaps
        let nv = 3;
        let c = |k: i64| MultiPoly::constant(nv, r(k));
        let rows = vec![
            vec![MultiPoly::zero(nv), x(nv, 0), c(1), x(nv, 2)],
            vec![x(nv, 1), c(2), MultiPoly::zero(nv), &x(nv, 0) + &x(nv, 1)],
            vec![c(-1), MultiPoly::zero(nv), x(nv, 2), c(3)],
            vec![&x(nv, 0) * &x(nv, 2), c(1), x(nv, 1), MultiPoly::zero(nv)],
        ];
        let m = PolyMatrix::from_rows(nv, rows).unwrap();
        let a = cofactor_det(&m);
        let b = bareiss_det(&m);
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}
