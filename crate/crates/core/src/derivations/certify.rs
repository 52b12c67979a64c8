use crate::exactmath::{MultiPoly, Rational};
use crate::linalg::{generic_element, symbolic_char_poly, symbolic_det, MapSpace, Matrix};

/// Every element of `s` is nilpotent: the generic element's characteristic
/// polynomial is `t^n` identically.
pub fn all_nilpotent(s: &MapSpace) -> bool {
    symbolic_char_poly(&generic_element(s))
        .expect("generic element is square")
        .iter()
        .all(MultiPoly::is_zero)
}

/// Whether `s` contains an invertible map, with the lexicographically first
/// witness on the grid `{0..n}^b` of basis coefficients.
pub fn exists_invertible(s: &MapSpace) -> (bool, Option<Matrix>) {
    let n = s.ambient_dim();
    let det = symbolic_det(&generic_element(s)).expect("generic element is square");
    if det.is_zero() {
        return (false, None);
    }
    let point = first_nonzero_grid_point(&det, n);
    let witness = s.combination(&point).expect("one coefficient per basis map");
    debug_assert!(!witness.det().expect("square").is_zero());
    (true, Some(witness))
}

/// Smallest point of `{0..bound}^nvars` in lexicographic order (first
/// coordinate most significant) where the nonzero polynomial `p` is nonzero.
///
/// `p` has degree at most `bound` in each variable, so after fixing a prefix
/// with `p` still nonzero some value in `0..=bound` keeps it nonzero; choosing
/// the smallest such value per coordinate yields the lexicographic minimum.
pub(crate) fn first_nonzero_grid_point(p: &MultiPoly, bound: usize) -> Vec<Rational> {
    let mut rest = p.clone();
    let mut point = Vec::with_capacity(p.nvars());
    for var in 0..p.nvars() {
        let (v, next) = (0..=bound.max(rest.degree_in(var) as usize))
            .map(|v| {
                let v = Rational::from_int(v as i64);
                let q = rest.substitute(var, &v);
                (v, q)
            })
            .find(|(_, q)| !q.is_zero())
            .expect("a nonzero polynomial has a nonzero value on a large enough grid");
        point.push(v);
        rest = next;
    }
    point
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strictly_triangular_span() {
        let e12 = Matrix::from_ints(&[vec![0, 1], vec![0, 0]]);
        let s = MapSpace::span(2, &[e12]).unwrap();
        assert!(all_nilpotent(&s));
        assert_eq!(exists_invertible(&s), (false, None));
    }

    #[test]
    fn identity_span() {
        let s = MapSpace::span(3, &[Matrix::identity(3)]).unwrap();
        assert!(!all_nilpotent(&s));
        assert_eq!(exists_invertible(&s), (true, Some(Matrix::identity(3))));
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // det of the full 2x2 space is x0*x3 - x1*x2: first hit is (0,1,1,0)
        let s = MapSpace::full(2);
        let (ok, w) = exists_invertible(&s);
        assert!(ok);
        let w = w.unwrap();
        assert!(!w.det().unwrap().is_zero());
        let coords: Vec<i64> = w.flatten().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(coords, vec![0, 1, 1, 0]);
    }

    #[test]
    fn zero_space() {
        assert!(all_nilpotent(&MapSpace::zero(2)));
        assert!(!exists_invertible(&MapSpace::zero(2)).0);
        assert!(exists_invertible(&MapSpace::zero(0)).0);
    }
}
