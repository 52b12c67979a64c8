use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Element, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{MapSpace, Matrix, RowReducer};

/// Orders above this are refused by [`DerivationQuery::new`]; use
/// [`DerivationQuery::with_limit`] to raise the envelope explicitly.
pub const DEFAULT_MAX_ORDER: usize = 5;

/// Nesting used for the n-ary product in the defining identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `[x1, ..., xn]_r = [[[x1, x2], x3], ..., xn]`
    Right,
    /// `[x1, [x2, ..., [x(n-1), xn]]]`
    Left,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(Error::InvalidArgument(format!("side must be right or left, got {other:?}"))),
        }
    }
}

/// Which space of (Leibniz-)derivations to compute.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct DerivationQuery {
    order: usize,
    side: Side,
}

impl DerivationQuery {
    pub fn new(order: usize, side: Side) -> Result<Self> {
        Self::with_limit(order, side, DEFAULT_MAX_ORDER)
    }

    pub fn with_limit(order: usize, side: Side, max_order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidArgument(format!("order must be at least 2, got {order}")));
        }
        if order > max_order {
            return Err(Error::InvalidArgument(format!(
                "order {order} exceeds the supported limit {max_order}"
            )));
        }
        Ok(DerivationQuery { order, side })
    }

    /// Ordinary derivations (order 2, right side).
    pub fn derivations() -> Self {
        DerivationQuery { order: 2, side: Side::Right }
    }

    pub fn right(order: usize) -> Result<Self> {
        Self::new(order, Side::Right)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

// Linear form in the dim^2 unknowns D[a][b] (flat index a*dim + b).
type Form = BTreeMap<usize, Rational>;

fn add_scaled(dst: &mut Form, src: &Form, c: &Rational) {
    for (&k, v) in src {
        let entry = dst.entry(k).or_insert_with(Rational::zero);
        *entry += c * v;
        if entry.is_zero() {
            dst.remove(&k);
        }
    }
}

fn add_term(dst: &mut Form, k: usize, c: Rational) {
    let entry = dst.entry(k).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        dst.remove(&k);
    }
}

struct Solver<'a> {
    alg: &'a LeibnizAlgebra,
    side: Side,
    order: usize,
    seen: HashSet<Vec<(usize, Rational)>>,
    reducer: RowReducer,
}

impl Solver<'_> {
    /// Extends a partial product by one basis factor, updating both the
    /// product `c` and the symbolic sum `lambda = sum_j [.., D x_j, ..]`.
    fn step(&self, c: &Element, lambda: &[Form], i: usize) -> (Element, Vec<Form>) {
        let n = self.alg.dim();
        let ei = self.alg.basis(i);
        let mut lam = vec![Form::new(); n];
        let c2 = match self.side {
            Side::Right => {
                // R_{e_i} applied to every component: [e_m, e_i] = sum_k c_{mi}^k e_k
                for (m, form) in lambda.iter().enumerate() {
                    if form.is_empty() {
                        continue;
                    }
                    for (k, coeff) in self.alg.basis_product(m, i) {
                        add_scaled(&mut lam[*k], form, coeff);
                    }
                }
                // [c, D e_i] = sum_a D[a][i] [c, e_a]
                for a in 0..n {
                    let v = self.alg.mul(c, &self.alg.basis(a));
                    for (k, x) in v.into_iter().enumerate() {
                        if !x.is_zero() {
                            add_term(&mut lam[k], a * n + i, x);
                        }
                    }
                }
                self.alg.mul(c, &ei)
            }
            Side::Left => {
                for (m, form) in lambda.iter().enumerate() {
                    if form.is_empty() {
                        continue;
                    }
                    for (k, coeff) in self.alg.basis_product(i, m) {
                        add_scaled(&mut lam[*k], form, coeff);
                    }
                }
                for a in 0..n {
                    let v = self.alg.mul(&self.alg.basis(a), c);
                    for (k, x) in v.into_iter().enumerate() {
                        if !x.is_zero() {
                            add_term(&mut lam[k], a * n + i, x);
                        }
                    }
                }
                self.alg.mul(&ei, c)
            }
        };
        (c2, lam)
    }

    fn walk(&mut self, c: Element, lambda: Vec<Form>, depth: usize) {
        if self.reducer.is_full() {
            return;
        }
        if c.iter().all(Rational::is_zero) && lambda.iter().all(Form::is_empty) {
            // every completion has zero product and zero symbolic sum
            return;
        }
        if depth == self.order {
            self.emit(&c, &lambda);
            return;
        }
        for i in 0..self.alg.dim() {
            let (c2, l2) = self.step(&c, &lambda, i);
            self.walk(c2, l2, depth + 1);
        }
    }

    /// Rows `(D c)_k - lambda_k = 0`.
    fn emit(&mut self, c: &Element, lambda: &[Form]) {
        let n = self.alg.dim();
        for (k, form) in lambda.iter().enumerate() {
            let mut row = Form::new();
            for (b, cb) in c.iter().enumerate() {
                if !cb.is_zero() {
                    add_term(&mut row, k * n + b, cb.clone());
                }
            }
            add_scaled(&mut row, form, &Rational::from_int(-1));
            let Some((_, lead)) = row.iter().next() else { continue };
            let inv = lead.recip().expect("leading coefficient is nonzero");
            let normalized: Vec<(usize, Rational)> =
                row.iter().map(|(&j, v)| (j, v * &inv)).collect();
            if !self.seen.insert(normalized.clone()) {
                continue;
            }
            let mut dense = vec![Rational::zero(); n * n];
            for (j, v) in normalized {
                dense[j] = v;
            }
            self.reducer.insert(dense);
            if self.reducer.is_full() {
                return;
            }
        }
    }
}

/// All linear maps `D` with `D(t) = sum_j t[x_j -> D x_j]` for the chosen
/// n-ary product `t`, as a canonical map space.
pub fn derivation_space(alg: &LeibnizAlgebra, q: &DerivationQuery) -> MapSpace {
    let n = alg.dim();
    let mut solver = Solver {
        alg,
        side: q.side,
        order: q.order,
        seen: HashSet::new(),
        reducer: RowReducer::new(n * n),
    };
    for start in 0..n {
        // one-factor state: c = e_start, lambda = D e_start
        let c = alg.basis(start);
        let lambda: Vec<Form> = (0..n)
            .map(|k| Form::from([(k * n + start, Rational::one())]))
            .collect();
        solver.walk(c, lambda, 1);
    }
    MapSpace::from_flat_subspace(n, &solver.reducer.nullspace())
}

fn check_map(alg: &LeibnizAlgebra, d: &Matrix) -> Result<()> {
    if !d.is_square() || d.rows() != alg.dim() {
        return Err(Error::ShapeError(format!(
            "map is {}x{} but the algebra has dimension {}",
            d.rows(),
            d.cols(),
            alg.dim()
        )));
    }
    Ok(())
}

/// Membership by evaluating the defining identity on every basis tuple.
pub fn is_derivation(alg: &LeibnizAlgebra, d: &Matrix, q: &DerivationQuery) -> Result<bool> {
    check_map(alg, d)?;
    let images: Vec<Element> = (0..alg.dim()).map(|i| d.column(i)).collect();
    for start in 0..alg.dim() {
        let c = alg.basis(start);
        let s = images[start].clone();
        if !eval_walk(alg, d, &images, q, c, s, 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

// `c` is the partial product, `s` the partial sum of products with one factor
// replaced by its image under `d`.
fn eval_walk(
    alg: &LeibnizAlgebra,
    d: &Matrix,
    images: &[Element],
    q: &DerivationQuery,
    c: Element,
    s: Element,
    depth: usize,
) -> bool {
    let zero = |v: &Element| v.iter().all(Rational::is_zero);
    if zero(&c) && zero(&s) {
        return true;
    }
    if depth == q.order {
        return d.apply(&c) == s;
    }
    for i in 0..alg.dim() {
        let ei = alg.basis(i);
        let (c2, s2) = match q.side {
            Side::Right => {
                let a = alg.mul(&s, &ei);
                let b = alg.mul(&c, &images[i]);
                (alg.mul(&c, &ei), a.iter().zip(&b).map(|(x, y)| x + y).collect())
            }
            Side::Left => {
                let a = alg.mul(&ei, &s);
                let b = alg.mul(&images[i], &c);
                (alg.mul(&ei, &c), a.iter().zip(&b).map(|(x, y)| x + y).collect())
            }
        };
        if !eval_walk(alg, d, images, q, c2, s2, depth + 1) {
            return false;
        }
    }
    true
}

/// `LDer_(s+1) ⊆ LDer_(t+1)` (right side), meaningful when `s` divides `t`.
pub fn order_inclusion_check(alg: &LeibnizAlgebra, s: usize, t: usize) -> Result<bool> {
    if s == 0 || !t.is_multiple_of(s) {
        return Err(Error::InvalidArgument(format!("{s} must divide {t}")));
    }
    let small = derivation_space(alg, &unbounded(s + 1, Side::Right)?);
    let large = derivation_space(alg, &unbounded(t + 1, Side::Right)?);
    Ok(small.is_subset_of(&large))
}

/// `LDer_k ∩ LDer_l ⊆ LDer_(k+l-1)` (right side).
pub fn intersection_law_check(alg: &LeibnizAlgebra, k: usize, l: usize) -> Result<bool> {
    let a = derivation_space(alg, &unbounded(k, Side::Right)?);
    let b = derivation_space(alg, &unbounded(l, Side::Right)?);
    let c = derivation_space(alg, &unbounded(k + l - 1, Side::Right)?);
    Ok(a.intersection(&b)?.is_subset_of(&c))
}

pub(crate) fn unbounded(order: usize, side: Side) -> Result<DerivationQuery> {
    DerivationQuery::with_limit(order, side, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;

    fn nf3() -> LeibnizAlgebra {
        TableBuilder::new(3)
            .with(1, 1, &[(2, 1)])
            .with(2, 1, &[(3, 1)])
            .build("nf3")
            .unwrap()
    }

    #[test]
    fn query_envelope() {
        assert!(DerivationQuery::new(1, Side::Right).is_err());
        assert!(DerivationQuery::new(6, Side::Right).is_err());
        assert!(DerivationQuery::with_limit(6, Side::Left, 6).is_ok());
        assert_eq!("left".parse::<Side>().unwrap(), Side::Left);
        assert!("up".parse::<Side>().is_err());
    }

    #[test]
    fn abelian_every_map_qualifies() {
        let a = LeibnizAlgebra::abelian(3);
        for order in 2..=4 {
            for side in [Side::Right, Side::Left] {
                let q = DerivationQuery::new(order, side).unwrap();
                assert_eq!(derivation_space(&a, &q).dim(), 9);
            }
        }
        assert!(is_derivation(&a, &Matrix::identity(3), &DerivationQuery::derivations()).unwrap());
    }

    #[test]
    fn null_filiform_derivations() {
        // D is fixed by D e1 = a e1 + b e2 + c e3; D e2 = [D e1, e1] + [e1, D e1]
        let l = nf3();
        let der = derivation_space(&l, &DerivationQuery::derivations());
        assert_eq!(der.dim(), 3);
        for m in der.basis() {
            assert!(is_derivation(&l, m, &DerivationQuery::derivations()).unwrap());
        }
        let diag = Matrix::diagonal(&[1, 2, 3].map(Rational::from_int));
        assert!(der.contains(&diag));
        assert!(!is_derivation(&l, &Matrix::identity(3), &DerivationQuery::derivations()).unwrap());
        assert!(is_derivation(&l, &Matrix::identity(2), &DerivationQuery::derivations()).is_err());
    }

    #[test]
    fn inclusions_on_null_filiform() {
        let l = nf3();
        assert!(order_inclusion_check(&l, 1, 2).unwrap());
        assert!(order_inclusion_check(&l, 1, 3).unwrap());
        assert!(intersection_law_check(&l, 2, 3).unwrap());
        assert!(order_inclusion_check(&l, 2, 3).is_err());
    }
}
