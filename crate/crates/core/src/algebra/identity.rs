use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::table::{Element, LeibnizAlgebra};

/// Outcome of an exhaustive identity check over basis tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdentityReport {
    Holds,
    /// First violating tuple (0-based indices) in lexicographic order.
    Violated { indices: Vec<usize>, lhs: Element, rhs: Element },
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityReport::Holds)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityReport::Holds => write!(f, "ok"),
            IdentityReport::Violated { indices, lhs, rhs } => {
                let idx: Vec<String> = indices.iter().map(|i| format!("e{}", i + 1)).collect();
                write!(
                    f,
                    "violation at ({}): lhs = {}, rhs = {}",
                    idx.join(", "),
                    fmt_element(lhs),
                    fmt_element(rhs)
                )
            }
        }
    }
}

/// `a*e1 + b*e2 ...` with zero terms dropped.
pub fn fmt_element(x: &[Rational]) -> String {
    let terms: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| if c.is_one() { format!("e{}", k + 1) } else { format!("{c}*e{}", k + 1) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on all `dim^3` basis triples.
pub fn check_leibniz_identity(alg: &LeibnizAlgebra) -> IdentityReport {
    let n = alg.dim();
    for i in 0..n {
        let x = alg.basis(i);
        for j in 0..n {
            let y = alg.basis(j);
            let xy = alg.mul(&x, &y);
            for k in 0..n {
                let z = alg.basis(k);
                let lhs = alg.mul(&x, &alg.mul(&y, &z));
                let a = alg.mul(&xy, &z);
                let b = alg.mul(&alg.mul(&x, &z), &y);
                let rhs: Element = a.iter().zip(&b).map(|(p, q)| p - q).collect();
                if lhs != rhs {
                    return IdentityReport::Violated { indices: vec![i, j, k], lhs, rhs };
                }
            }
        }
    }
    IdentityReport::Holds
}

/// The two n-ary nestings of a binary bracket.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NaryProduct {
    /// `[x1, ..., xn]_r = [[[x1, x2], x3], ..., xn]`
    Right,
    /// `[x1, [x2, ..., [x(n-1), xn]]]`
    Left,
}

fn check_arity(xs: &[Element], dim: usize) -> Result<()> {
    if xs.len() < 2 {
        return Err(Error::ArityError { expected: 2, got: xs.len() });
    }
    if xs.iter().any(|x| x.len() != dim) {
        return Err(Error::ShapeError("element length differs from algebra dimension".into()));
    }
    Ok(())
}

/// Left-to-right fold `[[[x1, x2], x3], ..., xn]`.
pub fn n_ary_right(alg: &LeibnizAlgebra, xs: &[Element]) -> Result<Element> {
    check_arity(xs, alg.dim())?;
    Ok(fold_right(alg, xs))
}

/// Right-nested `[x1, [x2, ..., [x(n-1), xn]]]`.
pub fn n_ary_left(alg: &LeibnizAlgebra, xs: &[Element]) -> Result<Element> {
    check_arity(xs, alg.dim())?;
    Ok(fold_left(alg, xs))
}

pub fn n_ary(alg: &LeibnizAlgebra, product: NaryProduct, xs: &[Element]) -> Result<Element> {
    match product {
        NaryProduct::Right => n_ary_right(alg, xs),
        NaryProduct::Left => n_ary_left(alg, xs),
    }
}

pub(crate) fn fold_right(alg: &LeibnizAlgebra, xs: &[Element]) -> Element {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = alg.mul(&acc, x);
    }
    acc
}

pub(crate) fn fold_left(alg: &LeibnizAlgebra, xs: &[Element]) -> Element {
    let mut acc = xs[xs.len() - 1].clone();
    for x in xs[..xs.len() - 1].iter().rev() {
        acc = alg.mul(x, &acc);
    }
    acc
}

pub(crate) fn fold(alg: &LeibnizAlgebra, product: NaryProduct, xs: &[Element]) -> Element {
    match product {
        NaryProduct::Right => fold_right(alg, xs),
        NaryProduct::Left => fold_left(alg, xs),
    }
}

/// Both sides of the Leibniz n-algebra identity
/// `[[x1..xn], y2..yn] = sum_i [x1, .., [xi, y2..yn], .., xn]`.
pub fn n_algebra_identity_sides(
    alg: &LeibnizAlgebra,
    product: NaryProduct,
    xs: &[Element],
    ys: &[Element],
) -> Result<(Element, Element)> {
    let n = xs.len();
    check_arity(xs, alg.dim())?;
    if ys.len() + 1 != n {
        return Err(Error::ArityError { expected: n - 1, got: ys.len() });
    }
    let with_tail = |head: Element| {
        let mut args = Vec::with_capacity(n);
        args.push(head);
        args.extend(ys.iter().cloned());
        fold(alg, product, &args)
    };
    let lhs = with_tail(fold(alg, product, xs));
    let mut rhs = alg.zero();
    for i in 0..n {
        let mut args = xs.to_vec();
        args[i] = with_tail(xs[i].clone());
        for (r, v) in rhs.iter_mut().zip(fold(alg, product, &args)) {
            *r += v;
        }
    }
    Ok((lhs, rhs))
}

/// Exhaustive check of the n-algebra identity over all `dim^(2n-1)` basis tuples.
pub fn check_n_algebra_identity(
    alg: &LeibnizAlgebra,
    n: usize,
    product: NaryProduct,
) -> Result<IdentityReport> {
    if n < 2 {
        return Err(Error::ArityError { expected: 2, got: n });
    }
    let d = alg.dim();
    if d == 0 {
        return Ok(IdentityReport::Holds);
    }
    let total = 2 * n - 1;
    let mut idx = vec![0usize; total];
    loop {
        let xs: Vec<Element> = idx[..n].iter().map(|&i| alg.basis(i)).collect();
        let ys: Vec<Element> = idx[n..].iter().map(|&i| alg.basis(i)).collect();
        let (lhs, rhs) = n_algebra_identity_sides(alg, product, &xs, &ys)?;
        if lhs != rhs {
            return Ok(IdentityReport::Violated { indices: idx, lhs, rhs });
        }
        if !advance(&mut idx, d) {
            return Ok(IdentityReport::Holds);
        }
    }
}

/// Odometer increment in lexicographic order; false after the last tuple.
pub(crate) fn advance(idx: &mut [usize], base: usize) -> bool {
    for p in (0..idx.len()).rev() {
        idx[p] += 1;
        if idx[p] < base {
            return true;
        }
        idx[p] = 0;
    }
    false
}
