use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{RowReducer, Subspace};

use super::table::LeibnizAlgebra;

/// Span of `[a, b]` over basis vectors `a` of `a_space`, `b` of `b_space`.
pub fn product_subspace(alg: &LeibnizAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    nary_product_subspace(alg, &[a, b])
}

/// Span of `[a1, ..., an]_r` over all tuples of basis vectors of the factors.
pub fn nary_product_subspace(alg: &LeibnizAlgebra, factors: &[&Subspace]) -> Result<Subspace> {
    let n = alg.dim();
    if factors.len() < 2 {
        return Err(Error::ArityError { expected: 2, got: factors.len() });
    }
    if factors.iter().any(|f| f.ambient_dim() != n) {
        return Err(Error::ShapeError(format!(
            "factor subspaces must live in the {n}-dimensional algebra"
        )));
    }
    let bases: Vec<Vec<Vec<Rational>>> = factors
        .iter()
        .map(|f| f.basis_vectors().map(<[Rational]>::to_vec).collect())
        .collect();
    let mut red = RowReducer::new(n);
    for first in &bases[0] {
        extend_products(alg, first.clone(), &bases[1..], &mut red);
        if red.is_full() {
            break;
        }
    }
    Ok(red.into_subspace())
}

// Depth-first over tuples, sharing prefix products; zero prefixes prune
// their whole subtree by bilinearity.
fn extend_products(
    alg: &LeibnizAlgebra,
    prefix: Vec<Rational>,
    rest: &[Vec<Vec<Rational>>],
    red: &mut RowReducer,
) {
    if prefix.iter().all(Rational::is_zero) || red.is_full() {
        return;
    }
    match rest.split_first() {
        None => {
            red.insert(prefix);
        }
        Some((next, tail)) => {
            for y in next {
                extend_products(alg, alg.mul(&prefix, y), tail, red);
            }
        }
    }
}

/// Which recursively defined chain of subspaces to compute.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// `M^1 = M`, `M^(k+1) = [M^k, M]`
    LowerCentral,
    /// `M^[1] = M`, `M^[k+1] = [M^[k], M^[k]]`
    Derived,
    /// `[T_k, M, ..., M]_r` with `n - 1` copies of `M`
    NLower,
    /// `[T_k, ..., T_k]_r` with `n` copies
    NDerived,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::Derived => "derived",
            SeriesKind::NLower => "n_lower",
            SeriesKind::NDerived => "n_derived",
        }
    }
}

impl std::str::FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "lower_central" | "lower" => Ok(SeriesKind::LowerCentral),
            "derived" => Ok(SeriesKind::Derived),
            "n_lower" => Ok(SeriesKind::NLower),
            "n_derived" => Ok(SeriesKind::NDerived),
            other => Err(Error::InvalidArgument(format!("unknown series kind {other:?}"))),
        }
    }
}

/// Terms of a series, computed until zero, stabilization, or the step cap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub arity: usize,
    /// `terms[0]` is the starting subspace.
    pub terms: Vec<Subspace>,
    /// The last term reproduces itself.
    pub stabilized: bool,
    pub terminal_dim: usize,
}

impl SeriesReport {
    pub fn reached_zero(&self) -> bool {
        self.terminal_dim == 0
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// The `k`-th term (1-based), extending past the computed prefix when the
    /// series ended at zero or stabilized.
    pub fn term(&self, k: usize) -> Option<Subspace> {
        assert!(k >= 1, "series terms are 1-based");
        if let Some(t) = self.terms.get(k - 1) {
            return Some(t.clone());
        }
        if self.reached_zero() || self.stabilized {
            self.terms.last().cloned()
        } else {
            None
        }
    }
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} series (arity {}): dims {}",
            self.kind.as_str(),
            self.arity,
            dims.join(", ")
        )?;
        if self.reached_zero() {
            write!(f, " (reaches 0)")
        } else if self.stabilized {
            write!(f, " (stabilizes at dim {})", self.terminal_dim)
        } else {
            write!(f, " (truncated)")
        }
    }
}

pub fn series(
    alg: &LeibnizAlgebra,
    start: &Subspace,
    kind: SeriesKind,
    arity: usize,
) -> Result<SeriesReport> {
    if arity < 2 {
        return Err(Error::ArityError { expected: 2, got: arity });
    }
    if matches!(kind, SeriesKind::LowerCentral | SeriesKind::Derived) && arity != 2 {
        return Err(Error::InvalidArgument(format!(
            "{} series is binary; use the n-ary kind for arity {arity}",
            kind.as_str()
        )));
    }
    if start.ambient_dim() != alg.dim() {
        return Err(Error::ShapeError("start subspace lives in a different space".into()));
    }
    // A non-subalgebra start need not give a decreasing chain; cap the walk.
    let cap = 4 * alg.dim() + 8;
    let mut terms = vec![start.clone()];
    let mut stabilized = false;
    while terms.len() < cap {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = next_term(alg, start, last, kind, arity)?;
        if &next == last {
            stabilized = true;
            break;
        }
        if terms.contains(&next) {
            terms.push(next);
            break;
        }
        terms.push(next);
    }
    let terminal_dim = terms.last().map_or(0, Subspace::dim);
    Ok(SeriesReport { kind, arity, terms, stabilized, terminal_dim })
}

fn next_term(
    alg: &LeibnizAlgebra,
    start: &Subspace,
    last: &Subspace,
    kind: SeriesKind,
    arity: usize,
) -> Result<Subspace> {
    let mut factors: Vec<&Subspace> = vec![last];
    match kind {
        SeriesKind::LowerCentral => factors.push(start),
        SeriesKind::Derived => factors.push(last),
        SeriesKind::NLower => factors.extend(std::iter::repeat_n(start, arity - 1)),
        SeriesKind::NDerived => factors.extend(std::iter::repeat_n(last, arity - 1)),
    }
    nary_product_subspace(alg, &factors)
}

/// `(true, Some(s))` with `s` minimal such that `L^s = 0`.
pub fn is_nilpotent(alg: &LeibnizAlgebra) -> (bool, Option<usize>) {
    let rep = series(alg, &Subspace::full(alg.dim()), SeriesKind::LowerCentral, 2)
        .expect("full space is a valid start");
    if rep.reached_zero() {
        (true, Some(rep.terms.len()))
    } else {
        (false, None)
    }
}

pub fn nilindex(alg: &LeibnizAlgebra) -> Option<usize> {
    is_nilpotent(alg).1
}

/// Derived series of `m` (inside `alg`) reaches zero.
pub fn is_solvable(alg: &LeibnizAlgebra, m: &Subspace) -> Result<bool> {
    Ok(series(alg, m, SeriesKind::Derived, 2)?.reached_zero())
}

pub fn is_algebra_solvable(alg: &LeibnizAlgebra) -> bool {
    is_solvable(alg, &Subspace::full(alg.dim())).expect("full space is a valid start")
}

pub fn is_n_nilpotent(alg: &LeibnizAlgebra, n: usize) -> Result<bool> {
    Ok(series(alg, &Subspace::full(alg.dim()), SeriesKind::NLower, n)?.reached_zero())
}

pub fn is_n_solvable(alg: &LeibnizAlgebra, n: usize) -> Result<bool> {
    is_n_solvable_subspace(alg, &Subspace::full(alg.dim()), n)
}

pub fn is_n_solvable_subspace(alg: &LeibnizAlgebra, m: &Subspace, n: usize) -> Result<bool> {
    Ok(series(alg, m, SeriesKind::NDerived, n)?.reached_zero())
}

pub fn is_subalgebra(alg: &LeibnizAlgebra, m: &Subspace) -> Result<bool> {
    Ok(product_subspace(alg, m, m)?.is_subset_of(m))
}

/// `[I, L] + [L, I] ⊆ I`
pub fn is_ideal(alg: &LeibnizAlgebra, i: &Subspace) -> Result<bool> {
    let full = Subspace::full(alg.dim());
    Ok(product_subspace(alg, i, &full)?.is_subset_of(i)
        && product_subspace(alg, &full, i)?.is_subset_of(i))
}

/// `sum_p [L, ..., I, ..., L]_r ⊆ I` over every position `p` of the n-ary product.
pub fn is_n_ideal(alg: &LeibnizAlgebra, i: &Subspace, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::ArityError { expected: 2, got: n });
    }
    let full = Subspace::full(alg.dim());
    for pos in 0..n {
        let factors: Vec<&Subspace> = (0..n).map(|p| if p == pos { i } else { &full }).collect();
        if !nary_product_subspace(alg, &factors)?.is_subset_of(i) {
            return Ok(false);
        }
    }
    Ok(true)
}
