use std::fmt;

use crate::algebra::{is_ideal, is_nilpotent, nary_product_subspace, series, Element, LeibnizAlgebra, SeriesKind};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{decompose, Matrix, Subspace};

use super::space::{derivation_space, is_derivation, unbounded, DerivationQuery, Side};

/// Invertible right Leibniz-derivation built from the lower central series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoensDerivation {
    pub matrix: Matrix,
    pub order: usize,
    pub nilindex: usize,
}

/// For nilpotent `L` with nilindex `s`, the map acting as the identity on a
/// coordinate complement of `L^q` and as `q` on `L^q`, `q = floor(s/2) + 1`.
/// It is an invertible right Leibniz-derivation of order `q`.
pub fn construct_moens_derivation(alg: &LeibnizAlgebra) -> Result<MoensDerivation> {
    let (nilpotent, nilindex) = is_nilpotent(alg);
    let s = match (nilpotent, nilindex) {
        (true, Some(s)) => s,
        _ => return Err(Error::NotNilpotent),
    };
    let n = alg.dim();
    // q >= 2 always holds for a nonzero algebra (s >= 2); keep the order valid for dim 0
    let q = (s / 2 + 1).max(2);
    let lc = series(alg, &Subspace::full(n), SeriesKind::LowerCentral, 2)?;
    let lq = lc.term(q).expect("series reached zero");
    let complement = lq.pivot_complement();

    // columns: basis of L^q, then the complement coordinates
    let mut cols: Vec<Vec<Rational>> = lq.basis_vectors().map(<[Rational]>::to_vec).collect();
    let mut weights = vec![Rational::from_int(q as i64); cols.len()];
    for &w in &complement {
        cols.push(alg.basis(w));
        weights.push(Rational::one());
    }
    let b = Matrix::from_columns(n, &cols);
    let p = b.mul(&Matrix::diagonal(&weights)).mul(&b.inverse()?);
    Ok(MoensDerivation { matrix: p, order: q, nilindex: s })
}

fn require_member(alg: &LeibnizAlgebra, d: &Matrix, order: usize) -> Result<()> {
    if !is_derivation(alg, d, &unbounded(order, Side::Right)?)? {
        return Err(Error::NotADerivation { order });
    }
    Ok(())
}

/// `d^k [x1..xn]_r = sum over i1+..+in = k of k!/(i1!..in!) [d^i1 x1, .., d^in xn]_r`
/// on every basis tuple, for `d` a right Leibniz-derivation of order `n`.
pub fn power_rule_check(alg: &LeibnizAlgebra, d: &Matrix, n: usize, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("power k must be at least 1".into()));
    }
    require_member(alg, d, n)?;
    let dim = alg.dim();
    // images[p][b] = d^p e_b
    let mut images: Vec<Vec<Element>> = vec![(0..dim).map(|b| alg.basis(b)).collect()];
    for p in 1..=k {
        let next = images[p - 1].iter().map(|v| d.apply(v)).collect();
        images.push(next);
    }
    let dk = d.pow(k as u32);
    let comps = compositions(k, n);
    let factorial = |m: usize| (1..=m as i64).fold(Rational::one(), |acc, x| acc * Rational::from_int(x));
    let coeffs: Vec<Rational> = comps
        .iter()
        .map(|c| c.iter().fold(factorial(k), |acc, &i| acc / factorial(i)))
        .collect();

    let mut idx = vec![0usize; n];
    if dim == 0 {
        return Ok(true);
    }
    loop {
        let xs: Vec<Element> = idx.iter().map(|&i| alg.basis(i)).collect();
        let lhs = dk.apply(&right_fold(alg, &xs));
        let mut rhs = alg.zero();
        for (comp, coeff) in comps.iter().zip(&coeffs) {
            let args: Vec<Element> =
                comp.iter().zip(&idx).map(|(&p, &b)| images[p][b].clone()).collect();
            for (r, v) in rhs.iter_mut().zip(right_fold(alg, &args)) {
                *r += coeff * &v;
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
        if !crate::algebra::advance(&mut idx, dim) {
            return Ok(true);
        }
    }
}

fn right_fold(alg: &LeibnizAlgebra, xs: &[Element]) -> Element {
    crate::algebra::fold(alg, crate::algebra::NaryProduct::Right, xs)
}

/// Ordered `n`-tuples of nonnegative integers summing to `k`.
fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(k - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One weight tuple of a weight-space product check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightTuple {
    pub weights: Vec<Rational>,
    pub sum: Rational,
    /// Whether the sum is an eigenvalue of the map.
    pub sum_is_weight: bool,
    pub product_dim: usize,
    pub target_dim: usize,
    pub contained: bool,
    pub equal: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightProductReport {
    pub eigenvalues: Vec<Rational>,
    pub tuples: Vec<WeightTuple>,
}

impl WeightProductReport {
    /// Every product lies in the weight space of the summed weight (or is zero).
    pub fn all_contained(&self) -> bool {
        self.tuples.iter().all(|t| t.contained)
    }

    pub fn all_equal(&self) -> bool {
        self.tuples.iter().all(|t| t.equal)
    }
}

impl fmt::Display for WeightProductReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ev: Vec<String> = self.eigenvalues.iter().map(ToString::to_string).collect();
        writeln!(f, "weights: {}", ev.join(", "))?;
        for t in &self.tuples {
            let w: Vec<String> = t.weights.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "  ({}) -> {}: product dim {}, target dim {}, {}{}",
                w.join(", "),
                t.sum,
                t.product_dim,
                t.target_dim,
                if t.contained { "contained" } else { "NOT contained" },
                if t.equal { ", equal" } else { "" }
            )?;
        }
        write!(
            f,
            "containment {}; equality {}",
            if self.all_contained() { "holds" } else { "fails" },
            if self.all_equal() { "holds for every tuple" } else { "not always" }
        )
    }
}

/// For `d` a right Leibniz-derivation of order `n` with split spectrum:
/// `[L_a1, .., L_an]_r ⊆ L_(a1+..+an)`, read as `= 0` when the sum is not a weight.
pub fn weight_product_check(alg: &LeibnizAlgebra, d: &Matrix, n: usize) -> Result<WeightProductReport> {
    require_member(alg, d, n)?;
    let dec = decompose(d)?;
    let pairs = dec.pairs();
    let dim = alg.dim();
    let zero = Subspace::zero(dim);
    let mut tuples = Vec::new();
    if !pairs.is_empty() {
        let mut idx = vec![0usize; n];
        loop {
            let spaces: Vec<&Subspace> = idx.iter().map(|&i| &pairs[i].1).collect();
            let weights: Vec<Rational> = idx.iter().map(|&i| pairs[i].0.clone()).collect();
            let sum: Rational = weights.iter().sum();
            let product = nary_product_subspace(alg, &spaces)?;
            let target = dec.space(&sum);
            let target = target.unwrap_or(&zero);
            tuples.push(WeightTuple {
                sum_is_weight: dec.space(&sum).is_some(),
                product_dim: product.dim(),
                target_dim: target.dim(),
                contained: product.is_subset_of(target),
                equal: &product == target,
                weights,
                sum,
            });
            if !crate::algebra::advance(&mut idx, pairs.len()) {
                break;
            }
        }
    }
    Ok(WeightProductReport { eigenvalues: pairs.iter().map(|p| p.0.clone()).collect(), tuples })
}

/// `D(I) ⊆ I` for every map `D` in the requested derivation space; `I` must be an ideal.
pub fn invariance_check(alg: &LeibnizAlgebra, ideal: &Subspace, q: &DerivationQuery) -> Result<bool> {
    if ideal.ambient_dim() != alg.dim() {
        return Err(Error::ShapeError("ideal lives in a different space".into()));
    }
    if !is_ideal(alg, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let space = derivation_space(alg, q);
    for d in space.basis() {
        if !ideal.is_invariant_under(d)? {
            return Ok(false);
        }
    }
    Ok(true)
}
