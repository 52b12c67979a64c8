//! Independent reference computations and random test algebras.

use rand::Rng;

use crate::algebra::{LeibnizAlgebra, TableBuilder};
use crate::exactmath::Rational;
use crate::linalg::{MapSpace, Matrix};

/// Derivation space from one dense constraint row per `(i, j, k)`:
/// `sum_a c_ij^a D[k][a] - sum_a (c_aj^k D[a][i] + c_ia^k D[a][j]) = 0`.
pub fn naive_derivation_space(alg: &LeibnizAlgebra) -> MapSpace {
    let n = alg.dim();
    let unknown = |row: usize, col: usize| row * n + col;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut r = vec![Rational::zero(); n * n];
                for a in 0..n {
                    r[unknown(k, a)] += alg.structure_constant(i, j, a);
                    r[unknown(a, i)] -= alg.structure_constant(a, j, k);
                    r[unknown(a, j)] -= alg.structure_constant(i, a, k);
                }
                rows.push(r);
            }
        }
    }
    if rows.is_empty() {
        return MapSpace::full(n);
    }
    let m = Matrix::from_rows(rows).expect("rectangular constraint matrix");
    MapSpace::from_flat_subspace(n, &m.nullspace())
}

/// A random algebra of dimension `dim` satisfying the Leibniz identity: a
/// sparse integer table found by rejection sampling, then a random change of basis.
pub fn random_algebra<R: Rng>(rng: &mut R, dim: usize) -> LeibnizAlgebra {
    loop {
        let mut b = TableBuilder::new(dim);
        if dim > 0 {
            let entries = rng.gen_range(0..=dim + 1);
            for _ in 0..entries {
                let (i, j, k) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
                let c = rng.gen_range(-2i64..=2);
                b.add(i, j, k, Rational::from_int(c)).expect("indices in range");
            }
        }
        let Ok(alg) = b.build(format!("random{dim}")) else { continue };
        loop {
            let data = (0..dim * dim).map(|_| Rational::from_int(rng.gen_range(-2i64..=2))).collect();
            let t = Matrix::new(dim, dim, data).expect("square");
            if t.det().expect("square").is_zero() {
                continue;
            }
            return alg.change_basis(&t).expect("invertible change of basis");
        }
    }
}
