use serde::Serialize;

use crate::linalg::{generic_combination, symbolic_char_poly};

use super::table::LeibnizAlgebra;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct EngelReport {
    /// Every `R_{e_i}` is a nilpotent matrix.
    pub basis_nilpotent: bool,
    /// `sum_i x_i R_{e_i}` has characteristic polynomial `t^dim` identically.
    pub generic_nilpotent: bool,
}

impl EngelReport {
    pub fn verdict(&self) -> bool {
        self.basis_nilpotent && self.generic_nilpotent
    }
}

/// Engel-type nilpotency test through right multiplications.
///
/// The generic-element criterion decides whether every `R_x` is nilpotent;
/// the basis check is a cheap necessary condition reported alongside.
pub fn engel_check(alg: &LeibnizAlgebra) -> EngelReport {
    let n = alg.dim();
    let ops: Vec<_> = (0..n)
        .map(|i| alg.right_mult(&alg.basis(i)).expect("basis element has the right length"))
        .collect();
    let basis_nilpotent = ops.iter().all(|r| r.is_nilpotent());
    let generic = generic_combination(n, &ops);
    let generic_nilpotent = symbolic_char_poly(&generic)
        .expect("square")
        .iter()
        .all(|c| c.is_zero());
    EngelReport { basis_nilpotent, generic_nilpotent }
}
