use crate::algebra::{is_nilpotent, LeibnizAlgebra};
use crate::linalg::Matrix;

use super::certify::{all_nilpotent, exists_invertible};
use super::space::{derivation_space, unbounded, DerivationQuery, Side};

/// Whether some right Leibniz-derivation of `order` is invertible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvertibleAtOrder {
    pub order: usize,
    pub witness: Option<Matrix>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassificationReport {
    pub nilpotent: bool,
    pub nilindex: Option<usize>,
    /// Nilpotent and every derivation is nilpotent.
    pub char_nilpotent: bool,
    /// Nilpotent and every pre-derivation (order 3) is nilpotent.
    pub strongly_nilpotent: bool,
    pub der_dim: usize,
    pub preder_dim: usize,
    pub invertible_orders: Vec<InvertibleAtOrder>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        let orders: Vec<_> = self
            .invertible_orders
            .iter()
            .map(|o| {
                serde_json::json!({
                    "order": o.order,
                    "invertible": o.witness.is_some(),
                    "witness": o.witness.as_ref().map(matrix_rows),
                })
            })
            .collect();
        serde_json::json!({
            "nilpotent": self.nilpotent,
            "nilindex": self.nilindex,
            "char_nilpotent": self.char_nilpotent,
            "strongly_nilpotent": self.strongly_nilpotent,
            "der_dim": self.der_dim,
            "preder_dim": self.preder_dim,
            "invertible_orders": orders,
        })
    }
}

pub(crate) fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// Characteristic/strong nilpotency and invertible right Leibniz-derivations of
/// orders `2..=max_order`.
pub fn classify(alg: &LeibnizAlgebra, max_order: usize) -> ClassificationReport {
    let (nilpotent, nilindex) = is_nilpotent(alg);
    let der = derivation_space(alg, &DerivationQuery::derivations());
    let preder = derivation_space(alg, &unbounded(3, Side::Right).expect("order 3"));
    let char_nilpotent = nilpotent && all_nilpotent(&der);
    let strongly_nilpotent = nilpotent && all_nilpotent(&preder);
    let invertible_orders = (2..=max_order)
        .map(|order| {
            let witness = match order {
                2 => exists_invertible(&der).1,
                3 => exists_invertible(&preder).1,
                _ => {
                    let q = unbounded(order, Side::Right).expect("order at least 2");
                    exists_invertible(&derivation_space(alg, &q)).1
                }
            };
            InvertibleAtOrder { order, witness }
        })
        .collect();
    ClassificationReport {
        nilpotent,
        nilindex,
        char_nilpotent,
        strongly_nilpotent,
        der_dim: der.dim(),
        preder_dim: preder.dim(),
        invertible_orders,
    }
}
