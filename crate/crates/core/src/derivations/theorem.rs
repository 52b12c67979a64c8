use std::fmt;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};

use super::certify::exists_invertible;
use super::construct::{construct_moens_derivation, MoensDerivation};
use super::space::{derivation_space, is_derivation, unbounded, Side};

/// Default bound on the orders scanned for non-nilpotent algebras.
pub const DEFAULT_THEOREM_ORDER: usize = 4;

/// `LEIBNIZ_MAX_ORDER` if set to an integer ≥ 2, else [`DEFAULT_THEOREM_ORDER`].
pub fn default_max_order() -> usize {
    std::env::var("LEIBNIZ_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= 2)
        .unwrap_or(DEFAULT_THEOREM_ORDER)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderVerdict {
    pub order: usize,
    pub invertible: bool,
}

/// Outcome of checking "nilpotent iff an invertible right Leibniz-derivation
/// exists" on one algebra. For non-nilpotent input only orders
/// `2..=max_order` are scanned; the report records that bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremReport {
    pub nilpotent: bool,
    pub max_order: usize,
    pub construction: Option<MoensDerivation>,
    pub orders: Vec<OrderVerdict>,
    pub violations: Vec<String>,
}

impl TheoremReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nilpotent": self.nilpotent,
            "max_order": self.max_order,
            "construction": self.construction.as_ref().map(|m| serde_json::json!({
                "order": m.order,
                "nilindex": m.nilindex,
                "matrix": super::classify::matrix_rows(&m.matrix),
            })),
            "orders": self.orders.iter().map(|o| serde_json::json!({
                "order": o.order,
                "invertible": o.invertible,
            })).collect::<Vec<_>>(),
            "passes": self.passes(),
            "violations": self.violations,
        })
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.construction {
            Some(m) => write!(
                f,
                "nilpotent (nilindex {}); invertible right Leibniz-derivation of order {}",
                m.nilindex, m.order
            )?,
            None if self.nilpotent => write!(f, "nilpotent; construction failed")?,
            None => {
                let found: Vec<String> = self
                    .orders
                    .iter()
                    .filter(|o| o.invertible)
                    .map(|o| o.order.to_string())
                    .collect();
                if found.is_empty() {
                    write!(
                        f,
                        "not nilpotent; no invertible right Leibniz-derivation of order ≤ {}",
                        self.max_order
                    )?;
                } else {
                    write!(
                        f,
                        "not nilpotent; invertible right Leibniz-derivation at order {}",
                        found.join(", ")
                    )?;
                }
            }
        }
        for v in &self.violations {
            write!(f, "\nviolation: {v}")?;
        }
        Ok(())
    }
}

pub fn theorem_check(alg: &LeibnizAlgebra, max_order: usize) -> Result<TheoremReport> {
    if max_order < 2 {
        return Err(Error::InvalidArgument(format!("max order must be at least 2, got {max_order}")));
    }
    let mut violations = Vec::new();
    let mut orders = Vec::new();
    match construct_moens_derivation(alg) {
        Ok(m) => {
            let q = unbounded(m.order, Side::Right)?;
            if !is_derivation(alg, &m.matrix, &q)? {
                violations.push(format!("constructed map is not a derivation of order {}", m.order));
            }
            if m.matrix.det()?.is_zero() {
                violations.push("constructed map is singular".into());
            }
            let (invertible, _) = exists_invertible(&derivation_space(alg, &q));
            if !invertible {
                violations.push(format!("no invertible element certified at order {}", m.order));
            }
            orders.push(OrderVerdict { order: m.order, invertible });
            Ok(TheoremReport { nilpotent: true, max_order: m.order, construction: Some(m), orders, violations })
        }
        Err(Error::NotNilpotent) => {
            for order in 2..=max_order {
                let q = unbounded(order, Side::Right)?;
                let (invertible, _) = exists_invertible(&derivation_space(alg, &q));
                if invertible {
                    violations.push(format!(
                        "non-nilpotent algebra has an invertible derivation of order {order}"
                    ));
                }
                orders.push(OrderVerdict { order, invertible });
            }
            Ok(TheoremReport { nilpotent: false, max_order, construction: None, orders, violations })
        }
        Err(e) => Err(e),
    }
}
