//! Spaces of derivations and right/left Leibniz-derivations of any order,
//! certificates for nilpotency and invertibility of whole map spaces, and the
//! checks built on them.

mod certify;
mod classify;
mod construct;
pub mod oracle;
mod space;
mod theorem;

pub use certify::{all_nilpotent, exists_invertible};
pub use classify::{classify, ClassificationReport, InvertibleAtOrder};
pub use construct::{
    construct_moens_derivation, invariance_check, power_rule_check, weight_product_check,
    MoensDerivation, WeightProductReport, WeightTuple,
};
pub use space::{
    derivation_space, intersection_law_check, is_derivation, order_inclusion_check,
    DerivationQuery, Side, DEFAULT_MAX_ORDER,
};
pub use theorem::{default_max_order, theorem_check, OrderVerdict, TheoremReport, DEFAULT_THEOREM_ORDER};
