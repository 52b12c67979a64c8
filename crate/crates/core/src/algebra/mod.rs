//! Leibniz algebras given by structure constants, identity checks, series,
//! ideals and the Engel-type nilpotency test.

mod engel;
mod identity;
mod series;
mod table;

pub use engel::{engel_check, EngelReport};
pub use identity::{
    check_leibniz_identity, check_n_algebra_identity, fmt_element, n_algebra_identity_sides,
    n_ary, n_ary_left, n_ary_right, IdentityReport, NaryProduct,
};
pub(crate) use identity::{advance, fold};
pub use series::{
    is_algebra_solvable, is_ideal, is_n_ideal, is_n_nilpotent, is_n_solvable,
    is_n_solvable_subspace, is_nilpotent, is_solvable, is_subalgebra, nary_product_subspace,
    nilindex, product_subspace, series, SeriesKind, SeriesReport,
};
pub use table::{basis_element, Element, LeibnizAlgebra, TableBuilder};
