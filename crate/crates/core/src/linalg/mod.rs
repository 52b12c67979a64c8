//! Exact dense linear algebra over Q and over multivariate polynomials.

mod charpoly;
mod eigen;
mod mapspace;
mod matrix;
mod reducer;
mod subspace;
mod symbolic;

pub use eigen::{decompose, generalized_eigenspace, WeightDecomposition};
pub use mapspace::MapSpace;
pub use matrix::Matrix;
pub use reducer::RowReducer;
pub use subspace::Subspace;
pub use symbolic::{generic_combination, generic_element, symbolic_char_poly, symbolic_det, PolyMatrix, COFACTOR_LIMIT};

#[doc(hidden)]
pub use symbolic::{bareiss_det, cofactor_det};
