//! Exact-arithmetic toolkit for finite-dimensional (right) Leibniz algebras:
//! series and nilpotency, derivation and Leibniz-derivation spaces of any
//! order, certificates for nilpotency/invertibility of whole map spaces, and
//! a bundled corpus with an end-to-end verification runner.

pub mod algebra;
pub mod corpus;
pub mod derivations;
pub mod error;
pub mod exactmath;
pub mod linalg;

pub use error::{Error, Result};
