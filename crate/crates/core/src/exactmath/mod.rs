//! Exact rationals, sparse multivariate polynomials and univariate
//! polynomials. Nothing in the crate touches floating point.

mod multipoly;
mod rational;
mod unipoly;

pub use multipoly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use unipoly::UniPoly;

/// Minimal ring interface shared by `Rational` and `MultiPoly`, so matrix
/// algorithms (Berkowitz, cofactor expansion) can be written once.
pub trait RingElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}
