//! The commutative-ring interface shared by every coefficient type that can
//! sit inside a univariate polynomial and a Sylvester matrix.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::RatFunc;

/// A commutative integral domain with exact division where it exists.
///
/// Constants are produced from an existing element (`zero_like`,
/// `one_like`) because some carriers hold shape data, such as the variable
/// count of a multivariate polynomial.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: &BigInt) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self * BigRational::from_integer(k.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self * &RatFunc::from_bigint(k.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}
