//! Minimal algebraic interfaces the determinant kernels are generic over.

use std::fmt::{Debug, Display};

use crate::error::Result;
use crate::poly::{MultiPoly, RatFuncQ};

/// Commutative ring with canonical (structurally comparable) elements.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Integral domain with exact division of multiples.
pub trait ExactDiv: Ring {
    /// `self / d`, failing when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Result<Self>;
}

/// Field operations.
pub trait Field: ExactDiv {
    fn inv(&self) -> Result<Self>;
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, d: &Self) -> Result<Self> {
        MultiPoly::div_exact(self, d)
    }
}

// Sums and products of reduced q-rational functions cannot fail; the
// only fallible step is inversion of zero.
impl Ring for RatFuncQ {
    fn zero() -> Self {
        RatFuncQ::zero()
    }
    fn one() -> Self {
        RatFuncQ::one()
    }
    fn is_zero(&self) -> bool {
        RatFuncQ::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFuncQ::add(self, other).expect("sum of reduced q-fractions")
    }
    fn sub(&self, other: &Self) -> Self {
        RatFuncQ::sub(self, other).expect("difference of reduced q-fractions")
    }
    fn mul(&self, other: &Self) -> Self {
        RatFuncQ::mul(self, other).expect("product of reduced q-fractions")
    }
    fn neg(&self) -> Self {
        RatFuncQ::neg(self)
    }
}

impl ExactDiv for RatFuncQ {
    fn div_exact(&self, d: &Self) -> Result<Self> {
        RatFuncQ::div(self, d)
    }
}

impl Field for RatFuncQ {
    fn inv(&self) -> Result<Self> {
        RatFuncQ::inv(self)
    }
}
