//! The coefficient ring abstraction shared by Lie series and enveloping-algebra
//! elements: plain rationals, or Grassmann scalars for superalgebra envelopes.

use std::fmt::{Debug, Display};

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::grassmann::GrassmannScalar;
use super::rational::Rational;

/// Which coefficient ring an algebra plugin expects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Grassmann,
}

pub trait Scalar: Clone + PartialEq + Debug + Display + Serialize + DeserializeOwned + Send + Sync + 'static {
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn neg(&self) -> Self;
    /// Odd components change sign; the identity on purely even scalars.
    fn parity_twist(&self) -> Self;
    /// Parity when homogeneous; `None` for zero or mixed parity.
    fn parity(&self) -> Option<u8>;

    /// `self` with the Koszul sign for passing an object of parity `p`.
    fn twisted_by(&self, p: u8) -> Self {
        if p % 2 == 1 {
            self.parity_twist()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn neg(&self) -> Self {
        -self
    }
    fn parity_twist(&self) -> Self {
        self.clone()
    }
    fn parity(&self) -> Option<u8> {
        (!self.is_zero()).then_some(0)
    }
    fn twisted_by(&self, _p: u8) -> Self {
        self.clone()
    }
}

impl Scalar for GrassmannScalar {
    const KIND: ScalarKind = ScalarKind::Grassmann;

    fn zero() -> Self {
        GrassmannScalar::zero()
    }
    fn one() -> Self {
        GrassmannScalar::one()
    }
    fn from_rational(r: Rational) -> Self {
        GrassmannScalar::from_rational(r)
    }
    fn is_zero(&self) -> bool {
        GrassmannScalar::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        GrassmannScalar::add_assign(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        GrassmannScalar::mul(self, other)
    }
    fn scale(&self, r: &Rational) -> Self {
        GrassmannScalar::scale(self, r)
    }
    fn neg(&self) -> Self {
        GrassmannScalar::neg(self)
    }
    fn parity_twist(&self) -> Self {
        GrassmannScalar::parity_twist(self)
    }
    fn parity(&self) -> Option<u8> {
        GrassmannScalar::parity(self)
    }
}
