//! Exact scalar arithmetic: rationals, Bernoulli numbers and Grassmann scalars.

mod bernoulli;
mod grassmann;
mod rational;
mod scalar;

pub use bernoulli::bernoulli;
pub use grassmann::{GenSet, GrassmannScalar};
pub use rational::{binomial, factorial, Rational};
pub use scalar::{Scalar, ScalarKind};
