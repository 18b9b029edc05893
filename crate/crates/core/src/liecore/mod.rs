//! Bigraded formal Lie series over a pluggable algebra.

mod basis;
mod eval;
mod label;
mod plugin;
mod series;

pub use basis::{BasisIndex, Part};
pub use eval::cbh_eval;
pub use label::{LabelKind, Monomial, Orders, Polarity, VarLabel};
pub use plugin::{Algebra, AlgebraRef, BasisCombination, LieAlgebraPlugin};
pub use series::{LieSeries, TermKey, Truncation};
