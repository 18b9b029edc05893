//! Concrete algebra plugins and the axiom validator.

mod affine;
mod neveu_schwarz;
mod validate;
mod virasoro;

pub use affine::{Affine, BracketEntry, FiniteAlgebraConfig, FiniteLieAlgebra};
pub use neveu_schwarz::NeveuSchwarz;
pub use validate::{validate_plugin, ValidationReport, Violation};
pub use virasoro::Virasoro;

use crate::error::{Error, Result};
use crate::liecore::VarLabel;
use crate::util::parse_half_int;

/// Active variable indices, doubled: `A_{j/2}` for `j` in `plus` and
/// `B_{j/2}` for `j` in `minus`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Support {
    pub plus: Vec<i32>,
    pub minus: Vec<i32>,
}

impl Support {
    /// Validates signs; sorts and removes duplicates.
    pub fn new(mut plus: Vec<i32>, mut minus: Vec<i32>) -> Result<Support> {
        if let Some(j) = plus.iter().find(|&&j| j <= 0) {
            return Err(Error::Config(format!("A indices must be positive, got {}", crate::util::half_int(*j))));
        }
        if let Some(j) = minus.iter().find(|&&j| j >= 0) {
            return Err(Error::Config(format!("B indices must be negative, got {}", crate::util::half_int(*j))));
        }
        plus.sort_unstable();
        plus.dedup();
        minus.sort_unstable_by(|a, b| b.cmp(a));
        minus.dedup();
        Ok(Support { plus, minus })
    }

    /// Integer indices, e.g. `A_1, A_2` and `B_-1, B_-2` from `[1,2]`, `[-1,-2]`.
    pub fn integral(plus: &[i32], minus: &[i32]) -> Result<Support> {
        Support::new(plus.iter().map(|j| 2 * j).collect(), minus.iter().map(|j| 2 * j).collect())
    }

    /// `±1, …, ±n` in integer units.
    pub fn symmetric(n: i32) -> Support {
        Support::integral(&(1..=n).collect::<Vec<_>>(), &(1..=n).map(|j| -j).collect::<Vec<_>>())
            .expect("symmetric support is valid")
    }

    /// `±1/2, ±1, …, ±n/2`: every doubled index up to `n`.
    pub fn symmetric_doubled(n: i32) -> Support {
        Support::new((1..=n).collect(), (1..=n).map(|j| -j).collect()).expect("symmetric support is valid")
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    pub fn plus_labels(&self) -> Vec<(VarLabel, i32)> {
        self.plus.iter().map(|&d| (VarLabel::a(d), d)).collect()
    }

    pub fn minus_labels(&self) -> Vec<(VarLabel, i32)> {
        self.minus.iter().map(|&d| (VarLabel::b(d), d)).collect()
    }

    /// Largest absolute doubled index.
    pub fn max_abs(&self) -> i32 {
        self.plus.iter().chain(&self.minus).map(|j| j.abs()).max().unwrap_or(0)
    }
}

/// Parses `prefix` followed by a half-integer, returning the doubled value.
pub(crate) fn parse_indexed(s: &str, prefix: &str) -> Option<i32> {
    parse_half_int(s.strip_prefix(prefix)?)
}
