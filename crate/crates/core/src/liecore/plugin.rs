//! The structure-constant interface and a caching handle around it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::basis::BasisIndex;
use crate::exactnum::{Rational, ScalarKind};

/// A sparse linear combination of basis elements.
pub type BasisCombination = Vec<(BasisIndex, Rational)>;

/// Structure constants of a graded Lie algebra or superalgebra.
///
/// `bracket_basis` is the (super)bracket of the underlying algebra; the
/// Grassmann-envelope sign is applied by the series layer, not here.
pub trait LieAlgebraPlugin: Send + Sync + fmt::Debug {
    fn name(&self) -> String;

    fn scalar_kind(&self) -> ScalarKind;

    fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> BasisCombination;

    fn basis_name(&self, x: BasisIndex) -> String;

    fn parse_basis(&self, s: &str) -> Option<BasisIndex>;

    /// Every basis element whose doubled degree has absolute value at most
    /// `max_doubled_degree`.
    fn basis_window(&self, max_doubled_degree: i32) -> Vec<BasisIndex>;

    /// Plugin-specific axiom checks beyond skew-symmetry and Jacobi.
    /// Each entry describes one violation.
    fn extra_checks(&self) -> Vec<String> {
        Vec::new()
    }
}

type BracketCache = HashMap<(BasisIndex, BasisIndex), Arc<[(BasisIndex, Rational)]>>;

/// Shared, cached handle to a plugin. Series hold an `Arc<Algebra>` and two
/// series are compatible when they point at the same handle.
pub struct Algebra {
    plugin: Box<dyn LieAlgebraPlugin>,
    cache: RwLock<BracketCache>,
}

pub type AlgebraRef = Arc<Algebra>;

impl Algebra {
    pub fn new<P: LieAlgebraPlugin + 'static>(plugin: P) -> AlgebraRef {
        Algebra::from_boxed(Box::new(plugin))
    }

    pub fn from_boxed(plugin: Box<dyn LieAlgebraPlugin>) -> AlgebraRef {
        Arc::new(Algebra { plugin, cache: RwLock::new(HashMap::new()) })
    }

    pub fn plugin(&self) -> &dyn LieAlgebraPlugin {
        self.plugin.as_ref()
    }

    pub fn name(&self) -> String {
        self.plugin.name()
    }

    pub fn scalar_kind(&self) -> ScalarKind {
        self.plugin.scalar_kind()
    }

    /// Memoized `bracket_basis`, zero coefficients removed.
    pub fn bracket(&self, x: BasisIndex, y: BasisIndex) -> Arc<[(BasisIndex, Rational)]> {
        if let Some(hit) = self.cache.read().expect("bracket cache poisoned").get(&(x, y)) {
            return hit.clone();
        }
        let value: Arc<[(BasisIndex, Rational)]> =
            self.plugin.bracket_basis(x, y).into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.cache.write().expect("bracket cache poisoned").entry((x, y)).or_insert(value).clone()
    }

    pub fn basis_name(&self, x: BasisIndex) -> String {
        self.plugin.basis_name(x)
    }

    pub fn parse_basis(&self, s: &str) -> Option<BasisIndex> {
        self.plugin.parse_basis(s)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("plugin", &self.plugin).finish()
    }
}
