//! Untwisted affine algebras `l ⊗ C[x, 1/x] ⊕ C k` over a finite-dimensional
//! Lie algebra `l` with an invariant symmetric form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, ScalarKind};
use crate::liecore::{
    Algebra, AlgebraRef, BasisCombination, BasisIndex, LieAlgebraPlugin, LieSeries, Monomial, Truncation, VarLabel,
};

use super::{parse_indexed, Support};

/// Sparse structure-constant row: `(basis index, coefficient)` pairs.
type Entry = Vec<(usize, Rational)>;

/// A finite-dimensional Lie algebra given by structure constants, plus a
/// symmetric bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteLieAlgebra {
    names: Vec<String>,
    /// `table[i][j]` is `[x_i, x_j]`.
    table: Vec<Vec<Entry>>,
    form: Vec<Vec<Rational>>,
}

/// One structure constant entry `[left, right] = Σ result`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, Rational>,
}

/// Serializable description of a [`FiniteLieAlgebra`]. Brackets not listed
/// are filled in by skew-symmetry or default to zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteAlgebraConfig {
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub form: Vec<Vec<Rational>>,
}

impl FiniteLieAlgebra {
    pub fn from_config(cfg: &FiniteAlgebraConfig) -> Result<FiniteLieAlgebra> {
        let n = cfg.basis.len();
        if n == 0 {
            return Err(Error::Config("finite algebra needs at least one basis element".into()));
        }
        let index = |s: &str| {
            cfg.basis.iter().position(|b| b == s).ok_or_else(|| Error::Config(format!("unknown basis element `{s}`")))
        };
        for (i, name) in cfg.basis.iter().enumerate() {
            if name.is_empty() || name.contains('@') || name == "k" || cfg.basis[..i].contains(name) {
                return Err(Error::Config(format!("invalid or duplicate basis name `{name}`")));
            }
        }
        let mut table: Vec<Vec<Option<Entry>>> = vec![vec![None; n]; n];
        for e in &cfg.brackets {
            let (i, j) = (index(&e.left)?, index(&e.right)?);
            let mut value = Vec::new();
            for (k, c) in &e.result {
                if !c.is_zero() {
                    value.push((index(k)?, c.clone()));
                }
            }
            value.sort_by_key(|(k, _)| *k);
            if table[i][j].is_some() {
                return Err(Error::Config(format!("bracket [{}, {}] given twice", e.left, e.right)));
            }
            table[i][j] = Some(value);
        }
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (&table[i][j], &table[j][i]) {
                        (Some(v), _) => v.clone(),
                        (None, Some(v)) => v.iter().map(|(k, c)| (*k, -c)).collect(),
                        (None, None) => Vec::new(),
                    })
                    .collect()
            })
            .collect();
        if cfg.form.len() != n || cfg.form.iter().any(|row| row.len() != n) {
            return Err(Error::Config(format!("form must be a {n}x{n} matrix")));
        }
        Ok(FiniteLieAlgebra { names: cfg.basis.clone(), table, form: cfg.form.clone() })
    }

    /// `sl_2` with basis `e, h, f` and the trace form of the fundamental
    /// representation: `(e, f) = 1`, `(h, h) = 2`.
    pub fn sl2() -> FiniteLieAlgebra {
        FiniteLieAlgebra::from_config(&sl2_config()).expect("sl2 preset is well formed")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn form(&self, i: usize, j: usize) -> &Rational {
        &self.form[i][j]
    }

    /// `(x, y)` for vectors given as sparse coordinate lists.
    pub fn form_of(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x {
            for (j, b) in y {
                acc += &(a * b * &self.form[*i][*j]);
            }
        }
        acc
    }

    pub fn to_config(&self) -> FiniteAlgebraConfig {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_empty() {
                    brackets.push(BracketEntry {
                        left: self.names[i].clone(),
                        right: self.names[j].clone(),
                        result: self.table[i][j].iter().map(|(k, c)| (self.names[*k].clone(), c.clone())).collect(),
                    });
                }
            }
        }
        FiniteAlgebraConfig { basis: self.names.clone(), brackets, form: self.form.clone() }
    }

    /// Violations of form symmetry, form invariance and the Jacobi identity.
    pub fn check(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.form[i][j] != self.form[j][i] {
                    out.push(format!("form not symmetric at ({}, {})", self.names[i], self.names[j]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // ([x,y],z) + (y,[x,z]) = 0
                    let lhs = self.form_of(self.bracket(x, y), &[(z, Rational::one())])
                        + self.form_of(&[(y, Rational::one())], self.bracket(x, z));
                    if !lhs.is_zero() {
                        out.push(format!(
                            "form not invariant at ({}, {}, {}): ([x,y],z) + (y,[x,z]) = {lhs}",
                            self.names[x], self.names[y], self.names[z]
                        ));
                    }
                }
            }
        }
        out
    }
}

fn sl2_config() -> FiniteAlgebraConfig {
    let entry = |l: &str, r: &str, res: &[(&str, i64)]| BracketEntry {
        left: l.into(),
        right: r.into(),
        result: res.iter().map(|(k, c)| (k.to_string(), Rational::from(*c))).collect(),
    };
    let z = Rational::zero;
    let i = Rational::from;
    FiniteAlgebraConfig {
        basis: vec!["e".into(), "h".into(), "f".into()],
        brackets: vec![entry("e", "f", &[("h", 1)]), entry("h", "e", &[("e", 2)]), entry("h", "f", &[("f", -2)])],
        form: vec![vec![z(), z(), i(1)], vec![z(), i(2), z()], vec![i(1), z(), z()]],
    }
}

/// The affine algebra over a finite Lie algebra:
/// `[g ⊗ x^m, h ⊗ x^n] = [g,h] ⊗ x^{m+n} + (g,h) m δ_{m+n,0} k`.
#[derive(Clone, Debug)]
pub struct Affine {
    name: String,
    finite: FiniteLieAlgebra,
}

impl Affine {
    pub fn new(name: impl Into<String>, finite: FiniteLieAlgebra) -> Affine {
        Affine { name: name.into(), finite }
    }

    pub fn sl2() -> Affine {
        Affine::new("affine-sl2", FiniteLieAlgebra::sl2())
    }

    pub fn finite(&self) -> &FiniteLieAlgebra {
        &self.finite
    }

    /// `x_i ⊗ x^n`.
    pub fn elem(i: usize, n: i32) -> BasisIndex {
        BasisIndex::new(2 * n, i as u16, 0, false)
    }

    pub fn k(&self) -> BasisIndex {
        BasisIndex::new(0, self.finite.dim() as u16, 0, true)
    }

    pub fn algebra(self) -> AlgebraRef {
        Algebra::new(self)
    }

    /// `(Σ A_j h_+ ⊗ x^j, Σ B_j h_- ⊗ x^j)`: one fixed finite element per side.
    pub fn generators(
        alg: &AlgebraRef,
        support: &Support,
        plus: &[(usize, Rational)],
        minus: &[(usize, Rational)],
        trunc: Truncation,
    ) -> (LieSeries<Rational>, LieSeries<Rational>) {
        let side = |labels: Vec<(VarLabel, i32)>, h: &[(usize, Rational)]| {
            let mut s = LieSeries::zero(alg, trunc);
            for (v, d) in labels {
                for (i, c) in h {
                    s.add_term(Affine::elem(*i, d / 2), Monomial::var(v), c.clone());
                }
            }
            s
        };
        (side(support.plus_labels(), plus), side(support.minus_labels(), minus))
    }
}

impl LieAlgebraPlugin for Affine {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn scalar_kind(&self) -> ScalarKind {
        ScalarKind::Rational
    }

    fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> BasisCombination {
        if x.is_central() || y.is_central() {
            return Vec::new();
        }
        let (i, j) = (x.tag() as usize, y.tag() as usize);
        let (m, n) = (x.degree() / 2, y.degree() / 2);
        let mut out: BasisCombination =
            self.finite.bracket(i, j).iter().map(|(k, c)| (Affine::elem(*k, m + n), c.clone())).collect();
        if m + n == 0 {
            let central = self.finite.form(i, j) * &Rational::from(m);
            if !central.is_zero() {
                out.push((self.k(), central));
            }
        }
        out
    }

    fn basis_name(&self, x: BasisIndex) -> String {
        if x.is_central() {
            "k".into()
        } else {
            format!("{}@{}", self.finite.names[x.tag() as usize], x.degree() / 2)
        }
    }

    fn parse_basis(&self, s: &str) -> Option<BasisIndex> {
        if s == "k" {
            return Some(self.k());
        }
        let (name, _) = s.split_once('@')?;
        let i = self.finite.index_of(name)?;
        let d = parse_indexed(s, &format!("{name}@"))?;
        (d % 2 == 0).then(|| Affine::elem(i, d / 2))
    }

    fn basis_window(&self, max_doubled_degree: i32) -> Vec<BasisIndex> {
        let w = max_doubled_degree / 2;
        let mut out: Vec<BasisIndex> =
            (-w..=w).flat_map(|n| (0..self.finite.dim()).map(move |i| Affine::elem(i, n))).collect();
        out.push(self.k());
        out
    }

    fn extra_checks(&self) -> Vec<String> {
        self.finite.check()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: usize = 0;
    const H: usize = 1;
    const F: usize = 2;

    #[test]
    fn sl2_relations() {
        let a = Affine::sl2();
        assert_eq!(
            a.bracket_basis(Affine::elem(E, 1), Affine::elem(F, -1)),
            vec![(Affine::elem(H, 0), Rational::one()), (a.k(), Rational::one())]
        );
        assert_eq!(a.bracket_basis(Affine::elem(H, 2), Affine::elem(H, -2)), vec![(a.k(), Rational::from(4))]);
        assert!(a.bracket_basis(Affine::elem(E, 3), a.k()).is_empty());
        assert_eq!(
            a.bracket_basis(Affine::elem(F, 0), Affine::elem(H, 2)),
            vec![(Affine::elem(F, 2), Rational::from(2))]
        );
    }

    #[test]
    fn preset_passes_finite_checks() {
        assert!(FiniteLieAlgebra::sl2().check().is_empty());
    }

    #[test]
    fn config_round_trip() {
        let sl2 = FiniteLieAlgebra::sl2();
        let text = serde_json::to_string(&sl2.to_config()).unwrap();
        let back: FiniteAlgebraConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(FiniteLieAlgebra::from_config(&back).unwrap(), sl2);
    }

    #[test]
    fn rejects_bad_shapes() {
        let mut cfg = sl2_config();
        cfg.form.pop();
        assert!(FiniteLieAlgebra::from_config(&cfg).is_err());
        let mut cfg = sl2_config();
        cfg.brackets[0].result.insert("z".into(), Rational::one());
        assert!(FiniteLieAlgebra::from_config(&cfg).is_err());
    }

    #[test]
    fn names_round_trip() {
        let a = Affine::sl2();
        for x in a.basis_window(6) {
            assert_eq!(a.parse_basis(&a.basis_name(x)), Some(x));
        }
        assert_eq!(a.basis_name(Affine::elem(E, -2)), "e@-2");
    }
}
