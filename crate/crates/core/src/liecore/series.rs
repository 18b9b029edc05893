//! Sparse formal Lie series: finite sums of `scalar * monomial * basis`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::basis::{BasisIndex, Part};
use super::label::{Monomial, Orders, VarLabel};
use super::plugin::AlgebraRef;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

/// Which monomials a series keeps.
///
/// `total` bounds the full order, `standard` the order in `A`/`B` variables
/// only. Without auxiliary labels the two coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub total: u32,
    pub standard: u32,
}

impl Truncation {
    pub fn order(n: u32) -> Truncation {
        Truncation { total: n, standard: n }
    }

    pub fn admits(&self, o: Orders) -> bool {
        o.total <= self.total && o.standard <= self.standard
    }

    pub fn min(self, other: Truncation) -> Truncation {
        Truncation { total: self.total.min(other.total), standard: self.standard.min(other.standard) }
    }
}

pub type TermKey = (BasisIndex, Monomial);

#[derive(Clone)]
pub struct LieSeries<S: Scalar> {
    algebra: AlgebraRef,
    trunc: Truncation,
    terms: BTreeMap<TermKey, S>,
}

fn accumulate<S: Scalar>(map: &mut BTreeMap<TermKey, S>, key: TermKey, c: S) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl<S: Scalar> LieSeries<S> {
    pub fn zero(algebra: &AlgebraRef, trunc: Truncation) -> Self {
        assert_eq!(algebra.scalar_kind(), S::KIND, "scalar ring does not match the algebra {}", algebra.name());
        LieSeries { algebra: algebra.clone(), trunc, terms: BTreeMap::new() }
    }

    /// The single term `c * m * x` (zero if it exceeds the truncation).
    pub fn term(algebra: &AlgebraRef, trunc: Truncation, x: BasisIndex, m: Monomial, c: S) -> Self {
        let mut s = LieSeries::zero(algebra, trunc);
        s.add_term(x, m, c);
        s
    }

    pub fn from_terms<I>(algebra: &AlgebraRef, trunc: Truncation, terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisIndex, Monomial, S)>,
    {
        let mut s = LieSeries::zero(algebra, trunc);
        for (x, m, c) in terms {
            s.add_term(x, m, c);
        }
        s
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Monomial, &S)> {
        self.terms.iter().map(|((x, m), c)| (x, m, c))
    }

    pub fn coeff(&self, x: BasisIndex, m: &Monomial) -> S {
        self.terms.get(&(x, m.clone())).cloned().unwrap_or_else(S::zero)
    }

    /// Smallest monomial total order, `None` for the zero series.
    pub fn min_order(&self) -> Option<u32> {
        self.terms.keys().map(|(_, m)| m.total_order()).min()
    }

    pub fn add_term(&mut self, x: BasisIndex, m: Monomial, c: S) {
        if !self.trunc.admits(m.orders()) {
            return;
        }
        accumulate(&mut self.terms, (x, m), c);
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "series over different algebras ({} vs {})",
                self.algebra.name(),
                other.algebra.name()
            )))
        }
    }

    /// Sum, truncated at the smaller of the two truncations.
    ///
    /// # Panics
    /// If the operands belong to different algebra handles.
    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other).expect("incompatible series");
        let mut out = self.with_truncation(self.trunc.min(other.trunc));
        for ((x, m), c) in &other.terms {
            out.add_term(*x, m.clone(), c.clone());
        }
        out
    }

    /// Difference; panics like [`LieSeries::add`].
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.check_compatible(other).expect("incompatible series");
        for ((x, m), c) in &other.terms {
            self.add_term(*x, m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        LieSeries { algebra: self.algebra.clone(), trunc: self.trunc, terms }
    }

    fn filtered(&self, keep: impl Fn(&BasisIndex, &Monomial) -> bool) -> Self {
        let terms = self.terms.iter().filter(|((x, m), _)| keep(x, m)).map(|(k, c)| (k.clone(), c.clone())).collect();
        LieSeries { algebra: self.algebra.clone(), trunc: self.trunc, terms }
    }

    /// Keeps the terms whose basis degree lies in `part`.
    pub fn project(&self, part: Part) -> Self {
        self.filtered(|x, _| part.contains(x.degree()))
    }

    /// Terms on central basis elements.
    pub fn central_part(&self) -> Self {
        self.filtered(|x, _| x.is_central())
    }

    pub fn noncentral_part(&self) -> Self {
        self.filtered(|x, _| !x.is_central())
    }

    /// Terms of exact monomial total order `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        self.filtered(|_, m| m.total_order() == d)
    }

    /// Terms of monomial total order at most `d`.
    pub fn up_to_order(&self, d: u32) -> Self {
        self.filtered(|_, m| m.total_order() <= d)
    }

    /// Terms with the given (minus, plus) bidegree.
    pub fn bidegree_component(&self, minus: u32, plus: u32) -> Self {
        self.filtered(|_, m| m.bidegree() == (minus, plus))
    }

    /// Re-truncates; terms beyond the new bound are dropped.
    pub fn with_truncation(&self, trunc: Truncation) -> Self {
        let mut out = self.filtered(|_, m| trunc.admits(m.orders()));
        out.trunc = trunc;
        out
    }

    /// Applies `f` to every monomial, merging terms that collide.
    pub fn map_monomials(&self, trunc: Truncation, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut out = LieSeries::zero(&self.algebra, trunc);
        for ((x, m), c) in &self.terms {
            out.add_term(*x, f(m), c.clone());
        }
        out
    }

    /// Multiplies every monomial by the variable `l`.
    pub fn attach(&self, l: VarLabel, trunc: Truncation) -> Self {
        let v = Monomial::var(l);
        self.map_monomials(trunc, |m| m.mul(&v))
    }

    /// Sets every auxiliary variable to one. The result is truncated at the
    /// standard order of `self`.
    pub fn erase_auxiliary(&self) -> Self {
        let n = self.trunc.standard;
        self.map_monomials(Truncation::order(n), |m| m.erase_auxiliary())
    }

    /// Checks that every coefficient is homogeneous of the parity of its basis
    /// element, i.e. that the series lies in the Grassmann envelope.
    pub fn check_parity(&self) -> Result<()> {
        for ((x, m), c) in &self.terms {
            if c.parity() != Some(x.parity()) {
                return Err(Error::Domain(format!(
                    "coefficient {c} of {} at {m} does not have parity {}",
                    self.algebra.basis_name(*x),
                    x.parity()
                )));
            }
        }
        Ok(())
    }

    /// The bracket, extended bilinearly with the envelope sign
    /// `[a u, b v] = (-1)^{|b||u|} ab [u, v]`. The result is truncated at the
    /// smaller truncation of the two operands.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let trunc = self.trunc.min(other.trunc);
        Ok(self.bracket_within(other, trunc))
    }

    pub(crate) fn bracket_within(&self, other: &Self, trunc: Truncation) -> Self {
        let mut out: BTreeMap<TermKey, S> = BTreeMap::new();
        let rhs: Vec<(&TermKey, &S, Orders)> = other.terms.iter().map(|(k, c)| (k, c, k.1.orders())).collect();
        for ((u, mu), a) in &self.terms {
            let ou = mu.orders();
            if !trunc.admits(ou) {
                continue;
            }
            for ((v, mv), b, ov) in &rhs {
                if !trunc.admits(ou + *ov) {
                    continue;
                }
                let table = self.algebra.bracket(*u, *v);
                if table.is_empty() {
                    continue;
                }
                let coeff = a.mul(&b.twisted_by(u.parity()));
                if coeff.is_zero() {
                    continue;
                }
                let m = mu.mul(mv);
                for (w, r) in table.iter() {
                    accumulate(&mut out, (*w, m.clone()), coeff.scale(r));
                }
            }
        }
        LieSeries { algebra: self.algebra.clone(), trunc, terms: out }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((x, m), c)| {
                json!({
                    "basis": self.algebra.basis_name(*x),
                    "monomial": m.to_json(),
                    "coeff": serde_json::to_value(c).expect("scalar serializes"),
                })
            })
            .collect();
        json!({
            "order": self.trunc.standard,
            "total_order": self.trunc.total,
            "terms": terms,
        })
    }

    pub fn from_json(algebra: &AlgebraRef, v: &Value) -> Result<Self> {
        let get_u32 = |k: &str| v.get(k).and_then(Value::as_u64).and_then(|n| u32::try_from(n).ok());
        let standard = get_u32("order").ok_or_else(|| Error::Parse("series needs `order`".into()))?;
        let total = get_u32("total_order").unwrap_or(standard);
        let mut out = LieSeries::zero(algebra, Truncation { total, standard });
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("series needs a `terms` list".into()))?;
        for t in terms {
            let name =
                t.get("basis").and_then(Value::as_str).ok_or_else(|| Error::Parse("term needs `basis`".into()))?;
            let x = algebra.parse_basis(name).ok_or_else(|| Error::Parse(format!("unknown basis element `{name}`")))?;
            let m = Monomial::from_json(t.get("monomial").unwrap_or(&Value::Null))?;
            let c: S = serde_json::from_value(t.get("coeff").cloned().unwrap_or(Value::Null))?;
            if !out.trunc.admits(m.orders()) {
                return Err(Error::Parse(format!("term at {m} exceeds the stated order")));
            }
            out.add_term(x, m, c);
        }
        Ok(out)
    }

    /// One `(basis, monomial, coeff)` row per term, sorted by basis degree and
    /// then monomial.
    pub fn rows(&self) -> Vec<[String; 3]> {
        self.terms.iter().map(|((x, m), c)| [self.algebra.basis_name(*x), m.to_string(), c.to_string()]).collect()
    }
}

impl<S: Scalar> PartialEq for LieSeries<S> {
    /// Equal terms over the same algebra handle; truncation is not compared.
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl<S: Scalar> fmt::Display for LieSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.rows().into_iter().map(|[x, m, c]| format!("({c})*{m}*{x}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for LieSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
