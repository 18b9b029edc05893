//! Truncated elements of `A ⊗ U(q)[[A, B]]`: sums of `scalar * monomial * word`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Scalar};
use crate::liecore::{AlgebraRef, BasisIndex, LieSeries, Monomial, Truncation};

/// A word in the enveloping algebra.
pub type UWord = SmallVec<[BasisIndex; 6]>;

/// Terms are keyed by monomial first so that the lowest-order discrepancies
/// sort first.
pub type UKey = (Monomial, UWord);

#[derive(Clone)]
pub struct UElement<S: Scalar> {
    algebra: AlgebraRef,
    trunc: Truncation,
    terms: BTreeMap<UKey, S>,
}

pub(crate) fn accumulate<S: Scalar>(map: &mut BTreeMap<UKey, S>, key: UKey, c: S) {
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

pub(crate) fn word_parity(w: &[BasisIndex]) -> u8 {
    w.iter().map(|x| x.parity()).sum::<u8>() % 2
}

impl<S: Scalar> UElement<S> {
    pub fn zero(algebra: &AlgebraRef, trunc: Truncation) -> Self {
        UElement { algebra: algebra.clone(), trunc, terms: BTreeMap::new() }
    }

    pub fn one(algebra: &AlgebraRef, trunc: Truncation) -> Self {
        let mut u = UElement::zero(algebra, trunc);
        u.add_term(Monomial::one(), UWord::new(), S::one());
        u
    }

    /// Embeds a Lie series as length-one words.
    pub fn from_series(x: &LieSeries<S>) -> Self {
        let mut u = UElement::zero(x.algebra(), x.truncation());
        for (b, m, c) in x.terms() {
            u.add_term(m.clone(), SmallVec::from_slice(&[*b]), c.clone());
        }
        u
    }

    pub(crate) fn from_map(algebra: &AlgebraRef, trunc: Truncation, terms: BTreeMap<UKey, S>) -> Self {
        UElement { algebra: algebra.clone(), trunc, terms }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn add_term(&mut self, m: Monomial, w: UWord, c: S) {
        if self.trunc.admits(m.orders()) {
            accumulate(&mut self.terms, (m, w), c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &UWord, &S)> {
        self.terms.iter().map(|((m, w), c)| (m, w, c))
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<UKey, S> {
        &self.terms
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

    pub fn coeff(&self, m: &Monomial, w: &[BasisIndex]) -> S {
        self.terms.get(&(m.clone(), SmallVec::from_slice(w))).cloned().unwrap_or_else(S::zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::Usage("enveloping-algebra elements over different algebras".into()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.trunc = self.trunc.min(other.trunc);
        out.terms.retain(|(m, _), _| out.trunc.admits(m.orders()));
        for ((m, w), c) in &other.terms {
            out.add_term(m.clone(), w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let neg = UElement {
            algebra: other.algebra.clone(),
            trunc: other.trunc,
            terms: other.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        };
        self.add(&neg)
    }

    pub fn scale(&self, r: &crate::exactnum::Rational) -> Self {
        let mut out = UElement::zero(&self.algebra, self.trunc);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.clone(), c.scale(r));
        }
        out
    }

    /// Product: words concatenate, monomials multiply, and the scalar of the
    /// right factor picks up a sign for each odd letter of the left word it
    /// passes.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let trunc = self.trunc.min(other.trunc);
        let mut out = BTreeMap::new();
        let rhs: Vec<_> = other.terms.iter().map(|(k, c)| (k, c, k.0.orders())).collect();
        for ((mx, wx), a) in &self.terms {
            let ox = mx.orders();
            let p = word_parity(wx);
            for ((my, wy), b, oy) in &rhs {
                if !trunc.admits(ox + *oy) {
                    continue;
                }
                let c = a.mul(&b.twisted_by(p));
                if c.is_zero() {
                    continue;
                }
                let mut w = wx.clone();
                w.extend_from_slice(wy);
                accumulate(&mut out, (mx.mul(my), w), c);
            }
        }
        Ok(UElement { algebra: self.algebra.clone(), trunc, terms: out })
    }

    /// `Σ x^k / k!` truncated; every term of `x` must have order at least one.
    pub fn exp(x: &LieSeries<S>) -> Result<Self> {
        if x.min_order() == Some(0) {
            return Err(Error::Convergence("exponential of a series with an order-zero term".into()));
        }
        let trunc = x.truncation();
        let base = UElement::from_series(x);
        let mut out = UElement::one(x.algebra(), trunc);
        let mut power = UElement::one(x.algebra(), trunc);
        for k in 1..=trunc.total {
            power = power.mul(&base)?;
            if power.is_zero() {
                break;
            }
            let inv = factorial(k as u64).inv().expect("factorial is nonzero");
            for ((m, w), c) in &power.terms {
                out.add_term(m.clone(), w.clone(), c.scale(&inv));
            }
        }
        Ok(out)
    }

    pub fn word_name(&self, w: &[BasisIndex]) -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.iter().map(|x| self.algebra.basis_name(*x)).collect::<Vec<_>>().join(" ")
        }
    }
}

impl<S: Scalar> PartialEq for UElement<S> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl<S: Scalar> fmt::Display for UElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((m, w), c)| format!("({c})*{m}*[{}]", self.word_name(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for UElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
