//! Evaluation of the CBH schema on Lie series.

use std::collections::HashMap;

use super::series::{LieSeries, Truncation};
use crate::cbh::cbh_schema;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// `C(x, y) = log(e^x e^y)` through total order `n`.
///
/// Every term of `x` and `y` must have order at least one, so that only
/// schema degrees up to `n` can contribute.
pub fn cbh_eval<S: Scalar>(x: &LieSeries<S>, y: &LieSeries<S>, n: u32) -> Result<LieSeries<S>> {
    if !x.same_algebra(y) {
        return Err(Error::Usage("cbh_eval over different algebras".into()));
    }
    for (name, s) in [("first", x), ("second", y)] {
        if s.min_order() == Some(0) {
            return Err(Error::Convergence(format!(
                "{name} argument has a term of order zero; the CBH series does not terminate"
            )));
        }
    }
    let bound = x.truncation().min(y.truncation());
    let trunc = Truncation { total: bound.total.min(n), standard: bound.standard.min(n) };
    let mut out = LieSeries::zero(x.algebra(), trunc);
    if n == 0 {
        return Ok(out);
    }
    let x = x.with_truncation(trunc);
    let y = y.with_truncation(trunc);
    let orders = |s: &LieSeries<S>| s.min_order().unwrap_or(u32::MAX);
    let (ox, oy) = (orders(&x), orders(&y));

    let schema = cbh_schema(n as usize);
    let mut eval = NestedEval { x: &x, y: &y, trunc, memo: HashMap::new() };
    for (_, terms) in schema.iter() {
        for t in terms {
            let a = t.a_degree() as u64;
            let b = (t.degree() - t.a_degree()) as u64;
            // Lowest possible order of the nested bracket.
            if a * ox as u64 + b * oy as u64 > n as u64 {
                continue;
            }
            let v = eval.nested(t.pattern.as_bytes());
            if !v.is_zero() {
                out.add_assign(&v.scale(&t.coeff));
            }
        }
    }
    Ok(out)
}

/// Memoized left-nested brackets `[p1,[p2,[...]]]`, keyed by pattern suffix.
struct NestedEval<'a, S: Scalar> {
    x: &'a LieSeries<S>,
    y: &'a LieSeries<S>,
    trunc: Truncation,
    memo: HashMap<Vec<u8>, LieSeries<S>>,
}

impl<S: Scalar> NestedEval<'_, S> {
    fn letter(&self, l: u8) -> &LieSeries<S> {
        if l == b'a' {
            self.x
        } else {
            self.y
        }
    }

    fn nested(&mut self, pattern: &[u8]) -> LieSeries<S> {
        if pattern.len() == 1 {
            return self.letter(pattern[0]).clone();
        }
        if let Some(v) = self.memo.get(pattern) {
            return v.clone();
        }
        let inner = self.nested(&pattern[1..]);
        let v = if inner.is_zero() { inner } else { self.letter(pattern[0]).bracket_within(&inner, self.trunc) };
        self.memo.insert(pattern.to_vec(), v.clone());
        v
    }
}
