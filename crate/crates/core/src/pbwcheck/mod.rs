//! Independent check of exponential identities in the truncated enveloping
//! algebra: expand both sides as products of exponential series, straighten
//! into the PBW basis and compare coefficient by coefficient.

mod straighten;
mod uelement;

pub use straighten::{is_normal, rewrite_once, rewrite_word, straighten, Straightener};
pub use uelement::{UElement, UKey, UWord};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::liecore::{LieSeries, Monomial, Truncation};

/// Mismatches listed in a report are capped at this many.
pub const MAX_REPORTED_MISMATCHES: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub word: Vec<String>,
    pub monomial: Monomial,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationStats {
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub normal_forms: usize,
    pub mismatch_count: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub ok: bool,
    pub order: u32,
    /// Sorted by monomial, so the first entry is a lowest-order discrepancy.
    pub mismatches: Vec<Mismatch>,
    pub stats: VerificationStats,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "order": self.order,
            "mismatches": self.mismatches.iter().map(|m| json!({
                "word": m.word,
                "monomial": m.monomial.to_json(),
                "lhs": m.lhs,
                "rhs": m.rhs,
            })).collect::<Vec<_>>(),
            "stats": {
                "lhs_terms": self.stats.lhs_terms,
                "rhs_terms": self.stats.rhs_terms,
                "normal_forms": self.stats.normal_forms,
                "mismatch_count": self.stats.mismatch_count,
            },
        })
    }
}

fn product_of_exps<S: Scalar>(factors: &[&LieSeries<S>], one: UElement<S>) -> Result<UElement<S>> {
    factors.iter().try_fold(one, |acc, f| acc.mul(&UElement::exp(f)?))
}

/// Checks `Π exp(lhs_i) = Π exp(rhs_j)` through order `n`.
///
/// Every factor must be computed to at least order `n`; asking for more is a
/// usage error rather than a mismatch.
pub fn verify_products<S: Scalar>(lhs: &[&LieSeries<S>], rhs: &[&LieSeries<S>], n: u32) -> Result<VerificationReport> {
    let Some(first) = lhs.iter().chain(rhs).next() else {
        return Err(Error::Usage("nothing to verify".into()));
    };
    let alg = first.algebra().clone();
    let trunc = Truncation::order(n);
    let cut = |fs: &[&LieSeries<S>]| -> Result<Vec<LieSeries<S>>> {
        fs.iter()
            .map(|f| {
                if !f.same_algebra(first) {
                    return Err(Error::Usage("verification factors belong to different algebras".into()));
                }
                let t = f.truncation();
                if t.standard < n || t.total < n {
                    return Err(Error::Usage(format!(
                        "cannot verify to order {n}: a factor is only known to order {}",
                        t.standard.min(t.total)
                    )));
                }
                Ok(f.with_truncation(trunc))
            })
            .collect()
    };
    let lhs = cut(lhs)?;
    let rhs = cut(rhs)?;

    let one = UElement::one(&alg, trunc);
    let mut st = Straightener::new(&alg);
    let l = st.straighten(&product_of_exps(&lhs.iter().collect::<Vec<_>>(), one.clone())?);
    let r = st.straighten(&product_of_exps(&rhs.iter().collect::<Vec<_>>(), one)?);

    let mut keys: Vec<&UKey> = l.term_map().keys().chain(r.term_map().keys()).collect();
    keys.sort();
    keys.dedup();
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (m, w) in keys {
        let (a, b) = (l.coeff(m, w), r.coeff(m, w));
        if a != b {
            count += 1;
            if mismatches.len() < MAX_REPORTED_MISMATCHES {
                mismatches.push(Mismatch {
                    word: w.iter().map(|x| alg.basis_name(*x)).collect(),
                    monomial: m.clone(),
                    lhs: serde_json::to_value(&a)?,
                    rhs: serde_json::to_value(&b)?,
                });
            }
        }
    }
    Ok(VerificationReport {
        ok: count == 0,
        order: n,
        mismatches,
        stats: VerificationStats {
            lhs_terms: l.len(),
            rhs_terms: r.len(),
            normal_forms: st.cached(),
            mismatch_count: count,
        },
    })
}

/// Checks `e^{g⁺} e^{g⁻} = e^{Ψ⁻} e^{Ψ⁺} e^{Ψ⁰}` through order `n`.
pub fn verify_triple<S: Scalar>(
    gp: &LieSeries<S>,
    gm: &LieSeries<S>,
    psi_minus: &LieSeries<S>,
    psi_plus: &LieSeries<S>,
    psi_zero: &LieSeries<S>,
    n: u32,
) -> Result<VerificationReport> {
    verify_products(&[gp, gm], &[psi_minus, psi_plus, psi_zero], n)
}

#[cfg(test)]
mod tests;
