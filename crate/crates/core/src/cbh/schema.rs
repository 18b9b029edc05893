//! The CBH series as an evaluable list of left-nested bracket patterns.
//!
//! Each homogeneous piece of `log(e^a e^b)` is a Lie polynomial, so the Dynkin
//! map (word `x1...xn` with coefficient `c` goes to `(c/n)[x1,[x2,...,xn]]`)
//! recovers a bracket expression for it. Patterns are not reduced to a free
//! Lie basis; evaluation is linear, so redundancy only costs time.

use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::assoc::{assoc_log_of_product, expand_pattern, AssocPoly};
use crate::exactnum::Rational;

/// Largest degree the command-line front end builds unless told otherwise.
pub const DEFAULT_MAX_SCHEMA_DEGREE: usize = 12;

/// `coeff * [x1,[x2,[...,xn]...]]` with `pattern = "x1 x2 ... xn"` over `{a, b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub pattern: String,
    pub coeff: Rational,
}

impl BracketTerm {
    pub fn degree(&self) -> usize {
        self.pattern.len()
    }

    /// Number of `a` letters, i.e. the degree in the first argument.
    pub fn a_degree(&self) -> usize {
        self.pattern.bytes().filter(|&l| l == b'a').count()
    }

    /// The commutator expansion of this term.
    pub fn expand(&self, max_degree: usize) -> AssocPoly {
        expand_pattern(self.pattern.as_bytes(), max_degree).scale(&self.coeff)
    }
}

/// Dynkin projection of a homogeneous degree-`n` Lie element.
pub fn dynkin_project(p: &AssocPoly) -> Vec<BracketTerm> {
    let mut out: Vec<BracketTerm> = p
        .terms()
        .filter(|(w, _)| !w.is_empty())
        .map(|(w, c)| BracketTerm {
            pattern: String::from_utf8(w.clone()).expect("ascii word"),
            coeff: c * &Rational::new(1, w.len() as i64),
        })
        .collect();
    out.sort_by(|x, y| x.pattern.cmp(&y.pattern));
    out
}

/// The CBH series through some degree, one list of bracket terms per degree.
#[derive(Clone, Debug, PartialEq)]
pub struct CbhSchema {
    degrees: Vec<Arc<[BracketTerm]>>,
}

impl CbhSchema {
    pub fn max_degree(&self) -> usize {
        self.degrees.len()
    }

    /// Terms of total degree `n` (1-based).
    pub fn degree(&self, n: usize) -> &[BracketTerm] {
        &self.degrees[n - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[BracketTerm])> {
        self.degrees.iter().enumerate().map(|(i, t)| (i + 1, &t[..]))
    }

    /// Terms with exactly `j` letters `a` and `k` letters `b`.
    pub fn component(&self, j: usize, k: usize) -> Vec<BracketTerm> {
        let n = j + k;
        if n == 0 || n > self.max_degree() {
            return Vec::new();
        }
        self.degree(n).iter().filter(|t| t.a_degree() == j).cloned().collect()
    }

    /// Re-expands the degree-`n` terms into the free associative algebra.
    pub fn expand_degree(&self, n: usize) -> AssocPoly {
        self.degree(n).iter().fold(AssocPoly::zero(n), |acc, t| acc.add(&t.expand(n)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let degrees: Vec<serde_json::Value> =
            self.iter().map(|(n, terms)| serde_json::json!({ "degree": n, "terms": terms })).collect();
        serde_json::json!({ "max_degree": self.max_degree(), "degrees": degrees })
    }
}

/// Patterns ending in a repeated letter vanish in every Lie algebra.
fn trivially_zero(pattern: &str) -> bool {
    let b = pattern.as_bytes();
    b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2]
}

fn build_degrees(from: usize, to: usize) -> Vec<Arc<[BracketTerm]>> {
    let log = assoc_log_of_product(to);
    (from..=to)
        .map(|n| {
            let terms: Vec<BracketTerm> =
                dynkin_project(&log.homogeneous(n)).into_iter().filter(|t| !trivially_zero(&t.pattern)).collect();
            Arc::from(terms)
        })
        .collect()
}

fn cache() -> &'static RwLock<Vec<Arc<[BracketTerm]>>> {
    static CACHE: OnceLock<RwLock<Vec<Arc<[BracketTerm]>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// The CBH schema through degree `n`, memoized across calls.
pub fn cbh_schema(n: usize) -> CbhSchema {
    assert!(n >= 1, "schema degree must be positive");
    {
        let read = cache().read().expect("schema cache poisoned");
        if read.len() >= n {
            return CbhSchema { degrees: read[..n].to_vec() };
        }
    }
    let mut write = cache().write().expect("schema cache poisoned");
    if write.len() < n {
        let have = write.len();
        let fresh = build_degrees(have + 1, n);
        write.extend(fresh);
    }
    CbhSchema { degrees: write[..n].to_vec() }
}
