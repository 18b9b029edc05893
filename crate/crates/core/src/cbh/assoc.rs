//! Truncated noncommutative polynomials in two letters `a` and `b`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{factorial, Rational};

/// A word over `{a, b}`, stored as ASCII bytes.
pub type Word = Vec<u8>;

/// A noncommutative polynomial in `a`, `b` truncated at `max_degree`.
#[derive(Clone, PartialEq, Eq)]
pub struct AssocPoly {
    terms: BTreeMap<Word, Rational>,
    max_degree: usize,
}

impl AssocPoly {
    pub fn zero(max_degree: usize) -> Self {
        AssocPoly { terms: BTreeMap::new(), max_degree }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut p = AssocPoly::zero(max_degree);
        p.add_term(Vec::new(), &Rational::one());
        p
    }

    /// The single letter `a` or `b`.
    pub fn letter(l: u8, max_degree: usize) -> Self {
        assert!(l == b'a' || l == b'b', "letters are `a` and `b`");
        let mut p = AssocPoly::zero(max_degree);
        p.add_term(vec![l], &Rational::one());
        p
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
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

    pub fn coeff(&self, word: &str) -> Rational {
        self.terms.get(word.as_bytes()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, word: Word, c: &Rational) {
        use std::collections::btree_map::Entry;
        if word.len() > self.max_degree || c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, r: &Rational) -> AssocPoly {
        let mut out = AssocPoly::zero(self.max_degree);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * r));
        }
        out
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let max_degree = self.max_degree.min(other.max_degree);
        let mut out = AssocPoly::zero(max_degree);
        for (wx, cx) in &self.terms {
            for (wy, cy) in &other.terms {
                if wx.len() + wy.len() > max_degree {
                    continue;
                }
                let mut w = wx.clone();
                w.extend_from_slice(wy);
                out.add_term(w, &(cx * cy));
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// The part of exact degree `n`.
    pub fn homogeneous(&self, n: usize) -> AssocPoly {
        AssocPoly {
            terms: self.terms.iter().filter(|(w, _)| w.len() == n).map(|(w, c)| (w.clone(), c.clone())).collect(),
            max_degree: self.max_degree,
        }
    }

    /// Substitutes `a -> x`, `b -> y` letter by letter.
    pub fn substitute(&self, x: &AssocPoly, y: &AssocPoly) -> AssocPoly {
        let max_degree = self.max_degree.min(x.max_degree).min(y.max_degree);
        let mut out = AssocPoly::zero(max_degree);
        for (w, c) in &self.terms {
            let mut acc = AssocPoly::one(max_degree);
            for &l in w {
                acc = acc.mul(if l == b'a' { x } else { y });
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Truncated `exp(self)`; `self` must have no constant term.
    pub fn exp(&self) -> AssocPoly {
        debug_assert!(!self.terms.contains_key(&Vec::new()));
        let mut out = AssocPoly::one(self.max_degree);
        let mut power = AssocPoly::one(self.max_degree);
        for k in 1..=self.max_degree {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(&factorial(k as u64).inv().unwrap()));
        }
        out
    }

    /// Truncated `log(self)`; `self` must have constant term one.
    pub fn log(&self) -> AssocPoly {
        let u = self.sub(&AssocPoly::one(self.max_degree));
        debug_assert!(!u.terms.contains_key(&Vec::new()), "log needs constant term 1");
        let mut out = AssocPoly::zero(self.max_degree);
        let mut power = AssocPoly::one(self.max_degree);
        for k in 1..=self.max_degree {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Rational::new(sign, k as i64)));
        }
        out
    }
}

impl fmt::Display for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let w = if w.is_empty() { "1".to_string() } else { String::from_utf8_lossy(w).into_owned() };
                format!("({c}){w}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `log(e^a e^b)` in the free associative algebra, truncated at degree `n`.
pub fn assoc_log_of_product(n: usize) -> AssocPoly {
    assert!(n >= 1, "degree bound must be positive");
    let a = AssocPoly::letter(b'a', n);
    let b = AssocPoly::letter(b'b', n);
    a.exp().mul(&b.exp()).log()
}

/// Expands the left-nested bracket `[x1,[x2,[...,xn]...]]` into commutators.
pub fn expand_pattern(pattern: &[u8], max_degree: usize) -> AssocPoly {
    let (last, rest) = pattern.split_last().expect("empty bracket pattern");
    let mut acc = AssocPoly::letter(*last, max_degree);
    for &l in rest.iter().rev() {
        acc = AssocPoly::letter(l, max_degree).commutator(&acc);
    }
    acc
}
