//! PBW normal form in `U(q)`.
//!
//! Letters are ordered negative degree first, then positive, then the
//! noncentral degree-zero part, then central elements; ties break by degree
//! and tag. An odd letter never repeats: `x x = ½ [x, x]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use smallvec::SmallVec;

use super::uelement::{accumulate, UElement, UWord};
use crate::exactnum::{Rational, Scalar};
use crate::liecore::{AlgebraRef, BasisIndex};

type NormalForm = Arc<Vec<(UWord, Rational)>>;

fn rank(x: BasisIndex) -> (u8, i32, u16) {
    let class = if x.is_central() {
        3
    } else if x.degree() < 0 {
        0
    } else if x.degree() > 0 {
        1
    } else {
        2
    };
    (class, x.degree(), x.tag())
}

fn needs_rewrite(x: BasisIndex, y: BasisIndex) -> bool {
    match rank(x).cmp(&rank(y)) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => x.is_odd(),
        std::cmp::Ordering::Less => false,
    }
}

/// Whether a word is already in normal order.
pub fn is_normal(w: &[BasisIndex]) -> bool {
    w.windows(2).all(|p| !needs_rewrite(p[0], p[1]))
}

fn splice(w: &[BasisIndex], pos: usize, mid: &[BasisIndex]) -> UWord {
    let mut out: UWord = SmallVec::with_capacity(w.len());
    out.extend_from_slice(&w[..pos]);
    out.extend_from_slice(mid);
    out.extend_from_slice(&w[pos + 2..]);
    out
}

/// Applies `x y = (-1)^{|x||y|} y x + [x, y]` once at position `pos` of `w`.
pub fn rewrite_word(alg: &AlgebraRef, w: &[BasisIndex], pos: usize) -> Vec<(UWord, Rational)> {
    let (x, y) = (w[pos], w[pos + 1]);
    let sign = if x.is_odd() && y.is_odd() { -Rational::one() } else { Rational::one() };
    let mut out = vec![(splice(w, pos, &[y, x]), sign)];
    for (z, c) in alg.bracket(x, y).iter() {
        out.push((splice(w, pos, &[*z]), c.clone()));
    }
    out
}

fn push(acc: &mut BTreeMap<UWord, Rational>, nf: &NormalForm, c: &Rational) {
    for (u, d) in nf.iter() {
        *acc.entry(u.clone()).or_insert_with(Rational::zero) += &(d * c);
    }
}

/// Memoized straightening of words into the PBW basis.
pub struct Straightener {
    algebra: AlgebraRef,
    memo: HashMap<UWord, NormalForm>,
}

impl Straightener {
    pub fn new(algebra: &AlgebraRef) -> Self {
        Straightener { algebra: algebra.clone(), memo: HashMap::new() }
    }

    /// Number of memoized words.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    pub fn normal_form(&mut self, w: &[BasisIndex]) -> NormalForm {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let nf = match w.windows(2).position(|p| needs_rewrite(p[0], p[1])) {
            None => Arc::new(vec![(SmallVec::from_slice(w), Rational::one())]),
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let mut acc: BTreeMap<UWord, Rational> = BTreeMap::new();
                if x == y {
                    let half = Rational::new(1, 2);
                    for (z, c) in self.algebra.bracket(x, x).iter() {
                        let nf = self.normal_form(&splice(w, i, &[*z]));
                        push(&mut acc, &nf, &(c * &half));
                    }
                } else {
                    for (u, c) in rewrite_word(&self.algebra, w, i) {
                        let nf = self.normal_form(&u);
                        push(&mut acc, &nf, &c);
                    }
                }
                Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            }
        };
        self.memo.insert(SmallVec::from_slice(w), nf.clone());
        nf
    }

    pub fn straighten<S: Scalar>(&mut self, x: &UElement<S>) -> UElement<S> {
        let mut out = BTreeMap::new();
        for ((m, w), s) in x.term_map() {
            for (u, c) in self.normal_form(w).iter() {
                accumulate(&mut out, (m.clone(), u.clone()), s.scale(c));
            }
        }
        UElement::from_map(x.algebra(), x.truncation(), out)
    }
}

/// Straightens with a fresh cache.
pub fn straighten<S: Scalar>(x: &UElement<S>) -> UElement<S> {
    Straightener::new(x.algebra()).straighten(x)
}

/// Applies one defining relation to the `term`-th term of `x` at `pos`,
/// leaving everything else alone. Used to audit that straightening does not
/// depend on the rewrite order.
pub fn rewrite_once<S: Scalar>(x: &UElement<S>, term: usize, pos: usize) -> UElement<S> {
    let mut out = x.term_map().clone();
    let Some(((m, w), s)) = x.term_map().iter().nth(term) else {
        return x.clone();
    };
    if pos + 1 >= w.len() {
        return x.clone();
    }
    let key = (m.clone(), w.clone());
    out.remove(&key);
    for (u, c) in rewrite_word(x.algebra(), w, pos) {
        accumulate(&mut out, (m.clone(), u), s.scale(&c));
    }
    UElement::from_map(x.algebra(), x.truncation(), out)
}
