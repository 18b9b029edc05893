//! Exterior-algebra scalars over the rationals.
//!
//! A [`GrassmannScalar`] is a finite rational combination of products of
//! anticommuting generators `a_r`. Generator labels are half-integers stored
//! doubled, so `a_{1/2}` has label `1` and `a_{-3/2}` has label `-3`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::Error;
use crate::util::half_int;

/// Strictly increasing list of doubled generator labels.
pub type GenSet = SmallVec<[i32; 4]>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GrassmannScalar {
    terms: BTreeMap<GenSet, Rational>,
}

/// Merges two strictly sorted generator sets. Returns `None` if a generator
/// repeats, otherwise the merged set and whether the reordering is odd.
fn merge_sets(x: &[i32], y: &[i32]) -> Option<(GenSet, bool)> {
    let mut out = GenSet::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => {
                out.push(x[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // y[j] jumps over the remaining x.len() - i generators of x
                if (x.len() - i) % 2 == 1 {
                    odd = !odd;
                }
                out.push(y[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    Some((out, odd))
}

impl GrassmannScalar {
    pub fn zero() -> Self {
        GrassmannScalar::default()
    }

    pub fn one() -> Self {
        GrassmannScalar::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut s = GrassmannScalar::zero();
        if !r.is_zero() {
            s.terms.insert(GenSet::new(), r);
        }
        s
    }

    /// The single generator `a_r` (doubled label).
    pub fn generator(label: i32) -> Self {
        let mut s = GrassmannScalar::zero();
        s.terms.insert(smallvec::smallvec![label], Rational::one());
        s
    }

    /// The product `a_{l1} a_{l2} ...` in the given order, canonicalized.
    pub fn product_of(labels: &[i32]) -> Self {
        labels.iter().fold(GrassmannScalar::one(), |acc, &l| acc.mul(&GrassmannScalar::generator(l)))
    }

    /// Builds a scalar from raw (generators, coefficient) pairs. Generator
    /// lists may be unsorted; they are canonicalized with the appropriate
    /// sign, and terms with a repeated generator vanish.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut out = GrassmannScalar::zero();
        for (gens, coeff) in terms {
            let monomial = GrassmannScalar::product_of(&gens);
            out.add_assign(&monomial.scale(&coeff));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenSet, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the canonical generator product `gens` (must be sorted).
    pub fn coeff(&self, gens: &[i32]) -> Rational {
        self.terms.get(&GenSet::from_slice(gens)).cloned().unwrap_or_else(Rational::zero)
    }

    /// The pure-rational part if there are no generators, else `None`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&GenSet::new()).cloned(),
            _ => None,
        }
    }

    /// `Some(p)` when every term has parity `p`; `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|g| (g.len() % 2) as u8);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn add_assign(&mut self, other: &GrassmannScalar) {
        for (g, c) in &other.terms {
            self.add_term(g.clone(), c);
        }
    }

    fn add_term(&mut self, gens: GenSet, c: &Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(gens) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &GrassmannScalar) -> GrassmannScalar {
        let mut out = GrassmannScalar::zero();
        for (gx, cx) in &self.terms {
            for (gy, cy) in &other.terms {
                if let Some((g, odd)) = merge_sets(gx, gy) {
                    let c = cx * cy;
                    let c = if odd { -c } else { c };
                    out.add_term(g, &c);
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> GrassmannScalar {
        if r.is_zero() {
            return GrassmannScalar::zero();
        }
        GrassmannScalar { terms: self.terms.iter().map(|(g, c)| (g.clone(), c * r)).collect() }
    }

    pub fn neg(&self) -> GrassmannScalar {
        GrassmannScalar { terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    /// The grading automorphism: odd terms change sign.
    pub fn parity_twist(&self) -> GrassmannScalar {
        GrassmannScalar {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), if g.len() % 2 == 1 { -c } else { c.clone() })).collect(),
        }
    }

    /// Re-canonicalizes; the identity on well-formed values.
    pub fn canonicalize(&self) -> GrassmannScalar {
        GrassmannScalar::from_terms(self.terms.iter().map(|(g, c)| (g.to_vec(), c.clone())))
    }

    fn check_invariants(&self) -> Result<(), Error> {
        for (g, c) in &self.terms {
            if c.is_zero() || g.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!("non-canonical grassmann term {g:?}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GrassmannScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let gens: Vec<String> = g.iter().map(|&l| format!("a({})", half_int(l))).collect();
            if g.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", gens.join("*"))?;
            } else {
                write!(f, "{mag}*{}", gens.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GrassmannScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    generators: Vec<i32>,
    coeff: Rational,
}

impl Serialize for GrassmannScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> =
            self.terms.iter().map(|(g, c)| WireTerm { generators: g.to_vec(), coeff: c.clone() }).collect();
        wire.serialize(serializer)
    }
}

/// A bare rational is accepted as an even constant.
#[derive(Deserialize)]
#[serde(untagged)]
enum Wire {
    Terms(Vec<WireTerm>),
    Constant(Rational),
}

impl<'de> Deserialize<'de> for GrassmannScalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = match Wire::deserialize(deserializer)? {
            Wire::Terms(wire) => GrassmannScalar::from_terms(wire.into_iter().map(|w| (w.generators, w.coeff))),
            Wire::Constant(r) => GrassmannScalar::from_rational(r),
        };
        s.check_invariants().map_err(serde::de::Error::custom)?;
        Ok(s)
    }
}
