//! Commuting formal variables and their monomials.
//!
//! Plus-type variables `A_j` (j > 0) and minus-type variables `B_j` (j < 0)
//! carry half-integer indices stored doubled. Auxiliary variables `s`
//! (minus polarity) and `t` (plus polarity) carry index 0 and only serve to
//! track bidegrees.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::Error;
use crate::util::{half_int, parse_half_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    Standard,
    Auxiliary,
}

/// Plus sorts before minus so that `A` variables print first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarLabel {
    kind: LabelKind,
    polarity: Polarity,
    index: i32,
}

impl VarLabel {
    /// `A_j` with `j = doubled / 2 > 0`.
    pub fn a(doubled: i32) -> VarLabel {
        assert!(doubled > 0, "A variables need a positive index");
        VarLabel { kind: LabelKind::Standard, polarity: Polarity::Plus, index: doubled }
    }

    /// `B_j` with `j = doubled / 2 < 0`.
    pub fn b(doubled: i32) -> VarLabel {
        assert!(doubled < 0, "B variables need a negative index");
        VarLabel { kind: LabelKind::Standard, polarity: Polarity::Minus, index: doubled }
    }

    /// Auxiliary minus-type variable (`s`).
    pub fn aux_minus() -> VarLabel {
        VarLabel { kind: LabelKind::Auxiliary, polarity: Polarity::Minus, index: 0 }
    }

    /// Auxiliary plus-type variable (`t`).
    pub fn aux_plus() -> VarLabel {
        VarLabel { kind: LabelKind::Auxiliary, polarity: Polarity::Plus, index: 0 }
    }

    pub fn kind(&self) -> LabelKind {
        self.kind
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// Doubled index; zero for auxiliary labels.
    pub fn index(&self) -> i32 {
        self.index
    }

    pub fn is_auxiliary(&self) -> bool {
        self.kind == LabelKind::Auxiliary
    }

    pub fn name(&self) -> String {
        match (self.kind, self.polarity) {
            (LabelKind::Auxiliary, Polarity::Minus) => "s".to_string(),
            (LabelKind::Auxiliary, Polarity::Plus) => "t".to_string(),
            (LabelKind::Standard, Polarity::Plus) => format!("A_{}", half_int(self.index)),
            (LabelKind::Standard, Polarity::Minus) => format!("B_{}", half_int(self.index)),
        }
    }

    pub fn parse(s: &str) -> Result<VarLabel, Error> {
        let bad = || Error::Parse(format!("invalid variable `{s}`"));
        match s {
            "s" => return Ok(VarLabel::aux_minus()),
            "t" => return Ok(VarLabel::aux_plus()),
            _ => {}
        }
        let (head, idx) = s.split_once('_').ok_or_else(bad)?;
        let idx = parse_half_int(idx).ok_or_else(bad)?;
        match head {
            "A" if idx > 0 => Ok(VarLabel::a(idx)),
            "B" if idx < 0 => Ok(VarLabel::b(idx)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for VarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A commutative monomial: sorted `(label, exponent)` pairs, exponents > 0.
///
/// Ordered by total order first, then lexicographically on the factors.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial {
    total: u32,
    factors: SmallVec<[(VarLabel, u16); 4]>,
}

/// Order statistics of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Orders {
    pub total: u32,
    pub standard: u32,
    pub minus: u32,
    pub plus: u32,
}

impl std::ops::Add for Orders {
    type Output = Orders;
    fn add(self, o: Orders) -> Orders {
        Orders {
            total: self.total + o.total,
            standard: self.standard + o.standard,
            minus: self.minus + o.minus,
            plus: self.plus + o.plus,
        }
    }
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(l: VarLabel) -> Monomial {
        Monomial::power(l, 1)
    }

    pub fn power(l: VarLabel, e: u16) -> Monomial {
        let mut m = Monomial::one();
        if e > 0 {
            m.factors.push((l, e));
            m.total = e as u32;
        }
        m
    }

    /// Product of the given labels (repeats allowed).
    pub fn from_labels<I: IntoIterator<Item = VarLabel>>(labels: I) -> Monomial {
        labels.into_iter().fold(Monomial::one(), |m, l| m.mul(&Monomial::var(l)))
    }

    pub fn factors(&self) -> &[(VarLabel, u16)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, l: VarLabel) -> u16 {
        self.factors.iter().find(|(x, _)| *x == l).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (x, y) = (&self.factors, &other.factors);
        let mut out = SmallVec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                Ordering::Less => {
                    out.push(x[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(y[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((x[i].0, x[i].1 + y[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        Monomial { total: self.total + other.total, factors: out }
    }

    pub fn orders(&self) -> Orders {
        let mut o = Orders::default();
        for (l, e) in &self.factors {
            let e = *e as u32;
            o.total += e;
            if !l.is_auxiliary() {
                o.standard += e;
            }
            match l.polarity {
                Polarity::Minus => o.minus += e,
                Polarity::Plus => o.plus += e,
            }
        }
        o
    }

    pub fn total_order(&self) -> u32 {
        self.total
    }

    /// (order in minus-type variables, order in plus-type variables).
    pub fn bidegree(&self) -> (u32, u32) {
        let o = self.orders();
        (o.minus, o.plus)
    }

    pub fn auxiliary_order(&self) -> u32 {
        let o = self.orders();
        o.total - o.standard
    }

    /// Drops every auxiliary factor (substituting 1 for `s` and `t`).
    pub fn erase_auxiliary(&self) -> Monomial {
        Monomial::from_factors(self.factors.iter().copied().filter(|(l, _)| !l.is_auxiliary()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.factors.iter().map(|(l, e)| (l.name(), serde_json::Value::from(*e))).collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Monomial, Error> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("monomial must be an object".into()))?;
        let mut exps: BTreeMap<VarLabel, u16> = BTreeMap::new();
        for (name, e) in obj {
            let l = VarLabel::parse(name)?;
            let e = e
                .as_u64()
                .and_then(|e| u16::try_from(e).ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent for {name}")))?;
            *exps.entry(l).or_default() += e;
        }
        Ok(Monomial::from_factors(exps.into_iter().filter(|(_, e)| *e > 0)))
    }

    /// Builds from already sorted, positive-exponent factors.
    fn from_factors<I: IntoIterator<Item = (VarLabel, u16)>>(it: I) -> Monomial {
        let factors: SmallVec<[(VarLabel, u16); 4]> = it.into_iter().collect();
        let total = factors.iter().map(|(_, e)| *e as u32).sum();
        Monomial { total, factors }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(l, e)| if *e == 1 { l.name() } else { format!("{}^{e}", l.name()) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
