use std::fmt;

/// A basis element of a graded Lie (super)algebra.
///
/// `degree` is doubled so half-integer gradings stay integral. `tag`
/// distinguishes basis elements of equal degree; its meaning belongs to the
/// owning plugin. Ordering is by degree, then tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    degree: i32,
    tag: u16,
    parity: u8,
    central: bool,
}

impl BasisIndex {
    pub const fn new(degree: i32, tag: u16, parity: u8, central: bool) -> BasisIndex {
        BasisIndex { degree, tag, parity, central }
    }

    /// Doubled degree.
    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn tag(&self) -> u16 {
        self.tag
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_central(&self) -> bool {
        self.central
    }

    pub fn is_odd(&self) -> bool {
        self.parity == 1
    }
}

impl fmt::Debug for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}@{}", self.tag, crate::util::half_int(self.degree))
    }
}

/// Graded pieces used by projections and splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Minus,
    Zero,
    Plus,
    ZeroPlus,
}

impl Part {
    pub fn contains(self, degree: i32) -> bool {
        match self {
            Part::Minus => degree < 0,
            Part::Zero => degree == 0,
            Part::Plus => degree > 0,
            Part::ZeroPlus => degree >= 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::Minus => "minus",
            Part::Zero => "zero",
            Part::Plus => "plus",
            Part::ZeroPlus => "zero_plus",
        }
    }

    pub fn parse(s: &str) -> Option<Part> {
        match s {
            "minus" => Some(Part::Minus),
            "zero" => Some(Part::Zero),
            "plus" => Some(Part::Plus),
            "zero_plus" => Some(Part::ZeroPlus),
            _ => None,
        }
    }

    /// True when no degree lies in both parts.
    pub fn disjoint(self, other: Part) -> bool {
        [-1, 0, 1].iter().all(|&d| !(self.contains(d) && other.contains(d)))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
