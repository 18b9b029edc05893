//! Factorization `C(G⁻, G⁺) = H`, uniformization `e^{Y}e^{X} = e^{Ψ_L}e^{Ψ_R}`,
//! and the three-factor split `e^{g⁺}e^{g⁻} = e^{Ψ⁻}e^{Ψ⁺}e^{Ψ⁰}`.

mod triple;

pub use triple::{triple_factorize, triple_factorize_with, Diagnostics, TripleResult};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::liecore::{cbh_eval, LieSeries, Part, Truncation};

/// Which graded parts go to the left and right exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub left: Part,
    pub right: Part,
}

impl SplitSpec {
    pub const MINUS_ZERO_PLUS: SplitSpec = SplitSpec { left: Part::Minus, right: Part::ZeroPlus };
    pub const PLUS_ZERO: SplitSpec = SplitSpec { left: Part::Plus, right: Part::Zero };

    pub fn new(left: Part, right: Part) -> Result<SplitSpec> {
        if !left.disjoint(right) {
            return Err(Error::Config(format!("split parts {left} and {right} overlap")));
        }
        Ok(SplitSpec { left, right })
    }

    /// Parses `left|right`, e.g. `minus|zero_plus`.
    pub fn parse(s: &str) -> Result<SplitSpec> {
        let bad = || Error::Config(format!("invalid split `{s}`, expected e.g. minus|zero_plus"));
        let (l, r) = s.split_once('|').ok_or_else(bad)?;
        SplitSpec::new(Part::parse(l.trim()).ok_or_else(bad)?, Part::parse(r.trim()).ok_or_else(bad)?)
    }

    fn covers(&self, degree: i32) -> bool {
        self.left.contains(degree) || self.right.contains(degree)
    }
}

impl fmt::Display for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

/// Order in which residual corrections are made.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Schedule {
    /// All bidegrees of one total order at once.
    #[default]
    TotalOrder,
    /// One bidegree at a time: (0,d), (1,d-1), …, (d,0) for each total order d.
    Bidegree,
}

#[derive(Clone, Debug)]
pub struct Factorization<S: Scalar> {
    pub left: LieSeries<S>,
    pub right: LieSeries<S>,
    /// Highest total order swept.
    pub sweeps: u32,
    /// Number of nonzero residual corrections.
    pub corrections: usize,
}

fn check_side<S: Scalar>(s: &LieSeries<S>, part: Part, minus_side: bool, what: &str) -> Result<()> {
    for (x, m, _) in s.terms() {
        if !part.contains(x.degree()) {
            return Err(Error::Domain(format!(
                "{what} has a term on {} outside the {part} part",
                s.algebra().basis_name(*x)
            )));
        }
        let (mi, pl) = m.bidegree();
        if (minus_side && mi == 0) || (!minus_side && pl == 0) {
            let kind = if minus_side { "minus" } else { "plus" };
            return Err(Error::Domain(format!("{what} has a term at {m} with no {kind}-type variable")));
        }
    }
    Ok(())
}

fn working_truncation<S: Scalar>(a: &LieSeries<S>, b: &LieSeries<S>, n: u32) -> Truncation {
    let t = a.truncation().min(b.truncation());
    Truncation { total: t.total.min(n), standard: t.standard.min(n) }
}

/// Solves `C(G⁻, G⁺) = H⁻ + H⁺` through total order `n`.
///
/// `hm` must lie in the left part with every term of positive minus-degree,
/// `hp` in the right part with every term of positive plus-degree.
pub fn factorize<S: Scalar>(
    hm: &LieSeries<S>,
    hp: &LieSeries<S>,
    split: SplitSpec,
    n: u32,
) -> Result<(LieSeries<S>, LieSeries<S>)> {
    let f = factorize_with(hm, hp, split, n, Schedule::TotalOrder)?;
    Ok((f.left, f.right))
}

pub fn factorize_with<S: Scalar>(
    hm: &LieSeries<S>,
    hp: &LieSeries<S>,
    split: SplitSpec,
    n: u32,
    schedule: Schedule,
) -> Result<Factorization<S>> {
    if !hm.same_algebra(hp) {
        return Err(Error::Usage("factorize inputs belong to different algebras".into()));
    }
    check_side(hm, split.left, true, "left input")?;
    check_side(hp, split.right, false, "right input")?;
    let trunc = working_truncation(hm, hp, n);
    let target = hm.add(hp).with_truncation(trunc);
    let mut gm = hm.with_truncation(trunc);
    let mut gp = hp.with_truncation(trunc);
    let mut corrections = 0;

    for d in 2..=trunc.total {
        let pieces: Vec<Option<(u32, u32)>> = match schedule {
            Schedule::TotalOrder => vec![None],
            Schedule::Bidegree => (0..=d).map(|m| Some((m, d - m))).collect(),
        };
        for piece in pieces {
            let current = cbh_eval(&gm, &gp, d)?;
            let mut r = target.homogeneous(d).sub(&current.homogeneous(d));
            if let Some((m, k)) = piece {
                r = r.bidegree_component(m, k);
            }
            if r.is_zero() {
                continue;
            }
            if let Some((x, m, _)) = r.terms().find(|(x, _, _)| !split.covers(x.degree())) {
                return Err(Error::Domain(format!(
                    "split {split} does not cover the residual term on {} at {m}",
                    r.algebra().basis_name(*x)
                )));
            }
            gm.add_assign(&r.project(split.left));
            gp.add_assign(&r.project(split.right));
            corrections += 1;
        }
    }

    let residual = target.sub(&cbh_eval(&gm, &gp, trunc.total)?);
    if !residual.is_zero() {
        return Err(Error::Residual(format!("nonzero residual after sweeping to order {}: {residual}", trunc.total)));
    }
    Ok(Factorization { left: gm, right: gp, sweeps: trunc.total, corrections })
}

/// Rewrites `e^{yp} e^{xm}` as `e^{Ψ_L} e^{Ψ_R}` with `Ψ_L` in the left part
/// and `Ψ_R` in the right part, through total order `n`.
pub fn uniformize<S: Scalar>(
    yp: &LieSeries<S>,
    xm: &LieSeries<S>,
    split: SplitSpec,
    n: u32,
) -> Result<(LieSeries<S>, LieSeries<S>)> {
    let f = uniformize_with(yp, xm, split, n, Schedule::TotalOrder)?;
    Ok((f.left, f.right))
}

pub fn uniformize_with<S: Scalar>(
    yp: &LieSeries<S>,
    xm: &LieSeries<S>,
    split: SplitSpec,
    n: u32,
    schedule: Schedule,
) -> Result<Factorization<S>> {
    if !yp.same_algebra(xm) {
        return Err(Error::Usage("uniformize inputs belong to different algebras".into()));
    }
    check_side(yp, split.right, false, "right-part input")?;
    check_side(xm, split.left, true, "left-part input")?;
    let h = cbh_eval(yp, xm, n)?;
    if let Some((x, _, _)) = h.terms().find(|(x, _, _)| !split.covers(x.degree())) {
        return Err(Error::Domain(format!("split {split} does not cover {}", h.algebra().basis_name(*x))));
    }
    factorize_with(&h.project(split.left), &h.project(split.right), split, n, schedule)
}

#[cfg(test)]
mod tests;
