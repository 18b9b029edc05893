use crate::exactnum::{Rational, ScalarKind};
use crate::liecore::{
    Algebra, AlgebraRef, BasisCombination, BasisIndex, LieAlgebraPlugin, LieSeries, Monomial, Truncation, VarLabel,
};

use super::{parse_indexed, Support};

/// The Virasoro algebra `[L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 δ_{m+n,0} c`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Virasoro;

impl Virasoro {
    pub fn l(n: i32) -> BasisIndex {
        BasisIndex::new(2 * n, 0, 0, false)
    }

    pub fn c() -> BasisIndex {
        BasisIndex::new(0, 1, 0, true)
    }

    pub fn algebra() -> AlgebraRef {
        Algebra::new(Virasoro)
    }

    /// `(Σ A_j L_j, Σ B_j L_j)` over the given support.
    pub fn generators(
        alg: &AlgebraRef,
        support: &Support,
        trunc: Truncation,
    ) -> (LieSeries<Rational>, LieSeries<Rational>) {
        let side = |labels: Vec<(VarLabel, i32)>| {
            LieSeries::from_terms(
                alg,
                trunc,
                labels.into_iter().map(|(v, d)| (Virasoro::l(d / 2), Monomial::var(v), Rational::one())),
            )
        };
        (side(support.plus_labels()), side(support.minus_labels()))
    }
}

/// `[L_m, L_n]` for integer `m`, `n`; shared with the Neveu–Schwarz plugin.
pub(crate) fn virasoro_ll(m: i32, n: i32, l: fn(i32) -> BasisIndex, c: BasisIndex) -> BasisCombination {
    let mut out = Vec::with_capacity(2);
    if m != n {
        out.push((l(m + n), Rational::from(m - n)));
    }
    if m + n == 0 {
        let m = m as i64;
        let central = Rational::new(m * m * m - m, 12);
        if !central.is_zero() {
            out.push((c, central));
        }
    }
    out
}

impl LieAlgebraPlugin for Virasoro {
    fn name(&self) -> String {
        "virasoro".into()
    }

    fn scalar_kind(&self) -> ScalarKind {
        ScalarKind::Rational
    }

    fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> BasisCombination {
        if x.is_central() || y.is_central() {
            return Vec::new();
        }
        virasoro_ll(x.degree() / 2, y.degree() / 2, Virasoro::l, Virasoro::c())
    }

    fn basis_name(&self, x: BasisIndex) -> String {
        if x.is_central() {
            "c".into()
        } else {
            format!("L_{}", x.degree() / 2)
        }
    }

    fn parse_basis(&self, s: &str) -> Option<BasisIndex> {
        if s == "c" {
            return Some(Virasoro::c());
        }
        let d = parse_indexed(s, "L_")?;
        (d % 2 == 0).then(|| Virasoro::l(d / 2))
    }

    fn basis_window(&self, max_doubled_degree: i32) -> Vec<BasisIndex> {
        let w = max_doubled_degree / 2;
        let mut out: Vec<BasisIndex> = (-w..=w).map(Virasoro::l).collect();
        out.push(Virasoro::c());
        out
    }
}
