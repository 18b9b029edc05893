//! The N=1 Neveu–Schwarz superalgebra; series over it carry Grassmann
//! coefficients so that they live in its Grassmann envelope.

use crate::exactnum::{GrassmannScalar, Rational, ScalarKind};
use crate::liecore::{
    Algebra, AlgebraRef, BasisCombination, BasisIndex, LieAlgebraPlugin, LieSeries, Monomial, Truncation, VarLabel,
};
use crate::util::half_int;

use super::virasoro::virasoro_ll;
use super::{parse_indexed, Support};

#[derive(Clone, Copy, Debug, Default)]
pub struct NeveuSchwarz;

impl NeveuSchwarz {
    pub fn l(n: i32) -> BasisIndex {
        BasisIndex::new(2 * n, 0, 0, false)
    }

    /// `G_r` with `r = doubled / 2`; `doubled` must be odd.
    pub fn g(doubled: i32) -> BasisIndex {
        assert!(doubled % 2 != 0, "G indices are half-odd");
        BasisIndex::new(doubled, 1, 1, false)
    }

    pub fn c() -> BasisIndex {
        BasisIndex::new(0, 2, 0, true)
    }

    pub fn algebra() -> AlgebraRef {
        Algebra::new(NeveuSchwarz)
    }

    /// The basis element of doubled degree `d` used as `p_{d/2}`: `L` for even
    /// `d`, `G` for odd `d`.
    pub fn p(d: i32) -> BasisIndex {
        if d % 2 == 0 {
            NeveuSchwarz::l(d / 2)
        } else {
            NeveuSchwarz::g(d)
        }
    }

    /// The coefficient paired with `p(d)`: 1 for `L`, the generator `a_{d/2}`
    /// for `G`.
    pub fn p_coeff(d: i32) -> GrassmannScalar {
        if d % 2 == 0 {
            GrassmannScalar::one()
        } else {
            GrassmannScalar::generator(d)
        }
    }

    /// `(Σ A_j a_j p_j, Σ B_j a_j p_j)` over a support of doubled indices,
    /// with one Grassmann generator per odd index.
    pub fn generators(
        alg: &AlgebraRef,
        support: &Support,
        trunc: Truncation,
    ) -> (LieSeries<GrassmannScalar>, LieSeries<GrassmannScalar>) {
        let side = |labels: Vec<(VarLabel, i32)>| {
            LieSeries::from_terms(
                alg,
                trunc,
                labels.into_iter().map(|(v, d)| (NeveuSchwarz::p(d), Monomial::var(v), NeveuSchwarz::p_coeff(d))),
            )
        };
        (side(support.plus_labels()), side(support.minus_labels()))
    }
}

/// `[G_r, L_n] = (r - n/2) G_{r+n}`, all indices doubled.
fn gl(r: i32, n2: i32) -> BasisCombination {
    let coeff = Rational::new((2 * r - n2) as i64, 4);
    if coeff.is_zero() {
        Vec::new()
    } else {
        vec![(NeveuSchwarz::g(r + n2), coeff)]
    }
}

impl LieAlgebraPlugin for NeveuSchwarz {
    fn name(&self) -> String {
        "ns1".into()
    }

    fn scalar_kind(&self) -> ScalarKind {
        ScalarKind::Grassmann
    }

    fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> BasisCombination {
        if x.is_central() || y.is_central() {
            return Vec::new();
        }
        let (dx, dy) = (x.degree(), y.degree());
        match (x.is_odd(), y.is_odd()) {
            (false, false) => virasoro_ll(dx / 2, dy / 2, NeveuSchwarz::l, NeveuSchwarz::c()),
            (true, false) => gl(dx, dy),
            (false, true) => gl(dy, dx).into_iter().map(|(b, c)| (b, -c)).collect(),
            (true, true) => {
                // [G_r, G_s] = 2 L_{r+s} + (r^2 - 1/4)/3 δ_{r+s,0} c
                let mut out = vec![(NeveuSchwarz::l((dx + dy) / 2), Rational::from(2))];
                if dx + dy == 0 {
                    let central = Rational::new((dx as i64).pow(2) - 1, 12);
                    if !central.is_zero() {
                        out.push((NeveuSchwarz::c(), central));
                    }
                }
                out
            }
        }
    }

    fn basis_name(&self, x: BasisIndex) -> String {
        if x.is_central() {
            "c".into()
        } else if x.is_odd() {
            format!("G_{}", half_int(x.degree()))
        } else {
            format!("L_{}", x.degree() / 2)
        }
    }

    fn parse_basis(&self, s: &str) -> Option<BasisIndex> {
        if s == "c" {
            return Some(NeveuSchwarz::c());
        }
        if let Some(d) = parse_indexed(s, "L_") {
            return (d % 2 == 0).then(|| NeveuSchwarz::l(d / 2));
        }
        let d = parse_indexed(s, "G_")?;
        (d % 2 != 0).then(|| NeveuSchwarz::g(d))
    }

    fn basis_window(&self, max_doubled_degree: i32) -> Vec<BasisIndex> {
        let w = max_doubled_degree;
        let mut out: Vec<BasisIndex> = (-w..=w).map(NeveuSchwarz::p).collect();
        out.push(NeveuSchwarz::c());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::Virasoro;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn relations() {
        let ns = NeveuSchwarz;
        assert_eq!(ns.bracket_basis(NeveuSchwarz::g(1), NeveuSchwarz::g(-1)), vec![(NeveuSchwarz::l(0), q(2, 1))]);
        assert_eq!(ns.bracket_basis(NeveuSchwarz::g(3), NeveuSchwarz::l(-1)), vec![(NeveuSchwarz::g(1), q(2, 1))]);
        assert_eq!(
            ns.bracket_basis(NeveuSchwarz::g(3), NeveuSchwarz::g(-3)),
            vec![(NeveuSchwarz::l(0), q(2, 1)), (NeveuSchwarz::c(), q(2, 3))]
        );
        assert_eq!(ns.bracket_basis(NeveuSchwarz::g(1), NeveuSchwarz::g(1)), vec![(NeveuSchwarz::l(1), q(2, 1))]);
        assert_eq!(ns.bracket_basis(NeveuSchwarz::l(-1), NeveuSchwarz::g(3)), vec![(NeveuSchwarz::g(1), q(-2, 1))]);
    }

    /// `[G_{m+1/2}, L_n] = (m - (n-1)/2) G_{m+n+1/2}` in its original indexing.
    #[test]
    fn gl_matches_shifted_indexing() {
        let ns = NeveuSchwarz;
        for m in -4..=4i32 {
            for n in -4..=4i32 {
                let got = ns.bracket_basis(NeveuSchwarz::g(2 * m + 1), NeveuSchwarz::l(n));
                let c = Rational::from(m) - Rational::new((n - 1) as i64, 2);
                let want = if c.is_zero() { vec![] } else { vec![(NeveuSchwarz::g(2 * (m + n) + 1), c)] };
                assert_eq!(got, want, "m={m} n={n}");
            }
        }
    }

    /// `[G_{m+1/2}, G_{n-1/2}] = 2 L_{m+n} + (m^2+m)/3 δ_{m+n,0} c`.
    #[test]
    fn gg_matches_shifted_indexing() {
        let ns = NeveuSchwarz;
        for m in -4..=4i64 {
            for n in -4..=4i64 {
                let got = ns.bracket_basis(NeveuSchwarz::g(2 * m as i32 + 1), NeveuSchwarz::g(2 * n as i32 - 1));
                let mut want = vec![(NeveuSchwarz::l((m + n) as i32), q(2, 1))];
                if m + n == 0 && m * m + m != 0 {
                    want.push((NeveuSchwarz::c(), q(m * m + m, 3)));
                }
                assert_eq!(got, want, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn even_sector_is_virasoro() {
        let (ns, vir) = (NeveuSchwarz, Virasoro);
        let rename = |b: BasisIndex| if b.is_central() { Virasoro::c() } else { Virasoro::l(b.degree() / 2) };
        for m in -6..=6 {
            for n in -6..=6 {
                let got: Vec<_> = ns
                    .bracket_basis(NeveuSchwarz::l(m), NeveuSchwarz::l(n))
                    .into_iter()
                    .map(|(b, c)| (rename(b), c))
                    .collect();
                assert_eq!(got, vir.bracket_basis(Virasoro::l(m), Virasoro::l(n)));
            }
        }
    }

    #[test]
    fn names_round_trip() {
        let ns = NeveuSchwarz;
        for x in ns.basis_window(7) {
            assert_eq!(ns.parse_basis(&ns.basis_name(x)), Some(x));
        }
        assert_eq!(ns.basis_name(NeveuSchwarz::g(-3)), "G_-3/2");
    }
}
