use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebras::{Affine, NeveuSchwarz, Support, Virasoro};
use crate::exactnum::{GrassmannScalar, Rational};
use crate::liecore::{AlgebraRef, BasisIndex, Monomial, VarLabel};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn a(j: i32) -> VarLabel {
    VarLabel::a(2 * j)
}

fn b(j: i32) -> VarLabel {
    VarLabel::b(2 * j)
}

fn term(alg: &AlgebraRef, n: u32, x: BasisIndex, m: &[VarLabel], c: Rational) -> LieSeries<Rational> {
    LieSeries::term(alg, Truncation::order(n), x, Monomial::from_labels(m.iter().copied()), c)
}

fn mono(m: &[VarLabel]) -> Monomial {
    Monomial::from_labels(m.iter().copied())
}

#[test]
fn split_parsing() {
    assert_eq!(SplitSpec::parse("minus|zero_plus").unwrap(), SplitSpec::MINUS_ZERO_PLUS);
    assert!(SplitSpec::parse("zero|zero_plus").is_err());
    assert!(SplitSpec::parse("minus").is_err());
    assert_eq!(SplitSpec::PLUS_ZERO.to_string(), "plus|zero");
}

#[test]
fn trivial_right_side() {
    let vir = Virasoro::algebra();
    let hm = term(&vir, 3, Virasoro::l(-1), &[b(-1)], q(2, 1));
    let zero = LieSeries::zero(&vir, Truncation::order(3));
    let (gm, gp) = factorize(&hm, &zero, SplitSpec::MINUS_ZERO_PLUS, 3).unwrap();
    assert_eq!(gm, hm);
    assert!(gp.is_zero());
}

#[test]
fn factorize_lowest_order_examples() {
    let vir = Virasoro::algebra();
    let hp = term(&vir, 2, Virasoro::l(1), &[a(1)], q(1, 1));

    let hm = term(&vir, 2, Virasoro::l(-2), &[b(-2)], q(1, 1));
    let (gm, gp) = factorize(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, 2).unwrap();
    assert_eq!(gm, hm.add(&term(&vir, 2, Virasoro::l(-1), &[a(1), b(-2)], q(3, 2))));
    assert_eq!(gp, hp);

    let hm = term(&vir, 2, Virasoro::l(-1), &[b(-1)], q(1, 1));
    let (gm, gp) = factorize(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, 2).unwrap();
    assert_eq!(gm, hm);
    assert_eq!(gp, hp.add(&term(&vir, 2, Virasoro::l(0), &[a(1), b(-1)], q(1, 1))));
}

#[test]
fn uniformize_lowest_order_examples() {
    let vir = Virasoro::algebra();
    let yp = term(&vir, 2, Virasoro::l(1), &[a(1)], q(1, 1));

    let xm = term(&vir, 2, Virasoro::l(-2), &[b(-2)], q(1, 1));
    let (psi_l, psi_r) = uniformize(&yp, &xm, SplitSpec::MINUS_ZERO_PLUS, 2).unwrap();
    assert_eq!(psi_l, xm.add(&term(&vir, 2, Virasoro::l(-1), &[a(1), b(-2)], q(3, 1))));
    assert_eq!(psi_r, yp);

    let xm = term(&vir, 2, Virasoro::l(-1), &[b(-1)], q(1, 1));
    let (psi_l, psi_r) = uniformize(&yp, &xm, SplitSpec::MINUS_ZERO_PLUS, 2).unwrap();
    assert_eq!(psi_l, xm);
    assert_eq!(psi_r, yp.add(&term(&vir, 2, Virasoro::l(0), &[a(1), b(-1)], q(2, 1))));
}

#[test]
fn commuting_exponentials_swap() {
    let aff = Affine::sl2().algebra();
    let yp = term(&aff, 4, Affine::elem(0, 1), &[a(1)], q(1, 1));
    let xm = term(&aff, 4, Affine::elem(0, -1), &[b(-1)], q(1, 1));
    let (psi_l, psi_r) = uniformize(&yp, &xm, SplitSpec::MINUS_ZERO_PLUS, 4).unwrap();
    assert_eq!((psi_l.clone(), psi_r.clone()), (xm.clone(), yp.clone()));
    let t = triple_factorize(&yp, &xm, 4).unwrap();
    assert_eq!(t.psi_minus, xm);
    assert_eq!(t.psi_plus, yp);
    assert!(t.psi_zero.is_zero());
}

#[test]
fn virasoro_triple_order_two() {
    let vir = Virasoro::algebra();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(2));
    let t = triple_factorize(&gp, &gm, 2).unwrap();
    let l0 = Virasoro::l(0);
    assert_eq!(t.psi_zero.coeff(l0, &mono(&[a(1), b(-1)])), q(2, 1));
    assert_eq!(t.psi_zero.coeff(l0, &mono(&[a(2), b(-2)])), q(4, 1));
    assert_eq!(t.gamma().coeff(Virasoro::c(), &mono(&[a(2), b(-2)])), q(1, 2));
    assert!(t.gamma().coeff(Virasoro::c(), &mono(&[a(1), b(-1)])).is_zero());
    assert_eq!(t.psi_plus.coeff(Virasoro::l(1), &mono(&[a(2), b(-1)])), q(3, 1));
    assert_eq!(t.diagnostics.order, 2);
}

#[test]
fn ns_triple_order_two() {
    let ns = NeveuSchwarz::algebra();
    let (gp, gm) = NeveuSchwarz::generators(&ns, &Support::new(vec![1], vec![-1]).unwrap(), Truncation::order(2));
    let t = triple_factorize(&gp, &gm, 2).unwrap();
    let m = mono(&[VarLabel::a(1), VarLabel::b(-1)]);
    assert_eq!(t.psi_zero.coeff(NeveuSchwarz::l(0), &m), GrassmannScalar::product_of(&[1, -1]).scale(&q(-2, 1)));

    let (gp, gm) = NeveuSchwarz::generators(&ns, &Support::new(vec![3], vec![-3]).unwrap(), Truncation::order(2));
    let t = triple_factorize(&gp, &gm, 2).unwrap();
    let m = mono(&[VarLabel::a(3), VarLabel::b(-3)]);
    assert_eq!(t.gamma().coeff(NeveuSchwarz::c(), &m), GrassmannScalar::product_of(&[3, -3]).scale(&q(-2, 3)));
}

#[test]
fn empty_inputs() {
    let vir = Virasoro::algebra();
    let zero = LieSeries::<Rational>::zero(&vir, Truncation::order(3));
    let t = triple_factorize(&zero, &zero, 3).unwrap();
    assert!(t.psi_minus.is_zero() && t.psi_plus.is_zero() && t.psi_zero.is_zero());
}

/// Random `H⁻` (minus part, minus-degree ≥ 1) and `H⁺` (zero-plus part,
/// plus-degree ≥ 1) over the Virasoro algebra with support ±1, ±2.
pub(crate) fn random_h(alg: &AlgebraRef, rng: &mut ChaCha8Rng, n: u32) -> (LieSeries<Rational>, LieSeries<Rational>) {
    let plus = [a(1), a(2)];
    let minus = [b(-1), b(-2)];
    let all = [a(1), a(2), b(-1), b(-2)];
    let mut side = |forced: &[VarLabel], degrees: std::ops::RangeInclusive<i32>| {
        let mut s = LieSeries::zero(alg, Truncation::order(n));
        for _ in 0..rng.gen_range(2..=5) {
            let extra = rng.gen_range(0..=1);
            let m = Monomial::from_labels(
                std::iter::once(forced[rng.gen_range(0..2)]).chain((0..extra).map(|_| all[rng.gen_range(0..4)])),
            );
            let x = Virasoro::l(rng.gen_range(degrees.clone()));
            s.add_term(x, m, q(rng.gen_range(-6..=6), rng.gen_range(1..=5)));
        }
        s
    };
    let hm = side(&minus, -3..=-1);
    let hp = side(&plus, 0..=3);
    (hm, hp)
}

#[test]
fn residual_is_exact_on_random_inputs() {
    let vir = Virasoro::algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..4 {
        let (hm, hp) = random_h(&vir, &mut rng, 4);
        let (gm, gp) = factorize(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, 4).unwrap();
        assert_eq!(cbh_eval(&gm, &gp, 4).unwrap(), hm.add(&hp));
        assert_eq!(gm.project(Part::Minus), gm);
        assert_eq!(gp.project(Part::ZeroPlus), gp);
        assert!(gm.terms().all(|(_, m, _)| m.bidegree().0 >= 1));
        assert!(gp.terms().all(|(_, m, _)| m.bidegree().1 >= 1));
    }
}

#[test]
fn schedules_agree() {
    let vir = Virasoro::algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (hm, hp) = random_h(&vir, &mut rng, 4);
    let one = factorize_with(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, 4, Schedule::TotalOrder).unwrap();
    let two = factorize_with(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, 4, Schedule::Bidegree).unwrap();
    assert_eq!((one.left, one.right), (two.left, two.right));

    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(3));
    let one = triple_factorize_with(&gp, &gm, 3, Schedule::TotalOrder).unwrap();
    let two = triple_factorize_with(&gp, &gm, 3, Schedule::Bidegree).unwrap();
    assert_eq!(one.psi_minus, two.psi_minus);
    assert_eq!(one.psi_plus, two.psi_plus);
    assert_eq!(one.psi_zero, two.psi_zero);
}

#[test]
fn triple_membership_and_remainders() {
    let vir = Virasoro::algebra();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(4));
    let t = triple_factorize(&gp, &gm, 4).unwrap();
    assert_eq!(t.psi_minus.project(Part::Minus), t.psi_minus);
    assert_eq!(t.psi_plus.project(Part::Plus), t.psi_plus);
    assert_eq!(t.psi_zero.project(Part::Zero), t.psi_zero);
    for (s, linear) in [(&t.psi_minus, &gm), (&t.psi_plus, &gp)] {
        let rest = s.sub(linear);
        assert!(rest.terms().all(|(_, m, _)| {
            let (mi, pl) = m.bidegree();
            mi >= 1 && pl >= 1
        }));
    }
    assert!(t.psi_zero.terms().all(|(_, m, _)| m.bidegree().0 >= 1 && m.bidegree().1 >= 1));
}

#[test]
fn json_round_trip() {
    let vir = Virasoro::algebra();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(3));
    let t = triple_factorize(&gp, &gm, 3).unwrap();
    let back = TripleResult::<Rational>::from_json(&vir, &t.to_json()).unwrap();
    assert_eq!(back.psi_minus, t.psi_minus);
    assert_eq!(back.psi_plus, t.psi_plus);
    assert_eq!(back.psi_zero, t.psi_zero);
    assert_eq!(back.diagnostics, t.diagnostics);
}

#[test]
fn precondition_violations() {
    let vir = Virasoro::algebra();
    let wrong_part = term(&vir, 2, Virasoro::l(1), &[b(-1)], q(1, 1));
    let hp = term(&vir, 2, Virasoro::l(1), &[a(1)], q(1, 1));
    assert!(matches!(factorize(&wrong_part, &hp, SplitSpec::MINUS_ZERO_PLUS, 2), Err(crate::Error::Domain(_))));
    let no_minus = term(&vir, 2, Virasoro::l(-1), &[a(1)], q(1, 1));
    assert!(matches!(factorize(&no_minus, &hp, SplitSpec::MINUS_ZERO_PLUS, 2), Err(crate::Error::Domain(_))));
    let hm = term(&vir, 2, Virasoro::l(-1), &[b(-1)], q(1, 1));
    // Minus|plus misses L_0, which the bracket produces.
    let split = SplitSpec::new(Part::Minus, Part::Plus).unwrap();
    assert!(matches!(factorize(&hm, &hp, split, 2), Err(crate::Error::Domain(_))));
}
