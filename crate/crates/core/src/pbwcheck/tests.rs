use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::smallvec;

use super::*;
use crate::algebras::{Affine, NeveuSchwarz, Support, Virasoro};
use crate::exactnum::{GrassmannScalar, Rational};
use crate::factor::triple_factorize;
use crate::liecore::{cbh_eval, AlgebraRef, BasisIndex, VarLabel};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn word_elem(alg: &AlgebraRef, w: &[BasisIndex]) -> UElement<Rational> {
    let mut u = UElement::zero(alg, Truncation::order(4));
    u.add_term(Monomial::one(), UWord::from_slice(w), Rational::one());
    u
}

fn nf(alg: &AlgebraRef, w: &[BasisIndex]) -> UElement<Rational> {
    straighten(&word_elem(alg, w))
}

fn combo(alg: &AlgebraRef, parts: &[(&[BasisIndex], Rational)]) -> UElement<Rational> {
    let mut u = UElement::zero(alg, Truncation::order(4));
    for (w, c) in parts {
        u.add_term(Monomial::one(), UWord::from_slice(w), c.clone());
    }
    u
}

#[test]
fn virasoro_commutator_straightens() {
    let vir = Virasoro::algebra();
    let (l1, lm1, l0) = (Virasoro::l(1), Virasoro::l(-1), Virasoro::l(0));
    let expected = combo(&vir, &[(&[lm1, l1], q(1, 1)), (&[l0], q(2, 1))]);
    assert_eq!(nf(&vir, &[l1, lm1]), expected);
    assert_eq!(nf(&vir, &[lm1, l1]), word_elem(&vir, &[lm1, l1]));
    // [L_2, L_-2] = 4 L_0 + c/2
    let l2 = Virasoro::l(2);
    let lm2 = Virasoro::l(-2);
    let expected = combo(&vir, &[(&[lm2, l2], q(1, 1)), (&[l0], q(4, 1)), (&[Virasoro::c()], q(1, 2))]);
    assert_eq!(nf(&vir, &[l2, lm2]), expected);
}

#[test]
fn odd_square_is_half_bracket() {
    let ns = NeveuSchwarz::algebra();
    let g = NeveuSchwarz::g(1);
    assert_eq!(nf(&ns, &[g, g]), word_elem(&ns, &[NeveuSchwarz::l(1)]));
    // G_{1/2} G_{-1/2} = -G_{-1/2} G_{1/2} + 2 L_0
    let gm = NeveuSchwarz::g(-1);
    let expected = combo(&ns, &[(&[gm, g], q(-1, 1)), (&[NeveuSchwarz::l(0)], q(2, 1))]);
    assert_eq!(nf(&ns, &[g, gm]), expected);
    // G_{-1/2}^2 = L_{-1}; no normal word repeats an odd letter
    assert_eq!(nf(&ns, &[gm, gm]), word_elem(&ns, &[NeveuSchwarz::l(-1)]));
}

fn random_word(rng: &mut ChaCha8Rng, pool: &[BasisIndex], max: usize) -> Vec<BasisIndex> {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| pool[rng.gen_range(0..pool.len())]).collect()
}

fn ns_pool() -> Vec<BasisIndex> {
    let mut pool: Vec<_> = (-2..=2).map(NeveuSchwarz::l).collect();
    pool.extend([-3, -1, 1, 3].map(NeveuSchwarz::g));
    pool.push(NeveuSchwarz::c());
    pool
}

#[test]
fn normal_forms_are_normal_and_stable() {
    let ns = NeveuSchwarz::algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pool = ns_pool();
    for _ in 0..60 {
        let w = random_word(&mut rng, &pool, 4);
        let x = nf(&ns, &w);
        assert!(x.terms().all(|(_, u, _)| is_normal(u)), "{x}");
        assert_eq!(straighten(&x), x);
    }
}

#[test]
fn straightening_is_multiplicative() {
    for (alg, pool) in [
        (Virasoro::algebra(), (-2..=2).map(Virasoro::l).chain([Virasoro::c()]).collect::<Vec<_>>()),
        (NeveuSchwarz::algebra(), ns_pool()),
        (Affine::sl2().algebra(), (0..3).flat_map(|i| (-1..=1).map(move |n| Affine::elem(i, n))).collect()),
    ] {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let x = word_elem(&alg, &random_word(&mut rng, &pool, 3));
            let y = word_elem(&alg, &random_word(&mut rng, &pool, 3));
            let direct = straighten(&x.mul(&y).unwrap());
            let staged = straighten(&straighten(&x).mul(&straighten(&y)).unwrap());
            assert_eq!(direct, staged, "{} * {}", x, y);
        }
    }
}

#[test]
fn supercommutator_matches_bracket() {
    let ns = NeveuSchwarz::algebra();
    let pool = ns_pool();
    for &x in &pool {
        for &y in &pool {
            let sign = if x.is_odd() && y.is_odd() { q(-1, 1) } else { q(1, 1) };
            let lhs = nf(&ns, &[x, y]).sub(&nf(&ns, &[y, x]).scale(&sign)).unwrap();
            let br: Vec<(&[BasisIndex], Rational)> = Vec::new();
            let mut rhs = combo(&ns, &br);
            for (z, c) in ns.bracket(x, y).iter() {
                rhs = rhs.add(&straighten(&combo(&ns, &[(&[*z], c.clone())]))).unwrap();
            }
            assert_eq!(lhs, rhs, "[{}, {}]", ns.basis_name(x), ns.basis_name(y));
        }
    }
}

#[test]
fn rewrite_order_does_not_matter() {
    let ns = NeveuSchwarz::algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pool = ns_pool();
    for _ in 0..60 {
        let w = random_word(&mut rng, &pool, 5);
        let mut x = word_elem(&ns, &w);
        let target = straighten(&x);
        for _ in 0..4 {
            if x.is_empty() {
                break;
            }
            let t = rng.gen_range(0..x.len());
            let len = x.terms().nth(t).unwrap().1.len();
            if len < 2 {
                continue;
            }
            x = rewrite_once(&x, t, rng.gen_range(0..len - 1));
            assert_eq!(straighten(&x), target);
        }
    }
}

#[test]
fn graded_product_sign() {
    // (θ₁ G) (θ₂ G') = -θ₁θ₂ G G'
    let ns = NeveuSchwarz::algebra();
    let t = Truncation::order(2);
    let g = NeveuSchwarz::g(1);
    let mut x = UElement::zero(&ns, t);
    x.add_term(Monomial::one(), smallvec![g], GrassmannScalar::generator(1));
    let mut y = UElement::zero(&ns, t);
    y.add_term(Monomial::one(), smallvec![NeveuSchwarz::g(3)], GrassmannScalar::generator(3));
    let p = x.mul(&y).unwrap();
    let c = p.coeff(&Monomial::one(), &[g, NeveuSchwarz::g(3)]);
    assert_eq!(c, GrassmannScalar::product_of(&[1, 3]).neg());
}

#[test]
fn zero_inputs_give_one_on_both_sides() {
    let vir = Virasoro::algebra();
    let z = LieSeries::<Rational>::zero(&vir, Truncation::order(3));
    let r = verify_triple(&z, &z, &z, &z, &z, 3).unwrap();
    assert!(r.ok);
    assert_eq!((r.stats.lhs_terms, r.stats.rhs_terms), (1, 1));
}

#[test]
fn exponential_rejects_order_zero() {
    let vir = Virasoro::algebra();
    let x = LieSeries::term(&vir, Truncation::order(2), Virasoro::l(1), Monomial::one(), q(1, 1));
    assert!(matches!(UElement::exp(&x), Err(Error::Convergence(_))));
}

#[test]
fn cbh_agrees_with_exponential_products() {
    // Independent of the schema: e^x e^y = e^{C(x,y)} in the envelope.
    let vir = Virasoro::algebra();
    let n = 4;
    let t = Truncation::order(n);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4 {
        let mut x = LieSeries::zero(&vir, t);
        let mut y = LieSeries::zero(&vir, t);
        for (s, v) in [(&mut x, VarLabel::a(2)), (&mut y, VarLabel::b(-2))] {
            for _ in 0..3 {
                let m = if rng.gen_bool(0.5) { Monomial::var(v) } else { Monomial::power(v, 2) };
                s.add_term(Virasoro::l(rng.gen_range(-2..=2)), m, q(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
            }
        }
        let z = cbh_eval(&x, &y, n).unwrap();
        let r = verify_products(&[&x, &y], &[&z], n).unwrap();
        assert!(r.ok, "{:?}", r.mismatches);
    }
}

#[test]
fn virasoro_triple_verifies_and_perturbation_is_located() {
    let vir = Virasoro::algebra();
    let n = 3;
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(n));
    let t = triple_factorize(&gp, &gm, n).unwrap();
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &t.psi_zero, n).unwrap();
    assert!(r.ok, "{:?}", r.mismatches);

    let bump = Monomial::from_labels([VarLabel::a(2), VarLabel::b(-2)]);
    let mut bad = t.psi_zero.clone();
    bad.add_term(Virasoro::l(0), bump.clone(), q(1, 1));
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &bad, n).unwrap();
    assert!(!r.ok);
    assert_eq!(r.mismatches[0].monomial, bump);
    assert_eq!(r.mismatches[0].word, vec!["L_0".to_string()]);
    let js = r.to_json();
    assert_eq!(js["ok"], false);
    assert_eq!(js["mismatches"][0]["monomial"]["A_1"], 1);
}

#[test]
fn neveu_schwarz_triple_verifies() {
    let ns = NeveuSchwarz::algebra();
    let n = 3;
    let (gp, gm) = NeveuSchwarz::generators(&ns, &Support::symmetric_doubled(3), Truncation::order(n));
    let t = triple_factorize(&gp, &gm, n).unwrap();
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &t.psi_zero, n).unwrap();
    assert!(r.ok, "{:?}", r.mismatches);
}

#[test]
fn order_beyond_computed_truncation_is_rejected() {
    let vir = Virasoro::algebra();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(1), Truncation::order(2));
    assert!(matches!(verify_products(&[&gp], &[&gm], 3), Err(Error::Usage(_))));
    assert!(matches!(verify_products::<Rational>(&[], &[], 3), Err(Error::Usage(_))));
}

#[test]
fn product_and_exponential_examples() {
    let ns = NeveuSchwarz::algebra();
    let t = Truncation::order(2);
    let (g, gm) = (NeveuSchwarz::g(1), NeveuSchwarz::g(-1));
    let single = |x: BasisIndex, m: Monomial, c: GrassmannScalar| {
        let mut u = UElement::zero(&ns, t);
        u.add_term(m, smallvec![x], c);
        u
    };
    let x = single(g, Monomial::one(), GrassmannScalar::generator(1));
    let y = single(gm, Monomial::one(), GrassmannScalar::generator(-1));
    assert_eq!(UElement::one(&ns, t).mul(&x).unwrap(), x);
    let p = x.mul(&y).unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p.coeff(&Monomial::one(), &[g, gm]), GrassmannScalar::product_of(&[1, -1]).neg());

    // the quadratic term of an odd exponential vanishes
    let a = Monomial::var(VarLabel::a(1));
    let s = LieSeries::term(&ns, t, g, a.clone(), GrassmannScalar::generator(1));
    let e = UElement::exp(&s).unwrap();
    let mut want = UElement::one(&ns, t);
    want.add_term(a, smallvec![g], GrassmannScalar::generator(1));
    assert_eq!(e, want);

    let vir = Virasoro::algebra();
    let a1 = Monomial::var(VarLabel::a(2));
    let s = LieSeries::term(&vir, t, Virasoro::l(1), a1.clone(), q(1, 1));
    let e = UElement::exp(&s).unwrap();
    let mut want = UElement::one(&vir, t);
    want.add_term(a1.clone(), smallvec![Virasoro::l(1)], q(1, 1));
    want.add_term(a1.mul(&a1), smallvec![Virasoro::l(1), Virasoro::l(1)], q(1, 2));
    assert_eq!(e, want);
    assert_eq!(UElement::exp(&LieSeries::<Rational>::zero(&vir, t)).unwrap(), UElement::one(&vir, t));
}
