//! Checks a triple factorization independently: both exponential products
//! are expanded in the enveloping algebra and straightened into PBW order.

use expfactor::algebras::{NeveuSchwarz, Support, Virasoro};
use expfactor::exactnum::Rational;
use expfactor::factor::triple_factorize;
use expfactor::liecore::{Monomial, Truncation, VarLabel};
use expfactor::pbwcheck::verify_triple;

fn main() -> expfactor::Result<()> {
    let vir = Virasoro::algebra();
    let n = 4;
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(n));
    let t = triple_factorize(&gp, &gm, n)?;
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &t.psi_zero, n)?;
    println!("virasoro N={n}: ok={} ({} normal-form terms)", r.ok, r.stats.lhs_terms);

    let mut bad = t.psi_zero.clone();
    bad.add_term(Virasoro::l(0), Monomial::from_labels([VarLabel::a(2), VarLabel::b(-2)]), Rational::one());
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &bad, n)?;
    let first = &r.mismatches[0];
    println!("perturbed: ok={}, first mismatch at {} [{}]", r.ok, first.monomial, first.word.join(" "));

    let ns = NeveuSchwarz::algebra();
    let n = 3;
    let (gp, gm) = NeveuSchwarz::generators(&ns, &Support::symmetric_doubled(3), Truncation::order(n));
    let t = triple_factorize(&gp, &gm, n)?;
    let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &t.psi_zero, n)?;
    println!("neveu-schwarz N={n}: ok={}", r.ok);
    Ok(())
}
