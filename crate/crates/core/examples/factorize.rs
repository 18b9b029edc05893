//! Factorization `C(G⁻, G⁺) = H⁻ + H⁺` and uniformization
//! `e^{Y} e^{X} = e^{Ψ_L} e^{Ψ_R}` in the Virasoro algebra.

use expfactor::algebras::Virasoro;
use expfactor::exactnum::Rational;
use expfactor::factor::{factorize, uniformize, SplitSpec};
use expfactor::liecore::{cbh_eval, LieSeries, Monomial, Truncation, VarLabel};

fn main() -> expfactor::Result<()> {
    let vir = Virasoro::algebra();
    let n = 4;
    let t = Truncation::order(n);
    let (a1, a2, b1, b2) = (VarLabel::a(2), VarLabel::a(4), VarLabel::b(-2), VarLabel::b(-4));

    let hm = LieSeries::from_terms(
        &vir,
        t,
        [
            (Virasoro::l(-1), Monomial::var(b1), Rational::one()),
            (Virasoro::l(-2), Monomial::var(b2), Rational::new(1, 2)),
        ],
    );
    let hp = LieSeries::from_terms(
        &vir,
        t,
        [
            (Virasoro::l(1), Monomial::var(a1), Rational::one()),
            (Virasoro::l(0), Monomial::from_labels([a2, b1]), Rational::new(-1, 3)),
        ],
    );
    let (gm, gp) = factorize(&hm, &hp, SplitSpec::MINUS_ZERO_PLUS, n)?;
    println!("G- = {gm}\n\nG+ = {gp}");
    let residual = cbh_eval(&gm, &gp, n)?.sub(&hm.add(&hp));
    println!("\nC(G-, G+) - H = {residual}");

    let (yp, xm) = (hp.clone(), hm.clone());
    let (left, right) = uniformize(&yp, &xm, SplitSpec::MINUS_ZERO_PLUS, n)?;
    println!("\ne^Y e^X = e^L e^R with\n  L = {left}\n  R = {right}");
    Ok(())
}
