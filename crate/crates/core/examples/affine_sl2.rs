//! Affine sl₂ with `g⁺ = Σ A_j e⊗x^j` and `g⁻ = Σ B_j f⊗x^j`; the central
//! component of `Ψ⁰` at order two is `Σ_j A_j B_-j (e, f) j k`.

use expfactor::algebras::{Affine, Support};
use expfactor::exactnum::Rational;
use expfactor::factor::triple_factorize;
use expfactor::liecore::{Monomial, Truncation, VarLabel};

fn main() -> expfactor::Result<()> {
    let affine = Affine::sl2();
    let (e, f) = (affine.finite().index_of("e").unwrap(), affine.finite().index_of("f").unwrap());
    let k = affine.k();
    let alg = affine.algebra();
    let (gp, gm) = Affine::generators(
        &alg,
        &Support::symmetric(2),
        &[(e, Rational::one())],
        &[(f, Rational::one())],
        Truncation::order(2),
    );
    let t = triple_factorize(&gp, &gm, 2)?;
    for j in 1..=2 {
        let m = Monomial::from_labels([VarLabel::a(2 * j), VarLabel::b(-2 * j)]);
        println!("k at {m}: {}", t.psi_zero.coeff(k, &m));
    }
    println!("\nΨ0 = {}", t.psi_zero);
    Ok(())
}
