//! The triple factorization over the Grassmann envelope of the Neveu–Schwarz
//! algebra. Odd modes `G_r` carry Grassmann coefficients `a(r)`, so signs
//! appear whenever two odd pieces are reordered.

use expfactor::algebras::{NeveuSchwarz, Support};
use expfactor::factor::triple_factorize;
use expfactor::liecore::{Monomial, Truncation, VarLabel};

fn main() -> expfactor::Result<()> {
    let ns = NeveuSchwarz::algebra();
    // every A_{j/2}, B_{-j/2} with j ≤ 4
    let (gp, gm) = NeveuSchwarz::generators(&ns, &Support::symmetric_doubled(4), Truncation::order(2));
    let t = triple_factorize(&gp, &gm, 2)?;

    println!("Ψ0 on the diagonal:");
    for d in 1..=4 {
        let m = Monomial::from_labels([VarLabel::a(d), VarLabel::b(-d)]);
        let l0 = t.psi_zero.coeff(NeveuSchwarz::l(0), &m);
        let c = t.psi_zero.coeff(NeveuSchwarz::c(), &m);
        println!("  {m}: L_0 coefficient {l0}, c coefficient {c}");
    }
    println!("\nΨ+ = {}\n\nΨ- = {}", t.psi_plus, t.psi_minus);
    Ok(())
}
