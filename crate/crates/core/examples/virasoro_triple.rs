//! `e^{g⁺} e^{g⁻} = e^{Ψ⁻} e^{Ψ⁺} e^{Ψ⁰} e^{Γ c}` for the Virasoro algebra, with
//! the order-two coefficients compared against their closed forms.

use expfactor::algebras::{Support, Virasoro};
use expfactor::exactnum::Rational;
use expfactor::factor::triple_factorize;
use expfactor::liecore::{Monomial, Truncation, VarLabel};

fn ab(j: i32, m: i32) -> Monomial {
    Monomial::from_labels([VarLabel::a(2 * j), VarLabel::b(-2 * m)])
}

fn main() -> expfactor::Result<()> {
    let vir = Virasoro::algebra();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(4), Truncation::order(2));
    let t = triple_factorize(&gp, &gm, 2)?;

    println!("Ψ0 and Γ on the diagonal A_m B_-m:");
    for m in 1..=4 {
        let psi0 = t.psi_zero.coeff(Virasoro::l(0), &ab(m, m));
        let gamma = t.psi_zero.coeff(Virasoro::c(), &ab(m, m));
        println!(
            "  m={m}: Ψ0 = {psi0} (2m = {}), Γ = {gamma} ((m³-m)/12 = {})",
            2 * m,
            Rational::new((m * m * m - m) as i64, 12)
        );
    }
    println!("\nΨ_j at A_(j+m) B_-m, expected j+2m:");
    for j in 1..=3 {
        for m in 1..=(4 - j) {
            let c = t.psi_plus.coeff(Virasoro::l(j), &ab(j + m, m));
            println!("  j={j} m={m}: {c}");
        }
    }
    println!("\nΨ_-j at A_(m-j) B_-m for m > j, expected 2m-j:");
    for j in 1..=3 {
        for m in (j + 1)..=4 {
            let c = t.psi_minus.coeff(Virasoro::l(-j), &ab(m - j, m));
            println!("  j={j} m={m}: {c}");
        }
    }
    println!(
        "\n{} + {} + {} terms, {} corrections",
        t.psi_minus.len(),
        t.psi_plus.len(),
        t.psi_zero.len(),
        t.diagnostics.corrections
    );
    Ok(())
}
