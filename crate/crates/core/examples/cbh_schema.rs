//! Prints the bracket schema of `log(e^a e^b)` and evaluates it in the
//! Virasoro algebra.
//!
//!     cargo run --example cbh_schema -- 4

use expfactor::algebras::Virasoro;
use expfactor::cbh::cbh_schema;
use expfactor::exactnum::Rational;
use expfactor::liecore::{cbh_eval, LieSeries, Monomial, Truncation, VarLabel};

fn main() -> expfactor::Result<()> {
    let degree: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let schema = cbh_schema(degree);
    for (n, terms) in schema.iter() {
        println!("degree {n}: {} nested brackets", terms.len());
        for t in terms.iter().take(8) {
            println!("  {:>8} [{}]", t.coeff.to_string(), t.pattern);
        }
        if terms.len() > 8 {
            println!("  ...");
        }
    }

    // C(A_1 L_1, B_-1 L_-1) through order 3.
    let vir = Virasoro::algebra();
    let t = Truncation::order(3);
    let x = LieSeries::term(&vir, t, Virasoro::l(1), Monomial::var(VarLabel::a(2)), Rational::one());
    let y = LieSeries::term(&vir, t, Virasoro::l(-1), Monomial::var(VarLabel::b(-2)), Rational::one());
    let c = cbh_eval(&x, &y, 3)?;
    println!("\nC(A_1 L_1, B_-1 L_-1) =");
    for [basis, mono, coeff] in c.rows() {
        println!("  {coeff:>5} {mono:<12} {basis}");
    }
    Ok(())
}
