//! Runs the axiom checks on the shipped algebras and on a deliberately broken
//! set of structure constants.

use expfactor::algebras::{validate_plugin, Affine, FiniteLieAlgebra, NeveuSchwarz, Virasoro};
use expfactor::exactnum::Rational;

fn main() -> expfactor::Result<()> {
    for alg in [Virasoro::algebra(), NeveuSchwarz::algebra(), Affine::sl2().algebra()] {
        let r = validate_plugin(&alg, 12);
        println!(
            "{:<14} ok={} basis={} pairs={} triples={}",
            r.algebra,
            r.ok(),
            r.basis_size,
            r.pairs_checked,
            r.triples_checked
        );
    }

    // [e, f] = 2h breaks the Jacobi identity and the invariance of the form.
    let mut cfg = FiniteLieAlgebra::sl2().to_config();
    for b in &mut cfg.brackets {
        if b.left == "e" && b.right == "f" {
            b.result.insert("h".into(), Rational::from_integer(2));
        }
    }
    let broken = Affine::new("broken-sl2", FiniteLieAlgebra::from_config(&cfg)?).algebra();
    let r = validate_plugin(&broken, 4);
    println!("\n{}: {} violations", r.algebra, r.violations.len());
    for v in r.violations.iter().take(3) {
        println!("  {} at {{{}}}: {}", v.axiom, v.witness.join(", "), v.detail);
    }
    Ok(())
}
