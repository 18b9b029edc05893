//! Exhaustive axiom checks on a finite window of basis elements.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactnum::Rational;
use crate::liecore::{Algebra, BasisIndex};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    /// Largest doubled degree checked.
    pub window: i32,
    pub basis_size: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

type Vector = BTreeMap<BasisIndex, Rational>;

fn add_into(acc: &mut Vector, x: BasisIndex, c: Rational) {
    let e = acc.entry(x).or_insert_with(Rational::zero);
    *e += &c;
    if e.is_zero() {
        acc.remove(&x);
    }
}

fn sign(p: u8, q: u8) -> Rational {
    if p * q % 2 == 1 {
        Rational::from(-1)
    } else {
        Rational::one()
    }
}

/// `[[u, v], w]` as a sparse vector.
fn double_bracket(alg: &Algebra, u: BasisIndex, v: BasisIndex, w: BasisIndex) -> Vector {
    let mut out = Vector::new();
    for (x, a) in alg.bracket(u, v).iter() {
        for (y, b) in alg.bracket(*x, w).iter() {
            add_into(&mut out, *y, a * b);
        }
    }
    out
}

/// Checks graded skew-symmetry, the graded Jacobi identity, degree and parity
/// additivity, centrality, and any plugin-specific axioms, on all basis
/// elements of doubled degree at most `max_doubled_degree` in absolute value.
pub fn validate_plugin(alg: &Algebra, max_doubled_degree: i32) -> ValidationReport {
    let basis = alg.plugin().basis_window(max_doubled_degree);
    let name = |x: BasisIndex| alg.basis_name(x);
    let mut violations = Vec::new();
    let mut pairs = 0;
    let mut triples = 0;

    for &u in &basis {
        for &v in &basis {
            pairs += 1;
            let uv = alg.bracket(u, v);
            for (w, _) in uv.iter() {
                if w.degree() != u.degree() + v.degree() || w.parity() != (u.parity() + v.parity()) % 2 {
                    violations.push(Violation {
                        axiom: "grading".into(),
                        witness: vec![name(u), name(v)],
                        detail: format!("bracket produces {}", name(*w)),
                    });
                }
            }
            if (u.is_central() || v.is_central()) && !uv.is_empty() {
                violations.push(Violation {
                    axiom: "central".into(),
                    witness: vec![name(u), name(v)],
                    detail: "bracket with a central element is nonzero".into(),
                });
            }
            // [u,v] + (-1)^{|u||v|} [v,u] = 0
            let mut sum = Vector::new();
            for (w, c) in uv.iter() {
                add_into(&mut sum, *w, c.clone());
            }
            let s = sign(u.parity(), v.parity());
            for (w, c) in alg.bracket(v, u).iter() {
                add_into(&mut sum, *w, &s * c);
            }
            if !sum.is_empty() {
                violations.push(Violation {
                    axiom: "skew-symmetry".into(),
                    witness: vec![name(u), name(v)],
                    detail: describe(alg, &sum),
                });
            }
        }
    }

    for (i, &u) in basis.iter().enumerate() {
        for (j, &v) in basis.iter().enumerate().skip(i) {
            for &w in &basis[j..] {
                triples += 1;
                let (pu, pv, pw) = (u.parity(), v.parity(), w.parity());
                let mut sum = Vector::new();
                for (t, s) in [
                    (double_bracket(alg, u, v, w), sign(pu, pw)),
                    (double_bracket(alg, v, w, u), sign(pv, pu)),
                    (double_bracket(alg, w, u, v), sign(pw, pv)),
                ] {
                    for (x, c) in t {
                        add_into(&mut sum, x, &s * &c);
                    }
                }
                if !sum.is_empty() {
                    violations.push(Violation {
                        axiom: "jacobi".into(),
                        witness: vec![name(u), name(v), name(w)],
                        detail: describe(alg, &sum),
                    });
                }
            }
        }
    }

    for detail in alg.plugin().extra_checks() {
        violations.push(Violation { axiom: "plugin".into(), witness: Vec::new(), detail });
    }

    ValidationReport {
        algebra: alg.name(),
        window: max_doubled_degree,
        basis_size: basis.len(),
        pairs_checked: pairs,
        triples_checked: triples,
        violations,
    }
}

fn describe(alg: &Algebra, v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(|(x, c)| format!("({c}){}", alg.basis_name(*x))).collect();
    format!("residual {}", parts.join(" + "))
}
