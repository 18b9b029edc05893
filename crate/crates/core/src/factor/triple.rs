use serde_json::{json, Value};

use super::{check_side, factorize_with, uniformize_with, Schedule, SplitSpec};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::liecore::{AlgebraRef, LieSeries, Part, Truncation, VarLabel};

/// Bookkeeping from a triple factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub order: u32,
    /// Highest total order swept in either stage.
    pub sweeps: u32,
    pub corrections: usize,
}

/// `e^{g⁺} e^{g⁻} = e^{Ψ⁻} e^{Ψ⁺} e^{Ψ⁰}` through order `order`.
#[derive(Clone, Debug)]
pub struct TripleResult<S: Scalar> {
    pub psi_minus: LieSeries<S>,
    pub psi_plus: LieSeries<S>,
    pub psi_zero: LieSeries<S>,
    pub diagnostics: Diagnostics,
}

impl<S: Scalar> TripleResult<S> {
    pub fn order(&self) -> u32 {
        self.diagnostics.order
    }

    /// The central component of `Ψ⁰` (the `Γ c` or `k` part).
    pub fn gamma(&self) -> LieSeries<S> {
        self.psi_zero.central_part()
    }

    /// `Ψ⁰` without its central component.
    pub fn psi_zero_noncentral(&self) -> LieSeries<S> {
        self.psi_zero.noncentral_part()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "psi_minus": self.psi_minus.to_json(),
            "psi_plus": self.psi_plus.to_json(),
            "psi_zero": self.psi_zero.to_json(),
            "diagnostics": {
                "order": self.diagnostics.order,
                "sweeps": self.diagnostics.sweeps,
                "corrections": self.diagnostics.corrections,
                "terms": {
                    "psi_minus": self.psi_minus.len(),
                    "psi_plus": self.psi_plus.len(),
                    "psi_zero": self.psi_zero.len(),
                    "gamma": self.gamma().len(),
                },
            },
        })
    }

    pub fn from_json(alg: &AlgebraRef, v: &Value) -> Result<Self> {
        let series = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("result is missing `{k}`")))
                .and_then(|s| LieSeries::from_json(alg, s))
        };
        let diag = v.get("diagnostics").ok_or_else(|| Error::Parse("result is missing `diagnostics`".into()))?;
        let num = |k: &str| {
            diag.get(k).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("diagnostics is missing `{k}`")))
        };
        Ok(TripleResult {
            psi_minus: series("psi_minus")?,
            psi_plus: series("psi_plus")?,
            psi_zero: series("psi_zero")?,
            diagnostics: Diagnostics {
                order: num("order")? as u32,
                sweeps: num("sweeps")? as u32,
                corrections: num("corrections")? as usize,
            },
        })
    }
}

/// Computes `Ψ⁻, Ψ⁺, Ψ⁰` in two stages. First `e^{g⁺}e^{g⁻} = e^{Ψ⁻}e^{Ψ^{0,+}}`
/// by uniformization. Then `Ψ^{0,+}` splits as `e^{Ψ⁺}e^{Ψ⁰}` by factorizing
/// `s h⁺ + t h⁰` with auxiliary variables `s`, `t`, which are finally set to one.
pub fn triple_factorize<S: Scalar>(gp: &LieSeries<S>, gm: &LieSeries<S>, n: u32) -> Result<TripleResult<S>> {
    triple_factorize_with(gp, gm, n, Schedule::TotalOrder)
}

pub fn triple_factorize_with<S: Scalar>(
    gp: &LieSeries<S>,
    gm: &LieSeries<S>,
    n: u32,
    schedule: Schedule,
) -> Result<TripleResult<S>> {
    check_side(gp, Part::Plus, false, "g+")?;
    check_side(gm, Part::Minus, true, "g-")?;
    let stage1 = uniformize_with(gp, gm, SplitSpec::MINUS_ZERO_PLUS, n, schedule)?;
    let psi_minus = stage1.left;
    let zero_plus = stage1.right;
    let n = psi_minus.truncation().standard;

    let t2 = Truncation { total: 2 * n, standard: n };
    let sh = zero_plus.project(Part::Plus).attach(VarLabel::aux_minus(), t2);
    let th = zero_plus.project(Part::Zero).attach(VarLabel::aux_plus(), t2);
    let stage2 = factorize_with(&sh, &th, SplitSpec::PLUS_ZERO, 2 * n, schedule)?;
    for s in [&stage2.left, &stage2.right] {
        for (_, m, _) in s.terms() {
            let o = m.orders();
            if o.total - o.standard > o.standard {
                return Err(Error::Residual(format!("auxiliary order exceeds standard order at {m}")));
            }
        }
    }

    Ok(TripleResult {
        psi_plus: stage2.left.erase_auxiliary(),
        psi_zero: stage2.right.erase_auxiliary(),
        psi_minus,
        diagnostics: Diagnostics {
            order: n,
            sweeps: stage1.sweeps.max(stage2.sweeps),
            corrections: stage1.corrections + stage2.corrections,
        },
    })
}
