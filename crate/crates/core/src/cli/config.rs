use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebras::{
    validate_plugin, Affine, FiniteAlgebraConfig, FiniteLieAlgebra, NeveuSchwarz, Support, Virasoro,
};
use crate::error::{Error, Result};
use crate::exactnum::{GrassmannScalar, Rational};
use crate::factor::SplitSpec;
use crate::liecore::{AlgebraRef, LieSeries, Truncation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraChoice {
    Virasoro,
    AffineSl2,
    AffineCustom,
    Ns1,
}

impl AlgebraChoice {
    pub const ALL: [AlgebraChoice; 4] =
        [AlgebraChoice::Virasoro, AlgebraChoice::AffineSl2, AlgebraChoice::AffineCustom, AlgebraChoice::Ns1];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraChoice::Virasoro => "virasoro",
            AlgebraChoice::AffineSl2 => "affine-sl2",
            AlgebraChoice::AffineCustom => "affine-custom",
            AlgebraChoice::Ns1 => "ns1",
        }
    }

    /// Support indices are doubled for the superalgebra, integral otherwise.
    pub fn doubled_support(self) -> bool {
        self == AlgebraChoice::Ns1
    }
}

impl fmt::Display for AlgebraChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraChoice::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
            Error::Config(format!("unknown algebra `{s}` (expected virasoro, affine-sl2, affine-custom or ns1)"))
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format `{s}` (expected text or json)"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportSpec {
    #[serde(rename = "A", default)]
    pub a: Vec<i32>,
    #[serde(rename = "B", default)]
    pub b: Vec<i32>,
}

impl SupportSpec {
    /// Parses command-line items like `A=1,2` and `B=-1,-2`.
    pub fn parse_items<S: AsRef<str>>(items: &[S]) -> Result<SupportSpec> {
        let mut out = SupportSpec::default();
        for item in items {
            let item = item.as_ref();
            let bad = || Error::Config(format!("invalid support `{item}`, expected e.g. A=1,2 or B=-1,-2"));
            let (k, v) = item.split_once('=').ok_or_else(bad)?;
            let vals = v
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            match k.trim() {
                "A" | "a" => out.a.extend(vals),
                "B" | "b" => out.b.extend(vals),
                _ => return Err(bad()),
            }
        }
        Ok(out)
    }
}

/// Finite elements used as `h_±` in the affine generators, as name → coefficient.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineSides {
    pub plus: BTreeMap<String, Rational>,
    pub minus: BTreeMap<String, Rational>,
}

/// Explicit factorization inputs: `left` goes with the left part of the split
/// (minus-type variables), `right` with the right part.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSeries {
    pub left: Value,
    pub right: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub algebra: AlgebraChoice,
    pub order: u32,
    #[serde(default)]
    pub support: SupportSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub custom: Option<FiniteAlgebraConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affine: Option<AffineSides>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<InputSeries>,
    #[serde(default)]
    pub format: Format,
}

/// Fields that may come from a file, each overridable by a flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialConfig {
    algebra: Option<AlgebraChoice>,
    order: Option<u32>,
    support: Option<SupportSpec>,
    custom: Option<FiniteAlgebraConfig>,
    affine: Option<AffineSides>,
    split: Option<String>,
    inputs: Option<InputSeries>,
    format: Option<Format>,
}

#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub algebra: Option<String>,
    pub order: Option<u32>,
    pub support: Option<Vec<String>>,
    pub format: Option<String>,
    pub split: Option<String>,
}

impl RunConfig {
    pub fn from_json(v: &Value) -> Result<RunConfig> {
        let cfg: RunConfig = serde_json::from_value(v.clone()).map_err(|e| Error::Config(e.to_string()))?;
        cfg.check()?;
        Ok(cfg)
    }

    /// Reads an optional config file, then applies flag overrides.
    pub fn resolve(file: Option<&Path>, o: &Overrides) -> Result<RunConfig> {
        let base: PartialConfig = match file {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Config(format!("cannot read config {}: {e}", p.display())))?;
                serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?
            }
            None => PartialConfig::default(),
        };
        let algebra = match &o.algebra {
            Some(s) => s.parse()?,
            None => base.algebra.ok_or_else(|| Error::Usage("no algebra given (use --algebra or --config)".into()))?,
        };
        let order =
            o.order.or(base.order).ok_or_else(|| Error::Usage("no order given (use --order or --config)".into()))?;
        let support = match &o.support {
            Some(items) => SupportSpec::parse_items(items)?,
            None => base.support.unwrap_or_default(),
        };
        let format = match &o.format {
            Some(s) => s.parse()?,
            None => base.format.unwrap_or_default(),
        };
        let cfg = RunConfig {
            algebra,
            order,
            support,
            custom: base.custom,
            affine: base.affine,
            split: o.split.clone().or(base.split),
            inputs: base.inputs,
            format,
        };
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Config("order must be at least 1".into()));
        }
        if (self.algebra == AlgebraChoice::AffineCustom) != self.custom.is_some() {
            return Err(Error::Config(
                "`custom` structure constants go with algebra affine-custom, and only there".into(),
            ));
        }
        self.support()?;
        self.split_spec()?;
        Ok(())
    }

    pub fn support(&self) -> Result<Support> {
        if self.algebra.doubled_support() {
            Support::new(self.support.a.clone(), self.support.b.clone())
        } else {
            Support::integral(&self.support.a, &self.support.b)
        }
    }

    pub fn split_spec(&self) -> Result<SplitSpec> {
        self.split.as_deref().map_or(Ok(SplitSpec::MINUS_ZERO_PLUS), SplitSpec::parse)
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::order(self.order)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("config serializes")
    }

    fn affine_plugin(&self) -> Result<Affine> {
        Ok(match &self.custom {
            Some(c) => Affine::new("affine-custom", FiniteLieAlgebra::from_config(c)?),
            None => Affine::sl2(),
        })
    }

    /// The algebra alone, without checking custom structure constants.
    pub fn algebra(&self) -> Result<AlgebraRef> {
        Ok(match self.algebra {
            AlgebraChoice::Virasoro => Virasoro::algebra(),
            AlgebraChoice::Ns1 => NeveuSchwarz::algebra(),
            AlgebraChoice::AffineSl2 | AlgebraChoice::AffineCustom => self.affine_plugin()?.algebra(),
        })
    }

    /// The algebra and the generator series `g⁺`, `g⁻` of the support.
    pub fn build(&self) -> Result<Built> {
        let support = self.support()?;
        let trunc = self.truncation();
        Ok(match self.algebra {
            AlgebraChoice::Virasoro => {
                let alg = Virasoro::algebra();
                let (gp, gm) = Virasoro::generators(&alg, &support, trunc);
                Built::Rational { alg, gp, gm }
            }
            AlgebraChoice::Ns1 => {
                let alg = NeveuSchwarz::algebra();
                let (gp, gm) = NeveuSchwarz::generators(&alg, &support, trunc);
                Built::Grassmann { alg, gp, gm }
            }
            AlgebraChoice::AffineSl2 | AlgebraChoice::AffineCustom => {
                let affine = self.affine_plugin()?;
                let finite = affine.finite().clone();
                let side = |m: &BTreeMap<String, Rational>| {
                    m.iter()
                        .map(|(k, c)| {
                            finite
                                .index_of(k)
                                .map(|i| (i, c.clone()))
                                .ok_or_else(|| Error::Config(format!("unknown finite basis element `{k}`")))
                        })
                        .collect::<Result<Vec<_>>>()
                };
                let (plus, minus) = match &self.affine {
                    Some(s) => (side(&s.plus)?, side(&s.minus)?),
                    None if self.custom.is_none() => (
                        side(&[("e".to_string(), Rational::one())].into())?,
                        side(&[("f".to_string(), Rational::one())].into())?,
                    ),
                    None => return Err(Error::Config("affine-custom needs `affine.plus` and `affine.minus`".into())),
                };
                let alg = affine.algebra();
                if self.custom.is_some() {
                    let report = validate_plugin(&alg, 4);
                    if let Some(v) = report.violations.first() {
                        return Err(Error::Config(format!(
                            "custom structure constants fail {} at {}: {}",
                            v.axiom,
                            v.witness.join(", "),
                            v.detail
                        )));
                    }
                }
                let (gp, gm) = Affine::generators(&alg, &support, &plus, &minus, trunc);
                Built::Rational { alg, gp, gm }
            }
        })
    }
}

/// An algebra handle with the generator series of a config.
pub enum Built {
    Rational { alg: AlgebraRef, gp: LieSeries<Rational>, gm: LieSeries<Rational> },
    Grassmann { alg: AlgebraRef, gp: LieSeries<GrassmannScalar>, gm: LieSeries<GrassmannScalar> },
}

/// Runs `$body` with `$alg`, `$gp`, `$gm` bound for either scalar type.
macro_rules! with_built {
    ($built:expr, |$alg:ident, $gp:ident, $gm:ident| $body:expr) => {
        match $built {
            $crate::cli::config::Built::Rational { alg: $alg, gp: $gp, gm: $gm } => $body,
            $crate::cli::config::Built::Grassmann { alg: $alg, gp: $gp, gm: $gm } => $body,
        }
    };
}
pub(crate) use with_built;
