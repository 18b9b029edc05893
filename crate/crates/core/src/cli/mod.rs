//! Command-line front end: `schema`, `factor`, `uniformize`, `triple`,
//! `verify` and `validate-algebra`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or configuration
//! error, 3 nonzero residual.

pub mod config;
mod output;

pub use config::{AlgebraChoice, Format, Overrides, RunConfig, SupportSpec};
pub use output::{series_block, table};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebras::validate_plugin;
use crate::cbh::{cbh_schema, DEFAULT_MAX_SCHEMA_DEGREE};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::factor::{factorize_with, triple_factorize, uniformize_with, Factorization, Schedule, TripleResult};
use crate::liecore::LieSeries;
use crate::pbwcheck::{verify_triple, VerificationReport};
use config::with_built;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESIDUAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "expfactor", version, about = "Exact factorization of products of formal exponentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// virasoro, affine-sl2, affine-custom or ns1
    #[arg(long)]
    pub algebra: Option<String>,
    /// Truncation order N
    #[arg(long)]
    pub order: Option<u32>,
    /// Active variables, e.g. `A=1,2 B=-1,-2` (doubled indices for ns1)
    #[arg(long, num_args = 1..)]
    pub support: Option<Vec<String>>,
    /// text or json
    #[arg(long)]
    pub format: Option<String>,
    /// JSON run configuration; flags override its fields
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    fn overrides(&self) -> Overrides {
        Overrides {
            algebra: self.algebra.clone(),
            order: self.order,
            support: self.support.clone(),
            format: self.format.clone(),
            split: None,
        }
    }

    fn resolve(&self) -> Result<RunConfig> {
        RunConfig::resolve(self.config.as_deref(), &self.overrides())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the bracket schema of log(e^a e^b) through a degree
    Schema {
        #[arg(long, visible_alias = "order")]
        degree: usize,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve C(G-, G+) = H- + H+ (inputs from the config, or the support generators)
    Factor {
        #[command(flatten)]
        common: Common,
        /// Split as `left|right`, default minus|zero_plus
        #[arg(long)]
        split: Option<String>,
    },
    /// Rewrite e^{Y} e^{X} as e^{Psi_L} e^{Psi_R}
    Uniformize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        split: Option<String>,
    },
    /// Compute e^{g+} e^{g-} = e^{Psi-} e^{Psi+} e^{Psi0}
    Triple {
        #[command(flatten)]
        common: Common,
    },
    /// Check a triple factorization in the enveloping algebra
    Verify {
        #[command(flatten)]
        common: Common,
        /// JSON output of `triple --format json`; recomputed when absent
        #[arg(long)]
        result: Option<PathBuf>,
    },
    /// Check the algebra axioms on a window of basis elements
    ValidateAlgebra {
        #[command(flatten)]
        common: Common,
        /// Largest |degree| checked
        #[arg(long, default_value_t = 6)]
        window: u32,
    },
}

struct Outcome {
    code: i32,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { code: EXIT_OK, text }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Residual(_) => EXIT_RESIDUAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let out_path = match &cli.command {
        Command::Schema { out, .. } => out.clone(),
        Command::Factor { common, .. }
        | Command::Uniformize { common, .. }
        | Command::Triple { common }
        | Command::Verify { common, .. }
        | Command::ValidateAlgebra { common, .. } => common.out.clone(),
    };
    match execute(cli.command).and_then(|o| emit(o, out_path.as_deref(), stdout)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(o: Outcome, out: Option<&Path>, stdout: &mut dyn Write) -> Result<i32> {
    match out {
        Some(p) => std::fs::write(p, &o.text)?,
        None => stdout.write_all(o.text.as_bytes())?,
    }
    Ok(o.code)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Schema { degree, format, .. } => cmd_schema(degree, parse_format(format.as_deref())?),
        Command::Factor { common, split } => {
            let cfg = RunConfig::resolve(common.config.as_deref(), &Overrides { split, ..common.overrides() })?;
            cmd_factor(&cfg, false)
        }
        Command::Uniformize { common, split } => {
            let cfg = RunConfig::resolve(common.config.as_deref(), &Overrides { split, ..common.overrides() })?;
            cmd_factor(&cfg, true)
        }
        Command::Triple { common } => cmd_triple(&common.resolve()?),
        Command::Verify { common, result } => cmd_verify(&common, result.as_deref()),
        Command::ValidateAlgebra { common, window } => cmd_validate(&common, window),
    }
}

fn parse_format(s: Option<&str>) -> Result<Format> {
    s.map_or(Ok(Format::Text), str::parse)
}

fn cmd_schema(degree: usize, format: Format) -> Result<Outcome> {
    if degree == 0 || degree > DEFAULT_MAX_SCHEMA_DEGREE {
        return Err(Error::Usage(format!("--degree must be between 1 and {DEFAULT_MAX_SCHEMA_DEGREE}")));
    }
    let schema = cbh_schema(degree);
    let text = match format {
        Format::Json => json_text(&schema.to_json()),
        Format::Text => {
            let mut s = String::new();
            for (n, terms) in schema.iter() {
                s.push_str(&format!("degree {n} ({} terms)\n", terms.len()));
                let rows: Vec<Vec<String>> =
                    terms.iter().map(|t| vec![t.coeff.to_string(), t.pattern.clone()]).collect();
                s.push_str(&table(&["coeff", "pattern"], &rows));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn header(cfg: &RunConfig) -> String {
    format!("algebra {}, order {}, support A={:?} B={:?}\n", cfg.algebra, cfg.order, cfg.support.a, cfg.support.b)
}

fn factor_inputs<S: Scalar>(
    cfg: &RunConfig,
    gp: LieSeries<S>,
    gm: LieSeries<S>,
) -> Result<(LieSeries<S>, LieSeries<S>)> {
    match &cfg.inputs {
        Some(i) => Ok((LieSeries::from_json(gp.algebra(), &i.left)?, LieSeries::from_json(gp.algebra(), &i.right)?)),
        None => Ok((gm, gp)),
    }
}

fn render_factorization<S: Scalar>(cfg: &RunConfig, f: &Factorization<S>) -> String {
    match cfg.format {
        Format::Json => json_text(&json!({
            "config": cfg.to_json(),
            "result": {
                "left": f.left.to_json(),
                "right": f.right.to_json(),
                "sweeps": f.sweeps,
                "corrections": f.corrections,
            },
        })),
        Format::Text => format!(
            "{}\n{}\n{}\nsweeps {}, corrections {}\n",
            header(cfg),
            series_block("left", &f.left),
            series_block("right", &f.right),
            f.sweeps,
            f.corrections
        ),
    }
}

fn cmd_factor(cfg: &RunConfig, uniformize: bool) -> Result<Outcome> {
    let split = cfg.split_spec()?;
    let n = cfg.order;
    with_built!(cfg.build()?, |alg, gp, gm| {
        let _ = alg;
        let (left, right) = factor_inputs(cfg, gp, gm)?;
        let f = if uniformize {
            uniformize_with(&right, &left, split, n, Schedule::TotalOrder)?
        } else {
            factorize_with(&left, &right, split, n, Schedule::TotalOrder)?
        };
        Ok(Outcome::ok(render_factorization(cfg, &f)))
    })
}

fn render_triple<S: Scalar>(cfg: &RunConfig, t: &TripleResult<S>) -> String {
    match cfg.format {
        Format::Json => json_text(&json!({ "config": cfg.to_json(), "result": t.to_json() })),
        Format::Text => format!(
            "{}\n{}\n{}\n{}\n{}\nsweeps {}, corrections {}\n",
            header(cfg),
            series_block("psi_minus", &t.psi_minus),
            series_block("psi_plus", &t.psi_plus),
            series_block("psi_zero", &t.psi_zero_noncentral()),
            series_block("gamma", &t.gamma()),
            t.diagnostics.sweeps,
            t.diagnostics.corrections
        ),
    }
}

fn cmd_triple(cfg: &RunConfig) -> Result<Outcome> {
    with_built!(cfg.build()?, |alg, gp, gm| {
        let _ = alg;
        let t = triple_factorize(&gp, &gm, cfg.order)?;
        Ok(Outcome::ok(render_triple(cfg, &t)))
    })
}

fn render_report(format: Format, r: &VerificationReport) -> String {
    match format {
        Format::Json => json_text(&r.to_json()),
        Format::Text => {
            let mut s = if r.ok {
                format!("ok: both products agree through order {}\n", r.order)
            } else {
                format!("MISMATCH: {} coefficients differ through order {}\n", r.stats.mismatch_count, r.order)
            };
            s.push_str(&format!(
                "lhs terms {}, rhs terms {}, normal forms {}\n",
                r.stats.lhs_terms, r.stats.rhs_terms, r.stats.normal_forms
            ));
            if !r.ok {
                let rows: Vec<Vec<String>> = r
                    .mismatches
                    .iter()
                    .map(|m| {
                        let plain = |v: &Value| v.as_str().map_or_else(|| v.to_string(), str::to_string);
                        vec![m.word.join(" "), m.monomial.to_string(), plain(&m.lhs), plain(&m.rhs)]
                    })
                    .collect();
                s.push_str(&table(&["word", "monomial", "lhs", "rhs"], &rows));
            }
            s
        }
    }
}

fn cmd_verify(common: &Common, result: Option<&Path>) -> Result<Outcome> {
    let (cfg, stored, n) = match result {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("cannot read result file {}: {e}", p.display())))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Error::Config(format!("result file {}: {e}", p.display())))?;
            let mut cfg = RunConfig::from_json(v.get("config").unwrap_or(&Value::Null))?;
            cfg.format = parse_format(common.format.as_deref())?;
            let stored = v.get("result").cloned().ok_or_else(|| Error::Config("result file has no `result`".into()))?;
            let n = common.order.unwrap_or(cfg.order);
            (cfg, Some(stored), n)
        }
        None => {
            let cfg = common.resolve()?;
            let n = cfg.order;
            (cfg, None, n)
        }
    };
    with_built!(cfg.build()?, |alg, gp, gm| {
        let t = match &stored {
            Some(v) => TripleResult::from_json(&alg, v).map_err(|e| Error::Config(format!("result file: {e}")))?,
            None => triple_factorize(&gp, &gm, cfg.order)?,
        };
        if n > t.order() {
            return Err(Error::Usage(format!(
                "cannot verify to order {n}: the result was computed to order {}",
                t.order()
            )));
        }
        let r = verify_triple(&gp, &gm, &t.psi_minus, &t.psi_plus, &t.psi_zero, n)?;
        let code = if r.ok { EXIT_OK } else { EXIT_MISMATCH };
        Ok(Outcome { code, text: render_report(cfg.format, &r) })
    })
}

fn cmd_validate(common: &Common, window: u32) -> Result<Outcome> {
    let mut o = common.overrides();
    o.order.get_or_insert(1);
    let cfg = RunConfig::resolve(common.config.as_deref(), &o)?;
    let alg = cfg.algebra()?;
    let report = validate_plugin(&alg, 2 * window as i32);
    let code = if report.ok() { EXIT_OK } else { EXIT_MISMATCH };
    let text = match cfg.format {
        Format::Json => json_text(&serde_json::to_value(&report)?),
        Format::Text => {
            let mut s = format!(
                "{}: {} on |degree| <= {} ({} basis elements, {} pairs, {} triples)\n",
                report.algebra,
                if report.ok() { "ok" } else { "VIOLATIONS" },
                window,
                report.basis_size,
                report.pairs_checked,
                report.triples_checked
            );
            let rows: Vec<Vec<String>> = report
                .violations
                .iter()
                .map(|v| vec![v.axiom.clone(), v.witness.join(", "), v.detail.clone()])
                .collect();
            if !rows.is_empty() {
                s.push_str(&table(&["axiom", "witness", "detail"], &rows));
            }
            s
        }
    };
    Ok(Outcome { code, text })
}
