use std::path::Path;

use expfactor::algebras::{NeveuSchwarz, Support, Virasoro};
use expfactor::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use expfactor::exactnum::{GrassmannScalar, Rational};
use expfactor::factor::{triple_factorize, TripleResult};
use expfactor::liecore::{Monomial, Truncation, VarLabel};
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("expfactor").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(r: &Run) -> Value {
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    serde_json::from_str(&r.out).unwrap()
}

fn find_term<'a>(series: &'a Value, basis: &str, monomial: &Value) -> Option<&'a Value> {
    series["terms"].as_array()?.iter().find(|t| t["basis"] == basis && &t["monomial"] == monomial).map(|t| &t["coeff"])
}

#[test]
fn schema_degree_two_is_half_bracket() {
    let v = json(&cli(&["schema", "--degree", "2", "--format", "json"]));
    let deg2 = &v["degrees"][1]["terms"];
    assert!(deg2.as_array().unwrap().contains(&serde_json::json!({"pattern": "ab", "coeff": "1/4"})));
    assert!(deg2.as_array().unwrap().contains(&serde_json::json!({"pattern": "ba", "coeff": "-1/4"})));

    let v = json(&cli(&["schema", "--degree", "1", "--format", "json"]));
    assert_eq!(v["degrees"].as_array().unwrap().len(), 1);
    assert_eq!(v["degrees"][0]["terms"].as_array().unwrap().len(), 2);

    assert_eq!(cli(&["schema", "--degree", "0"]).code, EXIT_USAGE);
    assert_eq!(cli(&["schema"]).code, EXIT_USAGE);
    let text = cli(&["schema", "--degree", "3"]);
    let rows: Vec<Vec<&str>> = text.out.lines().map(|l| l.split_whitespace().collect()).collect();
    assert!(rows.contains(&vec!["1/4", "ab"]) && rows.contains(&vec!["-1/4", "ba"]), "{}", text.out);
    assert!(text.out.contains("degree 3 (4 terms)"));
}

#[test]
fn virasoro_triple_reports_gamma() {
    let args = ["triple", "--algebra", "virasoro", "--support", "A=1,2", "B=-1,-2", "--order", "2"];
    let text = cli(&args);
    assert_eq!(text.code, EXIT_OK, "{}", text.err);
    let gamma = text.out.split("gamma").nth(1).unwrap();
    assert!(gamma.contains("A_2 B_-2") && gamma.contains("1/2"), "{}", text.out);

    let v = json(&cli(&[&args[..], &["--format", "json"]].concat()));
    let m = serde_json::json!({"A_2": 1, "B_-2": 1});
    assert_eq!(find_term(&v["result"]["psi_zero"], "c", &m), Some(&Value::from("1/2")));
    assert_eq!(find_term(&v["result"]["psi_zero"], "L_0", &m), Some(&Value::from("4")));
}

#[test]
fn neveu_schwarz_triple_has_grassmann_sign() {
    let v = json(&cli(&["triple", "--algebra", "ns1", "--support", "A=1", "B=-1", "--order", "2", "--format", "json"]));
    let ns = NeveuSchwarz::algebra();
    let t: TripleResult<GrassmannScalar> = TripleResult::from_json(&ns, &v["result"]).unwrap();
    let m = Monomial::from_labels([VarLabel::a(1), VarLabel::b(-1)]);
    let expected = GrassmannScalar::product_of(&[1, -1]).scale(&Rational::from_integer(-2));
    assert_eq!(t.psi_zero.coeff(NeveuSchwarz::l(0), &m), expected);
}

#[test]
fn empty_support_gives_zero_outputs() {
    let v = json(&cli(&["triple", "--algebra", "affine-sl2", "--order", "3", "--format", "json"]));
    for k in ["psi_minus", "psi_plus", "psi_zero"] {
        assert!(v["result"][k]["terms"].as_array().unwrap().is_empty());
    }
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let args = ["triple", "--algebra", "virasoro", "--support", "A=1,2", "B=-1,-2", "--order", "3", "--format", "json"];
    let (a, b) = (cli(&args), cli(&args));
    assert_eq!(a.out, b.out);

    let vir = Virasoro::algebra();
    let v: Value = serde_json::from_str(&a.out).unwrap();
    let loaded: TripleResult<Rational> = TripleResult::from_json(&vir, &v["result"]).unwrap();
    let (gp, gm) = Virasoro::generators(&vir, &Support::symmetric(2), Truncation::order(3));
    let fresh = triple_factorize(&gp, &gm, 3).unwrap();
    assert_eq!(loaded.psi_minus, fresh.psi_minus);
    assert_eq!(loaded.psi_plus, fresh.psi_plus);
    assert_eq!(loaded.psi_zero, fresh.psi_zero);
    assert_eq!(loaded.diagnostics, fresh.diagnostics);
}

fn write_result(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let r = cli(&[&["triple", "--format", "json", "--out", &p], args].concat());
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.is_empty());
    p
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_result(
        dir.path(),
        "good.json",
        &["--algebra", "ns1", "--support", "A=1,2,3", "B=-1,-2,-3", "--order", "3"],
    );
    let r = cli(&["verify", "--result", &good]);
    assert_eq!(r.code, EXIT_OK, "{}{}", r.out, r.err);
    assert!(r.out.starts_with("ok"));
    assert_eq!(cli(&["verify", "--result", &good, "--order", "2"]).code, EXIT_OK);
    let r = cli(&["verify", "--result", &good, "--order", "4"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("order 4"));

    // Perturb one coefficient of Ψ⁰ by hand.
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let terms = v["result"]["psi_zero"]["terms"].as_array_mut().unwrap();
    let t = terms
        .iter_mut()
        .find(|t| t["basis"] == "L_0" && t["monomial"] == serde_json::json!({"A_1": 1, "B_-1": 1}))
        .unwrap();
    t["coeff"] = Value::from("3");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let r = cli(&["verify", "--result", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.code, EXIT_MISMATCH);
    let report: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report["ok"], false);
    assert_eq!(report["mismatches"][0]["monomial"], serde_json::json!({"A_1": 1, "B_-1": 1}));
    assert_eq!(report["mismatches"][0]["word"], serde_json::json!(["L_0"]));

    let missing = dir.path().join("missing.json");
    assert_eq!(cli(&["verify", "--result", missing.to_str().unwrap()]).code, EXIT_USAGE);
    std::fs::write(dir.path().join("junk.json"), "{").unwrap();
    assert_eq!(cli(&["verify", "--result", dir.path().join("junk.json").to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn verify_recomputes_without_a_result_file() {
    let r = cli(&["verify", "--algebra", "virasoro", "--support", "A=1,2", "B=-1,-2", "--order", "4"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
}

#[test]
fn config_file_with_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{"algebra": "virasoro", "order": 3, "support": {"A": [1, 2], "B": [-1, -2]}, "format": "json"}"#,
    )
    .unwrap();
    let c = cfg.to_str().unwrap();
    let v = json(&cli(&["triple", "--config", c]));
    assert_eq!(v["result"]["diagnostics"]["order"], 3);
    assert_eq!(v["config"]["support"]["A"], serde_json::json!([1, 2]));
    let v = json(&cli(&["triple", "--config", c, "--order", "2", "--support", "A=1", "B=-1"]));
    assert_eq!(v["result"]["diagnostics"]["order"], 2);
    assert_eq!(v["config"]["support"]["B"], serde_json::json!([-1]));
    assert!(cli(&["triple", "--config", c, "--format", "text"]).out.starts_with("algebra virasoro"));

    std::fs::write(&cfg, r#"{"algebra": "virasoro", "order": 2, "colour": "blue"}"#).unwrap();
    assert_eq!(cli(&["triple", "--config", c]).code, EXIT_USAGE);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["triple", "--algebra", "virasoro"][..],
        &["triple", "--algebra", "e8", "--order", "2"],
        &["triple", "--algebra", "virasoro", "--order", "0"],
        &["triple", "--algebra", "virasoro", "--order", "2", "--support", "A=-1"],
        &["triple", "--algebra", "virasoro", "--order", "2", "--support", "C=1"],
        &["triple", "--algebra", "virasoro", "--order", "2", "--format", "xml"],
        &["factor", "--algebra", "virasoro", "--order", "2", "--split", "zero|zero_plus"],
        &["frobnicate"],
    ] {
        let r = cli(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}: {}", r.out);
        assert!(!r.err.is_empty());
    }
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn factor_and_uniformize() {
    let base = ["--algebra", "virasoro", "--support", "A=1,2", "B=-1,-2", "--order", "3", "--format", "json"];
    let v = json(&cli(&[&["factor"][..], &base].concat()));
    assert!(v["result"]["left"]["terms"].as_array().unwrap().iter().filter(|t| t["basis"] == "L_-1").count() > 1);
    let v = json(&cli(&[&["uniformize"][..], &base].concat()));
    // e^{g+} e^{g-} = e^{Ψ-} e^{Ψ0,+}: Ψ0,+ carries 2 A_1 B_-1 L_0.
    assert_eq!(
        find_term(&v["result"]["right"], "L_0", &serde_json::json!({"A_1": 1, "B_-1": 1})),
        Some(&Value::from("2"))
    );

    // explicit inputs from the config
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("f.json");
    std::fs::write(
        &cfg,
        r#"{"algebra": "affine-sl2", "order": 2, "split": "minus|zero_plus",
            "inputs": {
              "left": {"order": 2, "terms": [{"basis": "f@-1", "monomial": {"B_-1": 1}, "coeff": "1"}]},
              "right": {"order": 2, "terms": [{"basis": "e@1", "monomial": {"A_1": 1}, "coeff": "1"}]}
            }}"#,
    )
    .unwrap();
    let r = cli(&["factor", "--config", cfg.to_str().unwrap(), "--format", "json"]);
    let v = json(&r);
    // G+ = H+ + ½[H+, H-] at order two, and [e@1, f@-1] = h@0 + k
    let m = serde_json::json!({"A_1": 1, "B_-1": 1});
    assert_eq!(find_term(&v["result"]["right"], "h@0", &m), Some(&Value::from("1/2")));
    assert_eq!(find_term(&v["result"]["right"], "k", &m), Some(&Value::from("1/2")));
}

#[test]
fn custom_affine_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let cfg = |ef: &str| {
        format!(
            r#"{{"algebra": "affine-custom", "order": 2, "support": {{"A": [1], "B": [-1]}},
                "custom": {{"basis": ["e", "h", "f"],
                  "brackets": [{{"left": "e", "right": "f", "result": {{"h": "{ef}"}}}},
                               {{"left": "h", "right": "e", "result": {{"e": "2"}}}},
                               {{"left": "h", "right": "f", "result": {{"f": "-2"}}}}],
                  "form": [["0", "0", "1"], ["0", "2", "0"], ["1", "0", "0"]]}},
                "affine": {{"plus": {{"e": "1"}}, "minus": {{"f": "1"}}}}}}"#
        )
    };
    std::fs::write(&good, cfg("1")).unwrap();
    let g = good.to_str().unwrap();
    assert_eq!(cli(&["validate-algebra", "--config", g, "--window", "2"]).code, EXIT_OK);
    let v = json(&cli(&["triple", "--config", g, "--format", "json"]));
    assert_eq!(
        find_term(&v["result"]["psi_zero"], "k", &serde_json::json!({"A_1": 1, "B_-1": 1})),
        Some(&Value::from("1"))
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, cfg("2")).unwrap();
    let b = bad.to_str().unwrap();
    let r = cli(&["validate-algebra", "--config", b, "--window", "2"]);
    assert_eq!(r.code, EXIT_MISMATCH);
    assert!(r.out.contains("jacobi"), "{}", r.out);
    let r = cli(&["triple", "--config", b]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("custom structure constants"));
}

#[test]
fn validate_shipped_algebras() {
    for alg in ["virasoro", "ns1", "affine-sl2"] {
        let r = cli(&["validate-algebra", "--algebra", alg]);
        assert_eq!(r.code, EXIT_OK, "{alg}: {}", r.out);
        assert!(r.out.contains(": ok on |degree| <= 6"));
    }
    let v = json(&cli(&["validate-algebra", "--algebra", "ns1", "--window", "2", "--format", "json"]));
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_expfactor");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    let o = status(&["triple", "--algebra", "virasoro", "--support", "A=1", "B=-1", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("L_0"));
    assert_eq!(status(&["schema", "--degree", "99"]).status.code(), Some(2));
}
