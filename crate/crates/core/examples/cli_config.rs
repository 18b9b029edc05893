//! Drives the command-line interface in-process from a JSON run configuration,
//! the same way the `expfactor` binary does.

use std::io::Write;

fn main() {
    let dir = std::env::temp_dir().join("expfactor-cli-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let config = dir.join("run.json");
    let result = dir.join("triple.json");
    std::fs::File::create(&config)
        .and_then(|mut f| {
            f.write_all(br#"{"algebra": "virasoro", "order": 3, "support": {"A": [1, 2], "B": [-1, -2]}}"#)
        })
        .expect("write config");

    let run = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = expfactor::cli::run(std::iter::once("expfactor").chain(args.iter().copied()), &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("[exit {code}]\n");
    };
    let (c, r) = (config.to_str().unwrap(), result.to_str().unwrap());
    run(&["triple", "--config", c, "--order", "2"]);
    run(&["triple", "--config", c, "--format", "json", "--out", r]);
    run(&["verify", "--result", r]);
    run(&["verify", "--result", r, "--order", "4"]);
}
