use std::io::Write;

use promislow::cli::{run, CliOutput};
use tempfile::NamedTempFile;

fn cli(args: &[&str]) -> CliOutput {
    run(std::iter::once("promislow").chain(args.iter().copied()))
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn json(out: &CliOutput) -> serde_json::Value {
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["counterexample"], 0),
        (&["verify", "1+x"], 1),
        (&["verify", "a*b"], 0),
        (&["verify", "1 + x + y"], 1),
        (&["verify", "0"], 2),
        (&["verify", "1 + "], 2),
        (&["verify", "v"], 2),
        (&["--modulus", "3", "verify", "2*a"], 0),
        (&["--modulus", "6", "verify", "1"], 2),
        (&["family", "--k", "3", "--project"], 0),
        (&["family"], 2),
        (&["project", "1 + a + b"], 0),
        (&["length", "1 + a"], 0),
        (&["length", "0"], 2),
        (&["search", "--spec", "/nonexistent/spec"], 2),
        (
            &[
                "unique-products",
                "--A",
                "/nonexistent",
                "--B",
                "/nonexistent",
            ],
            2,
        ),
        (&["nonsense"], 2),
        (&[], 2),
        (&["--version"], 0),
    ];
    for (args, code) in cases {
        let out = cli(args);
        assert_eq!(out.code, *code, "{args:?}: {out:?}");
        if *code == 2 {
            assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
        }
    }
}

#[test]
fn counterexample_report() {
    let out = cli(&["counterexample", "--json"]);
    let v = json(&out);
    assert_eq!(v["support_size"], 21);
    assert_eq!(v["inverse_support_size"], 21);
    assert_eq!(v["is_unit"], true);
    let verified = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "verified")
        .unwrap();
    assert_eq!(verified["passed"], true);
    assert_eq!(verified["detail"], "both sides");
    assert!(cli(&["counterexample"])
        .stdout
        .contains("verified: both sides"));
}

#[test]
fn verify_prints_an_inverse() {
    let text = promislow::selftest::COUNTEREXAMPLE_TEXT;
    let v = json(&cli(&["verify", "--json", text]));
    assert_eq!(v["is_unit"], true);
    assert_eq!(v["values"]["trivial"], false);
    assert_eq!(v["inverse_support_size"], 21);
    let inv = v["inverse"].as_str().unwrap();
    let back = cli(&["verify", "--json", inv]);
    assert_eq!(back.code, 0);
    assert_eq!(json(&back)["inverse"], v["element"]);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["counterexample", "--json"][..],
        &["family", "--k", "2", "--project"],
        &["selftest", "--json"],
    ] {
        assert_eq!(cli(args), cli(args));
    }
}

#[test]
fn projection_and_length() {
    let out = cli(&["project", "--json", "1 + a + x*b"]);
    assert_eq!(json(&out)["values"]["image"], "1 + t + (t^2)*b");
    let alpha_conj = format!("a^-1*({})*a", promislow::selftest::COUNTEREXAMPLE_TEXT);
    let out = cli(&["length", "--json", &alpha_conj]);
    assert_eq!(json(&out)["values"]["length"], 4);
}

#[test]
fn family_projection_check() {
    let out = cli(&["family", "--k", "3", "--project"]);
    assert!(out
        .stdout
        .contains("[ok] image of a^-1*alpha*b equals e(14,0)"));
    assert!(out
        .stdout
        .contains("image: t^-14 + 1 + t^14 + (t^-14 + t^14)*b"));
}

#[test]
fn unique_products_from_files() {
    let a = file("# A\n1\na\n\n");
    let b = file("x^0*y^0*z^0*1   # identity\nx^0*y^0*z^0*a\n");
    let out = cli(&[
        "unique-products",
        "--json",
        "--A",
        a.path().to_str().unwrap(),
        "--B",
        b.path().to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{out:?}");
    let v = json(&out);
    assert_eq!(v["values"]["products"], 4);
    assert_eq!(v["values"]["unique"], 2);
    assert_eq!(
        v["values"]["unique element"],
        serde_json::json!(["x^0*y^0*z^0*1", "x^1*y^0*z^0*1"])
    );

    let bad = file("1 + a\n");
    let out = cli(&[
        "unique-products",
        "--A",
        bad.path().to_str().unwrap(),
        "--B",
        b.path().to_str().unwrap(),
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains(":1:"));
}

#[test]
fn search_is_invariant_under_worker_count() {
    let spec = file("mode = enumerate-supports\nmax_support = 2\nbox = 1\nmodulus = 2\n");
    let path = spec.path().to_str().unwrap();
    let one = cli(&["search", "--json", "--spec", path, "--workers", "1"]);
    let four = cli(&["search", "--json", "--spec", path, "--workers", "4"]);
    assert_eq!(one.code, 0, "{one:?}");
    assert_eq!(one, four);
    assert_eq!(json(&one)["values"]["candidates"], "108");
    assert_eq!(json(&one)["values"]["non-trivial units"], 0);
}

#[test]
fn search_recovers_the_unit_on_its_support() {
    let alpha = promislow::units::counterexample().alpha().clone();
    let mut text = String::from("mode = coefficients-on-fixed-support\nweight = 21\n");
    for g in alpha.support() {
        text.push_str(&format!("support = {g}\n"));
    }
    let spec = file(&text);
    let out = cli(&["search", "--json", "--spec", spec.path().to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(v["values"]["non-trivial units"], 1);
    assert_eq!(
        v["values"]["unit"][0],
        promislow::parse::format_ring_element(&alpha)
    );
}

#[test]
fn search_budget_is_an_input_error() {
    let spec = file("max_support = 5\nbox = 2\nbudget = 1000\n");
    let out = cli(&["search", "--spec", spec.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("budget is 1000"));
}

#[test]
fn selftest_passes() {
    let out = cli(&["selftest"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(
        out.stdout.lines().filter(|l| l.starts_with("[ok]")).count(),
        14
    );
}
