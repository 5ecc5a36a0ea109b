use std::process::{Command, Output};

fn matcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matcat"))
        .args(args)
        .env_remove("MATCAT_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn base_suite_passes() {
    let o = matcat(&["check", "--target", "base", "--format", "text"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(String::from_utf8_lossy(&o.stdout).contains("0 failed"));
}

#[test]
fn bialgebra_passes_at_q1() {
    let o = matcat(&["check", "--target", "bialgebra", "--q", "1", "--probes", "5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn zero_q_is_a_usage_error() {
    let o = matcat(&["check", "--target", "base", "--q", "0"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert_eq!(code(&matcat(&["check", "--probes", "0"])), 2);
    assert_eq!(code(&matcat(&["check", "--target", "nothing"])), 2);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["check", "--target", "matcat", "--seed", "7", "--probes", "5"];
    let (a, b) = (matcat(&args), matcat(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = matcat(&["check", "--target", "coherence", "--probes", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["q"], "2");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(!c["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |env: Option<&str>, seed: &str| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_matcat"));
        cmd.args(["check", "--target", "base", "--probes", "2", "--seed", seed]);
        match env {
            Some(s) => cmd.env("MATCAT_SEED", s),
            None => cmd.env_remove("MATCAT_SEED"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(run(Some("3"), "9").stdout, run(None, "3").stdout);
    assert_eq!(code(&run(Some("three"), "0")), 2);
}

#[test]
fn anchors_resolve_to_the_catalog() {
    let catalog = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/anchors.md")).unwrap();
    for instance in ["graded", "symmetric"] {
        let o = matcat(&["check", "--probes", "1", "--instance", instance, "--q", "1"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for c in v["checks"].as_array().unwrap() {
            let anchor = c["anchor"].as_str().unwrap();
            assert!(catalog.contains(&format!("### {anchor}\n")), "{anchor} missing from docs/anchors.md");
        }
    }
}

#[test]
fn eval_rows() {
    let o = matcat(&["eval", "--expr", "eta", "--row", "*"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["entries"][0]["column"], "4");
    let o = matcat(&["eval", "--expr", "epsilon∘eta", "--row", "*", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("column 0"));
    assert_eq!(code(&matcat(&["eval", "--expr", "mu", "--row", "5"])), 2);
    assert_eq!(code(&matcat(&["eval", "--expr", "mu ∘ mu", "--row", "*"])), 2);
}
