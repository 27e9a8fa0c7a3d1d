use std::path::Path;
use std::process::Command;

fn run(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_griess-forge")).args(args).arg("--out").arg(dir).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn tmp(name: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("griess-forge-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn commutant_2a_report() {
    let d = tmp("c2a");
    let (code, out) = run(&d, &["commutant", "2A", "--md"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("X·X = 80ω¹+96ω²: pass"), "{out}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("commutant_2A.json")).unwrap()).unwrap();
    assert_eq!(json["schema"], 1);
    assert!(d.join("commutant_2A.md").exists());
}

#[test]
fn fusion_vacuum() {
    let d = tmp("fusion");
    let (code, out) = run(&d, &["fusion", "4", "5", "1", "5", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("= L(6/7,0): pass"), "{out}");
}

#[test]
fn exit_codes() {
    let d = tmp("codes");
    assert_eq!(run(&d, &["fusion", "4", "9", "1", "1", "1"]).0, 2);
    assert_eq!(run(&d, &["commutant", "4A"]).0, 2);
    assert_eq!(run(&d, &["involutions", "7B"]).0, 2);
    assert_eq!(run(&d, &["lattice", "no-such-lattice"]).0, 2);
    assert_eq!(run(&d, &["involutions", "3A"]).0, 0);
    // The 2A order check fails: sigma_v is the identity at weight two.
    assert_eq!(run(&d, &["involutions", "2A"]).0, 1);
}

#[test]
fn lattice_and_appendix() {
    let d = tmp("lat");
    let (code, out) = run(&d, &["lattice", "sqrt2E6", "--short-vectors", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("vectors of norm 4: pass"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("lattice.json")).unwrap()).unwrap();
    let sv = json["reports"][0]["checks"].as_array().unwrap().iter().find(|c| c["id"] == "lattice.short_vectors").unwrap().clone();
    assert_eq!(sv["computed"], "72");
    assert_eq!(run(&d, &["appendix", "--verify"]).0, 0);
}

#[test]
fn report_all_is_deterministic() {
    let strip = |d: &Path| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("report-all.json")).unwrap()).unwrap();
        for r in v["reports"].as_array_mut().unwrap() {
            r["elapsed"] = serde_json::Value::Null;
        }
        v
    };
    let (a, b) = (tmp("ra1"), tmp("ra2"));
    let (c1, _) = run(&a, &["report-all", "--skip-slow"]);
    let (c2, _) = run(&b, &["report-all", "--skip-slow"]);
    assert_eq!(c1, 1);
    assert_eq!(c1, c2);
    assert_eq!(strip(&a), strip(&b));
}
