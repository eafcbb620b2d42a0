use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SMALL_CONFIG: &str = r#"{
  "n": 16,
  "m": 30,
  "diam_targets": [4],
  "cc_targets": [0.25],
  "cc_half_width": 0.15,
  "trials": 6,
  "ensemble_size": 6,
  "seed_count": 2,
  "aco": { "ants": 10, "iterations": 20 },
  "mcmc": { "burn_in": 20, "thinning": 5 },
  "seed": 3
}"#;

fn congraph(dir: &Path, args: &[&str]) -> Output {
    let cfg = dir.join("config.json");
    if !cfg.exists() {
        fs::write(&cfg, SMALL_CONFIG).unwrap();
    }
    Command::new(env!("CARGO_BIN_EXE_congraph"))
        .args(args)
        .arg("--config")
        .arg(&cfg)
        .arg("--out")
        .arg(dir.join("out"))
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn generate(dir: &Path) {
    let o = congraph(dir, &["generate"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_accepts_a_fresh_manifest() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path());
    let o = congraph(dir.path(), &["verify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    // without --config the constraints are read from next to the manifest
    let manifest = dir.path().join("out/manifest.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_congraph"))
        .arg("verify")
        .arg(&manifest)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_flags_a_corrupted_record() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path());
    let manifest = dir.path().join("out/manifest.jsonl");
    let text = fs::read_to_string(&manifest).unwrap();
    let lines: Vec<String> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            if i == 3 {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v["cc"] = serde_json::json!(0.99);
                v.to_string()
            } else {
                l.to_string()
            }
        })
        .collect();
    fs::write(&manifest, lines.join("\n") + "\n").unwrap();
    let o = congraph(dir.path(), &["verify"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("record 3:"), "{err}");
    assert!(!err.contains("record 2:"), "{err}");
}

#[test]
fn verify_flags_a_corrupted_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path());
    let file = dir.path().join("out/graphs/00001.edges");
    let text = fs::read_to_string(&file).unwrap();
    // drop the last edge: the edge count no longer matches
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    fs::write(&file, lines.join("\n") + "\n").unwrap();
    let o = congraph(dir.path(), &["verify"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("record 1:"));
}

#[test]
fn config_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("config.json"), r#"{"n": 16, "m": 30, "density": 0.2}"#).unwrap();
    assert_eq!(code(&congraph(dir.path(), &["generate"])), 1);
    fs::write(dir.path().join("config.json"), r#"{"n": 16, "m": 30, "bogus": 1}"#).unwrap();
    assert_eq!(code(&congraph(dir.path(), &["grid"])), 1);
    fs::write(dir.path().join("config.json"), r#"{"n": 16, "m": 30, "cc_targets": []}"#).unwrap();
    assert_eq!(code(&congraph(dir.path(), &["compare"])), 1);
}

#[test]
fn grid_resumes_from_finished_cells() {
    let dir = tempfile::tempdir().unwrap();
    let o = congraph(dir.path(), &["grid"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cell = dir.path().join("out/cells/d4_cc0.2500.json");
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cell).unwrap()).unwrap();
    // a sentinel the real computation can never produce
    v["diversity"] = serde_json::json!(123.5);
    fs::write(&cell, v.to_string()).unwrap();
    assert_eq!(code(&congraph(dir.path(), &["grid"])), 0);
    let csv = fs::read_to_string(dir.path().join("out/grid.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "# congraph grid v1");
    assert_eq!(lines[1], "diam,cc,density,success_ratio,diversity,trials,reason");
    assert!(lines[2].contains(",123.5,"), "{csv}");
}

#[test]
fn compare_writes_matching_drift_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = congraph(dir.path(), &["compare"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let read = |f: &str| fs::read_to_string(dir.path().join("out").join(f)).unwrap();
    let (a, b) = (read("drift_mcmc.csv"), read("drift_hybrid.csv"));
    assert_eq!(a.lines().take(2).collect::<Vec<_>>(), b.lines().take(2).collect::<Vec<_>>());
    assert_eq!(a.lines().count(), b.lines().count());
    for line in a.lines().skip(2).chain(b.lines().skip(2)) {
        assert_eq!(line.split(',').count(), 4);
    }
}

#[test]
fn spectra_writes_a_square_distance_table() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path());
    let o = congraph(dir.path(), &["spectra"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(dir.path().join("out/distances.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r.len() == 7));
}

#[test]
fn generate_output_is_thread_count_independent() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, sub: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_congraph"))
            .args(["generate", "--threads", threads, "--seed", "21", "--exact-diameter", "--config"])
            .arg(dir.path().join("config.json"))
            .arg("--out")
            .arg(dir.path().join(sub))
            .output()
            .unwrap();
        assert_eq!(code(&o), 0);
        assert!(String::from_utf8_lossy(&o.stdout).contains("exact-diameter audit"));
        fs::read(dir.path().join(sub).join("manifest.jsonl")).unwrap()
    };
    fs::write(dir.path().join("config.json"), SMALL_CONFIG).unwrap();
    assert_eq!(run("1", "a"), run("3", "b"));
}
