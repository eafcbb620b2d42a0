mod common;

use congraph::aco::AcoParams;
use congraph::harness::{self, ExperimentConfig, McmcConfig, Method};

use common::*;

fn small_cfg() -> ExperimentConfig {
    ExperimentConfig {
        n: 16,
        density: None,
        m: Some(30),
        diam_targets: vec![3, 4],
        cc_targets: vec![0.1, 0.25, 0.4],
        cc_half_width: 0.02,
        trials: 12,
        aco: AcoParams { ants: 8, iterations: 12, ..AcoParams::default() },
        mcmc: McmcConfig { burn_in: Some(20), thinning: Some(5) },
        ensemble_size: 6,
        seed_count: 2,
        seed: 5,
        ..ExperimentConfig::default()
    }
}

#[test]
fn symmetric_cc_widening_never_lowers_success() {
    let narrow = small_cfg();
    let wide = ExperimentConfig { cc_half_width: 0.08, ..small_cfg() };
    let a = harness::run_success_grid(&narrow, None).unwrap();
    let b = harness::run_success_grid(&wide, None).unwrap();
    assert_eq!(a.len(), 6);
    let mut strictly = 0;
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((x.diam, x.cc), (y.diam, y.cc));
        assert!(y.successes >= x.successes, "cell ({}, {}): {} -> {}", x.diam, x.cc, x.successes, y.successes);
        strictly += usize::from(y.successes > x.successes);
    }
    assert!(strictly > 0, "widening should help at least one cell");
}

#[test]
fn grid_cells_are_consistent() {
    let cells = harness::run_success_grid(&small_cfg(), None).unwrap();
    for c in &cells {
        assert_eq!(c.trials, 12);
        assert_eq!(c.success_ratio, c.successes as f64 / 12.0);
        assert_eq!(c.diversity.is_some(), c.successes >= 2);
        assert!((c.density - 30.0 / 120.0).abs() < 1e-15);
    }
    let sorted = cells.windows(2).all(|w| (w[0].diam, w[0].cc) < (w[1].diam, w[1].cc));
    assert!(sorted);
}

#[test]
fn generated_ensemble_passes_independent_verification() {
    let cfg = ExperimentConfig { diam_targets: vec![4], cc_targets: vec![0.25], cc_half_width: 0.15, ..small_cfg() };
    let c = cfg.primary_constraints();
    let ens = harness::generate(&cfg).unwrap();
    assert_eq!(ens.records.len(), 6);
    for (rec, g) in ens.records.iter().zip(&ens.graphs) {
        assert_eq!(rec.method, Method::Hybrid);
        assert_eq!((g.n(), g.m()), (16, 30));
        let cc = brute_cc(g);
        assert!(c.cc_ok(cc) && (cc - rec.cc).abs() <= 1e-12);
        let d = fw_diameter(g).unwrap();
        assert!(d >= c.diam_min && d <= c.diam_max);
        assert_eq!(rec.exact_diameter, Some(d));
    }
    let per_seed: Vec<usize> = (0..2).map(|s| ens.records.iter().filter(|r| r.seed_id == s).count()).collect();
    assert_eq!(per_seed, vec![3, 3]);

    let dir = tempfile::tempdir().unwrap();
    harness::write_ensemble(dir.path(), &ens).unwrap();
    let manifest = dir.path().join("manifest.jsonl");
    assert_eq!(harness::read_constraints(&manifest).unwrap(), c);
    let report = harness::verify_manifest(&manifest, &c).unwrap();
    assert!(report.ok(), "{:?}", report.failures);
    assert_eq!(report.checked, 6);
    let div = harness::export_spectra(&manifest, dir.path()).unwrap().unwrap();
    assert!(div > 0.0);
    let csv = std::fs::read_to_string(dir.path().join("distances.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], harness::DISTANCES_CSV_HEADER);
    assert_eq!(lines.len(), 2 + 6);
}

#[test]
fn comparison_outputs_share_a_schema() {
    let cfg = ExperimentConfig { diam_targets: vec![4], cc_targets: vec![0.25], cc_half_width: 0.15, ..small_cfg() };
    let cmp = harness::run_method_comparison(&cfg).unwrap();
    assert_eq!(cmp.mcmc.len(), 6);
    assert_eq!(cmp.hybrid.len(), 6);
    assert!(cmp.mcmc.iter().all(|s| s.step > 0 && s.seed_id == 0 && s.drift >= 0.0));
    let dir = tempfile::tempdir().unwrap();
    harness::write_comparison(dir.path(), &cmp).unwrap();
    let head = |f: &str| -> Vec<String> {
        std::fs::read_to_string(dir.path().join(f)).unwrap().lines().take(2).map(String::from).collect()
    };
    assert_eq!(head("drift_mcmc.csv"), head("drift_hybrid.csv"));
    assert_eq!(head("drift_mcmc.csv")[0], harness::DRIFT_CSV_HEADER);
    assert_eq!(head("drift_mcmc.csv")[1], "sample,seed_id,step,drift");
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("compare_summary.json")).unwrap()).unwrap();
    assert!(summary["mcmc"]["summary"]["mean"].is_number());
    assert!(summary["hybrid"]["diversity"].is_number());
}
