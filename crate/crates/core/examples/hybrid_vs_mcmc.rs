//! Drift from the seed: one long chain against several short chains from
//! distinct ant-colony seeds.
//!
//! `cargo run --example hybrid_vs_mcmc`

use congraph::harness::{run_method_comparison, ExperimentConfig};

fn main() -> congraph::Result<()> {
    for (m, diam, cc) in [(78, 12, 0.35), (195, 4, 0.4)] {
        let cfg = ExperimentConfig {
            density: None,
            m: Some(m),
            diam_targets: vec![diam],
            cc_targets: vec![cc],
            ..ExperimentConfig::default()
        };
        let r = run_method_comparison(&cfg)?;
        println!("n=40 m={m} diam={diam} cc={cc}");
        println!(
            "  mcmc:   drift {:.4} +/- {:.4}, diversity {:.4}",
            r.mcmc_summary.mean,
            r.mcmc_summary.variance.sqrt(),
            r.mcmc_diversity
        );
        println!(
            "  hybrid: drift {:.4} +/- {:.4}, diversity {:.4} ({} seeds)",
            r.hybrid_summary.mean,
            r.hybrid_summary.variance.sqrt(),
            r.hybrid_diversity,
            r.seeds_used
        );
    }
    Ok(())
}
