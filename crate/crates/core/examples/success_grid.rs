//! Success ratio and diversity over a small (diameter, clustering) grid.
//!
//! `cargo run --example success_grid`

use congraph::harness::{run_success_grid, ExperimentConfig};

fn main() -> congraph::Result<()> {
    let cfg = ExperimentConfig {
        diam_targets: vec![3, 4, 6],
        cc_targets: vec![0.2, 0.4, 0.6],
        trials: 20,
        ..ExperimentConfig::default()
    };
    let cells = run_success_grid(&cfg, None)?;
    println!("n = {}, m = {}, {} trials per cell", cfg.n, cfg.edge_count(), cfg.trials);
    print!("diam \\ cc");
    for cc in &cfg.cc_targets {
        print!("{cc:>8.2}");
    }
    println!();
    for row in cells.chunks(cfg.cc_targets.len()) {
        print!("{:>9}", row[0].diam);
        for c in row {
            print!("{:>8.2}", c.success_ratio);
        }
        println!();
    }
    Ok(())
}
