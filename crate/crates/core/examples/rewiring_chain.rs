//! Constraint-preserving rewiring from an ant-colony seed.
//!
//! `cargo run --example rewiring_chain`

use congraph::rng::{stream, ACO_STREAMS, CHAIN_STREAMS};
use congraph::{exact_diameter, run_aco, run_chain, AcoParams, ChainOptions, Constraints};

fn main() -> congraph::Result<()> {
    let c = Constraints {
        n: 40,
        m: 156,
        cc_min: 0.3,
        cc_max: 0.4,
        diam_min: 4,
        diam_max: 6,
    };
    let seeds = run_aco(&c, &AcoParams::default(), 1, &mut stream(0, ACO_STREAMS))?;
    let seed = seeds.solutions[0].graph.clone();
    println!("seed: cc {:.3}, diameter {:?}", seeds.solutions[0].cc, seeds.solutions[0].exact_diameter);

    let mut opts = ChainOptions::with_defaults(c.m, 20_000);
    opts.audit_exact_diameter = true;
    let run = run_chain(seed, &c, &opts, &mut stream(0, CHAIN_STREAMS))?;
    println!(
        "{} samples; accepted {}, rejected on cc {}, rejected on diameter {}",
        run.samples.len(),
        run.accepted,
        run.rejected_cc,
        run.rejected_diam
    );
    println!("exact-diameter audit failures: {}", run.exact_violations);
    for s in run.samples.iter().step_by(25) {
        println!(
            "  step {:>6}: cc {:.4}, D^ {:?}, exact {:?}",
            s.step,
            s.cc,
            s.d_hat,
            exact_diameter(&s.graph).exact
        );
    }
    Ok(())
}
