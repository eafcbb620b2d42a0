//! Layered ant-colony construction of seed graphs.
//!
//! `cargo run --example layered_aco`

use congraph::rng::stream;
use congraph::{run_aco, AcoParams, Constraints};

fn main() -> congraph::Result<()> {
    let c = Constraints {
        n: 40,
        m: 156,
        cc_min: 0.35,
        cc_max: 0.45,
        diam_min: 5,
        diam_max: 5,
    };
    let run = run_aco(&c, &AcoParams::default(), 10, &mut stream(42, 0))?;
    println!("layer sizes {:?}", run.layers.layer_sizes);
    println!(
        "{} valid graphs after {} iterations ({} dropped by the exact diameter check)",
        run.solutions.len(),
        run.iterations_run,
        run.exact_rejections
    );
    for s in &run.solutions {
        let intra = s
            .graph
            .edges()
            .iter()
            .filter(|&&(a, b)| run.layers.layer_of[a] == run.layers.layer_of[b])
            .count();
        println!(
            "  cc {:.4}  diameter {:?}  reward {:>8.1}  intra-layer edges {intra}",
            s.cc, s.exact_diameter, s.reward
        );
    }
    Ok(())
}
